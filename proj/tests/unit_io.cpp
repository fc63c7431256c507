// Copyright (c) 2026, The focusseg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "doctest.h"
#include "focusseg/errors.hpp"
#include "focusseg/io.hpp"
#include "focusseg/op_classifier.hpp"
#include "json.hpp"

using namespace focusseg;
using nlohmann::json;

namespace {

template <typename Fn>
std::size_t schema_line(const std::string& text, Fn read) {
  std::istringstream in(text);
  try {
    (void)read(in);
  } catch (const SchemaError& e) {
    return e.line() == 0 ? 999 : e.line();
  }
  return 0;
}

std::size_t transcript_error(const std::string& text) {
  return schema_line(text, [](std::istream& in) { return read_transcript(in); });
}

std::size_t coded_error(const std::string& text) {
  return schema_line(text, [](std::istream& in) { return read_coded(in); });
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("transcript round trip") {
  AnnotatedToken a;
  a.surface = "Now";
  a.speaker = "B";
  a.accent = Accent::Deaccented;
  a.boundary = Boundary::ContinuationRise;
  a.phonation = Phonation::Creaky;
  a.pitch_range = PitchRange::Expanded;
  a.pause_before_s = 0.4;
  a.flags = {TokenFlag::UtteranceInitial, TokenFlag::NonpronominalRepetition};
  a.start_s = 1.25;
  a.end_s = 1.5;
  a.topic = "hall";
  a.prior_function = DiscourseFunction::Closure;
  AnnotatedToken b;
  b.surface = "go";
  const std::vector<AnnotatedToken> ts{a, b};
  std::stringstream buf;
  write_transcript(buf, ts);
  CHECK(read_transcript(buf) == ts);
}

TEST_CASE("transcript schema errors carry the line") {
  CHECK(transcript_error("# header\n{\"schema_version\": 1}\n") == 2);
  CHECK(transcript_error("{\"surface\": \"go\"}\n") == 1);
  CHECK(transcript_error("{\"schema_version\": 2, \"surface\": \"go\"}\n") == 1);
  CHECK(transcript_error("{\"schema_version\": 1, \"surface\": \"go\", \"colour\": 1}\n") == 1);
  CHECK(transcript_error("\n\n{\"schema_version\": 1, \"surface\": \"go\", \"accent\": \"H*\"}\n") == 3);
  CHECK(transcript_error("{\"schema_version\": 1, \"surface\": \"go\", \"flags\": [\"shouted\"]}\n") == 1);
  CHECK(transcript_error("{\"schema_version\": 1, \"surface\": \"go\", \"pause_before_s\": -1}\n") == 1);
  CHECK(transcript_error("{\"schema_version\": 1, \"surface\": \"go\", \"start_s\": 1}\n") == 1);
  CHECK(transcript_error("{\"schema_version\": 1, \"surface\": 3}\n") == 1);
  CHECK(transcript_error("[1, 2]\n") == 1);
  CHECK(transcript_error("{\"schema_version\": 1,\n") == 1);
  CHECK(transcript_error("{\"schema_version\": 1, \"surface\": \"go\"}\n") == 0);
}

TEST_CASE("pauses round trip") {
  const std::vector<PauseRecord> ps{{0.5, 0.42, 0.4, PausePosition::FragmentInitial, false},
                                    {1.7, 0.06, 0.1, std::nullopt, true}};
  std::stringstream buf;
  write_pauses(buf, ps);
  CHECK(read_pauses(buf) == ps);
  std::istringstream bad("{\"schema_version\": 1, \"start_s\": 0, \"raw_duration_s\": -1}\n");
  CHECK_THROWS_AS(read_pauses(bad), SchemaError);
}

TEST_CASE("trace round trip") {
  const std::vector<TraceStep> t{{FocusingOperation::initiate(), 0, "hall"},
                                 {FocusingOperation::replace(2), 3, ""},
                                 {FocusingOperation::return_to(1), 4, ""}};
  std::stringstream buf;
  write_trace(buf, t);
  const std::string text = buf.str();
  CHECK(text.find("\"kind\":\"Replace\"") != std::string::npos);
  CHECK(read_trace(buf) == t);
  std::istringstream bad("{\"schema_version\": 1, \"index\": 0, \"kind\": \"Return\", \"pops\": 0}\n");
  CHECK_THROWS_AS(read_trace(bad), SchemaError);
}

TEST_CASE("coded records round trip") {
  const auto corpus = checks::build_replication_corpus();
  std::stringstream buf;
  write_coded(buf, corpus);
  const auto back = read_coded(buf);
  CHECK(back.records == corpus);
  CHECK(back.excluded_missing_pause == 0);
}

TEST_CASE("missing pauses are excluded unless marked as none") {
  const std::string base = R"("schema_version": 1, "initial_constituent": "unmarked", "operation": "Retain")";
  std::istringstream in("{\"fragment_index\": 0, \"pause_before_s\": null, " + base + "}\n" +
                        "{\"fragment_index\": 1, \"pause_before_s\": null, \"no_pause\": true, " + base + "}\n" +
                        "{\"fragment_index\": 2, " + base + "}\n" +
                        "{\"fragment_index\": 3, \"pause_before_s\": 0.3, " + base + "}\n");
  const auto s = read_coded(in);
  CHECK(s.excluded_missing_pause == 2);
  REQUIRE(s.records.size() == 2);
  CHECK(s.records[0].fragment_index == 1);
  CHECK(s.records[0].pause_before_s == 0.0);
}

TEST_CASE("coded records must be consistent") {
  const std::string head = R"({"schema_version": 1, "fragment_index": 0, "pause_before_s": 0.2, )";
  CHECK(coded_error(head + R"("initial_constituent": "cue_phrase", "operation": "Replace", "pops": 1, "segments_affected": 1})") == 1);
  CHECK(coded_error(head + R"("initial_constituent": "unmarked", "operation": "Retain", "marked": true})") == 1);
  CHECK(coded_error(head + R"("initial_constituent": "pause", "operation": "Retain"})") == 1);
  CHECK(coded_error(head + R"("initial_constituent": "unmarked", "operation": "Jump"})") == 1);
  CHECK(coded_error(head + R"("initial_constituent": "unmarked", "operation": "Retain", "embedding_depth": 0})") == 1);
  CHECK(coded_error(head + R"("initial_constituent": "unmarked", "operation": "Retain", "no_pause": true})") == 1);
  CHECK(coded_error(head + R"("initial_constituent": "filled_pause", "initial_token": "um", "operation": "Initiate", "marked": true, "segments_affected": 1})") == 0);
}

TEST_CASE("tsv mirror") {
  const auto corpus = checks::build_replication_corpus();
  std::ostringstream out;
  write_coded_tsv(out, std::span<const CodedRecord>(corpus).first(3));
  std::istringstream in(out.str());
  std::string header;
  std::getline(in, header);
  CHECK(header ==
        "fragment_index\tpause_before_s\tinitial_constituent\toperation\tembedding_depth\t"
        "segments_affected\tprior_function\tsubsequent_function\tturn_position\tmarked");
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), '\t') == 9);
  }
  CHECK(rows == 3);
}

TEST_CASE("audit lines") {
  AnnotatedToken t;
  t.surface = "So";
  SpeechFragment f;
  f.tokens = {t};
  Classification c;
  c.operation = FocusingOperation::replace(1);
  c.score = 4.0;
  c.alternatives = {{FocusingOperation::replace(1), 4.0}, {FocusingOperation::retain(), 0.0}};
  c.evidence_used = {{EvidenceSource::Current, Feature::CueSoBut, Primitive::Pop, 1.0}};
  c.flags = {"tie_break"};
  c.low_confidence = true;
  const std::vector<Classification> cs{c};
  const std::vector<SpeechFragment> fs{f};
  std::ostringstream out;
  write_audit(out, cs, fs);
  const json j = json::parse(out.str());
  CHECK(j.at("schema_version") == 1);
  CHECK(j.at("operation") == "Replace");
  CHECK(j.at("pops") == 1);
  CHECK(j.at("text") == "So");
  CHECK(j.at("alternatives").size() == 2);
  CHECK(j.at("evidence_used")[0].at("feature") == "cue_so_but");
  CHECK(j.at("evidence_used")[0].at("primitive") == "pop");
  CHECK(j.at("low_confidence") == true);
  CHECK(j.at("flags")[0] == "tie_break");
}

TEST_CASE("file helpers report unreadable paths") {
  CHECK_THROWS_AS(read_transcript_file("/nonexistent/t.jsonl"), IoError);
  CHECK_THROWS_AS(read_pauses_file("/nonexistent/p.jsonl"), IoError);
  CHECK_THROWS_AS(read_coded_file("/nonexistent/c.jsonl"), IoError);
}

}  // TEST_SUITE
