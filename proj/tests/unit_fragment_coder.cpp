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


#include <string>
#include <vector>

#include "doctest.h"
#include "focusseg/errors.hpp"
#include "focusseg/fragment_coder.hpp"

using namespace focusseg;

namespace {

AnnotatedToken tok(std::string surface, double pause = 0.0, std::string speaker = "A") {
  AnnotatedToken t;
  t.surface = std::move(surface);
  t.speaker = std::move(speaker);
  t.pause_before_s = pause;
  return t;
}

std::vector<AnnotatedToken> words(std::initializer_list<const char*> ws) {
  std::vector<AnnotatedToken> out;
  for (const char* w : ws) out.push_back(tok(w));
  return out;
}

// Tokens 0.3 s long with 0.05 s gaps, starting at `t0`.
void time_tokens(std::vector<AnnotatedToken>& ts, double t0 = 0.0) {
  double t = t0;
  for (auto& x : ts) {
    x.start_s = t;
    x.end_s = t + 0.3;
    t += 0.35;
  }
}

std::vector<InitialClass> classes(const std::vector<SpeechFragment>& fs) {
  std::vector<InitialClass> out;
  for (const auto& f : fs) out.push_back(f.initial_class);
  return out;
}

std::vector<TraceStep> trace_of(std::initializer_list<FocusingOperation> ops) {
  std::vector<TraceStep> out;
  int i = 0;
  for (const auto& op : ops) out.push_back({op, i++, {}});
  return out;
}

}  // namespace

TEST_SUITE("fragment_coder") {

TEST_CASE("pause before an initial cue keeps the cue class") {
  auto ts = words({"So", "you", "go", "left"});
  ts[0].pause_before_s = 0.1;
  const auto fs = fragmentize(ts);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].initial_class == InitialClass::CuePhrase);
  REQUIRE(fs[0].initial_cue);
  CHECK(fs[0].initial_cue->surface == "so");
  CHECK(fs[0].pause_before_s == doctest::Approx(0.1));
  CHECK(fs[0].tokens.size() == 4);
}

TEST_CASE("plain sentence is one unmarked fragment") {
  const auto fs = fragmentize(words({"you", "go", "left"}));
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].initial_class == InitialClass::Unmarked);
  CHECK(fs[0].pause_before_s == 0.0);
  CHECK(fs[0].text() == "you go left");
}

TEST_CASE("acknowledgment then filled pause") {
  auto ts = words({"Ok", "um", "so", "then"});
  ts[0].boundary = Boundary::Fall;
  const auto fs = fragmentize(ts);
  CHECK(classes(fs) == std::vector{InitialClass::Acknowledgment, InitialClass::FilledPause});
  CHECK(fs[1].initial_form->surface == "um");
  CHECK(fs[1].tokens.size() == 3);
}

TEST_CASE("a long unfilled pause opens a fragment, a short one does not") {
  auto ts = words({"go", "left", "then", "right", "here"});
  ts[2].pause_before_s = 0.3;
  ts[4].pause_before_s = 0.04;
  const auto fs = fragmentize(ts);
  REQUIRE(fs.size() == 2);
  CHECK(fs[1].initial_class == InitialClass::UnfilledPause);
  CHECK(fs[1].pause_before_s == doctest::Approx(0.3));
  CHECK(constituent_of(fs[1].initial_class) == InitialConstituent::Unmarked);
}

TEST_CASE("0.05 s rounds up to 0.1 and opens a fragment") {
  auto ts = words({"go", "left"});
  ts[1].pause_before_s = 0.05;
  CHECK(fragmentize(ts).size() == 2);
}

TEST_CASE("filled pauses open fragments anywhere") {
  const auto fs = fragmentize(words({"go", "uh", "left"}));
  CHECK(classes(fs) == std::vector{InitialClass::Unmarked, InitialClass::FilledPause});
}

TEST_CASE("mid-utterance cues and acknowledgments are ordinary words") {
  const auto fs = fragmentize(words({"it", "is", "now", "ok"}));
  CHECK(fs.size() == 1);
}

TEST_CASE("coordinating and is not a cue") {
  auto ts = words({"turn", "left", "And", "go"});
  ts[1].boundary = Boundary::ContinuationRise;
  ts[2].flags.set(TokenFlag::Coordination);
  const auto fs = fragmentize(ts);
  REQUIRE(fs.size() == 2);
  CHECK(fs[1].initial_class == InitialClass::Unmarked);
  CHECK_FALSE(fs[1].initial_cue);
}

TEST_CASE("multi-word cue spans its tokens") {
  auto ts = words({"first", "of", "all", "go"});
  ts[0].accent = Accent::Deaccented;
  const auto fs = fragmentize(ts);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].initial_span == 3);
  CHECK(fs[0].initial_cue->ordinal_rank == OrdinalRank::First);
}

TEST_CASE("speaker change starts a new utterance") {
  std::vector<AnnotatedToken> ts{tok("go"), tok("left"), tok("ok", 0.0, "B"), tok("right", 0.0, "B")};
  const auto fs = fragmentize(ts);
  REQUIRE(fs.size() == 2);
  CHECK(fs[1].initial_class == InitialClass::Acknowledgment);
  CHECK(turn_positions(fs) == std::vector{TurnPosition::Initiating, TurnPosition::Initiating});
}

TEST_CASE("turn position follows the speaker unless flagged") {
  auto ts = words({"go", "um", "left", "um", "right"});
  ts[3].flags.set(TokenFlag::TurnInitial);
  const auto fs = fragmentize(ts);
  REQUIRE(fs.size() == 3);
  CHECK(turn_positions(fs) ==
        std::vector{TurnPosition::Initiating, TurnPosition::Continuing, TurnPosition::Initiating});
}

TEST_CASE("empty transcript") {
  CHECK_THROWS_AS(fragmentize(std::vector<AnnotatedToken>{}), EmptyTranscript);
}

TEST_CASE("negative pause is rejected") {
  auto ts = words({"go"});
  ts[0].pause_before_s = -0.1;
  CHECK_THROWS_AS(fragmentize(ts), SchemaError);
}

TEST_CASE("partition is lossless and a fixed point") {
  auto ts = words({"Ok", "so", "you", "um", "turn", "left", "Now", "the", "hall", "uh", "ends"});
  ts[0].boundary = Boundary::Fall;
  ts[5].boundary = Boundary::Fall;
  ts[6].accent = Accent::Deaccented;
  ts[7].pause_before_s = 0.4;
  const auto fs = fragmentize(ts);
  CHECK(flatten(fs) == ts);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    CHECK(fs[i].index == i);
    CHECK_FALSE(fs[i].tokens.empty());
  }
  CHECK(fragmentize(flatten(fs)) == fs);
}

TEST_CASE("pause records align to gaps and drive pause_before") {
  auto ts = words({"go", "left", "then", "right"});
  time_tokens(ts);
  // gap before "then" widened to 0.45 s
  for (std::size_t k = 2; k < ts.size(); ++k) {
    *ts[k].start_s += 0.4;
    *ts[k].end_s += 0.4;
  }
  const PauseRecord p{0.65, 0.45, 0.5, std::nullopt, false};
  const std::vector<PauseRecord> ps{p};
  CHECK(align_pauses(ts, ps) == std::vector<std::size_t>{2});

  const auto fs = fragmentize(ts, ps);
  REQUIRE(fs.size() == 2);
  CHECK(fs[1].pause_before_s == doctest::Approx(0.5));
  CHECK(fs[1].tokens.front().pause_before_s == doctest::Approx(0.5));

  const auto labeled = label_pause_positions(ts, ps, fs);
  CHECK(labeled[0].position == PausePosition::FragmentInitial);
}

TEST_CASE("a pause inside a fragment is labeled internal") {
  auto ts = words({"so", "go", "um", "left"});
  time_tokens(ts);
  const std::vector<PauseRecord> ps{{0.31, 0.03, 0.0, std::nullopt, false}};
  const auto fs = fragmentize(ts, ps);
  CHECK(label_pause_positions(ts, ps, fs)[0].position == PausePosition::FragmentInternal);
}

TEST_CASE("misaligned pauses are diagnosed") {
  auto ts = words({"go", "left"});
  time_tokens(ts);
  const std::vector<PauseRecord> inside{{0.1, 0.1, 0.1, std::nullopt, false}};
  try {
    (void)align_pauses(ts, inside);
    FAIL("expected MisalignedPause");
  } catch (const MisalignedPause& e) {
    CHECK(std::string(e.what()).find("nearest") != std::string::npos);
  }
  auto untimed = words({"go"});
  CHECK_THROWS_AS(align_pauses(untimed, inside), MisalignedPause);
}

TEST_CASE("coding a filled-pause initiate at depth two") {
  auto ts = words({"go", "um", "left"});
  const auto fs = fragmentize(ts);
  const auto trace = trace_of({FocusingOperation::initiate(), FocusingOperation::initiate()});
  const auto tree = build_tree(trace);
  const auto recs = code(fs, trace, tree, function_labels(fs), turn_positions(fs));
  REQUIRE(recs.size() == 2);
  const CodedRecord& r = recs[1];
  CHECK(r.initial_constituent == InitialConstituent::FilledPause);
  CHECK(r.initial_token == "um");
  CHECK(r.marked);
  CHECK(r.embedding_depth == 2);
  CHECK(r.segments_affected == 1);
  CHECK(r.turn_position == TurnPosition::Continuing);
  CHECK(r.prior_function == DiscourseFunction::Topical);
}

TEST_CASE("coding an unmarked retain") {
  auto ts = words({"go", "left", "then", "right"});
  ts[1].boundary = Boundary::Fall;
  ts[3].prior_function = DiscourseFunction::Closure;
  const auto fs = fragmentize(ts);
  REQUIRE(fs.size() == 2);
  const auto trace = trace_of({FocusingOperation::initiate(), FocusingOperation::retain()});
  const auto recs = code(fs, trace, build_tree(trace), function_labels(fs), turn_positions(fs));
  CHECK_FALSE(recs[1].marked);
  CHECK(recs[1].segments_affected == 0);
  CHECK(recs[1].embedding_depth == 1);
  CHECK(recs[1].initial_token.empty());
}

TEST_CASE("function labels come from the opening token") {
  auto ts = words({"go", "um", "left"});
  ts[1].prior_function = DiscourseFunction::Repair;
  ts[1].subsequent_function = DiscourseFunction::Acknowledgment;
  ts[2].prior_function = DiscourseFunction::Closure;  // not an opening token
  const auto labels = function_labels(fragmentize(ts));
  CHECK(labels[0].prior == DiscourseFunction::Topical);
  CHECK(labels[1].prior == DiscourseFunction::Repair);
  CHECK(labels[1].subsequent == DiscourseFunction::Acknowledgment);
}

TEST_CASE("code checks its inputs line up") {
  const auto fs = fragmentize(words({"go", "um", "left"}));
  const auto one = trace_of({FocusingOperation::initiate()});
  CHECK_THROWS_AS(code(fs, one, build_tree(one), function_labels(fs), turn_positions(fs)),
                  LengthMismatch);
  const auto closed = trace_of({FocusingOperation::initiate(), FocusingOperation::return_to(1)});
  CHECK_THROWS_AS(code(fs, closed, build_tree(closed), function_labels(fs), turn_positions(fs)),
                  Error);
}

TEST_CASE("marked count matches lexical constituents") {
  for (auto c : {InitialConstituent::CuePhrase, InitialConstituent::Acknowledgment,
                 InitialConstituent::FilledPause}) {
    CHECK(is_marked(c));
    CHECK(parse_initial_constituent(to_string(c)) == c);
  }
  CHECK_FALSE(is_marked(InitialConstituent::Unmarked));
  CHECK_THROWS_AS(parse_initial_constituent("pause"), SchemaError);
}

}  // TEST_SUITE
