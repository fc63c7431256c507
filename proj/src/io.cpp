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


#include "focusseg/io.hpp"

#include <fstream>
#include <functional>
#include <set>

#include "focusseg/errors.hpp"
#include "json.hpp"

namespace focusseg {

namespace {

using nlohmann::json;

void for_each_object(std::istream& in, const std::function<void(const json&)>& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw SchemaError(std::string("invalid JSON: ") + e.what(), line_no);
    }
    if (!j.is_object()) throw SchemaError("expected a JSON object", line_no);
    try {
      if (!j.contains("schema_version")) throw SchemaError("missing schema_version");
      if (j.at("schema_version") != kSchemaVersion) {
        throw SchemaError("unsupported schema_version " + j.at("schema_version").dump());
      }
      fn(j);
    } catch (const SchemaError& e) {
      if (e.line() != 0) throw;
      throw SchemaError(e.what(), line_no);
    } catch (const Error& e) {
      throw SchemaError(e.what(), line_no);
    } catch (const json::exception& e) {
      throw SchemaError(e.what(), line_no);
    }
  }
}

void check_keys(const json& j, std::initializer_list<const char*> allowed) {
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items()) {
    if (key != "schema_version" && !ok.count(key)) throw SchemaError("unknown field '" + key + "'");
  }
}

template <typename T>
T required(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) {
    throw SchemaError(std::string("missing field '") + key + "'");
  }
  return j.at(key).get<T>();
}

template <typename E>
E enum_field(const json& j, const char* key, E fallback) {
  if (!j.contains(key) || j.at(key).is_null()) return fallback;
  return parse_enum<E>(j.at(key).get<std::string>(), key);
}

std::optional<double> opt_number(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}


std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return in;
}

}  // namespace

std::vector<AnnotatedToken> read_transcript(std::istream& in) {
  std::vector<AnnotatedToken> out;
  for_each_object(in, [&](const json& j) {
    check_keys(j, {"surface", "speaker", "accent", "boundary", "phonation", "pitch_range",
                   "pause_before_s", "flags", "start_s", "end_s", "topic", "prior_function",
                   "subsequent_function"});
    AnnotatedToken t;
    t.surface = required<std::string>(j, "surface");
    if (t.surface.empty()) throw SchemaError("empty surface");
    t.speaker = j.value("speaker", std::string());
    t.accent = enum_field(j, "accent", Accent::Unmarked);
    t.boundary = enum_field(j, "boundary", Boundary::None);
    t.phonation = enum_field(j, "phonation", Phonation::Normal);
    t.pitch_range = enum_field(j, "pitch_range", PitchRange::Normal);
    t.pause_before_s = opt_number(j, "pause_before_s").value_or(0.0);
    if (!(t.pause_before_s >= 0.0)) throw SchemaError("pause_before_s must be >= 0");
    if (j.contains("flags")) {
      for (const auto& f : j.at("flags")) t.flags.set(parse_enum<TokenFlag>(f.get<std::string>(), "flags"));
    }
    t.start_s = opt_number(j, "start_s");
    t.end_s = opt_number(j, "end_s");
    if (t.start_s.has_value() != t.end_s.has_value()) {
      throw SchemaError("start_s and end_s must be given together");
    }
    if (t.start_s && *t.end_s < *t.start_s) throw SchemaError("end_s before start_s");
    t.topic = j.value("topic", std::string());
    if (j.contains("prior_function") && !j.at("prior_function").is_null()) {
      t.prior_function = enum_field(j, "prior_function", DiscourseFunction::Topical);
    }
    if (j.contains("subsequent_function") && !j.at("subsequent_function").is_null()) {
      t.subsequent_function = enum_field(j, "subsequent_function", DiscourseFunction::Topical);
    }
    out.push_back(std::move(t));
  });
  return out;
}

void write_transcript(std::ostream& out, std::span<const AnnotatedToken> tokens) {
  for (const AnnotatedToken& t : tokens) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["surface"] = t.surface;
    j["speaker"] = t.speaker;
    j["accent"] = to_string(t.accent);
    j["boundary"] = to_string(t.boundary);
    j["phonation"] = to_string(t.phonation);
    j["pitch_range"] = to_string(t.pitch_range);
    j["pause_before_s"] = t.pause_before_s;
    json flags = json::array();
    for (const auto& [flag, name] : detail::kTokenFlagNames) {
      if (t.flags.has(flag)) flags.push_back(name);
    }
    j["flags"] = flags;
    if (t.start_s) {
      j["start_s"] = *t.start_s;
      j["end_s"] = *t.end_s;
    }
    if (!t.topic.empty()) j["topic"] = t.topic;
    if (t.prior_function) j["prior_function"] = to_string(*t.prior_function);
    if (t.subsequent_function) j["subsequent_function"] = to_string(*t.subsequent_function);
    out << j.dump() << "\n";
  }
}

std::vector<PauseRecord> read_pauses(std::istream& in) {
  std::vector<PauseRecord> out;
  for_each_object(in, [&](const json& j) {
    check_keys(j, {"start_s", "raw_duration_s", "reported_duration_s", "position", "suspect"});
    PauseRecord p;
    p.start_s = required<double>(j, "start_s");
    p.raw_duration_s = required<double>(j, "raw_duration_s");
    if (!(p.raw_duration_s >= 0.0)) throw SchemaError("raw_duration_s must be >= 0");
    p.reported_duration_s = opt_number(j, "reported_duration_s").value_or(round_to_tenth(p.raw_duration_s));
    if (j.contains("position") && !j.at("position").is_null()) {
      const auto pos = j.at("position").get<std::string>();
      if (pos == to_string(PausePosition::FragmentInitial)) {
        p.position = PausePosition::FragmentInitial;
      } else if (pos == to_string(PausePosition::FragmentInternal)) {
        p.position = PausePosition::FragmentInternal;
      } else {
        throw SchemaError("bad position '" + pos + "'");
      }
    }
    p.suspect = j.value("suspect", false);
    out.push_back(p);
  });
  return out;
}

void write_pauses(std::ostream& out, std::span<const PauseRecord> pauses) {
  for (const PauseRecord& p : pauses) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["start_s"] = p.start_s;
    j["raw_duration_s"] = p.raw_duration_s;
    j["reported_duration_s"] = p.reported_duration_s;
    j["position"] = p.position ? json(to_string(*p.position)) : json(nullptr);
    j["suspect"] = p.suspect;
    out << j.dump() << "\n";
  }
}

std::vector<TraceStep> read_trace(std::istream& in) {
  std::vector<TraceStep> out;
  for_each_object(in, [&](const json& j) {
    check_keys(j, {"index", "kind", "pops", "label"});
    TraceStep s;
    s.fragment_index = required<int>(j, "index");
    s.op.kind = op_kind_from_string(required<std::string>(j, "kind"));
    s.op.pop_count = j.value("pops", 0);
    s.op.validate();
    s.dsp_label = j.value("label", std::string());
    out.push_back(std::move(s));
  });
  return out;
}

void write_trace(std::ostream& out, std::span<const TraceStep> trace) {
  for (const TraceStep& s : trace) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["index"] = s.fragment_index;
    j["kind"] = to_string(s.op.kind);
    j["pops"] = s.op.pop_count;
    if (!s.dsp_label.empty()) j["label"] = s.dsp_label;
    out << j.dump() << "\n";
  }
}

CodedRecordSet read_coded(std::istream& in) {
  CodedRecordSet out;
  for_each_object(in, [&](const json& j) {
    check_keys(j, {"fragment_index", "pause_before_s", "no_pause", "initial_constituent",
                   "initial_token", "operation", "pops", "embedding_depth", "segments_affected",
                   "prior_function", "subsequent_function", "turn_position", "marked"});
    CodedRecord r;
    r.fragment_index = required<std::size_t>(j, "fragment_index");
    const auto pause = opt_number(j, "pause_before_s");
    const bool no_pause = j.value("no_pause", false);
    if (pause) {
      if (!(*pause >= 0.0)) throw SchemaError("pause_before_s must be >= 0");
      if (no_pause && *pause != 0.0) throw SchemaError("no_pause set with a nonzero pause");
      r.pause_before_s = *pause;
    } else if (no_pause) {
      r.pause_before_s = 0.0;
    } else {
      ++out.excluded_missing_pause;
      return;
    }
    r.initial_constituent = parse_initial_constituent(required<std::string>(j, "initial_constituent"));
    r.initial_token = CueLexicon::normalize(j.value("initial_token", std::string()));
    r.operation.kind = op_kind_from_string(required<std::string>(j, "operation"));
    r.operation.pop_count = j.value("pops", 0);
    r.operation.validate();
    r.embedding_depth = j.value("embedding_depth", 1);
    if (r.embedding_depth < 1) throw SchemaError("embedding_depth must be >= 1");
    r.segments_affected = j.value("segments_affected", segments_affected(r.operation));
    if (r.segments_affected != segments_affected(r.operation)) {
      throw SchemaError("segments_affected disagrees with the operation");
    }
    r.prior_function = enum_field(j, "prior_function", DiscourseFunction::Topical);
    r.subsequent_function = enum_field(j, "subsequent_function", DiscourseFunction::Topical);
    r.turn_position = enum_field(j, "turn_position", TurnPosition::Continuing);
    r.marked = is_marked(r.initial_constituent);
    if (j.contains("marked") && j.at("marked").get<bool>() != r.marked) {
      throw SchemaError("marked disagrees with initial_constituent");
    }
    out.records.push_back(std::move(r));
  });
  return out;
}

void write_coded(std::ostream& out, std::span<const CodedRecord> records) {
  for (const CodedRecord& r : records) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["fragment_index"] = r.fragment_index;
    j["pause_before_s"] = r.pause_before_s;
    j["no_pause"] = false;
    j["initial_constituent"] = to_string(r.initial_constituent);
    j["initial_token"] = r.initial_token;
    j["operation"] = to_string(r.operation.kind);
    j["pops"] = r.operation.pop_count;
    j["embedding_depth"] = r.embedding_depth;
    j["segments_affected"] = r.segments_affected;
    j["prior_function"] = to_string(r.prior_function);
    j["subsequent_function"] = to_string(r.subsequent_function);
    j["turn_position"] = to_string(r.turn_position);
    j["marked"] = r.marked;
    out << j.dump() << "\n";
  }
}

void write_coded_tsv(std::ostream& out, std::span<const CodedRecord> records) {
  out << "fragment_index\tpause_before_s\tinitial_constituent\toperation\tembedding_depth\t"
         "segments_affected\tprior_function\tsubsequent_function\tturn_position\tmarked\n";
  for (const CodedRecord& r : records) {
    std::string op(to_string(r.operation.kind));
    if (r.operation.pop_count > 0) op += "(" + std::to_string(r.operation.pop_count) + ")";
    out << r.fragment_index << '\t' << json(r.pause_before_s).dump() << '\t'
        << to_string(r.initial_constituent) << '\t' << op << '\t' << r.embedding_depth << '\t'
        << r.segments_affected << '\t' << to_string(r.prior_function) << '\t'
        << to_string(r.subsequent_function) << '\t' << to_string(r.turn_position) << '\t'
        << (r.marked ? "true" : "false") << "\n";
  }
}

void write_audit(std::ostream& out, std::span<const Classification> classifications,
                 std::span<const SpeechFragment> fragments) {
  for (std::size_t i = 0; i < classifications.size(); ++i) {
    const Classification& c = classifications[i];
    json j;
    j["schema_version"] = kSchemaVersion;
    j["index"] = i < fragments.size() ? fragments[i].index : i;
    if (i < fragments.size()) j["text"] = fragments[i].text();
    j["operation"] = to_string(c.operation.kind);
    j["pops"] = c.operation.pop_count;
    j["score"] = c.score;
    json alts = json::array();
    for (const auto& a : c.alternatives) {
      alts.push_back({{"operation", to_string(a.operation.kind)},
                      {"pops", a.operation.pop_count},
                      {"score", a.score}});
    }
    j["alternatives"] = alts;
    json ev = json::array();
    for (const auto& e : c.evidence_used) {
      ev.push_back({{"source", to_string(e.source)},
                    {"feature", to_string(e.feature)},
                    {"primitive", to_string(e.primitive)},
                    {"weight", e.weight}});
    }
    j["evidence_used"] = ev;
    j["push_evidence"] = c.push_evidence;
    j["pop_evidence"] = c.pop_evidence;
    j["null_evidence"] = c.null_evidence;
    j["impending_pop"] = c.impending_pop;
    j["low_confidence"] = c.low_confidence;
    j["flags"] = c.flags;
    out << j.dump() << "\n";
  }
}

std::vector<AnnotatedToken> read_transcript_file(const std::string& path) {
  auto in = open_in(path);
  return read_transcript(in);
}

std::vector<PauseRecord> read_pauses_file(const std::string& path) {
  auto in = open_in(path);
  return read_pauses(in);
}

CodedRecordSet read_coded_file(const std::string& path) {
  auto in = open_in(path);
  return read_coded(in);
}

}  // namespace focusseg
