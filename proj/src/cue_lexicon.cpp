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

#include "focusseg/cue_lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "embedded_data.hpp"
#include "focusseg/errors.hpp"

namespace focusseg {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxPhraseWords = 4;

LexicalClass parse_class(const std::string& s, std::size_t line) {
  if (s == "cue") return LexicalClass::Cue;
  if (s == "acknowledgment") return LexicalClass::Acknowledgment;
  if (s == "filled_pause") return LexicalClass::FilledPause;
  throw SchemaError("bad class '" + s + "'", line);
}

CueEntry entry_from_json(const json& j, std::size_t line) {
  if (!j.is_object()) throw SchemaError("lexicon entry must be an object", line);
  if (j.contains("schema_version") && j.at("schema_version") != 1) {
    throw SchemaError("unsupported schema_version", line);
  }
  CueEntry e;
  try {
    e.surface = CueLexicon::normalize(j.at("surface").get<std::string>());
    e.gloss = j.value("gloss", "");
    for (const auto& op : j.at("candidate_ops")) {
      e.candidate_ops.insert(op_kind_from_string(op.get<std::string>()));
    }
    e.token_class = parse_class(j.value("class", "cue"), line);
    e.connective = j.value("connective", false);
    e.corpus_derived = j.value("corpus_derived", false);
    e.table_row = j.value("table_row", e.surface);
    if (j.contains("ordinal_rank")) {
      const auto rank = j.at("ordinal_rank").get<std::string>();
      if (rank == "first") {
        e.ordinal_rank = OrdinalRank::First;
      } else if (rank == "subsequent") {
        e.ordinal_rank = OrdinalRank::Subsequent;
      } else {
        throw SchemaError("bad ordinal_rank '" + rank + "'", line);
      }
    }
    for (const auto& a : j.value("aliases", json::array())) {
      e.aliases.push_back(CueLexicon::normalize(a.get<std::string>()));
    }
  } catch (const json::exception& ex) {
    throw SchemaError(ex.what(), line);
  } catch (const MalformedOperation& ex) {
    throw SchemaError(ex.what(), line);
  }
  if (e.surface.empty()) throw SchemaError("empty surface", line);
  if (e.candidate_ops.empty()) throw SchemaError("candidate_ops must be nonempty", line);
  if (e.ordinal_rank && e.table_row.empty()) throw SchemaError("ordinal without row", line);
  return e;
}

std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

}  // namespace

std::string_view to_string(CueRule rule) {
  switch (rule) {
    case CueRule::Position: return "position";
    case CueRule::ConjunctionTest: return "conjunction_test";
    case CueRule::Intonation: return "intonation";
    case CueRule::None: return "none";
  }
  return "?";
}

std::string_view to_string(LexicalClass c) {
  switch (c) {
    case LexicalClass::Cue: return "cue";
    case LexicalClass::Acknowledgment: return "acknowledgment";
    case LexicalClass::FilledPause: return "filled_pause";
  }
  return "?";
}

std::string_view to_string(OrdinalRank r) {
  return r == OrdinalRank::First ? "first" : "subsequent";
}

std::string CueLexicon::normalize(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char raw : text) {
    auto c = static_cast<unsigned char>(raw);
    if (std::isspace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (!std::isalnum(c)) continue;
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

void CueLexicon::add(CueEntry entry, std::size_t line) {
  if (entry.table_row == "Ordinal" && !entry.ordinal_rank) {
    throw SchemaError("ordinal entry '" + entry.surface + "' needs an ordinal_rank", line);
  }
  const std::size_t slot = entries_.size();
  std::vector<std::string> keys = {entry.surface};
  keys.insert(keys.end(), entry.aliases.begin(), entry.aliases.end());
  for (const auto& k : keys) {
    if (split_words(k).size() > kMaxPhraseWords) {
      throw SchemaError("phrase '" + k + "' is longer than four words", line);
    }
    auto [it, inserted] = index_.emplace(k, slot);
    if (!inserted && it->second != slot) {
      throw SchemaError("duplicate lexicon form '" + k + "'", line);
    }
  }
  entries_.push_back(std::move(entry));
}

CueLexicon CueLexicon::from_jsonl(std::istream& in) {
  CueLexicon lex;
  std::string text;
  std::size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#') continue;
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& ex) {
      throw SchemaError(ex.what(), line_no);
    }
    lex.add(entry_from_json(j, line_no), line_no);
  }
  return lex;
}

CueLexicon CueLexicon::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open lexicon '" + path + "'");
  return from_jsonl(in);
}

const CueLexicon& CueLexicon::replication() {
  static const CueLexicon lex = [] {
    std::istringstream in{std::string(embedded::replication_lexicon())};
    return from_jsonl(in);
  }();
  return lex;
}

std::optional<CueEntry> CueLexicon::lookup(std::string_view surface) const {
  auto it = index_.find(normalize(surface));
  if (it == index_.end()) return std::nullopt;
  return entries_[it->second];
}

std::optional<CueLexicon::Match> CueLexicon::longest_match(
    std::span<const std::string> words, std::size_t start) const {
  std::optional<Match> best;
  std::string phrase;
  for (std::size_t n = 0; n < kMaxPhraseWords && start + n < words.size(); ++n) {
    const std::string w = normalize(words[start + n]);
    if (w.empty()) break;
    if (!phrase.empty()) phrase.push_back(' ');
    phrase += w;
    auto it = index_.find(phrase);
    if (it != index_.end()) best = Match{entries_[it->second], n + 1};
  }
  return best;
}

CueJudgment judge_cue_use(const CueEntry& candidate, const CueContext& context) {
  if (!context.utterance_initial) {
    throw MissingAnnotation("cue judgment needs the utterance_initial flag");
  }
  if (!*context.utterance_initial) return {false, CueRule::Position};

  if (candidate.connective) {
    if (!context.coordination) {
      throw MissingAnnotation("cue judgment of '" + candidate.surface +
                              "' needs the coordination flag");
    }
    if (*context.coordination) return {false, CueRule::ConjunctionTest};
  }

  if (!context.own_intonational_phrase) {
    throw MissingAnnotation("cue judgment needs the own_intonational_phrase flag");
  }
  if (context.accents.empty()) {
    throw MissingAnnotation("cue judgment needs per-token accents");
  }
  const bool deaccented = std::all_of(context.accents.begin(), context.accents.end(),
                                      [](Accent a) { return a == Accent::Deaccented; });
  const bool any_accent = std::any_of(context.accents.begin(), context.accents.end(),
                                      [](Accent a) {
                                        return a == Accent::Hstar || a == Accent::Lstar;
                                      });
  const bool all_lstar =
      any_accent && std::all_of(context.accents.begin(), context.accents.end(), [](Accent a) {
        return a != Accent::Hstar;
      });
  if (deaccented || all_lstar || *context.own_intonational_phrase) {
    return {true, CueRule::Intonation};
  }
  // no decisive evidence: position alone for markers, syntax for connectives
  return {!candidate.connective, CueRule::None};
}

}  // namespace focusseg
