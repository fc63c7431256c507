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

// Discourse-marker inventory and cue/non-cue disambiguation.

#ifndef FOCUSSEG_CUE_LEXICON_HPP_
#define FOCUSSEG_CUE_LEXICON_HPP_

#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "focusseg/annotation.hpp"
#include "focusseg/focus_engine.hpp"

namespace focusseg {

enum class OrdinalRank : std::uint8_t { First, Subsequent };

// Token classes the lexicon distinguishes. Acknowledgments and filled
// pauses are fragment-initial classes of their own, not cue phrases.
enum class LexicalClass : std::uint8_t { Cue, Acknowledgment, FilledPause };

struct CueEntry {
  std::string surface;  // normalized
  std::string gloss;
  OpSet candidate_ops;
  std::optional<OrdinalRank> ordinal_rank;
  LexicalClass token_class = LexicalClass::Cue;
  bool connective = false;       // "and"/"but": subject to the conjunction test
  bool corpus_derived = false;   // candidate set read off the corpus tables
  std::string table_row;         // row label in co-occurrence tables
  std::vector<std::string> aliases;

  friend bool operator==(const CueEntry&, const CueEntry&) = default;
};

class CueLexicon {
 public:
  // The bundled replication lexicon.
  static const CueLexicon& replication();

  // One JSON object per line; blank lines and lines starting with '#'
  // are skipped. Throws SchemaError with the line number.
  static CueLexicon from_jsonl(std::istream& in);
  static CueLexicon load_file(const std::string& path);

  // Lowercase, drop everything but letters, digits and spaces, collapse
  // runs of whitespace.
  static std::string normalize(std::string_view text);

  std::optional<CueEntry> lookup(std::string_view surface) const;

  // Longest entry matching words[start..], up to four words.
  struct Match {
    CueEntry entry;
    std::size_t length = 0;
  };
  std::optional<Match> longest_match(std::span<const std::string> words,
                                     std::size_t start) const;

  const std::vector<CueEntry>& entries() const { return entries_; }

 private:
  void add(CueEntry entry, std::size_t line);
  std::vector<CueEntry> entries_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

enum class CueRule : std::uint8_t { Position, ConjunctionTest, Intonation, None };

std::string_view to_string(CueRule rule);
std::string_view to_string(LexicalClass c);
std::string_view to_string(OrdinalRank r);

struct CueJudgment {
  bool is_cue = false;
  CueRule rule_fired = CueRule::None;

  friend bool operator==(const CueJudgment&, const CueJudgment&) = default;
};

// Annotations consulted by the cue/non-cue cascade. Flags left unset
// raise MissingAnnotation.
struct CueContext {
  std::optional<bool> utterance_initial;
  std::optional<bool> coordination;
  std::optional<bool> own_intonational_phrase;
  std::vector<Accent> accents;  // one per token of the candidate span
};

// Cascade: non-initial -> not a cue; connective with coordination -> not
// a cue; deaccented, all-L* or a complete intonational phrase -> cue;
// otherwise non-connectives default to cue and connectives to non-cue.
CueJudgment judge_cue_use(const CueEntry& candidate, const CueContext& context);

}  // namespace focusseg

#endif  // FOCUSSEG_CUE_LEXICON_HPP_
