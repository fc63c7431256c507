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

// Focusing-operation classification from prior, current and subsequent
// speech.
//
// Lexical and prosodic features vote for stack primitives:
//
//   source      feature                                  primitive
//   prior       falling final, acknowledgment,           pop (of the prior
//               lexical closure                          speech's segment)
//   prior       continuation rise                        null
//   current     pronominalization, reduced range,        push
//               nonstandard phonation, many L*,
//               relative clause, now/y'know/ordinal
//   current     nonpronominal repetition, expanded       pop
//               range, return to normal phonation,
//               so/but
//   current     falling final, acknowledgment, prompt,   impending pop
//               lexical closure, creaky final
//   subsequent  nonpronominal repetition, expanded       pop
//               range, normal phonation, so/but/now
//
// Each item supports the operations its primitive is part of:
//   push -> Initiate, Replace     pop -> Return, Replace
//   null, impending pop -> Retain
// except that a pop of the prior speech's own segment supports Replace
// only. An operation scores the summed weight of the items supporting it;
// cue candidates and a pending impending pop multiply scores; ties go to
// the least disruptive operation (Retain, Initiate, Return, Replace).

#ifndef FOCUSSEG_OP_CLASSIFIER_HPP_
#define FOCUSSEG_OP_CLASSIFIER_HPP_

#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "focusseg/focus_engine.hpp"
#include "focusseg/fragment_coder.hpp"

namespace focusseg {

enum class EvidenceSource : std::uint8_t { Prior, Current, Subsequent };

enum class Feature : std::uint8_t {
  FallingFinal,
  ContinuationRise,
  Acknowledgment,
  LexicalClosure,
  Pronominalization,
  ReducedRange,
  NonstandardPhonation,
  ManyLstar,
  RelativeClause,
  CueNowYknowOrdinal,
  NonpronominalRepetition,
  ExpandedRange,
  NormalPhonationReturn,
  CueSoBut,
  Prompt,
  CreakyFinal,
  CueSoButNowSubsequent,
};

enum class Primitive : std::uint8_t { Push, Pop, Null, ImpendingPop };

std::string_view to_string(EvidenceSource s);
std::string_view to_string(Feature f);
std::string_view to_string(Primitive p);

// Row lookup; nullopt when the feature is not catalogued for that source.
std::optional<Primitive> primitive_for(EvidenceSource source, Feature feature);

// Operations an item with this source and primitive supports.
OpSet supported_ops(EvidenceSource source, Primitive primitive);

struct EvidenceItem {
  EvidenceSource source = EvidenceSource::Current;
  Feature feature = Feature::FallingFinal;
  Primitive primitive = Primitive::Null;
  double weight = 1.0;

  friend bool operator==(const EvidenceItem&, const EvidenceItem&) = default;
};

struct ClassifierConfig {
  std::map<std::pair<EvidenceSource, Feature>, double> weights;  // default 1
  double cue_bonus = 2.0;
  double lookahead_bonus = 2.0;
  // "Many L*": more than this share of accented tokens carry L*.
  double many_lstar_proportion = 0.5;

  double weight(EvidenceSource s, Feature f) const;

  // key = value lines; '#' starts a comment. Keys: cue_bonus,
  // lookahead_bonus, many_lstar_proportion, weight.<source>.<feature>.
  static ClassifierConfig parse(std::istream& in);
  static ClassifierConfig load_file(const std::string& path);
  static ClassifierConfig defaults();
  std::string to_text() const;
};

std::vector<EvidenceItem> extract_evidence(const SpeechFragment* prior,
                                           const SpeechFragment& current,
                                           const SpeechFragment* subsequent,
                                           const ClassifierConfig& config = ClassifierConfig::defaults());

struct ScoredOperation {
  FocusingOperation operation;
  double score = 0.0;

  friend bool operator==(const ScoredOperation&, const ScoredOperation&) = default;
};

struct Classification {
  FocusingOperation operation;
  double score = 0.0;
  std::vector<ScoredOperation> alternatives;  // best first, includes the choice
  std::vector<EvidenceItem> evidence_used;
  bool low_confidence = false;
  bool impending_pop = false;  // consumed by the next fragment
  std::vector<std::string> flags;
  // summed primitive votes, for the audit log
  double push_evidence = 0.0;
  double pop_evidence = 0.0;
  double null_evidence = 0.0;

  friend bool operator==(const Classification&, const Classification&) = default;
};

struct ClassifyContext {
  std::optional<OpSet> cue_candidates;
  int stack_depth = 0;
  bool impending_pop_pending = false;
  // Pops for Return / Replace when a repetition names an open topic.
  int return_pops = 1;
  int replace_pops = 1;
};

// Pure function of its inputs. Operations the stack cannot absorb are
// excluded: Return must leave a space open, Replace needs pops <= depth,
// and on an empty stack only Initiate is possible.
Classification classify(std::span<const EvidenceItem> evidence, const ClassifyContext& context,
                        const ClassifierConfig& config = ClassifierConfig::defaults());

struct Segmentation {
  std::vector<TraceStep> trace;
  TreeBuild tree;
  std::vector<Classification> classifications;
};

// First fragment is forced to Initiate; every later classification is
// applied to the running stack.
Segmentation segment_discourse(std::span<const SpeechFragment> fragments,
                               const ClassifierConfig& config = ClassifierConfig::defaults());

// Tie-break rank, lower is cheaper.
int disruption_rank(OpKind kind);

}  // namespace focusseg

#endif  // FOCUSSEG_OP_CLASSIFIER_HPP_
