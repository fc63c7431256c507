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

// Speech fragments and the per-fragment coding record.
//
// A fragment opens at one of five fragment-initial token classes and runs
// until the next one:
//   unfilled pause   an aligned pause of at least 0.1 s (reported)
//   filled pause     "um", "uh", anywhere
//   cue phrase       lexicon cue judged a cue use, utterance-initial
//   acknowledgment   "ok", "sure", ..., utterance-initial
//   unmarked         any other utterance-initial token
// When classes co-occur on one token the fragment takes the first of
// cue_phrase > acknowledgment > filled_pause > unfilled_pause > unmarked.

#ifndef FOCUSSEG_FRAGMENT_CODER_HPP_
#define FOCUSSEG_FRAGMENT_CODER_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "focusseg/annotation.hpp"
#include "focusseg/cue_lexicon.hpp"
#include "focusseg/focus_engine.hpp"
#include "focusseg/pause_detect.hpp"

namespace focusseg {

// Unfilled pauses shorter than this (after rounding) do not open a fragment.
inline constexpr double kFragmentPauseThreshold_s = 0.1;

struct AnnotatedToken {
  std::string surface;
  std::string speaker;
  Accent accent = Accent::Unmarked;
  Boundary boundary = Boundary::None;  // phrase boundary after this token
  Phonation phonation = Phonation::Normal;
  PitchRange pitch_range = PitchRange::Normal;
  double pause_before_s = 0.0;
  TokenFlags flags;
  std::optional<double> start_s;
  std::optional<double> end_s;
  std::string topic;  // annotator topic id, optional
  // Discourse function of the speech around the fragment this token opens.
  std::optional<DiscourseFunction> prior_function;
  std::optional<DiscourseFunction> subsequent_function;

  friend bool operator==(const AnnotatedToken&, const AnnotatedToken&) = default;
};

enum class InitialClass : std::uint8_t {
  UnfilledPause,
  FilledPause,
  CuePhrase,
  Acknowledgment,
  Unmarked,
};

// Coded constituent: an initial unfilled pause codes as unmarked.
enum class InitialConstituent : std::uint8_t { CuePhrase, Acknowledgment, FilledPause, Unmarked };

std::string_view to_string(InitialClass c);
std::string_view to_string(InitialConstituent c);
InitialConstituent parse_initial_constituent(std::string_view name);
InitialConstituent constituent_of(InitialClass c);

struct SpeechFragment {
  std::size_t index = 0;
  std::string speaker;
  std::size_t token_begin = 0;  // offset into the transcript
  std::vector<AnnotatedToken> tokens;
  InitialClass initial_class = InitialClass::Unmarked;
  std::optional<CueEntry> initial_cue;
  // Lexicon entry of the opening acknowledgment or filled pause.
  std::optional<CueEntry> initial_form;
  std::size_t initial_span = 1;  // tokens covered by the opening cue/form
  double pause_before_s = 0.0;

  std::string text() const;
  friend bool operator==(const SpeechFragment&, const SpeechFragment&) = default;
};

// Index of the token each pause precedes. Throws MisalignedPause (with the
// nearest token) when a pause does not sit in an inter-token gap, or when
// pauses are given for tokens without timing.
std::vector<std::size_t> align_pauses(std::span<const AnnotatedToken> transcript,
                                      std::span<const PauseRecord> pauses,
                                      double tolerance_s = 0.02);

// Partitions the transcript. Each token's pause_before_s in the output is
// the effective pause: the aligned pause record when there is one, else
// the annotated value. Throws EmptyTranscript.
std::vector<SpeechFragment> fragmentize(std::span<const AnnotatedToken> transcript,
                                        std::span<const PauseRecord> pauses = {},
                                        const CueLexicon& lexicon = CueLexicon::replication());

// Labels each pause fragment_initial when it precedes a fragment's first
// token, fragment_internal otherwise.
std::vector<PauseRecord> label_pause_positions(std::span<const AnnotatedToken> transcript,
                                               std::span<const PauseRecord> pauses,
                                               std::span<const SpeechFragment> fragments);

// Concatenated fragment tokens, for re-serialization.
std::vector<AnnotatedToken> flatten(std::span<const SpeechFragment> fragments);

struct FunctionLabels {
  DiscourseFunction prior = DiscourseFunction::Topical;
  DiscourseFunction subsequent = DiscourseFunction::Topical;
};

// Annotator labels read from each fragment's opening token (topical when
// absent).
std::vector<FunctionLabels> function_labels(std::span<const SpeechFragment> fragments);

// Initiating on a speaker change (and for the first fragment) unless the
// opening token says otherwise via turn_initial.
std::vector<TurnPosition> turn_positions(std::span<const SpeechFragment> fragments);

struct CodedRecord {
  std::size_t fragment_index = 0;
  double pause_before_s = 0.0;
  InitialConstituent initial_constituent = InitialConstituent::Unmarked;
  std::string initial_token;  // normalized opening cue/form, empty if unmarked
  FocusingOperation operation;
  int embedding_depth = 1;
  int segments_affected = 0;
  DiscourseFunction prior_function = DiscourseFunction::Topical;
  DiscourseFunction subsequent_function = DiscourseFunction::Topical;
  TurnPosition turn_position = TurnPosition::Continuing;
  bool marked = false;

  friend bool operator==(const CodedRecord&, const CodedRecord&) = default;
};

inline bool is_marked(InitialConstituent c) { return c != InitialConstituent::Unmarked; }

// One record per fragment. Throws LengthMismatch when the per-fragment
// inputs disagree in length, Error when a fragment ends up outside every
// open segment.
std::vector<CodedRecord> code(std::span<const SpeechFragment> fragments,
                              std::span<const TraceStep> trace, const TreeBuild& tree,
                              std::span<const FunctionLabels> functions,
                              std::span<const TurnPosition> turns);

}  // namespace focusseg

#endif  // FOCUSSEG_FRAGMENT_CODER_HPP_
