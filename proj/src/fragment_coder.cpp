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

#include "focusseg/fragment_coder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "focusseg/errors.hpp"

namespace focusseg {

namespace {

bool any_flag(std::span<const AnnotatedToken> span, TokenFlag f) {
  return std::any_of(span.begin(), span.end(),
                     [f](const AnnotatedToken& t) { return t.flags.has(f); });
}

std::string describe_token(std::span<const AnnotatedToken> tokens, std::size_t k) {
  std::ostringstream os;
  os << "token " << k << " '" << tokens[k].surface << "'";
  if (tokens[k].start_s) os << " at " << *tokens[k].start_s << " s";
  return os.str();
}

}  // namespace

std::string_view to_string(InitialClass c) {
  switch (c) {
    case InitialClass::UnfilledPause: return "unfilled_pause";
    case InitialClass::FilledPause: return "filled_pause";
    case InitialClass::CuePhrase: return "cue_phrase";
    case InitialClass::Acknowledgment: return "acknowledgment";
    case InitialClass::Unmarked: return "unmarked";
  }
  return "?";
}

std::string_view to_string(InitialConstituent c) {
  switch (c) {
    case InitialConstituent::CuePhrase: return "cue_phrase";
    case InitialConstituent::Acknowledgment: return "acknowledgment";
    case InitialConstituent::FilledPause: return "filled_pause";
    case InitialConstituent::Unmarked: return "unmarked";
  }
  return "?";
}

InitialConstituent parse_initial_constituent(std::string_view name) {
  for (auto c : {InitialConstituent::CuePhrase, InitialConstituent::Acknowledgment,
                 InitialConstituent::FilledPause, InitialConstituent::Unmarked}) {
    if (to_string(c) == name) return c;
  }
  throw SchemaError("bad initial_constituent '" + std::string(name) + "'");
}

InitialConstituent constituent_of(InitialClass c) {
  switch (c) {
    case InitialClass::CuePhrase: return InitialConstituent::CuePhrase;
    case InitialClass::Acknowledgment: return InitialConstituent::Acknowledgment;
    case InitialClass::FilledPause: return InitialConstituent::FilledPause;
    case InitialClass::UnfilledPause:
    case InitialClass::Unmarked: return InitialConstituent::Unmarked;
  }
  return InitialConstituent::Unmarked;
}

std::string SpeechFragment::text() const {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t.surface;
  }
  return out;
}

std::vector<std::size_t> align_pauses(std::span<const AnnotatedToken> transcript,
                                      std::span<const PauseRecord> pauses, double tolerance_s) {
  std::vector<std::size_t> out;
  if (pauses.empty()) return out;
  for (std::size_t k = 0; k < transcript.size(); ++k) {
    if (!transcript[k].start_s || !transcript[k].end_s) {
      throw MisalignedPause("pauses given but " + describe_token(transcript, k) +
                            " carries no timing");
    }
  }
  if (transcript.empty()) throw MisalignedPause("pauses given for an empty transcript");

  for (const PauseRecord& p : pauses) {
    std::optional<std::size_t> hit;
    for (std::size_t k = 0; k < transcript.size() && !hit; ++k) {
      const double lower = k == 0 ? -std::numeric_limits<double>::infinity()
                                  : *transcript[k - 1].end_s;
      const double upper = *transcript[k].start_s;
      if (p.start_s >= lower - tolerance_s && p.end_s() <= upper + tolerance_s) hit = k;
    }
    if (!hit) {
      std::size_t nearest = 0;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < transcript.size(); ++k) {
        const double d = std::abs(*transcript[k].start_s - p.end_s());
        if (d < best) {
          best = d;
          nearest = k;
        }
      }
      std::ostringstream os;
      os << "pause at " << p.start_s << " s (" << p.raw_duration_s
         << " s) is not in a gap between tokens; nearest is "
         << describe_token(transcript, nearest);
      throw MisalignedPause(os.str());
    }
    out.push_back(*hit);
  }
  return out;
}

std::vector<SpeechFragment> fragmentize(std::span<const AnnotatedToken> transcript,
                                        std::span<const PauseRecord> pauses,
                                        const CueLexicon& lexicon) {
  if (transcript.empty()) throw EmptyTranscript("transcript has no tokens");

  std::vector<AnnotatedToken> tokens(transcript.begin(), transcript.end());
  if (!pauses.empty()) {
    const auto at = align_pauses(transcript, pauses);
    std::vector<std::optional<double>> aligned(tokens.size());
    for (std::size_t p = 0; p < pauses.size(); ++p) {
      auto& slot = aligned[at[p]];
      slot = std::max(slot.value_or(0.0), pauses[p].reported_duration_s);
    }
    for (std::size_t k = 0; k < tokens.size(); ++k) {
      if (aligned[k]) tokens[k].pause_before_s = *aligned[k];
    }
  }
  for (const auto& t : tokens) {
    if (!(t.pause_before_s >= 0.0)) {
      throw SchemaError("pause_before_s must be non-negative for token '" + t.surface + "'");
    }
  }

  std::vector<std::string> words;
  words.reserve(tokens.size());
  for (const auto& t : tokens) words.push_back(t.surface);

  auto long_pause = [&](std::size_t k) {
    return round_to_tenth(tokens[k].pause_before_s) >= kFragmentPauseThreshold_s;
  };
  auto utterance_initial = [&](std::size_t k) {
    if (k == 0) return true;
    const auto& t = tokens[k];
    const auto& prev = tokens[k - 1];
    return t.flags.has(TokenFlag::UtteranceInitial) || t.flags.has(TokenFlag::TurnInitial) ||
           t.speaker != prev.speaker || prev.boundary != Boundary::None || long_pause(k);
  };

  std::vector<SpeechFragment> out;
  std::size_t k = 0;
  while (k < tokens.size()) {
    const bool initial = utterance_initial(k);
    const auto match = lexicon.longest_match(words, k);
    std::optional<InitialClass> cls;
    std::size_t span_len = 1;
    std::optional<CueEntry> cue;
    std::optional<CueEntry> form;

    if (match) {
      const auto span = std::span<const AnnotatedToken>(tokens).subspan(k, match->length);
      switch (match->entry.token_class) {
        case LexicalClass::Cue: {
          CueContext ctx;
          ctx.utterance_initial = initial;
          ctx.coordination = any_flag(span, TokenFlag::Coordination);
          ctx.own_intonational_phrase =
              any_flag(span, TokenFlag::OwnIntonationalPhrase) ||
              (initial && span.back().boundary != Boundary::None);
          for (const auto& t : span) ctx.accents.push_back(t.accent);
          if (judge_cue_use(match->entry, ctx).is_cue) {
            cls = InitialClass::CuePhrase;
            cue = match->entry;
            span_len = match->length;
          }
          break;
        }
        case LexicalClass::Acknowledgment:
          if (initial) {
            cls = InitialClass::Acknowledgment;
            form = match->entry;
            span_len = match->length;
          }
          break;
        case LexicalClass::FilledPause:
          cls = InitialClass::FilledPause;
          form = match->entry;
          span_len = match->length;
          break;
      }
    }
    if (!cls && long_pause(k)) cls = InitialClass::UnfilledPause;
    if (!cls && initial) cls = InitialClass::Unmarked;

    if (cls) {
      SpeechFragment f;
      f.index = out.size();
      f.speaker = tokens[k].speaker;
      f.token_begin = k;
      f.initial_class = *cls;
      f.initial_cue = std::move(cue);
      f.initial_form = std::move(form);
      f.initial_span = span_len;
      f.pause_before_s = tokens[k].pause_before_s;
      out.push_back(std::move(f));
    }
    // k == 0 always opens a fragment, so out is nonempty here
    for (std::size_t s = 0; s < span_len; ++s) out.back().tokens.push_back(tokens[k + s]);
    k += span_len;
  }
  return out;
}

std::vector<PauseRecord> label_pause_positions(std::span<const AnnotatedToken> transcript,
                                               std::span<const PauseRecord> pauses,
                                               std::span<const SpeechFragment> fragments) {
  const auto at = align_pauses(transcript, pauses);
  std::vector<PauseRecord> out(pauses.begin(), pauses.end());
  for (std::size_t p = 0; p < out.size(); ++p) {
    const bool opens = std::any_of(fragments.begin(), fragments.end(),
                                   [&](const SpeechFragment& f) { return f.token_begin == at[p]; });
    out[p].position = opens ? PausePosition::FragmentInitial : PausePosition::FragmentInternal;
  }
  return out;
}

std::vector<AnnotatedToken> flatten(std::span<const SpeechFragment> fragments) {
  std::vector<AnnotatedToken> out;
  for (const auto& f : fragments) out.insert(out.end(), f.tokens.begin(), f.tokens.end());
  return out;
}

std::vector<FunctionLabels> function_labels(std::span<const SpeechFragment> fragments) {
  std::vector<FunctionLabels> out;
  out.reserve(fragments.size());
  for (const auto& f : fragments) {
    FunctionLabels l;
    const auto& head = f.tokens.front();
    if (head.prior_function) l.prior = *head.prior_function;
    if (head.subsequent_function) l.subsequent = *head.subsequent_function;
    out.push_back(l);
  }
  return out;
}

std::vector<TurnPosition> turn_positions(std::span<const SpeechFragment> fragments) {
  std::vector<TurnPosition> out;
  out.reserve(fragments.size());
  for (std::size_t i = 0; i < fragments.size(); ++i) {
    const bool changed = i == 0 || fragments[i].speaker != fragments[i - 1].speaker;
    const bool flagged = fragments[i].tokens.front().flags.has(TokenFlag::TurnInitial);
    out.push_back(changed || flagged ? TurnPosition::Initiating : TurnPosition::Continuing);
  }
  return out;
}

std::vector<CodedRecord> code(std::span<const SpeechFragment> fragments,
                              std::span<const TraceStep> trace, const TreeBuild& tree,
                              std::span<const FunctionLabels> functions,
                              std::span<const TurnPosition> turns) {
  const std::size_t n = fragments.size();
  if (trace.size() != n || functions.size() != n || turns.size() != n ||
      tree.active_space.size() != n || tree.segments_affected.size() != n) {
    std::ostringstream os;
    os << "per-fragment inputs disagree: " << n << " fragments, " << trace.size()
       << " operations, " << tree.active_space.size() << " tree steps, " << functions.size()
       << " function labels, " << turns.size() << " turn positions";
    throw LengthMismatch(os.str());
  }

  std::vector<CodedRecord> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const SpeechFragment& f = fragments[i];
    if (trace[i].fragment_index != static_cast<int>(f.index)) {
      throw LengthMismatch("operation " + std::to_string(i) + " is for fragment " +
                           std::to_string(trace[i].fragment_index) + ", expected " +
                           std::to_string(f.index));
    }
    const auto& active = tree.active_space[i];
    if (!active) {
      throw Error("fragment " + std::to_string(f.index) + " follows the close of the discourse");
    }
    CodedRecord r;
    r.fragment_index = f.index;
    r.pause_before_s = f.pause_before_s;
    r.initial_constituent = constituent_of(f.initial_class);
    if (f.initial_cue) {
      r.initial_token = f.initial_cue->surface;
    } else if (f.initial_form) {
      r.initial_token = f.initial_form->surface;
    }
    r.operation = trace[i].op;
    r.embedding_depth = tree.tree.depth(*active);
    r.segments_affected = tree.segments_affected[i];
    r.prior_function = functions[i].prior;
    r.subsequent_function = functions[i].subsequent;
    r.turn_position = turns[i];
    r.marked = is_marked(r.initial_constituent);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace focusseg
