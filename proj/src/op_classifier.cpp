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

#include "focusseg/op_classifier.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "embedded_data.hpp"
#include "focusseg/errors.hpp"

namespace focusseg {

namespace {

constexpr std::array<EvidenceSource, 3> kSources = {
    EvidenceSource::Prior, EvidenceSource::Current, EvidenceSource::Subsequent};

constexpr std::array<Feature, 17> kFeatures = {
    Feature::FallingFinal,       Feature::ContinuationRise,
    Feature::Acknowledgment,     Feature::LexicalClosure,
    Feature::Pronominalization,  Feature::ReducedRange,
    Feature::NonstandardPhonation, Feature::ManyLstar,
    Feature::RelativeClause,     Feature::CueNowYknowOrdinal,
    Feature::NonpronominalRepetition, Feature::ExpandedRange,
    Feature::NormalPhonationReturn, Feature::CueSoBut,
    Feature::Prompt,             Feature::CreakyFinal,
    Feature::CueSoButNowSubsequent,
};

std::size_t slot(OpKind k) { return static_cast<std::size_t>(k); }

// --- fragment feature detectors -------------------------------------------

bool any_token(const SpeechFragment& f, auto pred) {
  return std::any_of(f.tokens.begin(), f.tokens.end(), pred);
}

bool has_flag(const SpeechFragment& f, TokenFlag flag) {
  return any_token(f, [flag](const AnnotatedToken& t) { return t.flags.has(flag); });
}

bool falling_final(const SpeechFragment& f) { return f.tokens.back().boundary == Boundary::Fall; }

bool continuation_rise(const SpeechFragment& f) {
  return f.tokens.back().boundary == Boundary::ContinuationRise;
}

bool pitch(const SpeechFragment& f, PitchRange r) {
  return any_token(f, [r](const AnnotatedToken& t) { return t.pitch_range == r; });
}

bool any_creaky(const SpeechFragment& f) {
  return any_token(f, [](const AnnotatedToken& t) { return t.phonation == Phonation::Creaky; });
}

bool creaky_final(const SpeechFragment& f) {
  return f.tokens.back().phonation == Phonation::Creaky;
}

bool creaky_nonfinal(const SpeechFragment& f) {
  for (std::size_t i = 0; i + 1 < f.tokens.size(); ++i) {
    if (f.tokens[i].phonation == Phonation::Creaky) return true;
  }
  return false;
}

// normal voice resumes after creak in the preceding fragment
bool normal_phonation_after(const SpeechFragment* before, const SpeechFragment& f) {
  return before != nullptr && any_creaky(*before) && !any_creaky(f);
}

bool many_lstar(const SpeechFragment& f, double proportion) {
  std::size_t accented = 0;
  std::size_t lstar = 0;
  for (const auto& t : f.tokens) {
    if (t.accent == Accent::Hstar || t.accent == Accent::Lstar) ++accented;
    if (t.accent == Accent::Lstar) ++lstar;
  }
  return accented > 0 &&
         static_cast<double>(lstar) > proportion * static_cast<double>(accented);
}

bool cue_is(const SpeechFragment& f, std::initializer_list<std::string_view> surfaces) {
  if (!f.initial_cue) return false;
  return std::find(surfaces.begin(), surfaces.end(), f.initial_cue->surface) != surfaces.end();
}

bool ordinal_cue(const SpeechFragment& f) {
  return f.initial_cue && f.initial_cue->ordinal_rank.has_value();
}

std::string topic_of(const SpeechFragment& f) {
  for (const auto& t : f.tokens) {
    if (!t.topic.empty()) return t.topic;
  }
  return {};
}

}  // namespace

std::string_view to_string(EvidenceSource s) {
  switch (s) {
    case EvidenceSource::Prior: return "prior";
    case EvidenceSource::Current: return "current";
    case EvidenceSource::Subsequent: return "subsequent";
  }
  return "?";
}

std::string_view to_string(Feature f) {
  switch (f) {
    case Feature::FallingFinal: return "falling_final";
    case Feature::ContinuationRise: return "continuation_rise";
    case Feature::Acknowledgment: return "acknowledgment";
    case Feature::LexicalClosure: return "lexical_closure";
    case Feature::Pronominalization: return "pronominalization";
    case Feature::ReducedRange: return "reduced_range";
    case Feature::NonstandardPhonation: return "nonstandard_phonation";
    case Feature::ManyLstar: return "many_Lstar";
    case Feature::RelativeClause: return "relative_clause";
    case Feature::CueNowYknowOrdinal: return "cue_now_yknow_ordinal";
    case Feature::NonpronominalRepetition: return "nonpronominal_repetition";
    case Feature::ExpandedRange: return "expanded_range";
    case Feature::NormalPhonationReturn: return "normal_phonation_return";
    case Feature::CueSoBut: return "cue_so_but";
    case Feature::Prompt: return "prompt";
    case Feature::CreakyFinal: return "creaky_final";
    case Feature::CueSoButNowSubsequent: return "cue_so_but_now_subsequent";
  }
  return "?";
}

std::string_view to_string(Primitive p) {
  switch (p) {
    case Primitive::Push: return "push";
    case Primitive::Pop: return "pop";
    case Primitive::Null: return "null";
    case Primitive::ImpendingPop: return "impending_pop";
  }
  return "?";
}

std::optional<Primitive> primitive_for(EvidenceSource source, Feature feature) {
  using F = Feature;
  switch (source) {
    case EvidenceSource::Prior:
      switch (feature) {
        case F::FallingFinal:
        case F::Acknowledgment:
        case F::LexicalClosure: return Primitive::Pop;
        case F::ContinuationRise: return Primitive::Null;
        default: return std::nullopt;
      }
    case EvidenceSource::Current:
      switch (feature) {
        case F::Pronominalization:
        case F::ReducedRange:
        case F::NonstandardPhonation:
        case F::ManyLstar:
        case F::RelativeClause:
        case F::CueNowYknowOrdinal: return Primitive::Push;
        case F::NonpronominalRepetition:
        case F::ExpandedRange:
        case F::NormalPhonationReturn:
        case F::CueSoBut: return Primitive::Pop;
        case F::FallingFinal:
        case F::Acknowledgment:
        case F::Prompt:
        case F::LexicalClosure:
        case F::CreakyFinal: return Primitive::ImpendingPop;
        default: return std::nullopt;
      }
    case EvidenceSource::Subsequent:
      switch (feature) {
        case F::NonpronominalRepetition:
        case F::ExpandedRange:
        case F::NormalPhonationReturn:
        case F::CueSoButNowSubsequent: return Primitive::Pop;
        default: return std::nullopt;
      }
  }
  return std::nullopt;
}

OpSet supported_ops(EvidenceSource source, Primitive primitive) {
  switch (primitive) {
    case Primitive::Push: return {OpKind::Initiate, OpKind::Replace};
    case Primitive::Pop:
      // closing the segment that holds the prior speech starts a new one
      if (source == EvidenceSource::Prior) return {OpKind::Replace};
      return {OpKind::Return, OpKind::Replace};
    case Primitive::Null:
    case Primitive::ImpendingPop: return {OpKind::Retain};
  }
  return {};
}

int disruption_rank(OpKind kind) {
  switch (kind) {
    case OpKind::Retain: return 0;
    case OpKind::Initiate: return 1;
    case OpKind::Return: return 2;
    case OpKind::Replace: return 3;
  }
  return 4;
}

// --- configuration ---------------------------------------------------------

double ClassifierConfig::weight(EvidenceSource s, Feature f) const {
  auto it = weights.find({s, f});
  return it == weights.end() ? 1.0 : it->second;
}

ClassifierConfig ClassifierConfig::defaults() {
  static const ClassifierConfig config = [] {
    std::istringstream in{std::string(embedded::default_weights())};
    return parse(in);
  }();
  return config;
}

ClassifierConfig ClassifierConfig::parse(std::istream& in) {
  ClassifierConfig c;
  std::string line;
  std::size_t line_no = 0;
  auto number = [&](const std::string& text) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception&) {
      throw SchemaError("bad number '" + text + "'", line_no);
    }
    if (used != text.size()) throw SchemaError("bad number '" + text + "'", line_no);
    if (v < 0) throw SchemaError("weights must be non-negative", line_no);
    return v;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) return std::string();
      const auto e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw SchemaError("expected key = value", line_no);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "cue_bonus") {
      c.cue_bonus = number(value);
    } else if (key == "lookahead_bonus") {
      c.lookahead_bonus = number(value);
    } else if (key == "many_lstar_proportion") {
      c.many_lstar_proportion = number(value);
      if (c.many_lstar_proportion > 1.0) {
        throw SchemaError("many_lstar_proportion must be in [0, 1]", line_no);
      }
    } else if (key.rfind("weight.", 0) == 0) {
      const std::string rest = key.substr(7);
      const auto dot = rest.find('.');
      if (dot == std::string::npos) throw SchemaError("bad weight key '" + key + "'", line_no);
      const std::string src = rest.substr(0, dot);
      const std::string feat = rest.substr(dot + 1);
      std::optional<EvidenceSource> s;
      std::optional<Feature> f;
      for (auto cand : kSources) {
        if (to_string(cand) == src) s = cand;
      }
      for (auto cand : kFeatures) {
        if (to_string(cand) == feat) f = cand;
      }
      if (!s || !f || !primitive_for(*s, *f)) {
        throw SchemaError("unknown evidence row '" + key + "'", line_no);
      }
      c.weights[{*s, *f}] = number(value);
    } else {
      throw SchemaError("unknown key '" + key + "'", line_no);
    }
  }
  return c;
}

ClassifierConfig ClassifierConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open weights file '" + path + "'");
  return parse(in);
}

std::string ClassifierConfig::to_text() const {
  std::ostringstream os;
  os << "cue_bonus = " << cue_bonus << "\n";
  os << "lookahead_bonus = " << lookahead_bonus << "\n";
  os << "many_lstar_proportion = " << many_lstar_proportion << "\n";
  for (auto s : kSources) {
    for (auto f : kFeatures) {
      if (!primitive_for(s, f)) continue;
      os << "weight." << to_string(s) << "." << to_string(f) << " = " << weight(s, f) << "\n";
    }
  }
  return os.str();
}

// --- evidence and classification ----------------------------------------------

std::vector<EvidenceItem> extract_evidence(const SpeechFragment* prior,
                                           const SpeechFragment& current,
                                           const SpeechFragment* subsequent,
                                           const ClassifierConfig& config) {
  std::vector<EvidenceItem> items;
  auto add = [&](EvidenceSource s, Feature f, bool present) {
    if (!present) return;
    const double w = config.weight(s, f);
    if (w <= 0.0) return;
    items.push_back({s, f, *primitive_for(s, f), w});
  };

  if (prior != nullptr) {
    const auto& p = *prior;
    add(EvidenceSource::Prior, Feature::FallingFinal, falling_final(p));
    add(EvidenceSource::Prior, Feature::Acknowledgment,
        p.initial_class == InitialClass::Acknowledgment);
    add(EvidenceSource::Prior, Feature::LexicalClosure, has_flag(p, TokenFlag::LexicalClosure));
    add(EvidenceSource::Prior, Feature::ContinuationRise, continuation_rise(p));
  }

  const auto& c = current;
  const auto cur = EvidenceSource::Current;
  add(cur, Feature::Pronominalization, has_flag(c, TokenFlag::Pronominal));
  add(cur, Feature::ReducedRange, pitch(c, PitchRange::Reduced));
  add(cur, Feature::NonstandardPhonation, creaky_nonfinal(c));
  add(cur, Feature::ManyLstar, many_lstar(c, config.many_lstar_proportion));
  add(cur, Feature::RelativeClause, has_flag(c, TokenFlag::RelativeClause));
  add(cur, Feature::CueNowYknowOrdinal, cue_is(c, {"now", "you know"}) || ordinal_cue(c));
  add(cur, Feature::NonpronominalRepetition, has_flag(c, TokenFlag::NonpronominalRepetition));
  add(cur, Feature::ExpandedRange, pitch(c, PitchRange::Expanded));
  add(cur, Feature::NormalPhonationReturn, normal_phonation_after(prior, c));
  add(cur, Feature::CueSoBut, cue_is(c, {"so", "but"}));
  add(cur, Feature::FallingFinal, falling_final(c));
  add(cur, Feature::Acknowledgment, c.initial_class == InitialClass::Acknowledgment);
  add(cur, Feature::Prompt, has_flag(c, TokenFlag::Prompt));
  add(cur, Feature::LexicalClosure, has_flag(c, TokenFlag::LexicalClosure));
  add(cur, Feature::CreakyFinal, creaky_final(c));

  if (subsequent != nullptr) {
    const auto& s = *subsequent;
    const auto sub = EvidenceSource::Subsequent;
    add(sub, Feature::NonpronominalRepetition, has_flag(s, TokenFlag::NonpronominalRepetition));
    add(sub, Feature::ExpandedRange, pitch(s, PitchRange::Expanded));
    add(sub, Feature::NormalPhonationReturn, normal_phonation_after(&c, s));
    add(sub, Feature::CueSoButNowSubsequent, cue_is(s, {"so", "but", "now"}));
  }
  return items;
}

Classification classify(std::span<const EvidenceItem> evidence, const ClassifyContext& context,
                        const ClassifierConfig& config) {
  Classification out;
  out.evidence_used.assign(evidence.begin(), evidence.end());

  std::array<double, 4> scores{};
  for (const EvidenceItem& item : evidence) {
    for (OpKind k : supported_ops(item.source, item.primitive).kinds()) {
      scores[slot(k)] += item.weight;
    }
    switch (item.primitive) {
      case Primitive::Push: out.push_evidence += item.weight; break;
      case Primitive::Pop: out.pop_evidence += item.weight; break;
      case Primitive::Null: out.null_evidence += item.weight; break;
      case Primitive::ImpendingPop:
        out.null_evidence += item.weight;
        out.impending_pop = true;
        break;
    }
  }
  const bool any_support =
      std::any_of(scores.begin(), scores.end(), [](double s) { return s > 0.0; });

  if (context.cue_candidates) {
    for (OpKind k : context.cue_candidates->kinds()) scores[slot(k)] *= config.cue_bonus;
  }
  if (context.impending_pop_pending) {
    scores[slot(OpKind::Return)] *= config.lookahead_bonus;
    scores[slot(OpKind::Replace)] *= config.lookahead_bonus;
  }

  auto better = [](const ScoredOperation& a, const ScoredOperation& b) {
    if (a.score != b.score) return a.score > b.score;
    return disruption_rank(a.operation.kind) < disruption_rank(b.operation.kind);
  };

  // unconstrained ranking, to report when feasibility changed the answer
  std::vector<ScoredOperation> all;
  for (OpKind k : kAllOpKinds) {
    all.push_back({{k, (k == OpKind::Return || k == OpKind::Replace) ? 1 : 0}, scores[slot(k)]});
  }
  std::sort(all.begin(), all.end(), better);

  const int depth = context.stack_depth;
  std::vector<ScoredOperation> feasible;
  feasible.push_back({FocusingOperation::initiate(), scores[slot(OpKind::Initiate)]});
  if (depth >= 1) {
    feasible.push_back({FocusingOperation::retain(), scores[slot(OpKind::Retain)]});
    feasible.push_back({FocusingOperation::replace(std::clamp(context.replace_pops, 1, depth)),
                        scores[slot(OpKind::Replace)]});
  }
  if (depth >= 2) {
    feasible.push_back(
        {FocusingOperation::return_to(std::clamp(context.return_pops, 1, depth - 1)),
         scores[slot(OpKind::Return)]});
  }
  std::sort(feasible.begin(), feasible.end(), better);

  out.alternatives = feasible;
  out.operation = feasible.front().operation;
  out.score = feasible.front().score;

  if (evidence.empty() || !any_support) {
    out.flags.emplace_back("no_evidence");
    out.low_confidence = true;
  } else if (feasible.size() > 1 && feasible[0].score == feasible[1].score) {
    // push-only evidence always ties Initiate with Replace, and pop-only
    // evidence Return with Replace; the cheaper reading is the intended one
    const OpKind a = feasible[0].operation.kind;
    const OpKind b = feasible[1].operation.kind;
    auto pair_is = [&](OpKind x, OpKind y) { return (a == x && b == y) || (a == y && b == x); };
    const bool expected = (pair_is(OpKind::Initiate, OpKind::Replace) && out.pop_evidence == 0.0) ||
                          (pair_is(OpKind::Return, OpKind::Replace) && out.push_evidence == 0.0);
    if (!expected) {
      out.flags.emplace_back("tie_break");
      out.low_confidence = true;
    }
  }
  if (any_support && all.front().operation.kind != out.operation.kind) {
    out.flags.emplace_back("infeasible_dropped");
    out.low_confidence = true;
  }
  if (out.push_evidence > 0.0 && out.null_evidence > 0.0) {
    out.flags.emplace_back("push_null_conflict");
  }
  return out;
}

Segmentation segment_discourse(std::span<const SpeechFragment> fragments,
                               const ClassifierConfig& config) {
  if (fragments.empty()) throw EmptyTranscript("no fragments to segment");
  Segmentation out;
  FocusStack stack;
  bool pending = false;

  for (std::size_t i = 0; i < fragments.size(); ++i) {
    const SpeechFragment& f = fragments[i];
    const SpeechFragment* prior = i > 0 ? &fragments[i - 1] : nullptr;
    const SpeechFragment* next = i + 1 < fragments.size() ? &fragments[i + 1] : nullptr;
    const auto evidence = extract_evidence(prior, f, next, config);

    ClassifyContext ctx;
    ctx.stack_depth = i == 0 ? 0 : static_cast<int>(stack.depth());
    ctx.impending_pop_pending = pending;
    if (f.initial_cue) ctx.cue_candidates = f.initial_cue->candidate_ops;

    const std::string topic = topic_of(f);
    if (!topic.empty() && has_flag(f, TokenFlag::NonpronominalRepetition)) {
      auto open = stack.open_spaces();
      for (std::size_t k = 0; k < open.size(); ++k) {
        const FocusSpace& space = open[open.size() - 1 - k];
        if (space.dsp_label != topic) continue;
        // return to just above the named space, or pop through it
        ctx.return_pops = k >= 1 ? static_cast<int>(k) : 1;
        ctx.replace_pops = static_cast<int>(k) + 1;
        break;
      }
    }

    Classification c = classify(evidence, ctx, config);
    if (i == 0) {
      // forced, so dropped or missing evidence says nothing about confidence
      std::erase_if(c.flags, [](const std::string& flag) {
        return flag == "infeasible_dropped" || flag == "no_evidence" || flag == "tie_break";
      });
      c.flags.insert(c.flags.begin(), "discourse_initial");
      c.low_confidence = false;
    }

    std::string label = topic.empty() ? f.text() : topic;
    stack = stack.apply(c.operation, static_cast<int>(f.index), label);
    out.trace.push_back({c.operation, static_cast<int>(f.index), std::move(label)});
    pending = c.impending_pop;
    out.classifications.push_back(std::move(c));
  }
  out.tree = build_tree(out.trace);
  return out;
}

}  // namespace focusseg
