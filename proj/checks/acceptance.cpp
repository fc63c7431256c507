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


#include "acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "corpus.hpp"
#include "focusseg/cue_lexicon.hpp"
#include "focusseg/distributions.hpp"
#include "focusseg/errors.hpp"
#include "focusseg/io.hpp"
#include "focusseg/pause_detect.hpp"
#include "focusseg/pipeline.hpp"
#include "focusseg/report.hpp"
#include "focusseg/stats.hpp"
#include "focusseg/tables.hpp"
#include "focusseg/wav.hpp"
#include "oracles.hpp"
#include "reference.hpp"

#ifndef FOCUSSEG_DATA_DIR
#define FOCUSSEG_DATA_DIR "data"
#endif

namespace focusseg::checks {

namespace {

class Checker {
 public:
  Checker(int id, std::string name) {
    r_.id = id;
    r_.name = std::move(name);
    r_.passed = true;
  }
  bool expect(bool ok, const std::string& what) {
    if (!ok) {
      r_.passed = false;
      r_.details.push_back("FAIL " + what);
    }
    return ok;
  }
  void note(const std::string& what) { r_.details.push_back("note " + what); }
  CheckResult done() { return std::move(r_); }

 private:
  CheckResult r_;
};

std::string num(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

double round2(double v) { return std::round(v * 100.0) / 100.0; }

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol + 1e-12; }

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

std::string op_name(OpKind k) { return std::string(to_string(k)); }

// --- 1 ----------------------------------------------------------------

CheckResult check_table_means(const std::vector<CodedRecord>& recs) {
  Checker c(1, "table-mean replication");
  const GroupedMeans by_token = mean_pause_by_token_and_operation(recs);
  std::set<std::pair<std::string, OpKind>> present;
  for (const auto& cell : reference::kTokenCells) {
    const std::string row(cell.row);
    present.insert({row, cell.op});
    const auto got = by_token.cell(row, op_name(cell.op));
    if (!c.expect(got.has_value(), row + " x " + op_name(cell.op) + " cell missing")) continue;
    c.expect(got->count == cell.count && close(round2(got->mean), cell.mean, 0.005),
             row + " x " + op_name(cell.op) + ": " + num(got->mean, 2) + " n=" +
                 std::to_string(got->count) + ", want " + num(cell.mean, 2) +
                 " n=" + std::to_string(cell.count));
  }
  for (const auto& m : reference::kTokenRowMargins) {
    for (OpKind k : kAllOpKinds) {
      if (present.count({std::string(m.row), k})) continue;
      c.expect(!by_token.cell(std::string(m.row), op_name(k)),
               std::string(m.row) + " x " + op_name(k) + " should be absent");
    }
    const CellSummary got = by_token.row_margin(std::string(m.row));
    c.expect(got.count == m.count && close(round2(got.mean), m.mean, 0.005),
             std::string(m.row) + " ALL: " + num(got.mean, 2) + " n=" + std::to_string(got.count) +
                 ", want " + num(m.mean, 2) + " n=" + std::to_string(m.count));
  }
  for (const auto& m : reference::kTokenColumnMargins) {
    const CellSummary got = by_token.col_margin(op_name(m.op));
    if (!close(round2(got.mean), m.mean, 0.005)) {
      c.note("ALL x " + op_name(m.op) + " rounds to " + num(got.mean, 2) + " against a printed " +
             num(m.mean, 2) + "; the per-operation means give " + num(got.mean, 4));
    }
  }

  const GroupedMeans by_op = mean_pause_by_operation(recs);
  for (const auto& m : reference::kOperationMeans) {
    const CellSummary got = by_op.row_margin(op_name(m.op));
    c.expect(got.count == m.count && close(got.mean, m.mean, 0.01),
             op_name(m.op) + " mean " + num(got.mean) + " n=" + std::to_string(got.count) +
                 ", want " + num(m.mean) + " +/- 0.01 n=" + std::to_string(m.count));
  }

  const GroupedMeans marking = marked_unmarked_table(recs);
  const CellSummary mk = marking.row_margin(kMarkedRow);
  const CellSummary um = marking.row_margin(kUnmarkedRow);
  c.expect(mk.count == reference::kMarkedCount && close(mk.mean, reference::kMarkedMean, 0.01),
           "marked ALL " + num(mk.mean) + " n=" + std::to_string(mk.count));
  c.expect(um.count == reference::kUnmarkedCount &&
               close(um.mean, reference::kUnmarkedMean, 0.01),
           "unmarked ALL " + num(um.mean) + " n=" + std::to_string(um.count));
  return c.done();
}

// --- 2 ----------------------------------------------------------------

CheckResult check_distributions(const std::vector<CodedRecord>& recs,
                                const std::vector<PauseRecord>& pauses) {
  Checker c(2, "distribution replication");
  const Distributions d = table_distributions(recs, std::span<const PauseRecord>(pauses));
  for (const auto& m : reference::kMarkingCounts) {
    const auto mk = d.operations.count(op_name(m.op), kMarkedRow);
    const auto um = d.operations.count(op_name(m.op), kUnmarkedRow);
    c.expect(mk == m.marked && um == m.unmarked,
             op_name(m.op) + " " + std::to_string(mk) + "/" + std::to_string(um) + ", want " +
                 std::to_string(m.marked) + "/" + std::to_string(m.unmarked));
  }
  c.expect(d.operations.total() == 100, "total " + std::to_string(d.operations.total()));

  for (const auto& t : reference::kTokenPositions) {
    const std::string row(t.row);
    const auto ini = d.tokens.count(row, "initial");
    const auto in = d.tokens.count(row, "internal");
    if (ini != t.initial || in != t.internal) {
      c.note(row + " position counts " + std::to_string(ini) + "/" + std::to_string(in) +
             " derived from operations; published " + std::to_string(t.initial) + "/" +
             std::to_string(t.internal));
    }
  }

  for (const auto& b : reference::kPauseBins) {
    auto it = d.pauses.bins.find(b.tenths);
    const auto got = it == d.pauses.bins.end() ? std::pair<std::size_t, std::size_t>{0, 0}
                                               : it->second;
    c.expect(got.first == b.initial && got.second == b.internal,
             "pause bin " + num(b.tenths / 10.0, 1) + " s: " + std::to_string(got.first) + "/" +
                 std::to_string(got.second));
  }
  c.expect(d.pauses.initial.n == 41 && d.pauses.internal.n == 62, "pause totals");
  c.expect(close(d.pauses.initial.mean, reference::kInitialPauseAverage, 0.01),
           "initial pause average " + num(d.pauses.initial.mean, 3));
  c.expect(close(d.pauses.internal.mean, reference::kInternalPauseAverage, 0.01),
           "internal pause average " + num(d.pauses.internal.mean, 3));
  return c.done();
}

// --- 3 ----------------------------------------------------------------

CheckResult check_test_dfs(const std::vector<CodedRecord>& recs,
                           const std::vector<PauseRecord>& pauses) {
  Checker c(3, "statistical-test df fidelity");
  ReportOptions opt;
  opt.pause_inventory = pauses;
  const StatsReport rep = build_report(recs, opt);

  if (c.expect(rep.anova.has_value(), "ANOVA computed")) {
    c.expect(rep.anova->df_between == reference::kAnovaDfBetween &&
                 rep.anova->df_within == reference::kAnovaDfWithin,
             "ANOVA df (" + std::to_string(rep.anova->df_between) + "," +
                 std::to_string(rep.anova->df_within) + ")");
    c.note("ANOVA F = " + num(rep.anova->F) + " on the reconstructed corpus; published " +
           num(reference::kAnovaF, 2) + " is not reproducible from cell means");
  }
  if (c.expect(rep.marking_t.has_value(), "t-test computed")) {
    const auto& t = *rep.marking_t;
    c.expect(t.df == t.n_a + t.n_b - 2 && t.df == 98, "t df " + std::to_string(t.df));
    const bool noted = std::any_of(rep.notes.begin(), rep.notes.end(), [](const std::string& n) {
      return n.find("T(96)") != std::string::npos;
    });
    c.expect(noted, "report notes the T(96) df discrepancy");
    c.expect(t.mean_a > t.mean_b, "unmarked mean " + num(t.mean_a) + " > marked mean " +
                                      num(t.mean_b));
    c.note("t = " + num(t.t) + ", p = " + num(t.p) + "; published T(96) = " +
           num(reference::kMarkingT, 2) + ", p = " + num(reference::kMarkingP, 2));
  }
  const double replace = rep.by_operation.row_margin(op_name(OpKind::Replace)).mean;
  for (OpKind k : {OpKind::Initiate, OpKind::Retain, OpKind::Return}) {
    const double other = rep.by_operation.row_margin(op_name(k)).mean;
    c.expect(replace > other, "Replace mean " + num(replace) + " > " + op_name(k) + " " + num(other));
  }
  if (c.expect(rep.segments_corr.has_value(), "segments correlation computed")) {
    c.expect(rep.segments_corr->r > 0, "r = " + num(rep.segments_corr->r, 3) + " positive");
    c.note("r = " + num(rep.segments_corr->r, 3) + "; published " + num(reference::kSegmentsR, 3));
  }
  if (c.expect(rep.depth_corr.has_value(), "depth correlation computed")) {
    c.expect(rep.depth_corr->n - 2 == reference::kDepthDfWithin,
             "depth F df (1," + std::to_string(rep.depth_corr->n - 2) + ")");
  }
  return c.done();
}

// --- 4 ----------------------------------------------------------------

CheckResult check_oracles() {
  Checker c(4, "statistics oracle equivalence");
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> value(0.0, 2.0);
  std::uniform_int_distribution<int> ngroups(2, 5);
  std::uniform_int_distribution<int> gsize(2, 9);
  constexpr int kDatasets = 200;
  int bad_anova = 0, bad_r = 0, bad_t = 0, bad_ft = 0;
  for (int d = 0; d < kDatasets; ++d) {
    std::vector<std::vector<double>> groups(ngroups(rng));
    for (auto& g : groups) {
      g.resize(gsize(rng));
      for (double& x : g) x = value(rng);
    }
    const AnovaResult a = anova_one_way(groups);
    const AnovaOracle o = oracle_anova(groups);
    if (!close_rel(a.F, o.F, 1e-9) || !close_rel(a.ss_between, o.ss_between, 1e-9) ||
        !close_rel(a.ss_within, o.ss_within, 1e-9)) {
      ++bad_anova;
    }

    std::vector<double> x(groups[0]);
    x.insert(x.end(), groups[1].begin(), groups[1].end());
    std::vector<double> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = 0.5 * x[i] + value(rng);
    if (!close(pearson(x, y).r, oracle_pearson(x, y), 1e-9)) ++bad_r;

    const TTestResult t = t_test_pooled(groups[0], groups[1]);
    if (!close_rel(t.t, oracle_pooled_t(groups[0], groups[1]), 1e-9)) ++bad_t;
    const AnovaResult two = anova_one_way({groups[0], groups[1]});
    if (!close_rel(two.F, t.t * t.t, 1e-9)) ++bad_ft;
  }
  c.expect(bad_anova == 0, std::to_string(bad_anova) + " ANOVA mismatches");
  c.expect(bad_r == 0, std::to_string(bad_r) + " Pearson mismatches");
  c.expect(bad_t == 0, std::to_string(bad_t) + " t-test mismatches");
  c.expect(bad_ft == 0, std::to_string(bad_ft) + " F != t^2 cases");

  double worst = 0.0;
  for (double f : {0.05, 0.5, 1.0, 2.0, 3.5, 7.31, 20.0}) {
    for (auto [d1, d2] : std::vector<std::pair<double, double>>{
             {1, 1}, {1, 10}, {2, 5}, {3, 96}, {5, 30}, {10, 10}}) {
      worst = std::max(worst, std::abs(f_cdf(f, d1, d2) - quadrature_f_cdf(f, d1, d2)));
      worst = std::max(worst, std::abs(1.0 - f_sf(f, d1, d2) - quadrature_f_cdf(f, d1, d2)));
    }
  }
  for (double t : {-4.0, -1.58, -0.5, 0.3, 1.0, 2.5, 6.0}) {
    for (double df : {1.0, 2.0, 5.0, 10.0, 30.0, 96.0, 98.0}) {
      worst = std::max(worst, std::abs(t_cdf(t, df) - quadrature_t_cdf(t, df)));
    }
  }
  c.expect(worst <= 1e-6, "CDF deviation from quadrature " + std::to_string(worst));
  return c.done();
}

// --- 5 ----------------------------------------------------------------

CheckResult check_stack_properties() {
  Checker c(5, "stack-engine property suite");
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<std::size_t> len(1, 60);
  int failures = 0;
  std::string first;
  for (int i = 0; i < 10000; ++i) {
    const auto ops = random_trace(rng, len(rng));
    std::vector<TraceStep> trace;
    for (std::size_t k = 0; k < ops.size(); ++k) trace.push_back({ops[k], static_cast<int>(k), ""});
    const NaiveReplay naive = naive_replay(ops);
    bool ok = naive.ok;
    try {
      const TreeBuild tb = build_tree(trace);
      ok = ok && static_cast<int>(tb.tree.size()) == naive.pushes;
      ok = ok && tb.depth_after == naive.depth_after;
      ok = ok && static_cast<int>(tb.final_stack.depth()) == naive.pushes - naive.pops;
      for (int id = 1; ok && id <= static_cast<int>(tb.tree.size()); ++id) {
        ok = tb.tree.depth(id) == naive.push_depth[id - 1] &&
             tb.tree.parent(id).value_or(0) == naive.push_parent[id - 1];
      }
    } catch (const Error& e) {
      ok = false;
      if (first.empty()) first = e.what();
    }
    if (!ok) {
      ++failures;
      if (first.empty()) first = "trace " + std::to_string(i) + " disagrees with the naive replay";
    }
  }
  c.expect(failures == 0, std::to_string(failures) + " of 10000 traces failed" +
                              (first.empty() ? "" : ": " + first));
  return c.done();
}

// --- 6 ----------------------------------------------------------------

std::string ops_text(const std::vector<TraceStep>& trace) {
  std::string out;
  for (const auto& s : trace) {
    if (!out.empty()) out += ", ";
    out += op_name(s.op.kind);
    if (s.op.pop_count) out += "(" + std::to_string(s.op.pop_count) + ")";
  }
  return out;
}

CheckResult check_worked_examples(const std::string& dir) {
  Checker c(6, "worked-example segmentation");
  {
    const auto tokens = read_transcript_file(dir + "/to_your_left.jsonl");
    const auto res = run_pipeline(tokens);
    const auto& t = res.trace;
    const bool ok = t.size() == 4 && t[1].op.kind == OpKind::Replace &&
                    t[2].op.kind == OpKind::Initiate && t[3].op.kind == OpKind::Initiate;
    c.expect(ok, "\"To your left\" passage: " + ops_text(t) +
                     ", want lead-in then Replace, Initiate, Initiate");
    int deepest = 0;
    for (int id = 1; id <= static_cast<int>(res.tree.tree.size()); ++id) {
      deepest = std::max(deepest, res.tree.tree.depth(id));
    }
    c.expect(deepest == 3, "tree depth " + std::to_string(deepest) + ", want 3");
  }
  {
    const auto tokens = read_transcript_file(dir + "/turn_left.jsonl");
    const auto res = run_pipeline(tokens);
    const auto& t = res.trace;
    const bool ok = t.size() == 4 && t[2].op == FocusingOperation::return_to(1) &&
                    t[3].op.kind == OpKind::Retain;
    c.expect(ok, "\"turn left\" passage: " + ops_text(t) + ", want ..., Return(1), Retain");
    if (ok) {
      const auto& flags = res.segmentation->classifications[3].flags;
      c.expect(std::find(flags.begin(), flags.end(), "push_null_conflict") != flags.end(),
               "Retain reading is flagged against the push evidence");
    }
  }
  return c.done();
}

// --- 7 ----------------------------------------------------------------

std::vector<PauseRecord> detect(const PcmAudio& audio,
                                std::optional<std::span<const WordSpan>> spans = std::nullopt) {
  std::stringstream wav;
  write_wav(wav, audio);
  wav.seekg(0);
  return detect_pauses(frame_energy(read_wav(wav)), spans);
}

CheckResult check_pause_detection() {
  Checker c(7, "pause detection");
  const std::vector<double> inserted{0.18, 0.42, 0.90, 2.0};
  const std::vector<double> want{0.2, 0.4, 0.9, 2.0};
  std::vector<Piece> pieces{{true, 0.5}};
  for (double s : inserted) {
    pieces.push_back({false, s});
    pieces.push_back({true, 0.5});
  }
  const PcmAudio audio = synth_audio(pieces);
  const auto found = detect(audio);
  if (c.expect(found.size() == want.size(), std::to_string(found.size()) + " pauses found, want 4")) {
    for (std::size_t i = 0; i < want.size(); ++i) {
      c.expect(close(found[i].reported_duration_s, want[i], 1e-9) &&
                   close(found[i].raw_duration_s, inserted[i], 0.05),
               "pause " + std::to_string(i) + " raw " + num(found[i].raw_duration_s, 3) +
                   " reported " + num(found[i].reported_duration_s, 1) + ", want " +
                   num(want[i], 1));
    }
  }
  for (double db : {12.0, -12.0}) {
    c.expect(detect(apply_gain(audio, db)) == found,
             "detection changes under " + num(db, 0) + " dB gain");
  }

  const PcmAudio closure = synth_audio({{true, 0.5}, {false, 0.06}, {true, 0.4}, {false, 0.3}, {true, 0.5}});
  const std::vector<WordSpan> spans{{0.3, 0.7}, {1.26, 1.7}};
  const auto with_spans = detect(closure, std::span<const WordSpan>(spans));
  c.expect(with_spans.size() == 1 && close(with_spans[0].reported_duration_s, 0.3, 1e-9),
           "word-internal 0.06 s silence excluded, " + std::to_string(with_spans.size()) +
               " pauses kept");
  const auto without = detect(closure);
  c.expect(without.size() == 2 && without[0].suspect && !without[1].suspect,
           "without word timing the 0.06 s silence is kept and flagged suspect");
  return c.done();
}

// --- 8 ----------------------------------------------------------------

CheckResult check_lexicon() {
  Checker c(8, "cue-lexicon conformance");
  const CueLexicon& lex = CueLexicon::replication();
  using K = OpKind;
  const std::vector<std::pair<std::string, std::set<K>>> mapping{
      {"and", {K::Retain, K::Return}},
      {"but", {K::Retain, K::Replace, K::Return}},
      {"i mean", {K::Initiate, K::Retain}},
      {"so", {K::Return, K::Replace}},
      {"because", {K::Initiate}},
      {"now", {K::Replace}},
      {"well", {K::Replace}},
      {"you know", {K::Retain, K::Initiate}},
      {"to begin with", {K::Initiate}},
      {"in the first place", {K::Initiate}},
      {"first of all", {K::Initiate}},
      {"secondly", {K::Replace}},
      {"finally", {K::Replace}},
  };
  for (const auto& [surface, want] : mapping) {
    const auto e = lex.lookup(surface);
    if (!c.expect(e.has_value(), "'" + surface + "' missing")) continue;
    const auto kinds = e->candidate_ops.kinds();
    c.expect(std::set<K>(kinds.begin(), kinds.end()) == want,
             "'" + surface + "' candidate set differs");
  }
  c.expect(lex.lookup("to begin with")->ordinal_rank == OrdinalRank::First,
           "'to begin with' ranks first");
  c.expect(lex.lookup("finally")->ordinal_rank == OrdinalRank::Subsequent,
           "'finally' ranks subsequent");
  c.expect(!lex.lookup("the"), "'the' is not a marker");

  CueContext coord;
  coord.utterance_initial = true;
  coord.coordination = true;
  coord.own_intonational_phrase = false;
  coord.accents = {Accent::Hstar};
  const auto j1 = judge_cue_use(*lex.lookup("and"), coord);
  c.expect(!j1.is_cue && j1.rule_fired == CueRule::ConjunctionTest,
           "coordinating 'and' judged " + std::string(to_string(j1.rule_fired)));

  CueContext deacc;
  deacc.utterance_initial = true;
  deacc.coordination = false;
  deacc.own_intonational_phrase = false;
  deacc.accents = {Accent::Deaccented};
  const auto j2 = judge_cue_use(*lex.lookup("now"), deacc);
  c.expect(j2.is_cue && j2.rule_fired == CueRule::Intonation,
           "deaccented initial 'now' judged " + std::string(to_string(j2.rule_fired)));
  return c.done();
}

}  // namespace

AcceptanceInputs default_inputs() {
  const std::string data = FOCUSSEG_DATA_DIR;
  return {data + "/replication_corpus.jsonl", data + "/replication_pauses.jsonl",
          data + "/fixtures"};
}

std::vector<CheckResult> run_acceptance(const AcceptanceInputs& inputs) {
  const auto coded = read_coded_file(inputs.corpus_path);
  const auto pauses = read_pauses_file(inputs.pauses_path);
  std::vector<CheckResult> out;
  out.push_back(check_table_means(coded.records));
  out.push_back(check_distributions(coded.records, pauses));
  out.push_back(check_test_dfs(coded.records, pauses));
  out.push_back(check_oracles());
  out.push_back(check_stack_properties());
  out.push_back(check_worked_examples(inputs.fixtures_dir));
  out.push_back(check_pause_detection());
  out.push_back(check_lexicon());
  return out;
}

std::string format_results(const std::vector<CheckResult>& results, bool verbose) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.passed ? "PASS" : "FAIL") << "  " << r.id << " " << r.name << "\n";
    for (const auto& d : r.details) {
      if (verbose || d.rfind("FAIL", 0) == 0) os << "      " << d << "\n";
    }
  }
  return os.str();
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace focusseg::checks
