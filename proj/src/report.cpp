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


#include "focusseg/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "focusseg/errors.hpp"
#include "json.hpp"

namespace focusseg {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string pad_left(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

std::string p_text(double p) {
  if (p < 0.0001) return "p < 0.0001";
  return "p = " + fmt("%.4f", p);
}

std::string stat_text(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt("%.4f", v);
}

std::size_t label_width(const std::vector<std::string>& rows, std::size_t min) {
  std::size_t w = min;
  for (const auto& r : rows) w = std::max(w, r.size());
  return w + 2;
}

// "0.43  3" style cell, "--" when absent.
std::string mean_count(const std::optional<CellSummary>& c) {
  if (!c) return "--";
  return fmt("%.2f", c->mean) + " " + pad_left(std::to_string(c->count), 3);
}

void render_grouped(std::ostringstream& os, const GroupedMeans& g, const std::string& corner) {
  const std::size_t lw = label_width(g.rows(), corner.size());
  constexpr std::size_t cw = 10;
  os << pad_right(corner, lw);
  for (const auto& c : g.cols()) os << pad_left(c, cw);
  os << pad_left(kAllColumn, cw) << "\n";
  auto row_line = [&](const std::string& label, auto cell_of, const CellSummary& margin) {
    os << pad_right(label, lw);
    for (const auto& c : g.cols()) os << pad_left(mean_count(cell_of(c)), cw);
    os << pad_left(margin.count == 0 ? "--" : mean_count(margin), cw) << "\n";
  };
  for (const auto& r : g.rows()) {
    row_line(r, [&](const std::string& c) { return g.cell(r, c); }, g.row_margin(r));
  }
  row_line(
      kAllColumn,
      [&](const std::string& c) -> std::optional<CellSummary> {
        auto m = g.col_margin(c);
        if (m.count == 0) return std::nullopt;
        return m;
      },
      g.grand());
}

void render_counts(std::ostringstream& os, const CountPanel& p, const std::string& corner) {
  const std::size_t lw = label_width(p.rows(), corner.size());
  constexpr std::size_t cw = 10;
  os << pad_right(corner, lw);
  for (const auto& c : p.cols()) os << pad_left(c, cw);
  os << "\n";
  for (const auto& r : p.rows()) {
    os << pad_right(r, lw);
    for (const auto& c : p.cols()) os << pad_left(std::to_string(p.count(r, c)), cw);
    os << "\n";
  }
  os << pad_right(kAllColumn, lw);
  for (const auto& c : p.cols()) os << pad_left(std::to_string(p.col_total(c)), cw);
  os << "\n";
}

ordered_json summary_json(const CellSummary& c) {
  ordered_json j;
  j["count"] = c.count;
  j["mean"] = c.mean;
  j["sd"] = c.sd ? ordered_json(*c.sd) : ordered_json(nullptr);
  return j;
}

ordered_json grouped_json(const GroupedMeans& g) {
  ordered_json j;
  j["rows"] = g.rows();
  j["cols"] = g.cols();
  ordered_json cells = ordered_json::array();
  for (const auto& r : g.rows()) {
    for (const auto& c : g.cols()) {
      if (auto cell = g.cell(r, c)) {
        auto e = summary_json(*cell);
        e["row"] = r;
        e["col"] = c;
        cells.push_back(e);
      }
    }
  }
  j["cells"] = cells;
  ordered_json rows = ordered_json::object();
  for (const auto& r : g.rows()) rows[r] = summary_json(g.row_margin(r));
  ordered_json cols = ordered_json::object();
  for (const auto& c : g.cols()) cols[c] = summary_json(g.col_margin(c));
  j["row_margins"] = rows;
  j["col_margins"] = cols;
  j["grand"] = summary_json(g.grand());
  return j;
}

ordered_json counts_json(const CountPanel& p) {
  ordered_json j;
  j["rows"] = p.rows();
  j["cols"] = p.cols();
  ordered_json counts = ordered_json::object();
  for (const auto& r : p.rows()) {
    ordered_json row = ordered_json::object();
    for (const auto& c : p.cols()) row[c] = p.count(r, c);
    counts[r] = row;
  }
  j["counts"] = counts;
  ordered_json totals = ordered_json::object();
  for (const auto& c : p.cols()) totals[c] = p.col_total(c);
  j["col_totals"] = totals;
  j["total"] = p.total();
  return j;
}

}  // namespace

StatsReport build_report(std::span<const CodedRecord> records, const ReportOptions& options) {
  if (records.empty()) throw DegenerateInput("no coded records to analyze");
  const CueLexicon& lexicon = options.lexicon ? *options.lexicon : CueLexicon::replication();

  StatsReport rep;
  rep.record_count = records.size();
  rep.excluded_missing_pause = options.excluded_missing_pause;
  rep.config = options.config;
  if (options.pause_inventory) {
    rep.distributions = table_distributions(records, std::span<const PauseRecord>(*options.pause_inventory), lexicon);
  } else {
    rep.distributions = table_distributions(records, std::nullopt, lexicon);
  }
  rep.by_operation = mean_pause_by_operation(records);
  rep.by_token = mean_pause_by_token_and_operation(records, lexicon);
  rep.by_marking = marked_unmarked_table(records);

  std::vector<std::vector<double>> by_op(kAllOpKinds.size());
  std::vector<double> pauses, segments, depths, marked, unmarked;
  for (const CodedRecord& r : records) {
    by_op[static_cast<std::size_t>(r.operation.kind)].push_back(r.pause_before_s);
    pauses.push_back(r.pause_before_s);
    segments.push_back(r.segments_affected);
    depths.push_back(r.embedding_depth);
    (r.marked ? marked : unmarked).push_back(r.pause_before_s);
  }

  std::vector<std::vector<double>> groups;
  for (auto& g : by_op) {
    if (!g.empty()) groups.push_back(std::move(g));
  }
  auto attempt = [&](const char* what, auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      rep.notes.push_back(std::string(what) + " not computed: " + e.what());
    }
  };
  attempt("ANOVA", [&] { rep.anova = anova_one_way(groups); });
  attempt("segments correlation", [&] { rep.segments_corr = pearson(pauses, segments); });
  attempt("depth correlation", [&] { rep.depth_corr = pearson(pauses, depths); });
  attempt("t-test", [&] { rep.marking_t = t_test_pooled(unmarked, marked); });

  if (rep.anova && rep.anova->degenerate) {
    rep.notes.push_back("ANOVA: all pauses equal, F taken as 0 and p as 1");
  }
  if (rep.anova && (rep.anova->df_between != kReferenceAnovaDfBetween ||
                    rep.anova->df_within != kReferenceAnovaDfWithin)) {
    rep.notes.push_back("ANOVA df (" + std::to_string(rep.anova->df_between) + "," +
                        std::to_string(rep.anova->df_within) +
                        ") differs from the reference F(3,96)");
  }
  if (rep.marking_t && rep.marking_t->df != kReferenceTDf) {
    rep.notes.push_back("pooled t-test df is " + std::to_string(rep.marking_t->df) +
                        " (n_a + n_b - 2 = " + std::to_string(rep.marking_t->n_a) + " + " +
                        std::to_string(rep.marking_t->n_b) +
                        " - 2); the reference analysis reports T(96) for this comparison");
  }
  rep.notes.push_back(
      "token positions are derived from the operation: Retain is segment-internal, "
      "all other operations segment-initial");
  const auto& hist = rep.distributions.pauses;
  const std::size_t measured = hist.initial.n + hist.internal.n;
  if (!rep.distributions.pauses_from_records && measured != records.size()) {
    rep.notes.push_back("pause inventory holds " + std::to_string(measured) +
                        " positioned pauses for " + std::to_string(records.size()) +
                        " coded fragments");
  }
  if (hist.unpositioned > 0) {
    rep.notes.push_back(std::to_string(hist.unpositioned) +
                        " inventory pauses without a position were skipped");
  }
  if (rep.excluded_missing_pause > 0) {
    rep.notes.push_back(std::to_string(rep.excluded_missing_pause) +
                        " records without a measured pause were excluded");
  }
  return rep;
}

std::string render_text(const StatsReport& r) {
  std::ostringstream os;
  os << "focusseg statistics report\n";
  os << "records: " << r.record_count << " (excluded without pause: " << r.excluded_missing_pause
     << ")\n\n";

  os << "Focusing operations by marking (counts)\n";
  render_counts(os, r.distributions.operations, "operation");
  os << "\nFragment-initial tokens by position (counts)\n";
  render_counts(os, r.distributions.tokens, "token");

  const auto& h = r.distributions.pauses;
  os << "\nUnfilled pauses by reported duration (counts"
     << (r.distributions.pauses_from_records ? ", from coded records" : ", from pause inventory")
     << ")\n";
  os << pad_right("seconds", 9) << pad_left("initial", 10) << pad_left("internal", 10) << "\n";
  for (const auto& [tenths, counts] : h.bins) {
    os << pad_right(fmt("%.1f", tenths / 10.0), 9) << pad_left(std::to_string(counts.first), 10)
       << pad_left(std::to_string(counts.second), 10) << "\n";
  }
  os << pad_right(kAllColumn, 9) << pad_left(std::to_string(h.initial.n), 10)
     << pad_left(std::to_string(h.internal.n), 10) << "\n";
  os << pad_right("average", 9)
     << pad_left(h.initial.n ? fmt("%.3f", h.initial.mean) : "--", 10)
     << pad_left(h.internal.n ? fmt("%.3f", h.internal.mean) : "--", 10) << "\n";

  os << "\nMean pause by focusing operation (seconds)\n";
  os << pad_right("operation", 11) << pad_left("n", 5) << pad_left("mean", 9) << pad_left("sd", 9)
     << "\n";
  for (const auto& row : r.by_operation.rows()) {
    const CellSummary c = r.by_operation.row_margin(row);
    os << pad_right(row, 11) << pad_left(std::to_string(c.count), 5)
       << pad_left(c.count ? fmt("%.4f", c.mean) : "--", 9)
       << pad_left(c.sd ? fmt("%.4f", *c.sd) : "--", 9) << "\n";
  }

  os << "\nMean pause by initial token and operation (mean, n)\n";
  render_grouped(os, r.by_token, "token");
  os << "\nMean pause by marking and operation (mean, n)\n";
  render_grouped(os, r.by_marking, "fragment");
  os << "\n";
  const CellSummary mk = r.by_marking.row_margin(kMarkedRow);
  const CellSummary um = r.by_marking.row_margin(kUnmarkedRow);
  os << "marked sd " << (mk.sd ? fmt("%.2f", *mk.sd) : "--") << ", unmarked sd "
     << (um.sd ? fmt("%.2f", *um.sd) : "--") << "\n";

  os << "\nTests\n";
  if (r.anova) {
    os << "one-way ANOVA, pause by operation: F(" << r.anova->df_between << ","
       << r.anova->df_within << ") = " << stat_text(r.anova->F) << ", " << p_text(r.anova->p)
       << "\n";
  }
  if (r.segments_corr) {
    os << "Pearson, pause vs segments affected: r = " << stat_text(r.segments_corr->r)
       << ", n = " << r.segments_corr->n << ", " << p_text(r.segments_corr->p) << "\n";
  }
  if (r.depth_corr) {
    const double t = r.depth_corr->t;
    os << "Pearson, pause vs embedding depth: r = " << stat_text(r.depth_corr->r) << ", F(1,"
       << r.depth_corr->n - 2 << ") = " << stat_text(t * t) << ", " << p_text(r.depth_corr->p)
       << "\n";
  }
  if (r.marking_t) {
    os << "pooled t-test, unmarked vs marked: t(" << r.marking_t->df
       << ") = " << stat_text(r.marking_t->t) << ", " << p_text(r.marking_t->p) << "\n";
  }

  if (!r.notes.empty()) {
    os << "\nNotes\n";
    for (const auto& n : r.notes) os << "- " << n << "\n";
  }
  if (!r.config.empty()) {
    os << "\nConfig\n";
    for (const auto& [k, v] : r.config) os << k << " = " << v << "\n";
  }
  return os.str();
}

std::string render_json(const StatsReport& r) {
  ordered_json j;
  j["schema_version"] = 1;
  j["record_count"] = r.record_count;
  j["excluded_missing_pause"] = r.excluded_missing_pause;

  ordered_json dist;
  dist["operations"] = counts_json(r.distributions.operations);
  dist["tokens"] = counts_json(r.distributions.tokens);
  ordered_json hist;
  hist["source"] = r.distributions.pauses_from_records ? "records" : "inventory";
  ordered_json bins = ordered_json::array();
  for (const auto& [tenths, counts] : r.distributions.pauses.bins) {
    bins.push_back({{"seconds", tenths / 10.0}, {"initial", counts.first}, {"internal", counts.second}});
  }
  hist["bins"] = bins;
  hist["initial"] = summary_json(summarize(r.distributions.pauses.initial));
  hist["internal"] = summary_json(summarize(r.distributions.pauses.internal));
  dist["pauses"] = hist;
  j["distributions"] = dist;

  j["by_operation"] = grouped_json(r.by_operation);
  j["by_token"] = grouped_json(r.by_token);
  j["by_marking"] = grouped_json(r.by_marking);

  ordered_json tests = ordered_json::object();
  if (r.anova) {
    tests["anova"] = {{"F", r.anova->F},
                      {"df_between", r.anova->df_between},
                      {"df_within", r.anova->df_within},
                      {"p", r.anova->p},
                      {"degenerate", r.anova->degenerate}};
  }
  if (r.segments_corr) {
    tests["segments_correlation"] = {
        {"r", r.segments_corr->r}, {"n", r.segments_corr->n}, {"p", r.segments_corr->p}};
  }
  if (r.depth_corr) {
    const double t = r.depth_corr->t;
    tests["depth_correlation"] = {{"r", r.depth_corr->r},
                                  {"n", r.depth_corr->n},
                                  {"F", t * t},
                                  {"df_within", r.depth_corr->n - 2},
                                  {"p", r.depth_corr->p}};
  }
  if (r.marking_t) {
    const auto& t = *r.marking_t;
    tests["marking_t_test"] = {{"t", t.t},           {"df", t.df},         {"p", t.p},
                               {"mean_unmarked", t.mean_a}, {"mean_marked", t.mean_b},
                               {"sd_unmarked", t.sd_a},     {"sd_marked", t.sd_b},
                               {"n_unmarked", t.n_a},       {"n_marked", t.n_b}};
  }
  j["tests"] = tests;
  j["notes"] = r.notes;
  ordered_json cfg = ordered_json::object();
  for (const auto& [k, v] : r.config) cfg[k] = v;
  j["config"] = cfg;
  return j.dump(2) + "\n";
}

}  // namespace focusseg
