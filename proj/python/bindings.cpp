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

// Python bindings. Records cross the boundary as the same JSON lines the
// CLI writes; the package wrapper parses them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "focusseg/errors.hpp"
#include "focusseg/focus_engine.hpp"
#include "focusseg/io.hpp"
#include "focusseg/pause_detect.hpp"
#include "focusseg/pipeline.hpp"
#include "focusseg/report.hpp"
#include "focusseg/stats.hpp"
#include "focusseg/wav.hpp"

namespace py = pybind11;
using namespace focusseg;

namespace {

template <class T, class W>
std::string to_jsonl(const std::vector<T>& items, W write) {
  std::ostringstream os;
  write(os, std::span<const T>(items));
  return os.str();
}

py::dict segment(const std::string& transcript, const std::optional<std::string>& pauses,
                 const std::optional<std::string>& lexicon, const std::optional<std::string>& weights) {
  const auto tokens = read_transcript_file(transcript);
  std::vector<PauseRecord> ps;
  if (pauses) ps = read_pauses_file(*pauses);
  const CueLexicon lex = lexicon ? CueLexicon::load_file(*lexicon) : CueLexicon::replication();
  const auto cfg = weights ? ClassifierConfig::load_file(*weights) : ClassifierConfig::defaults();
  const auto res = run_pipeline(tokens, ps, lex, cfg);
  py::dict out;
  out["tree"] = res.tree.tree.render_indented();
  out["trace"] = to_jsonl(res.trace, write_trace);
  out["records"] = to_jsonl(res.records, write_coded);
  std::ostringstream audit;
  if (res.segmentation) write_audit(audit, res.segmentation->classifications, res.fragments);
  out["audit"] = audit.str();
  return out;
}

std::string stats(const std::string& coded, const std::optional<std::string>& pauses,
                  const std::string& format) {
  if (format != "text" && format != "json") throw py::value_error("format must be text or json");
  const auto set = read_coded_file(coded);
  ReportOptions opt;
  opt.excluded_missing_pause = set.excluded_missing_pause;
  if (pauses) opt.pause_inventory = read_pauses_file(*pauses);
  const auto rep = build_report(set.records, opt);
  return format == "json" ? render_json(rep) : render_text(rep);
}

std::string pauses_from_wav(const std::string& wav, double threshold_db, double min_silence_s) {
  PauseConfig cfg;
  cfg.threshold_db = threshold_db;
  cfg.min_silence_s = min_silence_s;
  const auto frames = frame_energy(read_wav_file(wav));
  return to_jsonl(detect_pauses(frames, std::nullopt, cfg), write_pauses);
}

// Depth after each step of an (operation, pops) sequence.
std::vector<int> replay(const std::vector<std::pair<std::string, int>>& ops) {
  std::vector<TraceStep> trace;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    trace.push_back({{op_kind_from_string(ops[i].first), ops[i].second}, static_cast<int>(i), ""});
  }
  return build_tree(trace).depth_after;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "focus-space discourse segmentation";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<StackError>(m, "StackError", base.ptr());
  py::register_exception<SchemaError>(m, "SchemaError", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());
  py::register_exception<UnsupportedFormat>(m, "UnsupportedFormat", base.ptr());
  py::register_exception<DegenerateInput>(m, "DegenerateInput", base.ptr());
  py::register_exception<ZeroVariance>(m, "ZeroVariance", base.ptr());
  py::register_exception<LengthMismatch>(m, "LengthMismatch", base.ptr());

  m.def("segment", &segment, py::arg("transcript"), py::arg("pauses") = py::none(),
        py::arg("lexicon") = py::none(), py::arg("weights") = py::none());
  m.def("stats", &stats, py::arg("coded"), py::arg("pauses") = py::none(),
        py::arg("format") = "text");
  m.def("pauses_from_wav", &pauses_from_wav, py::arg("wav"), py::arg("threshold_db") = 10.0,
        py::arg("min_silence_s") = 0.05);
  m.def("replay", &replay, py::arg("ops"));
  m.def("segments_affected", [](const std::string& op, int pops) {
    return segments_affected({op_kind_from_string(op), pops});
  }, py::arg("op"), py::arg("pops") = 0);

  m.def("anova", [](const std::vector<std::vector<double>>& groups) {
    const auto r = anova_one_way(groups);
    return py::dict(py::arg("F") = r.F, py::arg("df_between") = r.df_between,
                    py::arg("df_within") = r.df_within, py::arg("p") = r.p,
                    py::arg("degenerate") = r.degenerate);
  });
  m.def("pearson", [](const std::vector<double>& x, const std::vector<double>& y) {
    const auto r = pearson(x, y);
    return py::dict(py::arg("r") = r.r, py::arg("n") = r.n, py::arg("p") = r.p, py::arg("t") = r.t);
  });
  m.def("t_test", [](const std::vector<double>& a, const std::vector<double>& b) {
    const auto r = t_test_pooled(a, b);
    return py::dict(py::arg("t") = r.t, py::arg("df") = r.df, py::arg("p") = r.p);
  });
}
