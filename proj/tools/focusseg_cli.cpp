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


// focusseg: pause detection, fragment coding, segmentation, statistics
// and the replication check from the command line.
//
// Exit codes: 0 success, 1 I/O error, 2 input or schema error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "acceptance.hpp"
#include "focusseg/errors.hpp"
#include "focusseg/io.hpp"
#include "focusseg/pause_detect.hpp"
#include "focusseg/pipeline.hpp"
#include "focusseg/report.hpp"
#include "focusseg/wav.hpp"

namespace fs = std::filesystem;
using namespace focusseg;

namespace {

constexpr int kOk = 0;
constexpr int kIoError = 1;
constexpr int kInputError = 2;

struct RunConfig {
  std::string input;
  std::string out;
  std::string pauses;
  std::string trace;
  std::string transcript;
  std::string tsv;
  std::string lexicon;
  std::string weights;
  std::string format = "text";
  double threshold_db = PauseConfig{}.threshold_db;
  double min_silence = PauseConfig{}.min_silence_s;
  bool verbose = false;
  checks::AcceptanceInputs replication = checks::default_inputs();
};

void require_file(const std::string& path) {
  if (path.empty()) return;
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) throw IoError("cannot read '" + path + "'");
}

std::string base_name(const std::string& path) { return fs::path(path).filename().string(); }

// Writes to the named file, or stdout when the name is empty.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw IoError("cannot write '" + path + "'");
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

CueLexicon load_lexicon(const RunConfig& cfg) {
  return cfg.lexicon.empty() ? CueLexicon::replication() : CueLexicon::load_file(cfg.lexicon);
}

ClassifierConfig load_weights(const RunConfig& cfg) {
  return cfg.weights.empty() ? ClassifierConfig::defaults()
                             : ClassifierConfig::load_file(cfg.weights);
}

std::vector<PauseRecord> load_pauses(const RunConfig& cfg) {
  if (cfg.pauses.empty()) return {};
  return read_pauses_file(cfg.pauses);
}

int cmd_pauses(const RunConfig& cfg) {
  if (cfg.format != "text" && cfg.format != "json") throw Error("--format must be text or json");
  require_file(cfg.input);
  require_file(cfg.transcript);
  PauseConfig pc;
  pc.threshold_db = cfg.threshold_db;
  pc.min_silence_s = cfg.min_silence;

  const PcmAudio audio = read_wav_file(cfg.input);
  std::optional<std::vector<WordSpan>> spans;
  if (!cfg.transcript.empty()) {
    spans.emplace();
    for (const auto& t : read_transcript_file(cfg.transcript)) {
      if (!t.start_s) throw SchemaError("token '" + t.surface + "' has no timing");
      spans->push_back({*t.start_s, *t.end_s});
    }
  }
  const auto frames = frame_energy(audio);
  const auto pauses =
      spans ? detect_pauses(frames, std::span<const WordSpan>(*spans), pc) : detect_pauses(frames, std::nullopt, pc);

  Output out(cfg.out);
  write_pauses(out.stream(), pauses);

  const double total = std::accumulate(pauses.begin(), pauses.end(), 0.0,
                                       [](double s, const PauseRecord& p) { return s + p.raw_duration_s; });
  const double mean = pauses.empty() ? 0.0 : total / static_cast<double>(pauses.size());
  std::ostream& summary = cfg.out.empty() ? std::cerr : std::cout;
  if (cfg.format == "json") {
    summary << "{\"count\": " << pauses.size() << ", \"mean_raw_duration_s\": " << mean
            << ", \"threshold_db\": " << silence_threshold_db(frames, pc)
            << ", \"min_silence_s\": " << pc.min_silence_s << "}\n";
  } else {
    summary << pauses.size() << " pauses, mean " << mean << " s (threshold "
            << silence_threshold_db(frames, pc) << " dBFS, min silence " << pc.min_silence_s
            << " s)\n";
  }
  return kOk;
}

int cmd_code(const RunConfig& cfg) {
  require_file(cfg.input);
  require_file(cfg.pauses);
  require_file(cfg.trace);
  require_file(cfg.lexicon);
  require_file(cfg.weights);
  const auto tokens = read_transcript_file(cfg.input);
  const auto pauses = load_pauses(cfg);
  const auto lexicon = load_lexicon(cfg);
  const auto weights = load_weights(cfg);
  std::optional<std::vector<TraceStep>> trace;
  if (!cfg.trace.empty()) {
    std::ifstream in(cfg.trace);
    trace = read_trace(in);
  }
  const auto res = trace ? run_pipeline(tokens, pauses, lexicon, weights,
                                        std::span<const TraceStep>(*trace))
                         : run_pipeline(tokens, pauses, lexicon, weights);
  Output out(cfg.out);
  write_coded(out.stream(), res.records);
  if (!cfg.tsv.empty()) {
    Output tsv(cfg.tsv);
    write_coded_tsv(tsv.stream(), res.records);
  }
  return kOk;
}

int cmd_segment(const RunConfig& cfg) {
  require_file(cfg.input);
  require_file(cfg.pauses);
  require_file(cfg.lexicon);
  require_file(cfg.weights);
  const auto tokens = read_transcript_file(cfg.input);
  const auto pauses = load_pauses(cfg);
  const auto lexicon = load_lexicon(cfg);
  const auto weights = load_weights(cfg);
  const auto res = run_pipeline(tokens, pauses, lexicon, weights);
  const std::string tree = res.tree.tree.render_indented();

  if (cfg.out.empty()) {
    std::cout << tree;
    return kOk;
  }
  std::error_code ec;
  fs::create_directories(cfg.out, ec);
  if (ec) throw IoError("cannot create '" + cfg.out + "'");
  const fs::path dir(cfg.out);
  Output(dir / "tree.txt").stream() << tree;
  write_trace(Output(dir / "trace.jsonl").stream(), res.trace);
  write_audit(Output(dir / "audit.jsonl").stream(), res.segmentation->classifications, res.fragments);
  {
    Output used(dir / "config.txt");
    used.stream() << "# lexicon = " << (cfg.lexicon.empty() ? "replication (embedded)" : cfg.lexicon)
                  << "\n" << weights.to_text();
  }
  std::cout << tree;
  return kOk;
}

int cmd_stats(const RunConfig& cfg) {
  if (cfg.format != "text" && cfg.format != "json") throw Error("--format must be text or json");
  require_file(cfg.input);
  require_file(cfg.pauses);
  require_file(cfg.lexicon);
  const auto coded = read_coded_file(cfg.input);
  const auto lexicon = load_lexicon(cfg);
  ReportOptions opt;
  opt.excluded_missing_pause = coded.excluded_missing_pause;
  opt.lexicon = &lexicon;
  if (!cfg.pauses.empty()) opt.pause_inventory = read_pauses_file(cfg.pauses);
  opt.config = {{"records", base_name(cfg.input)},
                {"pause_inventory", cfg.pauses.empty() ? "none" : base_name(cfg.pauses)},
                {"lexicon", cfg.lexicon.empty() ? "replication (embedded)" : base_name(cfg.lexicon)}};
  const StatsReport report = build_report(coded.records, opt);
  Output out(cfg.out);
  out.stream() << (cfg.format == "json" ? render_json(report) : render_text(report));
  return kOk;
}

int cmd_replicate(const RunConfig& cfg) {
  const auto results = checks::run_acceptance(cfg.replication);
  std::cout << checks::format_results(results, cfg.verbose);
  const bool ok = checks::all_passed(results);
  std::cout << (ok ? "all checks passed" : "some checks failed") << "\n";
  return ok ? kOk : kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"focusseg: focus-space discourse segmentation toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* pauses = app.add_subcommand("pauses", "Detect unfilled pauses in a 16-bit mono WAV file");
  pauses->add_option("wav", cfg.input, "Input WAV file")->required();
  pauses->add_option("--threshold-db", cfg.threshold_db, "dB above the noise floor that counts as speech")
      ->capture_default_str();
  pauses->add_option("--min-silence", cfg.min_silence, "Shortest silence reported, seconds")
      ->capture_default_str();
  pauses->add_option("--transcript", cfg.transcript, "Timed transcript; its tokens give word spans for closure exclusion");
  pauses->add_option("--format", cfg.format, "Summary format: text or json")->capture_default_str();
  pauses->add_option("--out", cfg.out, "Pause JSONL output (default stdout)");

  auto* code = app.add_subcommand("code", "Fragment and code a transcript");
  code->add_option("transcript", cfg.input, "Transcript JSONL")->required();
  code->add_option("--pauses", cfg.pauses, "Pause JSONL aligned to the transcript");
  code->add_option("--trace", cfg.trace, "Operation trace JSONL instead of classifying");
  code->add_option("--lexicon", cfg.lexicon, "Cue lexicon JSONL");
  code->add_option("--weights", cfg.weights, "Classifier weights file");
  code->add_option("--out", cfg.out, "CodedRecord JSONL output (default stdout)");
  code->add_option("--tsv", cfg.tsv, "Also write a TSV mirror");

  auto* segment = app.add_subcommand("segment", "Classify focusing operations and build the tree");
  segment->add_option("transcript", cfg.input, "Transcript JSONL")->required();
  segment->add_option("--pauses", cfg.pauses, "Pause JSONL aligned to the transcript");
  segment->add_option("--lexicon", cfg.lexicon, "Cue lexicon JSONL");
  segment->add_option("--weights", cfg.weights, "Classifier weights file");
  segment->add_option("--out", cfg.out, "Directory for tree.txt, trace.jsonl, audit.jsonl, config.txt");

  auto* stats = app.add_subcommand("stats", "Tables and significance tests over coded records");
  stats->add_option("coded", cfg.input, "CodedRecord JSONL")->required();
  stats->add_option("--pauses", cfg.pauses, "Positioned pause inventory JSONL");
  stats->add_option("--lexicon", cfg.lexicon, "Cue lexicon JSONL");
  stats->add_option("--format", cfg.format, "text or json")->capture_default_str();
  stats->add_option("--out", cfg.out, "Report output (default stdout)");

  auto* replicate = app.add_subcommand("replicate", "Run the replication acceptance checks");
  replicate->add_option("--corpus", cfg.replication.corpus_path, "Coded replication corpus")
      ->capture_default_str();
  replicate->add_option("--pauses", cfg.replication.pauses_path, "Pause inventory")
      ->capture_default_str();
  replicate->add_option("--fixtures", cfg.replication.fixtures_dir, "Worked-example transcripts")
      ->capture_default_str();
  replicate->add_flag("--verbose", cfg.verbose, "Print notes as well as failures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code_ = app.exit(e);
    return code_ == 0 ? kOk : kInputError;
  }

  try {
    if (*pauses) return cmd_pauses(cfg);
    if (*code) return cmd_code(cfg);
    if (*segment) return cmd_segment(cfg);
    if (*stats) return cmd_stats(cfg);
    if (*replicate) {
      try {
        return cmd_replicate(cfg);
      } catch (const IoError& e) {
        std::cerr << "focusseg: " << e.what() << "\n";
        return kInputError;
      }
    }
  } catch (const IoError& e) {
    std::cerr << "focusseg: " << e.what() << "\n";
    return kIoError;
  } catch (const std::exception& e) {
    std::cerr << "focusseg: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
