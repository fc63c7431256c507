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

#include "focusseg/pause_detect.hpp"

#include <algorithm>
#include <cmath>

#include "focusseg/errors.hpp"

namespace focusseg {

namespace {

constexpr double kMinRms = 1e-10;  // -200 dBFS, stands in for digital silence
constexpr double kEps = 1e-9;

double to_db(double rms) { return 20.0 * std::log10(std::max(rms, kMinRms)); }

}  // namespace

std::string_view to_string(PausePosition p) {
  return p == PausePosition::FragmentInitial ? "fragment_initial" : "fragment_internal";
}

double round_to_tenth(double seconds) {
  // the epsilon keeps values like 0.15 (stored as 0.1499...) rounding up
  return std::floor(seconds * 10.0 + 0.5 + kEps) / 10.0;
}

AudioFrameSeries frame_energy(const PcmAudio& audio, const FrameConfig& config) {
  if (audio.channels != 1) {
    throw UnsupportedFormat("mono required, got " + std::to_string(audio.channels) + " channels");
  }
  if (audio.sample_rate < 8000) {
    throw UnsupportedFormat("sample rate " + std::to_string(audio.sample_rate) +
                            " Hz is below 8000 Hz");
  }
  if (config.frame_ms <= 0.0 || config.hop_ms <= 0.0) {
    throw Error("frame and hop lengths must be positive");
  }

  const auto frame_len =
      static_cast<std::size_t>(std::lround(audio.sample_rate * config.frame_ms / 1000.0));
  const auto hop =
      static_cast<std::size_t>(std::lround(audio.sample_rate * config.hop_ms / 1000.0));
  if (frame_len == 0 || hop == 0) throw Error("frame shorter than one sample");

  AudioFrameSeries out;
  out.sample_rate = audio.sample_rate;
  out.frame_ms = config.frame_ms;
  out.hop_ms = config.hop_ms;

  const std::size_t n = audio.samples.size();
  const std::size_t frames = (n + hop - 1) / hop;
  out.energies.reserve(frames);
  for (std::size_t f = 0; f < frames; ++f) {
    const std::size_t begin = f * hop;
    const std::size_t end = std::min(begin + frame_len, n);
    double sum = 0.0;
    for (std::size_t i = begin; i < end; ++i) sum += audio.samples[i] * audio.samples[i];
    out.energies.push_back(std::sqrt(sum / static_cast<double>(end - begin)));
  }
  return out;
}

double silence_threshold_db(const AudioFrameSeries& frames, const PauseConfig& config) {
  if (frames.energies.empty()) return to_db(0.0);
  std::vector<double> db(frames.energies.size());
  std::transform(frames.energies.begin(), frames.energies.end(), db.begin(), to_db);
  std::sort(db.begin(), db.end());
  // nearest-rank percentile
  const double rank = std::ceil(config.floor_percentile / 100.0 * static_cast<double>(db.size()));
  const std::size_t idx =
      std::clamp<std::size_t>(static_cast<std::size_t>(rank), 1, db.size()) - 1;
  const double floor_db = db[idx];
  const double peak_db = db.back();
  return std::min(floor_db + config.threshold_db, peak_db - config.headroom_db);
}

std::vector<PauseRecord> detect_pauses(const AudioFrameSeries& frames,
                                       std::optional<std::span<const WordSpan>> word_spans,
                                       const PauseConfig& config) {
  std::vector<PauseRecord> out;
  const auto& e = frames.energies;
  if (e.empty()) return out;
  const double threshold = silence_threshold_db(frames, config);
  const double hop_s = frames.hop_s();

  std::size_t i = 0;
  while (i < e.size()) {
    if (to_db(e[i]) >= threshold) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < e.size() && to_db(e[j]) < threshold) ++j;
    // runs touching either end of the recording are not bounded by speech
    const bool bounded = i > 0 && j < e.size();
    const double start = static_cast<double>(i) * hop_s;
    const double dur = static_cast<double>(j - i) * hop_s;
    if (bounded && dur + kEps >= config.min_silence_s) {
      PauseRecord rec;
      rec.start_s = start;
      rec.raw_duration_s = dur;
      rec.reported_duration_s = round_to_tenth(dur);
      bool plosive = false;
      if (word_spans) {
        for (const WordSpan& w : *word_spans) {
          if (w.start_s < start && start + dur < w.end_s) {
            plosive = true;
            break;
          }
        }
      } else {
        rec.suspect = dur < config.suspect_below_s;
      }
      if (!plosive) out.push_back(rec);
    }
    i = j;
  }
  return out;
}

}  // namespace focusseg
