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

// Unfilled-pause detection by frame-energy thresholding.

#ifndef FOCUSSEG_PAUSE_DETECT_HPP_
#define FOCUSSEG_PAUSE_DETECT_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "focusseg/wav.hpp"

namespace focusseg {

enum class PausePosition : std::uint8_t { FragmentInitial, FragmentInternal };

std::string_view to_string(PausePosition p);

struct PauseRecord {
  double start_s = 0.0;
  double raw_duration_s = 0.0;
  double reported_duration_s = 0.0;
  // Unset until the pause is aligned to fragment boundaries.
  std::optional<PausePosition> position;
  // Short silence with no word timing to rule out a plosive closure.
  bool suspect = false;

  double end_s() const { return start_s + raw_duration_s; }
  friend bool operator==(const PauseRecord&, const PauseRecord&) = default;
};

// Nearest tenth of a second, ties rounded up.
double round_to_tenth(double seconds);

struct AudioFrameSeries {
  int sample_rate = 0;
  double frame_ms = 10.0;
  double hop_ms = 10.0;
  std::vector<double> energies;  // RMS per frame

  double hop_s() const { return hop_ms / 1000.0; }
};

struct FrameConfig {
  double frame_ms = 10.0;
  double hop_ms = 10.0;
};

// RMS per frame; the final frame may be partial. Throws UnsupportedFormat
// for non-mono audio or a sample rate below 8 kHz.
AudioFrameSeries frame_energy(const PcmAudio& audio, const FrameConfig& config = {});

struct PauseConfig {
  // Silence: frames below noise floor + threshold_db.
  double threshold_db = 10.0;
  double min_silence_s = 0.05;
  // Noise floor percentile of frame energies.
  double floor_percentile = 5.0;
  // Frames within this many dB of the loudest frame are never silent, so a
  // recording without any silence yields no pauses.
  double headroom_db = 20.0;
  // Without word timing, silences shorter than this are flagged suspect.
  double suspect_below_s = 0.15;
};

struct WordSpan {
  double start_s = 0.0;
  double end_s = 0.0;
};

// Maximal runs of sub-threshold frames bounded by speech on both sides.
// A silence strictly inside one word span is treated as a plosive closure
// and dropped.
std::vector<PauseRecord> detect_pauses(const AudioFrameSeries& frames,
                                       std::optional<std::span<const WordSpan>> word_spans,
                                       const PauseConfig& config = {});

// Threshold actually used for `frames`, in dB re full scale.
double silence_threshold_db(const AudioFrameSeries& frames, const PauseConfig& config = {});

}  // namespace focusseg

#endif  // FOCUSSEG_PAUSE_DETECT_HPP_
