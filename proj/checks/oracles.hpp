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


// Independent reference computations used to check the implementation.
// Each one takes the most direct route available and shares no code with
// the library paths it checks.

#ifndef FOCUSSEG_CHECKS_ORACLES_HPP_
#define FOCUSSEG_CHECKS_ORACLES_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "focusseg/focus_engine.hpp"
#include "focusseg/wav.hpp"

namespace focusseg::checks {

// Sums of squares from their definitions.
struct AnovaOracle {
  double ss_between = 0.0;
  double ss_within = 0.0;
  double F = 0.0;
};
AnovaOracle oracle_anova(const std::vector<std::vector<double>>& groups);

// r = (n Sxy - Sx Sy) / sqrt((n Sxx - Sx^2)(n Syy - Sy^2)) in long double.
double oracle_pearson(const std::vector<double>& x, const std::vector<double>& y);

// Pooled-variance t from raw sums.
double oracle_pooled_t(const std::vector<double>& a, const std::vector<double>& b);

// CDFs by tanh-sinh quadrature of the densities.
double quadrature_f_cdf(double f, double d1, double d2);
double quadrature_t_cdf(double t, double df);

// Plain vector-of-ids stack replay.
struct NaiveReplay {
  bool ok = true;               // false on underflow
  std::vector<int> depth_after;  // per step
  std::vector<int> push_depth;   // per pushed node, in push order
  std::vector<int> push_parent;  // 0 for a top-level node
  int pushes = 0;
  int pops = 0;
};
NaiveReplay naive_replay(const std::vector<FocusingOperation>& ops);

// Random valid trace starting with Initiate. Return and Replace pop
// between one and all open spaces.
std::vector<FocusingOperation> random_trace(std::mt19937_64& rng, std::size_t length);

// Audio built from (tone?, seconds) pieces: a 220 Hz tone at `amplitude`
// and low-level noise in the gaps.
struct Piece {
  bool tone = true;
  double seconds = 0.0;
};
PcmAudio synth_audio(const std::vector<Piece>& pieces, int sample_rate = 16000,
                     double amplitude = 0.1, double noise = 2e-4, std::uint64_t seed = 7);

// Same audio with every sample scaled by 10^(db/20).
PcmAudio apply_gain(const PcmAudio& audio, double db);

// Per-frame RMS computed sample by sample.
std::vector<double> oracle_frame_rms(const PcmAudio& audio, double frame_ms, double hop_ms);

}  // namespace focusseg::checks

#endif  // FOCUSSEG_CHECKS_ORACLES_HPP_
