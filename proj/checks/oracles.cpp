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


#include "oracles.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <numbers>

namespace focusseg::checks {

AnovaOracle oracle_anova(const std::vector<std::vector<double>>& groups) {
  long double total = 0;
  std::size_t n = 0;
  for (const auto& g : groups) {
    for (double x : g) {
      total += x;
      ++n;
    }
  }
  const long double grand = total / n;
  long double ssb = 0;
  long double ssw = 0;
  for (const auto& g : groups) {
    long double s = 0;
    for (double x : g) s += x;
    const long double m = s / g.size();
    for (double x : g) {
      ssb += (m - grand) * (m - grand);
      ssw += (x - m) * (x - m);
    }
  }
  AnovaOracle out;
  out.ss_between = static_cast<double>(ssb);
  out.ss_within = static_cast<double>(ssw);
  const long double k = groups.size();
  out.F = static_cast<double>((ssb / (k - 1)) / (ssw / (n - k)));
  return out;
}

double oracle_pearson(const std::vector<double>& x, const std::vector<double>& y) {
  long double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  const long double n = x.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += static_cast<long double>(x[i]) * x[i];
    syy += static_cast<long double>(y[i]) * y[i];
    sxy += static_cast<long double>(x[i]) * y[i];
  }
  return static_cast<double>((n * sxy - sx * sy) /
                             std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy)));
}

double oracle_pooled_t(const std::vector<double>& a, const std::vector<double>& b) {
  auto sums = [](const std::vector<double>& v) {
    long double s = 0, ss = 0;
    for (double x : v) {
      s += x;
      ss += static_cast<long double>(x) * x;
    }
    return std::pair{s, ss};
  };
  const auto [sa, ssa] = sums(a);
  const auto [sb, ssb] = sums(b);
  const long double na = a.size();
  const long double nb = b.size();
  const long double dev_a = ssa - sa * sa / na;
  const long double dev_b = ssb - sb * sb / nb;
  const long double pooled = (dev_a + dev_b) / (na + nb - 2);
  return static_cast<double>((sa / na - sb / nb) / std::sqrt(pooled * (1 / na + 1 / nb)));
}

double quadrature_f_cdf(double f, double d1, double d2) {
  if (f <= 0) return 0.0;
  const double log_c = std::lgamma((d1 + d2) / 2) - std::lgamma(d1 / 2) - std::lgamma(d2 / 2) +
                       (d1 / 2) * std::log(d1 / d2);
  auto density = [&](double x) {
    if (x <= 0) return 0.0;
    return std::exp(log_c + (d1 / 2 - 1) * std::log(x) -
                    ((d1 + d2) / 2) * std::log1p(d1 * x / d2));
  };
  boost::math::quadrature::tanh_sinh<double> integrator;
  return integrator.integrate(density, 0.0, f);
}

double quadrature_t_cdf(double t, double df) {
  const double log_c = std::lgamma((df + 1) / 2) - std::lgamma(df / 2) -
                       0.5 * std::log(df * std::numbers::pi);
  auto density = [&](double x) {
    return std::exp(log_c - ((df + 1) / 2) * std::log1p(x * x / df));
  };
  if (t == 0) return 0.5;
  boost::math::quadrature::tanh_sinh<double> integrator;
  const double half = integrator.integrate(density, 0.0, std::abs(t));
  return t > 0 ? 0.5 + half : 0.5 - half;
}

NaiveReplay naive_replay(const std::vector<FocusingOperation>& ops) {
  NaiveReplay out;
  std::vector<int> stack;
  int next = 1;
  auto push = [&] {
    out.push_parent.push_back(stack.empty() ? 0 : stack.back());
    stack.push_back(next++);
    out.push_depth.push_back(static_cast<int>(stack.size()));
    ++out.pushes;
  };
  for (const auto& op : ops) {
    const int pops = op.kind == OpKind::Return || op.kind == OpKind::Replace ? op.pop_count : 0;
    if (pops > static_cast<int>(stack.size()) ||
        ((op.kind == OpKind::Retain || op.kind == OpKind::Return) && stack.empty())) {
      out.ok = false;
      return out;
    }
    for (int i = 0; i < pops; ++i) stack.pop_back();
    out.pops += pops;
    if (op.kind == OpKind::Initiate || op.kind == OpKind::Replace) push();
    out.depth_after.push_back(static_cast<int>(stack.size()));
  }
  return out;
}

std::vector<FocusingOperation> random_trace(std::mt19937_64& rng, std::size_t length) {
  std::vector<FocusingOperation> ops{FocusingOperation::initiate()};
  int depth = 1;
  std::uniform_int_distribution<int> kind(0, 3);
  while (ops.size() < length) {
    switch (kind(rng)) {
      case 0:
        ops.push_back(FocusingOperation::initiate());
        ++depth;
        break;
      case 1:
        if (depth == 0) continue;
        ops.push_back(FocusingOperation::retain());
        break;
      case 2: {
        if (depth < 1) continue;
        std::uniform_int_distribution<int> pops(1, depth);
        const int k = pops(rng);
        ops.push_back(FocusingOperation::return_to(k));
        depth -= k;
        break;
      }
      case 3: {
        if (depth < 1) continue;
        std::uniform_int_distribution<int> pops(1, depth);
        const int k = pops(rng);
        ops.push_back(FocusingOperation::replace(k));
        depth -= k - 1;
        break;
      }
    }
  }
  return ops;
}

PcmAudio synth_audio(const std::vector<Piece>& pieces, int sample_rate, double amplitude,
                     double noise, std::uint64_t seed) {
  PcmAudio a;
  a.sample_rate = sample_rate;
  a.channels = 1;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> hiss(-noise, noise);
  std::size_t t = 0;
  for (const Piece& p : pieces) {
    const auto n = static_cast<std::size_t>(std::lround(p.seconds * sample_rate));
    for (std::size_t i = 0; i < n; ++i, ++t) {
      double s = hiss(rng);
      if (p.tone) s += amplitude * std::sin(2 * std::numbers::pi * 220.0 * t / sample_rate);
      a.samples.push_back(s);
    }
  }
  return a;
}

PcmAudio apply_gain(const PcmAudio& audio, double db) {
  PcmAudio out = audio;
  const double g = std::pow(10.0, db / 20.0);
  for (double& s : out.samples) s *= g;
  return out;
}

std::vector<double> oracle_frame_rms(const PcmAudio& audio, double frame_ms, double hop_ms) {
  const auto frame = static_cast<std::size_t>(std::lround(audio.sample_rate * frame_ms / 1000));
  const auto hop = static_cast<std::size_t>(std::lround(audio.sample_rate * hop_ms / 1000));
  std::vector<double> out;
  for (std::size_t begin = 0; begin < audio.samples.size(); begin += hop) {
    long double acc = 0;
    std::size_t n = 0;
    for (std::size_t i = begin; i < begin + frame && i < audio.samples.size(); ++i, ++n) {
      acc += static_cast<long double>(audio.samples[i]) * audio.samples[i];
    }
    out.push_back(static_cast<double>(std::sqrt(acc / n)));
  }
  return out;
}

}  // namespace focusseg::checks
