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


#include "focusseg/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "focusseg/distributions.hpp"
#include "focusseg/errors.hpp"

namespace focusseg {

void Moments::add(double x) {
  ++n;
  const double delta = x - mean;
  mean += delta / static_cast<double>(n);
  m2 += delta * (x - mean);
}

void Moments::merge(const Moments& other) {
  if (other.n == 0) return;
  if (n == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(n);
  const double nb = static_cast<double>(other.n);
  const double total = na + nb;
  const double delta = other.mean - mean;
  mean += delta * nb / total;
  m2 += other.m2 + delta * delta * na * nb / total;
  n += other.n;
}

std::optional<double> Moments::variance() const {
  if (n < 2) return std::nullopt;
  return m2 / static_cast<double>(n - 1);
}

std::optional<double> Moments::sd() const {
  auto v = variance();
  if (!v) return std::nullopt;
  return std::sqrt(*v);
}

Moments Moments::of(std::span<const double> xs) {
  Moments m;
  for (double x : xs) m.add(x);
  return m;
}

AnovaResult anova_one_way(const std::vector<std::vector<double>>& groups) {
  if (groups.size() < 2) throw DegenerateInput("anova needs at least two groups");
  Moments all;
  std::vector<Moments> per;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (groups[g].empty()) throw DegenerateInput("anova group " + std::to_string(g) + " is empty");
    per.push_back(Moments::of(groups[g]));
    all.merge(per.back());
  }
  if (all.n <= groups.size()) throw DegenerateInput("anova needs more values than groups");

  AnovaResult r;
  r.df_between = static_cast<int>(groups.size()) - 1;
  r.df_within = static_cast<int>(all.n - groups.size());
  for (const Moments& m : per) {
    const double d = m.mean - all.mean;
    r.ss_between += static_cast<double>(m.n) * d * d;
    r.ss_within += m.m2;
  }
  if (r.ss_within == 0.0) {
    if (r.ss_between == 0.0) {
      r.degenerate = true;
      r.F = 0.0;
      r.p = 1.0;
    } else {
      r.F = std::numeric_limits<double>::infinity();
      r.p = 0.0;
    }
    return r;
  }
  r.F = (r.ss_between / r.df_between) / (r.ss_within / r.df_within);
  r.p = f_sf(r.F, r.df_between, r.df_within);
  return r;
}

CorrResult pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw LengthMismatch("pearson: " + std::to_string(x.size()) + " x values, " +
                         std::to_string(y.size()) + " y values");
  }
  if (x.size() < 3) throw DegenerateInput("pearson needs at least three pairs");
  const double mx = Moments::of(x).mean;
  const double my = Moments::of(y).mean;
  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw ZeroVariance("pearson: a variable is constant");

  CorrResult c;
  c.n = static_cast<int>(x.size());
  c.r = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
  const double df = c.n - 2;
  if (std::abs(c.r) == 1.0) {
    c.t = std::copysign(std::numeric_limits<double>::infinity(), c.r);
    c.p = 0.0;
  } else {
    c.t = c.r * std::sqrt(df / (1.0 - c.r * c.r));
    c.p = t_two_sided_p(c.t, df);
  }
  return c;
}

TTestResult t_test_pooled(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) throw DegenerateInput("t-test needs two values per group");
  const Moments ma = Moments::of(a);
  const Moments mb = Moments::of(b);
  TTestResult r;
  r.n_a = static_cast<int>(ma.n);
  r.n_b = static_cast<int>(mb.n);
  r.df = r.n_a + r.n_b - 2;
  r.mean_a = ma.mean;
  r.mean_b = mb.mean;
  r.sd_a = *ma.sd();
  r.sd_b = *mb.sd();
  const double pooled = (ma.m2 + mb.m2) / r.df;
  if (pooled == 0.0) throw ZeroVariance("t-test: pooled variance is zero");
  const double se = std::sqrt(pooled * (1.0 / r.n_a + 1.0 / r.n_b));
  r.t = (ma.mean - mb.mean) / se;
  r.p = t_two_sided_p(r.t, r.df);
  return r;
}

}  // namespace focusseg
