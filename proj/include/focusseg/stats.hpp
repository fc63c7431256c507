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


// Summary statistics and the three significance tests.

#ifndef FOCUSSEG_STATS_HPP_
#define FOCUSSEG_STATS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace focusseg {

// Mergeable count / mean / sum of squared deviations.
struct Moments {
  std::size_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x);
  void merge(const Moments& other);
  double sum() const { return mean * static_cast<double>(n); }
  // Sample variance and deviation (n - 1); absent below two values.
  std::optional<double> variance() const;
  std::optional<double> sd() const;

  static Moments of(std::span<const double> xs);
};

struct AnovaResult {
  double F = 0.0;
  int df_between = 0;
  int df_within = 0;
  double p = 1.0;
  double ss_between = 0.0;
  double ss_within = 0.0;
  // All values equal: F is defined as 0, p as 1.
  bool degenerate = false;
};

// Throws DegenerateInput for fewer than two groups, an empty group, or
// no more values than groups.
AnovaResult anova_one_way(const std::vector<std::vector<double>>& groups);

struct CorrResult {
  double r = 0.0;
  int n = 0;
  double p = 1.0;
  double t = 0.0;  // r * sqrt((n - 2) / (1 - r^2))
};

// Throws LengthMismatch, DegenerateInput (n < 3) or ZeroVariance.
CorrResult pearson(std::span<const double> x, std::span<const double> y);

struct TTestResult {
  double t = 0.0;  // mean_a - mean_b over its pooled standard error
  int df = 0;
  double p = 1.0;
  double mean_a = 0.0;
  double mean_b = 0.0;
  double sd_a = 0.0;
  double sd_b = 0.0;
  int n_a = 0;
  int n_b = 0;
};

// Pooled-variance two-sample test, two-sided p. Throws DegenerateInput
// when a group has fewer than two values, ZeroVariance when the pooled
// variance is zero.
TTestResult t_test_pooled(std::span<const double> a, std::span<const double> b);

}  // namespace focusseg

#endif  // FOCUSSEG_STATS_HPP_
