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


// F and Student t distribution functions built on the regularized
// incomplete beta function.

#ifndef FOCUSSEG_DISTRIBUTIONS_HPP_
#define FOCUSSEG_DISTRIBUTIONS_HPP_

namespace focusseg {

// I_x(a, b) for a, b > 0 and x in [0, 1], by continued fraction.
// Throws std::domain_error outside that domain.
double incomplete_beta(double a, double b, double x);

// P(F <= f) and P(F > f) for F(d1, d2).
double f_cdf(double f, double d1, double d2);
double f_sf(double f, double d1, double d2);

// P(T <= t) for Student t with df degrees of freedom.
double t_cdf(double t, double df);

// P(|T| >= |t|).
double t_two_sided_p(double t, double df);

}  // namespace focusseg

#endif  // FOCUSSEG_DISTRIBUTIONS_HPP_
