// Copyright 2026 The Authors.
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

#ifndef HCUBE_QUADRATURE_HPP_
#define HCUBE_QUADRATURE_HPP_

#include <functional>

namespace hcube {

struct QuadratureSpec {
  double rel_tol = 1e-9;
  int max_depth = 48;
  // Truncation horizon for integrals over [0, infinity): max(40, log(scale/tol)).
  double MinHorizon() const { return 40.0; }
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = false;
  long long evaluations = 0;
};

// Adaptive composite Simpson on [a, b] with interval bisection. The local
// acceptance test is the classic |S(a,m) + S(m,b) - S(a,b)| <= 15 eps with
// tolerance split across halves.
QuadratureResult IntegrateAdaptiveSimpson(const std::function<double(double)>& fn,
                                          double a, double b, double abs_tol,
                                          int max_depth);

// Integral over [0, infinity) of an integrand that decays at least like
// e^(-t): truncates at T = max(40, log(scale_hint / tol)) and applies the
// adaptive rule on [0, T]. scale_hint bounds the integrand's magnitude.
QuadratureResult IntegrateSemiInfinite(const std::function<double(double)>& fn,
                                       double scale_hint,
                                       const QuadratureSpec& spec);

}  // namespace hcube

#endif  // HCUBE_QUADRATURE_HPP_
