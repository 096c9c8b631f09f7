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

#include "hcube/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "hcube/error.hpp"

namespace hcube {

namespace {

struct SimpsonState {
  const std::function<double(double)>* fn;
  long long evaluations;
  double worst_local_error;
  bool converged;
};

double Eval(SimpsonState& state, double x) {
  ++state.evaluations;
  return (*state.fn)(x);
}

// One recursion step; fa/fm/fb are cached endpoint and midpoint values,
// whole is the Simpson estimate over [a, b].
double Recurse(SimpsonState& state, double a, double b, double fa, double fm,
               double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = Eval(state, lm);
  const double frm = Eval(state, rm);
  const double h = b - a;
  const double left = h / 12.0 * (fa + 4.0 * flm + fm);
  const double right = h / 12.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::fabs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  if (depth <= 0) {
    state.converged = false;
    state.worst_local_error =
        std::max(state.worst_local_error, std::fabs(delta) / 15.0);
    return left + right + delta / 15.0;
  }
  return Recurse(state, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         Recurse(state, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

QuadratureResult IntegrateAdaptiveSimpson(const std::function<double(double)>& fn,
                                          double a, double b, double abs_tol,
                                          int max_depth) {
  Require(std::isfinite(a) && std::isfinite(b) && a <= b,
          ErrorCode::kInvalidArgument, "bad integration interval");
  Require(abs_tol > 0.0, ErrorCode::kInvalidArgument,
          "tolerance must be positive");
  QuadratureResult result;
  if (a == b) {
    result.converged = true;
    return result;
  }
  SimpsonState state{&fn, 0, 0.0, true};
  const double fa = Eval(state, a);
  const double fb = Eval(state, b);
  const double fm = Eval(state, 0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  result.value = Recurse(state, a, b, fa, fm, fb, whole, abs_tol, max_depth);
  result.converged = state.converged;
  result.error_estimate = state.converged ? abs_tol : state.worst_local_error;
  result.evaluations = state.evaluations;
  return result;
}

QuadratureResult IntegrateSemiInfinite(const std::function<double(double)>& fn,
                                       double scale_hint,
                                       const QuadratureSpec& spec) {
  Require(spec.rel_tol > 0.0, ErrorCode::kInvalidArgument,
          "tolerance must be positive");
  const double scale = std::max(1.0, std::fabs(scale_hint));
  // The Richardson acceptance test is heuristic; aim well below the requested
  // tolerance so the actual error stays under it with margin.
  const double abs_tol = spec.rel_tol * scale / 64.0;
  const double horizon =
      std::max(spec.MinHorizon(), std::log(scale / abs_tol) + 8.0);
  // Integrate over dyadic segments. A single pass over [0, horizon] probes
  // only a handful of widely spaced points at first, and integrands whose
  // mass sits within the first few units can look identically zero there,
  // so the refinement test accepts a wrong value. Short leading segments
  // make the early probes land where the mass is.
  std::vector<double> cuts{0.0};
  for (double c = 1.0; c < horizon; c *= 2.0) cuts.push_back(c);
  cuts.push_back(horizon);
  const double segment_tol = abs_tol / static_cast<double>(cuts.size() - 1);
  QuadratureResult total;
  total.converged = true;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const QuadratureResult part = IntegrateAdaptiveSimpson(
        fn, cuts[k], cuts[k + 1], segment_tol, spec.max_depth);
    total.value += part.value;
    total.error_estimate += part.error_estimate;
    total.evaluations += part.evaluations;
    total.converged = total.converged && part.converged;
  }
  return total;
}

}  // namespace hcube
