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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hcube/quadrature.hpp"

using namespace hcube;

TEST_CASE("simpson is exact on cubics") {
  const auto cubic = [](double t) { return 3.0 * t * t * t - t + 2.0; };
  const QuadratureResult r = IntegrateAdaptiveSimpson(cubic, -1.0, 2.0, 1e-12, 30);
  CHECK(r.converged);
  // Antiderivative (3/4)t^4 - t^2/2 + 2t evaluated at the endpoints.
  const double exact = (0.75 * 16 - 2.0 + 4.0) - (0.75 - 0.5 - 2.0);
  CHECK(std::fabs(r.value - exact) <= 1e-12);
}

TEST_CASE("simpson handles oscillation") {
  const QuadratureResult r = IntegrateAdaptiveSimpson(
      [](double t) { return std::sin(t); }, 0.0, 10.0, 1e-10, 48);
  CHECK(r.converged);
  CHECK(std::fabs(r.value - (1.0 - std::cos(10.0))) <= 1e-9);
  CHECK(r.evaluations > 0);
}

TEST_CASE("exponential tail integrals") {
  QuadratureSpec spec;
  const QuadratureResult a = IntegrateSemiInfinite(
      [](double t) { return std::exp(-t); }, 1.0, spec);
  CHECK(a.converged);
  CHECK(std::fabs(a.value - 1.0) <= 1e-9);

  const QuadratureResult b = IntegrateSemiInfinite(
      [](double t) { return t * std::exp(-t); }, 1.0, spec);
  CHECK(b.converged);
  CHECK(std::fabs(b.value - 1.0) <= 1e-9);

  // (1 - e^-t) e^-t integrates to 1/2.
  const QuadratureResult c = IntegrateSemiInfinite(
      [](double t) { return (1.0 - std::exp(-t)) * std::exp(-t); }, 1.0, spec);
  CHECK(c.converged);
  CHECK(std::fabs(c.value - 0.5) <= 1e-9);
}

TEST_CASE("tight tolerances still converge") {
  QuadratureSpec spec;
  spec.rel_tol = 1e-12;
  const QuadratureResult r = IntegrateSemiInfinite(
      [](double t) { return std::exp(-2.0 * t); }, 1.0, spec);
  CHECK(r.converged);
  CHECK(std::fabs(r.value - 0.5) <= 1e-11);
}

TEST_CASE("depth exhaustion is reported") {
  QuadratureSpec spec;
  spec.rel_tol = 1e-13;
  spec.max_depth = 2;
  const QuadratureResult r = IntegrateSemiInfinite(
      [](double t) { return std::exp(-t) * std::cos(40.0 * t); }, 1.0, spec);
  CHECK_FALSE(r.converged);
  CHECK(r.error_estimate > 0.0);
}

TEST_CASE("zero integrand is instant") {
  QuadratureSpec spec;
  const QuadratureResult r =
      IntegrateSemiInfinite([](double) { return 0.0; }, 0.0, spec);
  CHECK(r.converged);
  CHECK(r.value == 0.0);
}
