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
#include <vector>

#include "hcube/cube_function.hpp"
#include "hcube/error.hpp"
#include "hcube/families.hpp"
#include "hcube/random.hpp"
#include "oracles.hpp"

using namespace hcube;

TEST_CASE("and2 spectrum matches the hand computation") {
  const Spectrum s = FourierTransform(And(2, {}));
  REQUIRE(s.size() == 4);
  CHECK(s[0] == 0.25);
  CHECK(s[1] == -0.25);
  CHECK(s[2] == -0.25);
  CHECK(s[3] == 0.25);
}

TEST_CASE("transform agrees with direct character sums") {
  Rng rng(11);
  for (int n = 1; n <= 8; ++n) {
    const CubeFunction f = oracles::RandomReal(n, rng);
    const Spectrum s = FourierTransform(f);
    const std::vector<double> brute = oracles::BruteSpectrum(f);
    for (std::uint64_t m = 0; m < s.size(); ++m) {
      CHECK(std::fabs(s[m] - brute[m]) <= 1e-12);
    }
  }
}

TEST_CASE("round trip restores the table") {
  Rng rng(12);
  for (int n = 1; n <= 10; ++n) {
    const CubeFunction f = oracles::RandomReal(n, rng);
    const CubeFunction back = InverseTransform(FourierTransform(f));
    for (std::uint64_t m = 0; m < f.size(); ++m) {
      CHECK(std::fabs(f[m] - back[m]) <= 1e-13);
    }
  }
}

TEST_CASE("parseval") {
  Rng rng(13);
  for (int n = 1; n <= 10; ++n) {
    const CubeFunction f = oracles::RandomReal(n, rng);
    const Spectrum s = FourierTransform(f);
    double weight = 0.0;
    for (std::uint64_t m = 0; m < s.size(); ++m) weight += s[m] * s[m];
    const double energy = InnerProduct(f, f);
    CHECK(std::fabs(weight - energy) <= 1e-12);
  }
}

TEST_CASE("in-place butterflies are an involution up to 2^n") {
  Rng rng(14);
  const CubeFunction f = oracles::RandomReal(6, rng);
  std::vector<double> a(f.values().begin(), f.values().end());
  WalshHadamardInPlace(a);
  WalshHadamardInPlace(a);
  for (std::uint64_t m = 0; m < f.size(); ++m) {
    CHECK(std::fabs(a[m] - 64.0 * f[m]) <= 1e-10);
  }
}

TEST_CASE("moments of the two-coordinate tables") {
  const CubeFunction f = And(2, {});
  const CubeFunction g = Or(2, {});
  CHECK(Mean(f) == 0.25);
  CHECK(Mean(g) == 0.75);
  CHECK(InnerProduct(f, g) == 0.25);
  CHECK(Covariance(f, f) == 0.1875);
  CHECK(Covariance(f, g) == 0.0625);
}

TEST_CASE("covariance matches the oracle on random pairs") {
  Rng rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng.Below(6));
    const CubeFunction f = oracles::RandomReal(n, rng);
    const CubeFunction g = oracles::RandomReal(n, rng);
    CHECK(std::fabs(Covariance(f, g) - oracles::BruteCovariance(f, g)) <=
          1e-13);
  }
}

TEST_CASE("norms") {
  const CubeFunction c = CubeFunction::Constant(3, -2.5, ValueKind::kReal);
  CHECK(LpNorm(c, 1.0) == 2.5);
  CHECK(LpNorm(c, 2.0) == 2.5);
  CHECK(LpNorm(c, 0.5) == doctest::Approx(2.5).epsilon(1e-14));

  Rng rng(16);
  const CubeFunction f = oracles::RandomReal(5, rng);
  CHECK(std::fabs(LpNorm(f, 2.0) * LpNorm(f, 2.0) - InnerProduct(f, f)) <=
        1e-13);
}

TEST_CASE("quasi-norms increase with the exponent") {
  Rng rng(17);
  const double grid[] = {0.25, 0.5, 1.0, 2.0};
  for (int trial = 0; trial < 20; ++trial) {
    const CubeFunction f = oracles::RandomReal(4, rng, -2.0, 2.0);
    for (int a = 0; a + 1 < 4; ++a) {
      CHECK(LpNorm(f, grid[a]) <= LpNorm(f, grid[a + 1]) + 1e-12);
    }
  }
}

TEST_CASE("level weight sums") {
  const Spectrum sf = FourierTransform(And(2, {}));
  const Spectrum sg = FourierTransform(Or(2, {}));
  CHECK(Level1Cross(sf, sg) == 2.0 * (-0.25) * (-0.25));
  CHECK(LevelWeightCross(sf, sg, 2) == 0.25 * (-0.25));
  // Full cross weight is the inner product of the tables.
  Rng rng(18);
  const CubeFunction f = oracles::RandomReal(6, rng);
  const CubeFunction g = oracles::RandomReal(6, rng);
  CHECK(std::fabs(LevelWeightCross(FourierTransform(f), FourierTransform(g), 0) -
                  InnerProduct(f, g)) <= 1e-12);
}

TEST_CASE("table validation") {
  CHECK_THROWS_AS(CubeFunction(-1, {1.0}, ValueKind::kReal), Error);
  CHECK_THROWS_AS(CubeFunction(2, {0.0, 1.0}, ValueKind::kReal), Error);
  CHECK_THROWS_AS(CubeFunction(1, {0.0, 0.5}, ValueKind::kBoolean), Error);
  CHECK_THROWS_AS(CubeFunction(1, {0.0, std::nan("")}, ValueKind::kReal),
                  Error);
  const CubeFunction point = CubeFunction::Constant(0, 0.75, ValueKind::kReal);
  CHECK(point.size() == 1);
  CHECK(Mean(point) == 0.75);
}

TEST_CASE("dimension guard") {
  const int old_max = MaxDimension();
  SetMaxDimension(4);
  CHECK_THROWS_AS(CubeFunction::Constant(5, 0.0, ValueKind::kReal), Error);
  SetMaxDimension(old_max);
  CHECK_THROWS_AS(SetMaxDimension(41), Error);
  CHECK_THROWS_AS(SetMaxDimension(-1), Error);
}

TEST_CASE("coordinate validation") {
  CHECK_THROWS_AS(RequireCoordinate(3, 0), Error);
  CHECK_THROWS_AS(RequireCoordinate(3, 4), Error);
  const CubeFunction f = And(2, {});
  const CubeFunction g = Or(3, {});
  CHECK_THROWS_AS(RequireSameDimension(f, g), Error);
}

TEST_CASE("deterministic rng") {
  Rng a(42);
  Rng b(42);
  for (int k = 0; k < 100; ++k) {
    CHECK(a.NextU64() == b.NextU64());
  }
  Rng c(42);
  for (int k = 0; k < 100; ++k) {
    const double u = c.Uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(c.Below(10) < 10);
  }
}
