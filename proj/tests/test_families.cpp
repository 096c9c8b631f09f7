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

#include <bit>
#include <cstdint>
#include <vector>

#include "hcube/cube_function.hpp"
#include "hcube/error.hpp"
#include "hcube/families.hpp"
#include "hcube/structure.hpp"

using namespace hcube;

namespace {

bool SameTable(const CubeFunction& a, const CubeFunction& b) {
  if (a.n() != b.n()) return false;
  for (std::uint64_t m = 0; m < a.size(); ++m) {
    if (a[m] != b[m]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("named tables") {
  const CubeFunction d = Dictator(3, 2);
  for (std::uint64_t m = 0; m < 8; ++m) CHECK(d[m] == ((m >> 1) & 1));

  const CubeFunction a = And(2, {});
  CHECK(a[0] == 0.0);
  CHECK(a[1] == 0.0);
  CHECK(a[2] == 0.0);
  CHECK(a[3] == 1.0);
  const CubeFunction a13 = And(3, {1, 3});
  for (std::uint64_t m = 0; m < 8; ++m) {
    CHECK(a13[m] == (((m & 0b101) == 0b101) ? 1.0 : 0.0));
  }

  const CubeFunction o = Or(2, {});
  CHECK(o[0] == 0.0);
  CHECK(o[1] == 1.0);
  CHECK(o[2] == 1.0);
  CHECK(o[3] == 1.0);

  const CubeFunction maj = Majority(3);
  for (std::uint64_t m = 0; m < 8; ++m) {
    CHECK(maj[m] == ((std::popcount(m) >= 2) ? 1.0 : 0.0));
  }
  CHECK_THROWS_AS(Majority(4), Error);

  const CubeFunction th = Threshold(4, 2);
  for (std::uint64_t m = 0; m < 16; ++m) {
    CHECK(th[m] == ((std::popcount(m) >= 2) ? 1.0 : 0.0));
  }
  CHECK(Threshold(3, 0)[0] == 1.0);
  CHECK(Threshold(3, 4)[7] == 0.0);
  CHECK_THROWS_AS(Threshold(3, 5), Error);

  const CubeFunction tr = Tribes(2, 2);
  REQUIRE(tr.n() == 4);
  for (std::uint64_t m = 0; m < 16; ++m) {
    const bool first = (m & 0b0011) == 0b0011;
    const bool second = (m & 0b1100) == 0b1100;
    CHECK(tr[m] == ((first || second) ? 1.0 : 0.0));
  }

  const CubeFunction p = Parity(2, {1});
  CHECK(p[0] == 1.0);
  CHECK(p[1] == -1.0);
  CHECK(p[2] == 1.0);
  CHECK(p[3] == -1.0);

  CHECK_THROWS_AS(Dictator(3, 4), Error);
  CHECK_THROWS_AS(And(3, {1, 1}), Error);
  CHECK_THROWS_AS(And(3, {4}), Error);
}

TEST_CASE("duality") {
  CHECK(SameTable(Dual(And(2, {})), Or(2, {})));
  CHECK(SameTable(Dual(Or(2, {})), And(2, {})));
  CHECK(SameTable(Dual(Dictator(3, 2)), Dictator(3, 2)));
  CHECK(SameTable(Dual(Majority(5)), Majority(5)));
  for (std::uint64_t seed : {1ull, 7ull, 9ull}) {
    const CubeFunction f = RandomMonotone(4, seed);
    CHECK(SameTable(Dual(Dual(f)), f));
    CHECK(IsIncreasing(Dual(f)).increasing);
  }
  CHECK_THROWS_AS(Dual(Parity(2, {})), Error);
}

TEST_CASE("embedding into a larger cube") {
  const CubeFunction e = Embed(And(2, {}), 4, {2, 4});
  REQUIRE(e.n() == 4);
  for (std::uint64_t m = 0; m < 16; ++m) {
    CHECK(e[m] == (((m & 0b1010) == 0b1010) ? 1.0 : 0.0));
  }
  // Order matters: the first listed coordinate receives input bit 1.
  const CubeFunction swapped = Embed(Dictator(2, 1), 3, {3, 1});
  for (std::uint64_t m = 0; m < 8; ++m) {
    CHECK(swapped[m] == (((m >> 2) & 1) ? 1.0 : 0.0));
  }
  CHECK_THROWS_AS(Embed(And(2, {}), 3, {1}), Error);
  CHECK_THROWS_AS(Embed(And(2, {}), 3, {1, 1}), Error);
  CHECK_THROWS_AS(Embed(And(2, {}), 3, {1, 4}), Error);
}

TEST_CASE("random monotone tables") {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
      const CubeFunction f = RandomMonotone(n, seed);
      CHECK(f.is_boolean());
      CHECK(IsIncreasing(f).increasing);
      CHECK(SameTable(f, RandomMonotone(n, seed)));
    }
  }
  CHECK_FALSE(SameTable(RandomMonotone(5, 1), RandomMonotone(5, 2)));
}

TEST_CASE("random coverage tables") {
  for (int n = 2; n <= 6; ++n) {
    const CubeFunction f = RandomCoverage(n, 5, 0);
    CHECK_FALSE(f.is_boolean());
    CHECK(IsIncreasing(f).increasing);
    const ModularityResult m = ClassifyModularity(f);
    CHECK(m.submodular);
    for (double v : f.values()) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
    CHECK(SameTable(f, RandomCoverage(n, 5, 0)));
  }
}

TEST_CASE("random supermodular tables") {
  for (int n = 2; n <= 6; ++n) {
    const CubeFunction f = RandomSupermodular(n, 5, 0);
    CHECK(IsIncreasing(f).increasing);
    CHECK(ClassifyModularity(f).supermodular);
    for (double v : f.values()) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
    CHECK(SameTable(f, RandomSupermodular(n, 5, 0)));
  }
}

TEST_CASE("support-confined generators share a forced edge") {
  const std::vector<int> support = {1, 2, 4};
  for (std::uint64_t seed : {3ull, 11ull}) {
    const CubeFunction f = RandomSupermodularOn(6, support, seed);
    const CubeFunction g = RandomCoverageOn(6, support, seed + 1);
    CHECK(ClassifyModularity(f).supermodular);
    CHECK(ClassifyModularity(g).submodular);
    for (const CubeFunction* h : {&f, &g}) {
      const InteractionGraph graph = ComputeInteractionGraph(*h);
      bool forced = false;
      for (auto [i, j] : graph.edges) {
        if (i == 1 && j == 2) forced = true;
        // Edges stay inside the declared support.
        CHECK((i == 1 || i == 2 || i == 4));
        CHECK((j == 2 || j == 4));
      }
      CHECK(forced);
    }
  }
}

TEST_CASE("declarative generation") {
  FamilySpec spec;
  spec.name = "and";
  spec.n = 2;
  CHECK(SameTable(Generate(spec), And(2, {})));

  spec.name = "tribes";
  spec.n = 4;
  spec.width = 2;
  spec.count = 2;
  CHECK(SameTable(Generate(spec), Tribes(2, 2)));

  spec.name = "threshold";
  spec.n = 4;
  spec.k = 2;
  CHECK(SameTable(Generate(spec), Threshold(4, 2)));

  spec.name = "random_monotone";
  spec.n = 4;
  spec.seed = 9;
  CHECK(SameTable(Generate(spec), RandomMonotone(4, 9)));

  spec.name = "nope";
  CHECK_THROWS_AS(Generate(spec), Error);

  CHECK(KnownFamilyNames().size() == 10);
}
