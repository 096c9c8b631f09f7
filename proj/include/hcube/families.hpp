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

#ifndef HCUBE_FAMILIES_HPP_
#define HCUBE_FAMILIES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "hcube/cube_function.hpp"

namespace hcube {

CubeFunction Dictator(int n, int i);

// Indicator of all coordinates in coords being 1 (empty list means all n).
CubeFunction And(int n, const std::vector<int>& coords);
CubeFunction Or(int n, const std::vector<int>& coords);

// n odd.
CubeFunction Majority(int n);

// 1 when at least k coordinates are set; k in 0..n+1 (0 gives the constant
// 1 table, n+1 the constant 0 table).
CubeFunction Threshold(int n, int k);

// OR of m ANDs over consecutive blocks of width w; dimension w*m.
CubeFunction Tribes(int width, int count);

// The character chi_S as a +-1 table (real kind); coords lists S.
CubeFunction Parity(int n, const std::vector<int>& coords);

// dual(f)(x) = 1 - f(complement of x); boolean in, boolean out.
CubeFunction Dual(const CubeFunction& f);

// Places f on the chosen coordinates of a larger cube (the result ignores
// the remaining coordinates). coords must have f.n() distinct entries.
CubeFunction Embed(const CubeFunction& f, int n, const std::vector<int>& coords);

// Random boolean table repaired by upward closure; monotone by construction.
CubeFunction RandomMonotone(int n, std::uint64_t seed);

// Weighted coverage function over a ground set: coordinate i owns a random
// subset of the universe, f(x) is the covered weight, normalized by the
// total universe weight. Monotone and submodular. universe_size 0 picks
// 3n elements.
CubeFunction RandomCoverage(int n, std::uint64_t seed, int universe_size);

// Nonnegative combination of AND terms, normalized to [0,1]. Monotone and
// supermodular. terms 0 picks 2n atoms.
CubeFunction RandomSupermodular(int n, std::uint64_t seed, int terms);

// As above but the atoms are drawn inside the given coordinate subset, so
// the interaction graph is confined to it. Every returned function contains
// at least one atom covering the whole subset when it has >= 2 coordinates.
CubeFunction RandomSupermodularOn(int n, const std::vector<int>& support,
                                  std::uint64_t seed);

// Coverage function whose sets live on the given coordinates only; when the
// subset has >= 2 coordinates the first two are forced to overlap on the
// ground set, so that edge is present in the interaction graph.
CubeFunction RandomCoverageOn(int n, const std::vector<int>& support,
                              std::uint64_t seed);

// Declarative generation: name plus parameters, mirrors the CLI surface.
struct FamilySpec {
  std::string name;
  int n = 0;
  std::vector<int> coords;   // dictator/and/or/parity; also embed support
  int k = 0;                 // threshold
  int width = 0;             // tribes
  int count = 0;             // tribes
  std::uint64_t seed = 1;    // random families
  int universe = 0;          // random_coverage
  int terms = 0;             // random_supermodular
};

CubeFunction Generate(const FamilySpec& spec);

std::vector<std::string> KnownFamilyNames();

}  // namespace hcube

#endif  // HCUBE_FAMILIES_HPP_
