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

#ifndef HCUBE_STRUCTURE_HPP_
#define HCUBE_STRUCTURE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hcube/cube_function.hpp"

namespace hcube {

// A point (and coordinate pair) certifying a violated pointwise condition.
struct Witness {
  std::uint64_t mask = 0;
  int i = 0;
  int j = 0;  // unused (0) for single-coordinate witnesses
};

struct IncreasingResult {
  bool increasing = false;
  // Present iff not increasing: d_i f < -kZeroTol at mask (with bit i clear).
  std::optional<Witness> witness;
};

enum class Modularity { kModular, kSubmodular, kSupermodular, kNeither };

struct ModularityResult {
  Modularity classification = Modularity::kNeither;
  bool submodular = false;   // all d_ij f <= kZeroTol (includes modular)
  bool supermodular = false; // all d_ij f >= -kZeroTol (includes modular)
  // Points where the respective side fails, when it does.
  std::optional<Witness> submodular_witness;
  std::optional<Witness> supermodular_witness;
};

struct AntipodalResult {
  bool antipodal = false;
  std::optional<std::uint64_t> witness_mask;
};

struct InteractionGraph {
  int n = 0;
  // 1-based coordinate pairs (i < j) where d_ij f is not identically zero
  // (max |d_ij f| > kZeroTol), sorted lexicographically.
  std::vector<std::pair<int, int>> edges;
};

// min over i and points of d_i f, with tolerance kZeroTol.
IncreasingResult IsIncreasing(const CubeFunction& f);

// Sign pattern of all second derivatives. For n <= 10 the result is
// cross-checked against the lattice inequality
// f(x) + f(y) >= f(x AND y) + f(x OR y) and the diminishing-returns form;
// disagreement raises an internal error.
ModularityResult ClassifyModularity(const CubeFunction& f);

// Boolean functions only: f(x) = 1 - f(complement of x) everywhere.
AntipodalResult IsAntipodal(const CubeFunction& f);

// E|d_i f|^p, p > 0. For boolean f and p = 2 this is the flip probability.
double Influence(const CubeFunction& f, int i, double p);

std::vector<double> InfluenceVector(const CubeFunction& f, double p);

// Sum over i of the p = 2 influences.
double TotalInfluence(const CubeFunction& f);

// Sum over i of Inf_i[f] * Inf_i[g], flip-probability influences; both
// functions must be boolean.
double CrossTotalInfluence(const CubeFunction& f, const CubeFunction& g);

InteractionGraph ComputeInteractionGraph(const CubeFunction& f);

bool DisjointEdges(const InteractionGraph& a, const InteractionGraph& b);

struct StructureProfile {
  int n = 0;
  ValueKind kind = ValueKind::kReal;
  IncreasingResult increasing;
  ModularityResult modularity;
  std::optional<AntipodalResult> antipodal;  // absent for real-valued tables
  std::vector<double> influences_l1;
  std::vector<double> influences_l2;
  double total_influence = 0.0;
  InteractionGraph graph;
};

StructureProfile ComputeProfile(const CubeFunction& f);

std::string ModularityName(Modularity m);

}  // namespace hcube

#endif  // HCUBE_STRUCTURE_HPP_
