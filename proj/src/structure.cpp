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

#include "hcube/structure.hpp"

#include <cmath>

namespace hcube {

namespace {

std::uint64_t CoordinateBit(int i) { return std::uint64_t{1} << (i - 1); }

// Lattice form: f(x) + f(y) >= f(x AND y) + f(x OR y) for all pairs.
bool LatticeSubmodular(const CubeFunction& f) {
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    for (std::uint64_t y = 0; y < x; ++y) {
      if (f[x] + f[y] < f[x & y] + f[x | y] - kZeroTol) return false;
    }
  }
  return true;
}

// Diminishing returns: f(A + k) - f(A) >= f(B + k) - f(B) for A subset of B,
// k outside B.
bool ChainSubmodular(const CubeFunction& f) {
  for (std::uint64_t b = 0; b < f.size(); ++b) {
    // Enumerate subsets a of b.
    std::uint64_t a = b;
    while (true) {
      for (int k = 1; k <= f.n(); ++k) {
        const std::uint64_t e = CoordinateBit(k);
        if (b & e) continue;
        if (f[(a | e)] - f[a] < f[(b | e)] - f[b] - kZeroTol) return false;
      }
      if (a == 0) break;
      a = (a - 1) & b;
    }
  }
  return true;
}

CubeFunction Negate(const CubeFunction& f) {
  std::vector<double> out(f.size());
  for (std::uint64_t m = 0; m < f.size(); ++m) out[m] = -f[m];
  return CubeFunction(f.n(), std::move(out), ValueKind::kReal);
}

}  // namespace

IncreasingResult IsIncreasing(const CubeFunction& f) {
  for (int i = 1; i <= f.n(); ++i) {
    const std::uint64_t e = CoordinateBit(i);
    for (std::uint64_t m = 0; m < f.size(); ++m) {
      if (m & e) continue;
      if (f[m | e] - f[m] < -kZeroTol) {
        return {false, Witness{m, i, 0}};
      }
    }
  }
  return {true, std::nullopt};
}

ModularityResult ClassifyModularity(const CubeFunction& f) {
  ModularityResult result;
  result.submodular = true;
  result.supermodular = true;
  for (int i = 1; i <= f.n() && (result.submodular || result.supermodular); ++i) {
    for (int j = i + 1; j <= f.n(); ++j) {
      const std::uint64_t ei = CoordinateBit(i);
      const std::uint64_t ej = CoordinateBit(j);
      for (std::uint64_t m = 0; m < f.size(); ++m) {
        if (m & (ei | ej)) continue;
        const double dd = f[m | ei | ej] - f[m | ei] - f[m | ej] + f[m];
        if (dd > kZeroTol && result.submodular) {
          result.submodular = false;
          result.submodular_witness = Witness{m, i, j};
        }
        if (dd < -kZeroTol && result.supermodular) {
          result.supermodular = false;
          result.supermodular_witness = Witness{m, i, j};
        }
        if (!result.submodular && !result.supermodular) break;
      }
    }
  }
  if (result.submodular && result.supermodular) {
    result.classification = Modularity::kModular;
  } else if (result.submodular) {
    result.classification = Modularity::kSubmodular;
  } else if (result.supermodular) {
    result.classification = Modularity::kSupermodular;
  } else {
    result.classification = Modularity::kNeither;
  }

  if (f.n() <= 10) {
    const CubeFunction neg = Negate(f);
    const bool lattice_sub = LatticeSubmodular(f);
    const bool lattice_super = LatticeSubmodular(neg);
    const bool chain_sub = ChainSubmodular(f);
    const bool chain_super = ChainSubmodular(neg);
    Require(lattice_sub == result.submodular && chain_sub == result.submodular &&
                lattice_super == result.supermodular &&
                chain_super == result.supermodular,
            ErrorCode::kInternal,
            "modularity characterizations disagree");
  }
  return result;
}

AntipodalResult IsAntipodal(const CubeFunction& f) {
  Require(f.is_boolean(), ErrorCode::kNotApplicable,
          "antipodality is defined for boolean tables");
  const std::uint64_t all = f.size() - 1;
  for (std::uint64_t m = 0; m < f.size(); ++m) {
    if (f[m] != 1.0 - f[~m & all]) {
      return {false, m};
    }
  }
  return {true, std::nullopt};
}

double Influence(const CubeFunction& f, int i, double p) {
  RequireCoordinate(f.n(), i);
  Require(std::isfinite(p) && p > 0.0, ErrorCode::kInvalidArgument,
          "influence exponent must be positive");
  const std::uint64_t e = CoordinateBit(i);
  double sum = 0.0;
  for (std::uint64_t m = 0; m < f.size(); ++m) {
    if (m & e) continue;
    // |d_i f| takes the same value on both halves of the pair.
    sum += 2.0 * std::pow(std::fabs(f[m | e] - f[m]), p);
  }
  return sum / static_cast<double>(f.size());
}

std::vector<double> InfluenceVector(const CubeFunction& f, double p) {
  std::vector<double> out;
  out.reserve(f.n());
  for (int i = 1; i <= f.n(); ++i) out.push_back(Influence(f, i, p));
  return out;
}

double TotalInfluence(const CubeFunction& f) {
  double sum = 0.0;
  for (int i = 1; i <= f.n(); ++i) sum += Influence(f, i, 2.0);
  return sum;
}

double CrossTotalInfluence(const CubeFunction& f, const CubeFunction& g) {
  RequireSameDimension(f, g);
  Require(f.is_boolean() && g.is_boolean(), ErrorCode::kInvalidArgument,
          "cross total influence expects boolean tables");
  double sum = 0.0;
  for (int i = 1; i <= f.n(); ++i) {
    sum += Influence(f, i, 2.0) * Influence(g, i, 2.0);
  }
  return sum;
}

InteractionGraph ComputeInteractionGraph(const CubeFunction& f) {
  InteractionGraph graph;
  graph.n = f.n();
  for (int i = 1; i <= f.n(); ++i) {
    for (int j = i + 1; j <= f.n(); ++j) {
      const std::uint64_t ei = CoordinateBit(i);
      const std::uint64_t ej = CoordinateBit(j);
      bool edge = false;
      for (std::uint64_t m = 0; m < f.size() && !edge; ++m) {
        if (m & (ei | ej)) continue;
        const double dd = f[m | ei | ej] - f[m | ei] - f[m | ej] + f[m];
        if (std::fabs(dd) > kZeroTol) edge = true;
      }
      if (edge) graph.edges.emplace_back(i, j);
    }
  }
  return graph;
}

bool DisjointEdges(const InteractionGraph& a, const InteractionGraph& b) {
  for (const auto& ea : a.edges) {
    for (const auto& eb : b.edges) {
      if (ea == eb) return false;
    }
  }
  return true;
}

StructureProfile ComputeProfile(const CubeFunction& f) {
  StructureProfile profile;
  profile.n = f.n();
  profile.kind = f.kind();
  profile.increasing = IsIncreasing(f);
  profile.modularity = ClassifyModularity(f);
  if (f.is_boolean()) profile.antipodal = IsAntipodal(f);
  profile.influences_l1 = InfluenceVector(f, 1.0);
  profile.influences_l2 = InfluenceVector(f, 2.0);
  profile.total_influence = 0.0;
  for (double v : profile.influences_l2) profile.total_influence += v;
  profile.graph = ComputeInteractionGraph(f);
  return profile;
}

std::string ModularityName(Modularity m) {
  switch (m) {
    case Modularity::kModular: return "modular";
    case Modularity::kSubmodular: return "submodular";
    case Modularity::kSupermodular: return "supermodular";
    case Modularity::kNeither: return "neither";
  }
  return "neither";
}

}  // namespace hcube
