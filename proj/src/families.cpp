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

#include "hcube/families.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "hcube/random.hpp"

namespace hcube {

namespace {

std::uint64_t CoordsToMask(int n, const std::vector<int>& coords) {
  std::uint64_t mask = 0;
  std::set<int> seen;
  for (int i : coords) {
    RequireCoordinate(n, i);
    Require(seen.insert(i).second, ErrorCode::kInvalidArgument,
            "coordinates must be distinct");
    mask |= std::uint64_t{1} << (i - 1);
  }
  return mask;
}

}  // namespace

CubeFunction Dictator(int n, int i) {
  RequireCoordinate(n, i);
  const std::uint64_t e = std::uint64_t{1} << (i - 1);
  std::vector<double> values(std::uint64_t{1} << n);
  for (std::uint64_t m = 0; m < values.size(); ++m) {
    values[m] = (m & e) ? 1.0 : 0.0;
  }
  return CubeFunction(n, std::move(values), ValueKind::kBoolean);
}

CubeFunction And(int n, const std::vector<int>& coords) {
  Require(n >= 1, ErrorCode::kInvalidArgument, "dimension must be positive");
  std::uint64_t mask = CoordsToMask(n, coords);
  if (coords.empty()) mask = (std::uint64_t{1} << n) - 1;
  std::vector<double> values(std::uint64_t{1} << n);
  for (std::uint64_t m = 0; m < values.size(); ++m) {
    values[m] = ((m & mask) == mask) ? 1.0 : 0.0;
  }
  return CubeFunction(n, std::move(values), ValueKind::kBoolean);
}

CubeFunction Or(int n, const std::vector<int>& coords) {
  Require(n >= 1, ErrorCode::kInvalidArgument, "dimension must be positive");
  std::uint64_t mask = CoordsToMask(n, coords);
  if (coords.empty()) mask = (std::uint64_t{1} << n) - 1;
  std::vector<double> values(std::uint64_t{1} << n);
  for (std::uint64_t m = 0; m < values.size(); ++m) {
    values[m] = (m & mask) ? 1.0 : 0.0;
  }
  return CubeFunction(n, std::move(values), ValueKind::kBoolean);
}

CubeFunction Majority(int n) {
  Require(n >= 1 && n % 2 == 1, ErrorCode::kInvalidArgument,
          "majority needs odd dimension");
  return Threshold(n, (n + 1) / 2);
}

CubeFunction Threshold(int n, int k) {
  Require(n >= 1, ErrorCode::kInvalidArgument, "dimension must be positive");
  Require(k >= 0 && k <= n + 1, ErrorCode::kInvalidArgument,
          "threshold must lie in 0..n+1");
  std::vector<double> values(std::uint64_t{1} << n);
  for (std::uint64_t m = 0; m < values.size(); ++m) {
    values[m] = (std::popcount(m) >= k) ? 1.0 : 0.0;
  }
  return CubeFunction(n, std::move(values), ValueKind::kBoolean);
}

CubeFunction Tribes(int width, int count) {
  Require(width >= 1 && count >= 1, ErrorCode::kInvalidArgument,
          "tribes needs positive width and count");
  const int n = width * count;
  Require(n <= MaxDimension(), ErrorCode::kInvalidArgument,
          "tribes dimension exceeds limit");
  std::vector<double> values(std::uint64_t{1} << n);
  for (std::uint64_t m = 0; m < values.size(); ++m) {
    bool any = false;
    for (int b = 0; b < count && !any; ++b) {
      const std::uint64_t block =
          ((std::uint64_t{1} << width) - 1) << (b * width);
      any = (m & block) == block;
    }
    values[m] = any ? 1.0 : 0.0;
  }
  return CubeFunction(n, std::move(values), ValueKind::kBoolean);
}

CubeFunction Parity(int n, const std::vector<int>& coords) {
  Require(n >= 1, ErrorCode::kInvalidArgument, "dimension must be positive");
  std::uint64_t mask = CoordsToMask(n, coords);
  if (coords.empty()) mask = (std::uint64_t{1} << n) - 1;
  std::vector<double> values(std::uint64_t{1} << n);
  for (std::uint64_t m = 0; m < values.size(); ++m) {
    values[m] = (std::popcount(m & mask) & 1) ? -1.0 : 1.0;
  }
  return CubeFunction(n, std::move(values), ValueKind::kReal);
}

CubeFunction Dual(const CubeFunction& f) {
  Require(f.is_boolean(), ErrorCode::kInvalidArgument,
          "dual expects a boolean table");
  const std::uint64_t all = f.size() - 1;
  std::vector<double> values(f.size());
  for (std::uint64_t m = 0; m < f.size(); ++m) {
    values[m] = 1.0 - f[~m & all];
  }
  return CubeFunction(f.n(), std::move(values), ValueKind::kBoolean);
}

CubeFunction Embed(const CubeFunction& f, int n, const std::vector<int>& coords) {
  Require(n >= f.n(), ErrorCode::kInvalidArgument,
          "target dimension too small");
  Require(static_cast<int>(coords.size()) == f.n(), ErrorCode::kInvalidArgument,
          "need one target coordinate per source coordinate");
  CoordsToMask(n, coords);
  std::vector<double> values(std::uint64_t{1} << n);
  for (std::uint64_t m = 0; m < values.size(); ++m) {
    std::uint64_t src = 0;
    for (std::size_t b = 0; b < coords.size(); ++b) {
      if (m & (std::uint64_t{1} << (coords[b] - 1))) src |= std::uint64_t{1} << b;
    }
    values[m] = f[src];
  }
  return CubeFunction(n, std::move(values), f.kind());
}

CubeFunction RandomMonotone(int n, std::uint64_t seed) {
  Require(n >= 1, ErrorCode::kInvalidArgument, "dimension must be positive");
  Rng rng(seed);
  const std::uint64_t size = std::uint64_t{1} << n;
  const double density = std::min(0.5, 4.0 / static_cast<double>(size));
  std::vector<double> values(size);
  for (std::uint64_t m = 0; m < size; ++m) {
    values[m] = rng.Bernoulli(density) ? 1.0 : 0.0;
  }
  // Upward closure: propagate ones to supersets, one coordinate at a time.
  for (int i = 0; i < n; ++i) {
    const std::uint64_t e = std::uint64_t{1} << i;
    for (std::uint64_t m = 0; m < size; ++m) {
      if ((m & e) && values[m & ~e] == 1.0) values[m] = 1.0;
    }
  }
  return CubeFunction(n, std::move(values), ValueKind::kBoolean);
}

namespace {

CubeFunction CoverageFromSets(int n, const std::vector<std::uint64_t>& sets,
                              const std::vector<double>& weights) {
  double total = 0.0;
  for (double w : weights) total += w;
  std::vector<double> values(std::uint64_t{1} << n, 0.0);
  for (std::uint64_t m = 0; m < values.size(); ++m) {
    std::uint64_t covered = 0;
    for (int i = 0; i < n; ++i) {
      if (m & (std::uint64_t{1} << i)) covered |= sets[i];
    }
    double sum = 0.0;
    for (std::size_t u = 0; u < weights.size(); ++u) {
      if (covered & (std::uint64_t{1} << u)) sum += weights[u];
    }
    values[m] = total > 0.0 ? sum / total : 0.0;
  }
  return CubeFunction(n, std::move(values), ValueKind::kReal);
}

CubeFunction SupermodularFromAtoms(int n, const std::vector<std::uint64_t>& atoms,
                                   const std::vector<double>& weights) {
  double total = 0.0;
  for (double w : weights) total += w;
  std::vector<double> values(std::uint64_t{1} << n, 0.0);
  for (std::uint64_t m = 0; m < values.size(); ++m) {
    double sum = 0.0;
    for (std::size_t a = 0; a < atoms.size(); ++a) {
      if ((m & atoms[a]) == atoms[a]) sum += weights[a];
    }
    values[m] = total > 0.0 ? sum / total : 0.0;
  }
  return CubeFunction(n, std::move(values), ValueKind::kReal);
}

}  // namespace

CubeFunction RandomCoverage(int n, std::uint64_t seed, int universe_size) {
  Require(n >= 1, ErrorCode::kInvalidArgument, "dimension must be positive");
  if (universe_size <= 0) universe_size = 3 * n;
  Require(universe_size <= 62, ErrorCode::kInvalidArgument,
          "universe too large");
  Rng rng(seed);
  std::vector<std::uint64_t> sets(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int u = 0; u < universe_size; ++u) {
      if (rng.Bernoulli(0.5)) sets[i] |= std::uint64_t{1} << u;
    }
  }
  std::vector<double> weights(universe_size);
  for (double& w : weights) w = 0.05 + 0.95 * rng.Uniform01();
  return CoverageFromSets(n, sets, weights);
}

CubeFunction RandomCoverageOn(int n, const std::vector<int>& support,
                              std::uint64_t seed) {
  Require(!support.empty(), ErrorCode::kInvalidArgument,
          "support must be non-empty");
  CoordsToMask(n, support);
  const int universe_size = std::min(62, 3 * static_cast<int>(support.size()));
  Rng rng(seed);
  std::vector<std::uint64_t> sets(n, 0);
  for (int i : support) {
    for (int u = 0; u < universe_size; ++u) {
      if (rng.Bernoulli(0.5)) sets[i - 1] |= std::uint64_t{1} << u;
    }
  }
  if (support.size() >= 2) {
    // Shared ground element between the first two support coordinates.
    sets[support[0] - 1] |= 1;
    sets[support[1] - 1] |= 1;
  }
  std::vector<double> weights(universe_size);
  for (double& w : weights) w = 0.05 + 0.95 * rng.Uniform01();
  return CoverageFromSets(n, sets, weights);
}

CubeFunction RandomSupermodular(int n, std::uint64_t seed, int terms) {
  Require(n >= 1, ErrorCode::kInvalidArgument, "dimension must be positive");
  if (terms <= 0) terms = 2 * n;
  Rng rng(seed);
  std::vector<std::uint64_t> atoms;
  std::vector<double> weights;
  for (int a = 0; a < terms; ++a) {
    // Small atoms dominate; sizes 1..min(n,4), uniform coordinates.
    const int size = 1 + static_cast<int>(rng.Below(std::min(n, 4)));
    std::uint64_t atom = 0;
    while (std::popcount(atom) < size) {
      atom |= std::uint64_t{1} << rng.Below(n);
    }
    atoms.push_back(atom);
    weights.push_back(0.05 + 0.95 * rng.Uniform01());
  }
  return SupermodularFromAtoms(n, atoms, weights);
}

CubeFunction RandomSupermodularOn(int n, const std::vector<int>& support,
                                  std::uint64_t seed) {
  Require(!support.empty(), ErrorCode::kInvalidArgument,
          "support must be non-empty");
  CoordsToMask(n, support);
  Rng rng(seed);
  std::vector<std::uint64_t> atoms;
  std::vector<double> weights;
  const int terms = 2 * static_cast<int>(support.size());
  for (int a = 0; a < terms; ++a) {
    const int size =
        1 + static_cast<int>(rng.Below(std::min<std::size_t>(support.size(), 3)));
    std::uint64_t atom = 0;
    while (std::popcount(atom) < size) {
      const int pick = support[rng.Below(support.size())];
      atom |= std::uint64_t{1} << (pick - 1);
    }
    atoms.push_back(atom);
    weights.push_back(0.05 + 0.95 * rng.Uniform01());
  }
  if (support.size() >= 2) {
    // Guarantees a nonzero second difference on the first support pair.
    atoms.push_back((std::uint64_t{1} << (support[0] - 1)) |
                    (std::uint64_t{1} << (support[1] - 1)));
    weights.push_back(1.0);
  }
  return SupermodularFromAtoms(n, atoms, weights);
}

CubeFunction Generate(const FamilySpec& spec) {
  if (spec.name == "dictator") {
    Require(spec.coords.size() == 1, ErrorCode::kInvalidArgument,
            "dictator needs exactly one coordinate");
    return Dictator(spec.n, spec.coords.front());
  }
  if (spec.name == "and") return And(spec.n, spec.coords);
  if (spec.name == "or") return Or(spec.n, spec.coords);
  if (spec.name == "majority") return Majority(spec.n);
  if (spec.name == "threshold") return Threshold(spec.n, spec.k);
  if (spec.name == "tribes") {
    const CubeFunction f = Tribes(spec.width, spec.count);
    Require(spec.n == 0 || spec.n == f.n(), ErrorCode::kInvalidArgument,
            "tribes dimension is width * count");
    return f;
  }
  if (spec.name == "parity") return Parity(spec.n, spec.coords);
  if (spec.name == "random_monotone") return RandomMonotone(spec.n, spec.seed);
  if (spec.name == "random_coverage") {
    return RandomCoverage(spec.n, spec.seed, spec.universe);
  }
  if (spec.name == "random_supermodular") {
    return RandomSupermodular(spec.n, spec.seed, spec.terms);
  }
  Fail(ErrorCode::kInvalidArgument, "unknown family: " + spec.name);
}

std::vector<std::string> KnownFamilyNames() {
  return {"dictator", "and",    "or",
          "majority", "threshold", "tribes",
          "parity",   "random_monotone", "random_coverage",
          "random_supermodular"};
}

}  // namespace hcube
