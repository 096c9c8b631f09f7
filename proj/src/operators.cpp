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

#include "hcube/operators.hpp"

#include <bit>
#include <cmath>
#include <set>

namespace hcube {

namespace {

std::uint64_t CoordinateBit(int i) { return std::uint64_t{1} << (i - 1); }

}  // namespace

CubeFunction Derivative(const CubeFunction& f, int i) {
  RequireCoordinate(f.n(), i);
  const std::uint64_t e = CoordinateBit(i);
  std::vector<double> out(f.size());
  for (std::uint64_t m = 0; m < f.size(); ++m) {
    out[m] = f[m | e] - f[m & ~e];
  }
  return CubeFunction(f.n(), std::move(out), ValueKind::kReal);
}

CubeFunction SignedDifference(const CubeFunction& f, int i) {
  RequireCoordinate(f.n(), i);
  const std::uint64_t e = CoordinateBit(i);
  std::vector<double> out(f.size());
  for (std::uint64_t m = 0; m < f.size(); ++m) {
    out[m] = f[m] - f[m ^ e];
  }
  return CubeFunction(f.n(), std::move(out), ValueKind::kReal);
}

CubeFunction SecondDerivative(const CubeFunction& f, int i, int j) {
  RequireCoordinate(f.n(), i);
  RequireCoordinate(f.n(), j);
  Require(i != j, ErrorCode::kInvalidArgument,
          "second derivative needs distinct coordinates");
  const std::uint64_t ei = CoordinateBit(i);
  const std::uint64_t ej = CoordinateBit(j);
  std::vector<double> out(f.size());
  for (std::uint64_t m = 0; m < f.size(); ++m) {
    out[m] = f[m | ei | ej] - f[(m | ei) & ~ej] - f[(m | ej) & ~ei] +
             f[m & ~ei & ~ej];
  }
  return CubeFunction(f.n(), std::move(out), ValueKind::kReal);
}

CubeFunction SignedSecondDifference(const CubeFunction& f, int i, int j) {
  RequireCoordinate(f.n(), i);
  RequireCoordinate(f.n(), j);
  Require(i != j, ErrorCode::kInvalidArgument,
          "signed second difference needs distinct coordinates");
  const std::uint64_t ei = CoordinateBit(i);
  const std::uint64_t ej = CoordinateBit(j);
  std::vector<double> out(f.size());
  for (std::uint64_t m = 0; m < f.size(); ++m) {
    out[m] = f[m] + f[m ^ ei ^ ej] - f[m ^ ei] - f[m ^ ej];
  }
  return CubeFunction(f.n(), std::move(out), ValueKind::kReal);
}

CubeFunction HigherDerivative(const CubeFunction& f,
                              const std::vector<int>& coords) {
  std::set<int> seen;
  for (int i : coords) {
    RequireCoordinate(f.n(), i);
    Require(seen.insert(i).second, ErrorCode::kInvalidArgument,
            "derivative coordinates must be distinct");
  }
  CubeFunction out(f.n(), std::vector<double>(f.values().begin(), f.values().end()),
                   ValueKind::kReal);
  for (int i : coords) out = Derivative(out, i);
  return out;
}

CubeFunction NoiseOperator(const CubeFunction& f, double t) {
  Require(std::isfinite(t) && t >= 0.0, ErrorCode::kInvalidArgument,
          "noise time must be nonnegative");
  Spectrum s = FourierTransform(f);
  std::vector<double>& c = s.mutable_coeffs();
  // One decay factor per level, applied by popcount.
  std::vector<double> decay(f.n() + 1);
  for (int k = 0; k <= f.n(); ++k) decay[k] = std::exp(-t * k);
  for (std::uint64_t m = 0; m < c.size(); ++m) c[m] *= decay[std::popcount(m)];
  return InverseTransform(s);
}

CubeFunction RestrictCoordinate(const CubeFunction& f, int i, int bit) {
  Require(f.n() >= 2, ErrorCode::kInvalidArgument,
          "restriction needs dimension at least 2");
  RequireCoordinate(f.n(), i);
  Require(bit == 0 || bit == 1, ErrorCode::kInvalidArgument,
          "restriction bit must be 0 or 1");
  const std::uint64_t e = CoordinateBit(i);
  const std::uint64_t low = e - 1;
  std::vector<double> out(f.size() >> 1);
  for (std::uint64_t m = 0; m < out.size(); ++m) {
    const std::uint64_t src = (m & low) | ((m & ~low) << 1) | (bit ? e : 0);
    out[m] = f[src];
  }
  return CubeFunction(f.n() - 1, std::move(out), f.kind());
}

CubeFunction CharacterTwist(const CubeFunction& f, int i, int j) {
  RequireCoordinate(f.n(), i);
  RequireCoordinate(f.n(), j);
  Require(i != j, ErrorCode::kInvalidArgument,
          "character twist needs distinct coordinates");
  const std::uint64_t ei = CoordinateBit(i);
  const std::uint64_t ej = CoordinateBit(j);
  std::vector<double> out(f.size());
  for (std::uint64_t m = 0; m < f.size(); ++m) {
    const bool flip = std::popcount(m & (ei | ej)) & 1;
    out[m] = flip ? -f[m] : f[m];
  }
  return CubeFunction(f.n(), std::move(out), ValueKind::kReal);
}

CubeFunction Character(int n, std::uint64_t s_mask) {
  Require(n >= 0 && s_mask < (std::uint64_t{1} << n), ErrorCode::kInvalidArgument,
          "character mask outside the cube");
  std::vector<double> out(std::uint64_t{1} << n);
  for (std::uint64_t m = 0; m < out.size(); ++m) {
    out[m] = (std::popcount(m & s_mask) & 1) ? -1.0 : 1.0;
  }
  return CubeFunction(n, std::move(out), ValueKind::kReal);
}

CubeFunction Add(const CubeFunction& f, const CubeFunction& g) {
  RequireSameDimension(f, g);
  std::vector<double> out(f.size());
  for (std::uint64_t m = 0; m < f.size(); ++m) out[m] = f[m] + g[m];
  return CubeFunction(f.n(), std::move(out), ValueKind::kReal);
}

CubeFunction Subtract(const CubeFunction& f, const CubeFunction& g) {
  RequireSameDimension(f, g);
  std::vector<double> out(f.size());
  for (std::uint64_t m = 0; m < f.size(); ++m) out[m] = f[m] - g[m];
  return CubeFunction(f.n(), std::move(out), ValueKind::kReal);
}

CubeFunction Scale(const CubeFunction& f, double c) {
  Require(std::isfinite(c), ErrorCode::kInvalidArgument,
          "scale factor must be finite");
  std::vector<double> out(f.size());
  for (std::uint64_t m = 0; m < f.size(); ++m) out[m] = c * f[m];
  return CubeFunction(f.n(), std::move(out), ValueKind::kReal);
}

}  // namespace hcube
