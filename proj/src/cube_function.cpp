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

#include "hcube/cube_function.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <string>

namespace hcube {

namespace {

std::atomic<int> g_max_dimension{26};

void RequireDimension(int n) {
  Require(n >= 0, ErrorCode::kInvalidArgument, "dimension must be nonnegative");
  Require(n <= MaxDimension(), ErrorCode::kInvalidArgument,
          "dimension " + std::to_string(n) + " exceeds limit " +
              std::to_string(MaxDimension()));
}

}  // namespace

int MaxDimension() { return g_max_dimension.load(); }

void SetMaxDimension(int n) {
  Require(n >= 0 && n <= 40, ErrorCode::kInvalidArgument,
          "dimension limit out of range");
  g_max_dimension.store(n);
}

CubeFunction::CubeFunction(int n, std::vector<double> values, ValueKind kind)
    : n_(n), kind_(kind), values_(std::move(values)) {
  RequireDimension(n);
  Require(values_.size() == (std::uint64_t{1} << n), ErrorCode::kInvalidArgument,
          "value table must have exactly 2^n entries");
  for (double v : values_) {
    Require(std::isfinite(v), ErrorCode::kInvalidArgument,
            "values must be finite");
    if (kind_ == ValueKind::kBoolean) {
      Require(v == 0.0 || v == 1.0, ErrorCode::kInvalidArgument,
              "boolean table entries must be exactly 0 or 1");
    }
  }
}

CubeFunction CubeFunction::Constant(int n, double value, ValueKind kind) {
  RequireDimension(n);
  return CubeFunction(n, std::vector<double>(std::uint64_t{1} << n, value),
                      kind);
}

Spectrum::Spectrum(int n, std::vector<double> coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
  RequireDimension(n);
  Require(coeffs_.size() == (std::uint64_t{1} << n), ErrorCode::kInvalidArgument,
          "spectrum must have exactly 2^n entries");
  for (double c : coeffs_) {
    Require(std::isfinite(c), ErrorCode::kInvalidArgument,
            "coefficients must be finite");
  }
}

void WalshHadamardInPlace(std::span<double> data) {
  const std::uint64_t size = data.size();
  Require(size != 0 && (size & (size - 1)) == 0, ErrorCode::kInvalidArgument,
          "table length must be a power of two");
  for (std::uint64_t h = 1; h < size; h <<= 1) {
    for (std::uint64_t block = 0; block < size; block += h << 1) {
      for (std::uint64_t j = block; j < block + h; ++j) {
        const double a = data[j];
        const double b = data[j + h];
        data[j] = a + b;
        data[j + h] = a - b;
      }
    }
  }
}

Spectrum FourierTransform(const CubeFunction& f) {
  std::vector<double> coeffs(f.values().begin(), f.values().end());
  WalshHadamardInPlace(coeffs);
  const double scale = 1.0 / static_cast<double>(f.size());
  for (double& c : coeffs) c *= scale;
  return Spectrum(f.n(), std::move(coeffs));
}

CubeFunction InverseTransform(const Spectrum& s) {
  std::vector<double> values(s.coeffs().begin(), s.coeffs().end());
  WalshHadamardInPlace(values);
  return CubeFunction(s.n(), std::move(values), ValueKind::kReal);
}

double Mean(const CubeFunction& f) {
  double sum = 0.0;
  for (double v : f.values()) sum += v;
  return sum / static_cast<double>(f.size());
}

double InnerProduct(const CubeFunction& f, const CubeFunction& g) {
  RequireSameDimension(f, g);
  double sum = 0.0;
  for (std::uint64_t m = 0; m < f.size(); ++m) sum += f[m] * g[m];
  return sum / static_cast<double>(f.size());
}

double LpNorm(const CubeFunction& f, double p) {
  Require(std::isfinite(p) && p > 0.0, ErrorCode::kInvalidArgument,
          "norm exponent must be positive");
  double sum = 0.0;
  if (p == 1.0) {
    for (double v : f.values()) sum += std::fabs(v);
    return sum / static_cast<double>(f.size());
  }
  if (p == 2.0) {
    for (double v : f.values()) sum += v * v;
    return std::sqrt(sum / static_cast<double>(f.size()));
  }
  for (double v : f.values()) sum += std::pow(std::fabs(v), p);
  return std::pow(sum / static_cast<double>(f.size()), 1.0 / p);
}

double Covariance(const CubeFunction& f, const CubeFunction& g) {
  return InnerProduct(f, g) - Mean(f) * Mean(g);
}

double LevelWeightCross(const Spectrum& sf, const Spectrum& sg, int d) {
  Require(sf.n() == sg.n(), ErrorCode::kDimensionMismatch,
          "spectra live on different cubes");
  Require(d >= 0, ErrorCode::kInvalidArgument, "level must be nonnegative");
  double sum = 0.0;
  for (std::uint64_t s = 0; s < sf.size(); ++s) {
    if (std::popcount(s) >= d) sum += sf[s] * sg[s];
  }
  return sum;
}

double Level1Cross(const Spectrum& sf, const Spectrum& sg) {
  Require(sf.n() == sg.n(), ErrorCode::kDimensionMismatch,
          "spectra live on different cubes");
  double sum = 0.0;
  for (int i = 0; i < sf.n(); ++i) {
    const std::uint64_t s = std::uint64_t{1} << i;
    sum += sf[s] * sg[s];
  }
  return sum;
}

void RequireSameDimension(const CubeFunction& f, const CubeFunction& g) {
  Require(f.n() == g.n(), ErrorCode::kDimensionMismatch,
          "functions live on different cubes");
}

void RequireCoordinate(int n, int i) {
  Require(i >= 1 && i <= n, ErrorCode::kInvalidArgument,
          "coordinate " + std::to_string(i) + " outside 1.." +
              std::to_string(n));
}

}  // namespace hcube
