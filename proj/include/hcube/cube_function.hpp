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

#ifndef HCUBE_CUBE_FUNCTION_HPP_
#define HCUBE_CUBE_FUNCTION_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "hcube/error.hpp"

namespace hcube {

// Absolute tolerance used when deciding pointwise sign conditions
// (monotonicity, modularity, applicability guards).
inline constexpr double kZeroTol = 1e-12;

// Relative tolerance for the satisfied/violated call in inequality reports:
// slack >= -kReportTol * max(1, |lhs|, |rhs|).
inline constexpr double kReportTol = 1e-9;

// Dimension cap for table allocation. Overridable at runtime; the default
// keeps a single table under 1 GiB.
int MaxDimension();
void SetMaxDimension(int n);

enum class ValueKind { kBoolean, kReal };

// A function on {0,1}^n stored as a dense table of 2^n doubles. Entry m
// holds the value at the point whose coordinate i (1-based) is bit (i-1)
// of m. Boolean kind means every entry is exactly 0.0 or 1.0.
class CubeFunction {
 public:
  CubeFunction(int n, std::vector<double> values, ValueKind kind);

  static CubeFunction Constant(int n, double value, ValueKind kind);

  int n() const { return n_; }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }
  ValueKind kind() const { return kind_; }
  bool is_boolean() const { return kind_ == ValueKind::kBoolean; }

  double operator[](std::uint64_t mask) const { return values_[mask]; }
  std::span<const double> values() const { return values_; }
  std::vector<double>& mutable_values() { return values_; }

 private:
  int n_;
  ValueKind kind_;
  std::vector<double> values_;
};

// Fourier coefficients in mask order: entry S holds the coefficient of the
// character chi_S, S encoded like point masks (coordinate i <-> bit i-1).
class Spectrum {
 public:
  Spectrum(int n, std::vector<double> coeffs);

  int n() const { return n_; }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }
  double operator[](std::uint64_t s) const { return coeffs_[s]; }
  std::span<const double> coeffs() const { return coeffs_; }
  std::vector<double>& mutable_coeffs() { return coeffs_; }

 private:
  int n_;
  std::vector<double> coeffs_;
};

// In-place Walsh-Hadamard butterflies, fixed sequential order, no scaling.
// Self-inverse up to a factor of 2^n.
void WalshHadamardInPlace(std::span<double> data);

// Forward transform: coefficients under the uniform measure (includes the
// 2^-n normalization). Inverse reconstructs the value table exactly by the
// unscaled butterflies.
Spectrum FourierTransform(const CubeFunction& f);
CubeFunction InverseTransform(const Spectrum& s);

double Mean(const CubeFunction& f);

// <f, g> = E[f g] under the uniform measure.
double InnerProduct(const CubeFunction& f, const CubeFunction& g);

// (E|f|^p)^(1/p), p > 0. A norm for p >= 1, a quasi-norm for 0 < p < 1.
double LpNorm(const CubeFunction& f, double p);

double Covariance(const CubeFunction& f, const CubeFunction& g);

// Sum of fhat(S) ghat(S) over |S| >= d.
double LevelWeightCross(const Spectrum& sf, const Spectrum& sg, int d);

// Sum over singletons of fhat({i}) ghat({i}).
double Level1Cross(const Spectrum& sf, const Spectrum& sg);

void RequireSameDimension(const CubeFunction& f, const CubeFunction& g);
void RequireCoordinate(int n, int i);

}  // namespace hcube

#endif  // HCUBE_CUBE_FUNCTION_HPP_
