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

#ifndef HCUBE_OPERATORS_HPP_
#define HCUBE_OPERATORS_HPP_

#include <vector>

#include "hcube/cube_function.hpp"

namespace hcube {

// All discrete difference operators return full-dimension tables: the
// result of Derivative(f, i) is constant in coordinate i rather than living
// on a smaller cube. Coordinates are 1-based throughout.

// (d_i f)(x) = f(x with x_i = 1) - f(x with x_i = 0).
CubeFunction Derivative(const CubeFunction& f, int i);

// (D_i f)(x) = f(x) - f(x with bit i flipped).
CubeFunction SignedDifference(const CubeFunction& f, int i);

// d_i d_j f, i != j.
CubeFunction SecondDerivative(const CubeFunction& f, int i, int j);

// (D_ij f)(x) = f(x) + f(x^(ij)) - f(x^(i)) - f(x^(j)), both bits flipped
// in the middle term.
CubeFunction SignedSecondDifference(const CubeFunction& f, int i, int j);

// d_T f for a set of distinct coordinates; empty T returns f unchanged
// (as a real-kind copy).
CubeFunction HigherDerivative(const CubeFunction& f, const std::vector<int>& coords);

// Noise semigroup: multiplies the level-k Fourier coefficients by e^(-t k).
CubeFunction NoiseOperator(const CubeFunction& f, double t);

// Fixes coordinate i to bit and renumbers the remaining coordinates,
// preserving their order. Result has dimension n-1.
CubeFunction RestrictCoordinate(const CubeFunction& f, int i, int bit);

// Pointwise multiplication by the character chi_{ij}(x) = (-1)^(x_i + x_j).
CubeFunction CharacterTwist(const CubeFunction& f, int i, int j);

// The character chi_S as a +-1 valued table; S is a coordinate mask.
CubeFunction Character(int n, std::uint64_t s_mask);

CubeFunction Add(const CubeFunction& f, const CubeFunction& g);
CubeFunction Subtract(const CubeFunction& f, const CubeFunction& g);
CubeFunction Scale(const CubeFunction& f, double c);

}  // namespace hcube

#endif  // HCUBE_OPERATORS_HPP_
