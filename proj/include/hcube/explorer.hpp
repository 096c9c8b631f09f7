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

#ifndef HCUBE_EXPLORER_HPP_
#define HCUBE_EXPLORER_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "hcube/cube_function.hpp"
#include "hcube/inequalities.hpp"

namespace hcube {

// Number of monotone boolean functions on n coordinates (2, 3, 6, 20, 168,
// 7581 for n = 0..5), by two independent routes: building tables from the
// half-cube recursion, and filtering all 2^(2^n) truth tables with bitwise
// monotonicity tests.
std::uint64_t MonotoneCountRecursive(int n);
std::uint64_t MonotoneCountFilter(int n, int threads);

// All monotone functions on n <= 5 coordinates as truth-table masks (bit m
// holds the value at point m), in a fixed deterministic order.
std::vector<std::uint32_t> EnumerateMonotone(int n);

CubeFunction FromTruthMask(int n, std::uint64_t mask);

struct ScanSpec {
  int n = 2;
  // increasing | both-submodular | both-supermodular | matching-modularity |
  // g-antipodal
  std::string filter = "increasing";
  std::string bound_id = "dream";
  BoundParams params;
  int threads = 1;
  // The n = 5 exhaustive scan walks ~57 million ordered pairs; it runs only
  // when this opt-in is set.
  bool allow_large = false;
  // > 0 switches to a sampled universe of random monotone functions.
  int sample_count = 0;
  std::uint64_t seed = 1;
  int exemplar_cap = 100;
};

struct PairRecord {
  std::uint64_t f_id = 0;
  std::uint64_t g_id = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  std::string f_bits_hex;
  std::string g_bits_hex;
};

struct ScanResult {
  ScanSpec spec;
  std::uint64_t universe_size = 0;
  std::uint64_t pairs_total = 0;     // ordered pairs, diagonal included
  std::uint64_t pairs_examined = 0;  // pairs passing the filter
  std::uint64_t violations = 0;
  bool has_min = false;
  PairRecord min_slack;  // earliest argmin in (f_id, g_id) order
  std::vector<PairRecord> exemplars;  // violations, capped at exemplar_cap
  double elapsed_seconds = 0.0;
};

// Evaluates the bound on every ordered pair of the universe passing the
// filter. Results are identical for any thread count.
ScanResult ScanPairs(const ScanSpec& spec);

struct TightnessRow {
  int n = 0;
  std::string f_id;
  std::string g_id;
  double cov = 0.0;
  double cross_influence = 0.0;
  bool plain_defined = false;
  bool log_defined = false;
  bool sqrt_defined = false;
  double ratio_plain = 0.0;  // Cov / I
  double ratio_log = 0.0;    // Cov log(e/I) / I
  double ratio_sqrt = 0.0;   // Cov sqrt(log(2e/I)) / I
};

// Ratio table for named self-dual test sequences: mode is one of
// majority (f = g = majority_n), dictator (f = g = x_1), tribes-dual
// (f = tribes(width, n/width), g = its dual). No pass/fail judgment.
std::vector<TightnessRow> TightnessScan(const std::string& mode,
                                        const std::vector<int>& dimensions,
                                        int width);

}  // namespace hcube

#endif  // HCUBE_EXPLORER_HPP_
