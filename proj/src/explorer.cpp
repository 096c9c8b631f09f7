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

#include "hcube/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <thread>

#include "hcube/families.hpp"
#include "hcube/operators.hpp"
#include "hcube/serialization.hpp"
#include "hcube/structure.hpp"

namespace hcube {

namespace {

constexpr std::uint64_t kShardSize = 64;  // f-indices per shard, fixed so
                                          // results do not depend on threads

void RequireEnumerable(int n) {
  Require(n >= 0 && n <= 5, ErrorCode::kInvalidArgument,
          "exhaustive enumeration supports n <= 5");
}

}  // namespace

std::vector<std::uint32_t> EnumerateMonotone(int n) {
  RequireEnumerable(n);
  // Base case: the two constants on the empty cube.
  std::vector<std::uint32_t> current = {0u, 1u};
  for (int k = 1; k <= n; ++k) {
    const int half = 1 << (k - 1);
    std::vector<std::uint32_t> next;
    // f is monotone iff both halves are monotone and the lower half is
    // dominated by the upper half bitwise.
    for (std::uint32_t f0 : current) {
      for (std::uint32_t f1 : current) {
        if ((f0 & ~f1) == 0) next.push_back(f0 | (f1 << half));
      }
    }
    current = std::move(next);
  }
  return current;
}

std::uint64_t MonotoneCountRecursive(int n) {
  return EnumerateMonotone(n).size();
}

std::uint64_t MonotoneCountFilter(int n, int threads) {
  RequireEnumerable(n);
  const int table_bits = 1 << n;
  std::vector<std::uint64_t> lo(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int m = 0; m < table_bits; ++m) {
      if (!((m >> i) & 1)) lo[i] |= std::uint64_t{1} << m;
    }
  }
  const std::uint64_t total = std::uint64_t{1} << table_bits;

  const auto count_range = [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t count = 0;
    for (std::uint64_t w = begin; w < end; ++w) {
      bool ok = true;
      for (int i = 0; i < n; ++i) {
        if (w & ~(w >> (1u << i)) & lo[i]) {
          ok = false;
          break;
        }
      }
      count += ok;
    }
    return count;
  };

  threads = std::max(1, threads);
  if (threads == 1 || total < (std::uint64_t{1} << 20)) {
    return count_range(0, total);
  }
  const std::uint64_t chunk = total / 4096;
  std::atomic<std::uint64_t> next_chunk{0};
  std::vector<std::uint64_t> partial(threads, 0);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      std::uint64_t local = 0;
      while (true) {
        const std::uint64_t c = next_chunk.fetch_add(1);
        if (c >= 4096) break;
        const std::uint64_t begin = c * chunk;
        const std::uint64_t end = (c == 4095) ? total : begin + chunk;
        local += count_range(begin, end);
      }
      partial[t] = local;
    });
  }
  for (std::thread& th : pool) th.join();
  std::uint64_t count = 0;
  for (std::uint64_t c : partial) count += c;
  return count;
}

CubeFunction FromTruthMask(int n, std::uint64_t mask) {
  Require(n >= 0 && n <= 6, ErrorCode::kInvalidArgument,
          "truth mask form supports n <= 6");
  std::vector<double> values(std::uint64_t{1} << n);
  for (std::uint64_t m = 0; m < values.size(); ++m) {
    values[m] = (mask >> m) & 1 ? 1.0 : 0.0;
  }
  return CubeFunction(n, std::move(values), ValueKind::kBoolean);
}

namespace {

// Everything a pair-bound evaluation needs, precomputed once per function.
struct FunctionStats {
  std::vector<std::uint64_t> bits;  // packed truth table
  std::string bits_hex;
  double mean = 0.0;
  bool submodular = false;
  bool supermodular = false;
  bool antipodal = false;
  bool dij_nonneg = false;
  std::vector<double> inf2;    // flip-probability influences
  std::vector<double> level1;  // fhat({i})
  double min_inf2 = 0.0;
  std::vector<double> spectrum;         // only for level-d scans
  std::vector<double> d2_norm1, d2_norm2, d2_quasi;
  std::vector<double> dt_norm1, dt_norm2;
};

struct StatsNeeds {
  bool modularity = false;
  bool antipodal = false;
  bool d2_norms = false;
  bool d2_quasi = false;
  bool dt_norms = false;
  bool spectrum = false;
  bool dij = false;
};

StatsNeeds NeedsFor(const std::string& bound_id, const std::string& filter) {
  StatsNeeds needs;
  if (filter == "both-submodular" || filter == "both-supermodular" ||
      filter == "matching-modularity") {
    needs.modularity = true;
  } else if (filter == "g-antipodal") {
    needs.antipodal = true;
  } else {
    Require(filter == "increasing", ErrorCode::kInvalidArgument,
            "unknown filter: " + filter);
  }
  if (bound_id == "dream" || bound_id == "chvatal-harper") {
    needs.modularity = true;
  } else if (bound_id == "real-level1" || bound_id == "l1-influence" ||
             bound_id == "strong-lower") {
    needs.modularity = true;
    if (bound_id == "strong-lower") {
      needs.d2_quasi = true;
      needs.spectrum = true;
    }
  } else if (bound_id == "talagrand-upper" || bound_id == "talagrand-window") {
    needs.d2_norms = true;
    if (bound_id == "talagrand-upper") needs.spectrum = true;
  } else if (bound_id == "level-d-upper") {
    needs.dt_norms = true;
    needs.spectrum = true;
  } else if (bound_id == "chvatal-conjecture") {
    needs.antipodal = true;
  } else if (bound_id == "dij-sufficient") {
    needs.dij = true;
  } else {
    Require(bound_id == "dream-unguarded" || bound_id == "poincare" ||
                bound_id == "poincare-refined",
            ErrorCode::kInvalidArgument,
            "bound cannot be scanned: " + bound_id);
  }
  return needs;
}

FunctionStats BuildStats(const CubeFunction& f, const StatsNeeds& needs,
                         const BoundParams& params) {
  FunctionStats stats;
  const std::uint64_t size = f.size();
  const std::uint64_t words = std::max<std::uint64_t>(1, size / 64);
  stats.bits.assign(words, 0);
  for (std::uint64_t m = 0; m < size; ++m) {
    if (f[m] == 1.0) stats.bits[m / 64] |= std::uint64_t{1} << (m % 64);
  }
  stats.bits_hex = BooleanTableToHex(f);
  stats.mean = Mean(f);
  stats.inf2 = InfluenceVector(f, 2.0);
  stats.min_inf2 = stats.inf2.empty() ? 0.0 : stats.inf2.front();
  for (double v : stats.inf2) stats.min_inf2 = std::min(stats.min_inf2, v);

  stats.level1.reserve(f.n());
  for (int i = 1; i <= f.n(); ++i) {
    const std::uint64_t e = std::uint64_t{1} << (i - 1);
    double sum = 0.0;
    for (std::uint64_t m = 0; m < size; ++m) {
      sum += (m & e) ? -f[m] : f[m];
    }
    stats.level1.push_back(sum / static_cast<double>(size));
  }

  if (needs.modularity) {
    const ModularityResult mod = ClassifyModularity(f);
    stats.submodular = mod.submodular;
    stats.supermodular = mod.supermodular;
  }
  if (needs.antipodal) stats.antipodal = IsAntipodal(f).antipodal;
  if (needs.d2_norms || needs.d2_quasi) {
    for (int i = 1; i <= f.n(); ++i) {
      for (int j = i + 1; j <= f.n(); ++j) {
        const CubeFunction dij = SecondDerivative(f, i, j);
        if (needs.d2_norms) {
          stats.d2_norm1.push_back(LpNorm(dij, 1.0));
          stats.d2_norm2.push_back(LpNorm(dij, 2.0));
        }
        if (needs.d2_quasi) {
          stats.d2_quasi.push_back(LpNorm(dij, 1.0 - params.theta));
        }
      }
    }
  }
  if (needs.dt_norms) {
    const std::uint64_t full = size - 1;
    std::vector<int> coords;
    for (std::uint64_t t_mask = 0; t_mask <= full; ++t_mask) {
      if (std::popcount(t_mask) != params.d) continue;
      coords.clear();
      for (int i = 1; i <= f.n(); ++i) {
        if (t_mask & (std::uint64_t{1} << (i - 1))) coords.push_back(i);
      }
      const CubeFunction dt = HigherDerivative(f, coords);
      stats.dt_norm1.push_back(LpNorm(dt, 1.0));
      stats.dt_norm2.push_back(LpNorm(dt, 2.0));
    }
  }
  if (needs.spectrum) {
    const Spectrum s = FourierTransform(f);
    stats.spectrum.assign(s.coeffs().begin(), s.coeffs().end());
  }
  if (needs.dij) {
    stats.dij_nonneg = true;
    for (int i = 1; i <= f.n() && stats.dij_nonneg; ++i) {
      for (int j = i + 1; j <= f.n() && stats.dij_nonneg; ++j) {
        const CubeFunction dij = SignedSecondDifference(f, i, j);
        for (double v : dij.values()) {
          if (v < -kZeroTol) {
            stats.dij_nonneg = false;
            break;
          }
        }
      }
    }
  }
  return stats;
}

bool PassesFilter(const std::string& filter, const FunctionStats& f,
                  const FunctionStats& g) {
  if (filter == "increasing") return true;  // the universe is monotone
  if (filter == "both-submodular") return f.submodular && g.submodular;
  if (filter == "both-supermodular") return f.supermodular && g.supermodular;
  if (filter == "matching-modularity") {
    return (f.submodular && g.submodular) || (f.supermodular && g.supermodular);
  }
  return g.antipodal;  // g-antipodal
}

struct FastEval {
  bool applicable = false;
  double lhs = 0.0;
  double rhs = 0.0;
};

double PackedInnerProduct(const FunctionStats& f, const FunctionStats& g,
                          std::uint64_t size) {
  std::uint64_t count = 0;
  for (std::size_t w = 0; w < f.bits.size(); ++w) {
    count += std::popcount(f.bits[w] & g.bits[w]);
  }
  return static_cast<double>(count) / static_cast<double>(size);
}

// Stats-only evaluation; agrees exactly (same arithmetic on the same exact
// rationals) with the report-based route for boolean tables.
FastEval EvalPairBound(const std::string& bound_id, const BoundParams& params,
                       const FunctionStats& f, const FunctionStats& g, int n,
                       std::uint64_t size) {
  FastEval out;
  const double cov = PackedInnerProduct(f, g, size) - f.mean * g.mean;
  const auto dream_rhs = [&] {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += f.inf2[i] * g.inf2[i];
    return 0.25 * sum;
  };
  const auto level1_cross = [&] {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += f.level1[i] * g.level1[i];
    return sum;
  };
  const auto level_weight_cross = [&](int d) {
    double sum = 0.0;
    for (std::uint64_t s = 0; s < f.spectrum.size(); ++s) {
      if (std::popcount(s) >= d) sum += f.spectrum[s] * g.spectrum[s];
    }
    return sum;
  };
  const bool matching = (f.submodular && g.submodular) ||
                        (f.supermodular && g.supermodular);

  if (bound_id == "dream" || bound_id == "dream-unguarded") {
    out.applicable = bound_id == "dream" ? matching : true;
    out.lhs = cov;
    out.rhs = dream_rhs();
    return out;
  }
  if (bound_id == "real-level1") {
    out.applicable = matching;
    out.lhs = cov;
    out.rhs = level1_cross();
    return out;
  }
  if (bound_id == "l1-influence") {
    // Boolean tables: the L1 influence equals the flip probability.
    out.applicable = matching;
    out.lhs = cov;
    out.rhs = dream_rhs();
    return out;
  }
  if (bound_id == "strong-lower") {
    out.applicable = matching;
    out.lhs = level_weight_cross(2);
    const double c = (params.theta - 0.5 * params.theta * params.theta) / 8.0;
    double sum = 0.0;
    for (std::size_t k = 0; k < f.d2_quasi.size(); ++k) {
      sum += f.d2_quasi[k] * g.d2_quasi[k];
    }
    out.rhs = c * sum;
    return out;
  }
  if (bound_id == "poincare" || bound_id == "poincare-refined") {
    out.applicable = true;
    out.lhs = std::fabs(cov);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      if (bound_id == "poincare-refined" && i + 1 == params.i) continue;
      sum += std::sqrt(f.inf2[i] * g.inf2[i]);
    }
    out.rhs = 0.25 * sum;
    if (bound_id == "poincare-refined") {
      out.rhs += std::fabs(f.level1[params.i - 1] * g.level1[params.i - 1]);
    }
    return out;
  }
  if (bound_id == "talagrand-upper" || bound_id == "talagrand-window") {
    out.applicable = true;
    if (bound_id == "talagrand-upper") {
      out.lhs = std::fabs(level_weight_cross(2));
    } else {
      out.lhs = std::fabs(cov - dream_rhs());
    }
    double sum = 0.0;
    for (std::size_t k = 0; k < f.d2_norm2.size(); ++k) {
      const double num = f.d2_norm2[k] * g.d2_norm2[k];
      if (num == 0.0) continue;
      const double den = f.d2_norm1[k] * g.d2_norm1[k];
      const double ratio = std::max(num / den, 1.0);
      sum += num / (1.0 + std::log(ratio));
    }
    out.rhs = 9.0 / 8.0 * sum;
    return out;
  }
  if (bound_id == "level-d-upper") {
    out.applicable = true;
    out.lhs = std::fabs(level_weight_cross(params.d));
    const double cd = (1.0 + std::pow(std::pow(2.0, params.d) *
                                          std::tgamma(params.d + 1.0),
                                      1.0 / params.d)) /
                      std::pow(4.0, params.d);
    double sum = 0.0;
    for (std::size_t k = 0; k < f.dt_norm2.size(); ++k) {
      const double num = f.dt_norm2[k] * g.dt_norm2[k];
      if (num == 0.0) continue;
      const double den = f.dt_norm1[k] * g.dt_norm1[k];
      const double ratio = std::max(num / den, 1.0);
      sum += num / (1.0 + std::log(ratio));
    }
    out.rhs = cd * sum;
    return out;
  }
  if (bound_id == "chvatal-conjecture") {
    out.applicable = g.antipodal;
    out.lhs = cov;
    out.rhs = 0.25 * f.min_inf2;
    return out;
  }
  if (bound_id == "chvatal-harper") {
    const double alpha = g.mean;
    out.applicable = matching && alpha <= 0.5;
    out.lhs = cov;
    out.rhs = alpha > 0.0 ? 0.5 * alpha * std::log2(1.0 / alpha) * f.min_inf2
                          : 0.0;
    return out;
  }
  if (bound_id == "dij-sufficient") {
    out.applicable = f.dij_nonneg;
    out.lhs = cov;
    out.rhs = dream_rhs();
    return out;
  }
  Fail(ErrorCode::kInvalidArgument, "bound cannot be scanned: " + bound_id);
}

struct ShardResult {
  std::uint64_t examined = 0;
  std::uint64_t violations = 0;
  bool has_min = false;
  PairRecord min_slack;
  std::vector<PairRecord> exemplars;
};

}  // namespace

ScanResult ScanPairs(const ScanSpec& spec) {
  const auto t0 = std::chrono::steady_clock::now();
  Require(spec.exemplar_cap >= 0, ErrorCode::kInvalidArgument,
          "exemplar cap must be nonnegative");
  ScanResult result;
  result.spec = spec;

  std::vector<CubeFunction> universe;
  if (spec.sample_count > 0) {
    Require(spec.n >= 1 && spec.n <= 16, ErrorCode::kInvalidArgument,
            "sampled scans support n <= 16");
    Require(spec.sample_count <= 10000, ErrorCode::kInvalidArgument,
            "sample count capped at 10000");
    for (int k = 0; k < spec.sample_count; ++k) {
      universe.push_back(RandomMonotone(spec.n, spec.seed + k));
    }
  } else {
    RequireEnumerable(spec.n);
    Require(spec.n <= 4 || spec.allow_large, ErrorCode::kInvalidArgument,
            "the n = 5 exhaustive scan requires the large-scan opt-in");
    for (std::uint32_t mask : EnumerateMonotone(spec.n)) {
      universe.push_back(FromTruthMask(spec.n, mask));
    }
  }
  result.universe_size = universe.size();
  result.pairs_total = result.universe_size * result.universe_size;

  const StatsNeeds needs = NeedsFor(spec.bound_id, spec.filter);
  std::vector<FunctionStats> stats;
  stats.reserve(universe.size());
  for (const CubeFunction& f : universe) {
    stats.push_back(BuildStats(f, needs, spec.params));
  }

  const std::uint64_t size = std::uint64_t{1} << spec.n;
  const std::uint64_t count = universe.size();
  const std::uint64_t shards = (count + kShardSize - 1) / kShardSize;
  std::vector<ShardResult> shard_results(shards);

  const auto run_shard = [&](std::uint64_t shard) {
    ShardResult& local = shard_results[shard];
    const std::uint64_t begin = shard * kShardSize;
    const std::uint64_t end = std::min(begin + kShardSize, count);
    for (std::uint64_t fi = begin; fi < end; ++fi) {
      for (std::uint64_t gi = 0; gi < count; ++gi) {
        if (!PassesFilter(spec.filter, stats[fi], stats[gi])) continue;
        ++local.examined;
        const FastEval eval = EvalPairBound(spec.bound_id, spec.params,
                                            stats[fi], stats[gi], spec.n, size);
        if (!eval.applicable) continue;
        const double slack = eval.lhs - eval.rhs;
        const bool lower = spec.bound_id != "poincare" &&
                           spec.bound_id != "poincare-refined" &&
                           spec.bound_id != "talagrand-upper" &&
                           spec.bound_id != "talagrand-window" &&
                           spec.bound_id != "level-d-upper";
        const double oriented = lower ? slack : -slack;
        const double tol = kReportTol * std::max({1.0, std::fabs(eval.lhs),
                                                  std::fabs(eval.rhs)});
        if (!local.has_min || oriented < local.min_slack.slack) {
          local.has_min = true;
          local.min_slack = PairRecord{fi,
                                       gi,
                                       eval.lhs,
                                       eval.rhs,
                                       oriented,
                                       stats[fi].bits_hex,
                                       stats[gi].bits_hex};
        }
        if (oriented < -tol) {
          ++local.violations;
          if (local.exemplars.size() <
              static_cast<std::size_t>(spec.exemplar_cap)) {
            local.exemplars.push_back(PairRecord{fi, gi, eval.lhs, eval.rhs,
                                                 oriented, stats[fi].bits_hex,
                                                 stats[gi].bits_hex});
          }
        }
      }
    }
  };

  const int threads = std::max(1, spec.threads);
  if (threads == 1) {
    for (std::uint64_t shard = 0; shard < shards; ++shard) run_shard(shard);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        while (true) {
          const std::uint64_t shard = next.fetch_add(1);
          if (shard >= shards) break;
          run_shard(shard);
        }
      });
    }
    for (std::thread& th : pool) th.join();
  }

  // Merge in shard order; strict comparison keeps the earliest arg-min.
  for (const ShardResult& local : shard_results) {
    result.pairs_examined += local.examined;
    result.violations += local.violations;
    if (local.has_min &&
        (!result.has_min || local.min_slack.slack < result.min_slack.slack)) {
      result.has_min = true;
      result.min_slack = local.min_slack;
    }
    for (const PairRecord& record : local.exemplars) {
      if (result.exemplars.size() <
          static_cast<std::size_t>(spec.exemplar_cap)) {
        result.exemplars.push_back(record);
      }
    }
  }

  const auto t1 = std::chrono::steady_clock::now();
  result.elapsed_seconds = std::chrono::duration<double>(t1 - t0).count();
  return result;
}

std::vector<TightnessRow> TightnessScan(const std::string& mode,
                                        const std::vector<int>& dimensions,
                                        int width) {
  Require(!dimensions.empty(), ErrorCode::kInvalidArgument,
          "need at least one dimension");
  std::vector<TightnessRow> rows;
  for (int n : dimensions) {
    TightnessRow row;
    row.n = n;
    CubeFunction f = CubeFunction::Constant(0, 0.0, ValueKind::kBoolean);
    CubeFunction g = f;
    if (mode == "majority") {
      f = Majority(n);
      g = f;
      row.f_id = "majority" + std::to_string(n);
      row.g_id = row.f_id;
    } else if (mode == "dictator") {
      f = Dictator(n, 1);
      g = f;
      row.f_id = "dictator1@" + std::to_string(n);
      row.g_id = row.f_id;
    } else if (mode == "tribes-dual") {
      Require(width >= 1 && n % width == 0, ErrorCode::kInvalidArgument,
              "tribes-dual needs width dividing n");
      f = Tribes(width, n / width);
      g = Dual(f);
      row.f_id = "tribes" + std::to_string(width) + "x" +
                 std::to_string(n / width);
      row.g_id = "dual-" + row.f_id;
    } else {
      Fail(ErrorCode::kInvalidArgument, "unknown tightness mode: " + mode);
    }
    row.cov = Covariance(f, g);
    row.cross_influence = CrossTotalInfluence(f, g);
    const double i_total = row.cross_influence;
    if (i_total > 0.0) {
      row.plain_defined = true;
      row.ratio_plain = row.cov / i_total;
      const double log_arg = std::exp(1.0) / i_total;
      if (log_arg > 0.0 && std::log(log_arg) != 0.0) {
        row.log_defined = true;
        row.ratio_log = row.cov * std::log(log_arg) / i_total;
      }
      const double sqrt_arg = std::log(2.0 * std::exp(1.0) / i_total);
      if (sqrt_arg > 0.0) {
        row.sqrt_defined = true;
        row.ratio_sqrt = row.cov * std::sqrt(sqrt_arg) / i_total;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace hcube
