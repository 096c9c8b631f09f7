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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "hcube/cube_function.hpp"
#include "hcube/error.hpp"
#include "hcube/explorer.hpp"
#include "hcube/families.hpp"
#include "hcube/inequalities.hpp"
#include "hcube/serialization.hpp"
#include "hcube/structure.hpp"

using namespace hcube;

namespace {

// Straight-line reference scan: same pair order, verifier dispatch per pair.
ScanResult ReferenceScan(const ScanSpec& spec) {
  const std::vector<std::uint32_t> universe = EnumerateMonotone(spec.n);
  ScanResult out;
  out.spec = spec;
  out.universe_size = universe.size();
  out.pairs_total =
      static_cast<std::uint64_t>(universe.size()) * universe.size();
  for (std::uint64_t fi = 0; fi < universe.size(); ++fi) {
    const CubeFunction f = FromTruthMask(spec.n, universe[fi]);
    for (std::uint64_t gi = 0; gi < universe.size(); ++gi) {
      const CubeFunction g = FromTruthMask(spec.n, universe[gi]);
      bool pass = true;
      if (spec.filter == "both-submodular") {
        pass = ClassifyModularity(f).submodular &&
               ClassifyModularity(g).submodular;
      } else if (spec.filter == "both-supermodular") {
        pass = ClassifyModularity(f).supermodular &&
               ClassifyModularity(g).supermodular;
      } else if (spec.filter == "matching-modularity") {
        const ModularityResult mf = ClassifyModularity(f);
        const ModularityResult mg = ClassifyModularity(g);
        pass = (mf.submodular && mg.submodular) ||
               (mf.supermodular && mg.supermodular);
      } else if (spec.filter == "g-antipodal") {
        pass = IsAntipodal(g).antipodal;
      }
      if (!pass) continue;
      ++out.pairs_examined;
      const InequalityReport r = EvaluateBound(spec.bound_id, f, g, spec.params);
      if (r.status == ReportStatus::kNotApplicable) continue;
      const double tol =
          kReportTol * std::max({1.0, std::fabs(r.lhs), std::fabs(r.rhs)});
      const bool violated = r.slack < -tol;
      if (violated) ++out.violations;
      if (!out.has_min || r.slack < out.min_slack.slack) {
        out.has_min = true;
        out.min_slack = {fi,
                         gi,
                         r.lhs,
                         r.rhs,
                         r.slack,
                         BooleanTableToHex(f),
                         BooleanTableToHex(g)};
      }
    }
  }
  return out;
}

void CheckSameOutcome(const ScanResult& a, const ScanResult& b) {
  CHECK(a.universe_size == b.universe_size);
  CHECK(a.pairs_total == b.pairs_total);
  CHECK(a.pairs_examined == b.pairs_examined);
  CHECK(a.violations == b.violations);
  REQUIRE(a.has_min == b.has_min);
  if (a.has_min) {
    CHECK(a.min_slack.f_id == b.min_slack.f_id);
    CHECK(a.min_slack.g_id == b.min_slack.g_id);
    CHECK(a.min_slack.lhs == b.min_slack.lhs);
    CHECK(a.min_slack.rhs == b.min_slack.rhs);
    CHECK(a.min_slack.slack == b.min_slack.slack);
    CHECK(a.min_slack.f_bits_hex == b.min_slack.f_bits_hex);
    CHECK(a.min_slack.g_bits_hex == b.min_slack.g_bits_hex);
  }
}

}  // namespace

TEST_CASE("monotone counts by both routes") {
  const std::uint64_t expected[] = {2, 3, 6, 20, 168};
  for (int n = 0; n <= 4; ++n) {
    CHECK(MonotoneCountRecursive(n) == expected[n]);
    CHECK(MonotoneCountFilter(n, 1) == expected[n]);
    CHECK(MonotoneCountFilter(n, 3) == expected[n]);
  }
  CHECK(MonotoneCountRecursive(5) == 7581);
  CHECK_THROWS_AS(MonotoneCountRecursive(-1), Error);
  CHECK_THROWS_AS(MonotoneCountFilter(6, 1), Error);
}

TEST_CASE("monotone enumeration order is frozen") {
  const std::vector<std::uint32_t> tables = EnumerateMonotone(2);
  const std::vector<std::uint32_t> expected = {0b0000, 0b1000, 0b1100,
                                               0b1010, 0b1110, 0b1111};
  CHECK(tables == expected);
  for (int n = 0; n <= 4; ++n) {
    CHECK(EnumerateMonotone(n).size() == MonotoneCountRecursive(n));
  }
  CHECK_THROWS_AS(EnumerateMonotone(6), Error);
}

TEST_CASE("truth masks round trip") {
  for (std::uint32_t mask : EnumerateMonotone(3)) {
    const CubeFunction f = FromTruthMask(3, mask);
    CHECK(f.is_boolean());
    CHECK(IsIncreasing(f).increasing);
    std::uint64_t back = 0;
    for (std::uint64_t m = 0; m < f.size(); ++m) {
      if (f[m] == 1.0) back |= std::uint64_t{1} << m;
    }
    CHECK(back == mask);
  }
  CHECK_THROWS_AS(FromTruthMask(7, 0), Error);
}

TEST_CASE("unguarded scan at n = 2 finds the crossing pair") {
  ScanSpec spec;
  spec.n = 2;
  spec.filter = "increasing";
  spec.bound_id = "dream-unguarded";
  const ScanResult r = ScanPairs(spec);
  CHECK(r.universe_size == 6);
  CHECK(r.pairs_total == 36);
  CHECK(r.pairs_examined == 36);
  CHECK(r.violations == 2);
  REQUIRE(r.has_min);
  CHECK(r.min_slack.slack == -0.0625);
  CHECK(r.min_slack.f_bits_hex == "08");
  CHECK(r.min_slack.g_bits_hex == "0e");
  REQUIRE(r.exemplars.size() == 2);
  CHECK(r.exemplars[0].f_bits_hex == "08");
  CHECK(r.exemplars[0].g_bits_hex == "0e");
  CHECK(r.exemplars[1].f_bits_hex == "0e");
  CHECK(r.exemplars[1].g_bits_hex == "08");

  // The guarded form never fires on the same universe.
  spec.bound_id = "dream";
  const ScanResult guarded = ScanPairs(spec);
  CHECK(guarded.violations == 0);
}

TEST_CASE("scan matches the one-pair-at-a-time reference") {
  const struct {
    const char* bound;
    const char* filter;
  } cases[] = {
      {"dream", "matching-modularity"},
      {"dream-unguarded", "increasing"},
      {"real-level1", "matching-modularity"},
      {"l1-influence", "matching-modularity"},
      {"strong-lower", "both-supermodular"},
      {"poincare", "increasing"},
      {"poincare-refined", "increasing"},
      {"talagrand-upper", "increasing"},
      {"talagrand-window", "increasing"},
      {"level-d-upper", "increasing"},
      {"chvatal-conjecture", "g-antipodal"},
      {"chvatal-harper", "matching-modularity"},
      {"dij-sufficient", "increasing"},
  };
  for (const auto& c : cases) {
    ScanSpec spec;
    spec.n = 3;
    spec.filter = c.filter;
    spec.bound_id = c.bound;
    CAPTURE(c.bound);
    CheckSameOutcome(ScanPairs(spec), ReferenceScan(spec));
  }
}

TEST_CASE("scan results do not depend on the thread count") {
  for (const char* bound : {"dream-unguarded", "poincare", "strong-lower"}) {
    ScanSpec one;
    one.n = 4;
    one.bound_id = bound;
    one.filter = (std::string(bound) == "strong-lower") ? "matching-modularity"
                                                        : "increasing";
    ScanSpec many = one;
    many.threads = 3;
    CheckSameOutcome(ScanPairs(one), ScanPairs(many));
  }
}

TEST_CASE("sampled scans are deterministic") {
  ScanSpec spec;
  spec.n = 7;
  spec.bound_id = "poincare";
  spec.sample_count = 40;
  spec.seed = 12;
  const ScanResult a = ScanPairs(spec);
  CHECK(a.universe_size == 40);
  CHECK(a.pairs_total == 1600);
  spec.threads = 3;
  CheckSameOutcome(a, ScanPairs(spec));

  ScanSpec other = spec;
  other.seed = 13;
  const ScanResult b = ScanPairs(other);
  const bool differs = (b.min_slack.f_bits_hex != a.min_slack.f_bits_hex) ||
                       (b.min_slack.g_bits_hex != a.min_slack.g_bits_hex) ||
                       (b.min_slack.slack != a.min_slack.slack);
  CHECK(differs);
}

TEST_CASE("scan guards") {
  ScanSpec spec;
  spec.n = 5;
  CHECK_THROWS_AS(ScanPairs(spec), Error);  // needs the large opt-in
  spec.n = 2;
  spec.filter = "nope";
  CHECK_THROWS_AS(ScanPairs(spec), Error);
  spec.filter = "increasing";
  spec.bound_id = "hypercontractivity";
  CHECK_THROWS_AS(ScanPairs(spec), Error);
  spec.bound_id = "nope";
  CHECK_THROWS_AS(ScanPairs(spec), Error);
}

TEST_CASE("exemplar list respects its cap") {
  ScanSpec spec;
  spec.n = 3;
  spec.filter = "increasing";
  spec.bound_id = "dream-unguarded";
  spec.exemplar_cap = 3;
  const ScanResult r = ScanPairs(spec);
  CHECK(r.violations > 3);
  CHECK(r.exemplars.size() == 3);
}

TEST_CASE("tightness ratios for named sequences") {
  const std::vector<TightnessRow> rows = TightnessScan("dictator", {1, 3}, 0);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].n == 1);
  CHECK(rows[0].cov == 0.25);
  CHECK(rows[0].cross_influence == 1.0);
  CHECK(rows[0].plain_defined);
  CHECK(rows[0].ratio_plain == 0.25);
  CHECK(rows[1].cov == 0.25);

  const std::vector<TightnessRow> maj = TightnessScan("majority", {3, 5}, 0);
  REQUIRE(maj.size() == 2);
  for (const TightnessRow& row : maj) {
    CHECK(row.cov > 0.0);
    CHECK(row.log_defined);
    CHECK(row.sqrt_defined);
    CHECK(row.ratio_sqrt > 0.0);
  }

  const std::vector<TightnessRow> tribes = TightnessScan("tribes-dual", {4}, 2);
  REQUIRE(tribes.size() == 1);
  CHECK(tribes[0].n == 4);

  CHECK_THROWS_AS(TightnessScan("tribes-dual", {5}, 2), Error);
  CHECK_THROWS_AS(TightnessScan("majority", {4}, 0), Error);
  CHECK_THROWS_AS(TightnessScan("nope", {3}, 0), Error);
}
