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
#include <vector>

#include "hcube/cube_function.hpp"
#include "hcube/error.hpp"
#include "hcube/families.hpp"
#include "hcube/inequalities.hpp"
#include "hcube/operators.hpp"
#include "hcube/random.hpp"
#include "oracles.hpp"

using namespace hcube;

TEST_CASE("guarded lower bound on the and pair with itself") {
  const InequalityReport r = VerifyDream(And(2, {}), And(2, {}));
  CHECK(r.bound_id == "dream");
  CHECK(r.applicable);
  CHECK(r.lhs == 0.1875);
  CHECK(r.rhs == 0.125);
  CHECK(r.slack == 0.0625);
  CHECK(r.status == ReportStatus::kSatisfied);
  CHECK(StatusName(r.status) == "satisfied");
}

TEST_CASE("mixed modularity pair is rejected by the guard") {
  const InequalityReport guarded = VerifyDream(And(2, {}), Or(2, {}));
  CHECK_FALSE(guarded.applicable);
  CHECK(guarded.status == ReportStatus::kNotApplicable);
  CHECK(guarded.lhs == 0.0625);
  CHECK(guarded.rhs == 0.125);
  CHECK_FALSE(guarded.note.empty());

  const InequalityReport open = VerifyDreamUnguarded(And(2, {}), Or(2, {}));
  CHECK(open.applicable);
  CHECK(open.status == ReportStatus::kViolated);
  CHECK(open.slack == -0.0625);
}

TEST_CASE("level-1 form for real tables") {
  const InequalityReport r = VerifyRealLevel1(And(2, {}), And(2, {}));
  CHECK(r.applicable);
  CHECK(r.lhs == 0.1875);
  CHECK(r.rhs == 0.125);
  CHECK(r.status == ReportStatus::kSatisfied);

  // Real-valued input is accepted when the modularity guard passes.
  const CubeFunction f = RandomSupermodular(4, 11, 0);
  const CubeFunction g = RandomSupermodular(4, 12, 0);
  const InequalityReport s = VerifyRealLevel1(f, g);
  CHECK(s.applicable);
  CHECK(s.status == ReportStatus::kSatisfied);

  CHECK_FALSE(VerifyRealLevel1(And(2, {}), Or(2, {})).applicable);
}

TEST_CASE("l1 influence form") {
  const InequalityReport r = VerifyL1InfluenceForm(And(2, {}), And(2, {}));
  CHECK(r.applicable);
  CHECK(r.lhs == 0.1875);
  CHECK(r.rhs == 0.125);
  CHECK(r.status == ReportStatus::kSatisfied);
  CHECK_FALSE(VerifyL1InfluenceForm(Parity(2, {}), Parity(2, {})).applicable);
}

TEST_CASE("strong lower bound at theta one half") {
  const InequalityReport r = VerifyStrongLower(And(2, {}), And(2, {}), 0.5);
  CHECK(r.applicable);
  CHECK(r.lhs == 0.0625);
  CHECK(r.rhs == 0.046875);  // c(1/2) = 3/64 and a single unit pair norm
  CHECK(r.slack == 0.015625);
  CHECK(r.status == ReportStatus::kSatisfied);
  CHECK(r.params.at("theta") == 0.5);
  CHECK(r.params.at("c_theta") == 0.046875);
  CHECK(r.params.at("cov_lhs") == 0.1875);
  CHECK(r.params.at("cov_rhs") == 0.171875);
  CHECK_THROWS_AS(VerifyStrongLower(And(2, {}), And(2, {}), 0.0), Error);
  CHECK_THROWS_AS(VerifyStrongLower(And(2, {}), And(2, {}), 1.0), Error);
}

TEST_CASE("two point correlation upper bounds") {
  const InequalityReport plain = VerifyPoincare(And(2, {}), And(2, {}));
  CHECK(plain.applicable);
  CHECK(plain.lhs == 0.1875);
  CHECK(plain.rhs == 0.25);
  CHECK(plain.status == ReportStatus::kSatisfied);

  const InequalityReport refined =
      VerifyPoincareRefined(And(2, {}), And(2, {}), 1);
  CHECK(refined.applicable);
  CHECK(refined.lhs == 0.1875);
  CHECK(refined.rhs == 0.1875);
  CHECK(refined.status == ReportStatus::kSatisfied);
  CHECK(refined.rhs <= plain.rhs + 1e-12);
  CHECK_THROWS_AS(VerifyPoincareRefined(And(2, {}), And(2, {}), 3), Error);

  // The refinement never exceeds the plain form.
  Rng rng(51);
  for (int k = 0; k < 50; ++k) {
    const CubeFunction f = oracles::RandomReal(5, rng);
    const CubeFunction g = oracles::RandomReal(5, rng);
    const double cap = VerifyPoincare(f, g).rhs;
    for (int i = 1; i <= 5; ++i) {
      CHECK(VerifyPoincareRefined(f, g, i).rhs <= cap + 1e-12);
    }
  }
}

TEST_CASE("log-ratio upper bound on the level-2 weight") {
  const InequalityReport r = VerifyTalagrandUpper(And(2, {}), And(2, {}));
  CHECK(r.applicable);
  CHECK(r.lhs == 0.0625);
  CHECK(r.rhs == 1.125);
  CHECK(r.status == ReportStatus::kSatisfied);
}

TEST_CASE("windowed covariance form") {
  const InequalityReport r = VerifyTalagrandWindow(And(2, {}), Or(2, {}));
  CHECK(r.applicable);
  CHECK(r.lhs == 0.0625);
  CHECK(r.rhs == 1.125);
  CHECK(r.status == ReportStatus::kSatisfied);
  CHECK_FALSE(VerifyTalagrandWindow(Parity(2, {}), Parity(2, {})).applicable);
}

TEST_CASE("level-d upper bound constants") {
  const InequalityReport d2 = VerifyLevelDUpper(And(2, {}), And(2, {}), 2);
  CHECK(d2.applicable);
  CHECK(d2.lhs == 0.0625);
  CHECK(d2.params.at("c_d") == (1.0 + std::sqrt(8.0)) / 16.0);
  CHECK(d2.rhs == (1.0 + std::sqrt(8.0)) / 16.0);
  CHECK(d2.params.at("nine_eighths_rhs") == 1.125);
  CHECK(d2.status == ReportStatus::kSatisfied);

  const InequalityReport d1 = VerifyLevelDUpper(And(2, {}), And(2, {}), 1);
  CHECK(d1.params.at("c_d") == 0.75);
  CHECK(d1.status == ReportStatus::kSatisfied);

  CHECK_THROWS_AS(VerifyLevelDUpper(And(2, {}), And(2, {}), 0), Error);
  CHECK_THROWS_AS(VerifyLevelDUpper(And(2, {}), And(2, {}), 3), Error);
}

TEST_CASE("averaged lower bound over a family") {
  const std::vector<CubeFunction> family = {And(2, {}), Or(2, {})};
  const InequalityReport r = VerifyAverageDream(family);
  CHECK(r.applicable);
  CHECK(r.lhs == 0.5);
  CHECK(r.rhs == 0.5);
  CHECK(r.slack == 0.0);
  CHECK(r.status == ReportStatus::kSatisfied);
  CHECK(r.params.at("family_size") == 2.0);

  CHECK_THROWS_AS(VerifyAverageDream({}), Error);
  CHECK_THROWS_AS(VerifyAverageDream({And(2, {}), And(3, {})}), Error);
  const CubeFunction decreasing(1, {1.0, 0.0}, ValueKind::kBoolean);
  CHECK_THROWS_AS(VerifyAverageDream({decreasing}), Error);
}

TEST_CASE("correlation versus minimum influence") {
  const ChvatalReport eq = ChvatalTypeCheck(And(2, {}), Dictator(2, 1));
  CHECK(eq.conjecture.applicable);
  CHECK(eq.conjecture.lhs == 0.125);
  CHECK(eq.conjecture.rhs == 0.125);
  CHECK(eq.conjecture.status == ReportStatus::kSatisfied);
  CHECK(eq.harper.applicable);
  CHECK(eq.harper.params.at("alpha") == 0.5);
  CHECK(eq.harper.lhs == 0.125);
  CHECK(eq.harper.rhs == 0.125);
  CHECK(eq.harper.status == ReportStatus::kSatisfied);

  const ChvatalReport na = ChvatalTypeCheck(And(2, {}), Or(2, {}));
  CHECK_FALSE(na.conjecture.applicable);  // complement symmetry fails
  CHECK_FALSE(na.harper.applicable);

  Rng rng(52);
  CHECK_THROWS_AS(ChvatalTypeCheck(oracles::RandomReal(2, rng), And(2, {})),
                  Error);
}

TEST_CASE("nonnegative signed differences as a sufficient condition") {
  const InequalityReport na = VerifyDijSufficient(And(2, {}), And(2, {}));
  CHECK_FALSE(na.applicable);
  CHECK(na.params.at("min_dij_f") == -1.0);
  CHECK(na.status == ReportStatus::kNotApplicable);

  const InequalityReport ok =
      VerifyDijSufficient(Dictator(2, 1), Dictator(2, 2));
  CHECK(ok.applicable);
  CHECK(ok.lhs == 0.0);
  CHECK(ok.rhs == 0.0);
  CHECK(ok.status == ReportStatus::kSatisfied);
}

TEST_CASE("noise contraction of second norms") {
  const InequalityReport r = VerifyHypercontractivity(And(2, {}), 1.0);
  CHECK(r.applicable);
  CHECK(r.status == ReportStatus::kSatisfied);
  CHECK(r.params.at("t") == 1.0);

  const InequalityReport zero = VerifyHypercontractivity(And(2, {}), 0.0);
  CHECK(zero.status == ReportStatus::kSatisfied);
  CHECK(std::fabs(zero.slack) <= 1e-12);

  CHECK_THROWS_AS(VerifyHypercontractivity(And(2, {}), -0.5), Error);
}

TEST_CASE("reverse form for nonnegative tables") {
  const InequalityReport r =
      VerifyReverseHypercontractivity(And(2, {}), And(2, {}), 0.5, 0.5, 1.0);
  CHECK(r.applicable);
  CHECK(r.status == ReportStatus::kSatisfied);

  const InequalityReport early =
      VerifyReverseHypercontractivity(And(2, {}), And(2, {}), 0.5, 0.5, 0.5);
  CHECK_FALSE(early.applicable);
  CHECK(early.note == "noise time below the admissible threshold");

  const InequalityReport neg =
      VerifyReverseHypercontractivity(Parity(2, {}), And(2, {}), 0.5, 0.5, 1.0);
  CHECK_FALSE(neg.applicable);
  CHECK(neg.note == "f takes negative values");

  CHECK_THROWS_AS(
      VerifyReverseHypercontractivity(And(2, {}), And(2, {}), 1.2, 0.5, 1.0),
      Error);
}

TEST_CASE("dispatch by bound id") {
  BoundParams params;
  params.theta = 0.5;
  const InequalityReport direct = VerifyStrongLower(And(2, {}), And(2, {}), 0.5);
  const InequalityReport routed =
      EvaluateBound("strong-lower", And(2, {}), And(2, {}), params);
  CHECK(routed.lhs == direct.lhs);
  CHECK(routed.rhs == direct.rhs);
  CHECK(routed.bound_id == direct.bound_id);
  for (const std::string& id : KnownBoundIds()) {
    const InequalityReport r = EvaluateBound(id, And(2, {}), And(2, {}), params);
    CHECK(r.bound_id == id);
  }
  CHECK_THROWS_AS(EvaluateBound("nope", And(2, {}), And(2, {}), params), Error);
}

TEST_CASE("two-route level-2 weight on the and table") {
  QuadratureSpec spec;
  const IdentityReport partial =
      CheckHeatIdentityPartial(And(2, {}), And(2, {}), spec);
  CHECK(partial.identity_id == "heat-partial");
  CHECK(partial.lhs == 0.0625);
  CHECK(partial.agree);
  CHECK(partial.quadrature_converged);
  CHECK(std::fabs(partial.rhs - 0.0625) <= 1e-8);
  REQUIRE(!partial.kernel_checks.empty());
  for (const KernelCheck& k : partial.kernel_checks) {
    CHECK(std::fabs(k.quadrature - k.exact) <= 1e-8);
  }

  const IdentityReport signed_form =
      CheckHeatIdentityD(And(2, {}), And(2, {}), spec);
  CHECK(signed_form.identity_id == "heat-d");
  CHECK(signed_form.lhs == 0.0625);
  CHECK(signed_form.agree);
}

TEST_CASE("two-route identities on random tables") {
  QuadratureSpec spec;
  Rng rng(53);
  for (int k = 0; k < 3; ++k) {
    const CubeFunction f = oracles::RandomReal(4, rng);
    const CubeFunction g = oracles::RandomReal(4, rng);
    CHECK(CheckHeatIdentityPartial(f, g, spec).agree);
    CHECK(CheckHeatIdentityD(f, g, spec).agree);
    CHECK(CheckLevelDIdentity(f, g, 2, spec).agree);
    CHECK(CheckLevelDIdentity(f, g, 3, spec).agree);
    CHECK(CheckRestrictionDecomposition(f, g).agree);
  }
  // The level-2 identity reproduces the partial-difference route.
  const CubeFunction f = oracles::RandomBoolean(4, rng);
  const IdentityReport a = CheckLevelDIdentity(f, f, 2, spec);
  const IdentityReport b = CheckHeatIdentityPartial(f, f, spec);
  CHECK(a.lhs == b.lhs);
}

TEST_CASE("semigroup factorization identity") {
  const IdentityReport base = CheckBarrierIdentity(And(2, {}), And(2, {}), 1, 2,
                                                   0.0, 1.0);
  CHECK(base.agree);
  CHECK(std::fabs(base.lhs - std::exp(-2.0)) <= 1e-13);
  CHECK(base.abs_error <= 1e-13);

  Rng rng(54);
  const CubeFunction f = oracles::RandomReal(4, rng);
  const CubeFunction g = oracles::RandomReal(4, rng);
  for (auto [s, t] : std::vector<std::pair<double, double>>{
           {0.0, 0.5}, {0.25, 1.0}, {0.5, 1.0}}) {
    const IdentityReport r = CheckBarrierIdentity(f, g, 2, 3, s, t);
    CHECK(r.agree);
  }
  CHECK_THROWS_AS(CheckBarrierIdentity(f, g, 2, 3, -0.1, 1.0), Error);
  CHECK_THROWS_AS(CheckBarrierIdentity(f, g, 2, 3, 0.6, 1.0), Error);
  CHECK_THROWS_AS(CheckBarrierIdentity(f, g, 2, 2, 0.0, 1.0), Error);
}

TEST_CASE("kernel integral values and bound") {
  QuadratureSpec spec;
  CHECK(std::fabs(KernelIntegral(1.0, spec) - 0.5) <= 1e-9);
  double prev = KernelIntegral(1.0, spec);
  for (double log_r : {1.0, 2.0, 4.0, 8.0}) {
    const double cur = KernelIntegral(std::exp(log_r), spec);
    CHECK(cur <= prev + 1e-12);
    prev = cur;
  }
  CHECK_THROWS_AS(KernelIntegral(0.5, spec), Error);

  for (double log_r : {0.0, 1.0, 4.0}) {
    const InequalityReport r = KernelBoundCheck(std::exp(log_r), spec);
    CHECK(r.applicable);
    CHECK(r.status == ReportStatus::kSatisfied);
  }
}
