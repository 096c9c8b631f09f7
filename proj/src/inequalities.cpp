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

#include "hcube/inequalities.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "hcube/operators.hpp"
#include "hcube/structure.hpp"

namespace hcube {

namespace {

void Finish(InequalityReport& report, bool lower_bound) {
  report.slack = lower_bound ? report.lhs - report.rhs : report.rhs - report.lhs;
  if (!report.applicable) {
    report.status = ReportStatus::kNotApplicable;
    return;
  }
  const double tol =
      kReportTol * std::max({1.0, std::fabs(report.lhs), std::fabs(report.rhs)});
  report.status = report.slack >= -tol ? ReportStatus::kSatisfied
                                       : ReportStatus::kViolated;
}

bool MatchingModularity(const CubeFunction& f, const CubeFunction& g,
                        std::string* note) {
  const ModularityResult mf = ClassifyModularity(f);
  const ModularityResult mg = ClassifyModularity(g);
  if ((mf.submodular && mg.submodular) || (mf.supermodular && mg.supermodular)) {
    return true;
  }
  *note = "modularity mismatch: f is " + ModularityName(mf.classification) +
          ", g is " + ModularityName(mg.classification);
  return false;
}

bool BothIncreasing(const CubeFunction& f, const CubeFunction& g,
                    std::string* note) {
  if (!IsIncreasing(f).increasing) {
    *note = "f is not increasing";
    return false;
  }
  if (!IsIncreasing(g).increasing) {
    *note = "g is not increasing";
    return false;
  }
  return true;
}

void RequireBoolean(const CubeFunction& f, const CubeFunction& g) {
  Require(f.is_boolean() && g.is_boolean(), ErrorCode::kInvalidArgument,
          "bound expects boolean tables");
}

double DreamRhs(const CubeFunction& f, const CubeFunction& g) {
  return 0.25 * CrossTotalInfluence(f, g);
}

InequalityReport DreamCore(const CubeFunction& f, const CubeFunction& g,
                           bool guarded) {
  RequireSameDimension(f, g);
  RequireBoolean(f, g);
  InequalityReport report;
  report.bound_id = guarded ? "dream" : "dream-unguarded";
  std::string note;
  report.applicable = BothIncreasing(f, g, &note) &&
                      (!guarded || MatchingModularity(f, g, &note));
  report.note = note;
  report.lhs = Covariance(f, g);
  report.rhs = DreamRhs(f, g);
  Finish(report, /*lower_bound=*/true);
  return report;
}

double BinomialExact(int m, int d) {
  double value = 1.0;
  for (int k = 1; k <= d; ++k) {
    value *= static_cast<double>(m - d + k);
    value /= static_cast<double>(k);
  }
  return value;
}

// Profile over the derivative's own levels of the coefficientwise product of
// two spectra: out[k] = sum over |S| = k of uhat(S) vhat(S).
std::vector<double> LevelProfile(const Spectrum& u, const Spectrum& v) {
  std::vector<double> profile(u.n() + 1, 0.0);
  for (std::uint64_t s = 0; s < u.size(); ++s) {
    profile[std::popcount(s)] += u[s] * v[s];
  }
  return profile;
}

struct PairNorms {
  double f1 = 0.0, f2 = 0.0, g1 = 0.0, g2 = 0.0;
};

// Talagrand-type term: ||df||_2 ||dg||_2 / (1 + log R) with 0/0 -> 0.
double L1L2Term(const PairNorms& norms) {
  const double num = norms.f2 * norms.g2;
  if (num == 0.0) return 0.0;
  const double den = norms.f1 * norms.g1;
  const double ratio = std::max(num / den, 1.0);
  return num / (1.0 + std::log(ratio));
}

}  // namespace

std::string StatusName(ReportStatus s) {
  switch (s) {
    case ReportStatus::kSatisfied: return "satisfied";
    case ReportStatus::kViolated: return "violated";
    case ReportStatus::kNotApplicable: return "not-applicable";
  }
  return "not-applicable";
}

InequalityReport VerifyDream(const CubeFunction& f, const CubeFunction& g) {
  return DreamCore(f, g, true);
}

InequalityReport VerifyDreamUnguarded(const CubeFunction& f,
                                      const CubeFunction& g) {
  return DreamCore(f, g, false);
}

InequalityReport VerifyRealLevel1(const CubeFunction& f, const CubeFunction& g) {
  RequireSameDimension(f, g);
  InequalityReport report;
  report.bound_id = "real-level1";
  std::string note;
  report.applicable = MatchingModularity(f, g, &note);
  report.note = note;
  report.lhs = Covariance(f, g);
  report.rhs = Level1Cross(FourierTransform(f), FourierTransform(g));
  Finish(report, /*lower_bound=*/true);
  return report;
}

InequalityReport VerifyL1InfluenceForm(const CubeFunction& f,
                                       const CubeFunction& g) {
  RequireSameDimension(f, g);
  InequalityReport report;
  report.bound_id = "l1-influence";
  std::string note;
  report.applicable =
      BothIncreasing(f, g, &note) && MatchingModularity(f, g, &note);
  report.note = note;
  report.lhs = Covariance(f, g);
  double sum = 0.0;
  for (int i = 1; i <= f.n(); ++i) {
    sum += Influence(f, i, 1.0) * Influence(g, i, 1.0);
  }
  report.rhs = 0.25 * sum;
  Finish(report, /*lower_bound=*/true);
  return report;
}

InequalityReport VerifyStrongLower(const CubeFunction& f, const CubeFunction& g,
                                   double theta) {
  RequireSameDimension(f, g);
  Require(theta > 0.0 && theta < 1.0, ErrorCode::kInvalidArgument,
          "theta must lie in (0,1)");
  InequalityReport report;
  report.bound_id = "strong-lower";
  report.params["theta"] = theta;
  const double c = (theta - 0.5 * theta * theta) / 8.0;
  report.params["c_theta"] = c;
  std::string note;
  report.applicable = MatchingModularity(f, g, &note);
  report.note = note;

  const Spectrum sf = FourierTransform(f);
  const Spectrum sg = FourierTransform(g);
  report.lhs = LevelWeightCross(sf, sg, 2);
  double sum = 0.0;
  for (int i = 1; i <= f.n(); ++i) {
    for (int j = i + 1; j <= f.n(); ++j) {
      sum += LpNorm(SecondDerivative(f, i, j), 1.0 - theta) *
             LpNorm(SecondDerivative(g, i, j), 1.0 - theta);
    }
  }
  report.rhs = c * sum;
  // Equivalent covariance form: Cov >= level-1 + c(theta) * sum.
  report.params["cov_lhs"] = Covariance(f, g);
  report.params["cov_rhs"] = Level1Cross(sf, sg) + report.rhs;
  Finish(report, /*lower_bound=*/true);
  return report;
}

InequalityReport VerifyPoincare(const CubeFunction& f, const CubeFunction& g) {
  RequireSameDimension(f, g);
  InequalityReport report;
  report.bound_id = "poincare";
  report.applicable = true;
  report.lhs = std::fabs(Covariance(f, g));
  double sum = 0.0;
  for (int i = 1; i <= f.n(); ++i) {
    sum += std::sqrt(Influence(f, i, 2.0) * Influence(g, i, 2.0));
  }
  report.rhs = 0.25 * sum;
  Finish(report, /*lower_bound=*/false);
  return report;
}

InequalityReport VerifyPoincareRefined(const CubeFunction& f,
                                       const CubeFunction& g, int i) {
  RequireSameDimension(f, g);
  RequireCoordinate(f.n(), i);
  InequalityReport report;
  report.bound_id = "poincare-refined";
  report.params["i"] = i;
  report.applicable = true;
  report.lhs = std::fabs(Covariance(f, g));
  double sum = 0.0;
  for (int j = 1; j <= f.n(); ++j) {
    if (j == i) continue;
    sum += std::sqrt(Influence(f, j, 2.0) * Influence(g, j, 2.0));
  }
  const Spectrum sf = FourierTransform(f);
  const Spectrum sg = FourierTransform(g);
  const std::uint64_t e = std::uint64_t{1} << (i - 1);
  report.rhs = 0.25 * sum + std::fabs(sf[e] * sg[e]);
  Finish(report, /*lower_bound=*/false);
  return report;
}

InequalityReport VerifyTalagrandUpper(const CubeFunction& f,
                                      const CubeFunction& g) {
  RequireSameDimension(f, g);
  InequalityReport report;
  report.bound_id = "talagrand-upper";
  report.applicable = true;
  report.lhs =
      std::fabs(LevelWeightCross(FourierTransform(f), FourierTransform(g), 2));
  double sum = 0.0;
  for (int i = 1; i <= f.n(); ++i) {
    for (int j = i + 1; j <= f.n(); ++j) {
      const CubeFunction df = SecondDerivative(f, i, j);
      const CubeFunction dg = SecondDerivative(g, i, j);
      PairNorms norms{LpNorm(df, 1.0), LpNorm(df, 2.0), LpNorm(dg, 1.0),
                      LpNorm(dg, 2.0)};
      sum += L1L2Term(norms);
    }
  }
  report.rhs = 9.0 / 8.0 * sum;
  Finish(report, /*lower_bound=*/false);
  return report;
}

InequalityReport VerifyTalagrandWindow(const CubeFunction& f,
                                       const CubeFunction& g) {
  RequireSameDimension(f, g);
  InequalityReport report;
  report.bound_id = "talagrand-window";
  std::string note;
  report.applicable = BothIncreasing(f, g, &note);
  report.note = note;
  double cross1 = 0.0;
  for (int i = 1; i <= f.n(); ++i) {
    cross1 += Influence(f, i, 1.0) * Influence(g, i, 1.0);
  }
  report.lhs = std::fabs(Covariance(f, g) - 0.25 * cross1);
  const InequalityReport upper = VerifyTalagrandUpper(f, g);
  report.rhs = upper.rhs;
  report.params["level2_weight_abs"] = upper.lhs;
  Finish(report, /*lower_bound=*/false);
  return report;
}

InequalityReport VerifyLevelDUpper(const CubeFunction& f, const CubeFunction& g,
                                   int d) {
  RequireSameDimension(f, g);
  Require(d >= 1 && d <= f.n(), ErrorCode::kInvalidArgument,
          "level must lie in 1..n");
  InequalityReport report;
  report.bound_id = "level-d-upper";
  report.params["d"] = d;
  report.applicable = true;
  report.lhs =
      std::fabs(LevelWeightCross(FourierTransform(f), FourierTransform(g), d));
  const double cd =
      (1.0 + std::pow(std::pow(2.0, d) * std::tgamma(d + 1.0), 1.0 / d)) /
      std::pow(4.0, d);
  report.params["c_d"] = cd;

  double sum = 0.0;
  std::vector<int> coords;
  // Iterate over coordinate subsets of size d via mask enumeration.
  const std::uint64_t full = (std::uint64_t{1} << f.n()) - 1;
  for (std::uint64_t t_mask = 0; t_mask <= full; ++t_mask) {
    if (std::popcount(t_mask) != d) continue;
    coords.clear();
    for (int i = 1; i <= f.n(); ++i) {
      if (t_mask & (std::uint64_t{1} << (i - 1))) coords.push_back(i);
    }
    const CubeFunction df = HigherDerivative(f, coords);
    const CubeFunction dg = HigherDerivative(g, coords);
    PairNorms norms{LpNorm(df, 1.0), LpNorm(df, 2.0), LpNorm(dg, 1.0),
                    LpNorm(dg, 2.0)};
    sum += L1L2Term(norms);
  }
  report.rhs = cd * sum;
  if (d == 2) report.params["nine_eighths_rhs"] = 9.0 / 8.0 * sum;
  Finish(report, /*lower_bound=*/false);
  return report;
}

InequalityReport VerifyAverageDream(const std::vector<CubeFunction>& family) {
  Require(!family.empty(), ErrorCode::kInvalidArgument, "family is empty");
  const int n = family.front().n();
  for (const CubeFunction& f : family) {
    Require(f.n() == n, ErrorCode::kDimensionMismatch,
            "family members live on different cubes");
    Require(f.is_boolean(), ErrorCode::kInvalidArgument,
            "family members must be boolean");
    Require(IsIncreasing(f).increasing, ErrorCode::kInvalidArgument,
            "family members must be increasing");
  }
  InequalityReport report;
  report.bound_id = "average-dream";
  report.applicable = true;
  report.params["family_size"] = static_cast<double>(family.size());
  double lhs = 0.0;
  double cross = 0.0;
  for (const CubeFunction& f : family) {
    for (const CubeFunction& g : family) {
      lhs += Covariance(f, g);
      cross += CrossTotalInfluence(f, g);
    }
  }
  report.lhs = lhs;
  report.rhs = 0.25 * cross;
  Finish(report, /*lower_bound=*/true);
  return report;
}

ChvatalReport ChvatalTypeCheck(const CubeFunction& f, const CubeFunction& g) {
  RequireSameDimension(f, g);
  RequireBoolean(f, g);
  ChvatalReport out;

  double min_influence = 0.0;
  for (int i = 1; i <= f.n(); ++i) {
    const double inf = Influence(f, i, 2.0);
    min_influence = (i == 1) ? inf : std::min(min_influence, inf);
  }
  const double cov = Covariance(f, g);

  std::string note;
  const bool increasing = BothIncreasing(f, g, &note);

  out.conjecture.bound_id = "chvatal-conjecture";
  out.conjecture.params["conjecture"] = 1.0;
  out.conjecture.note = note;
  out.conjecture.applicable = increasing;
  if (increasing && !IsAntipodal(g).antipodal) {
    out.conjecture.applicable = false;
    out.conjecture.note = "g is not antipodal";
  }
  out.conjecture.lhs = cov;
  out.conjecture.rhs = 0.25 * min_influence;
  Finish(out.conjecture, /*lower_bound=*/true);

  out.harper.bound_id = "chvatal-harper";
  const double alpha = Mean(g);
  out.harper.params["alpha"] = alpha;
  std::string harper_note;
  out.harper.applicable = BothIncreasing(f, g, &harper_note) &&
                          MatchingModularity(f, g, &harper_note);
  if (out.harper.applicable && alpha > 0.5) {
    out.harper.applicable = false;
    harper_note = "E[g] exceeds 1/2";
  }
  out.harper.note = harper_note;
  out.harper.lhs = cov;
  out.harper.rhs =
      alpha > 0.0 ? 0.5 * alpha * std::log2(1.0 / alpha) * min_influence : 0.0;
  Finish(out.harper, /*lower_bound=*/true);
  return out;
}

InequalityReport VerifyDijSufficient(const CubeFunction& f,
                                     const CubeFunction& g) {
  RequireSameDimension(f, g);
  RequireBoolean(f, g);
  InequalityReport report;
  report.bound_id = "dij-sufficient";
  std::string note;
  bool applicable = BothIncreasing(f, g, &note);
  double min_dij = 0.0;
  bool first = true;
  for (int i = 1; i <= f.n(); ++i) {
    for (int j = i + 1; j <= f.n(); ++j) {
      const CubeFunction dij = SignedSecondDifference(f, i, j);
      for (double v : dij.values()) {
        if (first) {
          min_dij = v;
          first = false;
        } else {
          min_dij = std::min(min_dij, v);
        }
      }
    }
  }
  report.params["min_dij_f"] = min_dij;
  if (applicable && min_dij < -kZeroTol) {
    applicable = false;
    note = "D_ij f takes negative values";
  }
  report.applicable = applicable;
  report.note = note;
  report.lhs = Covariance(f, g);
  report.rhs = DreamRhs(f, g);
  Finish(report, /*lower_bound=*/true);
  return report;
}

InequalityReport VerifyHypercontractivity(const CubeFunction& f, double t) {
  Require(std::isfinite(t) && t >= 0.0, ErrorCode::kInvalidArgument,
          "noise time must be nonnegative");
  InequalityReport report;
  report.bound_id = "hypercontractivity";
  report.params["t"] = t;
  report.applicable = true;
  report.lhs = LpNorm(NoiseOperator(f, t), 2.0);
  report.rhs = LpNorm(f, 1.0 + std::exp(-2.0 * t));
  Finish(report, /*lower_bound=*/false);
  return report;
}

InequalityReport VerifyReverseHypercontractivity(const CubeFunction& f,
                                                 const CubeFunction& g, double p,
                                                 double q, double t) {
  RequireSameDimension(f, g);
  Require(p > 0.0 && p < 1.0 && q > 0.0 && q < 1.0, ErrorCode::kInvalidArgument,
          "exponents must lie in (0,1)");
  Require(std::isfinite(t) && t >= 0.0, ErrorCode::kInvalidArgument,
          "noise time must be nonnegative");
  InequalityReport report;
  report.bound_id = "reverse-hypercontractivity";
  report.params["p"] = p;
  report.params["q"] = q;
  report.params["t"] = t;
  report.applicable = true;
  for (double v : f.values()) {
    if (v < 0.0) {
      report.applicable = false;
      report.note = "f takes negative values";
      break;
    }
  }
  if (report.applicable) {
    for (double v : g.values()) {
      if (v < 0.0) {
        report.applicable = false;
        report.note = "g takes negative values";
        break;
      }
    }
  }
  if (report.applicable &&
      std::exp(-2.0 * t) > (1.0 - p) * (1.0 - q) + kZeroTol) {
    report.applicable = false;
    report.note = "noise time below the admissible threshold";
  }
  report.lhs = InnerProduct(f, NoiseOperator(g, t));
  report.rhs = LpNorm(f, p) * LpNorm(g, q);
  Finish(report, /*lower_bound=*/true);
  return report;
}

InequalityReport EvaluateBound(const std::string& bound_id, const CubeFunction& f,
                               const CubeFunction& g, const BoundParams& params) {
  if (bound_id == "dream") return VerifyDream(f, g);
  if (bound_id == "dream-unguarded") return VerifyDreamUnguarded(f, g);
  if (bound_id == "real-level1") return VerifyRealLevel1(f, g);
  if (bound_id == "l1-influence") return VerifyL1InfluenceForm(f, g);
  if (bound_id == "strong-lower") return VerifyStrongLower(f, g, params.theta);
  if (bound_id == "poincare") return VerifyPoincare(f, g);
  if (bound_id == "poincare-refined") {
    return VerifyPoincareRefined(f, g, params.i);
  }
  if (bound_id == "talagrand-upper") return VerifyTalagrandUpper(f, g);
  if (bound_id == "talagrand-window") return VerifyTalagrandWindow(f, g);
  if (bound_id == "level-d-upper") return VerifyLevelDUpper(f, g, params.d);
  if (bound_id == "chvatal-conjecture") return ChvatalTypeCheck(f, g).conjecture;
  if (bound_id == "chvatal-harper") return ChvatalTypeCheck(f, g).harper;
  if (bound_id == "dij-sufficient") return VerifyDijSufficient(f, g);
  if (bound_id == "hypercontractivity") {
    return VerifyHypercontractivity(f, params.t);
  }
  if (bound_id == "reverse-hypercontractivity") {
    return VerifyReverseHypercontractivity(f, g, params.p, params.q, params.t);
  }
  Fail(ErrorCode::kInvalidArgument, "unknown bound id: " + bound_id);
}

std::vector<std::string> KnownBoundIds() {
  return {"dream",           "dream-unguarded",
          "real-level1",     "l1-influence",
          "strong-lower",    "poincare",
          "poincare-refined", "talagrand-upper",
          "talagrand-window", "level-d-upper",
          "chvatal-conjecture", "chvatal-harper",
          "dij-sufficient",  "hypercontractivity",
          "reverse-hypercontractivity"};
}

namespace {

// Shared core of the two W>=2 representations. The signed flavor uses
// D_ij tables and kernel (e^t - 1) e^(-t k) over the derivative's levels k
// (k counts i and j); the partial flavor uses d_ij tables and kernel
// (1 - e^-t) e^-t e^(-t k) (k excludes i and j).
IdentityReport HeatIdentityCore(const CubeFunction& f, const CubeFunction& g,
                                const QuadratureSpec& spec, bool signed_form) {
  RequireSameDimension(f, g);
  IdentityReport report;
  report.identity_id = signed_form ? "heat-d" : "heat-partial";
  report.params["rel_tol"] = spec.rel_tol;

  const Spectrum sf = FourierTransform(f);
  const Spectrum sg = FourierTransform(g);
  report.lhs = LevelWeightCross(sf, sg, 2);

  std::vector<double> profile(f.n() + 1, 0.0);
  for (int i = 1; i <= f.n(); ++i) {
    for (int j = i + 1; j <= f.n(); ++j) {
      const CubeFunction df = signed_form ? SignedSecondDifference(f, i, j)
                                          : SecondDerivative(f, i, j);
      const CubeFunction dg = signed_form ? SignedSecondDifference(g, i, j)
                                          : SecondDerivative(g, i, j);
      const std::vector<double> pair_profile =
          LevelProfile(FourierTransform(df), FourierTransform(dg));
      for (std::size_t k = 0; k < pair_profile.size(); ++k) {
        profile[k] += pair_profile[k];
      }
    }
  }

  double scale = 0.0;
  for (double w : profile) scale += std::fabs(w);
  scale *= 0.125;

  const auto integrand = [&](double t) {
    double inner = 0.0;
    for (std::size_t k = 0; k < profile.size(); ++k) {
      if (profile[k] != 0.0) inner += profile[k] * std::exp(-t * static_cast<double>(k));
    }
    const double kernel = signed_form ? std::expm1(t) : (-std::expm1(-t)) * std::exp(-t);
    return 0.125 * kernel * inner;
  };
  const QuadratureResult quad = IntegrateSemiInfinite(integrand, scale, spec);
  report.rhs = quad.value;
  report.evaluations = quad.evaluations;
  report.quadrature_converged = quad.converged;
  report.abs_error = std::fabs(report.lhs - report.rhs);
  report.tolerance = 1e-8 * std::max(1.0, std::fabs(report.lhs));
  report.agree = quad.converged && report.abs_error <= report.tolerance;

  // Per-level kernel cross-check: both kernels integrate to 1/((m-1)m)
  // against e^(-t(m-2)) resp. e^(-t m) for original level m.
  for (int m = 2; m <= f.n(); ++m) {
    const auto kernel_fn = [&](double t) {
      return signed_form
                 ? std::expm1(t) * std::exp(-t * m)
                 : (-std::expm1(-t)) * std::exp(-t) * std::exp(-t * (m - 2));
    };
    KernelCheck check;
    check.param = m;
    check.quadrature = IntegrateSemiInfinite(kernel_fn, 1.0, spec).value;
    check.exact = 1.0 / (static_cast<double>(m - 1) * static_cast<double>(m));
    check.abs_error = std::fabs(check.quadrature - check.exact);
    report.kernel_checks.push_back(check);
  }
  return report;
}

}  // namespace

IdentityReport CheckHeatIdentityPartial(const CubeFunction& f,
                                        const CubeFunction& g,
                                        const QuadratureSpec& spec) {
  return HeatIdentityCore(f, g, spec, /*signed_form=*/false);
}

IdentityReport CheckHeatIdentityD(const CubeFunction& f, const CubeFunction& g,
                                  const QuadratureSpec& spec) {
  return HeatIdentityCore(f, g, spec, /*signed_form=*/true);
}

IdentityReport CheckLevelDIdentity(const CubeFunction& f, const CubeFunction& g,
                                   int d, const QuadratureSpec& spec) {
  RequireSameDimension(f, g);
  Require(d >= 1 && d <= f.n(), ErrorCode::kInvalidArgument,
          "level must lie in 1..n");
  IdentityReport report;
  report.identity_id = "level-d";
  report.params["d"] = d;
  report.params["rel_tol"] = spec.rel_tol;

  const Spectrum sf = FourierTransform(f);
  const Spectrum sg = FourierTransform(g);
  report.lhs = LevelWeightCross(sf, sg, d);

  std::vector<double> profile(f.n() + 1, 0.0);
  std::vector<int> coords;
  const std::uint64_t full = (std::uint64_t{1} << f.n()) - 1;
  for (std::uint64_t t_mask = 0; t_mask <= full; ++t_mask) {
    if (std::popcount(t_mask) != d) continue;
    coords.clear();
    for (int i = 1; i <= f.n(); ++i) {
      if (t_mask & (std::uint64_t{1} << (i - 1))) coords.push_back(i);
    }
    const std::vector<double> pair_profile =
        LevelProfile(FourierTransform(HigherDerivative(f, coords)),
                     FourierTransform(HigherDerivative(g, coords)));
    for (std::size_t k = 0; k < pair_profile.size(); ++k) {
      profile[k] += pair_profile[k];
    }
  }

  double scale = 0.0;
  for (double w : profile) scale += std::fabs(w);
  const double front = d / std::pow(4.0, d);
  scale *= front;

  const auto integrand = [&](double t) {
    double inner = 0.0;
    for (std::size_t k = 0; k < profile.size(); ++k) {
      if (profile[k] != 0.0) inner += profile[k] * std::exp(-t * static_cast<double>(k));
    }
    return front * std::pow(-std::expm1(-t), d - 1) * std::exp(-t) * inner;
  };
  const QuadratureResult quad = IntegrateSemiInfinite(integrand, scale, spec);
  report.rhs = quad.value;
  report.evaluations = quad.evaluations;
  report.quadrature_converged = quad.converged;
  report.abs_error = std::fabs(report.lhs - report.rhs);
  report.tolerance = 1e-8 * std::max(1.0, std::fabs(report.lhs));
  report.agree = quad.converged && report.abs_error <= report.tolerance;

  // Beta-kernel cross-check: integral of (1-e^-t)^(d-1) e^-t(m-d+1) over
  // [0, inf) equals 1 / (d binom(m,d)) for original level m.
  for (int m = d; m <= f.n(); ++m) {
    const auto kernel_fn = [&](double t) {
      return std::pow(-std::expm1(-t), d - 1) * std::exp(-t) *
             std::exp(-t * (m - d));
    };
    KernelCheck check;
    check.param = m;
    check.quadrature = IntegrateSemiInfinite(kernel_fn, 1.0, spec).value;
    check.exact = 1.0 / (d * BinomialExact(m, d));
    check.abs_error = std::fabs(check.quadrature - check.exact);
    report.kernel_checks.push_back(check);
  }
  return report;
}

IdentityReport CheckRestrictionDecomposition(const CubeFunction& f,
                                             const CubeFunction& g) {
  RequireSameDimension(f, g);
  Require(f.n() >= 2, ErrorCode::kInvalidArgument,
          "decomposition needs dimension at least 2");
  IdentityReport report;
  report.identity_id = "restriction";
  const int n = f.n();
  const CubeFunction f0 = RestrictCoordinate(f, n, 0);
  const CubeFunction f1 = RestrictCoordinate(f, n, 1);
  const CubeFunction g0 = RestrictCoordinate(g, n, 0);
  const CubeFunction g1 = RestrictCoordinate(g, n, 1);
  report.lhs = Covariance(f, g);
  report.rhs = 0.5 * Covariance(f1, g1) + 0.5 * Covariance(f0, g0) +
               0.25 * (Mean(f1) - Mean(f0)) * (Mean(g1) - Mean(g0));
  report.abs_error = std::fabs(report.lhs - report.rhs);
  report.tolerance =
      1e-12 * std::max({1.0, std::fabs(report.lhs), std::fabs(report.rhs)});
  report.agree = report.abs_error <= report.tolerance;
  return report;
}

IdentityReport CheckBarrierIdentity(const CubeFunction& f, const CubeFunction& g,
                                    int i, int j, double s, double t) {
  RequireSameDimension(f, g);
  RequireCoordinate(f.n(), i);
  RequireCoordinate(f.n(), j);
  Require(i != j, ErrorCode::kInvalidArgument,
          "barrier identity needs distinct coordinates");
  Require(std::isfinite(s) && std::isfinite(t) && t >= 0.0 && s >= 0.0 &&
              2.0 * s <= t + kZeroTol,
          ErrorCode::kInvalidArgument, "need 0 <= s <= t/2");
  IdentityReport report;
  report.identity_id = "barrier";
  report.params["i"] = i;
  report.params["j"] = j;
  report.params["s"] = s;
  report.params["t"] = t;

  const CubeFunction df = SignedSecondDifference(f, i, j);
  const CubeFunction dg = SignedSecondDifference(g, i, j);
  report.lhs = InnerProduct(df, NoiseOperator(dg, t));

  const double tau = std::max(t - 2.0 * s, 0.0);
  const CubeFunction untwisted = Derivative(NoiseOperator(f, s), i);
  const CubeFunction left = CharacterTwist(untwisted, i, j);
  const CubeFunction right = NoiseOperator(Derivative(NoiseOperator(g, s), j), tau);
  report.rhs = 4.0 * std::exp(-tau) * InnerProduct(left, right);

  const auto table_min = [](const CubeFunction& h) {
    double lo = h[0];
    for (std::uint64_t m = 1; m < h.size(); ++m) lo = std::min(lo, h[m]);
    return lo;
  };
  report.params["min_twisted_factor"] = table_min(left);
  report.params["min_derivative_factor"] = table_min(untwisted);
  report.params["min_smoothed_factor"] = table_min(right);

  report.abs_error = std::fabs(report.lhs - report.rhs);
  report.tolerance = 1e-10 * std::max(1.0, std::fabs(report.lhs));
  report.agree = report.abs_error <= report.tolerance;
  return report;
}

double KernelIntegral(double r, const QuadratureSpec& spec) {
  Require(std::isfinite(r) && r >= 1.0, ErrorCode::kInvalidArgument,
          "kernel ratio must be at least 1");
  const double log_r = std::log(r);
  const auto integrand = [&](double t) {
    return (-std::expm1(-t)) * std::exp(-t - log_r * std::tanh(0.5 * t));
  };
  const QuadratureResult quad = IntegrateSemiInfinite(integrand, 1.0, spec);
  Require(quad.converged, ErrorCode::kNoConvergence,
          "kernel quadrature did not converge");
  return quad.value;
}

InequalityReport KernelBoundCheck(double r, const QuadratureSpec& spec) {
  InequalityReport report;
  report.bound_id = "kernel-bound";
  report.params["r"] = r;
  report.applicable = true;
  report.lhs = KernelIntegral(r, spec);
  report.rhs = 9.0 / (1.0 + std::log(r));
  Finish(report, /*lower_bound=*/false);
  return report;
}

}  // namespace hcube
