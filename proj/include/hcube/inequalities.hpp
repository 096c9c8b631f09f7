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

#ifndef HCUBE_INEQUALITIES_HPP_
#define HCUBE_INEQUALITIES_HPP_

#include <map>
#include <string>
#include <vector>

#include "hcube/cube_function.hpp"
#include "hcube/quadrature.hpp"

namespace hcube {

enum class ReportStatus { kSatisfied, kViolated, kNotApplicable };

// Uniform verdict record. slack >= 0 means the bound holds; lhs and rhs are
// reported even when the hypotheses fail (status not-applicable), so scans
// can surface informational violations of unguarded forms.
struct InequalityReport {
  std::string bound_id;
  bool applicable = false;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  ReportStatus status = ReportStatus::kNotApplicable;
  std::map<std::string, double> params;
  std::string note;  // reason when not applicable
};

std::string StatusName(ReportStatus s);

// Cov(f,g) >= (1/4) sum_i Inf_i[f] Inf_i[g] for boolean increasing pairs of
// matching modularity. The unguarded variant drops the modularity guard and
// is applicable to every boolean increasing pair; it can be violated.
InequalityReport VerifyDream(const CubeFunction& f, const CubeFunction& g);
InequalityReport VerifyDreamUnguarded(const CubeFunction& f, const CubeFunction& g);

// Cov(f,g) >= sum_i fhat({i}) ghat({i}) for real pairs of matching modularity.
InequalityReport VerifyRealLevel1(const CubeFunction& f, const CubeFunction& g);

// Cov(f,g) >= (1/4) sum_i E[|d_i f|] E[|d_i g|] for increasing real pairs of
// matching modularity.
InequalityReport VerifyL1InfluenceForm(const CubeFunction& f, const CubeFunction& g);

// Level->=2 weight >= c(theta) sum_{i<j} ||d_ij f||_{1-theta} ||d_ij g||_{1-theta}
// for matching modularity; c(theta) = (theta - theta^2/2) / 8. The report also
// carries the covariance form Cov >= level-1 + rhs.
InequalityReport VerifyStrongLower(const CubeFunction& f, const CubeFunction& g,
                                   double theta);

// |Cov(f,g)| <= (1/4) sum_i sqrt(Inf_i[f] Inf_i[g]); always applicable.
InequalityReport VerifyPoincare(const CubeFunction& f, const CubeFunction& g);

// Refined form isolating coordinate i:
// |Cov| <= (1/4) sum_{j != i} sqrt(Inf_j[f] Inf_j[g]) + |fhat({i}) ghat({i})|.
InequalityReport VerifyPoincareRefined(const CubeFunction& f, const CubeFunction& g,
                                       int i);

// |W>=2| <= (9/8) sum_{i<j} ||d_ij f||_2 ||d_ij g||_2 / (1 + log R_ij),
// R_ij = ||d_ij f||_2 ||d_ij g||_2 / (||d_ij f||_1 ||d_ij g||_1), 0/0 -> 0.
InequalityReport VerifyTalagrandUpper(const CubeFunction& f, const CubeFunction& g);

// Increasing pairs: |Cov - (1/4) sum_i Inf1_i[f] Inf1_i[g]| bounded by the
// same right-hand side as the L1-L2 form.
InequalityReport VerifyTalagrandWindow(const CubeFunction& f, const CubeFunction& g);

// |W>=d| <= C_d sum_{|T|=d} ||d_T f||_2 ||d_T g||_2 / (1 + log R_T),
// C_d = (1 + (2^d d!)^(1/d)) / 4^d. At d = 2 the report also carries the 9/8
// form's right-hand side.
InequalityReport VerifyLevelDUpper(const CubeFunction& f, const CubeFunction& g,
                                   int d);

// Averaged form over a family: sum over ordered pairs (diagonal included) of
// Cov(f,g) >= (1/4) sum over ordered pairs of sum_i Inf_i[f] Inf_i[g].
// Members must be boolean, increasing, and share one dimension.
InequalityReport VerifyAverageDream(const std::vector<CubeFunction>& family);

// Correlation lower bounds against the minimum influence, for boolean
// increasing pairs. The conjectural branch (g antipodal) is never asserted
// as a theorem; the Harper branch holds when alpha = E[g] <= 1/2 and the
// guarded dream hypotheses hold.
struct ChvatalReport {
  InequalityReport conjecture;  // Cov >= (1/4) min_i Inf_i[f]
  InequalityReport harper;      // Cov >= (alpha/2) log2(1/alpha) min_i Inf_i[f]
};

ChvatalReport ChvatalTypeCheck(const CubeFunction& f, const CubeFunction& g);

// Sufficient condition via signed second differences: if f, g are boolean
// increasing and D_ij f >= 0 everywhere for all i != j, the dream bound holds.
InequalityReport VerifyDijSufficient(const CubeFunction& f, const CubeFunction& g);

// ||P_t f||_2 <= ||f||_{1+e^(-2t)}.
InequalityReport VerifyHypercontractivity(const CubeFunction& f, double t);

// <f, P_t g> >= ||f||_p ||g||_q for nonnegative f, g and p, q in (0,1) with
// e^(-2t) <= (1-p)(1-q).
InequalityReport VerifyReverseHypercontractivity(const CubeFunction& f,
                                                 const CubeFunction& g, double p,
                                                 double q, double t);

struct BoundParams {
  double theta = 0.5;
  int d = 2;
  int i = 1;
  double p = 0.5;
  double q = 0.5;
  double t = 1.0;
};

// Dispatch by bound id: dream, dream-unguarded, real-level1, l1-influence,
// strong-lower, poincare, poincare-refined, talagrand-upper,
// talagrand-window, level-d-upper, chvatal-conjecture, chvatal-harper,
// dij-sufficient, hypercontractivity, reverse-hypercontractivity.
InequalityReport EvaluateBound(const std::string& bound_id, const CubeFunction& f,
                               const CubeFunction& g, const BoundParams& params);

std::vector<std::string> KnownBoundIds();

// Two-route identity comparison.
struct KernelCheck {
  double param = 0.0;       // level (or beta exponent) being checked
  double quadrature = 0.0;  // integral computed numerically
  double exact = 0.0;       // closed form
  double abs_error = 0.0;
};

struct IdentityReport {
  std::string identity_id;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_error = 0.0;
  double tolerance = 0.0;
  bool agree = false;
  std::map<std::string, double> params;
  std::vector<KernelCheck> kernel_checks;
  long long evaluations = 0;
  bool quadrature_converged = true;
};

// W>=2 versus (1/8) sum_{i<j} integral of (1-e^-t) e^-t E[d_ij f P_t d_ij g].
// The integrand is evaluated spectrally from the transforms of the actual
// second-derivative tables; per-level kernel integrals are cross-checked
// against 1/((m-1)m).
IdentityReport CheckHeatIdentityPartial(const CubeFunction& f, const CubeFunction& g,
                                        const QuadratureSpec& spec);

// Same quantity through the signed differences:
// (1/8) sum_{i<j} integral of (e^t - 1) E[D_ij f P_t D_ij g].
IdentityReport CheckHeatIdentityD(const CubeFunction& f, const CubeFunction& g,
                                  const QuadratureSpec& spec);

// W>=d versus (d/4^d) sum_{|T|=d} integral of (1-e^-t)^(d-1) e^-t
// <d_T f, P_t d_T g>; beta integrals cross-checked against 1/(d binom(m,d)).
IdentityReport CheckLevelDIdentity(const CubeFunction& f, const CubeFunction& g,
                                   int d, const QuadratureSpec& spec);

// Cov(f,g) = (1/2) Cov(f1,g1) + (1/2) Cov(f0,g0)
//          + (1/4)(E[f1]-E[f0])(E[g1]-E[g0]),
// restriction along the last coordinate. Exact; tolerance 1e-12 scaled.
IdentityReport CheckRestrictionDecomposition(const CubeFunction& f,
                                             const CubeFunction& g);

// <D_ij f, P_t D_ij g> = 4 e^(-(t-2s)) <chi_ij d_i(P_s f), P_(t-2s) d_j(P_s g)>
// for 0 <= s <= t/2. Left side computed from the signed-difference tables,
// right side through the semigroup factorization; the report records the
// pointwise minima of the right-hand factors (the sign obstruction).
IdentityReport CheckBarrierIdentity(const CubeFunction& f, const CubeFunction& g,
                                    int i, int j, double s, double t);

// I(R) = integral over [0, inf) of (1-e^-t) e^-t R^(-tanh(t/2)) dt, R >= 1.
double KernelIntegral(double r, const QuadratureSpec& spec);

// I(R) <= 9 / (1 + log R).
InequalityReport KernelBoundCheck(double r, const QuadratureSpec& spec);

}  // namespace hcube

#endif  // HCUBE_INEQUALITIES_HPP_
