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

#include "hcube.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hcube/cube_function.hpp"
#include "hcube/error.hpp"
#include "hcube/explorer.hpp"
#include "hcube/families.hpp"
#include "hcube/inequalities.hpp"
#include "hcube/operators.hpp"
#include "hcube/serialization.hpp"
#include "hcube/structure.hpp"
#include "hcube/version.hpp"

struct hcube_function {
  hcube::CubeFunction fn;
};

namespace {

thread_local std::string t_last_error;

template <typename Fn>
hcube_status Wrap(Fn&& fn) {
  try {
    fn();
    return HCUBE_OK;
  } catch (const hcube::Error& e) {
    t_last_error = e.what();
    return static_cast<hcube_status>(static_cast<int>(e.code()));
  } catch (const nlohmann::json::exception& e) {
    t_last_error = e.what();
    return HCUBE_ERR_PARSE;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return HCUBE_ERR_INTERNAL;
  } catch (...) {
    t_last_error = "unknown error";
    return HCUBE_ERR_INTERNAL;
  }
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void RequireArg(bool ok, const char* message) {
  hcube::Require(ok, hcube::ErrorCode::kInvalidArgument, message);
}

const hcube::CubeFunction& Deref(const hcube_function* f) {
  RequireArg(f != nullptr, "null function handle");
  return f->fn;
}

hcube_function* NewHandle(hcube::CubeFunction f) {
  return new hcube_function{std::move(f)};
}

int Verdict(const hcube::InequalityReport& report) {
  switch (report.status) {
    case hcube::ReportStatus::kSatisfied: return HCUBE_VERDICT_SATISFIED;
    case hcube::ReportStatus::kViolated: return HCUBE_VERDICT_VIOLATED;
    case hcube::ReportStatus::kNotApplicable:
      return HCUBE_VERDICT_NOT_APPLICABLE;
  }
  return HCUBE_VERDICT_NOT_APPLICABLE;
}

nlohmann::json ParseObject(const char* text, const char* what) {
  if (text == nullptr) return nlohmann::json::object();
  const nlohmann::json parsed = nlohmann::json::parse(std::string(text));
  hcube::Require(parsed.is_object(), hcube::ErrorCode::kParse,
                 std::string(what) + " must be a JSON object");
  return parsed;
}

hcube::BoundParams BoundParamsFromJson(const nlohmann::json& obj) {
  hcube::BoundParams params;
  if (obj.contains("theta")) params.theta = obj.at("theta").get<double>();
  if (obj.contains("d")) params.d = obj.at("d").get<int>();
  if (obj.contains("i")) params.i = obj.at("i").get<int>();
  if (obj.contains("p")) params.p = obj.at("p").get<double>();
  if (obj.contains("q")) params.q = obj.at("q").get<double>();
  if (obj.contains("t")) params.t = obj.at("t").get<double>();
  return params;
}

}  // namespace

extern "C" {

const char* hcube_version(void) { return hcube::kVersion; }

const char* hcube_last_error(void) { return t_last_error.c_str(); }

void hcube_string_free(char* s) { std::free(s); }

hcube_status hcube_set_max_dimension(int n) {
  return Wrap([&] { hcube::SetMaxDimension(n); });
}

hcube_status hcube_function_from_json(const char* json, hcube_function** out) {
  return Wrap([&] {
    RequireArg(json != nullptr && out != nullptr, "null argument");
    *out = NewHandle(hcube::FunctionFromJson(json));
  });
}

hcube_status hcube_function_to_json(const hcube_function* f, int compact,
                                    char** out_json) {
  return Wrap([&] {
    RequireArg(out_json != nullptr, "null argument");
    *out_json = CopyString(hcube::FunctionToJson(Deref(f), compact != 0));
  });
}

hcube_status hcube_function_generate(const char* family_spec_json,
                                     hcube_function** out) {
  return Wrap([&] {
    RequireArg(out != nullptr, "null argument");
    const nlohmann::json obj = ParseObject(family_spec_json, "family spec");
    hcube::FamilySpec spec;
    hcube::Require(obj.contains("name"), hcube::ErrorCode::kParse,
                   "family spec needs a name");
    spec.name = obj.at("name").get<std::string>();
    if (obj.contains("n")) spec.n = obj.at("n").get<int>();
    if (obj.contains("coords")) {
      spec.coords = obj.at("coords").get<std::vector<int>>();
    }
    if (obj.contains("k")) spec.k = obj.at("k").get<int>();
    if (obj.contains("width")) spec.width = obj.at("width").get<int>();
    if (obj.contains("count")) spec.count = obj.at("count").get<int>();
    if (obj.contains("seed")) spec.seed = obj.at("seed").get<std::uint64_t>();
    if (obj.contains("universe")) {
      spec.universe = obj.at("universe").get<int>();
    }
    if (obj.contains("terms")) spec.terms = obj.at("terms").get<int>();
    *out = NewHandle(hcube::Generate(spec));
  });
}

hcube_status hcube_function_dual(const hcube_function* f,
                                 hcube_function** out) {
  return Wrap([&] {
    RequireArg(out != nullptr, "null argument");
    *out = NewHandle(hcube::Dual(Deref(f)));
  });
}

int hcube_function_dimension(const hcube_function* f) {
  return f == nullptr ? -1 : f->fn.n();
}

hcube_status hcube_function_values(const hcube_function* f, double* buffer,
                                   uint64_t buffer_len) {
  return Wrap([&] {
    const hcube::CubeFunction& fn = Deref(f);
    RequireArg(buffer != nullptr, "null buffer");
    RequireArg(buffer_len >= fn.size(), "buffer too small");
    std::memcpy(buffer, fn.values().data(), fn.size() * sizeof(double));
  });
}

void hcube_function_free(hcube_function* f) { delete f; }

hcube_status hcube_mean(const hcube_function* f, double* out) {
  return Wrap([&] {
    RequireArg(out != nullptr, "null argument");
    *out = hcube::Mean(Deref(f));
  });
}

hcube_status hcube_inner_product(const hcube_function* f,
                                 const hcube_function* g, double* out) {
  return Wrap([&] {
    RequireArg(out != nullptr, "null argument");
    *out = hcube::InnerProduct(Deref(f), Deref(g));
  });
}

hcube_status hcube_covariance(const hcube_function* f, const hcube_function* g,
                              double* out) {
  return Wrap([&] {
    RequireArg(out != nullptr, "null argument");
    *out = hcube::Covariance(Deref(f), Deref(g));
  });
}

hcube_status hcube_lp_norm(const hcube_function* f, double p, double* out) {
  return Wrap([&] {
    RequireArg(out != nullptr, "null argument");
    *out = hcube::LpNorm(Deref(f), p);
  });
}

hcube_status hcube_influence(const hcube_function* f, int i, double p,
                             double* out) {
  return Wrap([&] {
    RequireArg(out != nullptr, "null argument");
    *out = hcube::Influence(Deref(f), i, p);
  });
}

hcube_status hcube_derivative(const hcube_function* f, int i,
                              hcube_function** out) {
  return Wrap([&] {
    RequireArg(out != nullptr, "null argument");
    *out = NewHandle(hcube::Derivative(Deref(f), i));
  });
}

hcube_status hcube_signed_difference(const hcube_function* f, int i,
                                     hcube_function** out) {
  return Wrap([&] {
    RequireArg(out != nullptr, "null argument");
    *out = NewHandle(hcube::SignedDifference(Deref(f), i));
  });
}

hcube_status hcube_second_derivative(const hcube_function* f, int i, int j,
                                     hcube_function** out) {
  return Wrap([&] {
    RequireArg(out != nullptr, "null argument");
    *out = NewHandle(hcube::SecondDerivative(Deref(f), i, j));
  });
}

hcube_status hcube_signed_second_difference(const hcube_function* f, int i,
                                            int j, hcube_function** out) {
  return Wrap([&] {
    RequireArg(out != nullptr, "null argument");
    *out = NewHandle(hcube::SignedSecondDifference(Deref(f), i, j));
  });
}

hcube_status hcube_noise(const hcube_function* f, double t,
                         hcube_function** out) {
  return Wrap([&] {
    RequireArg(out != nullptr, "null argument");
    *out = NewHandle(hcube::NoiseOperator(Deref(f), t));
  });
}

hcube_status hcube_restrict(const hcube_function* f, int i, int bit,
                            hcube_function** out) {
  return Wrap([&] {
    RequireArg(out != nullptr, "null argument");
    *out = NewHandle(hcube::RestrictCoordinate(Deref(f), i, bit != 0));
  });
}

hcube_status hcube_transform_json(const char* function_json,
                                  char** out_spectrum_json) {
  return Wrap([&] {
    RequireArg(function_json != nullptr && out_spectrum_json != nullptr,
               "null argument");
    const hcube::CubeFunction f = hcube::FunctionFromJson(function_json);
    *out_spectrum_json =
        CopyString(hcube::SpectrumToJson(hcube::FourierTransform(f)));
  });
}

hcube_status hcube_inverse_transform_json(const char* spectrum_json,
                                          char** out_function_json) {
  return Wrap([&] {
    RequireArg(spectrum_json != nullptr && out_function_json != nullptr,
               "null argument");
    const hcube::Spectrum s = hcube::SpectrumFromJson(spectrum_json);
    *out_function_json =
        CopyString(hcube::FunctionToJson(hcube::InverseTransform(s)));
  });
}

hcube_status hcube_profile_json(const hcube_function* f, char** out_json) {
  return Wrap([&] {
    RequireArg(out_json != nullptr, "null argument");
    *out_json = CopyString(hcube::ProfileToJson(hcube::ComputeProfile(Deref(f))));
  });
}

hcube_status hcube_verify_json(const char* bound_id, const hcube_function* f,
                               const hcube_function* g,
                               const char* params_json, char** out_report_json,
                               int* out_verdict) {
  return Wrap([&] {
    RequireArg(bound_id != nullptr, "null bound id");
    const hcube::CubeFunction& ff = Deref(f);
    const hcube::CubeFunction& gg = g == nullptr ? ff : Deref(g);
    const hcube::BoundParams params =
        BoundParamsFromJson(ParseObject(params_json, "bound params"));
    const hcube::InequalityReport report =
        hcube::EvaluateBound(bound_id, ff, gg, params);
    if (out_report_json != nullptr) {
      *out_report_json = CopyString(hcube::ReportToJson(report));
    }
    if (out_verdict != nullptr) *out_verdict = Verdict(report);
  });
}

hcube_status hcube_chvatal_json(const hcube_function* f,
                                const hcube_function* g,
                                char** out_report_json, int* out_verdict) {
  return Wrap([&] {
    const hcube::ChvatalReport report =
        hcube::ChvatalTypeCheck(Deref(f), Deref(g));
    if (out_report_json != nullptr) {
      *out_report_json = CopyString(hcube::ChvatalToJson(report));
    }
    if (out_verdict != nullptr) {
      const int a = Verdict(report.conjecture);
      const int b = Verdict(report.harper);
      if (a == HCUBE_VERDICT_VIOLATED || b == HCUBE_VERDICT_VIOLATED) {
        *out_verdict = HCUBE_VERDICT_VIOLATED;
      } else if (a == HCUBE_VERDICT_SATISFIED || b == HCUBE_VERDICT_SATISFIED) {
        *out_verdict = HCUBE_VERDICT_SATISFIED;
      } else {
        *out_verdict = HCUBE_VERDICT_NOT_APPLICABLE;
      }
    }
  });
}

hcube_status hcube_verify_family_json(const hcube_function* const* family,
                                      uint64_t count, char** out_report_json,
                                      int* out_verdict) {
  return Wrap([&] {
    RequireArg(family != nullptr && count > 0, "empty family");
    std::vector<hcube::CubeFunction> members;
    members.reserve(count);
    for (uint64_t k = 0; k < count; ++k) members.push_back(Deref(family[k]));
    const hcube::InequalityReport report = hcube::VerifyAverageDream(members);
    if (out_report_json != nullptr) {
      *out_report_json = CopyString(hcube::ReportToJson(report));
    }
    if (out_verdict != nullptr) *out_verdict = Verdict(report);
  });
}

hcube_status hcube_identity_json(const char* identity_id,
                                 const hcube_function* f,
                                 const hcube_function* g,
                                 const char* params_json,
                                 char** out_report_json, int* out_agree) {
  return Wrap([&] {
    RequireArg(identity_id != nullptr, "null identity id");
    const hcube::CubeFunction& ff = Deref(f);
    const hcube::CubeFunction& gg = g == nullptr ? ff : Deref(g);
    const nlohmann::json obj = ParseObject(params_json, "identity params");
    hcube::QuadratureSpec spec;
    if (obj.contains("rel_tol")) {
      spec.rel_tol = obj.at("rel_tol").get<double>();
    }
    const std::string id(identity_id);
    hcube::IdentityReport report;
    if (id == "heat-partial") {
      report = hcube::CheckHeatIdentityPartial(ff, gg, spec);
    } else if (id == "heat-d") {
      report = hcube::CheckHeatIdentityD(ff, gg, spec);
    } else if (id == "level-d") {
      const int d = obj.contains("d") ? obj.at("d").get<int>() : 2;
      report = hcube::CheckLevelDIdentity(ff, gg, d, spec);
    } else if (id == "restriction") {
      report = hcube::CheckRestrictionDecomposition(ff, gg);
    } else if (id == "barrier") {
      const int i = obj.contains("i") ? obj.at("i").get<int>() : 1;
      const int j = obj.contains("j") ? obj.at("j").get<int>() : 2;
      const double t = obj.contains("t") ? obj.at("t").get<double>() : 1.0;
      const double s = obj.contains("s") ? obj.at("s").get<double>() : 0.25;
      report = hcube::CheckBarrierIdentity(ff, gg, i, j, s, t);
    } else {
      hcube::Fail(hcube::ErrorCode::kInvalidArgument,
                  "unknown identity id: " + id);
    }
    if (out_report_json != nullptr) {
      *out_report_json = CopyString(hcube::IdentityToJson(report));
    }
    if (out_agree != nullptr) *out_agree = report.agree ? 1 : 0;
  });
}

hcube_status hcube_scan_json(const char* scan_spec_json,
                             char** out_report_json, char** out_csv,
                             uint64_t* out_violations) {
  return Wrap([&] {
    const nlohmann::json obj = ParseObject(scan_spec_json, "scan spec");
    hcube::ScanSpec spec;
    if (obj.contains("n")) spec.n = obj.at("n").get<int>();
    if (obj.contains("filter")) {
      spec.filter = obj.at("filter").get<std::string>();
    }
    if (obj.contains("bound")) {
      spec.bound_id = obj.at("bound").get<std::string>();
    }
    if (obj.contains("params")) {
      spec.params = BoundParamsFromJson(obj.at("params"));
    }
    if (obj.contains("threads")) spec.threads = obj.at("threads").get<int>();
    if (obj.contains("allow_large")) {
      spec.allow_large = obj.at("allow_large").get<bool>();
    }
    if (obj.contains("sample_count")) {
      spec.sample_count = obj.at("sample_count").get<int>();
    }
    if (obj.contains("seed")) spec.seed = obj.at("seed").get<std::uint64_t>();
    if (obj.contains("exemplar_cap")) {
      spec.exemplar_cap = obj.at("exemplar_cap").get<int>();
    }
    const hcube::ScanResult result = hcube::ScanPairs(spec);
    if (out_report_json != nullptr) {
      *out_report_json = CopyString(hcube::ScanResultToJson(result));
    }
    if (out_csv != nullptr) {
      *out_csv = CopyString(hcube::ScanResultToCsv(result));
    }
    if (out_violations != nullptr) *out_violations = result.violations;
  });
}

hcube_status hcube_monotone_count(int n, int method, int threads,
                                  uint64_t* out_count) {
  return Wrap([&] {
    RequireArg(out_count != nullptr, "null argument");
    RequireArg(method == 0 || method == 1, "method must be 0 or 1");
    *out_count = method == 0 ? hcube::MonotoneCountRecursive(n)
                             : hcube::MonotoneCountFilter(n, threads);
  });
}

hcube_status hcube_enumerate_monotone_json(int n, char** out_json) {
  return Wrap([&] {
    RequireArg(out_json != nullptr, "null argument");
    const std::vector<std::uint32_t> tables = hcube::EnumerateMonotone(n);
    nlohmann::ordered_json doc;
    doc["version"] = hcube::kVersion;
    doc["n"] = n;
    doc["count"] = tables.size();
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (std::uint32_t mask : tables) {
      list.push_back(hcube::BooleanTableToHex(hcube::FromTruthMask(n, mask)));
    }
    doc["tables"] = std::move(list);
    *out_json = CopyString(doc.dump(2));
  });
}

hcube_status hcube_tightness_csv(const char* mode, const int* dims,
                                 uint64_t dims_len, int width,
                                 char** out_csv) {
  return Wrap([&] {
    RequireArg(mode != nullptr && out_csv != nullptr, "null argument");
    RequireArg(dims != nullptr && dims_len > 0, "empty dimension list");
    const std::vector<int> dimensions(dims, dims + dims_len);
    *out_csv =
        CopyString(hcube::TightnessToCsv(hcube::TightnessScan(mode, dimensions, width)));
  });
}

hcube_status hcube_kernel_integral(double r, double* out_value) {
  return Wrap([&] {
    RequireArg(out_value != nullptr, "null argument");
    *out_value = hcube::KernelIntegral(r, hcube::QuadratureSpec{});
  });
}

hcube_status hcube_kernel_bound_json(double r, char** out_json,
                                     int* out_verdict) {
  return Wrap([&] {
    const hcube::InequalityReport report =
        hcube::KernelBoundCheck(r, hcube::QuadratureSpec{});
    if (out_json != nullptr) *out_json = CopyString(hcube::ReportToJson(report));
    if (out_verdict != nullptr) *out_verdict = Verdict(report);
  });
}

}  // extern "C"
