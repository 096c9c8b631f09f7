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

#include "hcube/serialization.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "hcube/version.hpp"

namespace hcube {

namespace {

using Json = nlohmann::ordered_json;

std::string FormatDouble(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

Json WitnessToJson(const Witness& w, bool pair) {
  Json out;
  out["mask"] = w.mask;
  out["i"] = w.i;
  if (pair) out["j"] = w.j;
  return out;
}

Json ParamsToJson(const std::map<std::string, double>& params) {
  Json out = Json::object();
  for (const auto& [key, value] : params) out[key] = value;
  return out;
}

Json ReportBody(const InequalityReport& report) {
  Json out;
  out["version"] = kVersion;
  out["bound_id"] = report.bound_id;
  out["applicable"] = report.applicable;
  out["status"] = StatusName(report.status);
  out["lhs"] = report.lhs;
  out["rhs"] = report.rhs;
  out["slack"] = report.slack;
  out["params"] = ParamsToJson(report.params);
  if (!report.note.empty()) out["note"] = report.note;
  return out;
}

int ParseDimension(const Json& j) {
  Require(j.contains("n") && j["n"].is_number_integer(), ErrorCode::kParse,
          "missing integer field n");
  return j["n"].get<int>();
}

Json Parse(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  Require(!j.is_discarded(), ErrorCode::kParse, "malformed JSON");
  return j;
}

}  // namespace

std::string BooleanTableToHex(const CubeFunction& f) {
  Require(f.is_boolean(), ErrorCode::kInvalidArgument,
          "compact form needs a boolean table");
  const std::uint64_t bytes = std::max<std::uint64_t>(1, f.size() / 8);
  std::string out;
  out.reserve(2 * bytes);
  static const char* digits = "0123456789abcdef";
  for (std::uint64_t k = 0; k < bytes; ++k) {
    unsigned byte = 0;
    for (unsigned j = 0; j < 8; ++j) {
      const std::uint64_t m = 8 * k + j;
      if (m < f.size() && f[m] == 1.0) byte |= 1u << j;
    }
    out.push_back(digits[byte >> 4]);
    out.push_back(digits[byte & 0xF]);
  }
  return out;
}

CubeFunction BooleanTableFromHex(int n, const std::string& hex) {
  const std::uint64_t size = std::uint64_t{1} << n;
  const std::uint64_t bytes = std::max<std::uint64_t>(1, size / 8);
  Require(hex.size() == 2 * bytes, ErrorCode::kParse,
          "bits_hex has the wrong length");
  const auto nibble = [](char c) -> unsigned {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    Fail(ErrorCode::kParse, "bits_hex has a non-hex character");
  };
  std::vector<double> values(size, 0.0);
  for (std::uint64_t k = 0; k < bytes; ++k) {
    const unsigned byte = (nibble(hex[2 * k]) << 4) | nibble(hex[2 * k + 1]);
    for (unsigned j = 0; j < 8; ++j) {
      const std::uint64_t m = 8 * k + j;
      if (m < size) {
        values[m] = (byte >> j) & 1 ? 1.0 : 0.0;
      } else {
        Require(((byte >> j) & 1) == 0, ErrorCode::kParse,
                "bits_hex has padding bits set");
      }
    }
  }
  return CubeFunction(n, std::move(values), ValueKind::kBoolean);
}

std::string FunctionToJson(const CubeFunction& f, bool compact) {
  Json out;
  out["n"] = f.n();
  if (compact) {
    out["bits_hex"] = BooleanTableToHex(f);
  } else {
    out["kind"] = f.is_boolean() ? "boolean" : "real";
    out["values"] = std::vector<double>(f.values().begin(), f.values().end());
  }
  return out.dump(2);
}

CubeFunction FunctionFromJson(const std::string& text) {
  const Json j = Parse(text);
  const int n = ParseDimension(j);
  Require(n >= 0 && n <= MaxDimension(), ErrorCode::kParse,
          "dimension out of range");
  if (j.contains("bits_hex")) {
    Require(j["bits_hex"].is_string(), ErrorCode::kParse,
            "bits_hex must be a string");
    return BooleanTableFromHex(n, j["bits_hex"].get<std::string>());
  }
  Require(j.contains("kind") && j["kind"].is_string(), ErrorCode::kParse,
          "missing kind");
  const std::string kind = j["kind"].get<std::string>();
  Require(kind == "boolean" || kind == "real", ErrorCode::kParse,
          "kind must be boolean or real");
  Require(j.contains("values") && j["values"].is_array(), ErrorCode::kParse,
          "missing values array");
  std::vector<double> values;
  values.reserve(j["values"].size());
  for (const auto& v : j["values"]) {
    Require(v.is_number(), ErrorCode::kParse, "values must be numbers");
    values.push_back(v.get<double>());
  }
  return CubeFunction(
      n, std::move(values),
      kind == "boolean" ? ValueKind::kBoolean : ValueKind::kReal);
}

std::string SpectrumToJson(const Spectrum& s) {
  Json out;
  out["n"] = s.n();
  out["coeffs"] = std::vector<double>(s.coeffs().begin(), s.coeffs().end());
  return out.dump(2);
}

Spectrum SpectrumFromJson(const std::string& text) {
  const Json j = Parse(text);
  const int n = ParseDimension(j);
  Require(n >= 0 && n <= MaxDimension(), ErrorCode::kParse,
          "dimension out of range");
  Require(j.contains("coeffs") && j["coeffs"].is_array(), ErrorCode::kParse,
          "missing coeffs array");
  std::vector<double> coeffs;
  coeffs.reserve(j["coeffs"].size());
  for (const auto& v : j["coeffs"]) {
    Require(v.is_number(), ErrorCode::kParse, "coeffs must be numbers");
    coeffs.push_back(v.get<double>());
  }
  return Spectrum(n, std::move(coeffs));
}

std::string ProfileToJson(const StructureProfile& profile) {
  Json out;
  out["version"] = kVersion;
  out["n"] = profile.n;
  out["kind"] = profile.kind == ValueKind::kBoolean ? "boolean" : "real";
  out["increasing"] = profile.increasing.increasing;
  out["increasing_witness"] =
      profile.increasing.witness
          ? WitnessToJson(*profile.increasing.witness, false)
          : Json(nullptr);
  out["modularity"] = ModularityName(profile.modularity.classification);
  out["submodular"] = profile.modularity.submodular;
  out["submodular_witness"] =
      profile.modularity.submodular_witness
          ? WitnessToJson(*profile.modularity.submodular_witness, true)
          : Json(nullptr);
  out["supermodular"] = profile.modularity.supermodular;
  out["supermodular_witness"] =
      profile.modularity.supermodular_witness
          ? WitnessToJson(*profile.modularity.supermodular_witness, true)
          : Json(nullptr);
  if (profile.antipodal) {
    out["antipodal"] = profile.antipodal->antipodal;
    out["antipodal_witness"] = profile.antipodal->witness_mask
                                   ? Json(*profile.antipodal->witness_mask)
                                   : Json(nullptr);
  } else {
    out["antipodal"] = "not-applicable";
    out["antipodal_witness"] = nullptr;
  }
  out["influences_l1"] = profile.influences_l1;
  out["influences_l2"] = profile.influences_l2;
  out["total_influence"] = profile.total_influence;
  Json edges = Json::array();
  for (const auto& [i, j] : profile.graph.edges) {
    edges.push_back(Json::array({i, j}));
  }
  out["interaction_graph"] = Json{{"n", profile.graph.n}, {"edges", edges}};
  return out.dump(2);
}

std::string GraphToJson(const InteractionGraph& graph) {
  Json edges = Json::array();
  for (const auto& [i, j] : graph.edges) edges.push_back(Json::array({i, j}));
  Json out;
  out["version"] = kVersion;
  out["n"] = graph.n;
  out["edges"] = edges;
  return out.dump(2);
}

std::string ReportToJson(const InequalityReport& report) {
  return ReportBody(report).dump(2);
}

std::string ChvatalToJson(const ChvatalReport& report) {
  Json out;
  out["version"] = kVersion;
  out["bound_id"] = "chvatal";
  out["conjecture"] = ReportBody(report.conjecture);
  out["harper"] = ReportBody(report.harper);
  return out.dump(2);
}

std::string IdentityToJson(const IdentityReport& report) {
  Json out;
  out["version"] = kVersion;
  out["identity_id"] = report.identity_id;
  out["lhs"] = report.lhs;
  out["rhs"] = report.rhs;
  out["abs_error"] = report.abs_error;
  out["tolerance"] = report.tolerance;
  out["agree"] = report.agree;
  out["quadrature_converged"] = report.quadrature_converged;
  out["evaluations"] = report.evaluations;
  out["params"] = ParamsToJson(report.params);
  Json checks = Json::array();
  for (const KernelCheck& check : report.kernel_checks) {
    checks.push_back(Json{{"param", check.param},
                          {"quadrature", check.quadrature},
                          {"exact", check.exact},
                          {"abs_error", check.abs_error}});
  }
  out["kernel_checks"] = checks;
  return out.dump(2);
}

namespace {

Json PairRecordToJson(const PairRecord& record) {
  Json out;
  out["f_id"] = record.f_id;
  out["g_id"] = record.g_id;
  out["lhs"] = record.lhs;
  out["rhs"] = record.rhs;
  out["slack"] = record.slack;
  out["f_bits_hex"] = record.f_bits_hex;
  out["g_bits_hex"] = record.g_bits_hex;
  return out;
}

}  // namespace

std::string ScanResultToJson(const ScanResult& result) {
  Json out;
  out["version"] = kVersion;
  out["bound_id"] = result.spec.bound_id;
  out["filter"] = result.spec.filter;
  out["n"] = result.spec.n;
  out["sampled"] = result.spec.sample_count > 0;
  out["seed"] = result.spec.seed;
  out["threads"] = result.spec.threads;
  out["params"] = Json{{"theta", result.spec.params.theta},
                       {"d", result.spec.params.d},
                       {"i", result.spec.params.i}};
  out["universe_size"] = result.universe_size;
  out["pairs_total"] = result.pairs_total;
  out["pairs_examined"] = result.pairs_examined;
  out["violations"] = result.violations;
  out["min_slack"] = result.has_min ? PairRecordToJson(result.min_slack)
                                    : Json(nullptr);
  Json exemplars = Json::array();
  for (const PairRecord& record : result.exemplars) {
    exemplars.push_back(PairRecordToJson(record));
  }
  out["exemplars"] = exemplars;
  out["elapsed_seconds"] = result.elapsed_seconds;
  return out.dump(2);
}

std::string ScanResultToCsv(const ScanResult& result) {
  std::ostringstream out;
  out << "n,f_id,g_id,bound_id,lhs,rhs,slack,satisfied\n";
  const auto row = [&](const PairRecord& record, bool satisfied) {
    out << result.spec.n << ',' << record.f_id << ',' << record.g_id << ','
        << result.spec.bound_id << ',' << FormatDouble(record.lhs) << ','
        << FormatDouble(record.rhs) << ',' << FormatDouble(record.slack) << ','
        << (satisfied ? "true" : "false") << '\n';
  };
  if (result.has_min) {
    row(result.min_slack, result.violations == 0);
  }
  for (const PairRecord& record : result.exemplars) row(record, false);
  return out.str();
}

std::string TightnessToCsv(const std::vector<TightnessRow>& rows) {
  std::ostringstream out;
  out << "n,f_id,g_id,cov,cross_influence,ratio_plain,ratio_log,ratio_sqrt\n";
  for (const TightnessRow& row : rows) {
    out << row.n << ',' << row.f_id << ',' << row.g_id << ','
        << FormatDouble(row.cov) << ',' << FormatDouble(row.cross_influence)
        << ',';
    out << (row.plain_defined ? FormatDouble(row.ratio_plain) : "undefined");
    out << ',';
    out << (row.log_defined ? FormatDouble(row.ratio_log) : "undefined");
    out << ',';
    out << (row.sqrt_defined ? FormatDouble(row.ratio_sqrt) : "undefined");
    out << '\n';
  }
  return out.str();
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  Require(in.good(), ErrorCode::kIo, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  Require(!in.bad(), ErrorCode::kIo, "cannot read " + path);
  return buffer.str();
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  Require(out.good(), ErrorCode::kIo, "cannot open " + path + " for writing");
  out << text;
  out.flush();
  Require(out.good(), ErrorCode::kIo, "cannot write " + path);
}

}  // namespace hcube
