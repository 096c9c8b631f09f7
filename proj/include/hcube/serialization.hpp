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

#ifndef HCUBE_SERIALIZATION_HPP_
#define HCUBE_SERIALIZATION_HPP_

#include <string>

#include "hcube/cube_function.hpp"
#include "hcube/explorer.hpp"
#include "hcube/inequalities.hpp"
#include "hcube/structure.hpp"

namespace hcube {

// Function files: {"n": ..., "kind": "boolean"|"real", "values": [...]}
// or the compact boolean form {"n": ..., "bits_hex": "..."}. The hex string
// packs bit m = f(m) into bytes in increasing mask order (bit j of byte k is
// the value at mask 8k + j), each byte printed as two lowercase hex digits.
std::string FunctionToJson(const CubeFunction& f, bool compact = false);
CubeFunction FunctionFromJson(const std::string& text);

std::string BooleanTableToHex(const CubeFunction& f);
CubeFunction BooleanTableFromHex(int n, const std::string& hex);

// Spectrum files: {"n": ..., "coeffs": [...]} in mask order.
std::string SpectrumToJson(const Spectrum& s);
Spectrum SpectrumFromJson(const std::string& text);

std::string ProfileToJson(const StructureProfile& profile);
std::string GraphToJson(const InteractionGraph& graph);
std::string ReportToJson(const InequalityReport& report);
std::string ChvatalToJson(const ChvatalReport& report);
std::string IdentityToJson(const IdentityReport& report);
std::string ScanResultToJson(const ScanResult& result);

// CSV surfaces. The scan CSV has columns
// n,f_id,g_id,bound_id,lhs,rhs,slack,satisfied; the first row is the
// arg-min pair over examined pairs, subsequent rows list violations (capped).
std::string ScanResultToCsv(const ScanResult& result);
// Columns: n,f_id,g_id,cov,cross_influence,ratio_plain,ratio_log,ratio_sqrt;
// ratios print as "undefined" where the defining expression is not.
std::string TightnessToCsv(const std::vector<TightnessRow>& rows);

std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& text);

}  // namespace hcube

#endif  // HCUBE_SERIALIZATION_HPP_
