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

// Command-line front end. Links only against the C interface in hcube.h.
//
// Exit codes: 0 when every checked statement is satisfied or not
// applicable, 2 when a violation (or identity disagreement) was found,
// 1 on usage or runtime errors.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hcube.h"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolation = 2;

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { hcube_string_free(ptr); }
  std::string str() const { return ptr == nullptr ? std::string() : ptr; }
};

struct OwnedFunction {
  hcube_function* ptr = nullptr;
  OwnedFunction() = default;
  OwnedFunction(OwnedFunction&& other) noexcept : ptr(other.ptr) {
    other.ptr = nullptr;
  }
  OwnedFunction& operator=(OwnedFunction&& other) noexcept {
    std::swap(ptr, other.ptr);
    return *this;
  }
  OwnedFunction(const OwnedFunction&) = delete;
  OwnedFunction& operator=(const OwnedFunction&) = delete;
  ~OwnedFunction() { hcube_function_free(ptr); }
};

int Fail(const std::string& context) {
  std::cerr << "error: " << context << ": " << hcube_last_error() << "\n";
  return kExitError;
}

int FailMessage(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitError;
}

bool ReadFile(const std::string& path, std::string* out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  *out = buffer.str();
  return true;
}

bool WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out << text;
  return bool(out);
}

// Prints to stdout and optionally persists to --out / --csv style paths.
int Emit(const std::string& text, const std::string& path) {
  std::cout << text;
  if (!text.empty() && text.back() != '\n') std::cout << "\n";
  if (!path.empty() && !WriteFile(path, text)) {
    return FailMessage("cannot write " + path);
  }
  return kExitOk;
}

bool LoadFunction(const std::string& path, OwnedFunction* out, int* status) {
  std::string text;
  if (!ReadFile(path, &text)) {
    FailMessage("cannot read " + path);
    *status = kExitError;
    return false;
  }
  if (hcube_function_from_json(text.c_str(), &out->ptr) != HCUBE_OK) {
    Fail(path);
    *status = kExitError;
    return false;
  }
  return true;
}

std::string FormatDouble(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

struct GenOptions {
  std::string family;
  int n = 0;
  std::vector<int> coords;
  int k = 0;
  int width = 0;
  int count = 0;
  std::uint64_t seed = 1;
  int universe = 0;
  int terms = 0;
  std::string of_path;
  std::string out_path;
  bool compact = false;
};

int RunGen(const GenOptions& opt) {
  OwnedFunction f;
  if (opt.family == "dual") {
    if (opt.of_path.empty()) {
      return FailMessage("--family dual requires --of <function file>");
    }
    OwnedFunction base;
    int status = 0;
    if (!LoadFunction(opt.of_path, &base, &status)) return status;
    if (hcube_function_dual(base.ptr, &f.ptr) != HCUBE_OK) {
      return Fail("dual");
    }
  } else {
    ordered_json spec;
    spec["name"] = opt.family;
    spec["n"] = opt.n;
    if (!opt.coords.empty()) spec["coords"] = opt.coords;
    spec["k"] = opt.k;
    spec["width"] = opt.width;
    spec["count"] = opt.count;
    spec["seed"] = opt.seed;
    spec["universe"] = opt.universe;
    spec["terms"] = opt.terms;
    if (hcube_function_generate(spec.dump().c_str(), &f.ptr) != HCUBE_OK) {
      return Fail("gen --family " + opt.family);
    }
  }
  OwnedString json;
  if (hcube_function_to_json(f.ptr, opt.compact ? 1 : 0, &json.ptr) !=
      HCUBE_OK) {
    return Fail("serialize");
  }
  return Emit(json.str(), opt.out_path);
}

int RunAnalyze(const std::string& f_path, const std::string& out_path) {
  OwnedFunction f;
  int status = 0;
  if (!LoadFunction(f_path, &f, &status)) return status;
  OwnedString json;
  if (hcube_profile_json(f.ptr, &json.ptr) != HCUBE_OK) {
    return Fail("analyze " + f_path);
  }
  return Emit(json.str(), out_path);
}

int RunFwht(const std::string& f_path, const std::string& spectrum_path,
            bool inverse, const std::string& out_path) {
  OwnedString json;
  if (inverse) {
    if (spectrum_path.empty()) {
      return FailMessage("--inverse requires --spectrum <spectrum file>");
    }
    std::string text;
    if (!ReadFile(spectrum_path, &text)) {
      return FailMessage("cannot read " + spectrum_path);
    }
    if (hcube_inverse_transform_json(text.c_str(), &json.ptr) != HCUBE_OK) {
      return Fail(spectrum_path);
    }
  } else {
    if (f_path.empty()) return FailMessage("fwht requires --f <function file>");
    std::string text;
    if (!ReadFile(f_path, &text)) {
      return FailMessage("cannot read " + f_path);
    }
    if (hcube_transform_json(text.c_str(), &json.ptr) != HCUBE_OK) {
      return Fail(f_path);
    }
  }
  return Emit(json.str(), out_path);
}

struct VerifyOptions {
  std::string bound;
  std::vector<std::string> f_paths;
  std::string g_path;
  double theta = 0.5;
  int d = 2;
  int i = 1;
  double p = 0.5;
  double q = 0.5;
  double t = 1.0;
  std::string out_path;
};

int RunVerify(const VerifyOptions& opt) {
  if (opt.f_paths.empty()) return FailMessage("verify requires --f");
  int status = 0;

  if (opt.bound == "average-dream") {
    std::vector<OwnedFunction> family(opt.f_paths.size());
    std::vector<const hcube_function*> raw;
    for (std::size_t k = 0; k < opt.f_paths.size(); ++k) {
      if (!LoadFunction(opt.f_paths[k], &family[k], &status)) return status;
      raw.push_back(family[k].ptr);
    }
    OwnedString json;
    int verdict = 0;
    if (hcube_verify_family_json(raw.data(), raw.size(), &json.ptr,
                                 &verdict) != HCUBE_OK) {
      return Fail("verify --bound average-dream");
    }
    const int emit = Emit(json.str(), opt.out_path);
    if (emit != kExitOk) return emit;
    return verdict == HCUBE_VERDICT_VIOLATED ? kExitViolation : kExitOk;
  }

  OwnedFunction f;
  if (!LoadFunction(opt.f_paths.front(), &f, &status)) return status;
  OwnedFunction g;
  if (!opt.g_path.empty() && !LoadFunction(opt.g_path, &g, &status)) {
    return status;
  }

  OwnedString json;
  int verdict = 0;
  if (opt.bound == "chvatal") {
    if (hcube_chvatal_json(f.ptr, g.ptr == nullptr ? f.ptr : g.ptr, &json.ptr,
                           &verdict) != HCUBE_OK) {
      return Fail("verify --bound chvatal");
    }
  } else {
    ordered_json params;
    params["theta"] = opt.theta;
    params["d"] = opt.d;
    params["i"] = opt.i;
    params["p"] = opt.p;
    params["q"] = opt.q;
    params["t"] = opt.t;
    if (hcube_verify_json(opt.bound.c_str(), f.ptr, g.ptr,
                          params.dump().c_str(), &json.ptr,
                          &verdict) != HCUBE_OK) {
      return Fail("verify --bound " + opt.bound);
    }
  }
  const int emit = Emit(json.str(), opt.out_path);
  if (emit != kExitOk) return emit;
  return verdict == HCUBE_VERDICT_VIOLATED ? kExitViolation : kExitOk;
}

struct IdentityOptions {
  std::string id;
  std::string f_path;
  std::string g_path;
  int d = 2;
  int i = 1;
  int j = 2;
  double s = 0.25;
  double t = 1.0;
  double rel_tol = 1e-9;
  std::string out_path;
};

int RunIdentity(const IdentityOptions& opt) {
  OwnedFunction f;
  int status = 0;
  if (!LoadFunction(opt.f_path, &f, &status)) return status;
  OwnedFunction g;
  if (!opt.g_path.empty() && !LoadFunction(opt.g_path, &g, &status)) {
    return status;
  }
  ordered_json params;
  params["d"] = opt.d;
  params["i"] = opt.i;
  params["j"] = opt.j;
  params["s"] = opt.s;
  params["t"] = opt.t;
  params["rel_tol"] = opt.rel_tol;
  OwnedString json;
  int agree = 0;
  if (hcube_identity_json(opt.id.c_str(), f.ptr, g.ptr, params.dump().c_str(),
                          &json.ptr, &agree) != HCUBE_OK) {
    return Fail("identity --id " + opt.id);
  }
  const int emit = Emit(json.str(), opt.out_path);
  if (emit != kExitOk) return emit;
  return agree == 1 ? kExitOk : kExitViolation;
}

struct ScanOptions {
  int n = 2;
  std::string filter = "increasing";
  std::string bound = "dream";
  double theta = 0.5;
  int d = 2;
  int i = 1;
  int threads = 1;
  bool allow_large = false;
  int samples = 0;
  std::uint64_t seed = 1;
  int exemplars = 100;
  std::string tightness;
  std::vector<int> n_list;
  int width = 0;
  std::string out_path;
  std::string csv_path;
};

int RunScan(const ScanOptions& opt) {
  if (!opt.tightness.empty()) {
    if (opt.n_list.empty()) {
      return FailMessage("--tightness requires --n-list");
    }
    OwnedString csv;
    if (hcube_tightness_csv(opt.tightness.c_str(), opt.n_list.data(),
                            opt.n_list.size(), opt.width,
                            &csv.ptr) != HCUBE_OK) {
      return Fail("scan --tightness " + opt.tightness);
    }
    return Emit(csv.str(), opt.csv_path.empty() ? opt.out_path : opt.csv_path);
  }

  ordered_json spec;
  spec["n"] = opt.n;
  spec["filter"] = opt.filter;
  spec["bound"] = opt.bound;
  spec["params"] = ordered_json{{"theta", opt.theta}, {"d", opt.d}, {"i", opt.i}};
  spec["threads"] = opt.threads;
  spec["allow_large"] = opt.allow_large;
  spec["sample_count"] = opt.samples;
  spec["seed"] = opt.seed;
  spec["exemplar_cap"] = opt.exemplars;

  OwnedString json;
  OwnedString csv;
  std::uint64_t violations = 0;
  if (hcube_scan_json(spec.dump().c_str(), &json.ptr, &csv.ptr, &violations) !=
      HCUBE_OK) {
    return Fail("scan --bound " + opt.bound);
  }
  const int emit = Emit(json.str(), opt.out_path);
  if (emit != kExitOk) return emit;
  if (!opt.csv_path.empty() && !WriteFile(opt.csv_path, csv.str())) {
    return FailMessage("cannot write " + opt.csv_path);
  }
  return violations > 0 ? kExitViolation : kExitOk;
}

int RunEnumerate(int n, bool count_only, const std::string& method,
                 int threads, const std::string& out_path) {
  if (count_only) {
    ordered_json doc;
    doc["version"] = hcube_version();
    doc["n"] = n;
    std::uint64_t recursive = 0;
    std::uint64_t filtered = 0;
    const bool want_recursive = method == "recursive" || method == "both";
    const bool want_filter = method == "filter" || method == "both";
    if (!want_recursive && !want_filter) {
      return FailMessage("--method must be recursive, filter, or both");
    }
    if (want_recursive) {
      if (hcube_monotone_count(n, 0, threads, &recursive) != HCUBE_OK) {
        return Fail("enumerate --method recursive");
      }
      doc["recursive"] = recursive;
    }
    if (want_filter) {
      if (hcube_monotone_count(n, 1, threads, &filtered) != HCUBE_OK) {
        return Fail("enumerate --method filter");
      }
      doc["filter"] = filtered;
    }
    if (want_recursive && want_filter) {
      doc["agree"] = recursive == filtered;
      if (recursive != filtered) {
        Emit(doc.dump(2), out_path);
        return FailMessage("enumeration methods disagree");
      }
    }
    return Emit(doc.dump(2), out_path);
  }
  OwnedString json;
  if (hcube_enumerate_monotone_json(n, &json.ptr) != HCUBE_OK) {
    return Fail("enumerate");
  }
  return Emit(json.str(), out_path);
}

int RunKernel(std::vector<double> log_r, const std::vector<double>& r_values,
              const std::string& out_path) {
  for (double r : r_values) {
    if (r < 1.0) return FailMessage("--r values must be >= 1");
    log_r.push_back(std::log(r));
  }
  if (log_r.empty()) log_r = {0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0};

  std::string csv = "log_r,r,integral,bound,slack,satisfied\n";
  bool violated = false;
  for (double k : log_r) {
    const double r = std::exp(k);
    OwnedString json;
    int verdict = 0;
    if (hcube_kernel_bound_json(r, &json.ptr, &verdict) != HCUBE_OK) {
      return Fail("kernel at log R = " + FormatDouble(k));
    }
    const ordered_json report = ordered_json::parse(json.str());
    csv += FormatDouble(k) + "," + FormatDouble(r) + "," +
           FormatDouble(report.at("lhs").get<double>()) + "," +
           FormatDouble(report.at("rhs").get<double>()) + "," +
           FormatDouble(report.at("slack").get<double>()) + "," +
           (verdict == HCUBE_VERDICT_VIOLATED ? "false" : "true") + "\n";
    if (verdict == HCUBE_VERDICT_VIOLATED) violated = true;
  }
  const int emit = Emit(csv, out_path);
  if (emit != kExitOk) return emit;
  return violated ? kExitViolation : kExitOk;
}

int EnvThreads() {
  const char* env = std::getenv("HCUBE_THREADS");
  if (env == nullptr) return 1;
  const int value = std::atoi(env);
  return value >= 1 ? value : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Correlation inequalities on the boolean hypercube"};
  app.require_subcommand(1);

  if (const char* env = std::getenv("HCUBE_MAX_N")) {
    if (hcube_set_max_dimension(std::atoi(env)) != HCUBE_OK) {
      return Fail("HCUBE_MAX_N");
    }
  }
  const int default_threads = EnvThreads();

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a named family member");
  gen_cmd->add_option("--family", gen.family, "Family name (or dual)")
      ->required();
  gen_cmd->add_option("--n", gen.n, "Cube dimension");
  gen_cmd->add_option("--coords", gen.coords, "Support coordinates (1-based)")
      ->delimiter(',');
  gen_cmd->add_option("--k", gen.k, "Threshold level");
  gen_cmd->add_option("--width", gen.width, "Tribe width");
  gen_cmd->add_option("--count", gen.count, "Tribe count");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--universe", gen.universe, "Coverage universe size");
  gen_cmd->add_option("--terms", gen.terms, "Supermodular atom count");
  gen_cmd->add_option("--of", gen.of_path, "Input function for --family dual");
  gen_cmd->add_option("--out", gen.out_path, "Output path");
  gen_cmd->add_flag("--compact", gen.compact, "Write the bits_hex form");

  std::string analyze_f, analyze_out;
  auto* analyze_cmd =
      app.add_subcommand("analyze", "Structural profile of a function");
  analyze_cmd->add_option("--f", analyze_f, "Function file")->required();
  analyze_cmd->add_option("--out", analyze_out, "Output path");

  std::string fwht_f, fwht_spectrum, fwht_out;
  bool fwht_inverse = false;
  auto* fwht_cmd =
      app.add_subcommand("fwht", "Fourier transform of a function table");
  fwht_cmd->add_option("--f", fwht_f, "Function file (forward)");
  fwht_cmd->add_option("--spectrum", fwht_spectrum, "Spectrum file (inverse)");
  fwht_cmd->add_flag("--inverse", fwht_inverse, "Spectrum to table");
  fwht_cmd->add_option("--out", fwht_out, "Output path");

  VerifyOptions verify;
  auto* verify_cmd =
      app.add_subcommand("verify", "Evaluate an inequality on given functions");
  verify_cmd->add_option("--bound", verify.bound, "Bound id")->required();
  verify_cmd->add_option("--f", verify.f_paths, "Function file (repeatable)")
      ->required();
  verify_cmd->add_option("--g", verify.g_path, "Second function file");
  verify_cmd->add_option("--theta", verify.theta, "Quasi-norm parameter");
  verify_cmd->add_option("--d", verify.d, "Level");
  verify_cmd->add_option("--i", verify.i, "Distinguished coordinate");
  verify_cmd->add_option("--p", verify.p, "Left exponent");
  verify_cmd->add_option("--q", verify.q, "Right exponent");
  verify_cmd->add_option("--t", verify.t, "Noise time");
  verify_cmd->add_option("--out", verify.out_path, "Output path");

  IdentityOptions identity;
  auto* identity_cmd =
      app.add_subcommand("identity", "Check an integral or algebraic identity");
  identity_cmd->add_option("--id", identity.id, "Identity id")->required();
  identity_cmd->add_option("--f", identity.f_path, "Function file")->required();
  identity_cmd->add_option("--g", identity.g_path, "Second function file");
  identity_cmd->add_option("--d", identity.d, "Level");
  identity_cmd->add_option("--i", identity.i, "First coordinate");
  identity_cmd->add_option("--j", identity.j, "Second coordinate");
  identity_cmd->add_option("--s", identity.s, "Smoothing time");
  identity_cmd->add_option("--t", identity.t, "Noise time");
  identity_cmd->add_option("--rel-tol", identity.rel_tol,
                           "Quadrature relative tolerance");
  identity_cmd->add_option("--out", identity.out_path, "Output path");

  ScanOptions scan;
  scan.threads = default_threads;
  auto* scan_cmd = app.add_subcommand(
      "scan", "Scan monotone pairs for violations and minimal slack");
  scan_cmd->add_option("--n", scan.n, "Cube dimension");
  scan_cmd->add_option("--filter", scan.filter, "Pair filter");
  scan_cmd->add_option("--bound", scan.bound, "Bound id");
  scan_cmd->add_option("--theta", scan.theta, "Quasi-norm parameter");
  scan_cmd->add_option("--d", scan.d, "Level");
  scan_cmd->add_option("--i", scan.i, "Distinguished coordinate");
  scan_cmd->add_option("--threads", scan.threads, "Worker threads");
  scan_cmd->add_flag("--allow-large", scan.allow_large,
                     "Enable the n = 5 exhaustive scan");
  scan_cmd->add_option("--samples", scan.samples,
                       "Sample this many random monotone functions");
  scan_cmd->add_option("--seed", scan.seed, "Random seed");
  scan_cmd->add_option("--exemplars", scan.exemplars,
                       "Violation exemplar cap");
  scan_cmd->add_option("--tightness", scan.tightness,
                       "Ratio table mode: majority, dictator, tribes-dual");
  scan_cmd->add_option("--n-list", scan.n_list, "Dimensions for --tightness")
      ->delimiter(',');
  scan_cmd->add_option("--width", scan.width, "Tribe width for tribes-dual");
  scan_cmd->add_option("--out", scan.out_path, "Report output path");
  scan_cmd->add_option("--csv", scan.csv_path, "CSV output path");

  int enum_n = 0;
  bool enum_count_only = false;
  std::string enum_method = "both";
  int enum_threads = default_threads;
  std::string enum_out;
  auto* enum_cmd =
      app.add_subcommand("enumerate", "List or count monotone functions");
  enum_cmd->add_option("--n", enum_n, "Cube dimension")->required();
  enum_cmd->add_flag("--count-only", enum_count_only, "Counts only");
  enum_cmd->add_option("--method", enum_method,
                       "recursive, filter, or both (count-only)");
  enum_cmd->add_option("--threads", enum_threads, "Worker threads");
  enum_cmd->add_option("--out", enum_out, "Output path");

  std::vector<double> kernel_log_r;
  std::vector<double> kernel_r;
  std::string kernel_out;
  auto* kernel_cmd = app.add_subcommand(
      "kernel", "Smoothing-kernel integral I(R) against 9/(1+log R)");
  kernel_cmd->add_option("--log-r", kernel_log_r, "log R grid")
      ->delimiter(',');
  kernel_cmd->add_option("--r", kernel_r, "R grid (values >= 1)")
      ->delimiter(',');
  kernel_cmd->add_option("--out", kernel_out, "Output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (gen_cmd->parsed()) return RunGen(gen);
    if (analyze_cmd->parsed()) return RunAnalyze(analyze_f, analyze_out);
    if (fwht_cmd->parsed()) {
      return RunFwht(fwht_f, fwht_spectrum, fwht_inverse, fwht_out);
    }
    if (verify_cmd->parsed()) return RunVerify(verify);
    if (identity_cmd->parsed()) return RunIdentity(identity);
    if (scan_cmd->parsed()) return RunScan(scan);
    if (enum_cmd->parsed()) {
      return RunEnumerate(enum_n, enum_count_only, enum_method, enum_threads,
                          enum_out);
    }
    if (kernel_cmd->parsed()) {
      return RunKernel(kernel_log_r, kernel_r, kernel_out);
    }
  } catch (const std::exception& e) {
    return FailMessage(e.what());
  }
  return FailMessage("no command given");
}
