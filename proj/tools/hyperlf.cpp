// Copyright 2026 The hyperlf Authors
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

// hyperlf command-line tool.
//
// Exit status: 0 functional equation verified (or command succeeded),
// 1 internal or numeric failure, 2 functional equation not verified or
// inconclusive, 3 a prime is not semistable and needs an override,
// 4 invalid input.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "hyperlf/errors.hpp"
#include "hyperlf/pipeline.hpp"

#ifndef HYPERLF_FIXTURE_DIR
#define HYPERLF_FIXTURE_DIR "tests/fixtures"
#endif

namespace {

using namespace hyperlf;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitNotVerified = 2;
constexpr int kExitNotSemistable = 3;
constexpr int kExitInvalidInput = 4;

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_or_print(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary | std::ios::trunc);
  if (!f || !(f << text)) throw InvalidArgument("cannot write " + out);
}

std::string summary(const RunReport& r) {
  std::ostringstream s;
  s << "genus " << r.genus << ", N = " << r.conductor.get_str() << ", M = " << r.M << ", bad primes";
  for (const auto& e : r.bad_primes) s << ' ' << e.p.get_str();
  s << "; functional equation " << to_string(r.fe.verdict);
  if (r.fe.root_number) s << " with root number " << (*r.fe.root_number > 0 ? "+1" : "-1");
  s << " (residuals +1: " << r.fe.residual_plus << ", -1: " << r.fe.residual_minus << ")";
  return s.str();
}

struct AnalyzeArgs {
  std::string curve;
  std::string out;
  std::uint64_t M = 0;
  long precision = 0;
  double tolerance = 0;
  unsigned threads = 1;
  std::string cache;
  bool no_fe = false;
};

int analyze(const AnalyzeArgs& a) {
  const CurveInput curve = load_curve(a.curve);
  RunOptions o;
  o.threads = a.threads;
  if (a.M) o.M = a.M;
  if (a.precision) o.precision_bits = a.precision;
  if (a.tolerance > 0) o.tolerance = a.tolerance;
  if (!a.cache.empty()) o.cache_path = a.cache;
  o.check_fe = !a.no_fe;
  const RunReport r = run(curve, o);
  write_or_print(report_to_json(r), a.out);
  std::cerr << summary(r) << "\n";
  return a.no_fe ? kExitOk : exit_code(r);
}

struct SearchArgs {
  int genus = 2;
  long bound = 3;
  std::string max_conductor = "1000000";
  std::size_t count = 5;
  std::uint64_t seed = 1;
  std::uint64_t budget = 0;
  std::string out_dir;
  std::string out;
};

int run_search(const SearchArgs& a) {
  SearchOptions o;
  o.genus = a.genus;
  o.coeff_bound = a.bound;
  o.max_conductor = parse_bigint(a.max_conductor);
  o.count = a.count;
  o.seed = a.seed;
  o.max_samples = a.budget;
  const SearchResult res = search(o);
  Json j = Json::object();
  j["format"] = "hyperlf-search";
  j["version"] = 1;
  j["seed"] = a.seed;
  j["samples"] = res.samples;
  j["budget_exhausted"] = res.budget_exhausted;
  Json list = Json::array();
  for (std::size_t i = 0; i < res.curves.size(); ++i) {
    Json e = Json::object();
    e["conductor"] = res.conductors[i].get_str();
    e["curve"] = Json::parse(curve_to_json(res.curves[i]));
    list.push_back(e);
    if (!a.out_dir.empty()) {
      std::filesystem::create_directories(a.out_dir);
      save_curve(res.curves[i], (std::filesystem::path(a.out_dir) / ("curve_" + std::to_string(i + 1) + ".json")).string());
    }
  }
  j["curves"] = list;
  write_or_print(j.dump(2) + "\n", a.out);
  if (res.budget_exhausted) {
    std::cerr << "warning: sampling budget exhausted after " << res.samples << " samples; found " << res.curves.size()
              << " of " << a.count << " curves\n";
  }
  return kExitOk;
}

struct SelftestArgs {
  std::string dir = HYPERLF_FIXTURE_DIR;
  bool full = false;
  unsigned threads = 1;
};

// Bad-prime data against the expected file; appends the differences.
void compare_local(const std::vector<BadPrimeEntry>& got, const BigInt& N, const Json& want,
                   std::vector<std::string>& bad) {
  if (N.get_str() != want["conductor"].get<std::string>()) bad.push_back("conductor " + N.get_str());
  std::size_t seen = 0;
  for (const auto& e : got) {
    const auto key = e.p.get_str();
    if (!want["bad_primes"].contains(key)) {
      bad.push_back("unexpected bad prime " + key);
      continue;
    }
    ++seen;
    const Json& w = want["bad_primes"][key];
    if (e.factor.f_p != w["f_p"].get<int>()) bad.push_back("f_p at " + key);
    if (!w.contains("factor_inv")) continue;
    std::vector<std::string> coeffs;
    for (const auto& c : e.factor.coeffs) coeffs.push_back(c.get_str());
    if (coeffs != w["factor_inv"].get<std::vector<std::string>>()) bad.push_back("factor at " + key);
  }
  if (seen != want["bad_primes"].size()) bad.push_back("missing bad primes");
}

// Compares one fixture against its .expected.json; returns the failures.
std::vector<std::string> check_fixture(const std::filesystem::path& curve_path, const SelftestArgs& a) {
  std::vector<std::string> bad;
  std::filesystem::path expected_path = curve_path;
  expected_path.replace_extension().replace_extension(".expected.json");
  const Json want = Json::parse(read_text(expected_path.string()));
  const std::string text = read_text(curve_path.string());
  const CurveInput curve = curve_from_json(text, curve_path.string());
  if (curve_to_json(curve) != text) bad.push_back("file does not round-trip byte for byte");

  if (!a.full && !want.value("check_fe", false)) {
    const LocalData local = local_data(curve, curve.M);
    compare_local(local.bad_primes, local.conductor, want, bad);
    return bad;
  }
  RunOptions o;
  o.threads = a.threads;
  const RunReport r = run(curve, o);
  compare_local(r.bad_primes, r.conductor, want, bad);
  if (!want["root_number"].is_null()) {
    const int w = want["root_number"].get<int>();
    if (r.fe.verdict != FEVerdict::kVerified || r.fe.root_number != w) {
      bad.push_back("functional equation " + to_string(r.fe.verdict) + ", expected root number " + std::to_string(w));
    }
  }
  return bad;
}

int selftest(const SelftestArgs& a) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(a.dir)) {
    const auto name = entry.path().filename().string();
    if (entry.path().extension() == ".json" && name.find(".expected.") == std::string::npos) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw InvalidArgument("no fixtures in " + a.dir);
  int failed = 0;
  for (const auto& f : files) {
    std::vector<std::string> bad;
    try {
      bad = check_fixture(f, a);
    } catch (const std::exception& e) {
      bad.push_back(e.what());
    }
    std::cout << (bad.empty() ? "PASS " : "FAIL ") << f.filename().string();
    for (const auto& b : bad) std::cout << "; " << b;
    std::cout << "\n";
    failed += !bad.empty();
  }
  std::cout << files.size() - failed << "/" << files.size() << " fixtures passed\n";
  return failed ? kExitFailure : kExitOk;
}

struct FecheckArgs {
  std::string path;
  long precision = 0;
  double tolerance = 0;
  unsigned threads = 1;
  std::string out;
};

int fecheck(const FecheckArgs& a) {
  const LSeriesData ls = load_lseries(a.path);
  FEOptions o;
  if (a.precision) o.precision = a.precision;
  if (a.tolerance > 0) o.tolerance = a.tolerance;
  o.threads = a.threads;
  const FEReport r = verify_fe(ls, o);
  write_or_print(fe_report_to_json(r), a.out);
  return r.verdict == FEVerdict::kVerified ? kExitOk : kExitNotVerified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"L-functions of semistable hyperelliptic curves over Q"};
  app.require_subcommand(1);
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());

  AnalyzeArgs aa;
  auto* an = app.add_subcommand("analyze", "Bad primes, conductor, a_n and the functional-equation check for a curve file");
  an->add_option("curve", aa.curve, "Curve JSON file")->required();
  an->add_option("--out", aa.out, "Write the report here instead of stdout");
  an->add_option("--M", aa.M, "Coefficient cutoff (overrides the curve file)");
  an->add_option("--precision", aa.precision, "Working precision in bits")->check(CLI::Range(64L, 100000L));
  an->add_option("--tolerance", aa.tolerance, "Relative residual tolerance")->check(CLI::Range(1e-300, 0.5));
  an->add_option("--threads", aa.threads, "Worker threads")->check(CLI::Range(1u, 4 * hw));
  an->add_option("--cache", aa.cache, "L-series cache file, reused when it matches and written otherwise");
  an->add_flag("--no-fe", aa.no_fe, "Stop after the coefficients");

  SearchArgs sa;
  auto* se = app.add_subcommand("search", "Random search for semistable curves with small conductor");
  se->add_option("--genus", sa.genus, "Genus")->check(CLI::Range(2, 12));
  se->add_option("--coeff-bound", sa.bound, "Coefficient bound b; coefficients lie in [-b, b]")->check(CLI::Range(1L, 1000L));
  se->add_option("--max-conductor", sa.max_conductor, "Largest conductor kept");
  se->add_option("--count", sa.count, "Number of curves wanted")->check(CLI::Range(1, 100000));
  se->add_option("--seed", sa.seed, "Random seed");
  se->add_option("--budget", sa.budget, "Maximum number of samples (default 2000 per wanted curve)");
  se->add_option("--out-dir", sa.out_dir, "Also write each curve as a curve file in this directory");
  se->add_option("--out", sa.out, "Write the result here instead of stdout");

  SelftestArgs st;
  auto* sf = app.add_subcommand("selftest", "Check the bundled fixture curves");
  sf->add_option("--fixtures", st.dir, "Fixture directory");
  sf->add_flag("--full", st.full, "Run the functional-equation check on every fixture");
  sf->add_option("--threads", st.threads, "Worker threads")->check(CLI::Range(1u, 4 * hw));

  FecheckArgs fa;
  auto* fc = app.add_subcommand("fecheck", "Functional-equation check on a saved L-series cache file");
  fc->add_option("lseries", fa.path, "L-series cache file")->required();
  fc->add_option("--precision", fa.precision, "Working precision in bits")->check(CLI::Range(64L, 100000L));
  fc->add_option("--tolerance", fa.tolerance, "Relative residual tolerance")->check(CLI::Range(1e-300, 0.5));
  fc->add_option("--threads", fa.threads, "Worker threads")->check(CLI::Range(1u, 4 * hw));
  fc->add_option("--out", fa.out, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (*an) return analyze(aa);
    if (*se) return run_search(sa);
    if (*sf) return selftest(st);
    if (*fc) return fecheck(fa);
  } catch (const NotSemistable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotSemistable;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const CurveInvalid& e) {
    std::cerr << "error: invalid curve: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const ConfigurationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const InsufficientM& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
