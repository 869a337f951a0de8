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

#include "hyperlf/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "hyperlf/errors.hpp"
#include "json_util.hpp"

namespace hyperlf {

using jsonio::Json;

namespace {

constexpr int kCurveVersion = 1;
constexpr int kReportVersion = 1;

// Runs body(i) for i in [0, n) on up to `threads` workers. Each index is
// claimed once; the first exception is rethrown after all workers stop.
template <class Body>
void parallel_for(std::size_t n, unsigned threads, Body&& body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (;;) {
      if (stop.load()) return;
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        stop = true;
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
}

IntPoly int_poly(const std::vector<BigInt>& c) { return IntPoly(c); }

std::vector<BigInt> int_coeffs(const IntPoly& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

Json fpoly_json(const FPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

Json factor_json(const LocalFactorInv& lf) {
  Json e = Json::object();
  e["factor_inv"] = jsonio::bigint_array(lf.coeffs);
  e["f_p"] = lf.f_p;
  if (lf.truncated_at) e["truncated_at"] = *lf.truncated_at;
  return e;
}

Json curve_json(const CurveInput& c) {
  Json j = Json::object();
  j["version"] = kCurveVersion;
  if (c.model == CurveInput::Model::kSuperelliptic) {
    j["model"] = "superelliptic";
    j["m"] = c.m;
    j["f"] = jsonio::bigint_array(int_coeffs(c.f));
  } else {
    j["g"] = jsonio::bigint_array(int_coeffs(c.g));
    j["h"] = jsonio::bigint_array(int_coeffs(c.h));
  }
  if (!c.overrides.empty()) {
    Json o = Json::object();
    for (const auto& [p, lf] : c.overrides) o[p.get_str()] = factor_json(lf);
    j["overrides"] = o;
  }
  if (c.M) j["M"] = *c.M;
  if (c.precision_bits) j["precision_bits"] = *c.precision_bits;
  if (c.tolerance) j["tolerance"] = *c.tolerance;
  return j;
}

// Prime divisors of the model that the superelliptic path cannot analyze.
std::vector<BigInt> superelliptic_bad_primes(const CurveInput& c) {
  const BigInt n = BigInt(c.m) * c.f.leading() * discriminant(c.f);
  std::vector<BigInt> out;
  for (const auto& [p, e] : factor_integer(n)) out.push_back(p);
  return out;
}

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

Json double_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json fe_json(const FEReport& r) {
  Json fe = Json::object();
  fe["verdict"] = to_string(r.verdict);
  fe["root_number"] = r.root_number ? Json(*r.root_number) : Json(nullptr);
  fe["residual_plus"] = double_or_null(r.residual_plus);
  fe["residual_minus"] = double_or_null(r.residual_minus);
  fe["test_points"] = r.test_points;
  fe["tolerance"] = r.tolerance;
  fe["M"] = r.M;
  fe["precision_bits"] = r.precision;
  fe["tail_ratio"] = double_or_null(r.tail_ratio);
  return fe;
}

}  // namespace

int CurveInput::genus() const {
  if (model == Model::kHyperelliptic) return CurveSpec(g, h).genus();
  if (m < 2) throw CurveInvalid("superelliptic exponent m must be at least 2");
  const long d = f.degree();
  if (d < 1) throw CurveInvalid("superelliptic f must be nonconstant");
  if (std::gcd(static_cast<long>(m), d) != 1) throw CurveInvalid("superelliptic model needs gcd(m, deg f) = 1");
  if (d > 1 && discriminant(f) == 0) throw CurveInvalid("superelliptic f must be squarefree");
  return static_cast<int>((m - 1) * (d - 1) / 2);
}

CurveInput curve_from_json(const std::string& text, const std::string& origin) {
  using namespace jsonio;
  const Json j = parse(text, origin);
  reject_unknown(j, {"version", "model", "g", "h", "m", "f", "overrides", "M", "precision_bits", "tolerance"}, origin,
                 "$");
  if (get_int(require(j, "version", origin, "$"), origin, "$.version") != kCurveVersion) {
    fail(origin, "$.version", "unsupported version (expected 1)");
  }
  CurveInput c;
  std::string model = "hyperelliptic";
  if (j.contains("model")) {
    if (!j["model"].is_string()) fail(origin, "$.model", "expected a string");
    model = j["model"].get<std::string>();
  }
  if (model == "hyperelliptic") {
    for (const char* k : {"m", "f"}) {
      if (j.contains(k)) fail(origin, std::string("$.") + k, "not allowed for a hyperelliptic curve");
    }
    c.g = int_poly(get_bigint_array(require(j, "g", origin, "$"), origin, "$.g"));
    c.h = int_poly(get_bigint_array(require(j, "h", origin, "$"), origin, "$.h"));
  } else if (model == "superelliptic") {
    for (const char* k : {"g", "h"}) {
      if (j.contains(k)) fail(origin, std::string("$.") + k, "not allowed for a superelliptic curve");
    }
    c.model = CurveInput::Model::kSuperelliptic;
    const auto m = get_uint(require(j, "m", origin, "$"), origin, "$.m");
    if (m < 2 || m > 64) fail(origin, "$.m", "exponent must be in [2, 64]");
    c.m = static_cast<unsigned>(m);
    c.f = int_poly(get_bigint_array(require(j, "f", origin, "$"), origin, "$.f"));
  } else {
    fail(origin, "$.model", "unknown model '" + model + "'");
  }
  if (j.contains("overrides")) {
    const Json& o = j["overrides"];
    expect_object(o, origin, "$.overrides");
    for (const auto& [key, e] : o.items()) {
      const std::string path = "$.overrides." + key;
      BigInt p;
      try {
        p = parse_bigint(key);
      } catch (const std::exception&) {
        fail(origin, path, "key is not a decimal prime");
      }
      if (p < 2 || !is_prime(p)) fail(origin, path, "key is not a prime");
      reject_unknown(e, {"factor_inv", "f_p", "truncated_at"}, origin, path);
      LocalFactorInv lf;
      lf.p = p;
      lf.coeffs = get_bigint_array(require(e, "factor_inv", origin, path), origin, path + ".factor_inv");
      if (lf.coeffs.empty() || lf.coeffs[0] != 1) fail(origin, path + ".factor_inv", "constant term must be 1");
      const auto fp = get_int(require(e, "f_p", origin, path), origin, path + ".f_p");
      if (fp < 0 || fp > 10000) fail(origin, path + ".f_p", "exponent out of range");
      lf.f_p = static_cast<int>(fp);
      if (e.contains("truncated_at")) {
        const auto t = get_int(e["truncated_at"], origin, path + ".truncated_at");
        if (t < 0) fail(origin, path + ".truncated_at", "must be non-negative");
        lf.truncated_at = static_cast<int>(t);
      }
      if (!c.overrides.emplace(p, std::move(lf)).second) fail(origin, path, "duplicate prime");
    }
  }
  if (j.contains("M")) {
    c.M = get_uint(j["M"], origin, "$.M");
    if (*c.M < 1) fail(origin, "$.M", "must be positive");
  }
  if (j.contains("precision_bits")) {
    c.precision_bits = get_int(j["precision_bits"], origin, "$.precision_bits");
    if (*c.precision_bits < 64 || *c.precision_bits > 100000) fail(origin, "$.precision_bits", "must be in [64, 100000]");
  }
  if (j.contains("tolerance")) {
    c.tolerance = get_double(j["tolerance"], origin, "$.tolerance");
    if (!(*c.tolerance > 0 && *c.tolerance < 1)) fail(origin, "$.tolerance", "must be in (0, 1)");
  }
  c.genus();  // CurveInvalid for a malformed model
  return c;
}

std::string curve_to_json(const CurveInput& curve) { return curve_json(curve).dump(2) + "\n"; }

CurveInput load_curve(const std::string& path) { return curve_from_json(jsonio::read_file(path), path); }

void save_curve(const CurveInput& curve, const std::string& path) { jsonio::write_file(path, curve_to_json(curve)); }

LocalData local_data(const CurveInput& curve, std::optional<std::uint64_t> M) {
  LocalData out;
  out.genus = curve.genus();
  std::vector<BigInt> primes;
  std::vector<BadPrimeReport> reports;
  std::map<BigInt, LocalFactorInv> used_overrides;

  if (curve.model == CurveInput::Model::kSuperelliptic) {
    primes = superelliptic_bad_primes(curve);
    for (const auto& p : primes) {
      auto it = curve.overrides.find(p);
      if (it == curve.overrides.end()) {
        throw NotSemistable(p.get_str(), "no local analysis for y^m = f at primes dividing m*lc(f)*disc(f)");
      }
      used_overrides.insert(*it);
    }
  } else {
    const CurveSpec spec(curve.g, curve.h);
    primes = bad_prime_candidates(spec);
    for (const auto& p : primes) {
      const auto verdict = p == 2 ? check_semistable_p2(spec) : check_semistable_podd(spec, p);
      auto it = curve.overrides.find(p);
      if (verdict.semistable) {
        if (it != curve.overrides.end()) {
          throw ConfigurationError("override for p=" + p.get_str() +
                                   ", where the model is semistable and the local data is computed");
        }
        reports.push_back(p == 2 ? analyze_p2(spec) : analyze_podd(spec, p));
      } else {
        if (it == curve.overrides.end()) throw NotSemistable(p.get_str(), verdict.criterion);
        used_overrides.insert(*it);
      }
    }
  }
  for (const auto& [p, lf] : curve.overrides) {
    if (!used_overrides.count(p)) throw ConfigurationError("override for p=" + p.get_str() + ", which is not a bad prime");
  }
  out.conductor = conductor(primes, reports, used_overrides);

  std::size_t next_report = 0;
  for (const auto& p : primes) {
    BadPrimeEntry e;
    e.p = p;
    if (auto it = used_overrides.find(p); it != used_overrides.end()) {
      e.source = BadPrimeEntry::Source::kOverride;
      e.factor = it->second;
    } else {
      e.report = reports.at(next_report++);
      e.factor = bad_local_factor(*e.report, M);
    }
    out.bad_primes.push_back(std::move(e));
  }
  return out;
}

std::map<BigInt, LocalFactorInv> all_local_factors(const CurveInput& curve, const LocalData& local, std::uint64_t M,
                                                   unsigned threads) {
  std::map<BigInt, LocalFactorInv> out;
  std::set<BigInt> bad;
  for (const auto& e : local.bad_primes) {
    bad.insert(e.p);
    out.emplace(e.p, e.factor);
  }
  std::vector<std::uint64_t> good;
  for (auto p : primes_up_to(M)) {
    if (!bad.count(from_u64(p))) good.push_back(p);
  }
  std::vector<LocalFactorInv> results(good.size());
  std::optional<CurveSpec> spec;
  if (curve.model == CurveInput::Model::kHyperelliptic) spec.emplace(curve.g, curve.h);
  parallel_for(good.size(), threads, [&](std::size_t i) {
    const BigInt P = from_u64(good[i]);
    if (spec) {
      results[i] = good_local_factor(*spec, P, M);
    } else {
      const auto F = PrimeField::make(P);
      results[i] = good_local_factor(CurveModel::superelliptic(curve.m, reduce_mod(curve.f, F)), M);
    }
  });
  for (std::size_t i = 0; i < good.size(); ++i) out.emplace(from_u64(good[i]), std::move(results[i]));
  return out;
}

std::string RunReport::dominant_stage() const {
  const StageTiming* best = nullptr;
  for (const auto& t : timings) {
    if (!best || t.ms > best->ms) best = &t;
  }
  return best ? best->stage : "";
}

RunReport run(const CurveInput& curve, const RunOptions& options) {
  RunReport rep;
  rep.curve = curve;
  auto t0 = Clock::now();
  rep.genus = curve.genus();
  rep.timings.push_back({"validate", ms_since(t0)});

  t0 = Clock::now();
  const std::optional<std::uint64_t> given = options.M ? options.M : curve.M;
  // Without a given cutoff the conductor comes first; degree-0 factors are free.
  LocalData local = local_data(curve, given.value_or(1));
  if (options.M) {
    rep.M = *options.M;
    rep.M_source = "option";
  } else if (curve.M) {
    rep.M = *curve.M;
    rep.M_source = "input";
  } else {
    rep.M = choose_M(local.conductor, rep.genus, options.target_digits);
    rep.M_source = "chosen";
    for (auto& e : local.bad_primes) {
      if (e.report) e.factor = bad_local_factor(*e.report, rep.M);
    }
  }
  rep.bad_primes = local.bad_primes;
  rep.conductor = local.conductor;
  rep.timings.push_back({"bad_primes", ms_since(t0)});

  LSeriesData ls;
  t0 = Clock::now();
  if (options.cache_path && std::filesystem::exists(*options.cache_path)) {
    ls = load_lseries(*options.cache_path);
    if (ls.genus != rep.genus || ls.conductor != rep.conductor || ls.M != rep.M) {
      throw ConfigurationError("cache " + *options.cache_path + " was built for a different curve or cutoff");
    }
    for (const auto& e : rep.bad_primes) {
      auto it = ls.factors.find(e.p);
      if (it == ls.factors.end() || it->second.coeffs != e.factor.coeffs || it->second.f_p != e.factor.f_p) {
        throw ConfigurationError("cache " + *options.cache_path + " disagrees at bad prime p=" + e.p.get_str());
      }
    }
    rep.from_cache = true;
    rep.timings.push_back({"cache_load", ms_since(t0)});
  } else {
    ls.genus = rep.genus;
    ls.conductor = rep.conductor;
    ls.M = rep.M;
    ls.factors = all_local_factors(curve, local, rep.M, options.threads);
    rep.timings.push_back({"counting", ms_since(t0)});
    t0 = Clock::now();
    ls.a = dirichlet_coefficients(ls.factors, rep.M);
    rep.timings.push_back({"coefficients", ms_since(t0)});
    if (options.cache_path) save_lseries(ls, *options.cache_path);
  }
  rep.checksum = coefficient_checksum(ls.a);

  if (options.check_fe) {
    t0 = Clock::now();
    FEOptions fo;
    fo.tolerance = options.tolerance.value_or(curve.tolerance.value_or(fo.tolerance));
    fo.precision = options.precision_bits.value_or(curve.precision_bits.value_or(fo.precision));
    fo.threads = options.threads;
    rep.fe = verify_fe(ls, fo);
    rep.timings.push_back({"fe_check", ms_since(t0)});
  }
  return rep;
}

std::string report_to_json(const RunReport& r) {
  Json j = Json::object();
  j["format"] = "hyperlf-report";
  j["version"] = kReportVersion;
  j["curve"] = curve_json(r.curve);
  j["genus"] = r.genus;
  Json bad = Json::array();
  for (const auto& e : r.bad_primes) {
    Json b = Json::object();
    b["p"] = e.p.get_str();
    b["source"] = e.source == BadPrimeEntry::Source::kOverride ? "override" : "computed";
    if (e.report) {
      b["singular_locus"] = fpoly_json(e.report->r);
      Json pts = Json::array();
      for (const auto& pt : e.report->points) {
        Json q = Json::object();
        q["r"] = fpoly_json(pt.r);
        q["degree"] = pt.degree;
        q["epsilon"] = pt.epsilon;
        pts.push_back(q);
      }
      b["points"] = pts;
      b["normalization_genus"] = e.report->genus0;
    }
    b["factor_inv"] = jsonio::bigint_array(e.factor.coeffs);
    if (e.factor.truncated_at) b["truncated_at"] = *e.factor.truncated_at;
    b["f_p"] = e.factor.f_p;
    bad.push_back(b);
  }
  j["bad_primes"] = bad;
  j["conductor"] = r.conductor.get_str();
  j["M"] = r.M;
  j["M_source"] = r.M_source;
  j["coefficient_checksum"] = hex64(r.checksum);
  j["lseries_source"] = r.from_cache ? "cache" : "computed";
  j["functional_equation"] = fe_json(r.fe);
  Json t = Json::object();
  for (const auto& s : r.timings) t[s.stage] = s.ms;
  j["timings_ms"] = t;
  j["dominant_stage"] = r.dominant_stage();
  return j.dump(2) + "\n";
}

std::string fe_report_to_json(const FEReport& report) { return fe_json(report).dump(2) + "\n"; }

int exit_code(const RunReport& report) { return report.fe.verdict == FEVerdict::kVerified ? 0 : 2; }

SearchResult search(const SearchOptions& o) {
  if (o.genus < 2) throw InvalidArgument("search needs genus >= 2");
  if (o.coeff_bound < 1) throw InvalidArgument("coefficient bound must be positive");
  SearchResult out;
  const std::uint64_t budget = o.max_samples ? o.max_samples : 2000 * std::max<std::uint64_t>(o.count, 1);
  std::mt19937_64 rng(o.seed);
  const std::uint64_t width = 2 * static_cast<std::uint64_t>(o.coeff_bound) + 1;
  auto coeff = [&] { return BigInt(static_cast<long>(rng() % width) - o.coeff_bound); };
  std::set<std::pair<std::string, std::string>> seen;

  while (out.curves.size() < o.count) {
    if (out.samples >= budget) {
      out.budget_exhausted = true;
      break;
    }
    ++out.samples;
    std::vector<BigInt> g(2 * o.genus + 2), h(o.genus + 1);
    for (auto& c : g) c = coeff();
    g.back() = 1;
    bool h_odd = false;
    for (auto& c : h) {
      c = coeff();
      h_odd = h_odd || c % 2 != 0;
    }
    if (!h_odd) continue;
    CurveInput cand;
    cand.g = IntPoly(g);
    cand.h = IntPoly(h);
    if (!seen.emplace(cand.g.to_string(), cand.h.to_string()).second) continue;
    try {
      const CurveSpec spec(cand.g, cand.h);
      // Each bad prime contributes at least p^1.
      BigInt floor = 1;
      for (const auto& p : bad_prime_candidates(spec)) floor *= p;
      if (floor > o.max_conductor) continue;
      const LocalData local = local_data(cand, 1);
      if (local.conductor > o.max_conductor) continue;
      out.curves.push_back(cand);
      out.conductors.push_back(local.conductor);
    } catch (const CurveInvalid&) {
    } catch (const NotSemistable&) {
    }
  }
  return out;
}

}  // namespace hyperlf
