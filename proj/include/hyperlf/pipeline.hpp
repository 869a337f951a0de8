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

// End-to-end run: curve file -> bad primes -> conductor -> a_n -> functional
// equation, plus the curve search and the JSON file formats.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperlf/bigint.hpp"
#include "hyperlf/fecheck.hpp"
#include "hyperlf/int_poly.hpp"
#include "hyperlf/lseries.hpp"
#include "hyperlf/reduction.hpp"
#include "hyperlf/zeta.hpp"

namespace hyperlf {

/// A curve file. Hyperelliptic curves y^2 + h y = g get the full bad-prime
/// analysis; superelliptic curves y^m = f are counted at good primes only
/// and need an override at every prime dividing m * lc(f) * disc(f).
struct CurveInput {
  enum class Model { kHyperelliptic, kSuperelliptic };
  Model model = Model::kHyperelliptic;
  IntPoly g;
  IntPoly h;
  unsigned m = 0;
  IntPoly f;
  /// Local data for primes the tool cannot analyze; factor and f_p are
  /// both given, never derived from each other.
  std::map<BigInt, LocalFactorInv> overrides;
  std::optional<std::uint64_t> M;
  std::optional<long> precision_bits;
  std::optional<double> tolerance;

  /// Throws CurveInvalid for a malformed model.
  int genus() const;
  bool operator==(const CurveInput& other) const = default;
};

CurveInput curve_from_json(const std::string& text, const std::string& origin = "<memory>");
std::string curve_to_json(const CurveInput& curve);
CurveInput load_curve(const std::string& path);
void save_curve(const CurveInput& curve, const std::string& path);

struct BadPrimeEntry {
  BigInt p;
  enum class Source { kComputed, kOverride };
  Source source = Source::kComputed;
  /// Present for computed entries.
  std::optional<BadPrimeReport> report;
  LocalFactorInv factor;
};

struct StageTiming {
  std::string stage;
  double ms = 0;
};

struct RunReport {
  CurveInput curve;
  int genus = 0;
  std::vector<BadPrimeEntry> bad_primes;  // ascending p
  BigInt conductor;
  std::uint64_t M = 0;
  std::string M_source;  // "input", "option" or "chosen"
  std::uint64_t checksum = 0;
  bool from_cache = false;
  FEReport fe;
  std::vector<StageTiming> timings;

  /// The stage with the largest share of the run time.
  std::string dominant_stage() const;
};

struct RunOptions {
  unsigned threads = 1;
  std::optional<std::uint64_t> M;  // beats the curve file's M
  std::optional<long> precision_bits;
  std::optional<double> tolerance;
  int target_digits = 12;
  /// Read the a_n from this file when it matches (genus, N, M); otherwise
  /// compute them and write the file.
  std::optional<std::string> cache_path;
  bool check_fe = true;
};

/// Everything up to the L-series. Computed bad factors are truncated to
/// what a cutoff M needs, or complete without one. Throws NotSemistable
/// when a prime needs an override, ConfigurationError for inconsistent
/// overrides.
struct LocalData {
  int genus = 0;
  std::vector<BadPrimeEntry> bad_primes;
  BigInt conductor;
};
LocalData local_data(const CurveInput& curve, std::optional<std::uint64_t> M = std::nullopt);

/// Local factors at all p <= M, bad ones taken from `local`. Good primes
/// are counted on `threads` workers; the result does not depend on it.
std::map<BigInt, LocalFactorInv> all_local_factors(const CurveInput& curve, const LocalData& local, std::uint64_t M,
                                                   unsigned threads);

RunReport run(const CurveInput& curve, const RunOptions& options = {});

std::string report_to_json(const RunReport& report);
std::string fe_report_to_json(const FEReport& report);

/// Exit status for a finished run: 0 verified, 2 otherwise.
int exit_code(const RunReport& report);

struct SearchOptions {
  int genus = 2;
  long coeff_bound = 3;
  BigInt max_conductor{1000000};
  std::size_t count = 1;
  std::uint64_t seed = 1;
  /// Sampling budget; zero means 2000 * count.
  std::uint64_t max_samples = 0;
};

struct SearchResult {
  std::vector<CurveInput> curves;
  std::vector<BigInt> conductors;
  std::uint64_t samples = 0;
  bool budget_exhausted = false;
};

/// Rejection sampling of y^2 + h y = g with coefficients in [-b, b], g
/// monic of degree 2*genus+1, deg h <= genus, h odd somewhere. Keeps curves
/// that are semistable at every bad prime with N <= max_conductor.
SearchResult search(const SearchOptions& options);

}  // namespace hyperlf
