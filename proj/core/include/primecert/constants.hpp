// Copyright 2026 The primecert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "primecert/interval.hpp"

namespace primecert {

/// One row of the zero-density table: N(sigma, T) <= D(sigma, T) with (A, B).
struct ZeroDensityEntry {
  std::string sigma;
  std::string A_sigma;
  std::string B_sigma;
};

/// Every fixed analytic input of the certification, kept as decimal strings
/// and parsed into intervals at the working precision on use.
struct AnalyticConstants {
  std::string riemann_height_H;
  std::string zero_free_R0;
  std::array<std::string, 3> zero_count_coeffs;  // a1, a2, a3 of R(T)
  std::string zero_count_T0;                     // R(T) valid for T >= this
  std::array<std::string, 3> bpt_constants;      // A0, A1, A2
  std::string omega;
  std::array<std::string, 2> psi_theta_alphas;   // informational only
  std::string zero_sum_T0;
  std::string zero_sum_N0;
  std::string zero_sum_S0;
  std::vector<ZeroDensityEntry> density_entries;  // sorted by sigma
  std::string density_k;
  std::string X0_floor;

  /// Density entry whose sigma equals `sigma` numerically, if any.
  const ZeroDensityEntry* find_density(const std::string& sigma) const;
};

/// Constants parsed into intervals at the precision active at construction.
struct ConstantValues {
  explicit ConstantValues(const AnalyticConstants& c);

  Interval H, R0, a1, a2, a3, count_T0, A0, A1, A2, omega, T0, N0, S0, k, X0_floor;
  Interval log_H;
  Interval two_pi;
};

AnalyticConstants default_constants();

/// Throws InvariantError naming the offending key.
void validate(const AnalyticConstants& c);

/// Applies `key = value` overrides from a file on top of `base`, then validates.
AnalyticConstants load_overrides(const std::filesystem::path& path, const AnalyticConstants& base);
/// Same as load_overrides, reading from an in-memory document.
AnalyticConstants apply_overrides(const std::string& document, const AnalyticConstants& base,
                                  const std::string& source = "<string>");

/// Canonical override-file rendering of every key; round-trips through apply_overrides.
std::string serialize(const AnalyticConstants& c);

/// Hex SHA-256 of serialize(c).
std::string fingerprint(const AnalyticConstants& c);

}  // namespace primecert
