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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "primecert/certifier.hpp"
#include "primecert/errors.hpp"

namespace primecert {

struct Box {
  double lo = 0;
  double hi = 0;
};

/// Differential-evolution search over (log10 delta, a, log10 T1) nested inside
/// an outer schedule over the integers (m, n).
struct SearchConfig {
  int m_min = 2;
  int m_max = 4;
  /// Ascending; empty selects default_n_schedule().
  std::vector<int> n_schedule;
  int population = 30;
  double weight = 0.8;
  double crossover = 0.9;
  int generations = 200;
  std::uint64_t seed = 0;
  /// Unset derives [log10(omega X0^-1/2) - 1, -6] from x0.
  std::optional<Box> log10_delta;
  Box a{0.0, 0.5};
  Box log10_T1{8.019357, 12.477146};
  /// Consecutive n values without a better order of Delta before moving on.
  int stall_limit = 8;
  std::string sigma0 = "0.7804";
  /// 0 uses the hardware concurrency.
  unsigned threads = 0;
};

/// Odd n from 1 to 15, then growing by about 15% per step up to 1201.
std::vector<int> default_n_schedule();

/// Throws InvariantError naming the offending field.
void validate(const SearchConfig& config, const AnalyticConstants& constants);

struct TracePoint {
  int generation = 0;  // counted across all (m, n) stages
  int m = 0;
  int n = 0;
  std::string best_delta;   // best certified Delta so far, "0" before the first
  std::string best_margin;  // margin of that certificate, or of the least infeasible point
};

struct SearchResult {
  Certificate best;
  std::vector<TracePoint> trace;
  std::uint64_t evaluations = 0;
  double wall_seconds = 0;
};

/// Raised when the budget ends without a certified point.
class InfeasibleSearch : public DomainError {
 public:
  InfeasibleSearch(const std::string& what, std::optional<Certificate> least_infeasible, std::uint64_t evaluations)
      : DomainError(what), least_infeasible_(std::move(least_infeasible)), evaluations_(evaluations) {}
  const std::optional<Certificate>& least_infeasible() const { return least_infeasible_; }
  std::uint64_t evaluations() const { return evaluations_; }

 private:
  std::optional<Certificate> least_infeasible_;
  std::uint64_t evaluations_;
};

/// Largest certified Delta found at x0.  Deterministic for a fixed seed and
/// config regardless of the thread count.
SearchResult optimize(const Certifier& certifier, const StartPoint& x0, const SearchConfig& config);

/// DE restricted to delta within a factor 1.2, a within +-50%, and T1 within
/// half a decade of the seed (clipped to the config box); the seed itself is
/// a population member, so a feasible seed is never lost.
SearchResult refine(const Certifier& certifier, const StartPoint& x0, const SearchParams& seed,
                    const SearchConfig& config);

/// Rounds a search point the way candidates are certified: 6 significant
/// digits, delta upward, a downward, T1 to nearest inside (T0, H).
SearchParams round_candidate(int m, int n, double log10_delta, double a, double log10_T1, const std::string& sigma0,
                             const AnalyticConstants& constants);

struct Regression {
  double slope = 0;
  double intercept = 0;
  std::vector<double> fitted;
  std::vector<double> residuals;
};

/// Ordinary least squares of log Delta on log x0.  Needs >= 3 rows and at
/// least two distinct log x0 values.
Regression fit_regression(const std::vector<std::pair<double, double>>& log_x0_log_delta);

}  // namespace primecert
