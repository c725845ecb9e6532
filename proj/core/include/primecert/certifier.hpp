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
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

#include "primecert/analytic.hpp"
#include "primecert/constants.hpp"
#include "primecert/interval.hpp"
#include "primecert/smoothing.hpp"
#include "primecert/zero_data.hpp"

namespace primecert {

/// One candidate certification (m, n, delta, a, T1, sigma0); decimals kept as text.
struct SearchParams {
  int m = 2;
  int n = 1;
  std::string delta;
  std::string a;
  std::string T1;
  std::string sigma0 = "0.7804";

  /// "m,n,delta,a,T1,sigma0"
  std::string to_string() const;
  /// Parses "m,n,delta,a,T1[,sigma0]"; throws DomainError.
  static SearchParams parse(const std::string& text);
};

/// Throws InvariantError naming the offending field.
void validate(const SearchParams& p, const AnalyticConstants& c);

/// Where the certified range starts: either x0 itself or log x0.
class StartPoint {
 public:
  static StartPoint from_value(std::string x0);
  static StartPoint from_log(std::string log_x0);

  bool is_log() const { return is_log_; }
  const std::string& text() const { return text_; }
  Interval value() const;
  Interval log_value() const;
  /// "4e18" or "log 46" style label.
  std::string label() const;

 private:
  StartPoint(std::string text, bool is_log) : text_(std::move(text)), is_log_(is_log) {}
  std::string text_;
  bool is_log_;
};

/// A subtracted term: its coefficient and what it removes from the margin
/// after the X0 power is applied.
struct Term {
  Interval coefficient;
  Interval contribution;
};

struct ConstraintBreakdown {
  Interval F0_lower;
  Interval B0_count_branch;
  Interval B0_sum_branch;
  Term B0;
  Interval B1_count_branch;
  Interval B1_sum_branch;
  Term B1;
  Term B2;
  Term B3_s0;
  Term B3_1ms0;
  Term B41;
  Term B42;
  Term trivial_term;
  Term omega_term;
  Term E_term;
  Interval margin;
};

enum class MarginStatus { positive, negative, indeterminate };
const char* to_string(MarginStatus s);
MarginStatus status_of(const Interval& margin);

struct CertifierOptions {
  int precision_bits = 256;
  NormMode norm_mode = NormMode::exact;
  /// Replaces (T0, N0, S0) from the constants when present.
  std::optional<ZeroSummary> zero_summary;
  /// Exact N(T1) from a zero list; otherwise P(T1) + R(T1) bounds it.
  std::optional<std::uint64_t> count_at_T1;
};

struct Certificate {
  std::string x0_label;
  Interval x0;
  Interval X0;
  Interval delta_cap;
  SearchParams params;
  ConstraintBreakdown breakdown;
  int precision_bits = 0;
  NormMode norm_mode = NormMode::exact;
  std::string constants_fingerprint;
  MarginStatus status = MarginStatus::indeterminate;

  bool valid() const { return status == MarginStatus::positive; }
};

/// Delta = (1 - (1 + delta a) / (e^u (1 + delta(1-a))))^-1 with u = delta/m,
/// at the current working precision.
Interval delta_cap(const SearchParams& p);

/// Evaluates the prime-interval positivity condition with outward rounding.
/// Thread-safe; per-(m, n) and per-(m, sigma) intermediates are cached.
class Certifier {
 public:
  explicit Certifier(AnalyticConstants constants, CertifierOptions options = {});

  const AnalyticConstants& constants() const { return constants_; }
  const CertifierOptions& options() const { return options_; }
  const std::string& fingerprint() const { return fingerprint_; }

  /// X0 = x0 e^-u / (1 + delta(1-a)); throws DomainError below the X0 floor.
  Interval derive_X0(const Interval& x0, const SearchParams& p) const;
  Interval delta_cap(const SearchParams& p) const;
  ConstraintBreakdown evaluate_margin(const Interval& X0, const SearchParams& p) const;
  /// Never throws for a non-positive margin; the certificate records it.
  Certificate certify(const StartPoint& x0, const SearchParams& p) const;

  std::shared_ptr<const SmoothingKernel> kernel(int m, int n) const;

 private:
  struct TailSums {
    Interval s3;
    Interval s4;
  };
  const TailSums& tail_sums(int m, const std::string& sigma0) const;

  AnalyticConstants constants_;
  CertifierOptions options_;
  std::string fingerprint_;
  std::unique_ptr<ConstantValues> values_;
  Interval T0_;
  Interval N0_;
  Interval S0_;

  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, int>, std::shared_ptr<const SmoothingKernel>> kernels_;
  mutable std::map<std::pair<int, std::string>, std::unique_ptr<TailSums>> tails_;
};

}  // namespace primecert
