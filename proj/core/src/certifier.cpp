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

#include "primecert/certifier.hpp"

#include <sstream>
#include <vector>

#include "primecert/errors.hpp"

namespace primecert {
namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Interval field(const std::string& key, const std::string& value) {
  try {
    return Interval::from_decimal(value);
  } catch (const std::invalid_argument& e) {
    throw InvariantError(key, e.what());
  }
}

Interval inv_sqrt(const Interval& x) { return Interval(1) / sqrt(x); }

}  // namespace

std::string SearchParams::to_string() const {
  return std::to_string(m) + "," + std::to_string(n) + "," + delta + "," + a + "," + T1 + "," + sigma0;
}

SearchParams SearchParams::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(trim(item));
  if (parts.size() != 5 && parts.size() != 6) {
    throw DomainError("params: expected m,n,delta,a,T1[,sigma0] (got '" + text + "')");
  }
  SearchParams p;
  try {
    std::size_t used = 0;
    p.m = std::stoi(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument("m");
    p.n = std::stoi(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("n");
  } catch (const std::exception&) {
    throw DomainError("params: m and n must be integers");
  }
  p.delta = parts[2];
  p.a = parts[3];
  p.T1 = parts[4];
  if (parts.size() == 6) p.sigma0 = parts[5];
  return p;
}

void validate(const SearchParams& p, const AnalyticConstants& c) {
  PrecisionScope scope(256);
  if (p.m < 2) throw InvariantError("m", "must be an integer >= 2");
  if (p.n < 1) throw InvariantError("n", "must be an integer >= 1");
  if (p.m % 2 == 1 && p.n % 2 == 0) throw InvariantError("n", "must be odd when m is odd (parity)");
  Interval delta = field("delta", p.delta);
  if (!delta.certainly_positive() || Interval::from_decimal("1e-6").certainly_less(delta)) {
    throw InvariantError("delta", "must satisfy 0 < delta <= 1e-6");
  }
  Interval a = field("a", p.a);
  if (!a.certainly_nonnegative() || (Interval(1) / Interval(2)).certainly_less(a)) {
    throw InvariantError("a", "must satisfy 0 <= a <= 1/2");
  }
  Interval T1 = field("T1", p.T1);
  if (!Interval::from_decimal(c.zero_sum_T0).certainly_less(T1)) throw InvariantError("T1", "must exceed T0");
  if (!T1.certainly_less(Interval::from_decimal(c.riemann_height_H))) throw InvariantError("T1", "must be below H");
  Interval s = field("sigma0", p.sigma0);
  if (!(Interval(1) / Interval(2)).certainly_less(s) || !s.certainly_less(Interval(1))) {
    throw InvariantError("sigma0", "must lie in (1/2, 1)");
  }
  if (c.find_density(p.sigma0) == nullptr) throw InvariantError("sigma0", "no zero-density entry for " + p.sigma0);
}

StartPoint StartPoint::from_value(std::string x0) {
  PrecisionScope scope(64);
  if (!field("x0", x0).certainly_positive()) throw DomainError("x0 must be positive");
  return {std::move(x0), false};
}

StartPoint StartPoint::from_log(std::string log_x0) {
  PrecisionScope scope(64);
  field("log_x0", log_x0);
  return {std::move(log_x0), true};
}

Interval StartPoint::value() const {
  return is_log_ ? exp(Interval::from_decimal(text_)) : Interval::from_decimal(text_);
}

Interval StartPoint::log_value() const {
  return is_log_ ? Interval::from_decimal(text_) : log(Interval::from_decimal(text_));
}

std::string StartPoint::label() const { return is_log_ ? "log " + text_ : text_; }

const char* to_string(MarginStatus s) {
  switch (s) {
    case MarginStatus::positive:
      return "positive";
    case MarginStatus::negative:
      return "negative";
    case MarginStatus::indeterminate:
      break;
  }
  return "indeterminate";
}

MarginStatus status_of(const Interval& margin) {
  if (margin.certainly_positive()) return MarginStatus::positive;
  if (mpfr_sgn(margin.hi()) <= 0) return MarginStatus::negative;
  return MarginStatus::indeterminate;
}

Interval delta_cap(const SearchParams& p) {
  const Interval delta = Interval::from_decimal(p.delta);
  const Interval a = Interval::from_decimal(p.a);
  const Interval u = delta / Interval(p.m);
  const Interval one(1);
  // 1 - (1+da)/(e^u(1+d(1-a))) = (expm1(u)(1+d(1-a)) + d(1-2a)) / (e^u(1+d(1-a)))
  const Interval right = one + delta * (one - a);
  const Interval num = expm1(u) * right + delta * (one - Interval(2) * a);
  return exp(u) * right / num;
}

Certifier::Certifier(AnalyticConstants constants, CertifierOptions options)
    : constants_(std::move(constants)), options_(std::move(options)) {
  validate(constants_);
  fingerprint_ = primecert::fingerprint(constants_);
  PrecisionScope scope(options_.precision_bits);
  values_ = std::make_unique<ConstantValues>(constants_);
  if (options_.zero_summary) {
    T0_ = Interval::from_decimal(options_.zero_summary->T0);
    N0_ = Interval(static_cast<long>(options_.zero_summary->N0));
    S0_ = Interval::from_decimal(options_.zero_summary->S0);
  } else {
    T0_ = values_->T0;
    N0_ = values_->N0;
    S0_ = values_->S0;
  }
}

std::shared_ptr<const SmoothingKernel> Certifier::kernel(int m, int n) const {
  {
    std::lock_guard lock(mutex_);
    auto it = kernels_.find({m, n});
    if (it != kernels_.end()) return it->second;
  }
  auto k = std::make_shared<const SmoothingKernel>(WeightSpec(m, n), options_.norm_mode);
  std::lock_guard lock(mutex_);
  return kernels_.emplace(std::make_pair(m, n), std::move(k)).first->second;
}

const Certifier::TailSums& Certifier::tail_sums(int m, const std::string& sigma0) const {
  {
    std::lock_guard lock(mutex_);
    auto it = tails_.find({m, sigma0});
    if (it != tails_.end()) return *it->second;
  }
  PrecisionScope scope(options_.precision_bits);
  auto t = std::make_unique<TailSums>();
  DensityCoefficients d = density_for(constants_, sigma0);
  t->s3 = s3(m, *values_);
  t->s4 = s4(m, d, *values_);
  std::lock_guard lock(mutex_);
  auto [it, inserted] = tails_.emplace(std::make_pair(m, sigma0), std::move(t));
  return *it->second;
}

Interval Certifier::derive_X0(const Interval& x0, const SearchParams& p) const {
  PrecisionScope scope(options_.precision_bits);
  const Interval delta = Interval::from_decimal(p.delta);
  const Interval a = Interval::from_decimal(p.a);
  const Interval u = delta / Interval(p.m);
  Interval X0 = x0 * exp(-u) / (Interval(1) + delta * (Interval(1) - a));
  if (mpfr_less_p(X0.lo(), values_->X0_floor.hi())) {
    throw DomainError("X0 = " + X0.lower_string(12) + " is below the floor " + constants_.X0_floor);
  }
  return X0;
}

Interval Certifier::delta_cap(const SearchParams& p) const {
  PrecisionScope scope(options_.precision_bits);
  return primecert::delta_cap(p);
}

ConstraintBreakdown Certifier::evaluate_margin(const Interval& X0_in, const SearchParams& p) const {
  validate(p, constants_);
  auto kern = kernel(p.m, p.n);
  const TailSums& tails = tail_sums(p.m, p.sigma0);
  PrecisionScope scope(options_.precision_bits);
  const ConstantValues& cv = *values_;

  const Interval X0 = X0_in;
  const Interval one(1);
  const Interval two(2);
  const Interval four(4);
  const Interval delta = Interval::from_decimal(p.delta);
  const Interval a = Interval::from_decimal(p.a);
  const Interval T1 = Interval::from_decimal(p.T1);
  const Interval sigma0 = Interval::from_decimal(p.sigma0);
  const Interval u = delta / Interval(p.m);
  const Interval eu = exp(u);
  const Interval eu_m1 = expm1(u);
  const Interval eu2_p1 = exp(u / two) + one;
  const Interval eu2_m1 = expm1(u / two);
  const Interval delta_m = pow(delta, static_cast<unsigned long>(p.m));
  const Interval logX0 = log(X0);
  const Interval X0_mhalf = inv_sqrt(X0);

  const FBounds F = kern->bounds(delta);
  const Interval& lambda = F.Fm_upper;

  ConstraintBreakdown b;
  b.F0_lower = F.F0_lower;

  b.B0_count_branch = four * F.F0_upper * N0_ / eu2_p1;
  b.B0_sum_branch = four * F.F1_upper * S0_ / (eu2_p1 * delta);
  b.B0.coefficient = min(b.B0_count_branch, b.B0_sum_branch);
  b.B0.contribution = b.B0.coefficient * X0_mhalf;

  Interval count_T1 = options_.count_at_T1 ? Interval(static_cast<long>(*options_.count_at_T1))
                                           : count_main_term(T1) + count_error_bound(T1, cv);
  b.B1_count_branch = four * F.F0_upper * max(count_T1 - N0_, Interval(0)) / eu2_p1;
  b.B1_sum_branch = four * F.F1_upper * s1(T0_, T1, cv) / (eu2_p1 * delta);
  b.B1.coefficient = min(b.B1_count_branch, b.B1_sum_branch);
  b.B1.contribution = b.B1.coefficient * X0_mhalf;

  b.B2.coefficient = two * lambda * s2(p.m, T1, cv) / (eu2_m1 * delta_m);
  b.B2.contribution = b.B2.coefficient * X0_mhalf;

  auto B3 = [&](const Interval& sigma) { return two * lambda * (exp(u * sigma) + one) * tails.s3 / (eu_m1 * delta_m); };
  b.B3_s0.coefficient = B3(sigma0);
  b.B3_s0.contribution = b.B3_s0.coefficient * exp((sigma0 - one) * logX0);
  b.B3_1ms0.coefficient = B3(one - sigma0);
  b.B3_1ms0.contribution = b.B3_1ms0.coefficient * exp(-sigma0 * logX0);

  const DensityCoefficients dens = density_for(constants_, p.sigma0);
  const Interval big = two * lambda * (eu + one) / (eu_m1 * delta_m);
  b.B41.coefficient = big * s5_from_s4(tails.s4, X0, p.m, dens, cv);
  b.B41.contribution = b.B41.coefficient;
  b.B42.coefficient = big * tails.s4;
  b.B42.contribution = b.B42.coefficient * exp((one / (cv.R0 * cv.log_H) - one) * logX0);

  b.trivial_term.coefficient = u / (two * eu_m1);
  b.trivial_term.contribution = b.trivial_term.coefficient / (X0 * X0);
  b.omega_term.coefficient = cv.omega / eu_m1;
  b.omega_term.contribution = b.omega_term.coefficient * X0_mhalf;

  const WeightSpec& w = kern->weight();
  b.E_term.coefficient = two * (one + delta) * nu(w, a) / Interval::from_rational(kern->norm1());
  b.E_term.contribution = b.E_term.coefficient * log(eu * (one + delta) * X0) / log(eu_m1 * X0);

  Interval removed = b.B0.contribution;
  for (const Term* t : {&b.B1, &b.B2, &b.B3_s0, &b.B3_1ms0, &b.B41, &b.B42, &b.trivial_term, &b.omega_term, &b.E_term}) {
    removed += t->contribution;
  }
  b.margin = b.F0_lower - removed;
  return b;
}

Certificate Certifier::certify(const StartPoint& x0, const SearchParams& p) const {
  validate(p, constants_);
  PrecisionScope scope(options_.precision_bits);
  Certificate cert;
  cert.x0_label = x0.label();
  cert.x0 = x0.value();
  cert.params = p;
  cert.X0 = derive_X0(cert.x0, p);
  cert.delta_cap = primecert::delta_cap(p);
  cert.breakdown = evaluate_margin(cert.X0, p);
  cert.precision_bits = options_.precision_bits;
  cert.norm_mode = options_.norm_mode;
  cert.constants_fingerprint = fingerprint_;
  cert.status = status_of(cert.breakdown.margin);
  return cert;
}

}  // namespace primecert
