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

#include "primecert/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <thread>

namespace primecert {
namespace {

enum class Rounding { up, down, nearest };

/// Six significant digits in d.ddddde<k> form.
std::string six_digits(double v, Rounding mode) {
  int k = static_cast<int>(std::floor(std::log10(v)));
  double scaled = v / std::pow(10.0, k) * 1e5;
  double digits = 0;
  switch (mode) {
    case Rounding::up:
      digits = std::ceil(scaled - 1e-7);
      break;
    case Rounding::down:
      digits = std::floor(scaled + 1e-7);
      break;
    case Rounding::nearest:
      digits = std::round(scaled);
      break;
  }
  if (digits >= 1e6) {
    digits /= 10;
    ++k;
  } else if (digits < 1e5) {
    digits *= 10;
    --k;
  }
  long d = std::lround(digits);
  char buf[48];
  std::snprintf(buf, sizeof buf, "%ld.%05lde%d", d / 100000, d % 100000, k);
  return buf;
}

struct Candidate {
  std::array<double, 3> x{};
  bool feasible = false;
  double score = -std::numeric_limits<double>::infinity();  // log Delta if feasible, else margin
  std::optional<Certificate> cert;
};

bool better(const Candidate& a, const Candidate& b) {
  if (a.feasible != b.feasible) return a.feasible;
  return a.score > b.score;
}

struct Stage {
  int m;
  int n;
  std::array<Box, 3> box;
  std::optional<std::array<double, 3>> seed;
};

class Search {
 public:
  Search(const Certifier& certifier, const StartPoint& x0, const SearchConfig& config)
      : certifier_(certifier), x0_(x0), config_(config) {
    threads_ = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  }

  Candidate evaluate(int m, int n, const std::array<double, 3>& x) {
    Candidate c;
    c.x = x;
    SearchParams p = round_candidate(m, n, x[0], x[1], x[2], config_.sigma0, certifier_.constants());
    try {
      Certificate cert = certifier_.certify(x0_, p);
      c.feasible = cert.valid();
      c.score = c.feasible ? cert.delta_cap.log_mid() : cert.breakdown.margin.lo_double();
      if (std::isnan(c.score)) c.score = -std::numeric_limits<double>::infinity();
      c.cert = std::move(cert);
    } catch (const DomainError&) {
      // X0 below the floor for this delta: the point is infeasible with no breakdown
    }
    return c;
  }

  void evaluate_all(int m, int n, std::vector<Candidate>& batch) {
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i = next++; i < batch.size(); i = next++) batch[i] = evaluate(m, n, batch[i].x);
    };
    unsigned count = std::min<unsigned>(threads_, static_cast<unsigned>(batch.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < count; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    evaluations_ += batch.size();
  }

  /// Runs DE for one (m, n); returns the best member.
  Candidate run_stage(const Stage& stage) {
    const int np = config_.population;
    std::vector<Candidate> pop(static_cast<std::size_t>(np));
    Candidate best;
    for (int g = 0; g < config_.generations; ++g) {
      std::seed_seq seq{static_cast<std::uint64_t>(config_.seed), static_cast<std::uint64_t>(stage.m),
                        static_cast<std::uint64_t>(stage.n), static_cast<std::uint64_t>(g)};
      std::mt19937_64 rng(seq);
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      if (g == 0) {
        for (int i = 0; i < np; ++i) {
          for (int d = 0; d < 3; ++d) pop[i].x[d] = stage.box[d].lo + unit(rng) * (stage.box[d].hi - stage.box[d].lo);
        }
        if (stage.seed) pop[0].x = *stage.seed;
        evaluate_all(stage.m, stage.n, pop);
      } else {
        std::vector<Candidate> trial(pop.size());
        std::uniform_int_distribution<int> pick(0, np - 1);
        std::uniform_int_distribution<int> dim(0, 2);
        for (int i = 0; i < np; ++i) {
          int r1, r2, r3;
          do r1 = pick(rng); while (r1 == i);
          do r2 = pick(rng); while (r2 == i || r2 == r1);
          do r3 = pick(rng); while (r3 == i || r3 == r1 || r3 == r2);
          int jrand = dim(rng);
          for (int d = 0; d < 3; ++d) {
            double v = pop[i].x[d];
            if (d == jrand || unit(rng) < config_.crossover) {
              v = pop[r1].x[d] + config_.weight * (pop[r2].x[d] - pop[r3].x[d]);
              const Box& b = stage.box[d];
              if (v < b.lo) v = (pop[r1].x[d] + b.lo) / 2;
              if (v > b.hi) v = (pop[r1].x[d] + b.hi) / 2;
            }
            trial[i].x[d] = v;
          }
        }
        evaluate_all(stage.m, stage.n, trial);
        for (int i = 0; i < np; ++i) {
          if (!better(pop[i], trial[i])) pop[i] = std::move(trial[i]);
        }
      }
      for (const auto& c : pop) {
        if (better(c, best)) best = c;
      }
      record(stage, best);
    }
    return best;
  }

  void record(const Stage& stage, const Candidate& stage_best) {
    if (stage_best.cert && (!overall_ || better(stage_best, *overall_))) overall_ = stage_best;
    TracePoint t;
    t.generation = generation_++;
    t.m = stage.m;
    t.n = stage.n;
    if (overall_ && overall_->feasible) {
      t.best_delta = overall_->cert->delta_cap.lower_string(6);
      t.best_margin = overall_->cert->breakdown.margin.lower_string(6);
    } else {
      t.best_delta = "0";
      t.best_margin = overall_ ? overall_->cert->breakdown.margin.lower_string(6) : "-inf";
    }
    trace_.push_back(std::move(t));
  }

  SearchResult finish(std::chrono::steady_clock::time_point start) {
    if (!overall_ || !overall_->feasible) {
      std::optional<Certificate> least;
      if (overall_) least = overall_->cert;
      throw InfeasibleSearch("no certified point found within the search budget", std::move(least), evaluations_);
    }
    SearchResult r;
    r.best = *overall_->cert;
    r.trace = std::move(trace_);
    r.evaluations = evaluations_;
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }

  const std::optional<Candidate>& overall() const { return overall_; }

 private:
  const Certifier& certifier_;
  const StartPoint& x0_;
  const SearchConfig& config_;
  unsigned threads_;
  std::uint64_t evaluations_ = 0;
  int generation_ = 0;
  std::optional<Candidate> overall_;
  std::vector<TracePoint> trace_;
};

Box default_delta_box(const Certifier& certifier, const StartPoint& x0) {
  PrecisionScope scope(128);
  double log10_x0 = x0.log_value().mid_double() / std::log(10.0);
  double omega = Interval::from_decimal(certifier.constants().omega).mid_double();
  double lo = std::log10(omega) - log10_x0 / 2 - 1;
  return {std::min(lo, -7.0), -6.0};
}

int order_of(const Candidate& c) {
  return static_cast<int>(std::floor(c.cert->delta_cap.log_mid() / std::log(10.0)));
}

}  // namespace

std::vector<int> default_n_schedule() {
  std::vector<int> out;
  for (int n = 1; n <= 15; n += 2) out.push_back(n);
  while (out.back() < 1201) {
    int next = static_cast<int>(std::ceil(out.back() * 1.15));
    if (next % 2 == 0) ++next;
    out.push_back(std::min(next, 1201));
  }
  return out;
}

void validate(const SearchConfig& c, const AnalyticConstants& constants) {
  if (c.m_min < 2 || c.m_max < c.m_min) throw InvariantError("m_range", "needs 2 <= m_min <= m_max");
  if (c.population < 4) throw InvariantError("de_population", "must be at least 4");
  if (!(c.weight > 0 && c.weight <= 2)) throw InvariantError("de_weight", "must lie in (0, 2]");
  if (!(c.crossover >= 0 && c.crossover <= 1)) throw InvariantError("de_crossover", "must lie in [0, 1]");
  if (c.generations < 0) throw InvariantError("de_generations", "must be nonnegative");
  if (c.stall_limit < 1) throw InvariantError("stall_limit", "must be at least 1");
  for (std::size_t i = 0; i < c.n_schedule.size(); ++i) {
    if (c.n_schedule[i] < 1 || (i && c.n_schedule[i] <= c.n_schedule[i - 1])) {
      throw InvariantError("n_schedule", "must be ascending positive integers");
    }
  }
  if (c.log10_delta && (c.log10_delta->hi > -6 || c.log10_delta->lo > c.log10_delta->hi)) {
    throw InvariantError("bounds.delta", "needs lo <= hi <= -6 (delta <= 1e-6)");
  }
  if (c.a.lo < 0 || c.a.hi > 0.5 || c.a.lo > c.a.hi) throw InvariantError("bounds.a", "must lie within [0, 1/2]");
  PrecisionScope scope(128);
  double T0 = std::log10(Interval::from_decimal(constants.zero_sum_T0).mid_double());
  double H = std::log10(Interval::from_decimal(constants.riemann_height_H).mid_double());
  if (c.log10_T1.lo <= T0 || c.log10_T1.hi >= H || c.log10_T1.lo > c.log10_T1.hi) {
    throw InvariantError("bounds.T1", "must lie strictly inside (T0, H)");
  }
}

SearchParams round_candidate(int m, int n, double log10_delta, double a, double log10_T1, const std::string& sigma0,
                             const AnalyticConstants& constants) {
  SearchParams p;
  p.m = m;
  p.n = n;
  p.sigma0 = sigma0;
  p.delta = six_digits(std::pow(10.0, std::min(log10_delta, -6.0)), Rounding::up);
  if (p.delta == "1.00001e-6") p.delta = "1.00000e-6";
  a = std::clamp(a, 0.0, 0.5);
  p.a = a < 1e-12 ? "0" : six_digits(a, Rounding::down);
  p.T1 = six_digits(std::pow(10.0, log10_T1), Rounding::nearest);
  PrecisionScope scope(128);
  Interval T1 = Interval::from_decimal(p.T1);
  if (!T1.certainly_less(Interval::from_decimal(constants.riemann_height_H))) {
    p.T1 = six_digits(std::pow(10.0, log10_T1), Rounding::down);
  } else if (!Interval::from_decimal(constants.zero_sum_T0).certainly_less(T1)) {
    p.T1 = six_digits(std::pow(10.0, log10_T1), Rounding::up);
  }
  return p;
}

SearchResult optimize(const Certifier& certifier, const StartPoint& x0, const SearchConfig& config) {
  validate(config, certifier.constants());
  auto start = std::chrono::steady_clock::now();
  Search search(certifier, x0, config);
  const std::vector<int> schedule = config.n_schedule.empty() ? default_n_schedule() : config.n_schedule;
  const Box delta_box = config.log10_delta ? *config.log10_delta : default_delta_box(certifier, x0);

  for (int m = config.m_min; m <= config.m_max; ++m) {
    int best_order = std::numeric_limits<int>::min();
    int stalled = 0;
    std::optional<std::array<double, 3>> carry;
    for (int n : schedule) {
      if (m % 2 == 1 && n % 2 == 0) continue;
      Stage stage{m, n, {delta_box, config.a, config.log10_T1}, carry};
      Candidate best = search.run_stage(stage);
      if (best.cert) carry = best.x;
      if (best.feasible) {
        int order = order_of(best);
        if (order > best_order) {
          best_order = order;
          stalled = 0;
          continue;
        }
      }
      if (best_order != std::numeric_limits<int>::min() && ++stalled >= config.stall_limit) break;
    }
  }
  return search.finish(start);
}

SearchResult refine(const Certifier& certifier, const StartPoint& x0, const SearchParams& seed,
                    const SearchConfig& config) {
  validate(config, certifier.constants());
  validate(seed, certifier.constants());
  auto start = std::chrono::steady_clock::now();
  SearchConfig local = config;
  local.sigma0 = seed.sigma0;
  Search search(certifier, x0, local);

  PrecisionScope scope(128);
  const double ld = std::log10(Interval::from_decimal(seed.delta).mid_double());
  const double a = Interval::from_decimal(seed.a).mid_double();
  const double lt = std::log10(Interval::from_decimal(seed.T1).mid_double());
  const double f = std::log10(1.2);
  Stage stage{seed.m, seed.n, {}, std::array<double, 3>{ld, a, lt}};
  stage.box[0] = {ld - f, std::min(ld + f, -6.0)};
  stage.box[1] = {std::max(0.0, a * 0.5), std::min(0.5, a * 1.5)};
  stage.box[2] = {std::max(config.log10_T1.lo, lt - 0.5), std::min(config.log10_T1.hi, lt + 0.5)};
  search.run_stage(stage);
  return search.finish(start);
}

Regression fit_regression(const std::vector<std::pair<double, double>>& rows) {
  if (rows.size() < 3) throw DomainError("regression needs at least 3 rows");
  const double k = static_cast<double>(rows.size());
  double mx = 0, my = 0;
  for (const auto& [x, y] : rows) {
    mx += x;
    my += y;
  }
  mx /= k;
  my /= k;
  double sxx = 0, sxy = 0;
  for (const auto& [x, y] : rows) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  if (!(sxx > 0)) throw DomainError("regression is degenerate: all log x0 values are equal");
  Regression r;
  r.slope = sxy / sxx;
  r.intercept = my - r.slope * mx;
  for (const auto& [x, y] : rows) {
    r.fitted.push_back(r.intercept + r.slope * x);
    r.residuals.push_back(y - r.fitted.back());
  }
  return r;
}

}  // namespace primecert
