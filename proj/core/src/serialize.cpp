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

#include "primecert/serialize.hpp"

#include <cstdlib>
#include <ctime>
#include <sstream>

#include "primecert/errors.hpp"

#ifndef PRIMECERT_VERSION
#define PRIMECERT_VERSION "0.0.0"
#endif

namespace primecert {

std::string tool_version() { return PRIMECERT_VERSION; }

std::string manifest_timestamp() {
  std::time_t t = std::time(nullptr);
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    char* end = nullptr;
    long long v = std::strtoll(epoch, &end, 10);
    if (end != epoch && *end == '\0') t = static_cast<std::time_t>(v);
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json to_json(const RunManifest& m) {
  Json inputs = Json::object();
  for (const auto& [k, v] : m.inputs) inputs[k] = v;
  return Json{{"command", m.command},
              {"inputs", inputs},
              {"constants_fingerprint", m.constants_fingerprint},
              {"precision_bits", m.precision_bits},
              {"timestamp", m.timestamp},
              {"tool_version", m.tool_version}};
}

Json to_json(const Interval& x) {
  return Json{{"lower", x.lower_string(kOutputDigits)}, {"upper", x.upper_string(kOutputDigits)}};
}

Json to_json(const SearchParams& p) {
  return Json{{"m", p.m}, {"n", p.n}, {"delta", p.delta}, {"a", p.a}, {"T1", p.T1}, {"sigma0", p.sigma0}};
}

namespace {
Json term(const Term& t) { return Json{{"coefficient", to_json(t.coefficient)}, {"contribution", to_json(t.contribution)}}; }
}  // namespace

Json to_json(const ConstraintBreakdown& b) {
  return Json{{"F0_lower", to_json(b.F0_lower)},
              {"B0", term(b.B0)},
              {"B0_count_branch", to_json(b.B0_count_branch)},
              {"B0_sum_branch", to_json(b.B0_sum_branch)},
              {"B1", term(b.B1)},
              {"B1_count_branch", to_json(b.B1_count_branch)},
              {"B1_sum_branch", to_json(b.B1_sum_branch)},
              {"B2", term(b.B2)},
              {"B3_sigma0", term(b.B3_s0)},
              {"B3_one_minus_sigma0", term(b.B3_1ms0)},
              {"B41", term(b.B41)},
              {"B42", term(b.B42)},
              {"trivial_term", term(b.trivial_term)},
              {"omega_term", term(b.omega_term)},
              {"E_term", term(b.E_term)},
              {"margin", to_json(b.margin)}};
}

Json to_json(const Certificate& c) {
  return Json{{"x0", c.x0_label},
              {"x0_value", to_json(c.x0)},
              {"X0", to_json(c.X0)},
              {"delta_cap", c.delta_cap.lower_string(kOutputDigits)},
              {"delta_cap_5", c.delta_cap.lower_fixed(5)},
              {"params", to_json(c.params)},
              {"status", to_string(c.status)},
              {"valid", c.valid()},
              {"margin", c.breakdown.margin.lower_string(kOutputDigits)},
              {"breakdown", to_json(c.breakdown)},
              {"precision_bits", c.precision_bits},
              {"norm_mode", to_string(c.norm_mode)},
              {"constants_fingerprint", c.constants_fingerprint}};
}

Json to_json(const ZeroSummary& s) {
  return Json{{"T0", s.T0}, {"N0", s.N0}, {"S0", s.S0}, {"max_ordinate", s.max_ordinate}};
}

Json to_json(const SearchResult& r) {
  return Json{{"best", to_json(r.best)}, {"evaluations", r.evaluations}, {"generations", r.trace.size()}};
}

std::string trace_tsv(const SearchResult& r) {
  std::ostringstream out;
  out << "generation\tm\tn\tbest_delta\tbest_margin\n";
  for (const auto& t : r.trace) {
    out << t.generation << '\t' << t.m << '\t' << t.n << '\t' << t.best_delta << '\t' << t.best_margin << '\n';
  }
  return out.str();
}

ZeroSummary zero_summary_from_json(const Json& j) {
  const Json& s = j.contains("summary") ? j.at("summary") : j;
  try {
    ZeroSummary out;
    out.T0 = s.at("T0").get<std::string>();
    out.N0 = s.at("N0").get<std::uint64_t>();
    out.S0 = s.at("S0").get<std::string>();
    out.max_ordinate = s.value("max_ordinate", std::string());
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("zero summary", 0, e.what());
  }
}

}  // namespace primecert
