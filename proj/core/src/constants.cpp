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

#include "primecert/constants.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "primecert/errors.hpp"

namespace primecert {
namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string unquote(std::string v) {
  if (v.size() >= 2 && (v.front() == '"' || v.front() == '\'') && v.back() == v.front()) {
    return v.substr(1, v.size() - 2);
  }
  return v;
}

Interval parse_key(const std::string& key, const std::string& value) {
  try {
    return Interval::from_decimal(value);
  } catch (const std::invalid_argument& e) {
    throw InvariantError(key, e.what());
  }
}

void require_positive(const std::string& key, const std::string& value) {
  if (!parse_key(key, value).certainly_positive()) throw InvariantError(key, "must be > 0 (got " + value + ")");
}

bool is_integer_text(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); });
}

// Integer-valued decimal such as "260000000" or "2.6e8".
void require_integer_value(const std::string& key, const std::string& value) {
  PrecisionScope scope(256);
  Interval v = parse_key(key, value);
  if (!v.is_point() || !mpfr_integer_p(v.lo()) || mpfr_sgn(v.lo()) <= 0) {
    throw InvariantError(key, "must be a positive integer (got " + value + ")");
  }
}

std::string* scalar_slot(AnalyticConstants& c, const std::string& key) {
  if (key == "H") return &c.riemann_height_H;
  if (key == "R0") return &c.zero_free_R0;
  if (key == "a1") return &c.zero_count_coeffs[0];
  if (key == "a2") return &c.zero_count_coeffs[1];
  if (key == "a3") return &c.zero_count_coeffs[2];
  if (key == "count_T0") return &c.zero_count_T0;
  if (key == "A0") return &c.bpt_constants[0];
  if (key == "A1") return &c.bpt_constants[1];
  if (key == "A2") return &c.bpt_constants[2];
  if (key == "omega") return &c.omega;
  if (key == "alpha1") return &c.psi_theta_alphas[0];
  if (key == "alpha2") return &c.psi_theta_alphas[1];
  if (key == "T0") return &c.zero_sum_T0;
  if (key == "N0") return &c.zero_sum_N0;
  if (key == "S0") return &c.zero_sum_S0;
  if (key == "k") return &c.density_k;
  if (key == "X0_floor") return &c.X0_floor;
  return nullptr;
}

bool same_value(const std::string& x, const std::string& y) {
  PrecisionScope scope(256);
  Interval a = Interval::from_decimal(x);
  Interval b = Interval::from_decimal(y);
  return mpfr_equal_p(a.lo(), b.lo()) && mpfr_equal_p(a.hi(), b.hi());
}

void sort_density(std::vector<ZeroDensityEntry>& entries) {
  PrecisionScope scope(256);
  std::stable_sort(entries.begin(), entries.end(), [](const auto& l, const auto& r) {
    return mpfr_less_p(Interval::from_decimal(l.sigma).lo(), Interval::from_decimal(r.sigma).lo());
  });
}

}  // namespace

const ZeroDensityEntry* AnalyticConstants::find_density(const std::string& sigma) const {
  for (const auto& e : density_entries) {
    if (same_value(e.sigma, sigma)) return &e;
  }
  return nullptr;
}

ConstantValues::ConstantValues(const AnalyticConstants& c)
    : H(Interval::from_decimal(c.riemann_height_H)),
      R0(Interval::from_decimal(c.zero_free_R0)),
      a1(Interval::from_decimal(c.zero_count_coeffs[0])),
      a2(Interval::from_decimal(c.zero_count_coeffs[1])),
      a3(Interval::from_decimal(c.zero_count_coeffs[2])),
      count_T0(Interval::from_decimal(c.zero_count_T0)),
      A0(Interval::from_decimal(c.bpt_constants[0])),
      A1(Interval::from_decimal(c.bpt_constants[1])),
      A2(Interval::from_decimal(c.bpt_constants[2])),
      omega(Interval::from_decimal(c.omega)),
      T0(Interval::from_decimal(c.zero_sum_T0)),
      N0(Interval::from_decimal(c.zero_sum_N0)),
      S0(Interval::from_decimal(c.zero_sum_S0)),
      k(Interval::from_decimal(c.density_k)),
      X0_floor(Interval::from_decimal(c.X0_floor)),
      log_H(log(H)),
      two_pi(Interval(2) * Interval::pi()) {}

AnalyticConstants default_constants() {
  AnalyticConstants c;
  c.riemann_height_H = "3000175332800";
  c.zero_free_R0 = "5.573412";
  c.zero_count_coeffs = {"0.110", "0.290", "2.290"};
  // R(T) holds for T >= e; this is e rounded down.
  c.zero_count_T0 = "2.718281828459045235360287471352662497757";
  c.bpt_constants = {"2.067", "0.059", "1/150"};
  c.omega = "1.0344e-3";
  c.psi_theta_alphas = {"1.0000000193378", "1.04320"};
  c.zero_sum_T0 = "104537615";
  c.zero_sum_N0 = "260000000";
  c.zero_sum_S0 = "21.98308";
  c.density_entries = {{"0.7804", "5.8773", "3.869"}, {"0.9", "11.499", "3.186"}};
  c.density_k = "1e9/3000175332800";
  c.X0_floor = "3.99e18";
  return c;
}

void validate(const AnalyticConstants& c) {
  PrecisionScope scope(256);
  if (!is_integer_text(c.riemann_height_H) || !parse_key("H", c.riemann_height_H).certainly_positive()) {
    throw InvariantError("H", "must be a positive integer (got " + c.riemann_height_H + ")");
  }
  require_positive("R0", c.zero_free_R0);
  require_positive("a1", c.zero_count_coeffs[0]);
  require_positive("a2", c.zero_count_coeffs[1]);
  require_positive("a3", c.zero_count_coeffs[2]);
  require_positive("count_T0", c.zero_count_T0);
  require_positive("A0", c.bpt_constants[0]);
  require_positive("A1", c.bpt_constants[1]);
  require_positive("A2", c.bpt_constants[2]);
  require_positive("omega", c.omega);
  parse_key("alpha1", c.psi_theta_alphas[0]);
  parse_key("alpha2", c.psi_theta_alphas[1]);
  require_positive("T0", c.zero_sum_T0);
  require_integer_value("N0", c.zero_sum_N0);
  require_positive("S0", c.zero_sum_S0);

  Interval H = parse_key("H", c.riemann_height_H);
  Interval k = parse_key("k", c.density_k);
  Interval k_min = Interval::from_decimal("1e9") / H;
  if (k.certainly_less(k_min)) throw InvariantError("k", "below admissible window [1e9/H, 1]");
  if (Interval(1).certainly_less(k)) throw InvariantError("k", "above admissible window [1e9/H, 1]");

  Interval floor = parse_key("X0_floor", c.X0_floor);
  if (floor.certainly_less(Interval::from_decimal("3.99e18"))) {
    throw InvariantError("X0_floor", "must be >= 3.99e18");
  }
  Interval T0 = parse_key("T0", c.zero_sum_T0);
  if (!T0.certainly_less(H)) throw InvariantError("T0", "must be below H");

  const Interval half = Interval(1) / Interval(2);
  const Interval* prev = nullptr;
  Interval prev_value;
  for (const auto& e : c.density_entries) {
    const std::string key = "density." + e.sigma;
    Interval s = parse_key(key, e.sigma);
    if (!half.certainly_less(s) || !s.certainly_less(Interval(1))) {
      throw InvariantError(key, "sigma must lie in (1/2, 1)");
    }
    require_positive(key, e.A_sigma);
    require_positive(key, e.B_sigma);
    if (prev != nullptr && !prev_value.certainly_less(s)) {
      throw InvariantError(key, "density entries must be strictly increasing in sigma");
    }
    prev_value = s;
    prev = &prev_value;
  }
}

AnalyticConstants apply_overrides(const std::string& document, const AnalyticConstants& base,
                                  const std::string& source) {
  AnalyticConstants c = base;
  std::istringstream in(document);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(source, lineno, "expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = unquote(trim(line.substr(eq + 1)));
    if (key.empty() || value.empty()) throw ParseError(source, lineno, "empty key or value");

    if (std::string* slot = scalar_slot(c, key)) {
      parse_key(key, value);
      *slot = value;
      continue;
    }
    if (key.rfind("density.", 0) == 0) {
      std::string sigma = key.substr(8);
      auto comma = value.find(',');
      if (comma == std::string::npos) throw ParseError(source, lineno, key + ": expected 'A, B'");
      ZeroDensityEntry entry{sigma, trim(value.substr(0, comma)), trim(value.substr(comma + 1))};
      parse_key(key, sigma);
      parse_key(key, entry.A_sigma);
      parse_key(key, entry.B_sigma);
      auto it = std::find_if(c.density_entries.begin(), c.density_entries.end(),
                             [&](const auto& e) { return same_value(e.sigma, sigma); });
      if (it != c.density_entries.end()) {
        *it = entry;
      } else {
        c.density_entries.push_back(entry);
      }
      sort_density(c.density_entries);
      continue;
    }
    throw ParseError(source, lineno, "unknown key '" + key + "'");
  }
  validate(c);
  return c;
}

AnalyticConstants load_overrides(const std::filesystem::path& path, const AnalyticConstants& base) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open constants file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return apply_overrides(buffer.str(), base, path.string());
}

std::string serialize(const AnalyticConstants& c) {
  std::ostringstream out;
  out << "H = " << c.riemann_height_H << "\n"
      << "R0 = " << c.zero_free_R0 << "\n"
      << "a1 = " << c.zero_count_coeffs[0] << "\n"
      << "a2 = " << c.zero_count_coeffs[1] << "\n"
      << "a3 = " << c.zero_count_coeffs[2] << "\n"
      << "count_T0 = " << c.zero_count_T0 << "\n"
      << "A0 = " << c.bpt_constants[0] << "\n"
      << "A1 = " << c.bpt_constants[1] << "\n"
      << "A2 = " << c.bpt_constants[2] << "\n"
      << "omega = " << c.omega << "\n"
      << "alpha1 = " << c.psi_theta_alphas[0] << "\n"
      << "alpha2 = " << c.psi_theta_alphas[1] << "\n"
      << "T0 = " << c.zero_sum_T0 << "\n"
      << "N0 = " << c.zero_sum_N0 << "\n"
      << "S0 = " << c.zero_sum_S0 << "\n"
      << "k = " << c.density_k << "\n"
      << "X0_floor = " << c.X0_floor << "\n";
  for (const auto& e : c.density_entries) {
    out << "density." << e.sigma << " = " << e.A_sigma << ", " << e.B_sigma << "\n";
  }
  return out.str();
}

std::string fingerprint(const AnalyticConstants& c) {
  const std::string text = serialize(c);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return hex.str();
}

}  // namespace primecert
