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

#include "primecert/zero_data.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "primecert/constants.hpp"
#include "primecert/errors.hpp"

namespace primecert {
namespace {

constexpr int kSumBits = 256;
constexpr int kSumDigits = 40;

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Interval parse_ordinate(const std::string& text, const std::string& source, std::size_t line) {
  try {
    return Interval::from_decimal(text);
  } catch (const std::invalid_argument&) {
    throw ParseError(source, line, "not a number: '" + text + "'");
  }
}

Interval parse_bound(const std::string& name, const std::string& text) {
  try {
    return Interval::from_decimal(text);
  } catch (const std::invalid_argument& e) {
    throw DomainError(name + ": " + e.what());
  }
}

template <typename Sink>
void read_lines(std::istream& in, Sink&& sink) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    sink(line, lineno);
  }
}

}  // namespace

ZeroList ingest_text(const std::string& text, const std::string& label) {
  PrecisionScope scope(kSumBits);
  ZeroList out;
  out.source_label = label;
  std::istringstream in(text);
  Interval previous;
  read_lines(in, [&](const std::string& value, std::size_t lineno) {
    Interval gamma = parse_ordinate(value, label, lineno);
    if (!gamma.certainly_positive()) throw ParseError(label, lineno, "ordinate must be positive");
    if (!out.ordinates.empty() && !previous.certainly_less(gamma)) {
      throw ParseError(label, lineno, "ordinates not strictly ascending");
    }
    previous = gamma;
    out.ordinates.push_back(value);
  });
  if (out.ordinates.empty()) {
    out.warnings.push_back(label + ": no ordinates found");
    std::clog << "warning: " << out.warnings.back() << "\n";
  } else if (!Interval(14).certainly_less(Interval::from_decimal(out.ordinates.front()))) {
    out.warnings.push_back(label + ": first ordinate <= 14; the first zeta zero is 14.1347...");
    std::clog << "warning: " << out.warnings.back() << "\n";
  }
  return out;
}

ZeroList ingest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open zero list");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ingest_text(buffer.str(), path.string());
}

ZeroSummary summarize(const ZeroList& zeros, const std::string& T0) {
  ZeroSummarizer acc(T0);
  std::size_t i = 0;
  for (const auto& g : zeros.ordinates) acc.add(g, ++i);
  return acc.finish();
}

Interval oracle_sum_inverse_power(const ZeroList& zeros, int m, const std::string& U_text,
                                  const std::string& V_text) {
  if (m < 1) throw DomainError("oracle_sum_inverse_power: m must be >= 1");
  Interval U = parse_bound("U", U_text);
  Interval V = parse_bound("V", V_text);
  if (V.certainly_less(U)) throw DomainError("oracle_sum_inverse_power: U > V");
  if (zeros.empty() || Interval::from_decimal(zeros.ordinates.back()).certainly_less(V)) {
    throw CoverageError("oracle_sum_inverse_power: V exceeds zero-list coverage");
  }
  Interval sum(0);
  for (const auto& g : zeros.ordinates) {
    Interval gamma = Interval::from_decimal(g);
    // Ordinates are exact decimals; compare on the parsed enclosure.
    if (!U.certainly_less(gamma)) continue;
    if (V.certainly_less(gamma)) break;
    sum += Interval(1) / pow(gamma, static_cast<unsigned long>(m + 1));
  }
  return sum;
}

ZeroSummarizer::ZeroSummarizer(std::string T0) : T0_text_(std::move(T0)) {
  PrecisionScope scope(kSumBits);
  T0_ = parse_bound("T0", T0_text_);
  sum_ = Interval(0);
  if (!T0_.certainly_positive()) throw DomainError("T0 must be positive");
}

void ZeroSummarizer::add(const std::string& ordinate, std::size_t line, const std::string& source) {
  PrecisionScope scope(kSumBits);
  Interval gamma = parse_ordinate(ordinate, source, line);
  if (!gamma.certainly_positive()) throw ParseError(source, line, "ordinate must be positive");
  if (!last_ordinate_.empty() && !last_.certainly_less(gamma)) {
    throw ParseError(source, line, "ordinates not strictly ascending");
  }
  last_ordinate_ = ordinate;
  last_ = gamma;
  lines_consumed_ = line;
  if (!T0_.certainly_less(gamma)) {
    ++count_;
    sum_ += Interval(1) / gamma;
  }
  if (!gamma.certainly_less(T0_)) covered_ = true;
}

ZeroSummary ZeroSummarizer::finish() const {
  if (!covered_) {
    throw CoverageError("zero list ends at " + (last_ordinate_.empty() ? std::string("<empty>") : last_ordinate_) +
                        ", below T0 = " + T0_text_ + "; the summary would undercount");
  }
  PrecisionScope scope(kSumBits);
  ZeroSummary s;
  s.T0 = T0_text_;
  s.N0 = count_;
  s.S0 = count_ == 0 ? std::string("0") : sum_.upper_string(kSumDigits);
  s.max_ordinate = last_ordinate_;
  return s;
}

void ZeroSummarizer::save_checkpoint(const std::filesystem::path& path) const {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp.string());
    out << "# zero-sum checkpoint\n"
        << "T0 = " << T0_text_ << "\n"
        << "count = " << count_ << "\n"
        << "sum_upper = " << sum_.upper_string(kSumDigits) << "\n"
        << "last_ordinate = " << (last_ordinate_.empty() ? "none" : last_ordinate_) << "\n"
        << "lines_consumed = " << lines_consumed_ << "\n"
        << "covered = " << (covered_ ? 1 : 0) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

ZeroSummarizer ZeroSummarizer::load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open checkpoint");
  std::string line;
  std::size_t lineno = 0;
  std::string T0, count, sum, last, lines, covered;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(path.string(), lineno, "expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "T0") T0 = value;
    else if (key == "count") count = value;
    else if (key == "sum_upper") sum = value;
    else if (key == "last_ordinate") last = value;
    else if (key == "lines_consumed") lines = value;
    else if (key == "covered") covered = value;
    else throw ParseError(path.string(), lineno, "unknown key '" + key + "'");
  }
  if (T0.empty() || count.empty() || sum.empty() || last.empty() || lines.empty() || covered.empty()) {
    throw ParseError(path.string(), 0, "incomplete checkpoint");
  }
  ZeroSummarizer s(T0);
  try {
    s.count_ = std::stoull(count);
    s.lines_consumed_ = std::stoull(lines);
  } catch (const std::exception&) {
    throw ParseError(path.string(), 0, "bad integer field");
  }
  {
    PrecisionScope scope(kSumBits);
    try {
      s.sum_ = upper_point(Interval::from_decimal(sum));
      if (last != "none") s.last_ = Interval::from_decimal(last);
    } catch (const std::invalid_argument&) {
      throw ParseError(path.string(), 0, "bad decimal field");
    }
  }
  s.last_ordinate_ = last == "none" ? std::string() : last;
  s.covered_ = covered == "1";
  return s;
}

ZeroSummary summarize_file(const std::filesystem::path& path, const std::string& T0,
                           const std::optional<std::filesystem::path>& checkpoint,
                           std::size_t checkpoint_every) {
  ZeroSummarizer acc(T0);
  if (checkpoint && std::filesystem::exists(*checkpoint)) {
    acc = ZeroSummarizer::load_checkpoint(*checkpoint);
    if (acc.T0() != T0) {
      throw DomainError("checkpoint " + checkpoint->string() + " was written for T0 = " + acc.T0());
    }
  }
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open zero list");
  std::string line;
  std::size_t lineno = 0;
  std::size_t since_checkpoint = 0;
  const std::size_t skip = acc.lines_consumed();
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno <= skip) continue;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) {
      acc.mark_line(lineno);
      continue;
    }
    acc.add(line, lineno, path.string());
    if (checkpoint && ++since_checkpoint >= checkpoint_every) {
      acc.save_checkpoint(*checkpoint);
      since_checkpoint = 0;
    }
  }
  if (checkpoint) acc.save_checkpoint(*checkpoint);
  return acc.finish();
}

}  // namespace primecert
