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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "primecert/interval.hpp"

namespace primecert {

/// Ascending ordinates of nontrivial zeta zeros, as read from a text file.
struct ZeroList {
  std::vector<std::string> ordinates;
  std::string source_label;
  std::vector<std::string> warnings;

  std::size_t size() const { return ordinates.size(); }
  bool empty() const { return ordinates.empty(); }
};

/// Explicit-sum inputs for a cutoff T0.
struct ZeroSummary {
  std::string T0;
  std::uint64_t N0 = 0;
  std::string S0;            // upper bound on sum_{0 < gamma <= T0} 1/gamma
  std::string max_ordinate;  // largest ordinate seen
};

/// Reads one ordinate per line (blank lines and '#' comments skipped).
/// Throws ParseError with the line number on malformed or non-ascending input.
ZeroList ingest(const std::filesystem::path& path);
ZeroList ingest_text(const std::string& text, const std::string& label = "<string>");

/// N0 and an upward-rounded S0 for the ordinates <= T0.
/// Throws CoverageError if the list does not reach T0.
ZeroSummary summarize(const ZeroList& zeros, const std::string& T0);

/// Enclosure of sum_{U < gamma <= V} gamma^-(m+1); hi() is the upward-rounded sum.
Interval oracle_sum_inverse_power(const ZeroList& zeros, int m, const std::string& U, const std::string& V);

/// Constant-memory summarizer for zero lists too large to hold in memory.
/// Partial state can be checkpointed and resumed.
class ZeroSummarizer {
 public:
  explicit ZeroSummarizer(std::string T0);

  /// Feeds the next ordinate; `source` and `line` are used in error messages.
  void add(const std::string& ordinate, std::size_t line, const std::string& source = "zeros");
  const std::string& T0() const { return T0_text_; }
  /// Number of input lines already consumed (for resuming).
  std::size_t lines_consumed() const { return lines_consumed_; }
  void mark_line(std::size_t line) { lines_consumed_ = line; }
  ZeroSummary finish() const;

  void save_checkpoint(const std::filesystem::path& path) const;
  static ZeroSummarizer load_checkpoint(const std::filesystem::path& path);

 private:
  std::string T0_text_;
  Interval T0_;
  std::uint64_t count_ = 0;
  Interval sum_;
  std::string last_ordinate_;
  Interval last_;
  std::size_t lines_consumed_ = 0;
  bool covered_ = false;
};

/// Streams `path` through a ZeroSummarizer, writing a checkpoint every
/// `checkpoint_every` ordinates when a checkpoint path is given, and resuming
/// from that checkpoint if it already exists.
ZeroSummary summarize_file(const std::filesystem::path& path, const std::string& T0,
                           const std::optional<std::filesystem::path>& checkpoint = std::nullopt,
                           std::size_t checkpoint_every = 1'000'000);

}  // namespace primecert
