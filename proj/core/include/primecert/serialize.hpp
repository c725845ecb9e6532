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

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "primecert/certifier.hpp"
#include "primecert/optimizer.hpp"
#include "primecert/zero_data.hpp"

namespace primecert {

using Json = nlohmann::ordered_json;

/// Provenance block embedded under "manifest" in every JSON output.
struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string constants_fingerprint;
  int precision_bits = 0;
  std::string timestamp;
  std::string tool_version;
};

std::string tool_version();

/// ISO-8601 UTC; honours SOURCE_DATE_EPOCH so reruns are byte-identical.
std::string manifest_timestamp();

/// Significant digits used for interval endpoints in JSON and CSV.
inline constexpr int kOutputDigits = 20;

Json to_json(const RunManifest& m);
Json to_json(const Interval& x);
Json to_json(const SearchParams& p);
Json to_json(const ConstraintBreakdown& b);
Json to_json(const Certificate& c);
Json to_json(const ZeroSummary& s);
/// Best certificate and evaluation count; the trace goes to trace_tsv.
Json to_json(const SearchResult& r);

/// generation, m, n, best_delta, best_margin with a header row.
std::string trace_tsv(const SearchResult& r);

/// Reads a ZeroSummary written by to_json (with or without a manifest).
ZeroSummary zero_summary_from_json(const Json& j);

}  // namespace primecert
