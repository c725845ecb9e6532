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

#include <gtest/gtest.h>

#include <cstdlib>

#include "primecert/published.hpp"

namespace pc = primecert;

TEST(Serialize, CertificateFieldsAreStrings) {
  pc::Certifier c(pc::default_constants());
  const auto& row = pc::published_pairs()[2];
  auto j = pc::to_json(c.certify(row.x0, row.params));
  EXPECT_EQ(j["x0"], "log 46");
  EXPECT_TRUE(j["delta_cap"].is_string());
  EXPECT_EQ(j["delta_cap_5"], "2.9730e12");
  EXPECT_TRUE(j["margin"].is_string());
  EXPECT_EQ(j["params"]["delta"], "2.24285e-13");
  EXPECT_EQ(j["precision_bits"], 256);
  EXPECT_EQ(j["norm_mode"], "exact");
  EXPECT_EQ(j["constants_fingerprint"], c.fingerprint());
  for (const char* key : {"B0", "B1", "B2", "B3_sigma0", "B3_one_minus_sigma0", "B41", "B42", "trivial_term",
                          "omega_term", "E_term"}) {
    EXPECT_TRUE(j["breakdown"][key]["contribution"]["upper"].is_string()) << key;
  }
}

TEST(Serialize, SerializationIsByteStable) {
  pc::Certifier c(pc::default_constants());
  const auto& row = pc::published_pairs()[0];
  std::string a = pc::to_json(c.certify(row.x0, row.params)).dump();
  pc::Certifier d(pc::default_constants());
  std::string b = pc::to_json(d.certify(row.x0, row.params)).dump();
  EXPECT_EQ(a, b);
}

TEST(Serialize, TimestampHonoursSourceDateEpoch) {
  setenv("SOURCE_DATE_EPOCH", "0", 1);
  EXPECT_EQ(pc::manifest_timestamp(), "1970-01-01T00:00:00Z");
  setenv("SOURCE_DATE_EPOCH", "1700000000", 1);
  EXPECT_EQ(pc::manifest_timestamp(), "2023-11-14T22:13:20Z");
  unsetenv("SOURCE_DATE_EPOCH");
}

TEST(Serialize, ManifestKeys) {
  pc::RunManifest m{"certify", {{"log_x0", "46"}}, "abc", 256, "1970-01-01T00:00:00Z", pc::tool_version()};
  auto j = pc::to_json(m);
  EXPECT_EQ(j["command"], "certify");
  EXPECT_EQ(j["inputs"]["log_x0"], "46");
  EXPECT_EQ(j["precision_bits"], 256);
  EXPECT_FALSE(j["tool_version"].get<std::string>().empty());
}

TEST(Serialize, ZeroSummaryRoundTrip) {
  pc::ZeroSummary s{"20", 1, "7.07477e-2", "25.010858"};
  pc::Json wrapped{{"manifest", pc::Json::object()}, {"summary", pc::to_json(s)}};
  auto back = pc::zero_summary_from_json(wrapped);
  EXPECT_EQ(back.T0, "20");
  EXPECT_EQ(back.N0, 1u);
  EXPECT_EQ(back.S0, s.S0);
  EXPECT_THROW(pc::zero_summary_from_json(pc::Json{{"T0", "1"}}), pc::ParseError);
}

TEST(Serialize, TraceHasHeaderAndRows) {
  pc::SearchResult r;
  r.trace.push_back({0, 2, 1, "1.9e7", "1e-3"});
  r.trace.push_back({1, 2, 1, "2.0e7", "2e-3"});
  std::string tsv = pc::trace_tsv(r);
  EXPECT_EQ(tsv, "generation\tm\tn\tbest_delta\tbest_margin\n0\t2\t1\t1.9e7\t1e-3\n1\t2\t1\t2.0e7\t2e-3\n");
}
