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

#include "primecert/published.hpp"

namespace primecert {
namespace {

PublishedRow row(StartPoint x0, int m, int n, const char* delta, const char* a, const char* T1, const char* Delta) {
  SearchParams p;
  p.m = m;
  p.n = n;
  p.delta = delta;
  p.a = a;
  p.T1 = T1;
  return {std::move(x0), p, Delta};
}

}  // namespace

const std::vector<PublishedRow>& published_pairs() {
  static const std::vector<PublishedRow> rows = {
      row(StartPoint::from_value("4e18"), 2, 47, "1.39801e-12", "4.71958e-4", "1.04538e8", "4.7716e11"),
      row(StartPoint::from_log("43"), 2, 47, "1.25109e-12", "7.18155e-4", "1.04538e8", "5.3337e11"),
      row(StartPoint::from_log("46"), 2, 55, "2.24285e-13", "1.68957e-4", "1.04538e8", "2.9730e12"),
      row(StartPoint::from_log("50"), 2, 61, "2.89470e-14", "5.18010e-4", "1.04538e8", "2.3046e13"),
      row(StartPoint::from_log("55"), 2, 85, "2.36015e-15", "3.22142e-4", "1.04538e8", "2.8258e14"),
      row(StartPoint::from_log("60"), 2, 97, "1.93623e-16", "2.68169e-4", "1.04538e8", "3.4443e15"),
      row(StartPoint::from_log("75"), 2, 201, "1.16349e-19", "1.32872e-4", "1.99909e12", "5.7309e18"),
      row(StartPoint::from_log("90"), 2, 465, "6.51627e-23", "5.99304e-4", "6.63318e11", "1.0238e22"),
      row(StartPoint::from_log("105"), 2, 609, "3.68107e-26", "4.71942e-4", "3.00017e12", "1.8122e25"),
      row(StartPoint::from_log("120"), 2, 885, "4.26161e-29", "6.99513e-4", "8.47291e11", "1.5658e28"),
      row(StartPoint::from_log("135"), 3, 1029, "2.35880e-32", "5.14483e-4", "3.00017e12", "3.1820e31"),
      row(StartPoint::from_log("150"), 2, 1171, "7.03676e-36", "3.08515e-4", "1.90772e12", "9.4779e34"),
  };
  return rows;
}

const std::vector<PublishedTarget>& published_targets() {
  static const std::vector<PublishedTarget> targets = {{"300", "4.4893e67"}, {"600", "6.0664e132"}};
  return targets;
}

}  // namespace primecert
