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
#include <vector>

#include "primecert/certifier.hpp"

namespace primecert {

/// A published admissible (x0, Delta) pair with its parameters.
struct PublishedRow {
  StartPoint x0;
  SearchParams params;
  std::string Delta;  // as printed, 5 significant digits
};

/// The twelve admissible pairs for log x0 from log(4e18) to 150.
const std::vector<PublishedRow>& published_pairs();

/// Larger admissible pairs found without published parameters.
struct PublishedTarget {
  std::string log_x0;
  std::string Delta;
};
const std::vector<PublishedTarget>& published_targets();

}  // namespace primecert
