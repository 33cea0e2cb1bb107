// Copyright 2026 The mmbox Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace mmbox {

/// Two-sided bound on a box (or related) distance together with what
/// produced each side. Witnesses are free-form JSON so certificates can be
/// replayed from a serialized report.
struct BoundReport {
  double lower = 0.0;
  double upper = 0.0;
  nlohmann::json lower_witness = nlohmann::json::object();
  nlohmann::json upper_witness = nlohmann::json::object();
  std::vector<std::string> methods;
  /// Retained atoms (or plan cells) of the subset realizing `upper`.
  std::vector<std::size_t> retained;

  /// Adds `term` to both sides (mass-normalization shift).
  void shift(double term) {
    lower += term;
    upper += term;
  }
};

nlohmann::json to_json(const BoundReport& report);
BoundReport bound_report_from_json(const nlohmann::json& j);

}  // namespace mmbox
