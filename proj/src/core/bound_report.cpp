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

#include "mmbox/core/bound_report.hpp"

namespace mmbox {

nlohmann::json to_json(const BoundReport& report) {
  return {{"lower", report.lower},
          {"upper", report.upper},
          {"methods", report.methods},
          {"retained", report.retained},
          {"lower_witness", report.lower_witness},
          {"upper_witness", report.upper_witness}};
}

BoundReport bound_report_from_json(const nlohmann::json& j) {
  BoundReport r;
  r.lower = j.at("lower").get<double>();
  r.upper = j.at("upper").get<double>();
  r.methods = j.value("methods", std::vector<std::string>{});
  r.retained = j.value("retained", std::vector<std::size_t>{});
  r.lower_witness = j.value("lower_witness", nlohmann::json::object());
  r.upper_witness = j.value("upper_witness", nlohmann::json::object());
  return r;
}

}  // namespace mmbox
