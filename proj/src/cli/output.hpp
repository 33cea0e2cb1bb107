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

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace mmbox::cli {

using Value = std::variant<std::monostate, double, std::int64_t, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;
};

/// Result of one subcommand: the resolved configuration, one table, and
/// optional JSON-only detail.
struct Output {
  std::string command;
  std::map<std::string, std::string> config;
  Table table;
  nlohmann::json detail = nlohmann::json::object();
};

/// 17 significant digits, '.' decimal point,
/// independent of the locale.
std::string format_double(double v);

/// CSV: "# key=value" lines for the resolved config, then the header row
/// and the data rows. JSON: {"command", "config", "columns", "rows",
/// "detail"}.
void write_output(const Output& output, const std::string& format, std::ostream& os);

}  // namespace mmbox::cli
