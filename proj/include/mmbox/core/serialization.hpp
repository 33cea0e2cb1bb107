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

#include <filesystem>

#include <json.hpp>

#include "mmbox/core/mm_space.hpp"
#include "mmbox/error.hpp"

namespace mmbox {

inline constexpr int kSpaceFormatVersion = 1;

/// {"version":1, "weights":[...], "dist":[[...]]} plus optional "label",
/// "is_metric" and a "provenance" block for sampled spaces. The matrix is
/// stored in full.
nlohmann::json space_to_json(const FiniteMMSpace& space);
FiniteMMSpace space_from_json(const nlohmann::json& j);

/// File helpers; I/O failures raise IoError.
FiniteMMSpace read_space(const std::filesystem::path& path);
void write_space(const FiniteMMSpace& space, const std::filesystem::path& path);

}  // namespace mmbox
