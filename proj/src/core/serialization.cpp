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

#include "mmbox/core/serialization.hpp"

#include <fstream>
#include <string>

#include "mmbox/error.hpp"

namespace mmbox {

nlohmann::json space_to_json(const FiniteMMSpace& space) {
  nlohmann::json j;
  j["version"] = kSpaceFormatVersion;
  j["weights"] = std::vector<double>(space.weights().begin(), space.weights().end());
  j["dist"] = space.dist().to_rows();
  if (!space.label().empty()) j["label"] = space.label();
  j["is_metric"] = space.is_metric();
  if (const auto& p = space.provenance()) {
    j["provenance"] = {{"kind", p->kind},
                       {"n", p->n},
                       {"N", p->sample_count},
                       {"seed", p->seed},
                       {"metric", p->metric}};
  }
  return j;
}

FiniteMMSpace space_from_json(const nlohmann::json& j) {
  try {
    const int version = j.at("version").get<int>();
    if (version != kSpaceFormatVersion) {
      throw DomainError("unsupported space format version " + std::to_string(version));
    }
    auto weights = j.at("weights").get<std::vector<double>>();
    auto rows = j.at("dist").get<std::vector<std::vector<double>>>();
    SpaceOptions opts;
    opts.label = j.value("label", std::string{});
    opts.is_metric = j.value("is_metric", false);
    if (j.contains("provenance")) {
      const auto& p = j.at("provenance");
      opts.provenance = Provenance{p.at("kind").get<std::string>(), p.at("n").get<int>(),
                                   p.at("N").get<std::size_t>(), p.at("seed").get<std::uint64_t>(),
                                   p.value("metric", std::string{})};
    }
    return FiniteMMSpace(std::move(weights), DistanceMatrix::from_rows(rows), std::move(opts));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed space document: ") + e.what());
  }
}

FiniteMMSpace read_space(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError("cannot parse " + path.string() + ": " + e.what());
  }
  return space_from_json(j);
}

void write_space(const FiniteMMSpace& space, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << space_to_json(space).dump() << '\n';
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace mmbox
