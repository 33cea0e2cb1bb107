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
#include <cstdint>
#include <string>
#include <vector>

#include "output.hpp"

namespace mmbox::cli {

struct Globals {
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::string out;
  std::string format = "json";
  std::string config;
};

struct BoundsArgs {
  std::string kind;
  std::vector<int> m;
  std::vector<int> n;
  double C1 = 2.0;
  double C2 = 1.0;
  double C3 = 1.0;
  std::vector<int> k;
};

struct BoxArgs {
  std::string x;
  std::string y;
  std::string x_sample;
  std::string y_sample;
  double lambda = 1.0;
  std::string mode = "seeded-restart";
  std::size_t restarts = 8;
  int refinement = 1;
  std::size_t max_evaluations = 4000;
  bool assert_uniform = false;
  std::string codim1;
  std::vector<int> n;
  std::size_t N = 1000;
  double eps = 0.3;
  std::size_t seeds = 5;
};

struct ConcentrationArgs {
  std::string kind = "sphere";
  std::vector<int> n;
  std::size_t N = 1000;
  double kappa = 0.1;
  std::vector<std::uint64_t> seeds;
  bool exhaustive = false;
  std::string metric = "frobenius";
  double tail_eps = 0.1;
  std::size_t ascent = 200;
};

struct CertifyArgs {
  std::string x;
  std::string y;
  double a = 0.0;
  double c = 0.0;
  double uniformity_tol = 0.05;
};

struct FactsArgs {
  std::string kind;
  std::vector<int> n;
};

struct CommandResult {
  Output output;
  int exit_code = 0;
};

CommandResult cmd_bounds(const Globals& g, const BoundsArgs& a);
CommandResult cmd_box(const Globals& g, const BoxArgs& a);
CommandResult cmd_concentration(const Globals& g, const ConcentrationArgs& a);
CommandResult cmd_certify(const Globals& g, const CertifyArgs& a);
CommandResult cmd_facts(const Globals& g, const FactsArgs& a);

}  // namespace mmbox::cli
