// Copyright 2026 The xyphase Authors
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

// Sweep configuration. The on-disk form is a JSON object; all physical
// quantities are in units of J.
//
//   {
//     "L": 2, "J": 1.0, "gamma": 1.5, "n_steps": 20,
//     "Bx_list": [0.02, 0.03, 0.04, 0.05],
//     "Bz_initial": 1.0, "Bz_final": 0.0,
//     "initial_state": "all-up", "backend": "exact-exponential",
//     "shots": 0, "seed": 7, "fit_model": "quartic-even",
//     "output_dir": "out/two_site"
//   }
//
// Optional keys: periodic, noise {p, seed, trajectories}, target_m,
// crossing_window [lo, hi], scale_endpoints, quadrature_intervals,
// max_sites.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "xyphase/errors.hpp"
#include "xyphase/extract.hpp"
#include "xyphase/spin_model.hpp"
#include "xyphase/trotter.hpp"

namespace xyphase {

/// Validation failure tied to a line of the config text (0 when unknown).
class ConfigError : public ValidationError {
 public:
  ConfigError(const std::string& source, int line, const std::string& message);

  const std::string& source() const { return source_; }
  int line() const { return line_; }
  const std::string& message() const { return message_; }

 private:
  std::string source_;
  int line_;
  std::string message_;
};

enum class InitialState { AllUp, AllDown };

const char* to_string(InitialState s);
InitialState initial_state_from_string(const std::string& name);

struct NoiseSettings {
  double probability = 0.0;
  std::uint64_t seed = 0;
  int trajectories = 1;
};

struct SweepConfig {
  int sites = 2;
  double coupling = 1.0;
  bool periodic = true;
  double gamma = 1.0;
  int n_steps = 1;
  std::vector<double> bx_list;
  double bz_initial = 1.0;
  double bz_final = 0.0;
  InitialState initial_state = InitialState::AllUp;
  Backend backend = Backend::ExactExponential;
  int shots = 0;
  std::optional<NoiseSettings> noise;
  std::uint64_t seed = 0;
  std::string output_dir = "out";
  FitModel fit_model = FitModel::QuarticEven;
  std::optional<double> target_m;
  std::optional<CrossingWindow> crossing_window;
  bool scale_endpoints = false;
  int quadrature_intervals = 1000;
  int max_sites = kDefaultMaxSites;

  /// Throws ValidationError on the first violated invariant.
  void validate() const;

  HamiltonianSpec hamiltonian(double bx) const;
  double initial_magnetization() const;
  /// target_m, or the midpoint between the initial m and its neighbor.
  double resolved_target_m() const;
};

/// Parses and validates. Diagnostics carry `source` and the offending line.
SweepConfig parse_sweep_config(const std::string& text,
                               const std::string& source = "<config>");

SweepConfig load_sweep_config(const std::filesystem::path& path);

/// Pretty-printed JSON that parse_sweep_config reads back to the same values.
std::string sweep_config_to_json(const SweepConfig& config);

}  // namespace xyphase
