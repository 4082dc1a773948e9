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

// First-order Trotter evolution through a ramp. Every step applies, in this
// order,
//
//   exp(-i H_XY dt), then exp(-i H_Bx dt), then exp(-i H_Bz(t) dt),
//
// with Bz taken at the start of the step. The exact-exponential backend
// exponentiates H_XY as a whole; the gate-level backend applies the
// two-CNOT bond circuit bond by bond, (0,1), (1,2), ..., then (L-1,0).

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "xyphase/gates.hpp"
#include "xyphase/ramp.hpp"
#include "xyphase/spin_model.hpp"
#include "xyphase/state_vector.hpp"
#include "xyphase/trace.hpp"

namespace xyphase {

enum class Backend { ExactExponential, GateLevel };

const char* to_string(Backend b);
/// Accepts "exact-exponential"/"exact" and "gate-level"/"gate".
Backend backend_from_string(const std::string& name);

struct NoiseConfig {
  double depolarizing_probability = 0.0;  // per two-qubit gate
  std::uint64_t seed = 0;

  void validate() const;
};

/// Exact-exponential step propagator for a fixed (spec, dt). The XY factor
/// is built once from the eigendecomposition of H_XY; the field factors are
/// products of single-site rotations.
class SplitPropagator {
 public:
  SplitPropagator(const HamiltonianSpec& spec, double dt,
                  int max_sites = kDefaultMaxSites);

  double dt() const { return dt_; }
  const Eigen::MatrixXcd& xy_factor() const { return xy_; }

  void apply_xy(StateVector& state) const;
  void apply_transverse(StateVector& state) const;
  void apply_longitudinal(StateVector& state, double bz) const;
  void step(StateVector& state, double bz) const;

 private:
  int sites_;
  double bx_;
  double dt_;
  Eigen::MatrixXcd xy_;
  Eigen::Matrix2cd x_rot_;
  Eigen::VectorXd sz_;
};

/// One exact-exponential Trotter step at spec.bz.
StateVector trotter_step_exact(const StateVector& state,
                               const HamiltonianSpec& spec, double dt);

/// One gate-level Trotter step at spec.bz. With noise, `rng` drives the
/// stochastic Pauli insertions.
StateVector trotter_step_gates(const StateVector& state,
                               const HamiltonianSpec& spec, double dt,
                               const NoiseConfig* noise = nullptr,
                               CounterRng* rng = nullptr);

/// Gate list of one gate-level Trotter step.
std::vector<GateOp> trotter_step_circuit(const HamiltonianSpec& spec,
                                         double dt);

/// After a two-qubit gate, with probability p applies a uniformly chosen
/// non-identity Pauli to one uniformly chosen target of the gate. Averaged
/// over draws this is a depolarizing channel on that gate.
void apply_noise(StateVector& state, const GateOp& gate,
                 const NoiseConfig& config, CounterRng& rng);

struct EvolveOptions {
  Backend backend = Backend::ExactExponential;
  int shots = 0;
  std::uint64_t seed = 0;
  std::optional<NoiseConfig> noise;
  int max_sites = kDefaultMaxSites;
};

/// Runs the schedule from a computational basis state and records
/// <S^z_total> before the first step and after every step. Entry k carries
/// the ramp sample (t_k, Bz_k) reached after k steps.
MagnetizationTrace evolve(const StateVector& initial,
                          const RampSchedule& schedule,
                          const HamiltonianSpec& spec,
                          const EvolveOptions& options = {},
                          StateVector* final_state = nullptr);

/// Mean of `trajectories` noisy runs; trajectory j uses noise seed and
/// measurement stream derived from (seed, j). Without noise this is one run.
MagnetizationTrace evolve_averaged(const StateVector& initial,
                                   const RampSchedule& schedule,
                                   const HamiltonianSpec& spec,
                                   const EvolveOptions& options,
                                   int trajectories);

}  // namespace xyphase
