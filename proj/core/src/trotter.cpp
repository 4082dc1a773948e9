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

#include "xyphase/trotter.hpp"

#include <cmath>

#include "xyphase/errors.hpp"

namespace xyphase {

const char* to_string(Backend b) {
  return b == Backend::ExactExponential ? "exact-exponential" : "gate-level";
}

Backend backend_from_string(const std::string& name) {
  if (name == "exact-exponential" || name == "exact") {
    return Backend::ExactExponential;
  }
  if (name == "gate-level" || name == "gate") return Backend::GateLevel;
  throw ValidationError("unknown backend '" + name +
                        "' (expected exact-exponential or gate-level)");
}

void NoiseConfig::validate() const {
  if (!(depolarizing_probability >= 0.0 && depolarizing_probability < 1.0)) {
    throw ValidationError("depolarizing probability must lie in [0, 1)");
  }
}

SplitPropagator::SplitPropagator(const HamiltonianSpec& spec, double dt,
                                 int max_sites)
    : sites_(spec.sites), bx_(spec.bx), dt_(dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ValidationError("Trotter step dt must be positive");
  }
  const DenseOperator hxy = to_dense(xy_terms(spec), spec.sites, max_sites);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hxy.matrix().real());
  if (es.info() != Eigen::Success) {
    throw ComputationError("H_XY eigendecomposition failed");
  }
  const Eigen::VectorXcd phases =
      (es.eigenvalues() * Complex{0.0, -dt}).array().exp();
  const Eigen::MatrixXcd v = es.eigenvectors().cast<Complex>();
  xy_ = v * phases.asDiagonal() * v.transpose();
  x_rot_ = x_rotation(spec.bx * dt / 2.0);
  sz_ = total_sz_diagonal(spec.sites);
}

void SplitPropagator::apply_xy(StateVector& state) const {
  state.apply_dense(xy_);
}

void SplitPropagator::apply_transverse(StateVector& state) const {
  if (bx_ == 0.0) return;
  for (int i = 0; i < sites_; ++i) state.apply_single(i, x_rot_);
}

void SplitPropagator::apply_longitudinal(StateVector& state, double bz) const {
  // exp(i Bz dt S^z) on each basis state.
  Eigen::VectorXcd phases(sz_.size());
  for (Eigen::Index s = 0; s < sz_.size(); ++s) {
    phases(s) = std::polar(1.0, bz * dt_ * sz_(s));
  }
  state.apply_diagonal(phases);
}

void SplitPropagator::step(StateVector& state, double bz) const {
  apply_xy(state);
  apply_transverse(state);
  apply_longitudinal(state, bz);
}

StateVector trotter_step_exact(const StateVector& state,
                               const HamiltonianSpec& spec, double dt) {
  if (state.sites() != spec.sites) {
    throw ValidationError("state and Hamiltonian disagree on site count");
  }
  const SplitPropagator prop(spec, dt);
  StateVector out = state;
  prop.step(out, spec.bz);
  return out;
}

std::vector<GateOp> trotter_step_circuit(const HamiltonianSpec& spec,
                                         double dt) {
  spec.validate();
  std::vector<GateOp> gates;
  for (const auto& bond : chain_bonds(spec.sites, spec.periodic)) {
    for (auto& g : build_xy_gate_circuit(bond, dt, spec.coupling)) {
      gates.push_back(std::move(g));
    }
  }
  for (auto& g : transverse_field_gates(spec.sites, spec.bx, dt)) {
    gates.push_back(std::move(g));
  }
  for (auto& g : longitudinal_field_gates(spec.sites, spec.bz, dt)) {
    gates.push_back(std::move(g));
  }
  return gates;
}

namespace {

void run_gates(StateVector& state, const std::vector<GateOp>& gates,
               const NoiseConfig* noise, CounterRng* rng) {
  for (const auto& g : gates) {
    if (g.kind == GateKind::Cnot) {
      state.apply_cnot(g.targets[0], g.targets[1]);
      if (noise && rng) apply_noise(state, g, *noise, *rng);
    } else {
      state.apply_single(g.targets[0], g.matrix);
    }
  }
}

Eigen::Matrix2cd pauli(int which) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  switch (which) {
    case 0:  // X
      m(0, 1) = m(1, 0) = 1.0;
      break;
    case 1:  // Y
      m(0, 1) = Complex{0.0, -1.0};
      m(1, 0) = Complex{0.0, 1.0};
      break;
    default:  // Z
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

}  // namespace

StateVector trotter_step_gates(const StateVector& state,
                               const HamiltonianSpec& spec, double dt,
                               const NoiseConfig* noise, CounterRng* rng) {
  if (state.sites() != spec.sites) {
    throw ValidationError("state and Hamiltonian disagree on site count");
  }
  StateVector out = state;
  run_gates(out, trotter_step_circuit(spec, dt), noise, rng);
  return out;
}

void apply_noise(StateVector& state, const GateOp& gate,
                 const NoiseConfig& config, CounterRng& rng) {
  if (!gate.is_two_qubit() || config.depolarizing_probability == 0.0) return;
  if (rng.uniform() >= config.depolarizing_probability) return;
  const int site = gate.targets[rng.below(gate.targets.size())];
  state.apply_single(site, pauli(static_cast<int>(rng.below(3))));
}

MagnetizationTrace evolve(const StateVector& initial,
                          const RampSchedule& schedule,
                          const HamiltonianSpec& spec,
                          const EvolveOptions& options,
                          StateVector* final_state) {
  spec.validate();
  if (initial.sites() != spec.sites) {
    throw ValidationError("initial state has " +
                          std::to_string(initial.sites()) +
                          " sites but the Hamiltonian has " +
                          std::to_string(spec.sites));
  }
  if (schedule.steps.size() < 2) {
    throw ValidationError("schedule needs at least one step");
  }
  if (schedule.bx != spec.bx) {
    throw ValidationError("schedule was built for a different Bx");
  }
  if (initial.basis_index() < 0) {
    throw ValidationError("initial state must be a computational basis state");
  }
  if (options.noise) {
    options.noise->validate();
    if (options.backend != Backend::GateLevel) {
      throw ValidationError("noise requires the gate-level backend");
    }
  }

  MagnetizationTrace trace;
  trace.meta.sites = spec.sites;
  trace.meta.bx = spec.bx;
  trace.meta.gamma = schedule.gamma;
  trace.meta.n_steps = schedule.n_steps();
  trace.meta.backend = to_string(options.backend);
  trace.meta.shots = options.shots;
  trace.meta.seed = options.seed;

  const double dt = schedule.dt;
  StateVector state = initial;
  auto record = [&](int k) {
    const auto& s = schedule.steps[static_cast<std::size_t>(k)];
    trace.entries.push_back(
        {k, s.t, s.bz,
         measure_magnetization(state, options.shots, options.seed,
                               static_cast<std::uint64_t>(k))});
  };
  record(0);

  if (options.backend == Backend::ExactExponential) {
    const SplitPropagator prop(spec, dt, options.max_sites);
    for (int k = 1; k <= schedule.n_steps(); ++k) {
      prop.step(state, schedule.steps[k - 1].bz);
      record(k);
    }
  } else {
    std::vector<GateOp> xy_and_bx;
    for (const auto& bond : chain_bonds(spec.sites, spec.periodic)) {
      for (auto& g : build_xy_gate_circuit(bond, dt, spec.coupling)) {
        xy_and_bx.push_back(std::move(g));
      }
    }
    for (auto& g : transverse_field_gates(spec.sites, spec.bx, dt)) {
      xy_and_bx.push_back(std::move(g));
    }
    const NoiseConfig* noise = options.noise ? &*options.noise : nullptr;
    for (int k = 1; k <= schedule.n_steps(); ++k) {
      CounterRng rng(noise ? noise->seed : 0, static_cast<std::uint64_t>(k),
                     0x6e6f697365ULL);
      run_gates(state, xy_and_bx, noise, &rng);
      run_gates(state,
                longitudinal_field_gates(spec.sites, schedule.steps[k - 1].bz,
                                         dt),
                nullptr, nullptr);
      record(k);
    }
  }

  if (final_state) *final_state = std::move(state);
  return trace;
}

namespace {

std::uint64_t derive_seed(std::uint64_t seed, int trajectory) {
  CounterRng rng(seed, static_cast<std::uint64_t>(trajectory), 0x7472616aULL);
  return rng.next_u64();
}

}  // namespace

MagnetizationTrace evolve_averaged(const StateVector& initial,
                                   const RampSchedule& schedule,
                                   const HamiltonianSpec& spec,
                                   const EvolveOptions& options,
                                   int trajectories) {
  if (trajectories < 1) {
    throw ValidationError("need at least one trajectory");
  }
  const bool stochastic = options.noise.has_value() || options.shots > 0;
  if (!stochastic || trajectories == 1) {
    return evolve(initial, schedule, spec, options);
  }
  MagnetizationTrace mean;
  for (int j = 0; j < trajectories; ++j) {
    EvolveOptions run = options;
    run.seed = derive_seed(options.seed, j);
    if (run.noise) run.noise->seed = derive_seed(options.noise->seed, j);
    const MagnetizationTrace tr = evolve(initial, schedule, spec, run);
    if (j == 0) {
      mean = tr;
      mean.meta.seed = options.seed;
      continue;
    }
    for (std::size_t k = 0; k < tr.entries.size(); ++k) {
      mean.entries[k].m += tr.entries[k].m;
    }
  }
  for (auto& e : mean.entries) e.m /= trajectories;
  return mean;
}

}  // namespace xyphase
