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

#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "xyphase/spin_model.hpp"

namespace xyphase {

/// Counter-based generator: the stream is a pure function of
/// (seed, stream, substream), so a sample drawn at step n never depends on
/// how many samples earlier steps consumed.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream,
             std::uint64_t substream = 0);

  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

class StateVector {
 public:
  StateVector() = default;
  StateVector(int sites, Eigen::VectorXcd amplitudes);

  /// Computational basis state; see spin_model.hpp for the bit convention.
  static StateVector basis(int sites, std::uint64_t index);
  static StateVector all_up(int sites) { return basis(sites, 0); }
  static StateVector all_down(int sites);

  int sites() const { return sites_; }
  Eigen::Index dimension() const { return amps_.size(); }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Eigen::VectorXcd& amplitudes() { return amps_; }

  double norm() const { return amps_.norm(); }
  void normalize();
  /// Index of the basis state when this is one (up to phase), else -1.
  std::int64_t basis_index(double tolerance = 1e-12) const;

  void apply_single(int site, const Eigen::Matrix2cd& u);
  void apply_cnot(int control, int target);
  void apply_dense(const Eigen::MatrixXcd& u);
  /// Multiplies amplitude s by phases(s).
  void apply_diagonal(const Eigen::VectorXcd& phases);

  /// Exact <S^z_total>.
  double magnetization() const;

 private:
  int sites_ = 0;
  Eigen::VectorXcd amps_;
};

/// |<a|b>|, insensitive to global phase.
double overlap(const StateVector& a, const StateVector& b);

/// min over global phase of ||a - e^{i phi} b||.
double phase_distance(const StateVector& a, const StateVector& b);

/// shots == 0 returns the exact expectation of S^z_total. Otherwise draws
/// `shots` Z-basis samples from the stream (seed, step) and returns the
/// sample mean of (up - down) / 2.
double measure_magnetization(const StateVector& state, int shots,
                             std::uint64_t seed, std::uint64_t step = 0);

}  // namespace xyphase
