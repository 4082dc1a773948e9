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

#include "xyphase/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <vector>

#include "xyphase/errors.hpp"

namespace xyphase {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream,
                       std::uint64_t substream)
    : key_(splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ substream)) {}

std::uint64_t CounterRng::next_u64() {
  return splitmix64(key_ ^ splitmix64(counter_++));
}

double CounterRng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t CounterRng::below(std::uint64_t n) {
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x = next_u64();
  while (x >= limit) x = next_u64();
  return x % n;
}

StateVector::StateVector(int sites, Eigen::VectorXcd amplitudes)
    : sites_(sites), amps_(std::move(amplitudes)) {
  if (sites < 1 || sites > 30) {
    throw ValidationError("state vector site count out of range");
  }
  if (amps_.size() != (Eigen::Index{1} << sites)) {
    throw ValidationError("state vector length must be 2^L");
  }
}

StateVector StateVector::basis(int sites, std::uint64_t index) {
  if (sites < 1 || sites > 30) {
    throw ValidationError("state vector site count out of range");
  }
  const Eigen::Index dim = Eigen::Index{1} << sites;
  if (index >= static_cast<std::uint64_t>(dim)) {
    throw ValidationError("basis index outside the Hilbert space");
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return StateVector(sites, std::move(v));
}

StateVector StateVector::all_down(int sites) {
  return basis(sites, (std::uint64_t{1} << sites) - 1);
}

void StateVector::normalize() {
  const double n = norm();
  if (n == 0.0) throw ComputationError("cannot normalize the zero vector");
  amps_ /= n;
}

std::int64_t StateVector::basis_index(double tolerance) const {
  Eigen::Index idx = 0;
  amps_.cwiseAbs().maxCoeff(&idx);
  if (std::abs(std::abs(amps_(idx)) - 1.0) > tolerance) return -1;
  return static_cast<std::int64_t>(idx);
}

void StateVector::apply_single(int site, const Eigen::Matrix2cd& u) {
  if (site < 0 || site >= sites_) throw ValidationError("gate site out of range");
  const Eigen::Index stride = Eigen::Index{1} << site;
  const Eigen::Index dim = amps_.size();
  for (Eigen::Index base = 0; base < dim; base += 2 * stride) {
    for (Eigen::Index off = 0; off < stride; ++off) {
      const Eigen::Index i0 = base + off;
      const Eigen::Index i1 = i0 + stride;
      const Complex a0 = amps_(i0);
      const Complex a1 = amps_(i1);
      amps_(i0) = u(0, 0) * a0 + u(0, 1) * a1;
      amps_(i1) = u(1, 0) * a0 + u(1, 1) * a1;
    }
  }
}

void StateVector::apply_cnot(int control, int target) {
  if (control < 0 || control >= sites_ || target < 0 || target >= sites_ ||
      control == target) {
    throw ValidationError("invalid CNOT sites");
  }
  // Control fires on |1>, which is spin down in this library's convention.
  const std::uint64_t cbit = std::uint64_t{1} << control;
  const std::uint64_t tbit = std::uint64_t{1} << target;
  const auto dim = static_cast<std::uint64_t>(amps_.size());
  for (std::uint64_t s = 0; s < dim; ++s) {
    if ((s & cbit) && !(s & tbit)) {
      std::swap(amps_(static_cast<Eigen::Index>(s)),
                amps_(static_cast<Eigen::Index>(s | tbit)));
    }
  }
}

void StateVector::apply_dense(const Eigen::MatrixXcd& u) {
  if (u.rows() != amps_.size() || u.cols() != amps_.size()) {
    throw ValidationError("dense operator dimension mismatch");
  }
  amps_ = u * amps_;
}

void StateVector::apply_diagonal(const Eigen::VectorXcd& phases) {
  if (phases.size() != amps_.size()) {
    throw ValidationError("diagonal operator dimension mismatch");
  }
  amps_ = amps_.cwiseProduct(phases);
}

double StateVector::magnetization() const {
  double m = 0.0;
  for (Eigen::Index s = 0; s < amps_.size(); ++s) {
    const int down = std::popcount(static_cast<std::uint64_t>(s));
    m += std::norm(amps_(s)) * 0.5 * (sites_ - 2 * down);
  }
  return m;
}

double overlap(const StateVector& a, const StateVector& b) {
  if (a.dimension() != b.dimension()) {
    throw ValidationError("overlap of states with different dimension");
  }
  return std::abs(a.amplitudes().dot(b.amplitudes()));
}

double phase_distance(const StateVector& a, const StateVector& b) {
  if (a.dimension() != b.dimension()) {
    throw ValidationError("distance between states with different dimension");
  }
  // Align the phase, then take the norm directly; the expanded form
  // |a|^2 + |b|^2 - 2|<b|a>| loses half the digits to cancellation.
  const Complex ip = b.amplitudes().dot(a.amplitudes());  // <b|a>
  const Complex phase = std::abs(ip) > 0.0 ? ip / std::abs(ip) : Complex{1.0};
  return (a.amplitudes() - phase * b.amplitudes()).norm();
}

double measure_magnetization(const StateVector& state, int shots,
                             std::uint64_t seed, std::uint64_t step) {
  if (shots < 0) throw ValidationError("shot count must be non-negative");
  if (shots == 0) return state.magnetization();

  const auto& amps = state.amplitudes();
  std::vector<double> cumulative(static_cast<std::size_t>(amps.size()));
  double acc = 0.0;
  for (Eigen::Index s = 0; s < amps.size(); ++s) {
    acc += std::norm(amps(s));
    cumulative[s] = acc;
  }
  CounterRng rng(seed, step);
  const int sites = state.sites();
  long long total_twice_m = 0;
  for (int shot = 0; shot < shots; ++shot) {
    const double u = rng.uniform() * acc;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    const auto s = static_cast<std::uint64_t>(it - cumulative.begin());
    total_twice_m += sites - 2 * std::popcount(s);
  }
  return 0.5 * static_cast<double>(total_twice_m) / shots;
}

}  // namespace xyphase
