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

// Isotropic XY chain in a longitudinal field Bz with a transverse
// symmetry-breaking field Bx:
//
//   H = -sum_<ij> (J/4)(X_i X_j + Y_i Y_j) - (Bz/2) sum_i Z_i - (Bx/2) sum_i X_i
//
// Basis convention used throughout the library: bit i of a basis index is
// site i, and a cleared bit means spin up (Z eigenvalue +1). Index 0 is the
// all-up state, index 2^L - 1 the all-down state.

#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace xyphase {

using Complex = std::complex<double>;

/// Sites supported by dense builders unless a caller raises the cap.
inline constexpr int kDefaultMaxSites = 14;

enum class PauliAxis { X, Y, Z };

char axis_name(PauliAxis axis);

struct PauliFactor {
  int site = 0;
  PauliAxis axis = PauliAxis::Z;

  friend bool operator==(const PauliFactor&, const PauliFactor&) = default;
};

/// coefficient * prod_k sigma^{axis_k}_{site_k}; sites are distinct.
struct PauliTerm {
  double coefficient = 0.0;
  std::vector<PauliFactor> factors;
};

struct HamiltonianSpec {
  int sites = 2;
  double coupling = 1.0;  // J
  double bz = 0.0;
  double bx = 0.0;
  bool periodic = true;

  /// Throws ValidationError unless sites >= 2 and all parameters are finite.
  void validate() const;
};

/// Nearest-neighbour bonds: (i, i+1) for i < L-1, plus (L-1, 0) when the
/// chain is periodic and L > 2. A two-site ring has a single bond.
std::vector<std::pair<int, int>> chain_bonds(int sites, bool periodic);

std::vector<PauliTerm> build_terms(const HamiltonianSpec& spec);

/// Terms restricted to one group; used by the split propagators.
std::vector<PauliTerm> xy_terms(const HamiltonianSpec& spec);
std::vector<PauliTerm> transverse_terms(const HamiltonianSpec& spec);
std::vector<PauliTerm> longitudinal_terms(const HamiltonianSpec& spec);

class DenseOperator {
 public:
  DenseOperator() = default;
  DenseOperator(int sites, Eigen::MatrixXcd matrix);

  int sites() const { return sites_; }
  Eigen::Index dimension() const { return matrix_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

  /// max |A - A^dagger| relative to max |A| (zero for the zero operator).
  double hermiticity_defect() const;
  bool is_hermitian(double tolerance = 1e-12) const;

 private:
  int sites_ = 0;
  Eigen::MatrixXcd matrix_;
};

/// Image of basis state `state` under one Pauli term: (new state, amplitude).
std::pair<std::size_t, Complex> apply_term(const PauliTerm& term,
                                           std::size_t state);

/// Sums the terms into a 2^L x 2^L matrix. Throws DimensionError when
/// sites > max_sites and ValidationError for out-of-range or repeated sites.
DenseOperator to_dense(const std::vector<PauliTerm>& terms, int sites,
                       int max_sites = kDefaultMaxSites);

DenseOperator build_dense(const HamiltonianSpec& spec,
                          int max_sites = kDefaultMaxSites);

/// Diagonal of S^z_total = sum_i Z_i / 2 in the computational basis.
Eigen::VectorXd total_sz_diagonal(int sites);

/// Frobenius norm of [H, S^z_total].
double sz_commutator_norm(const DenseOperator& op);

}  // namespace xyphase
