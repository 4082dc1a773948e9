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

#include "xyphase/spin_model.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "xyphase/errors.hpp"

namespace xyphase {

char axis_name(PauliAxis axis) {
  switch (axis) {
    case PauliAxis::X:
      return 'X';
    case PauliAxis::Y:
      return 'Y';
    case PauliAxis::Z:
      return 'Z';
  }
  return '?';
}

void HamiltonianSpec::validate() const {
  if (sites < 2) {
    throw ValidationError("chain needs at least 2 sites, got " +
                          std::to_string(sites));
  }
  if (!std::isfinite(coupling) || !std::isfinite(bz) || !std::isfinite(bx)) {
    throw ValidationError("Hamiltonian parameters must be finite");
  }
}

std::vector<std::pair<int, int>> chain_bonds(int sites, bool periodic) {
  std::vector<std::pair<int, int>> bonds;
  for (int i = 0; i + 1 < sites; ++i) bonds.emplace_back(i, i + 1);
  if (periodic && sites > 2) bonds.emplace_back(sites - 1, 0);
  return bonds;
}

std::vector<PauliTerm> xy_terms(const HamiltonianSpec& spec) {
  spec.validate();
  std::vector<PauliTerm> terms;
  const double c = -spec.coupling / 4.0;
  for (auto [i, j] : chain_bonds(spec.sites, spec.periodic)) {
    terms.push_back({c, {{i, PauliAxis::X}, {j, PauliAxis::X}}});
    terms.push_back({c, {{i, PauliAxis::Y}, {j, PauliAxis::Y}}});
  }
  return terms;
}

namespace {

std::vector<PauliTerm> field_terms(const HamiltonianSpec& spec, double field,
                                   PauliAxis axis) {
  spec.validate();
  std::vector<PauliTerm> terms;
  if (field == 0.0) return terms;
  for (int i = 0; i < spec.sites; ++i) {
    terms.push_back({-field / 2.0, {{i, axis}}});
  }
  return terms;
}

}  // namespace

std::vector<PauliTerm> transverse_terms(const HamiltonianSpec& spec) {
  return field_terms(spec, spec.bx, PauliAxis::X);
}

std::vector<PauliTerm> longitudinal_terms(const HamiltonianSpec& spec) {
  return field_terms(spec, spec.bz, PauliAxis::Z);
}

std::vector<PauliTerm> build_terms(const HamiltonianSpec& spec) {
  auto terms = xy_terms(spec);
  for (auto& t : longitudinal_terms(spec)) terms.push_back(std::move(t));
  for (auto& t : transverse_terms(spec)) terms.push_back(std::move(t));
  return terms;
}

DenseOperator::DenseOperator(int sites, Eigen::MatrixXcd matrix)
    : sites_(sites), matrix_(std::move(matrix)) {}

double DenseOperator::hermiticity_defect() const {
  if (matrix_.size() == 0) return 0.0;
  const double scale = matrix_.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  const Eigen::MatrixXcd diff = matrix_ - matrix_.adjoint();
  return diff.cwiseAbs().maxCoeff() / scale;
}

bool DenseOperator::is_hermitian(double tolerance) const {
  return hermiticity_defect() < tolerance;
}

std::pair<std::size_t, Complex> apply_term(const PauliTerm& term,
                                           std::size_t state) {
  std::size_t flip = 0;
  Complex amp{term.coefficient, 0.0};
  for (const auto& f : term.factors) {
    const bool down = (state >> f.site) & 1U;
    switch (f.axis) {
      case PauliAxis::X:
        flip |= std::size_t{1} << f.site;
        break;
      case PauliAxis::Y:
        // Y|up> = i|down>, Y|down> = -i|up>
        flip |= std::size_t{1} << f.site;
        amp *= down ? Complex{0.0, -1.0} : Complex{0.0, 1.0};
        break;
      case PauliAxis::Z:
        if (down) amp = -amp;
        break;
    }
  }
  return {state ^ flip, amp};
}

DenseOperator to_dense(const std::vector<PauliTerm>& terms, int sites,
                       int max_sites) {
  if (sites < 1) throw ValidationError("operator needs at least one site");
  if (sites > max_sites) {
    throw DimensionError("dense operator on " + std::to_string(sites) +
                         " sites exceeds the cap of " +
                         std::to_string(max_sites));
  }
  const Eigen::Index dim = Eigen::Index{1} << sites;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);

  for (const auto& term : terms) {
    if (!std::isfinite(term.coefficient)) {
      throw ValidationError("Pauli term coefficient is not finite");
    }
    std::size_t seen = 0;
    for (const auto& f : term.factors) {
      if (f.site < 0 || f.site >= sites) {
        throw ValidationError("Pauli factor site " + std::to_string(f.site) +
                              " outside [0, " + std::to_string(sites) + ")");
      }
      const std::size_t bit = std::size_t{1} << f.site;
      if (seen & bit) {
        throw ValidationError("Pauli term repeats site " +
                              std::to_string(f.site));
      }
      seen |= bit;
    }
    for (Eigen::Index col = 0; col < dim; ++col) {
      const auto [row, amp] = apply_term(term, static_cast<std::size_t>(col));
      m(static_cast<Eigen::Index>(row), col) += amp;
    }
  }
  return DenseOperator(sites, std::move(m));
}

DenseOperator build_dense(const HamiltonianSpec& spec, int max_sites) {
  return to_dense(build_terms(spec), spec.sites, max_sites);
}

Eigen::VectorXd total_sz_diagonal(int sites) {
  const Eigen::Index dim = Eigen::Index{1} << sites;
  Eigen::VectorXd sz(dim);
  for (Eigen::Index s = 0; s < dim; ++s) {
    const int down = std::popcount(static_cast<unsigned long long>(s));
    sz(s) = 0.5 * (sites - 2 * down);
  }
  return sz;
}

double sz_commutator_norm(const DenseOperator& op) {
  const Eigen::VectorXd sz = total_sz_diagonal(op.sites());
  const auto& h = op.matrix();
  double sum = 0.0;
  for (Eigen::Index c = 0; c < h.cols(); ++c) {
    for (Eigen::Index r = 0; r < h.rows(); ++r) {
      // [H, Sz]_{rc} = H_{rc} (sz_c - sz_r)
      sum += std::norm(h(r, c) * (sz(c) - sz(r)));
    }
  }
  return std::sqrt(sum);
}

}  // namespace xyphase
