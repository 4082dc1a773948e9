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

#include "xyphase/exact_spectrum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <memory>
#include <limits>
#include <numbers>

#include "xyphase/csv.hpp"
#include "xyphase/errors.hpp"

namespace xyphase {

namespace {

bool is_real(const Eigen::MatrixXcd& m) {
  return m.imag().cwiseAbs().maxCoeff() == 0.0;
}

void require_hermitian(const DenseOperator& op) {
  if (op.dimension() == 0) throw ValidationError("empty operator");
  const double defect = op.hermiticity_defect();
  if (!(defect < 1e-10)) {
    throw ValidationError("operator is not Hermitian (relative defect " +
                          format_number(defect) + ")");
  }
}

// Rotates each degenerate block so that S^z is diagonal inside it, then
// sorts the block by decreasing <S^z>.
void resolve_degeneracies(const Eigen::VectorXd& values, Eigen::MatrixXcd& vecs,
                          const Eigen::VectorXd& sz, double tolerance) {
  const Eigen::Index n = values.size();
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index end = start + 1;
    while (end < n && values(end) - values(end - 1) <=
                          tolerance * std::max(1.0, std::abs(values(end)))) {
      ++end;
    }
    const Eigen::Index k = end - start;
    if (k > 1) {
      const Eigen::MatrixXcd block = vecs.middleCols(start, k);
      const Eigen::MatrixXcd proj = block.adjoint() * sz.asDiagonal() * block;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(proj);
      const Eigen::MatrixXcd rotated = block * es.eigenvectors();
      for (Eigen::Index c = 0; c < k; ++c) {
        vecs.col(start + c) = rotated.col(k - 1 - c);
      }
    }
    start = end;
  }
}

}  // namespace

Eigen::VectorXd eigenvalues(const DenseOperator& op) {
  require_hermitian(op);
  const auto& m = op.matrix();
  if (is_real(m)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.real(),
                                                      Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
      throw ComputationError("eigenvalue solver did not converge");
    }
    return es.eigenvalues();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw ComputationError("eigenvalue solver did not converge");
  }
  return es.eigenvalues();
}

SpectrumResult diagonalize(const DenseOperator& op,
                           double degeneracy_tolerance) {
  require_hermitian(op);
  SpectrumResult out;
  const auto& m = op.matrix();
  if (is_real(m)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.real());
    if (es.info() != Eigen::Success) {
      throw ComputationError("eigen solver did not converge");
    }
    out.eigenvalues = es.eigenvalues();
    out.eigenvectors = es.eigenvectors().cast<Complex>();
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
    if (es.info() != Eigen::Success) {
      throw ComputationError("eigen solver did not converge");
    }
    out.eigenvalues = es.eigenvalues();
    out.eigenvectors = es.eigenvectors();
  }

  const Eigen::VectorXd sz = total_sz_diagonal(op.sites());
  resolve_degeneracies(out.eigenvalues, out.eigenvectors, sz,
                       degeneracy_tolerance);

  out.magnetizations.resize(out.eigenvalues.size());
  for (Eigen::Index c = 0; c < out.eigenvectors.cols(); ++c) {
    out.magnetizations(c) =
        (out.eigenvectors.col(c).cwiseAbs2().array() * sz.array()).sum();
  }
  out.ground_magnetization = out.magnetizations(0);
  return out;
}

SpectrumResult diagonalize(const HamiltonianSpec& spec, int max_sites) {
  return diagonalize(build_dense(spec, max_sites));
}

std::vector<double> GapFunction::fields() const {
  std::vector<double> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p.bz);
  return out;
}

std::vector<double> GapFunction::gaps() const {
  std::vector<double> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p.gap);
  return out;
}

double GapFunction::min_gap() const {
  double g = std::numeric_limits<double>::infinity();
  for (const auto& p : points) g = std::min(g, p.gap);
  return g;
}

std::vector<double> uniform_grid(double from, double to, int points) {
  if (points < 2) throw ValidationError("grid needs at least 2 points");
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double step = (to - from) / (points - 1);
  for (int i = 0; i < points; ++i) grid[i] = from + step * i;
  grid.back() = to;
  return grid;
}

namespace {

void require_sorted(const std::vector<double>& grid) {
  const bool up = std::is_sorted(grid.begin(), grid.end());
  const bool down = std::is_sorted(grid.begin(), grid.end(), std::greater<>{});
  if (!up && !down) throw ValidationError("Bz grid must be sorted");
}

}  // namespace

namespace {

std::size_t rotate_sites(std::size_t s, int shift, int sites) {
  const std::size_t mask = (std::size_t{1} << sites) - 1;
  shift %= sites;
  if (shift == 0) return s;
  return ((s << shift) | (s >> (sites - shift))) & mask;
}

}  // namespace

MomentumBlocks::MomentumBlocks(const HamiltonianSpec& spec, int max_sites) {
  spec.validate();
  const int L = spec.sites;
  if (!spec.periodic || L < 3) {
    throw ValidationError("momentum blocks need a periodic chain of >= 3 sites");
  }
  if (L > max_sites) {
    throw DimensionError("momentum blocks on " + std::to_string(L) +
                         " sites exceed the cap of " + std::to_string(max_sites));
  }
  const std::size_t dim = std::size_t{1} << L;

  // rep[s] is the smallest member of the translation orbit of s and
  // s = T^shift[s] rep[s], with T moving site i to site i + 1.
  std::vector<std::size_t> rep(dim);
  std::vector<int> shift(dim);
  std::vector<int> period(dim);
  for (std::size_t s = 0; s < dim; ++s) {
    std::size_t best = s;
    int best_l = 0;
    for (int l = 1; l < L; ++l) {
      const std::size_t x = rotate_sites(s, l, L);
      if (x < best) {
        best = x;
        best_l = l;
      }
    }
    rep[s] = best;
    shift[s] = (L - best_l) % L;
  }
  std::vector<std::size_t> reps;
  for (std::size_t s = 0; s < dim; ++s) {
    if (rep[s] != s) continue;
    int p = 1;
    while (rotate_sites(s, p, L) != s) ++p;
    period[s] = p;
    reps.push_back(s);
  }

  HamiltonianSpec base = spec;
  base.bz = 0.0;
  const auto terms = build_terms(base);
  const double two_pi = 2.0 * std::numbers::pi;

  for (int q = 0; q < L; ++q) {
    // |r, k> = sum_j e^{-ikj} T^j |r> / norm exists iff e^{-ik p_r} = 1.
    std::vector<std::size_t> basis;
    std::vector<Eigen::Index> index(dim, -1);
    for (std::size_t r : reps) {
      if ((q * period[r]) % L == 0) {
        index[r] = static_cast<Eigen::Index>(basis.size());
        basis.push_back(r);
      }
    }
    const auto n = static_cast<Eigen::Index>(basis.size());
    const double k = two_pi * q / L;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
    Eigen::VectorXd sz(n);
    for (Eigen::Index c = 0; c < n; ++c) {
      const std::size_t r = basis[c];
      sz(c) = 0.5 * (L - 2 * std::popcount(r));
      for (const auto& term : terms) {
        const auto [s, amp] = apply_term(term, r);
        const Eigen::Index row = index[rep[s]];
        if (row < 0) continue;
        const double ratio =
            std::sqrt(static_cast<double>(period[r]) / period[rep[s]]);
        h(row, c) += amp * std::polar(ratio, k * shift[s]);
      }
    }
    h0_.push_back(std::move(h));
    sz_.push_back(std::move(sz));
  }
}

Eigen::VectorXd MomentumBlocks::eigenvalues(double bz) const {
  std::vector<double> all;
  for (std::size_t b = 0; b < h0_.size(); ++b) {
    Eigen::MatrixXcd m = h0_[b];
    m.diagonal() -= (bz * sz_[b]).cast<Complex>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m,
                                                       Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
      throw ComputationError("momentum block eigensolver failed");
    }
    const auto& ev = es.eigenvalues();
    all.insert(all.end(), ev.data(), ev.data() + ev.size());
  }
  std::sort(all.begin(), all.end());
  return Eigen::Map<Eigen::VectorXd>(all.data(),
                                     static_cast<Eigen::Index>(all.size()));
}

std::pair<double, double> MomentumBlocks::ground_state(double bz) const {
  double best_e = std::numeric_limits<double>::infinity();
  double best_m = 0.0;
  for (std::size_t b = 0; b < h0_.size(); ++b) {
    Eigen::MatrixXcd m = h0_[b];
    m.diagonal() -= (bz * sz_[b]).cast<Complex>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
    if (es.info() != Eigen::Success) {
      throw ComputationError("momentum block eigensolver failed");
    }
    if (es.eigenvalues()(0) < best_e) {
      best_e = es.eigenvalues()(0);
      best_m = es.eigenvectors().col(0).cwiseAbs2().dot(sz_[b]);
    }
  }
  return {best_e, best_m};
}

GapFunction gap_function(const HamiltonianSpec& spec,
                         const std::vector<double>& bz_grid, int max_sites) {
  require_sorted(bz_grid);
  GapFunction out;
  out.bx = spec.bx;
  out.points.reserve(bz_grid.size());

  if (spec.periodic && spec.sites >= 3) {
    const MomentumBlocks blocks(spec, max_sites);
    for (double bz : bz_grid) {
      const Eigen::VectorXd ev = blocks.eigenvalues(bz);
      out.points.push_back({bz, std::max(0.0, ev(1) - ev(0))});
    }
    return out;
  }

  HamiltonianSpec base = spec;
  base.bz = 0.0;
  const DenseOperator h0 = build_dense(base, max_sites);
  // -(Bz/2) sum_i Z_i is diagonal: -Bz * S^z.
  const Eigen::VectorXd zeeman = -total_sz_diagonal(spec.sites);
  Eigen::MatrixXcd m = h0.matrix();
  for (double bz : bz_grid) {
    m.diagonal() = h0.matrix().diagonal() + (bz * zeeman).cast<Complex>();
    const Eigen::VectorXd ev = eigenvalues(DenseOperator(spec.sites, m));
    out.points.push_back({bz, std::max(0.0, ev(1) - ev(0))});
  }
  return out;
}

namespace {

// Ground-state magnetization as a function of Bz for a fixed spec.
std::function<double(double)> ground_m_function(const HamiltonianSpec& spec,
                                                int max_sites) {
  spec.validate();
  if (spec.periodic && spec.sites >= 3) {
    auto blocks = std::make_shared<MomentumBlocks>(spec, max_sites);
    return [blocks](double bz) { return blocks->ground_state(bz).second; };
  }
  return [spec, max_sites](double bz) {
    HamiltonianSpec s = spec;
    s.bz = bz;
    return diagonalize(s, max_sites).ground_magnetization;
  };
}

}  // namespace

MagnetizationTrace ground_state_magnetization_curve(
    const HamiltonianSpec& spec, const std::vector<double>& bz_grid,
    int max_sites) {
  const auto m_of = ground_m_function(spec, max_sites);
  MagnetizationTrace trace;
  trace.meta.sites = spec.sites;
  trace.meta.bx = spec.bx;
  trace.meta.backend = "exact-ground-state";
  for (std::size_t k = 0; k < bz_grid.size(); ++k) {
    trace.entries.push_back(
        {static_cast<int>(k), 0.0, bz_grid[k], m_of(bz_grid[k])});
  }
  return trace;
}

double ground_state_crossing(const HamiltonianSpec& spec, double target_m,
                             double lo, double hi, int scan_points,
                             double tolerance, int max_sites) {
  if (!(lo < hi) || scan_points < 2) {
    throw ValidationError("crossing scan needs lo < hi and two points");
  }
  const auto m_of = ground_m_function(spec, max_sites);
  const auto grid = uniform_grid(lo, hi, scan_points);
  double a = grid[0];
  double fa = m_of(a) - target_m;
  for (std::size_t k = 1; k < grid.size(); ++k) {
    double b = grid[k];
    const double fb = m_of(b) - target_m;
    if (fa == 0.0) return a;
    if ((fa < 0.0) != (fb < 0.0)) {
      while (b - a > tolerance) {
        const double mid = 0.5 * (a + b);
        const double fm = m_of(mid) - target_m;
        if ((fm < 0.0) == (fa < 0.0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      return 0.5 * (a + b);
    }
    a = b;
    fa = fb;
  }
  throw NoCrossingError("ground-state magnetization never reaches " +
                        format_number(target_m) + " in [" + format_number(lo) +
                        ", " + format_number(hi) + "]");
}

SectorLadder::SectorLadder(const HamiltonianSpec& spec, int max_sites)
    : sites_(spec.sites) {
  spec.validate();
  if (spec.sites > max_sites) {
    throw DimensionError("sector ladder on " + std::to_string(spec.sites) +
                         " sites exceeds the cap of " +
                         std::to_string(max_sites));
  }
  const std::size_t dim = std::size_t{1} << sites_;
  const auto bonds = chain_bonds(sites_, spec.periodic);
  std::vector<Eigen::Index> position(dim, -1);

  for (int downs = 0; downs <= sites_; ++downs) {
    std::vector<std::size_t> states;
    for (std::size_t s = 0; s < dim; ++s) {
      if (std::popcount(s) == downs) {
        position[s] = static_cast<Eigen::Index>(states.size());
        states.push_back(s);
      }
    }
    const auto n = static_cast<Eigen::Index>(states.size());
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
    // (J/4)(XX + YY) flips an antiparallel pair with amplitude J/2.
    for (Eigen::Index c = 0; c < n; ++c) {
      const std::size_t s = states[c];
      for (auto [i, j] : bonds) {
        if (((s >> i) & 1U) != ((s >> j) & 1U)) {
          const std::size_t t = s ^ (std::size_t{1} << i) ^ (std::size_t{1} << j);
          h(position[t], c) += -spec.coupling / 2.0;
        }
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
    energy_[0.5 * (sites_ - 2 * downs)] = es.eigenvalues()(0);
  }
}

double SectorLadder::ground_energy(double bz) const {
  double best = std::numeric_limits<double>::infinity();
  for (auto [m, e] : energy_) best = std::min(best, e - bz * m);
  return best;
}

double SectorLadder::ground_magnetization(double bz) const {
  double best_e = std::numeric_limits<double>::infinity();
  double best_m = 0.0;
  // Ascending m, so "<=" hands exact ties to the larger magnetization.
  for (auto [m, e] : energy_) {
    const double value = e - bz * m;
    const double tol = 1e-12 * std::max(1.0, std::abs(value));
    if (value <= best_e + tol) {
      best_e = std::min(best_e, value);
      best_m = m;
    }
  }
  return best_m;
}

MagnetizationTrace exact_magnetization_curve(const HamiltonianSpec& spec,
                                             const std::vector<double>& bz_grid,
                                             int max_sites) {
  if (spec.bx != 0.0) {
    throw ValidationError("exact staircase requires Bx = 0");
  }
  require_sorted(bz_grid);
  const SectorLadder ladder(spec, max_sites);
  MagnetizationTrace trace;
  trace.meta.sites = spec.sites;
  trace.meta.backend = "exact-ground-state";
  trace.meta.n_steps = static_cast<int>(bz_grid.size()) - 1;
  for (std::size_t i = 0; i < bz_grid.size(); ++i) {
    trace.entries.push_back({static_cast<int>(i), 0.0, bz_grid[i],
                             ladder.ground_magnetization(bz_grid[i])});
  }
  return trace;
}

namespace {

void bisect_jumps(const SectorLadder& ladder, double a, double ma, double b,
                  double mb, double tolerance, CrossingTable& out) {
  if (b - a <= tolerance) {
    out.push_back({std::max(ma, mb), std::min(ma, mb), 0.5 * (a + b)});
    return;
  }
  const double mid = 0.5 * (a + b);
  const double mm = ladder.ground_magnetization(mid);
  if (mm != ma) bisect_jumps(ladder, a, ma, mid, mm, tolerance, out);
  if (mm != mb) bisect_jumps(ladder, mid, mm, b, mb, tolerance, out);
}

}  // namespace

CrossingTable find_exact_crossings(const HamiltonianSpec& spec, double lo,
                                   double hi, CrossingSearch search,
                                   int max_sites) {
  if (spec.bx != 0.0) {
    throw ValidationError("level crossings are defined for Bx = 0 only");
  }
  if (lo > hi) std::swap(lo, hi);
  if (!(hi > lo)) throw ValidationError("crossing interval is empty");
  const SectorLadder ladder(spec, max_sites);
  const auto grid = uniform_grid(lo, hi, std::max(2, search.scan_points));

  CrossingTable out;
  double prev_m = ladder.ground_magnetization(grid.front());
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double m = ladder.ground_magnetization(grid[i]);
    if (m != prev_m) {
      bisect_jumps(ladder, grid[i - 1], prev_m, grid[i], m, search.tolerance,
                   out);
    }
    prev_m = m;
  }
  return out;
}

std::vector<FermionMode> free_fermion_energies(int sites, double coupling,
                                               double bz) {
  if (sites < 2) throw ValidationError("free-fermion modes need L >= 2");
  int n_lo = 0;
  int n_hi = 0;
  if (sites % 2 == 0) {
    n_lo = -sites / 2 + 1;
    n_hi = sites / 2;
  } else {
    n_lo = -(sites - 1) / 2;
    n_hi = (sites - 1) / 2;
  }
  std::vector<FermionMode> modes;
  for (int n = n_lo; n <= n_hi; ++n) {
    const double k = 2.0 * std::numbers::pi * n / sites;
    modes.push_back({k, -coupling * std::cos(k) + bz});
  }
  return modes;
}

std::string spectrum_scan_csv(const HamiltonianSpec& spec,
                              const std::vector<double>& bz_grid, int levels,
                              int max_sites) {
  require_sorted(bz_grid);
  const int dim = 1 << spec.sites;
  levels = std::clamp(levels, 2, dim);
  std::string out = "Bz";
  for (int k = 0; k < levels; ++k) out += ",E" + std::to_string(k);
  out += ",Delta\n";
  for (double bz : bz_grid) {
    HamiltonianSpec s = spec;
    s.bz = bz;
    const Eigen::VectorXd ev = eigenvalues(build_dense(s, max_sites));
    std::vector<double> row{bz};
    for (int k = 0; k < levels; ++k) row.push_back(ev(k));
    row.push_back(ev(1) - ev(0));
    out += csv_row(row);
  }
  return out;
}

}  // namespace xyphase
