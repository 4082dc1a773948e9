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

// Dense exact diagonalization of the XY chain: spectra, ground-state gaps,
// magnetization staircases and their level crossings.

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "xyphase/spin_model.hpp"
#include "xyphase/trace.hpp"

namespace xyphase {

struct SpectrumResult {
  Eigen::VectorXd eigenvalues;    // ascending
  Eigen::MatrixXcd eigenvectors;  // column k belongs to eigenvalues(k)
  Eigen::VectorXd magnetizations; // <S^z_total> of each column
  double ground_magnetization = 0.0;

  double ground_energy() const { return eigenvalues(0); }
  double gap() const { return eigenvalues(1) - eigenvalues(0); }
};

/// Full spectrum. Inside a degenerate eigenspace the basis is rotated to
/// diagonalize S^z_total and ordered by decreasing <S^z>, so the reported
/// ground state at an exact crossing is the one with the larger
/// magnetization. Throws ValidationError for non-Hermitian input.
SpectrumResult diagonalize(const DenseOperator& op,
                           double degeneracy_tolerance = 1e-10);
SpectrumResult diagonalize(const HamiltonianSpec& spec,
                           int max_sites = kDefaultMaxSites);

/// Ascending eigenvalues only. Uses a real solver when the operator has no
/// imaginary part, which is always the case for build_dense output.
Eigen::VectorXd eigenvalues(const DenseOperator& op);

struct GapPoint {
  double bz = 0.0;
  double gap = 0.0;
};

/// Delta(Bz) = E1 - E0 sampled at fixed Bx.
struct GapFunction {
  double bx = 0.0;
  std::vector<GapPoint> points;

  std::vector<double> fields() const;
  std::vector<double> gaps() const;
  double min_gap() const;
};

/// Number of Bz samples used for plotting-grade gap tables.
inline constexpr int kDefaultGapGridPoints = 201;

std::vector<double> uniform_grid(double from, double to, int points);

/// H(Bz) of a periodic chain split into the L momentum sectors of the
/// one-site translation. Every term of the model is translation invariant,
/// so the blocks are exact; each block has about 2^L / L states.
class MomentumBlocks {
 public:
  /// Requires spec.periodic and at least three sites.
  explicit MomentumBlocks(const HamiltonianSpec& spec,
                          int max_sites = kDefaultMaxSites);

  int block_count() const { return static_cast<int>(h0_.size()); }
  Eigen::Index block_dimension(int k) const { return h0_.at(k).rows(); }

  /// All eigenvalues of H with its bz replaced by `bz`, ascending.
  Eigen::VectorXd eigenvalues(double bz) const;

  /// Lowest level over all blocks and its <S^z_total>.
  std::pair<double, double> ground_state(double bz) const;

 private:
  std::vector<Eigen::MatrixXcd> h0_;  // H at Bz = 0, per momentum
  std::vector<Eigen::VectorXd> sz_;   // S^z of the block basis states
};

/// Evaluates E1 - E0 of `spec` with its bz replaced by each grid value.
/// The grid must be sorted (either direction). Periodic chains with three or
/// more sites are diagonalized block by block in momentum space.
GapFunction gap_function(const HamiltonianSpec& spec,
                         const std::vector<double>& bz_grid,
                         int max_sites = kDefaultMaxSites);

/// <S^z_total> of the ground state of `spec` at each grid field; any Bx.
/// Entries carry the grid index as step and t = 0.
MagnetizationTrace ground_state_magnetization_curve(
    const HamiltonianSpec& spec, const std::vector<double>& bz_grid,
    int max_sites = kDefaultMaxSites);

/// Field in [lo, hi] where the ground-state magnetization of `spec` equals
/// target_m: the first sign change on a `scan_points` grid, bisected to
/// `tolerance`. Throws NoCrossingError when there is none.
double ground_state_crossing(const HamiltonianSpec& spec, double target_m,
                             double lo, double hi, int scan_points = 201,
                             double tolerance = 1e-10,
                             int max_sites = kDefaultMaxSites);

/// Lowest S^z-sector energies of the Bx = 0 chain at Bz = 0. Because the
/// longitudinal field only shifts sector m by -Bz * m, the ground-state
/// magnetization at any Bz follows from these numbers alone.
class SectorLadder {
 public:
  explicit SectorLadder(const HamiltonianSpec& spec,
                        int max_sites = kDefaultMaxSites);

  int sites() const { return sites_; }
  /// Sector ground energies keyed by m = L/2 - (number of down spins).
  const std::map<double, double>& sector_energies() const { return energy_; }

  /// Ground-state m at field bz; exact ties go to the larger m.
  double ground_magnetization(double bz) const;
  double ground_energy(double bz) const;

 private:
  int sites_;
  std::map<double, double> energy_;
};

/// Ground-state staircase m(Bz) for the Bx = 0 chain. Entries carry the grid
/// index as step and t = 0. Throws ValidationError if spec.bx != 0.
MagnetizationTrace exact_magnetization_curve(const HamiltonianSpec& spec,
                                             const std::vector<double>& bz_grid,
                                             int max_sites = kDefaultMaxSites);

struct Crossing {
  double m_high = 0.0;
  double m_low = 0.0;
  double bz_critical = 0.0;
};

using CrossingTable = std::vector<Crossing>;

struct CrossingSearch {
  int scan_points = 2001;
  double tolerance = 1e-8;
};

/// Level crossings of the Bx = 0 chain inside [lo, hi], ascending in Bz.
/// Each crossing is the midpoint of the bisected magnetization jump.
CrossingTable find_exact_crossings(const HamiltonianSpec& spec, double lo,
                                   double hi, CrossingSearch search = {},
                                   int max_sites = kDefaultMaxSites);

struct FermionMode {
  double k = 0.0;
  double omega = 0.0;
};

/// omega_k = -J cos k + Bz on k = 2 pi n / L. Even L uses n = -L/2+1 .. L/2,
/// odd L uses n = -(L-1)/2 .. (L-1)/2. Diagnostic only: the spin chain with a
/// plain periodic bond differs from this by a boundary term.
std::vector<FermionMode> free_fermion_energies(int sites, double coupling,
                                               double bz);

/// CSV with columns Bz,E0,...,E{levels-1},Delta.
std::string spectrum_scan_csv(const HamiltonianSpec& spec,
                              const std::vector<double>& bz_grid, int levels,
                              int max_sites = kDefaultMaxSites);

}  // namespace xyphase
