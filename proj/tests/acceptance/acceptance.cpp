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

// Acceptance checks. One PASS/FAIL line per criterion; the exit status is
// nonzero when any selected criterion fails.
//
//   xyphase_acceptance                 all criteria
//   xyphase_acceptance --criterion 5   just one

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "xyphase/csv.hpp"
#include "xyphase/exact_spectrum.hpp"
#include "xyphase/extract.hpp"
#include "xyphase/gates.hpp"
#include "xyphase/pipeline.hpp"
#include "xyphase/ramp.hpp"
#include "xyphase/trotter.hpp"
#include "xyphase_cli/figures.hpp"

using namespace xyphase;

namespace {

// Pinned targets and tolerances.
constexpr double kTwoSiteExact = 0.498;
constexpr double kTwoSiteExactTol = 0.002;
constexpr double kTwoSiteSim = 0.500;
constexpr double kTwoSiteSimTol = 0.005;
constexpr double kDownSector = -0.50;
constexpr double kDownSectorTol = 0.01;
constexpr double kThreeSiteExact = 0.9987;
constexpr double kThreeSiteExactTol = 0.002;
constexpr double kThreeSiteSim = 0.982;
constexpr double kThreeSiteSimTol = 0.01;
constexpr double kThreeSiteCrossing = 1.0;
constexpr double kThreeSiteCrossingTol = 1e-6;
constexpr double kStaircaseDeviation = 0.15;
constexpr double kStaircaseEdge = 0.05;  // |Bz - crossing| excluded
constexpr double kStaircaseMidpointTol = 0.03;
constexpr int kStaircaseSteps = 5;
constexpr int kGateTrials = 20;
constexpr double kGateDistance = 1e-10;
constexpr double kNormTol = 1e-10;
constexpr int kNormSteps = 1000;
constexpr double kSzTol = 1e-10;
constexpr double kOrder = 1.0;
constexpr double kOrderTol = 0.2;
constexpr double kMirrorTol = 1e-10;
constexpr double kNoiseProbabilities[] = {5e-4, 1e-3, 2e-3};
constexpr int kNoiseTrajectories = 2000;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  std::function<Outcome()> run;
};

std::string fmt(double x) { return format_number(x); }

bool within(double value, double target, double tol) {
  return std::abs(value - target) <= tol;
}

std::string target_text(double target, double tol) {
  return "target " + fmt(target) + " +- " + fmt(tol);
}

// exp(-i H t) by diagonalization; independent of the library propagators.
Eigen::MatrixXcd expm_hermitian(const Eigen::MatrixXcd& h, double t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  Eigen::VectorXcd ph(es.eigenvalues().size());
  for (Eigen::Index k = 0; k < ph.size(); ++k) {
    ph(k) = std::polar(1.0, -es.eigenvalues()(k) * t);
  }
  return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

Outcome two_site_exact() {
  const auto fit = extrapolate_to_zero_field(
      exact_crossing_estimates(figures::two_site(true)), FitModel::QuarticEven);
  const double c0 = fit.bz_critical_at_zero;
  return {within(c0, kTwoSiteExact, kTwoSiteExactTol),
          "Bz_c(0) = " + fmt(c0) + ", " +
              target_text(kTwoSiteExact, kTwoSiteExactTol)};
}

Outcome sweep_outcome(const SweepConfig& c, double target, double tol) {
  const auto report = full_pipeline(c);
  if (!report.fit) {
    std::string why = "no fit";
    for (const auto& w : report.warnings) why += "; " + w;
    return {false, why};
  }
  const double c0 = report.fit->bz_critical_at_zero;
  return {within(c0, target, tol),
          "Bz_c(0) = " + fmt(c0) + ", " + target_text(target, tol)};
}

Outcome two_site_simulated() {
  return sweep_outcome(figures::two_site(true), kTwoSiteSim, kTwoSiteSimTol);
}

Outcome two_site_down() {
  return sweep_outcome(figures::two_site(false), kDownSector, kDownSectorTol);
}

Outcome three_site() {
  const SweepConfig c = figures::three_site();
  Outcome out;
  const double ed =
      extrapolate_to_zero_field(exact_crossing_estimates(c), FitModel::QuarticEven)
          .bz_critical_at_zero;
  out.pass = within(ed, kThreeSiteExact, kThreeSiteExactTol);
  out.detail = "exact " + fmt(ed) + " (" +
               target_text(kThreeSiteExact, kThreeSiteExactTol) + ")";

  const Outcome sim = sweep_outcome(c, kThreeSiteSim, kThreeSiteSimTol);
  out.pass = out.pass && sim.pass;
  out.detail += "; simulated " + sim.detail;

  HamiltonianSpec spec = c.hamiltonian(0.0);
  const auto table = find_exact_crossings(spec, 0.5, 1.5);
  const bool one = table.size() == 1;
  const double bz = one ? table[0].bz_critical : NAN;
  out.pass = out.pass && one &&
             within(bz, kThreeSiteCrossing, kThreeSiteCrossingTol);
  out.detail += "; level crossing " + (one ? fmt(bz) : std::string("missing")) +
                " (" + target_text(kThreeSiteCrossing, kThreeSiteCrossingTol) +
                ")";
  return out;
}

Outcome ten_site_staircase() {
  const SweepConfig c = resolve_config(figures::ten_site());
  const auto trace = run_trace(c, 0);
  const HamiltonianSpec clean = c.hamiltonian(0.0);
  const SectorLadder ladder(clean);
  const double lo = std::min(c.bz_initial, c.bz_final);
  const double hi = std::max(c.bz_initial, c.bz_final);
  auto crossings = find_exact_crossings(clean, lo, hi);
  std::sort(crossings.begin(), crossings.end(),
            [](const Crossing& a, const Crossing& b) {
              return a.bz_critical < b.bz_critical;
            });

  double worst = 0.0;
  double worst_bz = 0.0;
  for (const auto& e : trace.entries) {
    const bool near_edge =
        std::any_of(crossings.begin(), crossings.end(), [&](const Crossing& x) {
          return std::abs(e.bz - x.bz_critical) < kStaircaseEdge;
        });
    if (near_edge) continue;
    const double dev = std::abs(e.m - ladder.ground_magnetization(e.bz));
    if (dev > worst) {
      worst = dev;
      worst_bz = e.bz;
    }
  }
  Outcome out;
  out.pass = worst < kStaircaseDeviation;
  out.detail = "max |m - m_exact| = " + fmt(worst) + " at Bz = " +
               fmt(worst_bz) + " (limit " + fmt(kStaircaseDeviation) +
               ", edges " + fmt(kStaircaseEdge) + ")";

  int found = 0;
  double worst_mid = 0.0;
  std::string misses;
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    const auto& x = crossings[i];
    if (x.m_low < 0.0) continue;  // positive sector only
    ++found;
    CrossingWindow w;
    w.lo = i == 0 ? lo : 0.5 * (crossings[i - 1].bz_critical + x.bz_critical);
    w.hi = i + 1 == crossings.size()
               ? hi
               : 0.5 * (x.bz_critical + crossings[i + 1].bz_critical);
    const double target = 0.5 * (x.m_high + x.m_low);
    double err = INFINITY;
    try {
      err = std::abs(find_crossing(trace, target, w).bz_critical -
                     x.bz_critical);
    } catch (const NoCrossingError&) {
    }
    worst_mid = std::max(worst_mid, err);
    if (!(err < kStaircaseMidpointTol)) {
      misses += " m=" + fmt(target) + ":" + fmt(err);
    }
  }
  const bool mid_ok = found == kStaircaseSteps && misses.empty();
  out.pass = out.pass && mid_ok;
  out.detail += "; " + std::to_string(found) + " steps, worst midpoint error " +
                fmt(worst_mid) + " (limit " + fmt(kStaircaseMidpointTol) + ")";
  if (!misses.empty()) out.detail += ", misses:" + misses;
  return out;
}

Outcome gate_identity() {
  std::mt19937_64 gen(20240611);
  std::uniform_real_distribution<double> dist(0.0, 2.0);
  const HamiltonianSpec spec{2, 1.0, 0.0, 0.0, true};
  const Eigen::MatrixXcd h = build_dense(spec).matrix();
  double worst = 0.0;
  bool two_cnots = true;
  for (int k = 0; k < kGateTrials; ++k) {
    const double dt = dist(gen);
    const auto gates = build_xy_gate_circuit({0, 1}, dt, spec.coupling);
    two_cnots = two_cnots && std::count_if(gates.begin(), gates.end(),
                                           [](const GateOp& g) {
                                             return g.is_two_qubit();
                                           }) == 2;
    worst = std::max(worst, distance_up_to_phase(circuit_unitary(gates, 2),
                                                 expm_hermitian(h, dt)));
  }
  return {worst < kGateDistance && two_cnots,
          std::to_string(kGateTrials) + " random dt, max distance " +
              fmt(worst) + " (limit " + fmt(kGateDistance) + ")" +
              (two_cnots ? "" : ", CNOT count != 2")};
}

RampSchedule flat_schedule(double bz, double total, int n, double bx) {
  RampSchedule s;
  s.gamma = 1.0;
  s.bx = bx;
  s.total_time = total;
  s.dt = total / n;
  for (int k = 0; k <= n; ++k) s.steps.push_back({s.dt * k, bz});
  return s;
}

RampSchedule linear_schedule(double bz0, double bz1, double total, int n) {
  RampSchedule s = flat_schedule(bz0, total, n, 0.0);
  for (int k = 0; k <= n; ++k) s.steps[k].bz = bz0 + (bz1 - bz0) * k / n;
  return s;
}

Outcome property_suite() {
  std::vector<std::string> failed;
  std::ostringstream detail;

  // norm over many steps
  {
    HamiltonianSpec spec{3, 1.0, 0.0, 0.08, true};
    const auto s = build_local_ramp(spec, 2.0, 2.0, 0.0, kNormSteps);
    double worst = 0.0;
    for (Backend b : {Backend::ExactExponential, Backend::GateLevel}) {
      EvolveOptions o;
      o.backend = b;
      StateVector out;
      evolve(StateVector::all_up(3), s, spec, o, &out);
      worst = std::max(worst, std::abs(out.norm() - 1.0));
    }
    detail << "norm drift " << fmt(worst);
    if (!(worst < kNormTol)) failed.push_back("norm");
  }

  // Sz at Bx = 0
  {
    HamiltonianSpec spec{4, 1.0, 0.0, 0.0, true};
    const auto s = linear_schedule(1.5, -0.5, 20.0, 200);
    double worst = 0.0;
    for (Backend b : {Backend::ExactExponential, Backend::GateLevel}) {
      EvolveOptions o;
      o.backend = b;
      for (std::uint64_t start : {0b0000ULL, 0b0110ULL, 0b1011ULL}) {
        const auto init = StateVector::basis(4, start);
        const double m0 = init.magnetization();
        for (const auto& e : evolve(init, s, spec, o).entries) {
          worst = std::max(worst, std::abs(e.m - m0));
        }
      }
    }
    detail << "; Sz drift " << fmt(worst);
    if (!(worst < kSzTol)) failed.push_back("Sz");
  }

  // Trotter order at fixed total time
  {
    HamiltonianSpec spec{3, 1.0, 0.7, 0.3, true};
    const double total = 2.0;
    const auto up = StateVector::all_up(3);
    const StateVector exact(
        3, expm_hermitian(build_dense(spec).matrix(), total) * up.amplitudes());
    std::vector<double> err;
    for (int n : {40, 80, 160, 320}) {
      StateVector out;
      evolve(up, flat_schedule(spec.bz, total, n, spec.bx), spec, {}, &out);
      err.push_back(phase_distance(out, exact));
    }
    detail << "; orders";
    bool ok = true;
    for (std::size_t k = 1; k < err.size(); ++k) {
      const double order = std::log2(err[k - 1] / err[k]);
      detail << " " << fmt(std::round(order * 1000) / 1000);
      ok = ok && within(order, kOrder, kOrderTol);
    }
    if (!ok) failed.push_back("order");
  }

  // dwell near the two-site crossing
  {
    HamiltonianSpec spec{2, 1.0, 0.0, 0.02, true};
    const auto s = build_local_ramp(spec, 1.5, 1.0, 0.0, 20);
    const double centre = dwell_time(s, 0.45, 0.55);
    double other = 0.0;
    for (int k = 0; k <= 18; ++k) {
      const double lo = 0.05 * k;
      if (k == 9) continue;
      other = std::max(other, dwell_time(s, lo, lo + 0.1));
    }
    detail << "; dwell " << fmt(centre) << " vs " << fmt(other);
    if (!(centre > other)) failed.push_back("dwell");
  }

  // Bx -> -Bx
  {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      HamiltonianSpec spec{2 + trial % 5, 1.0, u(gen), u(gen), trial % 2 == 0};
      const auto plus = eigenvalues(build_dense(spec));
      spec.bx = -spec.bx;
      worst = std::max(worst, (plus - eigenvalues(build_dense(spec)))
                                  .cwiseAbs()
                                  .maxCoeff());
    }
    detail << "; Bx mirror " << fmt(worst);
    if (!(worst < kMirrorTol)) failed.push_back("mirror");
  }

  Outcome out;
  out.pass = failed.empty();
  out.detail = detail.str();
  if (!failed.empty()) {
    out.detail += "; failed:";
    for (const auto& f : failed) out.detail += " " + f;
  }
  return out;
}

Outcome noise_linearity() {
  Outcome out;
  for (double p : kNoiseProbabilities) {
    const SweepConfig c =
        figures::noisy(figures::two_site(true), p, kNoiseTrajectories);
    const auto report = full_pipeline(c);
    const auto est = report.estimates();
    if (est.size() < 3) {
      out.pass = false;
      out.detail += "p=" + fmt(p) + ": only " + std::to_string(est.size()) +
                    " crossings; ";
      continue;
    }
    const auto lin = extrapolate_to_zero_field(est, FitModel::Linear);
    const auto even = extrapolate_to_zero_field(est, FitModel::QuarticEven);
    const bool ok = lin.residual_norm < even.residual_norm;
    out.pass = out.pass && ok;
    out.detail += "p=" + fmt(p) + ": linear " + fmt(lin.residual_norm) +
                  (ok ? " < " : " >= ") + "quartic-even " +
                  fmt(even.residual_norm) + "; ";
  }
  out.detail += std::to_string(kNoiseTrajectories) + " trajectories";
  return out;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "two-site exact extrapolation", two_site_exact},
      {2, "two-site simulated protocol", two_site_simulated},
      {3, "two-site down-spin sector", two_site_down},
      {4, "three-site extrapolations", three_site},
      {5, "ten-site staircase", ten_site_staircase},
      {6, "gate-circuit identity", gate_identity},
      {7, "property suite", property_suite},
      {8, "noise drives linear Bx dependence", noise_linearity},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: xyphase_acceptance [--criterion N]\n";
      return 2;
    }
  }
  if (only < 0 || only > static_cast<int>(criteria().size())) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }

  bool all_pass = true;
  for (const auto& c : criteria()) {
    if (only && c.id != only) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " ("
              << c.name << "): " << o.detail << std::endl;
    all_pass = all_pass && o.pass;
  }
  return all_pass ? 0 : 1;
}
