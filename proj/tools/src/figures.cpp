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

#include "xyphase_cli/figures.hpp"

#include <algorithm>
#include <ostream>

#include "xyphase/csv.hpp"
#include "xyphase/errors.hpp"
#include "xyphase/exact_spectrum.hpp"
#include "xyphase/pipeline.hpp"
#include "xyphase/ramp.hpp"

namespace xyphase::figures {

const std::vector<double>& standard_bx_list() {
  static const std::vector<double> list{0.02, 0.03, 0.04, 0.05};
  return list;
}

SweepConfig ten_site() {
  SweepConfig c;
  c.sites = 10;
  c.gamma = 50.0;
  c.n_steps = 1000;
  c.bx_list = {0.05};
  c.bz_initial = 1.5;
  c.bz_final = 0.0;
  c.seed = 1;
  c.output_dir = "fig1";
  return c;
}

SweepConfig two_site(bool all_up, int n_steps) {
  SweepConfig c;
  c.sites = 2;
  c.gamma = 1.5;
  c.n_steps = n_steps;
  c.bx_list = standard_bx_list();
  c.bz_initial = all_up ? 1.0 : -1.0;
  c.bz_final = 0.0;
  c.initial_state = all_up ? InitialState::AllUp : InitialState::AllDown;
  c.seed = 1;
  c.output_dir = all_up ? "two_site_up" : "two_site_down";
  return c;
}

SweepConfig three_site(int n_steps) {
  SweepConfig c;
  c.sites = 3;
  c.gamma = 2.0;
  c.n_steps = n_steps;
  c.bx_list = standard_bx_list();
  c.bz_initial = 2.0;
  c.bz_final = 0.0;
  c.seed = 1;
  c.output_dir = "three_site";
  return c;
}

SweepConfig noisy(const SweepConfig& base, double probability,
                  int trajectories) {
  SweepConfig c = base;
  c.backend = Backend::GateLevel;
  c.noise = NoiseSettings{probability, base.seed + 1, trajectories};
  c.scale_endpoints = true;
  c.fit_model = FitModel::Linear;
  return c;
}

std::vector<std::string> names() {
  return {"fig1", "fig2", "fig3", "fig5", "fig6", "fig7", "fig8"};
}

namespace {

constexpr double kNoiseProbability = 1e-3;
constexpr int kNoiseTrajectories = 1000;

std::string staircase_csv(const SweepConfig& c, int points) {
  const double lo = std::min(c.bz_initial, c.bz_final);
  const double hi = std::max(c.bz_initial, c.bz_final);
  const auto curve =
      exact_magnetization_curve(c.hamiltonian(0.0), uniform_grid(lo, hi, points));
  std::string out = "Bz,m\n";
  for (const auto& e : curve.entries) out += csv_row({e.bz, e.m});
  return out;
}

std::string schedule_fraction_csv(const RampSchedule& s) {
  std::string out = "t,t_over_tf,Bz\n";
  for (const auto& step : s.steps) {
    out += csv_row({step.t, step.t / s.total_time, step.bz});
  }
  return out;
}

void write_sweep(const SweepConfig& c, const std::filesystem::path& dir,
                 int jobs, std::ostream& log) {
  const auto report = full_pipeline(c, jobs);
  write_report(report, dir);
  log << "  " << dir.string() << ": ";
  if (report.fit) {
    log << to_string(report.fit->model) << " Bz_c(0) = "
        << format_number(report.fit->bz_critical_at_zero) << "\n";
  } else {
    log << "no fit\n";
  }
}

struct Series {
  std::string source;
  std::vector<CrossingEstimate> points;
  FitModel model;
};

void write_extrapolation(const std::string& panel,
                         const std::vector<Series>& series,
                         std::string& points_csv, std::string& fits_csv,
                         std::ostream& log) {
  for (const auto& s : series) {
    for (const auto& p : s.points) {
      points_csv += panel + "," + s.source + "," + format_number(p.bx) + "," +
                    format_number(p.bz_critical) + "\n";
    }
    const auto fit = extrapolate_to_zero_field(s.points, s.model);
    std::string row = panel + "," + s.source + "," + to_string(fit.model) +
                      "," + format_number(fit.bz_critical_at_zero) + "," +
                      format_number(fit.residual_norm);
    for (std::size_t k = 0; k < 3; ++k) {
      row += ",";
      if (k < fit.coefficients.size()) row += format_number(fit.coefficients[k]);
    }
    fits_csv += row + "\n";
    log << "  " << panel << " " << s.source << ": " << to_string(fit.model)
        << " Bz_c(0) = " << format_number(fit.bz_critical_at_zero) << "\n";
  }
}

Series evolved_series(const std::string& source, const SweepConfig& c,
                      int jobs) {
  const auto report = full_pipeline(c, jobs);
  return {source, report.estimates(), c.fit_model};
}

void fig1(const std::filesystem::path& dir, std::ostream& log) {
  const SweepConfig c = resolve_config(ten_site());
  write_file_atomic(dir / "fig1_exact.csv", staircase_csv(c, 1501));
  std::string table = "m_high,m_low,Bz_critical\n";
  for (const auto& x : find_exact_crossings(c.hamiltonian(0.0), 0.0,
                                            c.bz_initial)) {
    table += csv_row({x.m_high, x.m_low, x.bz_critical});
  }
  write_file_atomic(dir / "fig1_crossings.csv", table);
  log << "  evolving 10 sites, 1000 steps\n";
  write_file_atomic(dir / "fig1_evolved.csv", trace_to_csv(run_trace(c, 0)));
  write_file_atomic(dir / "fig1_config.json", sweep_config_to_json(c));
}

void fig2(const std::filesystem::path& dir) {
  for (int sites : {2, 3}) {
    for (double bx : {0.0, 0.2}) {
      HamiltonianSpec spec;
      spec.sites = sites;
      spec.bx = bx;
      const auto grid = uniform_grid(0.0, 2.0, 401);
      write_file_atomic(dir / ("fig2_L" + std::to_string(sites) + "_bx" +
                               format_number(bx) + ".csv"),
                        spectrum_scan_csv(spec, grid, 1 << sites));
    }
  }
}

void fig3(const std::filesystem::path& dir) {
  struct Case {
    SweepConfig config;
    double bx;
    int steps;
    const char* name;
  };
  const Case cases[] = {{two_site(true), 0.02, 200, "fig3_L2_200.csv"},
                        {two_site(true), 0.02, 20, "fig3_L2_20.csv"},
                        {three_site(), 0.08, 200, "fig3_L3_200.csv"},
                        {three_site(), 0.08, 50, "fig3_L3_50.csv"}};
  for (const auto& k : cases) {
    const auto& c = k.config;
    const auto s = build_local_ramp(c.hamiltonian(k.bx), c.gamma, c.bz_initial,
                                    c.bz_final, k.steps);
    write_file_atomic(dir / k.name, schedule_fraction_csv(s));
  }
}

void fig5(const std::filesystem::path& dir, int jobs, std::ostream& log) {
  for (bool up : {true, false}) {
    const SweepConfig sim = two_site(up);
    const std::string side = up ? "up" : "down";
    write_file_atomic(dir / ("fig5_exact_" + side + ".csv"),
                      staircase_csv(sim, 1001));
    write_sweep(sim, dir / ("fig5_" + side + "_simulator"), jobs, log);
    write_sweep(noisy(sim, kNoiseProbability, kNoiseTrajectories),
                dir / ("fig5_" + side + "_noisy"), jobs, log);
  }
}

void fig6(const std::filesystem::path& dir, int jobs, std::ostream& log) {
  const SweepConfig sim = three_site();
  write_file_atomic(dir / "fig6_exact.csv", staircase_csv(sim, 1001));
  write_sweep(sim, dir / "fig6_simulator", jobs, log);
}

void fig7(const std::filesystem::path& dir, int jobs, std::ostream& log) {
  std::string points = "panel,source,Bx,Bz_critical\n";
  std::string fits =
      "panel,source,model,Bz_critical_at_zero,residual_norm,c0,c1,c2\n";
  for (bool up : {true, false}) {
    const SweepConfig sim = two_site(up);
    const std::string panel = up ? "all-up" : "all-down";
    const auto exact0 = find_exact_crossings(sim.hamiltonian(0.0),
                                             std::min(sim.bz_initial, 0.0),
                                             std::max(sim.bz_initial, 0.0));
    for (const auto& x : exact0) {
      points += panel + ",exact-bx0,0," + format_number(x.bz_critical) + "\n";
    }
    write_extrapolation(
        panel,
        {{"exact-ground-state", exact_crossing_estimates(sim),
          FitModel::QuarticEven},
         evolved_series("evolution-1000", two_site(up, 1000), jobs),
         evolved_series("simulator-20", sim, jobs),
         evolved_series("noisy-20",
                        noisy(sim, kNoiseProbability, kNoiseTrajectories),
                        jobs)},
        points, fits, log);
  }
  write_file_atomic(dir / "fig7_crossings.csv", points);
  write_file_atomic(dir / "fig7_fits.csv", fits);
}

void fig8(const std::filesystem::path& dir, int jobs, std::ostream& log) {
  std::string points = "panel,source,Bx,Bz_critical\n";
  std::string fits =
      "panel,source,model,Bz_critical_at_zero,residual_norm,c0,c1,c2\n";
  const SweepConfig sim = three_site();
  for (const auto& x :
       find_exact_crossings(sim.hamiltonian(0.0), 0.0, sim.bz_initial)) {
    if (x.m_high == 1.5) {
      points += "all-up,exact-bx0,0," + format_number(x.bz_critical) + "\n";
    }
  }
  write_extrapolation(
      "all-up",
      {{"exact-ground-state", exact_crossing_estimates(sim),
        FitModel::QuarticEven},
       evolved_series("evolution-1000", three_site(1000), jobs),
       evolved_series("simulator-50", sim, jobs)},
      points, fits, log);
  write_file_atomic(dir / "fig8_crossings.csv", points);
  write_file_atomic(dir / "fig8_fits.csv", fits);
}

}  // namespace

void write_figure(const std::string& name, const std::filesystem::path& dir,
                  int jobs, std::ostream& log) {
  const auto all = names();
  if (std::find(all.begin(), all.end(), name) == all.end()) {
    std::string known;
    for (const auto& n : all) known += (known.empty() ? "" : ", ") + n;
    throw ValidationError("unknown figure '" + name + "' (known: " + known +
                          ")");
  }
  std::filesystem::create_directories(dir);
  log << name << " -> " << dir.string() << "\n";
  if (name == "fig1") fig1(dir, log);
  if (name == "fig2") fig2(dir);
  if (name == "fig3") fig3(dir);
  if (name == "fig5") fig5(dir, jobs, log);
  if (name == "fig6") fig6(dir, jobs, log);
  if (name == "fig7") fig7(dir, jobs, log);
  if (name == "fig8") fig8(dir, jobs, log);
}

}  // namespace xyphase::figures
