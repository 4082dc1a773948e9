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

#include "xyphase/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "config_json.hpp"
#include "xyphase/csv.hpp"
#include "xyphase/errors.hpp"
#include "xyphase/exact_spectrum.hpp"
#include "xyphase/state_vector.hpp"
#include "xyphase/trotter.hpp"

namespace xyphase {

std::vector<CrossingEstimate> PhaseDiagramReport::estimates() const {
  std::vector<CrossingEstimate> out;
  for (const auto& p : points) {
    if (p.ok && p.crossing) out.push_back(*p.crossing);
  }
  return out;
}

SweepConfig resolve_config(const SweepConfig& config) {
  config.validate();
  SweepConfig c = config;
  c.target_m = config.resolved_target_m();
  if (c.crossing_window) return c;

  const double lo = std::min(c.bz_initial, c.bz_final);
  const double hi = std::max(c.bz_initial, c.bz_final);
  const auto table =
      find_exact_crossings(c.hamiltonian(0.0), lo, hi, {}, c.max_sites);
  for (std::size_t k = 0; k < table.size(); ++k) {
    const double mid = 0.5 * (table[k].m_high + table[k].m_low);
    if (std::abs(mid - *c.target_m) > 1e-9) continue;
    const double bc = table[k].bz_critical;
    const double below = k > 0 ? table[k - 1].bz_critical : lo;
    const double above = k + 1 < table.size() ? table[k + 1].bz_critical : hi;
    c.crossing_window = CrossingWindow{k > 0 ? 0.5 * (below + bc) : lo,
                                       k + 1 < table.size() ? 0.5 * (bc + above)
                                                            : hi};
    break;
  }
  return c;
}

std::uint64_t point_seed(std::uint64_t seed, std::size_t index) {
  return CounterRng(seed, index, 0x706f696e74ULL).next_u64();
}

namespace {

double round_to_csv(double x) {
  return std::strtod(format_number(x).c_str(), nullptr);
}

MagnetizationTrace quantize(MagnetizationTrace trace) {
  for (auto& e : trace.entries) {
    e.t = round_to_csv(e.t);
    e.bz = round_to_csv(e.bz);
    e.m = round_to_csv(e.m);
  }
  return trace;
}

double final_exact_magnetization(const SweepConfig& c) {
  const SectorLadder ladder(c.hamiltonian(0.0), c.max_sites);
  // The chain is symmetric under a global spin flip, so the down sector
  // mirrors the up sector; this keeps ties on the side the state started.
  if (c.initial_state == InitialState::AllUp) {
    return ladder.ground_magnetization(c.bz_final);
  }
  return -ladder.ground_magnetization(-c.bz_final);
}

}  // namespace

MagnetizationTrace run_trace(const SweepConfig& c, std::size_t index,
                             RampSchedule* schedule_out) {
  const double bx = c.bx_list.at(index);
  const HamiltonianSpec spec = c.hamiltonian(bx);
  RampOptions ramp_opts;
  ramp_opts.quadrature_intervals = c.quadrature_intervals;
  ramp_opts.max_sites = c.max_sites;
  RampSchedule schedule = build_local_ramp(spec, c.gamma, c.bz_initial,
                                           c.bz_final, c.n_steps, ramp_opts);

  const StateVector initial = c.initial_state == InitialState::AllUp
                                  ? StateVector::all_up(c.sites)
                                  : StateVector::all_down(c.sites);
  EvolveOptions opts;
  opts.backend = c.backend;
  opts.shots = c.shots;
  opts.seed = point_seed(c.seed, index);
  opts.max_sites = c.max_sites;
  int trajectories = 1;
  if (c.noise) {
    opts.noise = NoiseConfig{c.noise->probability,
                             point_seed(c.noise->seed, index)};
    trajectories = c.noise->trajectories;
  }
  MagnetizationTrace trace =
      quantize(evolve_averaged(initial, schedule, spec, opts, trajectories));
  if (schedule_out) *schedule_out = std::move(schedule);
  return trace;
}

PointResult analyze_trace(const SweepConfig& c,
                          const MagnetizationTrace& trace) {
  PointResult p;
  p.bx = trace.meta.bx;
  p.trace = trace;
  try {
    const MagnetizationTrace* used = &trace;
    if (c.scale_endpoints) {
      p.scaled = scale_to_endpoints(trace, c.initial_magnetization(),
                                    final_exact_magnetization(c));
      used = &p.scaled->trace;
    }
    p.crossing = find_crossing(*used, c.resolved_target_m(), c.crossing_window);
    p.ok = true;
  } catch (const std::exception& e) {
    p.ok = false;
    p.error = e.what();
  }
  return p;
}

void finish_report(PhaseDiagramReport& report) {
  std::stable_sort(report.points.begin(), report.points.end(),
                   [](const PointResult& a, const PointResult& b) {
                     return a.bx < b.bx;
                   });
  report.warnings.clear();
  for (const auto& p : report.points) {
    if (!p.ok) {
      report.warnings.push_back("Bx = " + format_number(p.bx) +
                                " excluded from the fit: " + p.error);
    }
  }
  report.fit.reset();
  try {
    report.fit = extrapolate_to_zero_field(report.estimates(),
                                           report.config.fit_model);
  } catch (const ValidationError& e) {
    report.warnings.push_back(std::string("no extrapolation: ") + e.what());
  }
}

PhaseDiagramReport full_pipeline(const SweepConfig& config, int jobs) {
  PhaseDiagramReport report;
  report.config = resolve_config(config);
  const SweepConfig& c = report.config;
  const std::size_t n = c.bx_list.size();
  report.points.resize(n);

  auto run_one = [&](std::size_t i) {
    PointResult p;
    try {
      RampSchedule schedule;
      MagnetizationTrace trace = run_trace(c, i, &schedule);
      p = analyze_trace(c, trace);
      p.schedule = std::move(schedule);
    } catch (const std::exception& e) {
      p.ok = false;
      p.error = e.what();
    }
    p.bx = c.bx_list[i];
    report.points[i] = std::move(p);
  };

  const auto workers =
      static_cast<std::size_t>(std::clamp<std::size_t>(jobs < 1 ? 1 : jobs, 1, n));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) run_one(i);
      });
    }
    for (auto& t : pool) t.join();
  }
  finish_report(report);
  return report;
}

std::vector<CrossingEstimate> exact_crossing_estimates(
    const SweepConfig& config) {
  config.validate();
  const double target = config.resolved_target_m();
  const double lo = std::min(config.bz_initial, config.bz_final);
  const double hi = std::max(config.bz_initial, config.bz_final);
  std::vector<CrossingEstimate> out;
  for (double bx : config.bx_list) {
    const double bc = ground_state_crossing(config.hamiltonian(bx), target, lo,
                                            hi, 201, 1e-10, config.max_sites);
    out.push_back({bx, target, bc, "ground-state-root"});
  }
  return out;
}

std::string trace_file_name(double bx) {
  return "trace_bx_" + format_number(bx) + ".csv";
}

std::string ramp_file_name(double bx) {
  return "ramp_bx_" + format_number(bx) + ".csv";
}

namespace {

detail::Json report_json(const PhaseDiagramReport& r) {
  detail::Json j;
  j["config"] = detail::config_to_json(r.config);
  j["points"] = detail::Json::array();
  for (const auto& p : r.points) {
    detail::Json e;
    e["Bx"] = p.bx;
    e["status"] = p.ok ? "ok" : "failed";
    if (p.crossing) {
      e["Bz_critical"] = p.crossing->bz_critical;
      e["target_m"] = p.crossing->target_m;
      e["method"] = p.crossing->method;
    }
    if (!p.ok) e["error"] = p.error;
    if (p.trace) e["trace_file"] = trace_file_name(p.bx);
    if (p.schedule) {
      e["ramp_file"] = ramp_file_name(p.bx);
      e["total_time"] = p.schedule->total_time;
    }
    if (p.scaled) {
      e["scale"] = p.scaled->scale;
      e["offset"] = p.scaled->offset;
    }
    j["points"].push_back(std::move(e));
  }
  if (r.fit) {
    j["fit"] = {{"model", to_string(r.fit->model)},
                {"coefficients", r.fit->coefficients},
                {"Bz_critical_at_zero", r.fit->bz_critical_at_zero},
                {"residual_norm", r.fit->residual_norm}};
  } else {
    j["fit"] = nullptr;
  }
  j["warnings"] = r.warnings;
  return j;
}

}  // namespace

std::string report_to_json(const PhaseDiagramReport& report) {
  return report_json(report).dump(2) + "\n";
}

void write_report(const PhaseDiagramReport& report,
                  const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& p : report.points) {
    if (p.trace) {
      write_file_atomic(dir / trace_file_name(p.bx), trace_to_csv(*p.trace));
    }
    if (p.schedule) {
      write_file_atomic(dir / ramp_file_name(p.bx),
                        schedule_to_csv(*p.schedule));
    }
  }
  write_file_atomic(dir / "report.json", report_to_json(report));
}

PhaseDiagramReport reanalyze_report(const std::filesystem::path& report_path) {
  if (!std::filesystem::exists(report_path)) {
    throw ComputationError("report not found: " + report_path.string());
  }
  const std::string text = read_file(report_path);
  detail::Json j;
  try {
    j = detail::Json::parse(text);
  } catch (const detail::Json::parse_error& e) {
    throw ValidationError(report_path.string() + ": malformed report: " +
                          e.what());
  }
  if (!j.is_object() || !j.contains("config") || !j.contains("points")) {
    throw ValidationError(report_path.string() +
                          ": report needs 'config' and 'points'");
  }

  PhaseDiagramReport report;
  report.config =
      detail::config_from_json(j["config"], text, report_path.string());
  const std::filesystem::path dir = report_path.parent_path();
  for (const auto& e : j["points"]) {
    const double bx = e.at("Bx").get<double>();
    if (!e.contains("trace_file")) {
      PointResult p;
      p.bx = bx;
      p.error = e.value("error", std::string("no trace recorded"));
      report.points.push_back(std::move(p));
      continue;
    }
    const auto file = dir / e.at("trace_file").get<std::string>();
    if (!std::filesystem::exists(file)) {
      throw ComputationError("missing trace file: " + file.string());
    }
    MagnetizationTrace trace = trace_from_csv(read_file(file));
    trace.meta.sites = report.config.sites;
    trace.meta.bx = bx;
    trace.meta.gamma = report.config.gamma;
    trace.meta.backend = to_string(report.config.backend);
    PointResult p = analyze_trace(report.config, trace);
    p.bx = bx;
    report.points.push_back(std::move(p));
  }
  finish_report(report);
  return report;
}

}  // namespace xyphase
