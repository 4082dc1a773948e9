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

#include "xyphase_cli/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "xyphase/config.hpp"
#include "xyphase/csv.hpp"
#include "xyphase/errors.hpp"
#include "xyphase/pipeline.hpp"
#include "xyphase/ramp.hpp"
#include "xyphase_cli/figures.hpp"

namespace xyphase::cli {

namespace fs = std::filesystem;

namespace {

struct Flags {
  std::string config;
  std::string out;
  int jobs = 1;
  std::optional<std::string> backend;
  std::optional<int> shots;
  std::optional<std::uint64_t> seed;
  std::optional<double> bx;
  std::string report;
  std::string figure;
};

void add_common(CLI::App* sub, Flags& f, bool needs_config) {
  auto* config = sub->add_option("--config", f.config, "sweep config (JSON)");
  if (needs_config) config->required();
  sub->add_option("--out", f.out, "output directory (overrides output_dir)");
  sub->add_option("--jobs", f.jobs, "parallel Bx entries")
      ->check(CLI::PositiveNumber);
  sub->add_option("--backend", f.backend,
                  "exact-exponential or gate-level (overrides config)");
  sub->add_option("--shots", f.shots, "samples per step, 0 = exact");
  sub->add_option("--seed", f.seed, "seed (overrides config)");
}

SweepConfig load(const Flags& f) {
  if (!fs::exists(f.config)) {
    throw ValidationError(f.config + ": config file not found");
  }
  SweepConfig c = load_sweep_config(f.config);
  if (f.backend) {
    try {
      c.backend = backend_from_string(*f.backend);
    } catch (const ValidationError& e) {
      throw ValidationError(std::string("--backend: ") + e.what());
    }
  }
  if (f.shots) c.shots = *f.shots;
  if (f.seed) c.seed = *f.seed;
  if (!f.out.empty()) c.output_dir = f.out;
  try {
    c.validate();
  } catch (const ValidationError& e) {
    throw ValidationError("after command-line overrides: " +
                          std::string(e.what()));
  }
  return c;
}

int cmd_ramp(const Flags& f, std::ostream& out) {
  const SweepConfig c = resolve_config(load(f));
  const fs::path dir = c.output_dir;
  fs::create_directories(dir);
  RampOptions opts;
  opts.quadrature_intervals = c.quadrature_intervals;
  opts.max_sites = c.max_sites;
  for (double bx : c.bx_list) {
    const auto s = build_local_ramp(c.hamiltonian(bx), c.gamma, c.bz_initial,
                                    c.bz_final, c.n_steps, opts);
    const fs::path file = dir / ramp_file_name(bx);
    write_file_atomic(file, schedule_to_csv(s));
    out << "wrote " << file.string() << " (T = " << format_number(s.total_time)
        << ")\n";
  }
  return kExitOk;
}

int cmd_evolve(const Flags& f, std::ostream& out) {
  SweepConfig c = load(f);
  std::size_t index = 0;
  if (f.bx) {
    const auto it = std::find(c.bx_list.begin(), c.bx_list.end(), *f.bx);
    if (it != c.bx_list.end()) {
      index = static_cast<std::size_t>(it - c.bx_list.begin());
    } else {
      c.bx_list = {*f.bx};
      c.validate();
    }
  }
  c = resolve_config(c);
  const fs::path dir = c.output_dir;
  fs::create_directories(dir);
  const auto trace = run_trace(c, index);
  const fs::path file = dir / trace_file_name(c.bx_list[index]);
  write_file_atomic(file, trace_to_csv(trace));
  out << "wrote " << file.string() << " (" << trace.entries.size()
      << " entries, final m = " << format_number(trace.entries.back().m)
      << ")\n";
  return kExitOk;
}

void print_report(const PhaseDiagramReport& r, std::ostream& out) {
  for (const auto& p : r.points) {
    out << "Bx = " << format_number(p.bx) << ": ";
    if (p.ok) {
      out << "Bz_c = " << format_number(p.crossing->bz_critical) << "\n";
    } else {
      out << "failed\n";
    }
  }
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  if (r.fit) {
    out << to_string(r.fit->model) << " extrapolation: Bz_c(Bx -> 0) = "
        << format_number(r.fit->bz_critical_at_zero) << " (residual "
        << format_number(r.fit->residual_norm) << ")\n";
  }
}

int cmd_sweep(const Flags& f, std::ostream& out) {
  const SweepConfig c = load(f);
  const auto report = full_pipeline(c, f.jobs);
  write_report(report, c.output_dir);
  print_report(report, out);
  out << "wrote " << (fs::path(c.output_dir) / "report.json").string() << "\n";
  return report.fit ? kExitOk : kExitRuntime;
}

int cmd_extract(const Flags& f, std::ostream& out) {
  fs::path report_path = f.report;
  if (report_path.empty()) {
    if (!f.out.empty()) {
      report_path = fs::path(f.out) / "report.json";
    } else if (!f.config.empty()) {
      report_path = fs::path(load(f).output_dir) / "report.json";
    } else {
      throw ValidationError("extract needs --report, --out or --config");
    }
  }
  const auto report = reanalyze_report(report_path);
  const fs::path dir = f.out.empty() ? report_path.parent_path() : fs::path(f.out);
  fs::create_directories(dir.empty() ? fs::path(".") : dir);
  const fs::path file = dir / "extract.json";
  write_file_atomic(file, report_to_json(report));
  print_report(report, out);
  out << "wrote " << file.string() << "\n";
  return report.fit ? kExitOk : kExitRuntime;
}

int cmd_figure(const Flags& f, std::ostream& out) {
  figures::write_figure(f.figure, f.out.empty() ? "figures" : f.out, f.jobs,
                        out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Adiabatic phase-diagram sweeps for the XY chain", "xyphase"};
  app.require_subcommand(1);
  Flags f;

  auto* ramp = app.add_subcommand("ramp", "write the local ramp of each Bx");
  add_common(ramp, f, true);
  auto* evolve = app.add_subcommand("evolve", "write one magnetization trace");
  add_common(evolve, f, true);
  evolve->add_option("--bx", f.bx, "Bx to evolve (default: first of Bx_list)");
  auto* sweep = app.add_subcommand("sweep", "run the protocol over Bx_list");
  add_common(sweep, f, true);
  auto* extract =
      app.add_subcommand("extract", "re-run the analysis on stored traces");
  add_common(extract, f, false);
  extract->add_option("--report", f.report, "report.json of a sweep");
  auto* figure = app.add_subcommand("figure", "write a figure dataset");
  add_common(figure, f, false);
  figure->add_option("name", f.figure, "fig1, fig2, fig3, fig5, fig6, fig7, fig8")
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto used = app.get_subcommands();
    out << (used.empty() ? app.help() : used.front()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    if (ramp->parsed()) return cmd_ramp(f, out);
    if (evolve->parsed()) return cmd_evolve(f, out);
    if (sweep->parsed()) return cmd_sweep(f, out);
    if (extract->parsed()) return cmd_extract(f, out);
    return cmd_figure(f, out);
  } catch (const ValidationError& e) {
    err << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace xyphase::cli
