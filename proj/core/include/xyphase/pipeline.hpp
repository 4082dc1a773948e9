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

// The per-Bx protocol (ramp, evolve, crossing) and the sweep that merges it
// into one extrapolated critical field.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "xyphase/config.hpp"
#include "xyphase/extract.hpp"
#include "xyphase/ramp.hpp"
#include "xyphase/trace.hpp"

namespace xyphase {

struct PointResult {
  double bx = 0.0;
  bool ok = false;
  std::string error;  // empty when ok
  std::optional<RampSchedule> schedule;
  std::optional<MagnetizationTrace> trace;
  std::optional<ScaledTrace> scaled;
  std::optional<CrossingEstimate> crossing;
};

struct PhaseDiagramReport {
  SweepConfig config;  // resolved: target_m and crossing_window filled in
  std::vector<PointResult> points;  // ascending Bx
  std::optional<ExtrapolationFit> fit;
  std::vector<std::string> warnings;

  std::vector<CrossingEstimate> estimates() const;
};

/// Fills target_m and, when the Bx = 0 staircase has the target transition
/// inside the ramp interval, the crossing window around it.
SweepConfig resolve_config(const SweepConfig& config);

/// Seed of the measurement stream for the k-th Bx entry.
std::uint64_t point_seed(std::uint64_t seed, std::size_t index);

/// Evolves one Bx entry of a resolved config. Traces are rounded to the
/// CSV precision so that stored files reproduce the analysis exactly.
MagnetizationTrace run_trace(const SweepConfig& resolved, std::size_t index,
                             RampSchedule* schedule_out = nullptr);

/// Endpoint scaling (if configured) and crossing detection for one trace.
PointResult analyze_trace(const SweepConfig& resolved,
                          const MagnetizationTrace& trace);

/// Fit over the successful points; failed points become warnings.
void finish_report(PhaseDiagramReport& report);

/// Runs every Bx entry, `jobs` at a time, then fits. Failures of single
/// points are recorded, not thrown.
PhaseDiagramReport full_pipeline(const SweepConfig& config, int jobs = 1);

/// Reference estimates from exact ground states: for every Bx of the
/// config, the field inside the ramp interval where the Bx-perturbed ground
/// state has <S^z> = target_m. No time evolution is involved.
std::vector<CrossingEstimate> exact_crossing_estimates(
    const SweepConfig& config);

std::string trace_file_name(double bx);
std::string ramp_file_name(double bx);

std::string report_to_json(const PhaseDiagramReport& report);

/// report.json plus one trace CSV and one ramp CSV per evolved Bx entry,
/// each written atomically.
void write_report(const PhaseDiagramReport& report,
                  const std::filesystem::path& dir);

/// Re-runs the analysis on the trace CSVs referenced by a report.json.
/// Throws ComputationError for a missing trace file.
PhaseDiagramReport reanalyze_report(const std::filesystem::path& report_path);

}  // namespace xyphase
