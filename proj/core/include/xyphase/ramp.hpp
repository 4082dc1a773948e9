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

// Local adiabatic ramps. The field moves at a rate proportional to the
// squared instantaneous gap,
//
//   gamma = | Delta(Bz)^2 dt / dBz |,   t(Bz) = gamma * | int dBz' / Delta^2 |,
//
// so the sweep slows down wherever the gap closes.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "xyphase/akima.hpp"
#include "xyphase/exact_spectrum.hpp"
#include "xyphase/spin_model.hpp"

namespace xyphase {

enum class RampDirection { Down, Up };

const char* to_string(RampDirection d);

struct RampStep {
  double t = 0.0;
  double bz = 0.0;
};

struct RampSchedule {
  double gamma = 0.0;
  std::vector<RampStep> steps;  // n_steps + 1 samples, uniform in t
  double total_time = 0.0;
  double dt = 0.0;
  double bx = 0.0;
  RampDirection direction = RampDirection::Down;

  int n_steps() const { return static_cast<int>(steps.size()) - 1; }
  double bz_initial() const { return steps.front().bz; }
  double bz_final() const { return steps.back().bz; }
};

/// A point of the integrated map t(Bz).
struct FieldTime {
  double bz = 0.0;
  double t = 0.0;
};

/// Gaps squared below this abort the ramp integral.
inline constexpr double kMinGapSquared = 1e-12;

/// Default number of trapezoid intervals in Bz.
inline constexpr int kDefaultQuadratureIntervals = 1000;

/// Cumulative trapezoid of gamma / Delta^2 over the gap grid, oriented from
/// bz_initial to bz_final. The grid must start and end at those fields (in
/// either storage order). Throws DivergingIntegralError when the gap closes.
std::vector<FieldTime> ramp_time_of_field(const GapFunction& gap, double gamma,
                                          double bz_initial, double bz_final);

/// Akima interpolation of Bz(t) at n_steps + 1 uniform times. Samples are
/// clamped to the endpoint range; a non-monotone result throws
/// ComputationError instead of being reordered.
RampSchedule invert_to_uniform_time(const std::vector<FieldTime>& points,
                                    int n_steps, double gamma, double bx);

struct RampOptions {
  int quadrature_intervals = kDefaultQuadratureIntervals;
  int max_sites = kDefaultMaxSites;
};

/// Gap on the quadrature grid, integral, and inversion in one call.
/// spec.bz is ignored; spec.bx sets the symmetry-breaking field.
RampSchedule build_local_ramp(const HamiltonianSpec& spec, double gamma,
                              double bz_initial, double bz_final, int n_steps,
                              RampOptions options = {});

/// Fixed-duration mode: the gamma that makes the ramp last total_time.
double gamma_for_total_time(const GapFunction& gap, double total_time,
                            double bz_initial, double bz_final);

/// Akima interpolant of Delta(Bz) over ascending Bz.
AkimaSpline gap_interpolant(const GapFunction& gap);

/// Per-step |Delta^2(Bz_mid) dt / dBz|; steps with dBz = 0 are skipped.
std::vector<double> effective_gamma(const RampSchedule& schedule,
                                    const GapFunction& gap);

/// Time spent with Bz inside [lo, hi], from linear interpolation between
/// schedule samples.
double dwell_time(const RampSchedule& schedule, double lo, double hi);

/// CSV with header "t,Bz".
std::string schedule_to_csv(const RampSchedule& schedule);

}  // namespace xyphase
