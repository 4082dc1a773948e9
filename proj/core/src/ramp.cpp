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

#include "xyphase/ramp.hpp"

#include <algorithm>
#include <cmath>

#include "xyphase/csv.hpp"
#include "xyphase/errors.hpp"

namespace xyphase {

const char* to_string(RampDirection d) {
  return d == RampDirection::Down ? "down" : "up";
}

namespace {

// Gap points ordered from bz_initial to bz_final.
std::vector<GapPoint> oriented_points(const GapFunction& gap, double bz_initial,
                                      double bz_final) {
  if (gap.points.size() < 2) {
    throw ValidationError("gap function needs at least two points");
  }
  std::vector<GapPoint> pts = gap.points;
  if (pts.front().bz != bz_initial) std::reverse(pts.begin(), pts.end());
  const double span = std::abs(bz_final - bz_initial);
  const double tol = 1e-9 * std::max(1.0, span);
  if (std::abs(pts.front().bz - bz_initial) > tol ||
      std::abs(pts.back().bz - bz_final) > tol) {
    throw ValidationError("gap grid must start and end at the ramp endpoints");
  }
  return pts;
}

double integrate_inverse_gap_squared(const std::vector<GapPoint>& pts) {
  double total = 0.0;
  for (std::size_t k = 1; k < pts.size(); ++k) {
    const double a = pts[k - 1].gap * pts[k - 1].gap;
    const double b = pts[k].gap * pts[k].gap;
    total += 0.5 * (1.0 / a + 1.0 / b) * std::abs(pts[k].bz - pts[k - 1].bz);
  }
  return total;
}

void require_open_gap(const std::vector<GapPoint>& pts) {
  for (const auto& p : pts) {
    if (!(p.gap * p.gap >= kMinGapSquared)) {
      throw DivergingIntegralError(
          "gap closes at Bz = " + format_number(p.bz) +
          " (Delta = " + format_number(p.gap) +
          "); the ramp integral diverges. Use a nonzero Bx.");
    }
  }
}

}  // namespace

std::vector<FieldTime> ramp_time_of_field(const GapFunction& gap, double gamma,
                                          double bz_initial, double bz_final) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw ValidationError("adiabaticity parameter gamma must be positive");
  }
  if (bz_initial == bz_final) {
    throw ValidationError("ramp endpoints must differ");
  }
  const auto pts = oriented_points(gap, bz_initial, bz_final);
  require_open_gap(pts);

  std::vector<FieldTime> out;
  out.reserve(pts.size());
  double t = 0.0;
  out.push_back({pts.front().bz, 0.0});
  for (std::size_t k = 1; k < pts.size(); ++k) {
    const double a = pts[k - 1].gap * pts[k - 1].gap;
    const double b = pts[k].gap * pts[k].gap;
    t += gamma * 0.5 * (1.0 / a + 1.0 / b) * std::abs(pts[k].bz - pts[k - 1].bz);
    out.push_back({pts[k].bz, t});
  }
  return out;
}

RampSchedule invert_to_uniform_time(const std::vector<FieldTime>& points,
                                    int n_steps, double gamma, double bx) {
  if (n_steps < 1) throw ValidationError("ramp needs at least one step");
  if (points.size() < 2) throw ValidationError("ramp needs at least two points");
  std::vector<double> t;
  std::vector<double> bz;
  t.reserve(points.size());
  bz.reserve(points.size());
  for (const auto& p : points) {
    if (!t.empty() && !(p.t > t.back())) {
      throw ValidationError("ramp times must be strictly increasing");
    }
    t.push_back(p.t);
    bz.push_back(p.bz);
  }
  const AkimaSpline spline(t, bz);

  RampSchedule s;
  s.gamma = gamma;
  s.bx = bx;
  s.direction = bz.back() < bz.front() ? RampDirection::Down : RampDirection::Up;
  s.total_time = t.back() - t.front();
  s.dt = s.total_time / n_steps;

  const double lo = std::min(bz.front(), bz.back());
  const double hi = std::max(bz.front(), bz.back());
  s.steps.resize(static_cast<std::size_t>(n_steps) + 1);
  for (int k = 0; k <= n_steps; ++k) {
    const double time = t.front() + s.dt * k;
    s.steps[k] = {time - t.front(), std::clamp(spline(time), lo, hi)};
  }
  s.steps.front().bz = bz.front();
  s.steps.back() = {s.total_time, bz.back()};

  for (std::size_t k = 1; k < s.steps.size(); ++k) {
    const double delta = s.steps[k].bz - s.steps[k - 1].bz;
    const bool ok = s.direction == RampDirection::Down ? delta <= 0.0
                                                       : delta >= 0.0;
    if (!ok) {
      throw ComputationError("interpolated ramp is not monotone near t = " +
                             format_number(s.steps[k].t));
    }
  }
  return s;
}

RampSchedule build_local_ramp(const HamiltonianSpec& spec, double gamma,
                              double bz_initial, double bz_final, int n_steps,
                              RampOptions options) {
  if (options.quadrature_intervals < 1) {
    throw ValidationError("quadrature needs at least one interval");
  }
  if (bz_initial == bz_final) {
    throw ValidationError("ramp endpoints must differ");
  }
  const auto grid =
      uniform_grid(bz_initial, bz_final, options.quadrature_intervals + 1);
  const GapFunction gap = gap_function(spec, grid, options.max_sites);
  const auto points = ramp_time_of_field(gap, gamma, bz_initial, bz_final);
  return invert_to_uniform_time(points, n_steps, gamma, spec.bx);
}

double gamma_for_total_time(const GapFunction& gap, double total_time,
                            double bz_initial, double bz_final) {
  if (!(total_time > 0.0)) throw ValidationError("total time must be positive");
  const auto pts = oriented_points(gap, bz_initial, bz_final);
  require_open_gap(pts);
  return total_time / integrate_inverse_gap_squared(pts);
}

AkimaSpline gap_interpolant(const GapFunction& gap) {
  auto pts = gap.points;
  std::sort(pts.begin(), pts.end(),
            [](const GapPoint& a, const GapPoint& b) { return a.bz < b.bz; });
  std::vector<double> x;
  std::vector<double> y;
  for (const auto& p : pts) {
    x.push_back(p.bz);
    y.push_back(p.gap);
  }
  return AkimaSpline(x, y);
}

std::vector<double> effective_gamma(const RampSchedule& schedule,
                                    const GapFunction& gap) {
  if (schedule.steps.size() < 2) {
    throw ValidationError("effective gamma needs at least two ramp samples");
  }
  const AkimaSpline delta = gap_interpolant(gap);
  std::vector<double> out;
  for (std::size_t k = 1; k < schedule.steps.size(); ++k) {
    const double dbz = schedule.steps[k].bz - schedule.steps[k - 1].bz;
    if (dbz == 0.0) continue;
    const double mid = 0.5 * (schedule.steps[k].bz + schedule.steps[k - 1].bz);
    const double d = delta(mid);
    const double dt = schedule.steps[k].t - schedule.steps[k - 1].t;
    out.push_back(std::abs(d * d * dt / dbz));
  }
  return out;
}

double dwell_time(const RampSchedule& schedule, double lo, double hi) {
  if (lo > hi) std::swap(lo, hi);
  double total = 0.0;
  for (std::size_t k = 1; k < schedule.steps.size(); ++k) {
    const auto& a = schedule.steps[k - 1];
    const auto& b = schedule.steps[k];
    const double dt = b.t - a.t;
    const double b_lo = std::min(a.bz, b.bz);
    const double b_hi = std::max(a.bz, b.bz);
    if (b_hi == b_lo) {
      if (a.bz >= lo && a.bz <= hi) total += dt;
      continue;
    }
    const double overlap =
        std::max(0.0, std::min(hi, b_hi) - std::max(lo, b_lo));
    total += dt * overlap / (b_hi - b_lo);
  }
  return total;
}

std::string schedule_to_csv(const RampSchedule& schedule) {
  std::string out = "t,Bz\n";
  for (const auto& s : schedule.steps) out += csv_row({s.t, s.bz});
  return out;
}

}  // namespace xyphase
