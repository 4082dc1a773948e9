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

#include "xyphase/extract.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <utility>

#include <Eigen/Dense>

#include "xyphase/akima.hpp"
#include "xyphase/csv.hpp"
#include "xyphase/errors.hpp"

namespace xyphase {

ScaledTrace scale_to_endpoints(const MagnetizationTrace& trace,
                               double m_first_expected,
                               double m_last_expected) {
  if (trace.entries.size() < 2) {
    throw ValidationError("endpoint scaling needs at least two trace entries");
  }
  const double first = trace.entries.front().m;
  const double last = trace.entries.back().m;
  if (std::abs(last - first) <= 1e-12 * std::max(1.0, std::abs(first))) {
    throw ValidationError("endpoint scaling: raw endpoints are equal");
  }
  ScaledTrace out;
  out.base = trace;
  out.scale = (m_last_expected - m_first_expected) / (last - first);
  out.offset = m_first_expected - out.scale * first;
  out.trace = trace;
  for (auto& e : out.trace.entries) e.m = out.scale * e.m + out.offset;
  // Pin the endpoints exactly; the affine map is only exact up to rounding.
  out.trace.entries.front().m = m_first_expected;
  out.trace.entries.back().m = m_last_expected;
  return out;
}

namespace {

// m(Bz) on strictly increasing Bz; repeated fields are averaged.
AkimaSpline magnetization_spline(const MagnetizationTrace& trace) {
  if (trace.entries.size() < 2) {
    throw ValidationError("crossing search needs at least two trace entries");
  }
  std::vector<std::pair<double, double>> pts;
  for (const auto& e : trace.entries) pts.emplace_back(e.bz, e.m);
  std::stable_sort(pts.begin(), pts.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<double> x;
  std::vector<double> y;
  std::vector<int> count;
  for (const auto& [bz, m] : pts) {
    if (!x.empty() && bz == x.back()) {
      y.back() += m;
      ++count.back();
    } else {
      x.push_back(bz);
      y.push_back(m);
      count.push_back(1);
    }
  }
  for (std::size_t i = 0; i < y.size(); ++i) y[i] /= count[i];
  if (x.size() < 2) {
    throw ValidationError("crossing search needs at least two distinct fields");
  }
  return AkimaSpline(x, y);
}

double bisect(const AkimaSpline& s, double target, double a, double b,
              double tolerance) {
  double fa = s(a) - target;
  if (fa == 0.0) return a;
  while (b - a > tolerance) {
    const double mid = 0.5 * (a + b);
    const double fm = s(mid) - target;
    if (fm == 0.0) return mid;
    if ((fa < 0.0) == (fm < 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

std::vector<double> spline_roots(const AkimaSpline& s, double target,
                                 double tolerance) {
  // Each knot interval is sampled at a few interior points so that a cubic
  // piece crossing the target twice is not missed.
  constexpr int kSubdivisions = 8;
  const auto& x = s.knots();
  std::vector<double> roots;
  for (std::size_t k = 0; k + 1 < x.size(); ++k) {
    double a = x[k];
    double fa = s(a) - target;
    for (int j = 1; j <= kSubdivisions; ++j) {
      const double b = j == kSubdivisions
                           ? x[k + 1]
                           : x[k] + (x[k + 1] - x[k]) * j / kSubdivisions;
      const double fb = s(b) - target;
      if (fa == 0.0) {
        roots.push_back(a);
      } else if ((fa < 0.0) != (fb < 0.0) && fb != 0.0) {
        roots.push_back(bisect(s, target, a, b, tolerance));
      }
      a = b;
      fa = fb;
    }
  }
  if (s(x.back()) == target) roots.push_back(x.back());
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [&](double p, double q) {
                            return std::abs(p - q) <= tolerance;
                          }),
              roots.end());
  return roots;
}

}  // namespace

std::vector<double> crossing_roots(const MagnetizationTrace& trace,
                                   double target_m, double tolerance) {
  return spline_roots(magnetization_spline(trace), target_m, tolerance);
}

CrossingEstimate find_crossing(const MagnetizationTrace& trace,
                               double target_m,
                               std::optional<CrossingWindow> window,
                               double tolerance) {
  const AkimaSpline s = magnetization_spline(trace);
  const auto roots = spline_roots(s, target_m, tolerance);
  if (roots.empty()) {
    throw NoCrossingError("trace for Bx = " + format_number(trace.meta.bx) +
                          " never reaches m = " + format_number(target_m));
  }
  std::vector<double> candidates;
  if (window) {
    const double lo = std::min(window->lo, window->hi);
    const double hi = std::max(window->lo, window->hi);
    for (double r : roots) {
      if (r >= lo && r <= hi) candidates.push_back(r);
    }
  }
  if (candidates.empty()) candidates = roots;

  double best = candidates.front();
  double best_slope = -1.0;
  for (double r : candidates) {
    const double slope = std::abs(s.derivative(r));
    if (slope > best_slope) {
      best = r;
      best_slope = slope;
    }
  }
  return {trace.meta.bx, target_m, best, "spline-root"};
}

const char* to_string(FitModel m) {
  return m == FitModel::QuarticEven ? "quartic-even" : "linear";
}

FitModel fit_model_from_string(const std::string& name) {
  if (name == "quartic-even") return FitModel::QuarticEven;
  if (name == "linear") return FitModel::Linear;
  throw ValidationError("unknown fit model '" + name +
                        "' (expected quartic-even or linear)");
}

double ExtrapolationFit::evaluate(double bx) const {
  if (model == FitModel::Linear) {
    return coefficients.at(0) + coefficients.at(1) * bx;
  }
  const double b2 = bx * bx;
  return coefficients.at(0) + coefficients.at(1) * b2 +
         coefficients.at(2) * b2 * b2;
}

ExtrapolationFit extrapolate_to_zero_field(
    const std::vector<CrossingEstimate>& estimates, FitModel model) {
  const int n_coeff = model == FitModel::QuarticEven ? 3 : 2;
  std::set<double> distinct;
  for (const auto& e : estimates) {
    if (!std::isfinite(e.bx) || !std::isfinite(e.bz_critical)) {
      throw ValidationError("extrapolation input is not finite");
    }
    distinct.insert(model == FitModel::QuarticEven ? e.bx * e.bx : e.bx);
  }
  if (static_cast<int>(distinct.size()) < n_coeff) {
    throw ValidationError(std::string(to_string(model)) + " fit needs " +
                          std::to_string(n_coeff) + " distinct Bx values, got " +
                          std::to_string(distinct.size()));
  }

  const auto rows = static_cast<Eigen::Index>(estimates.size());
  Eigen::MatrixXd a(rows, n_coeff);
  Eigen::VectorXd y(rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const double bx = estimates[r].bx;
    a(r, 0) = 1.0;
    if (model == FitModel::QuarticEven) {
      a(r, 1) = bx * bx;
      a(r, 2) = bx * bx * bx * bx;
    } else {
      a(r, 1) = bx;
    }
    y(r) = estimates[r].bz_critical;
  }
  const Eigen::VectorXd c = a.colPivHouseholderQr().solve(y);

  ExtrapolationFit fit;
  fit.model = model;
  fit.coefficients.assign(c.data(), c.data() + c.size());
  fit.bz_critical_at_zero = c(0);
  fit.residual_norm = (a * c - y).norm();
  return fit;
}

}  // namespace xyphase
