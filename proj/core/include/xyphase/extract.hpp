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

// From magnetization traces to critical fields: endpoint scaling, spline
// crossing detection and the Bx -> 0 extrapolation.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xyphase/trace.hpp"

namespace xyphase {

/// Affine correction m -> scale * m + offset that pins both trace endpoints
/// to known values.
struct ScaledTrace {
  MagnetizationTrace base;
  MagnetizationTrace trace;  // corrected copy of base
  double scale = 1.0;
  double offset = 0.0;
};

/// Throws ValidationError for fewer than two entries or equal raw endpoints.
ScaledTrace scale_to_endpoints(const MagnetizationTrace& trace,
                               double m_first_expected,
                               double m_last_expected);

struct CrossingEstimate {
  double bx = 0.0;
  double target_m = 0.0;
  double bz_critical = 0.0;
  std::string method = "spline-root";
};

struct CrossingWindow {
  double lo = 0.0;
  double hi = 0.0;
};

/// Root of the Akima interpolant m(Bz) = target_m, bisected to `tolerance`
/// in Bz. When several roots exist, roots inside `window` are preferred and
/// the steepest one among the candidates wins. Throws NoCrossingError when
/// the trace never brackets target_m.
CrossingEstimate find_crossing(const MagnetizationTrace& trace,
                               double target_m,
                               std::optional<CrossingWindow> window = {},
                               double tolerance = 1e-8);

/// All roots of m(Bz) = target_m in ascending Bz.
std::vector<double> crossing_roots(const MagnetizationTrace& trace,
                                   double target_m, double tolerance = 1e-8);

enum class FitModel { QuarticEven, Linear };

const char* to_string(FitModel m);
/// Accepts "quartic-even" and "linear".
FitModel fit_model_from_string(const std::string& name);

struct ExtrapolationFit {
  FitModel model = FitModel::QuarticEven;
  /// quartic-even: {c0, c2, c4} for c0 + c2 Bx^2 + c4 Bx^4;
  /// linear: {c0, c1} for c0 + c1 Bx.
  std::vector<double> coefficients;
  double bz_critical_at_zero = 0.0;
  double residual_norm = 0.0;

  double evaluate(double bx) const;
};

/// Least-squares fit of Bz_critical(Bx). Needs three distinct Bx^2 values
/// for quartic-even and two distinct Bx values for linear.
ExtrapolationFit extrapolate_to_zero_field(
    const std::vector<CrossingEstimate>& estimates, FitModel model);

}  // namespace xyphase
