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

#include "xyphase/akima.hpp"

#include <algorithm>
#include <cmath>

#include "xyphase/errors.hpp"

namespace xyphase {

AkimaSpline::AkimaSpline(std::span<const double> x, std::span<const double> y)
    : x_(x.begin(), x.end()), y_(y.begin(), y.end()) {
  if (x_.size() != y_.size()) {
    throw ValidationError("Akima spline: x and y differ in length");
  }
  const std::size_t n = x_.size();
  if (n < 2) throw ValidationError("Akima spline needs at least two knots");
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(x_[i]) || !std::isfinite(y_[i])) {
      throw ValidationError("Akima spline: non-finite knot");
    }
    if (i > 0 && !(x_[i] > x_[i - 1])) {
      throw ValidationError("Akima spline: x must be strictly increasing");
    }
  }

  // Secants padded with two extrapolated values on each side: d[k + 2] is
  // the slope of interval k.
  std::vector<double> d(n + 3);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    d[k + 2] = (y_[k + 1] - y_[k]) / (x_[k + 1] - x_[k]);
  }
  if (n == 2) {
    std::fill(d.begin(), d.end(), d[2]);
  } else {
    d[1] = 2.0 * d[2] - d[3];
    d[0] = 2.0 * d[1] - d[2];
    d[n + 1] = 2.0 * d[n] - d[n - 1];
    d[n + 2] = 2.0 * d[n + 1] - d[n];
  }

  std::vector<double> w_right(n);
  std::vector<double> w_left(n);
  double w_max = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    w_right[i] = std::abs(d[i + 3] - d[i + 2]);
    w_left[i] = std::abs(d[i + 1] - d[i]);
    w_max = std::max(w_max, w_right[i] + w_left[i]);
  }
  slope_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double denom = w_right[i] + w_left[i];
    if (denom > 1e-9 * w_max) {
      slope_[i] = (w_right[i] * d[i + 1] + w_left[i] * d[i + 2]) / denom;
    } else {
      slope_[i] = 0.5 * (d[i + 1] + d[i + 2]);
    }
  }
}

std::size_t AkimaSpline::interval(double x) const {
  const auto it = std::upper_bound(x_.begin(), x_.end(), x);
  if (it == x_.begin()) return 0;
  const auto k = static_cast<std::size_t>(it - x_.begin()) - 1;
  return std::min(k, x_.size() - 2);
}

double AkimaSpline::operator()(double x) const {
  const std::size_t k = interval(x);
  const double h = x_[k + 1] - x_[k];
  const double s = (x - x_[k]) / h;
  const double s2 = s * s;
  const double s3 = s2 * s;
  const double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
  const double h10 = s3 - 2.0 * s2 + s;
  const double h01 = -2.0 * s3 + 3.0 * s2;
  const double h11 = s3 - s2;
  return h00 * y_[k] + h10 * h * slope_[k] + h01 * y_[k + 1] +
         h11 * h * slope_[k + 1];
}

double AkimaSpline::derivative(double x) const {
  const std::size_t k = interval(x);
  const double h = x_[k + 1] - x_[k];
  const double s = (x - x_[k]) / h;
  const double s2 = s * s;
  const double d00 = (6.0 * s2 - 6.0 * s) / h;
  const double d10 = 3.0 * s2 - 4.0 * s + 1.0;
  const double d01 = (-6.0 * s2 + 6.0 * s) / h;
  const double d11 = 3.0 * s2 - 2.0 * s;
  return d00 * y_[k] + d10 * slope_[k] + d01 * y_[k + 1] + d11 * slope_[k + 1];
}

}  // namespace xyphase
