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

#pragma once

#include <span>
#include <vector>

namespace xyphase {

/// Akima (1970) piecewise-cubic interpolant. Knot derivatives are weighted
/// averages of neighbouring secant slopes, so the curve does not ring next
/// to abrupt steps and reproduces linear data exactly. End slopes use the
/// usual two-point linear extrapolation of the secants.
class AkimaSpline {
 public:
  /// x must be strictly increasing with at least two knots.
  AkimaSpline(std::span<const double> x, std::span<const double> y);

  double operator()(double x) const;
  double derivative(double x) const;

  const std::vector<double>& knots() const { return x_; }
  const std::vector<double>& values() const { return y_; }
  const std::vector<double>& knot_slopes() const { return slope_; }

  double front() const { return x_.front(); }
  double back() const { return x_.back(); }

 private:
  std::size_t interval(double x) const;

  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> slope_;
};

}  // namespace xyphase
