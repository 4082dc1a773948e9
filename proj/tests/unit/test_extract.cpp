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

#include <cmath>
#include <functional>
#include <numbers>

#include "catch_amalgamated.hpp"
#include "xyphase/errors.hpp"
#include "xyphase/exact_spectrum.hpp"
#include "xyphase/extract.hpp"

using namespace xyphase;
using Catch::Matchers::WithinAbs;

namespace {

template <class F>
MagnetizationTrace synthetic(F m, double bz0, double bz1, int n) {
  MagnetizationTrace tr;
  tr.meta.sites = 2;
  tr.meta.n_steps = n;
  for (int k = 0; k <= n; ++k) {
    const double bz = bz0 + (bz1 - bz0) * k / n;
    tr.entries.push_back({k, double(k), bz, m(bz)});
  }
  return tr;
}

std::vector<CrossingEstimate> from_model(std::vector<double> bx,
                                         const std::function<double(double)>& f) {
  std::vector<CrossingEstimate> out;
  for (double x : bx) out.push_back({x, 0.5, f(x)});
  return out;
}

}  // namespace

TEST_CASE("Endpoint scaling") {
  const auto exact = synthetic([](double b) { return b; }, 1.0, 0.0, 10);
  auto s = scale_to_endpoints(exact, 1.0, 0.0);
  CHECK_THAT(s.scale, WithinAbs(1.0, 1e-15));
  CHECK_THAT(s.offset, WithinAbs(0.0, 1e-15));

  const auto raw =
      synthetic([](double b) { return 0.1 + 0.8 * b; }, 1.0, 0.0, 10);
  s = scale_to_endpoints(raw, 1.0, 0.0);
  CHECK_THAT(s.scale, WithinAbs(1.25, 1e-12));
  CHECK_THAT(s.offset, WithinAbs(-0.125, 1e-12));
  CHECK(s.trace.entries.front().m == 1.0);
  CHECK(s.trace.entries.back().m == 0.0);
  CHECK_THAT(s.trace.entries[5].m, WithinAbs(0.5, 1e-12));
  CHECK(s.base.entries[5].m == raw.entries[5].m);

  const auto flat = synthetic([](double) { return 0.3; }, 1.0, 0.0, 4);
  CHECK_THROWS_AS(scale_to_endpoints(flat, 1.0, 0.0), ValidationError);
}

TEST_CASE("Crossing of a linear trace") {
  const auto tr = synthetic([](double b) { return b; }, 1.0, 0.0, 7);
  const auto c = find_crossing(tr, 0.5);
  CHECK_THAT(c.bz_critical, WithinAbs(0.5, 1e-8));
  CHECK(c.target_m == 0.5);
  CHECK(c.method == "spline-root");
  CHECK_THROWS_AS(find_crossing(tr, 1.5), NoCrossingError);
}

TEST_CASE("Crossing of a sharp step") {
  HamiltonianSpec spec{2, 1.0, 0.0, 0.0, true};
  const auto step = exact_magnetization_curve(spec, uniform_grid(1.0, 0.0, 1001));
  CHECK_THAT(find_crossing(step, 0.5).bz_critical, WithinAbs(0.5, 1e-3));
}

TEST_CASE("The window selects among several roots") {
  // two descents: a gentle one near 0.8 and a steep one near 0.3
  auto m = [](double b) {
    return 0.5 + 0.05 * std::tanh((b - 0.8) / 0.05) + 0.4 * std::tanh((b - 0.3) / 0.02);
  };
  // a wiggle that crosses 0.5 three times
  auto wiggly = [](double b) { return 0.5 + 0.3 * std::sin(12.0 * b) * (1 - b); };
  const auto tr = synthetic(wiggly, 1.0, 0.0, 400);
  const auto roots = crossing_roots(tr, 0.5);
  REQUIRE(roots.size() >= 3);
  const double pick = find_crossing(tr, 0.5, CrossingWindow{0.5, 0.6}).bz_critical;
  CHECK_THAT(pick, WithinAbs(std::numbers::pi / 6.0, 1e-6));
  CHECK(find_crossing(synthetic(m, 1.0, 0.0, 400), 0.5).bz_critical < 0.45);
}

TEST_CASE("Affine maps move the crossing nowhere") {
  auto m = [](double b) { return 0.5 + 0.5 * std::tanh((b - 0.47) / 0.08); };
  const auto tr = synthetic(m, 1.0, 0.0, 20);
  const double base = find_crossing(tr, 0.5).bz_critical;
  const double a = 1.7;
  const double b = -0.3;
  auto mapped = tr;
  for (auto& e : mapped.entries) e.m = a * e.m + b;
  CHECK_THAT(find_crossing(mapped, a * 0.5 + b).bz_critical, WithinAbs(base, 1e-8));
}

TEST_CASE("Quartic-even fit recovers its own model") {
  const auto est = from_model({0.02, 0.03, 0.04, 0.05},
                              [](double x) { return 0.5 + 3.0 * x * x; });
  const auto fit = extrapolate_to_zero_field(est, FitModel::QuarticEven);
  CHECK(fit.coefficients.size() == 3);
  CHECK_THAT(fit.bz_critical_at_zero, WithinAbs(0.5, 1e-12));
  CHECK_THAT(fit.coefficients[1], WithinAbs(3.0, 1e-8));
  CHECK_THAT(fit.coefficients[2], WithinAbs(0.0, 1e-5));
  CHECK(fit.residual_norm < 1e-12);
  CHECK_THAT(fit.evaluate(0.1), WithinAbs(0.53, 1e-9));

  const auto full = from_model(
      {0.1, 0.2, 0.3, 0.5}, [](double x) { return -0.2 + x * x - 2 * x * x * x * x; });
  const auto f2 = extrapolate_to_zero_field(full, FitModel::QuarticEven);
  CHECK_THAT(f2.coefficients[0], WithinAbs(-0.2, 1e-10));
  CHECK_THAT(f2.coefficients[1], WithinAbs(1.0, 1e-10));
  CHECK_THAT(f2.coefficients[2], WithinAbs(-2.0, 1e-10));
}

TEST_CASE("Mirrored estimates give the same even fit") {
  auto f = [](double x) { return 0.5 + 2.0 * x * x + 0.01 * std::cos(40 * x); };
  const auto half = from_model({0.02, 0.03, 0.04, 0.05}, f);
  auto both = half;
  for (const auto& e : half) both.push_back({-e.bx, e.target_m, e.bz_critical});
  const auto a = extrapolate_to_zero_field(half, FitModel::QuarticEven);
  const auto b = extrapolate_to_zero_field(both, FitModel::QuarticEven);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK_THAT(a.coefficients[k], WithinAbs(b.coefficients[k], 1e-8));
  }
}

TEST_CASE("Linear fit") {
  const auto est = from_model({0.02, 0.05}, [](double x) { return 0.5 + x; });
  const auto fit = extrapolate_to_zero_field(est, FitModel::Linear);
  CHECK(fit.coefficients.size() == 2);
  CHECK_THAT(fit.bz_critical_at_zero, WithinAbs(0.5, 1e-12));
  CHECK_THAT(fit.coefficients[1], WithinAbs(1.0, 1e-10));
}

TEST_CASE("Underdetermined fits are rejected") {
  const auto two = from_model({0.02, 0.03}, [](double) { return 0.5; });
  CHECK_THROWS_AS(extrapolate_to_zero_field(two, FitModel::QuarticEven),
                  ValidationError);
  const auto mirrored = from_model({0.02, -0.02, 0.03}, [](double) { return 0.5; });
  CHECK_THROWS_AS(extrapolate_to_zero_field(mirrored, FitModel::QuarticEven),
                  ValidationError);
  const auto same = from_model({0.02, 0.02}, [](double) { return 0.5; });
  CHECK_THROWS_AS(extrapolate_to_zero_field(same, FitModel::Linear),
                  ValidationError);
}

TEST_CASE("Fit model names") {
  CHECK(fit_model_from_string("quartic-even") == FitModel::QuarticEven);
  CHECK(fit_model_from_string("linear") == FitModel::Linear);
  CHECK(std::string(to_string(FitModel::Linear)) == "linear");
  CHECK_THROWS_AS(fit_model_from_string("cubic"), ValidationError);
}
