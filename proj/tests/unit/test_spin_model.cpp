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

#include <random>

#include "catch_amalgamated.hpp"
#include "xyphase/errors.hpp"
#include "xyphase/exact_spectrum.hpp"
#include "xyphase/spin_model.hpp"

using namespace xyphase;
using Catch::Matchers::WithinAbs;

namespace {

int count_axis(const std::vector<PauliTerm>& terms, PauliAxis axis,
               std::size_t weight) {
  int n = 0;
  for (const auto& t : terms) {
    if (t.factors.size() == weight && t.factors.front().axis == axis) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("Two sites get a single bond") {
  HamiltonianSpec spec{2, 1.0, 1.0, 0.0, true};
  const auto terms = build_terms(spec);
  CHECK(count_axis(terms, PauliAxis::X, 2) == 1);
  CHECK(count_axis(terms, PauliAxis::Y, 2) == 1);
  CHECK(count_axis(terms, PauliAxis::Z, 1) == 2);
  for (const auto& t : terms) {
    if (t.factors.size() == 2) CHECK(t.coefficient == -0.25);
    if (t.factors.size() == 1) CHECK(t.coefficient == -0.5);
  }
}

TEST_CASE("Zero fields leave only bonds") {
  HamiltonianSpec spec{3, 1.0, 0.0, 0.0, true};
  const auto terms = build_terms(spec);
  CHECK(count_axis(terms, PauliAxis::X, 2) == 3);
  CHECK(count_axis(terms, PauliAxis::Y, 2) == 3);
  CHECK(terms.size() == 6);
}

TEST_CASE("Ten-site chain term counts") {
  HamiltonianSpec spec{10, 1.0, 1.0, 0.05, true};
  const auto terms = build_terms(spec);
  CHECK(chain_bonds(10, true).size() == 10);
  CHECK(count_axis(terms, PauliAxis::Z, 1) == 10);
  CHECK(count_axis(terms, PauliAxis::X, 1) == 10);
  CHECK(chain_bonds(10, false).size() == 9);
}

TEST_CASE("Fewer than two sites is rejected") {
  HamiltonianSpec spec{1, 1.0, 0.0, 0.0, true};
  CHECK_THROWS_AS(build_terms(spec), ValidationError);
}

TEST_CASE("Single Z on one site") {
  const DenseOperator op = to_dense({{1.0, {{0, PauliAxis::Z}}}}, 1);
  CHECK(op.matrix()(0, 0) == Complex(1.0));
  CHECK(op.matrix()(1, 1) == Complex(-1.0));
  CHECK(std::abs(op.matrix()(0, 1)) == 0.0);
}

TEST_CASE("apply_term follows the Pauli definitions") {
  // bit 0 up; Y|up> = i|down>
  auto [s, a] = apply_term({1.0, {{0, PauliAxis::Y}}}, 0);
  CHECK(s == 1);
  CHECK(std::abs(a - Complex(0, 1)) < 1e-15);
  std::tie(s, a) = apply_term({2.0, {{1, PauliAxis::Z}}}, 2);
  CHECK(s == 2);
  CHECK(a == Complex(-2.0));
  std::tie(s, a) = apply_term({1.0, {{0, PauliAxis::X}, {1, PauliAxis::X}}}, 0);
  CHECK(s == 3);
}

TEST_CASE("Repeated or out-of-range sites are rejected") {
  CHECK_THROWS_AS(to_dense({{1.0, {{0, PauliAxis::X}, {0, PauliAxis::Z}}}}, 2),
                  ValidationError);
  CHECK_THROWS_AS(to_dense({{1.0, {{2, PauliAxis::X}}}}, 2), ValidationError);
}

TEST_CASE("Dimension cap") {
  HamiltonianSpec spec{15, 1.0, 0.0, 0.0, true};
  CHECK_THROWS_AS(build_dense(spec), DimensionError);
  spec.sites = 4;
  CHECK_THROWS_AS(build_dense(spec, 3), DimensionError);
}

TEST_CASE("Two-site spectrum at Bz = 0.5") {
  HamiltonianSpec spec{2, 1.0, 0.5, 0.0, true};
  const auto e = eigenvalues(build_dense(spec));
  REQUIRE(e.size() == 4);
  CHECK_THAT(e(0), WithinAbs(-0.5, 1e-12));
  CHECK_THAT(e(1), WithinAbs(-0.5, 1e-12));
  CHECK_THAT(e(2), WithinAbs(0.5, 1e-12));
  CHECK_THAT(e(3), WithinAbs(0.5, 1e-12));
  spec.bx = 0.2;
  CHECK(diagonalize(spec).gap() > 0.0);
}

TEST_CASE("Random specs are Hermitian and Bx breaks Sz") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    HamiltonianSpec spec;
    spec.sites = 2 + trial % 4;
    spec.coupling = u(gen);
    spec.bz = u(gen);
    spec.bx = 0.0;
    spec.periodic = trial % 3 != 0;
    const auto h0 = build_dense(spec);
    CHECK(h0.is_hermitian());
    CHECK(sz_commutator_norm(h0) < 1e-12);
    spec.bx = 0.1 + std::abs(u(gen));
    const auto h1 = build_dense(spec);
    CHECK(h1.is_hermitian());
    CHECK(sz_commutator_norm(h1) > 1e-3);
  }
}

TEST_CASE("Spectrum is even in Bx") {
  for (int sites : {2, 3, 4, 5}) {
    HamiltonianSpec spec{sites, 1.0, 0.37, 0.21, true};
    const auto plus = eigenvalues(build_dense(spec));
    spec.bx = -spec.bx;
    const auto minus = eigenvalues(build_dense(spec));
    CHECK((plus - minus).cwiseAbs().maxCoeff() < 1e-12);
  }
}
