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

#include "xyphase/gates.hpp"

#include <cmath>
#include <numbers>

#include "xyphase/csv.hpp"
#include "xyphase/errors.hpp"
#include "xyphase/state_vector.hpp"

namespace xyphase {

namespace {

GateOp single(std::string name, int site, Eigen::Matrix2cd m,
              double parameter = 0.0) {
  GateOp g;
  g.kind = GateKind::Single;
  g.name = std::move(name);
  g.targets = {site};
  g.matrix = std::move(m);
  g.parameter = parameter;
  return g;
}

}  // namespace

GateOp cnot_gate(int control, int target) {
  if (control == target) throw ValidationError("CNOT needs distinct qubits");
  GateOp g;
  g.kind = GateKind::Cnot;
  g.name = "cx";
  g.targets = {control, target};
  return g;
}

Eigen::Matrix2cd w1_matrix() {
  const double r = 1.0 / std::numbers::sqrt2;
  Eigen::Matrix2cd m;
  m << Complex{r, 0.0}, Complex{0.0, -r}, Complex{0.0, -r}, Complex{r, 0.0};
  return m;
}

Eigen::Matrix2cd x_rotation(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Eigen::Matrix2cd m;
  m << Complex{c, 0.0}, Complex{0.0, s}, Complex{0.0, s}, Complex{c, 0.0};
  return m;
}

Eigen::Matrix2cd z_rotation(double angle) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = std::polar(1.0, angle);
  m(1, 1) = std::polar(1.0, -angle);
  return m;
}

std::vector<GateOp> build_xy_gate_circuit(std::pair<int, int> bond, double dt,
                                          double coupling) {
  const auto [i, j] = bond;
  if (i == j) throw ValidationError("XY bond needs two distinct sites");
  const double theta = coupling * dt / 4.0;
  const Eigen::Matrix2cd w1 = w1_matrix();
  const Eigen::Matrix2cd w2 = w1.adjoint();
  return {
      single("w1", i, w1),
      single("w1", j, w1),
      cnot_gate(i, j),
      single("u", i, x_rotation(theta), theta),
      single("v", j, z_rotation(theta), theta),
      cnot_gate(i, j),
      single("w2", i, w2),
      single("w2", j, w2),
  };
}

std::vector<GateOp> transverse_field_gates(int sites, double bx, double dt) {
  std::vector<GateOp> gates;
  const double angle = bx * dt / 2.0;
  for (int i = 0; i < sites; ++i) {
    gates.push_back(single("rx", i, x_rotation(angle), angle));
  }
  return gates;
}

std::vector<GateOp> longitudinal_field_gates(int sites, double bz, double dt) {
  std::vector<GateOp> gates;
  const double angle = bz * dt / 2.0;
  for (int i = 0; i < sites; ++i) {
    gates.push_back(single("rz", i, z_rotation(angle), angle));
  }
  return gates;
}

Eigen::MatrixXcd circuit_unitary(const std::vector<GateOp>& gates, int sites) {
  const Eigen::Index dim = Eigen::Index{1} << sites;
  Eigen::MatrixXcd u(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    StateVector col = StateVector::basis(sites, static_cast<std::uint64_t>(c));
    for (const auto& g : gates) {
      if (g.kind == GateKind::Cnot) {
        col.apply_cnot(g.targets[0], g.targets[1]);
      } else {
        col.apply_single(g.targets[0], g.matrix);
      }
    }
    u.col(c) = col.amplitudes();
  }
  return u;
}

double distance_up_to_phase(const Eigen::MatrixXcd& a,
                            const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ValidationError("operator distance needs equal shapes");
  }
  // The optimal phase aligns tr(B^dagger A).
  const Complex tr = (b.adjoint() * a).trace();
  const Complex phase = std::abs(tr) > 0.0 ? tr / std::abs(tr) : Complex{1.0};
  return (a - phase * b).cwiseAbs().maxCoeff();
}

std::string gates_to_text(const std::vector<GateOp>& gates) {
  std::string out;
  for (const auto& g : gates) {
    out += g.name;
    out += ' ';
    for (std::size_t k = 0; k < g.targets.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(g.targets[k]);
    }
    if (g.kind == GateKind::Single && g.name != "w1" && g.name != "w2") {
      out += ' ' + format_number(g.parameter);
    }
    out += '\n';
  }
  return out;
}

}  // namespace xyphase
