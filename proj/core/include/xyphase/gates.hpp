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

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "xyphase/spin_model.hpp"

namespace xyphase {

enum class GateKind { Cnot, Single };

struct GateOp {
  GateKind kind = GateKind::Single;
  std::string name;
  std::vector<int> targets;  // CNOT: {control, target}
  Eigen::Matrix2cd matrix = Eigen::Matrix2cd::Identity();  // Single only
  double parameter = 0.0;  // rotation angle where meaningful

  bool is_two_qubit() const { return kind == GateKind::Cnot; }
};

GateOp cnot_gate(int control, int target);

/// w1 = (1 - iX)/sqrt(2), a quarter turn about x.
Eigen::Matrix2cd w1_matrix();
/// exp(i angle X) and exp(i angle Z).
Eigen::Matrix2cd x_rotation(double angle);
Eigen::Matrix2cd z_rotation(double angle);

/// Two-CNOT realization of exp(-i H_ij dt) for the bond term
/// H_ij = -(J/4)(X_i X_j + Y_i Y_j):
///
///   w1 w1 | CNOT(i->j) | u on i, v on j | CNOT(i->j) | w2 w2
///
/// with w2 = w1^dagger, u = exp(i J dt X / 4), v = exp(i J dt Z / 4).
/// Conjugating by w1 on both qubits turns YY into ZZ, and the CNOT pair
/// maps XX + ZZ onto X_i + Z_j, which exponentiates site by site.
std::vector<GateOp> build_xy_gate_circuit(std::pair<int, int> bond, double dt,
                                          double coupling);

/// exp(-i dt [-(Bx/2) sum X_i]) and exp(-i dt [-(Bz/2) sum Z_i]) as one
/// single-qubit gate per site.
std::vector<GateOp> transverse_field_gates(int sites, double bx, double dt);
std::vector<GateOp> longitudinal_field_gates(int sites, double bz, double dt);

/// Dense 2^L unitary of a gate list (first gate acts first).
Eigen::MatrixXcd circuit_unitary(const std::vector<GateOp>& gates, int sites);

/// min over phi of the max-entry deviation |A - e^{i phi} B|.
double distance_up_to_phase(const Eigen::MatrixXcd& a,
                            const Eigen::MatrixXcd& b);

/// One gate per line: "<name> <targets comma-separated> <parameter>".
std::string gates_to_text(const std::vector<GateOp>& gates);

}  // namespace xyphase
