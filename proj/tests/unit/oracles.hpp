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

// Reference propagators for the tests.

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace xyphase::testing {

/// exp(-i H t) for a Hermitian H, by diagonalization.
inline Eigen::MatrixXcd expm_hermitian(const Eigen::MatrixXcd& h, double t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  const Eigen::VectorXcd phases =
      (es.eigenvalues().cast<std::complex<double>>() *
       std::complex<double>(0.0, -t))
          .array()
          .exp();
  return es.eigenvectors() * phases.asDiagonal() *
         es.eigenvectors().adjoint();
}

}  // namespace xyphase::testing
