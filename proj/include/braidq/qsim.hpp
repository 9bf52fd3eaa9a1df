// Copyright 2026 The braidq Authors
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

#include <vector>

#include <Eigen/Dense>

#include "braidq/evaluator.hpp"

namespace braidq {

/// 2n-qubit register; basis index i < d holds fusion path i.
struct StateVector {
  int n = 1;
  Eigen::VectorXcd amplitudes;

  static StateVector zero(int n);
  int dimension() const { return static_cast<int>(amplitudes.size()); }
  double norm_squared() const { return amplitudes.squaredNorm(); }
};

/// block ⊕ identity on the 2^{2n}-dimensional register.
class EmbeddedUnitary {
public:
  EmbeddedUnitary(Eigen::MatrixXcd block, int n);

  const Eigen::MatrixXcd &block() const noexcept { return block_; }
  int n() const noexcept { return n_; }
  /// The full 2^{2n} × 2^{2n} matrix.
  Eigen::MatrixXcd dense() const;
  void apply(StateVector &state) const;

private:
  Eigen::MatrixXcd block_;
  int n_;
};

/// Raises NonUnitaryBlock when ‖block·block† − I‖_max exceeds `tolerance`.
EmbeddedUnitary embed(const Eigen::MatrixXcd &block, int n, double tolerance = 1e-10);

std::vector<EmbeddedUnitary> embed_program(const CompiledProgram &program, const QPoint &point);

struct SimulationResult {
  StateVector state;
  /// Largest |1 − ‖ψ‖²| seen after any operator.
  double max_norm_drift = 0.0;
  /// Every amplitude at index ≥ d stayed exactly zero.
  bool block_confined = true;
  int steps = 0;
};

/// Starts at |0…0⟩ and applies the embedded operators right to left, so the
/// final state is O_1 O_2 … O_m |0⟩.
SimulationResult run(const CompiledProgram &program, const QPoint &point);
SimulationResult run(const BraidWord &word, double theta);

/// |⟨0…0|ψ⟩|².
double p_k(const BraidWord &word, double theta);

} // namespace braidq
