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

#include "braidq/qsim.hpp"

#include <algorithm>
#include <cmath>

namespace braidq {

namespace {

Eigen::Index register_size(int n) { return Eigen::Index(1) << (2 * n); }

} // namespace

StateVector StateVector::zero(int n) {
  if (n < 1 || 2 * n > 24)
    throw Error(ErrorKind::InvalidArgument, "register size out of range");
  StateVector s{n, Eigen::VectorXcd::Zero(register_size(n))};
  s.amplitudes(0) = 1.0;
  return s;
}

EmbeddedUnitary::EmbeddedUnitary(Eigen::MatrixXcd block, int n)
    : block_(std::move(block)), n_(n) {
  if (block_.rows() != block_.cols() || block_.rows() > register_size(n))
    throw Error(ErrorKind::InvalidArgument, "block does not fit the register");
}

Eigen::MatrixXcd EmbeddedUnitary::dense() const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(register_size(n_), register_size(n_));
  m.topLeftCorner(block_.rows(), block_.cols()) = block_;
  return m;
}

void EmbeddedUnitary::apply(StateVector &state) const {
  if (state.n != n_)
    throw Error(ErrorKind::InvalidArgument, "operator and state sizes differ");
  const Eigen::Index d = block_.rows();
  state.amplitudes.head(d) = block_ * state.amplitudes.head(d);
}

EmbeddedUnitary embed(const Eigen::MatrixXcd &block, int n, double tolerance) {
  const Eigen::Index d = block.rows();
  const double defect =
      d == 0 ? 0.0
             : (block * block.adjoint() - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
  if (!(defect <= tolerance))
    throw Error(ErrorKind::NonUnitaryBlock,
                "block deviates from unitarity by " + std::to_string(defect));
  return EmbeddedUnitary(block, n);
}

std::vector<EmbeddedUnitary> embed_program(const CompiledProgram &program, const QPoint &point) {
  std::vector<EmbeddedUnitary> out;
  for (auto &m : materialize(program, point, Route::Unitary))
    out.push_back(embed(m, program.n));
  return out;
}

SimulationResult run(const CompiledProgram &program, const QPoint &point) {
  const auto ops = embed_program(program, point);
  const Eigen::Index d = catalan(program.n);
  SimulationResult r{StateVector::zero(program.n)};
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    it->apply(r.state);
    ++r.steps;
    r.max_norm_drift = std::max(r.max_norm_drift, std::abs(1.0 - r.state.norm_squared()));
    const auto tail = r.state.amplitudes.tail(r.state.dimension() - d);
    if (r.block_confined && tail.size() > 0 && tail.cwiseAbs().maxCoeff() != 0.0)
      r.block_confined = false;
  }
  return r;
}

SimulationResult run(const BraidWord &word, double theta) {
  return run(compile_word(word), QPoint(theta));
}

double p_k(const BraidWord &word, double theta) {
  return std::norm(run(word, theta).state.amplitudes(0));
}

} // namespace braidq
