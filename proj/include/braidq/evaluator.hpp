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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "braidq/braid.hpp"
#include "braidq/fusion.hpp"
#include "braidq/laurent.hpp"
#include "braidq/qnum.hpp"

namespace braidq {

enum class Basis { Odd, Even };
enum class Handedness { Right, Left };

/// Eigenvalue of one crossing on a pair fused to spin J (0 or 1).
cplx braiding_phase(int J, Orientation orientation, Handedness handedness, const QPoint &point);

struct BlockOperator {
  enum class Kind { Diagonal, Duality, DualityInverse };

  Kind kind;
  Basis basis = Basis::Odd;
  /// Annotated syllables folded into a Diagonal operator.
  std::vector<Syllable> run;
  /// Filled by diagonal_operator; empty in a compiled program.
  std::vector<cplx> phases;
  /// "a", "a†" or the diagonal's name (f, g, h, f1, g1, ...).
  std::string token;
};

BlockOperator diagonal_operator(const std::vector<Syllable> &run, Basis basis, int n,
                                const QPoint &point);

struct CompiledProgram {
  int n = 1;
  std::vector<BlockOperator> ops;
  BraidWord source;

  int operator_count() const { return static_cast<int>(ops.size()); }
  /// Space-separated tokens, e.g. "a f a† g a h a†".
  std::string pattern() const;
};

/// Requires a fully annotated word.
CompiledProgram compile(const BraidWord &annotated);

/// Orients the word (see braid::orient) then compiles.
CompiledProgram compile_word(const BraidWord &word);

/// Unitary uses the orthogonal duality matrix and needs positive radicands;
/// Rational uses the gauge factorisation and works on the whole circle.
enum class Route { Unitary, Rational };

/// Matrix element ⟨0|O_1 O_2 ... O_m|0⟩ of the program.
cplx evaluate(const CompiledProgram &program, const QPoint &point, Route route = Route::Unitary);
cplx evaluate(const BraidWord &word, double theta, Route route = Route::Unitary);

/// Dense d×d matrix of each operator, in program order.
std::vector<Eigen::MatrixXcd> materialize(const CompiledProgram &program, const QPoint &point,
                                          Route route = Route::Unitary);

struct JonesOptions {
  std::optional<int> samples;
  std::optional<std::pair<int, int>> window;
  FitOptions fit;
};

struct JonesResult {
  /// Polynomial in x = t^{1/2}; t is identified with q.
  LaurentPoly poly;
  double residual = 0.0;
  int operator_count = 0;
  std::pair<int, int> window;
  std::vector<double> thetas;
  std::vector<cplx> raw;
  std::vector<bool> flips;
  int writhe = 0;
  std::string normalization;
};

std::pair<int, int> default_window(const BraidWord &annotated);

/// Samples evaluate on a grid over x = -q^{1/2} (phase theta + 2 pi),
/// multiplies by d^{n-1} with d = -(x + 1/x), and fits a Laurent polynomial.
JonesResult jones(const BraidWord &word, const JonesOptions &options = {});

/// |evaluate(mirror(w)) - conj(evaluate(w))|.
double mirror_symmetry_check(const BraidWord &word, double theta);

/// s with ours = q^{s/4} reference, when one exists. Both are polynomials
/// in x = q^{1/2}.
std::optional<int> fitted_monomial(const LaurentPoly &ours, const LaurentPoly &reference);

/// Largest admissible phase for the unitary route on n pairs is just below
/// 2 pi / (n + 1).
double max_unitary_theta(int n);

std::string to_string(Basis basis);

} // namespace braidq
