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

#include "braidq/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

namespace braidq {

namespace {

constexpr double kPi = std::numbers::pi;

std::string diagonal_token(int ordinal) {
  static const char names[] = {'f', 'g', 'h'};
  std::string t(1, names[ordinal % 3]);
  if (ordinal >= 3)
    t += std::to_string(ordinal / 3);
  return t;
}

Basis basis_of(int index) { return index % 2 == 1 ? Basis::Odd : Basis::Even; }

template <class Path>
std::vector<cplx> phases_over(const std::vector<Path> &paths, const std::vector<Syllable> &run,
                              const QPoint &point) {
  std::vector<cplx> out(paths.size(), cplx(1.0));
  for (std::size_t p = 0; p < paths.size(); ++p) {
    for (const Syllable &s : run) {
      const int J = pair_label(paths[p], s.index) / 2;
      const Handedness h = s.power > 0 ? Handedness::Right : Handedness::Left;
      out[p] *= std::pow(braiding_phase(J, s.orientation, h, point), std::abs(s.power));
    }
  }
  return out;
}

struct Recoupling {
  Eigen::MatrixXd forward;
  Eigen::MatrixXd inverse;
};

Recoupling recoupling(int n, const QPoint &point, Route route) {
  if (route == Route::Unitary) {
    const DualityMatrix d = duality_matrix(n, point);
    return {d.entries, d.entries.transpose()};
  }
  const GaugedDuality g = gauged_duality(n, point);
  return {g.rational, g.rational_inverse()};
}

bool needs_recoupling(const CompiledProgram &program) {
  return std::any_of(program.ops.begin(), program.ops.end(), [](const BlockOperator &op) {
    return op.kind != BlockOperator::Kind::Diagonal;
  });
}

// Distance of the closest multiple k theta / (2 pi), 1 <= k <= kmax, to an
// integer; zero exactly where some [k] vanishes.
double degeneracy_margin(double theta, int kmax) {
  double worst = 1.0;
  for (int k = 1; k <= kmax; ++k) {
    const double x = k * theta / (2 * kPi);
    worst = std::min(worst, std::abs(x - std::round(x)));
  }
  return worst;
}

} // namespace

cplx braiding_phase(int J, Orientation orientation, Handedness handedness, const QPoint &point) {
  if (J != 0 && J != 1)
    throw Error(ErrorKind::InvalidArgument, "pair label must be 0 or 1");
  if (orientation == Orientation::Auto)
    throw Error(ErrorKind::UnannotatedSyllable, "braiding phase needs an orientation");
  cplx right;
  if (orientation == Orientation::Parallel)
    right = J == 0 ? -point.half_power(3) : point.half_power(1);
  else
    right = J == 0 ? cplx(1.0) : -point.half_power(-2);
  return handedness == Handedness::Right ? right : 1.0 / right;
}

BlockOperator diagonal_operator(const std::vector<Syllable> &run, Basis basis, int n,
                                const QPoint &point) {
  for (const Syllable &s : run)
    if (basis_of(s.index) != basis)
      throw Error(ErrorKind::ParityMismatch,
                  "generator " + std::to_string(s.index) + " is not in the " + to_string(basis) +
                      " basis");
  BlockOperator op{BlockOperator::Kind::Diagonal, basis, run, {}, ""};
  op.phases = basis == Basis::Odd ? phases_over(enumerate_odd_paths(n), run, point)
                                  : phases_over(enumerate_even_paths(n), run, point);
  return op;
}

std::string CompiledProgram::pattern() const {
  std::string out;
  for (const auto &op : ops) {
    if (!out.empty())
      out += ' ';
    out += op.token;
  }
  return out;
}

CompiledProgram compile(const BraidWord &annotated) {
  if (!annotated.fully_annotated())
    throw Error(ErrorKind::UnannotatedSyllable, "compile needs an annotated word");
  CompiledProgram program;
  program.n = annotated.pairs();
  program.source = annotated;

  std::vector<BlockOperator> ops;
  int diagonals = 0;
  const auto &syl = annotated.syllables;
  for (std::size_t start = 0; start < syl.size();) {
    const Basis basis = basis_of(syl[start].index);
    std::size_t end = start;
    while (end < syl.size() && basis_of(syl[end].index) == basis)
      ++end;
    BlockOperator diag{BlockOperator::Kind::Diagonal, basis,
                       std::vector<Syllable>(syl.begin() + static_cast<std::ptrdiff_t>(start),
                                             syl.begin() + static_cast<std::ptrdiff_t>(end)),
                       {}, diagonal_token(diagonals++)};
    if (basis == Basis::Even) {
      ops.push_back({BlockOperator::Kind::Duality, Basis::Odd, {}, {}, "a"});
      ops.push_back(std::move(diag));
      ops.push_back({BlockOperator::Kind::DualityInverse, Basis::Even, {}, {}, "a†"});
    } else {
      ops.push_back(std::move(diag));
    }
    start = end;
  }

  for (const auto &op : ops) {
    if (!program.ops.empty() && op.kind == BlockOperator::Kind::Duality &&
        program.ops.back().kind == BlockOperator::Kind::DualityInverse)
      program.ops.pop_back();
    else
      program.ops.push_back(op);
  }
  return program;
}

CompiledProgram compile_word(const BraidWord &word) { return compile(orient(word).annotated); }

std::vector<Eigen::MatrixXcd> materialize(const CompiledProgram &program, const QPoint &point,
                                          Route route) {
  const int d = static_cast<int>(catalan(program.n));
  std::optional<Recoupling> rec;
  if (needs_recoupling(program))
    rec = recoupling(program.n, point, route);
  std::vector<Eigen::MatrixXcd> out;
  for (const auto &op : program.ops) {
    switch (op.kind) {
    case BlockOperator::Kind::Duality:
      out.push_back(rec->forward.cast<cplx>());
      break;
    case BlockOperator::Kind::DualityInverse:
      out.push_back(rec->inverse.cast<cplx>());
      break;
    case BlockOperator::Kind::Diagonal: {
      const auto ph = diagonal_operator(op.run, op.basis, program.n, point).phases;
      Eigen::VectorXcd v(d);
      for (int i = 0; i < d; ++i)
        v(i) = ph[static_cast<std::size_t>(i)];
      out.push_back(v.asDiagonal());
      break;
    }
    }
  }
  return out;
}

cplx evaluate(const CompiledProgram &program, const QPoint &point, Route route) {
  const int d = static_cast<int>(catalan(program.n));
  std::optional<Recoupling> rec;
  if (needs_recoupling(program))
    rec = recoupling(program.n, point, route);
  Eigen::RowVectorXcd row = Eigen::RowVectorXcd::Zero(d);
  row(0) = 1.0;
  for (const auto &op : program.ops) {
    switch (op.kind) {
    case BlockOperator::Kind::Duality:
      row = row * rec->forward;
      break;
    case BlockOperator::Kind::DualityInverse:
      row = row * rec->inverse;
      break;
    case BlockOperator::Kind::Diagonal: {
      const auto ph = diagonal_operator(op.run, op.basis, program.n, point).phases;
      for (int i = 0; i < d; ++i)
        row(i) *= ph[static_cast<std::size_t>(i)];
      break;
    }
    }
  }
  return row(0);
}

cplx evaluate(const BraidWord &word, double theta, Route route) {
  return evaluate(compile_word(word), QPoint(theta), route);
}

std::pair<int, int> default_window(const BraidWord &annotated) {
  const int c = annotated.crossing_count();
  const int span = 3 * c + annotated.pairs() - 1;
  return {-span, span};
}

JonesResult jones(const BraidWord &word, const JonesOptions &options) {
  const OrientationTrace trace = orient(word);
  const CompiledProgram program = compile(trace.annotated);
  const int n = program.n;

  JonesResult result;
  result.operator_count = program.operator_count();
  result.flips = trace.flips;
  result.writhe = writhe(trace.annotated);
  result.window = options.window.value_or(default_window(trace.annotated));
  if (result.window.first > result.window.second)
    throw Error(ErrorKind::InvalidArgument, "degree window is empty");
  const int width = result.window.second - result.window.first + 1;
  const int samples = options.samples.value_or(std::max(64, width + 8));
  if (samples < width + 8)
    throw Error(ErrorKind::InvalidArgument,
                "need at least " + std::to_string(width + 8) + " samples for this window");
  result.normalization = "d^" + std::to_string(n - 1) + ", d = -(x + 1/x), x = t^{1/2} = -q^{1/2}";

  // offset of the grid that keeps every sample furthest from a vanishing [k]
  double best_alpha = 0.5, best_margin = -1.0;
  for (int m = 0; m < 97; ++m) {
    const double alpha = (m + 0.5) / 97.0;
    double margin = 1.0;
    for (int j = 0; j < samples; ++j)
      margin = std::min(margin, degeneracy_margin(4 * kPi * (j + alpha) / samples, n + 1));
    if (margin > best_margin) {
      best_margin = margin;
      best_alpha = alpha;
    }
  }

  std::vector<LaurentSample> fit_samples;
  for (int j = 0; j < samples; ++j) {
    const double theta = 4 * kPi * (j + best_alpha) / samples;
    const QPoint point(theta);
    const cplx raw = evaluate(program, point, Route::Rational);
    const double d = 2.0 * std::cos(theta / 2.0);
    result.thetas.push_back(theta);
    result.raw.push_back(raw);
    fit_samples.push_back({theta + 2 * kPi, raw * std::pow(d, n - 1)});
  }
  const FitResult fit = laurent_fit(fit_samples, result.window, options.fit);
  result.poly = fit.poly;
  result.residual = fit.residual;
  return result;
}

double mirror_symmetry_check(const BraidWord &word, double theta) {
  return std::abs(evaluate(mirror(word), theta) - std::conj(evaluate(word, theta)));
}

std::optional<int> fitted_monomial(const LaurentPoly &ours, const LaurentPoly &reference) {
  if (ours.is_zero() || reference.is_zero())
    return ours.is_zero() && reference.is_zero() ? std::optional<int>(0) : std::nullopt;
  const int shift = ours.min_degree() - reference.min_degree();
  if (reference * LaurentPoly::monomial(shift) == ours)
    return 2 * shift;
  return std::nullopt;
}

double max_unitary_theta(int n) { return 2 * kPi / (n + 1); }

std::string to_string(Basis basis) { return basis == Basis::Odd ? "odd" : "even"; }

} // namespace braidq
