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

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include "braidq/qsim.hpp"

using namespace braidq;

namespace {

constexpr double kPi = std::numbers::pi;
const char *kBa = "strands=4; b2^3 h1^-2 h3^-2 b2^3";

} // namespace

TEST(Embed, DualityBlock) {
  const Eigen::MatrixXcd a = duality_matrix(2, QPoint(0.7)).entries.cast<cplx>();
  const EmbeddedUnitary u = embed(a, 2);
  const Eigen::MatrixXcd full = u.dense();
  ASSERT_EQ(full.rows(), 16);
  EXPECT_EQ(full.topLeftCorner(2, 2), a);
  EXPECT_EQ(full.bottomRightCorner(14, 14), Eigen::MatrixXcd::Identity(14, 14));
  EXPECT_EQ(full.topRightCorner(2, 14).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Embed, DiagonalBlockOnThreePairs) {
  const auto op = diagonal_operator({{1, 2, Orientation::Parallel}}, Basis::Odd, 3, QPoint(0.4));
  Eigen::VectorXcd ph(5);
  for (int i = 0; i < 5; ++i)
    ph(i) = op.phases[static_cast<std::size_t>(i)];
  const EmbeddedUnitary u = embed(ph.asDiagonal().toDenseMatrix(), 3);
  EXPECT_EQ(u.dense().rows(), 64);
  EXPECT_EQ(u.dense().bottomRightCorner(59, 59), Eigen::MatrixXcd::Identity(59, 59));
}

TEST(Embed, IdentityAndNonUnitary) {
  EXPECT_EQ(embed(Eigen::MatrixXcd::Identity(2, 2), 2).dense(), Eigen::MatrixXcd::Identity(16, 16));
  try {
    embed(2.0 * Eigen::MatrixXcd::Identity(2, 2), 2);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonUnitaryBlock);
  }
}

TEST(Run, IdentityWord) {
  const SimulationResult r = run(parse_braid("strands=4;"), 0.5);
  EXPECT_EQ(r.state.amplitudes(0), cplx(1.0));
  EXPECT_EQ(r.steps, 0);
  EXPECT_EQ(p_k(parse_braid("strands=4;"), 0.5), 1.0);
}

TEST(Run, SingleDuality) {
  const QPoint p(0.9);
  CompiledProgram prog;
  prog.n = 2;
  prog.ops.push_back({BlockOperator::Kind::Duality, Basis::Odd, {}, {}, "a"});
  const SimulationResult r = run(prog, p);
  const Eigen::MatrixXd a = duality_matrix(2, p).entries;
  EXPECT_NEAR(std::abs(r.state.amplitudes(0) - a(0, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(r.state.amplitudes(1) - a(1, 0)), 0.0, 1e-15);
  for (int i = 2; i < 16; ++i)
    EXPECT_EQ(r.state.amplitudes(i), cplx(0.0));
}

TEST(Run, WorkedWordNormAndAmplitude) {
  const double theta = 2 * kPi / 7;
  const BraidWord w = parse_braid(kBa);
  const SimulationResult r = run(w, theta);
  EXPECT_NEAR(r.state.norm_squared(), 1.0, 1e-12);
  EXPECT_LT(r.max_norm_drift, 1e-12);
  EXPECT_TRUE(r.block_confined);
  EXPECT_EQ(r.steps, 7);
  EXPECT_NEAR(std::abs(r.state.amplitudes(0) - evaluate(w, theta)), 0.0, 1e-12);
}

TEST(Run, MatchesEvaluator) {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 100; ++trial) {
    const int strands = 2 * (1 + trial % 3);
    const BraidWord w = random_word(rng, {strands, 1, 8, 3, 12});
    const double theta =
        std::uniform_real_distribution<double>(0.1, 0.9 * max_unitary_theta(w.pairs()))(rng);
    const SimulationResult r = run(w, theta);
    const cplx amp = evaluate(w, theta);
    EXPECT_NEAR(std::norm(r.state.amplitudes(0)), std::norm(amp), 1e-12);
    EXPECT_LT(r.max_norm_drift, 1e-12);
    EXPECT_TRUE(r.block_confined);
  }
}

TEST(Run, SingleAntiparallelProbability) {
  const QPoint p(0.9);
  const Eigen::MatrixXd a = duality_matrix(2, p).entries;
  const cplx amp = a(0, 0) * a(0, 0) - a(0, 1) * a(0, 1) / p.q();
  const SimulationResult r = run(compile(parse_braid("strands=4; h2")), p);
  EXPECT_NEAR(std::norm(r.state.amplitudes(0)), std::norm(amp), 1e-14);
}

TEST(Run, FigureEightAmplitudeIsReal) {
  const BraidWord w = parse_braid("strands=4; g2^-1 g1 g2^-2");
  for (int r : {5, 7, 9})
    EXPECT_LT(std::abs(run(w, 2 * kPi / r).state.amplitudes(0).imag()), 1e-9);
}

TEST(Run, EightStrandsIsFast) {
  std::mt19937_64 rng(109);
  const BraidWord w = random_word(rng, {8, 20, 20, 3, 60});
  const auto start = std::chrono::steady_clock::now();
  const SimulationResult r = run(w, 0.6);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_EQ(r.state.dimension(), 256);
  EXPECT_LT(seconds, 1.0);
  EXPECT_LT(r.max_norm_drift, 1e-12);
}

TEST(Run, NegativeRadicandPropagates) {
  try {
    run(parse_braid(kBa), 2.5);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::NegativeRadicand);
  }
}
