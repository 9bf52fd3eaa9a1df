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

#include <cmath>
#include <complex>
#include <concepts>
#include <numbers>

#include "braidq/errors.hpp"

namespace braidq {

using cplx = std::complex<double>;

/// A point q = e^{iθ} on the unit circle, stored by its phase. The branches
/// q^{1/2} = e^{iθ/2} and q^{1/4} = e^{iθ/4} are fixed by θ, so two phases
/// that differ by 2π name the same q with opposite square roots.
class QPoint {
public:
  explicit QPoint(double theta) : theta_(theta) {}

  static QPoint root_of_unity(int order) {
    return QPoint(2.0 * std::numbers::pi / order);
  }

  double theta() const noexcept { return theta_; }
  cplx q() const { return std::polar(1.0, theta_); }
  cplx sqrt_q() const { return std::polar(1.0, theta_ / 2.0); }
  cplx quarter_q() const { return std::polar(1.0, theta_ / 4.0); }
  /// q^{k/2}.
  cplx half_power(int k) const { return std::polar(1.0, k * theta_ / 2.0); }

private:
  double theta_;
};

/// Real q in (0, 1] with the positive square root. All q-numbers are
/// positive here.
class RealQPoint {
public:
  explicit RealQPoint(double q);

  double q() const noexcept { return q_; }
  double sqrt_q() const { return std::sqrt(q_); }

private:
  double q_;
};

template <class P>
concept QArithmetic =
    std::same_as<P, QPoint> || std::same_as<P, RealQPoint>;

/// [x] = (q^{x/2} - q^{-x/2}) / (q^{1/2} - q^{-1/2}). On the unit circle this
/// is sin(xθ/2)/sin(θ/2).
double q_number(int x, const QPoint &point);
double q_number(int x, const RealQPoint &point);

/// [x] for half-integer x, passed doubled.
double q_number_doubled(int twice_x, const QPoint &point);

/// [x]! = [1][2]...[x], with [0]! = 1.
template <QArithmetic P> double q_factorial(int x, const P &point) {
  if (x < 0)
    throw Error(ErrorKind::InvalidArgument, "negative q-factorial argument");
  double r = 1.0;
  for (int k = 2; k <= x; ++k)
    r *= q_number(k, point);
  return r;
}

/// Spins are passed doubled: admissible means each is at most the sum of the
/// other two and the doubled sum is even.
constexpr bool admissible(int a2, int b2, int c2) {
  return a2 >= 0 && b2 >= 0 && c2 >= 0 && c2 <= a2 + b2 &&
         c2 >= (a2 > b2 ? a2 - b2 : b2 - a2) && (a2 + b2 + c2) % 2 == 0;
}

/// Δ(a,b,c)^2 = [-a+b+c]! [a-b+c]! [a+b-c]! / [a+b+c+1]!, doubled spins.
/// The square is rational in the q-numbers and stays meaningful where the
/// radicand is negative.
template <QArithmetic P>
double triangle_squared(int a2, int b2, int c2, const P &point) {
  if (!admissible(a2, b2, c2))
    throw Error(ErrorKind::NonAdmissibleTriple,
                "(" + std::to_string(a2) + "/2, " + std::to_string(b2) +
                    "/2, " + std::to_string(c2) + "/2)");
  const double den = q_factorial((a2 + b2 + c2) / 2 + 1, point);
  if (den == 0.0)
    throw Error(ErrorKind::DegenerateQ, "vanishing q-factorial in triangle");
  return q_factorial((-a2 + b2 + c2) / 2, point) *
         q_factorial((a2 - b2 + c2) / 2, point) *
         q_factorial((a2 + b2 - c2) / 2, point) / den;
}

/// Δ(a,b,c), doubled spins.
template <QArithmetic P>
double triangle(int a2, int b2, int c2, const P &point) {
  const double sq = triangle_squared(a2, b2, c2, point);
  if (sq < 0.0)
    throw Error(ErrorKind::NegativeRadicand,
                "triangle coefficient radicand is negative at this q");
  return std::sqrt(sq);
}

} // namespace braidq
