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

#include <gmpxx.h>

#include <map>
#include <span>
#include <string>
#include <utility>

#include "braidq/qnum.hpp"

namespace braidq {

/// Exact Laurent polynomial in x = q^{1/2} with rational coefficients.
/// Zero coefficients are never stored.
class LaurentPoly {
public:
  using Terms = std::map<int, mpq_class>;

  LaurentPoly() = default;
  LaurentPoly(long constant);
  static LaurentPoly monomial(int exponent, mpq_class coeff = 1);

  const Terms &terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  mpq_class coeff(int exponent) const;
  void add_term(int exponent, const mpq_class &coeff);

  int min_degree() const;
  int max_degree() const;
  bool has_integer_coefficients() const;

  LaurentPoly &operator+=(const LaurentPoly &rhs);
  LaurentPoly &operator-=(const LaurentPoly &rhs);
  LaurentPoly &operator*=(const LaurentPoly &rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly &b) { return a *= b; }
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly &rhs) const { return terms_ == rhs.terms_; }

  LaurentPoly pow(unsigned k) const;
  /// p(x) -> p(1/x).
  LaurentPoly inverted() const;
  /// p(x) -> p(-x).
  LaurentPoly negated_variable() const;

  /// Canonical text in powers of `var` = x^2, ascending, e.g.
  /// "-q^-4 + q^-3 + q^-1" or "q^{1/2} + q^{5/2}".
  std::string to_string(const std::string &var = "q") const;

private:
  Terms terms_;
};

/// Σ c_k e^{ikθ/2}.
cplx laurent_eval(const LaurentPoly &p, const QPoint &point);
/// Σ c_k x^k at an arbitrary complex x.
cplx laurent_eval_at(const LaurentPoly &p, cplx x);

struct LaurentSample {
  double theta;
  cplx value;
};

struct FitOptions {
  double tolerance = 1e-6;
  int max_denominator = 64;
};

struct FitResult {
  LaurentPoly poly;
  /// Max |value - p(e^{iθ/2})| over the samples after rational rounding.
  double residual = 0.0;
  /// Largest shift applied to any coefficient by rounding.
  double rounding_shift = 0.0;
};

/// Least-squares fit of coefficients x^dmin..x^dmax to samples on the unit
/// circle, followed by rounding each coefficient to the nearest rational
/// with denominator at most max_denominator.
FitResult laurent_fit(std::span<const LaurentSample> samples,
                      std::pair<int, int> degree_window,
                      const FitOptions &options = {});

/// Nearest p/q with q <= max_den whose distance from v is at most tol,
/// preferring the smallest denominator; false when none exists.
bool round_to_rational(double v, int max_den, double tol, mpq_class &out);

} // namespace braidq
