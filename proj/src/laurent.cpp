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

#include "braidq/laurent.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace braidq {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0)
    terms_.emplace(0, mpq_class(constant));
}

LaurentPoly LaurentPoly::monomial(int exponent, mpq_class coeff) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

mpq_class LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void LaurentPoly::add_term(int exponent, const mpq_class &coeff) {
  if (coeff == 0)
    return;
  auto [it, inserted] = terms_.emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0)
      terms_.erase(it);
  }
}

int LaurentPoly::min_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first;
}

bool LaurentPoly::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto &t) {
    return t.second.get_den() == 1;
  });
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &rhs) {
  for (const auto &[e, c] : rhs.terms_)
    add_term(e, c);
  return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &rhs) {
  for (const auto &[e, c] : rhs.terms_)
    add_term(e, -c);
  return *this;
}

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &rhs) {
  LaurentPoly out;
  for (const auto &[ea, ca] : terms_)
    for (const auto &[eb, cb] : rhs.terms_)
      out.add_term(ea + eb, ca * cb);
  *this = std::move(out);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto &[e, c] : terms_)
    out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result(1), base = *this;
  while (k) {
    if (k & 1u)
      result *= base;
    k >>= 1u;
    if (k)
      base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly out;
  for (const auto &[e, c] : terms_)
    out.terms_.emplace(-e, c);
  return out;
}

LaurentPoly LaurentPoly::negated_variable() const {
  LaurentPoly out;
  for (const auto &[e, c] : terms_)
    out.terms_.emplace(e, (e % 2 == 0) ? mpq_class(c) : mpq_class(-c));
  return out;
}

namespace {

std::string power_text(const std::string &var, int x_exponent) {
  if (x_exponent == 0)
    return "";
  if (x_exponent % 2 != 0)
    return var + "^{" + std::to_string(x_exponent) + "/2}";
  const int e = x_exponent / 2;
  if (e == 1)
    return var;
  return var + "^" + std::to_string(e);
}

} // namespace

std::string LaurentPoly::to_string(const std::string &var) const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[e, c] : terms_) {
    const bool negative = c < 0;
    const mpq_class mag = abs(c);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const std::string pw = power_text(var, e);
    if (pw.empty()) {
      os << mag.get_str();
    } else {
      if (mag != 1)
        os << (mag.get_den() == 1 ? mag.get_str() : "(" + mag.get_str() + ")");
      os << pw;
    }
  }
  return os.str();
}

cplx laurent_eval(const LaurentPoly &p, const QPoint &point) {
  cplx acc = 0.0;
  for (const auto &[e, c] : p.terms())
    acc += c.get_d() * point.half_power(e);
  return acc;
}

cplx laurent_eval_at(const LaurentPoly &p, cplx x) {
  cplx acc = 0.0;
  for (const auto &[e, c] : p.terms())
    acc += c.get_d() * std::pow(x, e);
  return acc;
}

bool round_to_rational(double v, int max_den, double tol, mpq_class &out) {
  for (int den = 1; den <= max_den; ++den) {
    const double num = std::round(v * den);
    if (std::abs(v - num / den) <= tol) {
      out = mpq_class(static_cast<long>(num), den);
      out.canonicalize();
      return true;
    }
  }
  return false;
}

FitResult laurent_fit(std::span<const LaurentSample> samples,
                      std::pair<int, int> degree_window,
                      const FitOptions &options) {
  const auto [dmin, dmax] = degree_window;
  if (dmax < dmin)
    throw Error(ErrorKind::InvalidArgument, "empty degree window");
  const int width = dmax - dmin + 1;
  const auto rows = static_cast<Eigen::Index>(samples.size());
  if (rows < width)
    throw Error(ErrorKind::IllConditioned,
                std::to_string(samples.size()) + " samples for " +
                    std::to_string(width) + " unknowns");

  Eigen::MatrixXcd design(rows, width);
  Eigen::VectorXcd rhs(rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto &s = samples[static_cast<std::size_t>(r)];
    for (int c = 0; c < width; ++c)
      design(r, c) = std::polar(1.0, (dmin + c) * s.theta / 2.0);
    rhs(r) = s.value;
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(design);
  qr.setThreshold(1e-10);
  if (qr.rank() < width)
    throw Error(ErrorKind::IllConditioned,
                "sample design matrix has rank " + std::to_string(qr.rank()) +
                    " < " + std::to_string(width));
  const Eigen::VectorXcd coeffs = qr.solve(rhs);

  FitResult result;
  for (int c = 0; c < width; ++c) {
    const cplx v = coeffs(c);
    mpq_class rounded;
    if (std::abs(v.imag()) > options.tolerance ||
        !round_to_rational(v.real(), options.max_denominator,
                           options.tolerance, rounded)) {
      std::ostringstream os;
      os << "coefficient of x^" << (dmin + c) << " = " << v.real() << "+"
         << v.imag() << "i is not a small-denominator rational";
      throw Error(ErrorKind::ResidualTooLarge, os.str());
    }
    result.rounding_shift =
        std::max(result.rounding_shift, std::abs(v - cplx(rounded.get_d())));
    result.poly.add_term(dmin + c, rounded);
  }
  for (const auto &s : samples)
    result.residual = std::max(
        result.residual, std::abs(s.value - laurent_eval(result.poly, QPoint(s.theta))));
  if (result.residual > options.tolerance)
    throw Error(ErrorKind::ResidualTooLarge,
                "post-rounding residual " + std::to_string(result.residual));
  return result;
}

} // namespace braidq
