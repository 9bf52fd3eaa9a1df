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

#include "braidq/vertex.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace braidq::vertex {

RMatrix r_matrix(double u, double mu) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m(kUpUp, kUpUp) = std::sinh(mu - u);
  m(kDownDown, kDownDown) = std::sinh(mu - u);
  m(kUpDown, kUpDown) = -std::sinh(u);
  m(kDownUp, kDownUp) = -std::sinh(u);
  m(kUpDown, kDownUp) = std::exp(-u) * std::sinh(mu);
  m(kDownUp, kUpDown) = std::exp(u) * std::sinh(mu);
  return {u, mu, m};
}

Eigen::MatrixXd yang_baxter_operator(const RMatrix &r, int strands, int site) {
  if (site < 1 || site >= strands)
    throw Error(ErrorKind::IndexOutOfRange, "site outside 1..strands-1");
  const int dim = 1 << strands;
  const int hi = strands - site;      // bit of site i
  const int lo = strands - site - 1;  // bit of site i+1
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(dim, dim);
  for (int col = 0; col < dim; ++col) {
    const int m1 = (col >> hi) & 1;
    const int m2 = (col >> lo) & 1;
    const int rest = col & ~((1 << hi) | (1 << lo));
    for (int n1 = 0; n1 < 2; ++n1)
      for (int n2 = 0; n2 < 2; ++n2) {
        const double w = r(2 * m1 + m2, 2 * n1 + n2);
        if (w == 0.0)
          continue;
        // site i receives n2, site i+1 receives n1
        const int row = rest | (n2 << hi) | (n1 << lo);
        x(row, col) += w;
      }
  }
  return x;
}

double yang_baxter_residual(double u, double v, double mu) {
  const auto ru = r_matrix(u, mu), rv = r_matrix(v, mu), ruv = r_matrix(u + v, mu);
  const Eigen::MatrixXd lhs = yang_baxter_operator(ru, 3, 1) *
                              yang_baxter_operator(ruv, 3, 2) *
                              yang_baxter_operator(rv, 3, 1);
  const Eigen::MatrixXd rhs = yang_baxter_operator(rv, 3, 2) *
                              yang_baxter_operator(ruv, 3, 1) *
                              yang_baxter_operator(ru, 3, 2);
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

double far_commutation_residual(double u, double v, double mu) {
  const Eigen::MatrixXd x1 = yang_baxter_operator(r_matrix(u, mu), 4, 1);
  const Eigen::MatrixXd x3 = yang_baxter_operator(r_matrix(v, mu), 4, 3);
  return (x1 * x3 - x3 * x1).cwiseAbs().maxCoeff();
}

Eigen::Matrix4cd sigma_matrix(cplx sqrt_q) {
  Eigen::Matrix4cd s = Eigen::Matrix4cd::Zero();
  s(kUpUp, kUpUp) = 1.0;
  s(kDownDown, kDownDown) = 1.0;
  s(kUpDown, kDownUp) = -sqrt_q;
  s(kDownUp, kUpDown) = -sqrt_q;
  s(kDownUp, kDownUp) = 1.0 - sqrt_q * sqrt_q;
  return s;
}

Eigen::Matrix4cd sigma_matrix(const QPoint &point) {
  Eigen::Matrix4cd s = sigma_matrix(point.sqrt_q());
  // use the exact phase for q rather than the square of q^{1/2}
  s(kDownUp, kDownUp) = 1.0 - point.q();
  return s;
}

Eigen::Matrix4d sigma_matrix(const RealQPoint &point) {
  return sigma_matrix(cplx(point.sqrt_q())).real();
}

double braid_limit_check(double u_large, double mu) {
  const RMatrix r = r_matrix(u_large, mu);
  const double growth = -0.5 * std::exp(u_large - mu);
  const Eigen::Matrix4cd sigma = sigma_matrix(cplx(-std::exp(mu)));
  double deviation = 0.0;
  for (int m1 = 0; m1 < 2; ++m1)
    for (int m2 = 0; m2 < 2; ++m2)
      for (int n1 = 0; n1 < 2; ++n1)
        for (int n2 = 0; n2 < 2; ++n2) {
          const double limit = r(2 * m1 + m2, 2 * n2 + n1) / growth;
          deviation = std::max(
              deviation, std::abs(limit - sigma(2 * m1 + m2, 2 * n1 + n2)));
        }
  return deviation;
}

namespace {

std::vector<cplx> sorted_eigenvalues(const Eigen::Matrix4cd &m) {
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(m, false);
  std::vector<cplx> ev(solver.eigenvalues().begin(), solver.eigenvalues().end());
  std::sort(ev.begin(), ev.end(), [](cplx a, cplx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return ev;
}

} // namespace

std::vector<cplx> sigma_spectrum(const QPoint &point) {
  return sorted_eigenvalues(sigma_matrix(point));
}

std::vector<cplx> sigma_spectrum(const RealQPoint &point) {
  return sorted_eigenvalues(sigma_matrix(point).cast<cplx>());
}

Eigen::Matrix4d coupled_eigenvectors(const RealQPoint &point) {
  const double h = point.sqrt_q();
  const double norm = std::sqrt(1.0 + point.q());
  Eigen::Matrix4d v = Eigen::Matrix4d::Zero();
  v(kUpUp, 0) = 1.0;
  v(kUpDown, 1) = h / norm;
  v(kDownUp, 1) = -1.0 / norm;
  v(kUpDown, 2) = 1.0 / norm;
  v(kDownUp, 2) = h / norm;
  v(kDownDown, 3) = 1.0;
  return v;
}

} // namespace braidq::vertex
