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

#include <Eigen/Dense>

#include <vector>

#include "braidq/qnum.hpp"

namespace braidq::vertex {

// Two-site states are ordered (+,+), (+,-), (-,+), (-,-) where + is the
// spin +1/2 edge state. Rows index the incoming pair (m1, m2), columns the
// outgoing pair (n1, n2).
inline constexpr int kUpUp = 0;
inline constexpr int kUpDown = 1;
inline constexpr int kDownUp = 2;
inline constexpr int kDownDown = 3;

/// Six-vertex R-matrix R^{n1 n2}_{m1 m2}(u) at anisotropy mu (q = e^{2 mu}).
struct RMatrix {
  double u;
  double mu;
  Eigen::Matrix4d entries;

  double operator()(int m_pair, int n_pair) const { return entries(m_pair, n_pair); }
};

RMatrix r_matrix(double u, double mu);

/// Yang-Baxter operator X_i(u) on `strands` spin-1/2 sites (site 1 is the
/// most significant bit, spin -1/2 is bit value 1). It sends |m1 m2> on
/// sites (i, i+1) to sum R^{n1 n2}_{m1 m2} |n2 n1>.
Eigen::MatrixXd yang_baxter_operator(const RMatrix &r, int strands, int site);

/// max |X1(u) X2(u+v) X1(v) - X2(v) X1(u+v) X2(u)| on three strands.
double yang_baxter_residual(double u, double v, double mu);

/// max |X1(u) X3(v) - X3(v) X1(u)| on four strands.
double far_commutation_residual(double u, double v, double mu);

/// sigma^{n1 n2}_{m1 m2}: corners 1, middle block [[0, -h], [-h, 1 - h^2]]
/// where h is the chosen square root of q.
Eigen::Matrix4cd sigma_matrix(cplx sqrt_q);
Eigen::Matrix4cd sigma_matrix(const QPoint &point);
Eigen::Matrix4d sigma_matrix(const RealQPoint &point);

/// R(u) divided by its dominant growth -e^{u - mu}/2, with the outgoing
/// pair swapped, compared entrywise with sigma at q = e^{2 mu}. Returns the
/// max deviation. The limit carries the branch q^{1/2} = -e^{mu}.
double braid_limit_check(double u_large, double mu);

/// Eigenvalues of sigma, sorted by (real, imag).
std::vector<cplx> sigma_spectrum(const QPoint &point);
std::vector<cplx> sigma_spectrum(const RealQPoint &point);

/// Orthonormal eigenvectors of sigma at real q, columns ordered
/// |++>, triplet m=0, q-singlet, |-->, with eigenvalues (1, 1, -q, 1).
/// The q-singlet is (|+-> + q^{1/2}|-+>)/sqrt(1+q).
Eigen::Matrix4d coupled_eigenvectors(const RealQPoint &point);

} // namespace braidq::vertex
