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
#include <vector>

#include <Eigen/Dense>

#include "braidq/qnum.hpp"

namespace braidq {

// All spin labels in this module are doubled integers.

/// Basis vector of the odd tree: strands (2i+1, 2i+2) fuse to J[i], and the
/// running total l[i] couples l[i-1] with J[i], starting at l[0] = J[0] and
/// ending at 0.
struct OddPath {
  std::vector<int> J;
  std::vector<int> l;

  auto operator<=>(const OddPath &) const = default;
};

/// Basis vector of the even tree: strand 1 stays alone (r[0] = 1), strands
/// (2i, 2i+1) fuse to J[i-1], r[i] couples r[i-1] with J[i-1], and the last
/// label r[n-1] = 1 fuses with strand 2n to spin 0.
struct EvenPath {
  std::vector<int> J;
  std::vector<int> r;

  auto operator<=>(const EvenPath &) const = default;
};

std::vector<OddPath> enumerate_odd_paths(int n);
/// Empty for n < 2.
std::vector<EvenPath> enumerate_even_paths(int n);

long long catalan(int n);

/// Pieces of the closed form: value = core * sqrt(j_weight * l_weight) with
/// core = (-1)^{(s1+s2+s3+s4)/2} times the alternating sum over m,
/// j_weight = [j+1] Δ²(s1,s2,j) Δ²(s3,s4,j), l_weight = [l+1] Δ²(s1,s4,l) Δ²(s2,s3,l).
struct RacahParts {
  double core;
  double j_weight;
  double l_weight;
};

template <QArithmetic P>
RacahParts racah_parts(int j, int l, int s1, int s2, int s3, int s4, const P &point) {
  const int sum = s1 + s2 + s3 + s4;
  RacahParts parts{};
  parts.j_weight = q_number(j + 1, point) * triangle_squared(s1, s2, j, point) *
                   triangle_squared(s3, s4, j, point);
  parts.l_weight = q_number(l + 1, point) * triangle_squared(s1, s4, l, point) *
                   triangle_squared(s2, s3, l, point);
  double total = 0.0;
  for (int m = 0; 2 * m <= sum + j + l; ++m) {
    const int args[7] = {2 * m - s1 - s2 - j, 2 * m - s3 - s4 - j, 2 * m - s1 - s4 - l,
                         2 * m - s2 - s3 - l, sum - 2 * m,         s1 + s3 + j + l - 2 * m,
                         s2 + s4 + j + l - 2 * m};
    double den = 1.0;
    bool in_range = true;
    for (int a : args) {
      if (a < 0) {
        in_range = false;
        break;
      }
      den *= q_factorial(a / 2, point);
    }
    if (!in_range)
      continue;
    if (den == 0.0)
      throw Error(ErrorKind::DegenerateQ, "vanishing q-factorial in Racah sum");
    total += (m % 2 == 0 ? 1.0 : -1.0) * q_factorial(m + 1, point) / den;
  }
  parts.core = ((sum / 2) % 2 == 0 ? 1.0 : -1.0) * total;
  return parts;
}

/// q-Racah coefficient a_{jl}[s1 s2; s3 s4] in closed form.
template <QArithmetic P>
double racah(int j, int l, int s1, int s2, int s3, int s4, const P &point) {
  const RacahParts p = racah_parts(j, l, s1, s2, s3, s4, point);
  const double radicand = p.j_weight * p.l_weight;
  if (radicand < 0.0)
    throw Error(ErrorKind::NegativeRadicand, "Racah prefactor radicand is negative at this q");
  return p.core * std::sqrt(radicand);
}

/// Square matrix of racah(j, l, ...) over the admissible j (rows) and l
/// (columns), both ascending.
template <QArithmetic P>
Eigen::MatrixXd racah_matrix(int s1, int s2, int s3, int s4, const P &point) {
  std::vector<int> js, ls;
  for (int j = 0; j <= s1 + s2; ++j)
    if (admissible(s1, s2, j) && admissible(s3, s4, j))
      js.push_back(j);
  for (int l = 0; l <= s1 + s4; ++l)
    if (admissible(s1, s4, l) && admissible(s2, s3, l))
      ls.push_back(l);
  Eigen::MatrixXd m(js.size(), ls.size());
  for (std::size_t a = 0; a < js.size(); ++a)
    for (std::size_t b = 0; b < ls.size(); ++b)
      m(a, b) = racah(js[a], ls[b], s1, s2, s3, s4, point);
  return m;
}

/// Orthogonal change of basis: rows are odd paths, columns even paths.
struct DualityMatrix {
  int n;
  std::vector<OddPath> odd;
  std::vector<EvenPath> even;
  Eigen::MatrixXd entries;

  int dimension() const { return static_cast<int>(entries.rows()); }
};

/// Built from one recoupling move per interior node of the two trees.
DualityMatrix duality_matrix(int n, const QPoint &point);
DualityMatrix duality_matrix(int n, const RealQPoint &point);

/// The duality matrix with its square roots factored out,
/// a = diag(sqrt(u)) R diag(sqrt(v)). R, u and v are rational in the
/// q-numbers, so they stay finite and real on the whole unit circle away
/// from vanishing q-numbers even where a itself would need imaginary roots.
struct GaugedDuality {
  int n;
  Eigen::MatrixXd rational;
  Eigen::VectorXd odd_weights;
  Eigen::VectorXd even_weights;

  /// R^{-1} = diag(v) R^T diag(u).
  Eigen::MatrixXd rational_inverse() const;
  /// Reassembles a; throws NegativeRadicand if a weight is negative.
  Eigen::MatrixXd unitary() const;
};

GaugedDuality gauged_duality(int n, const QPoint &point);

/// [k] > 0 for 1 <= k <= n + 1, so every radicand the duality matrix needs is
/// positive and the unitary route applies.
bool unitary_route_admissible(int n, const QPoint &point);

/// Throws DegenerateQ when some [k] with 1 <= k <= n + 1 vanishes (within
/// `eps`).
void require_nondegenerate(int n, const QPoint &point, double eps = 1e-9);

/// Doubled label of the pair coupled by generator `index`; odd generators
/// read the odd path, even generators the even path.
int pair_label(const OddPath &p, int index);
int pair_label(const EvenPath &p, int index);

} // namespace braidq
