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

#include "braidq/fusion.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

namespace braidq {

namespace {

void extend_odd(int n, const std::vector<int> &J, std::vector<int> &l,
                std::vector<OddPath> &out) {
  const int i = static_cast<int>(l.size());
  if (i == n) {
    if (l.back() == 0)
      out.push_back({J, l});
    return;
  }
  const int prev = l.back(), j = J[static_cast<std::size_t>(i)];
  for (int next = std::abs(prev - j); next <= prev + j; next += 2) {
    l.push_back(next);
    extend_odd(n, J, l, out);
    l.pop_back();
  }
}

void extend_even(int n, const std::vector<int> &J, std::vector<int> &r,
                 std::vector<EvenPath> &out) {
  const int i = static_cast<int>(r.size());
  if (i == n) {
    if (r.back() == 1)
      out.push_back({J, r});
    return;
  }
  const int prev = r.back(), j = J[static_cast<std::size_t>(i - 1)];
  for (int next = std::abs(prev - j); next <= prev + j; next += 2) {
    r.push_back(next);
    extend_even(n, J, r, out);
    r.pop_back();
  }
}

std::vector<std::vector<int>> pair_labels(int count) {
  std::vector<std::vector<int>> all;
  for (unsigned mask = 0; mask < (1u << count); ++mask) {
    std::vector<int> J(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
      J[static_cast<std::size_t>(i)] = ((mask >> (count - 1 - i)) & 1u) ? 2 : 0;
    all.push_back(std::move(J));
  }
  return all;
}

// The chain 1 = k[1], k[2], ..., k[2n] of running totals when the strands
// are coupled one at a time; both trees reduce to it. Empty when the two
// paths share no such chain.
std::optional<std::vector<int>> sequential_chain(const OddPath &o, const EvenPath &e, int n) {
  std::vector<int> k(static_cast<std::size_t>(2 * n + 1), 0);
  k[1] = 1;
  for (int i = 0; i < n; ++i)
    k[static_cast<std::size_t>(2 * i + 2)] = o.l[static_cast<std::size_t>(i)];
  for (int i = 1; i < n; ++i)
    k[static_cast<std::size_t>(2 * i + 1)] = e.r[static_cast<std::size_t>(i)];
  for (int j = 2; j <= 2 * n; ++j)
    if (std::abs(k[static_cast<std::size_t>(j)] - k[static_cast<std::size_t>(j - 1)]) != 1)
      return std::nullopt;
  return k;
}

template <QArithmetic P> DualityMatrix build_duality(int n, const P &point) {
  if (n < 2)
    throw Error(ErrorKind::InvalidArgument, "duality needs at least 4 strands");
  DualityMatrix d{n, enumerate_odd_paths(n), enumerate_even_paths(n), {}};
  d.entries = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d.odd.size()),
                                    static_cast<Eigen::Index>(d.even.size()));
  for (std::size_t a = 0; a < d.odd.size(); ++a) {
    const OddPath &o = d.odd[a];
    for (std::size_t b = 0; b < d.even.size(); ++b) {
      const EvenPath &e = d.even[b];
      const auto k = sequential_chain(o, e, n);
      if (!k)
        continue;
      const auto K = [&](int idx) { return (*k)[static_cast<std::size_t>(idx)]; };
      double v = 1.0;
      for (int i = 1; i < n; ++i)
        v *= racah(K(2 * i + 1), o.J[static_cast<std::size_t>(i)], K(2 * i), 1, 1,
                   K(2 * i + 2), point);
      for (int i = 1; i < n; ++i)
        v *= racah(K(2 * i), e.J[static_cast<std::size_t>(i - 1)], K(2 * i - 1), 1, 1,
                   K(2 * i + 1), point);
      d.entries(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = v;
    }
  }
  return d;
}

} // namespace

std::vector<OddPath> enumerate_odd_paths(int n) {
  if (n < 1)
    throw Error(ErrorKind::InvalidArgument, "need at least one strand pair");
  std::vector<OddPath> out;
  for (const auto &J : pair_labels(n)) {
    std::vector<int> l{J.front()};
    extend_odd(n, J, l, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EvenPath> enumerate_even_paths(int n) {
  std::vector<EvenPath> out;
  if (n < 2)
    return out;
  for (const auto &J : pair_labels(n - 1)) {
    std::vector<int> r{1};
    extend_even(n, J, r, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long catalan(int n) {
  long long c = 1;
  for (int k = 0; k < n; ++k)
    c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

DualityMatrix duality_matrix(int n, const QPoint &point) {
  require_nondegenerate(n, point);
  return build_duality(n, point);
}

DualityMatrix duality_matrix(int n, const RealQPoint &point) { return build_duality(n, point); }

Eigen::MatrixXd GaugedDuality::rational_inverse() const {
  return even_weights.asDiagonal() * rational.transpose() * odd_weights.asDiagonal();
}

Eigen::MatrixXd GaugedDuality::unitary() const {
  if (odd_weights.minCoeff() < 0.0 || even_weights.minCoeff() < 0.0)
    throw Error(ErrorKind::NegativeRadicand, "gauge weights are negative at this q");
  return odd_weights.cwiseSqrt().asDiagonal() * rational *
         even_weights.cwiseSqrt().asDiagonal();
}

GaugedDuality gauged_duality(int n, const QPoint &point) {
  if (n < 2)
    throw Error(ErrorKind::InvalidArgument, "duality needs at least 4 strands");
  require_nondegenerate(n, point);
  const auto odd = enumerate_odd_paths(n);
  const auto even = enumerate_even_paths(n);
  const auto qn = [&](int k) { return q_number(k, point); };
  const auto d2 = [&](int a, int b, int c) { return triangle_squared(a, b, c, point); };
  const auto at = [](const std::vector<int> &v, int i) { return v[static_cast<std::size_t>(i)]; };

  GaugedDuality g{n, Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(odd.size()),
                                           static_cast<Eigen::Index>(even.size())),
                  Eigen::VectorXd(static_cast<Eigen::Index>(odd.size())),
                  Eigen::VectorXd(static_cast<Eigen::Index>(even.size()))};

  for (std::size_t a = 0; a < odd.size(); ++a) {
    const OddPath &o = odd[a];
    double u = d2(1, 1, o.J.front()) * d2(1, 1, 0);
    for (int i = 1; i < n; ++i)
      u *= qn(at(o.l, i - 1) + 1) * qn(at(o.J, i) + 1) * d2(at(o.l, i - 1), at(o.l, i), at(o.J, i)) *
           d2(1, 1, at(o.J, i));
    g.odd_weights(static_cast<Eigen::Index>(a)) = u;
  }
  for (std::size_t b = 0; b < even.size(); ++b) {
    const EvenPath &e = even[b];
    double v = 1.0;
    for (int i = 1; i < n; ++i)
      v *= qn(at(e.r, i) + 1) * qn(at(e.J, i - 1) + 1) *
           d2(at(e.r, i - 1), at(e.r, i), at(e.J, i - 1)) * d2(1, 1, at(e.J, i - 1));
    g.even_weights(static_cast<Eigen::Index>(b)) = v;
  }
  for (std::size_t a = 0; a < odd.size(); ++a) {
    for (std::size_t b = 0; b < even.size(); ++b) {
      const auto k = sequential_chain(odd[a], even[b], n);
      if (!k)
        continue;
      const auto K = [&](int idx) { return at(*k, idx); };
      double v = 1.0;
      for (int i = 1; i < n; ++i)
        v *= racah_parts(K(2 * i + 1), at(odd[a].J, i), K(2 * i), 1, 1, K(2 * i + 2), point).core;
      for (int i = 1; i < n; ++i)
        v *= racah_parts(K(2 * i), at(even[b].J, i - 1), K(2 * i - 1), 1, 1, K(2 * i + 1), point)
                 .core;
      for (int j = 3; j <= 2 * n - 1; ++j)
        v *= d2(K(j - 1), 1, K(j));
      g.rational(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = v;
    }
  }
  return g;
}

bool unitary_route_admissible(int n, const QPoint &point) {
  for (int k = 1; k <= n + 1; ++k)
    if (!(q_number(k, point) > 0.0))
      return false;
  return true;
}

void require_nondegenerate(int n, const QPoint &point, double eps) {
  for (int k = 1; k <= n + 1; ++k)
    if (std::abs(q_number(k, point)) < eps)
      throw Error(ErrorKind::DegenerateQ,
                  "[" + std::to_string(k) + "] vanishes at theta = " + std::to_string(point.theta()));
}

int pair_label(const OddPath &p, int index) {
  if (index % 2 != 1)
    throw Error(ErrorKind::ParityMismatch, "odd path read with an even generator");
  return p.J.at(static_cast<std::size_t>((index - 1) / 2));
}

int pair_label(const EvenPath &p, int index) {
  if (index % 2 != 0)
    throw Error(ErrorKind::ParityMismatch, "even path read with an odd generator");
  return p.J.at(static_cast<std::size_t>(index / 2 - 1));
}

} // namespace braidq
