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

#include "braidq/qnum.hpp"

namespace braidq {

RealQPoint::RealQPoint(double q) : q_(q) {
  if (!(q > 0.0 && q <= 1.0))
    throw Error(ErrorKind::InvalidArgument, "real q must lie in (0, 1]");
}

double q_number(int x, const QPoint &point) {
  const double s = std::sin(point.theta() / 2.0);
  if (s == 0.0 || std::abs(s) < 1e-300)
    throw Error(ErrorKind::DegenerateQ, "sin(theta/2) vanishes");
  return std::sin(x * point.theta() / 2.0) / s;
}

double q_number(int x, const RealQPoint &point) {
  const double h = point.sqrt_q();
  if (point.q() == 1.0)
    return x;
  return (std::pow(h, x) - std::pow(h, -x)) / (h - 1.0 / h);
}

double q_number_doubled(int twice_x, const QPoint &point) {
  const double s = std::sin(point.theta() / 2.0);
  if (s == 0.0)
    throw Error(ErrorKind::DegenerateQ, "sin(theta/2) vanishes");
  return std::sin(twice_x * point.theta() / 4.0) / s;
}

} // namespace braidq
