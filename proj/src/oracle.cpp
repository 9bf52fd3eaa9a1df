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

#include "braidq/oracle.hpp"

#include <cstdlib>
#include <map>
#include <numeric>

namespace braidq {

namespace {

class DisjointSets {
public:
  explicit DisjointSets(int size) : parent_(static_cast<std::size_t>(size)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto &p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent_[static_cast<std::size_t>(a)] = b;
      --components_;
    }
  }

  void reset(int size) {
    parent_.resize(static_cast<std::size_t>(size));
    std::iota(parent_.begin(), parent_.end(), 0);
    components_ = size;
  }

  int components() const { return components_; }

private:
  std::vector<int> parent_;
  int components_ = 0;
};

} // namespace

PlanarDiagram plat_diagram(const BraidWord &word) {
  orient(word);  // validates the caps

  PlanarDiagram d;
  d.strands = word.strands;
  std::vector<int> current(static_cast<std::size_t>(word.strands));
  std::iota(current.begin(), current.end(), 0);
  int next = word.strands;
  for (int i = 0; i < word.pairs(); ++i)
    d.cups.emplace_back(2 * i, 2 * i + 1);
  for (const Syllable &s : word.syllables) {
    const int sign = s.power > 0 ? 1 : -1;
    for (int k = 0; k < std::abs(s.power); ++k) {
      auto &left = current[static_cast<std::size_t>(s.index - 1)];
      auto &right = current[static_cast<std::size_t>(s.index)];
      d.crossings.push_back({s.index, sign, left, right, next, next + 1});
      left = next;
      right = next + 1;
      next += 2;
    }
  }
  for (int i = 0; i < word.pairs(); ++i)
    d.caps.emplace_back(current[static_cast<std::size_t>(2 * i)],
                        current[static_cast<std::size_t>(2 * i + 1)]);
  d.segment_count = next;
  return d;
}

LaurentPoly kauffman_bracket(const PlanarDiagram &diagram, int max_crossings) {
  const int c = static_cast<int>(diagram.crossings.size());
  if (c > max_crossings)
    throw Error(ErrorKind::TooManyCrossings,
                std::to_string(c) + " crossings exceed the limit of " +
                    std::to_string(max_crossings));

  // (a - b, loops) -> number of states
  std::map<std::pair<int, int>, long long> tally;
  DisjointSets sets(diagram.segment_count);
  for (unsigned long long state = 0; state < (1ull << c); ++state) {
    sets.reset(diagram.segment_count);
    for (const auto &[a, b] : diagram.cups)
      sets.unite(a, b);
    int exponent = 0;
    for (int t = 0; t < c; ++t) {
      const auto &x = diagram.crossings[static_cast<std::size_t>(t)];
      const bool a_smoothing = ((state >> t) & 1ull) == 0;
      exponent += a_smoothing ? 1 : -1;
      const bool vertical = x.sign > 0 ? a_smoothing : !a_smoothing;
      if (vertical) {
        sets.unite(x.bottom_left, x.top_left);
        sets.unite(x.bottom_right, x.top_right);
      } else {
        sets.unite(x.bottom_left, x.bottom_right);
        sets.unite(x.top_left, x.top_right);
      }
    }
    for (const auto &[a, b] : diagram.caps)
      sets.unite(a, b);
    ++tally[{exponent, sets.components()}];
  }

  const LaurentPoly loop = -LaurentPoly::monomial(2) - LaurentPoly::monomial(-2);
  std::map<int, LaurentPoly> loop_powers;
  LaurentPoly bracket;
  for (const auto &[key, count] : tally) {
    const auto [exponent, loops] = key;
    auto it = loop_powers.find(loops);
    if (it == loop_powers.end())
      it = loop_powers.emplace(loops, loop.pow(static_cast<unsigned>(loops - 1))).first;
    bracket += LaurentPoly::monomial(exponent, mpq_class(static_cast<long>(count))) * it->second;
  }
  return bracket;
}

LaurentPoly jones_exact(const BraidWord &word, int max_crossings) {
  const PlanarDiagram diagram = plat_diagram(word);
  const int w = writhe(orient(word).annotated);
  const LaurentPoly bracket = kauffman_bracket(diagram, max_crossings);
  LaurentPoly v;
  const int sign = w % 2 == 0 ? 1 : -1;
  for (const auto &[e, coeff] : bracket.terms()) {
    const int a_exponent = e - 3 * w;
    v.add_term(-a_exponent / 2, mpq_class(sign * coeff));
  }
  return v;
}

} // namespace braidq
