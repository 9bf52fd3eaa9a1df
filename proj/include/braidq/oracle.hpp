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

#include <utility>
#include <vector>

#include "braidq/braid.hpp"
#include "braidq/laurent.hpp"

namespace braidq {

/// Plat closure of a braid word as a 4-valent diagram. Segment ids 0..2n-1
/// are the bottom ends of the strands; every unit crossing creates two new
/// ids for its top ends.
struct PlanarDiagram {
  struct Crossing {
    int position;  // generator index i, acting on positions (i, i+1)
    int sign;      // +1 for a right-handed half twist
    int bottom_left, bottom_right, top_left, top_right;
  };

  int strands = 0;
  std::vector<std::pair<int, int>> cups;
  std::vector<Crossing> crossings;
  std::vector<std::pair<int, int>> caps;
  int segment_count = 0;
};

/// Raises CapMismatch when no orientation closes the word.
PlanarDiagram plat_diagram(const BraidWord &word);

inline constexpr int kDefaultMaxCrossings = 20;

/// ⟨K⟩ as a polynomial in A, normalised so the unknot is 1.
LaurentPoly kauffman_bracket(const PlanarDiagram &diagram,
                             int max_crossings = kDefaultMaxCrossings);

/// V(t) = (-A^3)^{-w} ⟨K⟩ with A = t^{-1/4}, returned as a polynomial in
/// x = t^{1/2}.
LaurentPoly jones_exact(const BraidWord &word, int max_crossings = kDefaultMaxCrossings);

} // namespace braidq
