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

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "braidq/errors.hpp"

namespace braidq {

/// Relative orientation of the two strands entering a crossing. 'b' words
/// are Parallel, hatted 'h' words Antiparallel, 'g' words are annotated by
/// propagation.
enum class Orientation { Parallel, Antiparallel, Auto };

enum class Direction { Up, Down };

struct Syllable {
  int index;  // generator b_index acts on positions (index, index + 1)
  int power;  // nonzero; negative powers are left-handed
  Orientation orientation;

  bool operator==(const Syllable &) const = default;
};

struct BraidWord {
  int strands = 2;
  std::vector<Syllable> syllables;
  /// Cup flips from the header, one per cup, when given.
  std::optional<std::vector<bool>> flips;

  int pairs() const { return strands / 2; }
  int length() const { return static_cast<int>(syllables.size()); }
  int crossing_count() const;
  bool fully_annotated() const;

  bool operator==(const BraidWord &) const = default;
};

/// Parses `strands=2n [; flips=bits] ; syllable*`. Syllables are
/// whitespace-separated `b3`, `h1^-2`, `g2^3`. '#' starts a comment.
BraidWord parse_braid(std::string_view text);

/// Inverse of parse_braid (flips included when present).
std::string format_braid(const BraidWord &word);

/// perm[p] is the bottom position of the strand that ends at top position p
/// (both 0-based).
std::vector<int> permutation(const BraidWord &word);

/// Syllables reversed with powers negated.
BraidWord inverse(const BraidWord &word);

/// Every power negated; annotations kept.
BraidWord mirror(const BraidWord &word);

/// Word followed by another on the same strand count.
BraidWord concatenate(const BraidWord &a, const BraidWord &b);

struct OrientationTrace {
  /// The word with every syllable labelled; antiparallel syllables with
  /// |k| > 1 are split into unit-power syllables.
  BraidWord annotated;
  std::vector<bool> flips;
  std::vector<Direction> bottom;
  std::vector<Direction> top;
  /// One entry per top cap (2i-1, 2i): true when the directions differ.
  std::vector<bool> caps_valid;
  /// Index (in the input word) of the first explicit annotation that
  /// disagrees with propagation.
  std::optional<int> conflict;

  bool caps_ok() const;
  bool ok() const { return caps_ok() && !conflict; }
};

/// Cups start at position 2i-1 Up and 2i Down (swapped when flips[i]); each
/// crossing is labelled by comparing the two current directions, which then
/// swap. Never throws on orientation failures.
OrientationTrace trace_orientations(const BraidWord &word,
                                    const std::vector<bool> &flips);

/// As trace_orientations but raises CapMismatch / AnnotationConflict.
OrientationTrace propagate_orientations(const BraidWord &word,
                                        const std::vector<bool> &flips);

/// All flip vectors (lexicographic) giving a cap-valid, conflict-free trace.
std::vector<std::vector<bool>> consistent_flips(const BraidWord &word);

/// Header flips when present; otherwise the default cups, falling back to
/// the first consistent flip vector.
OrientationTrace orient(const BraidWord &word);

/// Sum of crossing signs; a right-handed crossing of co-oriented strands
/// counts +1. Requires an annotated word.
int writhe(const BraidWord &annotated);

struct RandomWordSpec {
  int strands = 4;
  int min_syllables = 1;
  int max_syllables = 6;
  int max_power = 3;
  int max_crossings = 10;
};

/// Uniform 'g' syllables with 1 <= |k| <= max_power, redrawn until some flip
/// vector closes the word; the first such vector is stored in `flips`.
BraidWord random_word(std::mt19937_64 &rng, const RandomWordSpec &spec);

std::string to_string(Orientation o);
std::string to_string(const std::vector<bool> &flips);

} // namespace braidq
