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

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "braidq/braid.hpp"

using namespace braidq;

namespace {

ErrorKind parse_error(const std::string &text) {
  try {
    parse_braid(text);
  } catch (const Error &e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

const char *kBa = "strands=4; b2^3 h1^-2 h3^-2 b2^3";
const char *kBb = "strands=6; b2^-1 b4 h1^-2 h3^-3 h5^-2 h2 h4^2 b1 h2";

} // namespace

TEST(Parse, BasicWord) {
  const BraidWord w = parse_braid("strands=4; b2^3 h1^-2 g3");
  EXPECT_EQ(w.strands, 4);
  EXPECT_EQ(w.pairs(), 2);
  ASSERT_EQ(w.length(), 3);
  EXPECT_EQ(w.syllables[0], (Syllable{2, 3, Orientation::Parallel}));
  EXPECT_EQ(w.syllables[1], (Syllable{1, -2, Orientation::Antiparallel}));
  EXPECT_EQ(w.syllables[2], (Syllable{3, 1, Orientation::Auto}));
  EXPECT_EQ(w.crossing_count(), 6);
  EXPECT_FALSE(w.flips.has_value());
}

TEST(Parse, FlipsCommentsAndLayout) {
  const BraidWord w = parse_braid("# trefoil\nstrands = 2 ;\n flips=1;\n  g1^3  # three twists\n");
  ASSERT_TRUE(w.flips.has_value());
  EXPECT_EQ(*w.flips, std::vector<bool>{true});
  EXPECT_EQ(w.crossing_count(), 3);
}

TEST(Parse, EmptyWord) {
  const BraidWord w = parse_braid("strands=6;");
  EXPECT_EQ(w.length(), 0);
  EXPECT_EQ(permutation(w), (std::vector<int>{0, 1, 2, 3, 4, 5}));
}

TEST(Parse, FormatRoundTrip) {
  for (const char *text : {kBa, kBb, "strands=2; flips=1; g1^-5"}) {
    const BraidWord w = parse_braid(text);
    EXPECT_EQ(parse_braid(format_braid(w)), w);
  }
  EXPECT_EQ(format_braid(parse_braid(kBa)), kBa);
}

TEST(Parse, Errors) {
  EXPECT_EQ(parse_error("strands=3; b1"), ErrorKind::SyntaxError);
  EXPECT_EQ(parse_error("strands=4 b1"), ErrorKind::SyntaxError);
  EXPECT_EQ(parse_error("strands=4; x1"), ErrorKind::SyntaxError);
  EXPECT_EQ(parse_error("strands=4; b1^"), ErrorKind::SyntaxError);
  EXPECT_EQ(parse_error("strands=4; b1^2x"), ErrorKind::SyntaxError);
  EXPECT_EQ(parse_error("strands=4; flips=0; b1"), ErrorKind::SyntaxError);
  EXPECT_EQ(parse_error("strands=4; b4"), ErrorKind::IndexOutOfRange);
  EXPECT_EQ(parse_error("strands=4; b0"), ErrorKind::IndexOutOfRange);
  EXPECT_EQ(parse_error("strands=4; h2^0"), ErrorKind::ZeroPower);
}

TEST(Parse, ErrorPosition) {
  try {
    parse_braid("strands=4;\n b1 q2");
    FAIL();
  } catch (const Error &e) {
    EXPECT_NE(std::string(e.what()).find("line 2, column 5"), std::string::npos) << e.what();
  }
}

TEST(Permutation, Transpositions) {
  const BraidWord w = parse_braid("strands=4; g1 g2");
  EXPECT_EQ(permutation(w), (std::vector<int>{1, 2, 0, 3}));
  EXPECT_EQ(permutation(parse_braid("strands=4; g1^2 g3^-1")), (std::vector<int>{0, 1, 3, 2}));
}

TEST(WordAlgebra, InverseCancels) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> idx(1, 5), pw(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    BraidWord w{6, {}, std::nullopt};
    for (int k = 0; k < 6; ++k) {
      int p = pw(rng);
      w.syllables.push_back({idx(rng), p == 0 ? 1 : p, Orientation::Auto});
    }
    const BraidWord both = concatenate(w, inverse(w));
    EXPECT_EQ(permutation(both), permutation(BraidWord{6, {}, std::nullopt}));
    EXPECT_EQ(mirror(mirror(w)), w);
    EXPECT_EQ(mirror(w).crossing_count(), w.crossing_count());
  }
}

TEST(Orientation, TrefoilIsParallel) {
  const OrientationTrace t = orient(parse_braid("strands=4; g2^3"));
  ASSERT_TRUE(t.ok());
  EXPECT_EQ(t.flips, (std::vector<bool>{false, true}));
  ASSERT_EQ(t.annotated.length(), 1);
  EXPECT_EQ(t.annotated.syllables[0], (Syllable{2, 3, Orientation::Parallel}));
}

TEST(Orientation, TwoStrandTwistIsAntiparallel) {
  const OrientationTrace t = orient(parse_braid("strands=2; g1^3"));
  ASSERT_TRUE(t.ok());
  EXPECT_EQ(t.annotated.length(), 3);
}

TEST(Orientation, SplitsAntiparallelPowers) {
  const OrientationTrace t = propagate_orientations(parse_braid("strands=4; g2^-3"), {false, true});
  EXPECT_EQ(t.annotated.length(), 1);
  const OrientationTrace u = propagate_orientations(parse_braid("strands=4; g2^2"), {false, false});
  ASSERT_EQ(u.annotated.length(), 2);
  for (const auto &s : u.annotated.syllables) {
    EXPECT_EQ(s.orientation, Orientation::Antiparallel);
    EXPECT_EQ(s.power, 1);
  }
}

TEST(Orientation, DirectionsSwapWithStrands) {
  const OrientationTrace t = trace_orientations(parse_braid("strands=4; g2"), {false, false});
  EXPECT_EQ(t.annotated.syllables[0].orientation, Orientation::Antiparallel);
  EXPECT_EQ(t.top, (std::vector<Direction>{Direction::Up, Direction::Up, Direction::Down,
                                            Direction::Down}));
  EXPECT_FALSE(t.caps_ok());
}

TEST(Orientation, CapMismatchAndConflict) {
  try {
    propagate_orientations(parse_braid("strands=4; g2"), {false, false});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapMismatch);
  }
  try {
    propagate_orientations(parse_braid("strands=4; b1^2"), {false, false});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::AnnotationConflict);
  }
  try {
    orient(parse_braid("strands=4; flips=01; h2^2"));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::AnnotationConflict);
  }
}

TEST(Orientation, FrozenWordFlips) {
  const auto a = consistent_flips(parse_braid(kBa));
  EXPECT_EQ(a, (std::vector<std::vector<bool>>{{false, true}, {true, false}}));
  const auto b = consistent_flips(parse_braid(kBb));
  EXPECT_EQ(b, (std::vector<std::vector<bool>>{{false, true, false}, {true, false, true}}));
  const OrientationTrace t = orient(parse_braid(kBb));
  EXPECT_EQ(t.flips, (std::vector<bool>{false, true, false}));
}

TEST(Orientation, AutoWordsUnchangedByFlipSearch) {
  // with only 'g' syllables every flip vector avoids conflicts
  const BraidWord w = parse_braid("strands=4; g2^-1 g1 g2^-2");
  const OrientationTrace t = orient(w);
  EXPECT_TRUE(t.ok());
  EXPECT_EQ(t.annotated.crossing_count(), 4);
}

TEST(Writhe, Values) {
  EXPECT_EQ(writhe(orient(parse_braid("strands=4; g2^3")).annotated), 3);
  EXPECT_EQ(writhe(orient(parse_braid("strands=4; g2^-3")).annotated), -3);
  EXPECT_EQ(writhe(orient(parse_braid("strands=2; g1^3")).annotated), -3);
  // figure-eight plat: two positive and two negative crossings
  EXPECT_EQ(writhe(orient(parse_braid("strands=4; g2^-1 g1 g2^-2")).annotated), 0);
  EXPECT_THROW(writhe(parse_braid("strands=2; g1")), Error);
}

TEST(Writhe, MirrorNegates) {
  for (const char *text : {kBa, kBb}) {
    const BraidWord w = parse_braid(text);
    const int a = writhe(orient(w).annotated);
    EXPECT_EQ(writhe(orient(mirror(w)).annotated), -a);
  }
}

TEST(SpecExamples, Braid) {
  EXPECT_EQ(parse_error("strands=4; b5"), ErrorKind::IndexOutOfRange);
  EXPECT_EQ(permutation(parse_braid(kBa)), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(permutation(parse_braid("strands=2; b1")), (std::vector<int>{1, 0}));
  EXPECT_EQ(writhe(parse_braid("strands=2; b1")), 1);
  EXPECT_EQ(writhe(parse_braid("strands=2;")), 0);
  EXPECT_TRUE(orient(parse_braid("strands=6;")).ok());
  const OrientationTrace t = trace_orientations(parse_braid("strands=4; g2^2"), {false, false});
  ASSERT_EQ(t.annotated.length(), 2);
  EXPECT_EQ(t.annotated.syllables[0].orientation, Orientation::Antiparallel);
  EXPECT_TRUE(t.ok());
  EXPECT_EQ(mirror(parse_braid("strands=4; b2^3")), parse_braid("strands=4; b2^-3"));
}

TEST(Orientation, CapMismatchMatchesBruteForce) {
  // a flip vector fails the caps iff the direction carried by each strand
  // puts equal arrows on some top pair
  std::mt19937_64 rng(29);
  for (int strands : {2, 4, 6}) {
    std::uniform_int_distribution<int> idx(1, strands - 1), pw(-2, 2);
    for (int trial = 0; trial < 30; ++trial) {
      BraidWord w{strands, {}, std::nullopt};
      for (int k = 0; k < 4; ++k) {
        const int p = pw(rng);
        w.syllables.push_back({idx(rng), p == 0 ? 1 : p, Orientation::Auto});
      }
      const auto perm = permutation(w);
      for (unsigned mask = 0; mask < (1u << (strands / 2)); ++mask) {
        std::vector<bool> flips;
        for (int i = 0; i < strands / 2; ++i)
          flips.push_back((mask >> i) & 1u);
        auto up = [&](int bottom) { return (bottom % 2 == 0) != flips[bottom / 2]; };
        bool expect_ok = true;
        for (int i = 0; i < strands / 2; ++i)
          expect_ok = expect_ok && up(perm[2 * i]) != up(perm[2 * i + 1]);
        EXPECT_EQ(trace_orientations(w, flips).caps_ok(), expect_ok);
      }
    }
  }
}
