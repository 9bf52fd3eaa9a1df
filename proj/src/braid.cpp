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

#include "braidq/braid.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace braidq {

int BraidWord::crossing_count() const {
  int c = 0;
  for (const auto &s : syllables)
    c += std::abs(s.power);
  return c;
}

bool BraidWord::fully_annotated() const {
  return std::none_of(syllables.begin(), syllables.end(), [](const Syllable &s) {
    return s.orientation == Orientation::Auto;
  });
}

namespace {

class Scanner {
public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n')
          advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token)
      return false;
    for (std::size_t i = 0; i < token.size(); ++i)
      advance();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token))
      fail("expected '" + std::string(token) + "'");
  }

  int integer(bool allow_sign) {
    std::string digits;
    if (allow_sign && (peek() == '-' || peek() == '+')) {
      digits += peek();
      advance();
    }
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      digits += peek();
      advance();
    }
    if (digits.empty() || digits == "-" || digits == "+")
      fail("expected an integer");
    if (digits.size() > 9)
      fail("integer too large");
    return std::stoi(digits);
  }

  std::string bits() {
    std::string out;
    while (peek() == '0' || peek() == '1') {
      out += peek();
      advance();
    }
    if (out.empty())
      fail("expected a bitstring");
    return out;
  }

  char take() {
    const char c = peek();
    advance();
    return c;
  }

  [[noreturn]] void fail(const std::string &what, ErrorKind kind = ErrorKind::SyntaxError) const {
    throw Error(kind, "line " + std::to_string(line_) + ", column " +
                          std::to_string(column_) + ": " + what);
  }

  int line() const { return line_; }
  int column() const { return column_; }

private:
  void advance() {
    if (pos_ >= text_.size())
      return;
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

} // namespace

BraidWord parse_braid(std::string_view text) {
  Scanner sc(text);
  BraidWord word;
  sc.expect("strands");
  sc.expect("=");
  sc.skip_space();
  word.strands = sc.integer(false);
  if (word.strands < 2 || word.strands % 2 != 0)
    sc.fail("strand count must be even and at least 2");
  sc.expect(";");
  if (sc.accept("flips")) {
    sc.expect("=");
    sc.skip_space();
    const std::string b = sc.bits();
    if (static_cast<int>(b.size()) != word.pairs())
      sc.fail("flips must have one bit per cup (" + std::to_string(word.pairs()) + ")");
    std::vector<bool> flips;
    for (char c : b)
      flips.push_back(c == '1');
    word.flips = std::move(flips);
    sc.expect(";");
  }
  while (!sc.done()) {
    const int line = sc.line(), column = sc.column();
    const char kind = sc.take();
    Orientation o;
    switch (kind) {
    case 'b': o = Orientation::Parallel; break;
    case 'h': o = Orientation::Antiparallel; break;
    case 'g': o = Orientation::Auto; break;
    default:
      throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ", column " +
                                              std::to_string(column) +
                                              ": expected a syllable starting with b, h or g");
    }
    const int index = sc.integer(false);
    int power = 1;
    if (sc.peek() == '^') {
      sc.take();
      power = sc.integer(true);
    }
    const std::string where =
        "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
    if (index < 1 || index > word.strands - 1)
      throw Error(ErrorKind::IndexOutOfRange,
                  where + "generator " + std::to_string(index) + " outside 1.." +
                      std::to_string(word.strands - 1));
    if (power == 0)
      throw Error(ErrorKind::ZeroPower, where + "zero power");
    const char next = sc.peek();
    if (next != '\0' && next != '#' && !std::isspace(static_cast<unsigned char>(next)))
      sc.fail("unexpected character after syllable");
    word.syllables.push_back({index, power, o});
  }
  return word;
}

std::string to_string(Orientation o) {
  switch (o) {
  case Orientation::Parallel: return "b";
  case Orientation::Antiparallel: return "h";
  case Orientation::Auto: return "g";
  }
  return "?";
}

std::string to_string(const std::vector<bool> &flips) {
  std::string s;
  for (bool f : flips)
    s += f ? '1' : '0';
  return s;
}

std::string format_braid(const BraidWord &word) {
  std::ostringstream os;
  os << "strands=" << word.strands << ";";
  if (word.flips)
    os << " flips=" << to_string(*word.flips) << ";";
  for (const auto &s : word.syllables) {
    os << ' ' << to_string(s.orientation) << s.index;
    if (s.power != 1)
      os << '^' << s.power;
  }
  return os.str();
}

std::vector<int> permutation(const BraidWord &word) {
  std::vector<int> at(static_cast<std::size_t>(word.strands));
  std::iota(at.begin(), at.end(), 0);
  for (const auto &s : word.syllables)
    if (s.power % 2 != 0)
      std::swap(at[s.index - 1], at[s.index]);
  return at;
}

BraidWord inverse(const BraidWord &word) {
  BraidWord out = word;
  std::reverse(out.syllables.begin(), out.syllables.end());
  for (auto &s : out.syllables)
    s.power = -s.power;
  return out;
}

BraidWord mirror(const BraidWord &word) {
  BraidWord out = word;
  for (auto &s : out.syllables)
    s.power = -s.power;
  return out;
}

BraidWord concatenate(const BraidWord &a, const BraidWord &b) {
  if (a.strands != b.strands)
    throw Error(ErrorKind::InvalidArgument, "strand counts differ");
  BraidWord out = a;
  out.syllables.insert(out.syllables.end(), b.syllables.begin(), b.syllables.end());
  return out;
}

bool OrientationTrace::caps_ok() const {
  return std::all_of(caps_valid.begin(), caps_valid.end(), [](bool b) { return b; });
}

OrientationTrace trace_orientations(const BraidWord &word,
                                    const std::vector<bool> &flips) {
  if (static_cast<int>(flips.size()) != word.pairs())
    throw Error(ErrorKind::InvalidArgument, "flip vector length must equal the cup count");
  OrientationTrace trace;
  trace.flips = flips;
  std::vector<Direction> dir;
  for (int i = 0; i < word.pairs(); ++i) {
    const bool f = flips[static_cast<std::size_t>(i)];
    dir.push_back(f ? Direction::Down : Direction::Up);
    dir.push_back(f ? Direction::Up : Direction::Down);
  }
  trace.bottom = dir;
  trace.annotated.strands = word.strands;
  trace.annotated.flips = flips;

  for (std::size_t k = 0; k < word.syllables.size(); ++k) {
    const Syllable &s = word.syllables[k];
    auto &left = dir[static_cast<std::size_t>(s.index - 1)];
    auto &right = dir[static_cast<std::size_t>(s.index)];
    const Orientation actual =
        left == right ? Orientation::Parallel : Orientation::Antiparallel;
    if (s.orientation != Orientation::Auto && s.orientation != actual && !trace.conflict)
      trace.conflict = static_cast<int>(k);
    if (actual == Orientation::Antiparallel && std::abs(s.power) > 1) {
      const int unit = s.power > 0 ? 1 : -1;
      for (int j = 0; j < std::abs(s.power); ++j)
        trace.annotated.syllables.push_back({s.index, unit, actual});
    } else {
      trace.annotated.syllables.push_back({s.index, s.power, actual});
    }
    if (s.power % 2 != 0)
      std::swap(left, right);
  }
  trace.top = dir;
  for (int i = 0; i < word.pairs(); ++i)
    trace.caps_valid.push_back(dir[2 * static_cast<std::size_t>(i)] !=
                               dir[2 * static_cast<std::size_t>(i) + 1]);
  return trace;
}

OrientationTrace propagate_orientations(const BraidWord &word,
                                        const std::vector<bool> &flips) {
  OrientationTrace trace = trace_orientations(word, flips);
  if (!trace.caps_ok())
    throw Error(ErrorKind::CapMismatch,
                "top caps have equal directions with flips=" + to_string(flips));
  if (trace.conflict)
    throw Error(ErrorKind::AnnotationConflict,
                "syllable " + std::to_string(*trace.conflict + 1) +
                    " contradicts the propagated orientation with flips=" +
                    to_string(flips));
  return trace;
}

std::vector<std::vector<bool>> consistent_flips(const BraidWord &word) {
  std::vector<std::vector<bool>> out;
  const int n = word.pairs();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<bool> flips(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      flips[static_cast<std::size_t>(i)] = (mask >> (n - 1 - i)) & 1u;
    if (trace_orientations(word, flips).ok())
      out.push_back(std::move(flips));
  }
  return out;
}

OrientationTrace orient(const BraidWord &word) {
  if (word.flips)
    return propagate_orientations(word, *word.flips);
  const std::vector<bool> defaults(static_cast<std::size_t>(word.pairs()), false);
  OrientationTrace first = trace_orientations(word, defaults);
  if (first.ok())
    return first;
  const auto candidates = consistent_flips(word);
  if (!candidates.empty())
    return trace_orientations(word, candidates.front());
  // no flip vector works; report the failure seen with the default cups
  return propagate_orientations(word, defaults);
}

BraidWord random_word(std::mt19937_64 &rng, const RandomWordSpec &spec) {
  if (spec.strands < 2 || spec.strands % 2 != 0 || spec.max_power < 1 ||
      spec.min_syllables > spec.max_syllables || spec.max_crossings < spec.min_syllables)
    throw Error(ErrorKind::InvalidArgument, "unusable random word specification");
  std::uniform_int_distribution<int> length(spec.min_syllables, spec.max_syllables);
  std::uniform_int_distribution<int> index(1, spec.strands - 1);
  std::uniform_int_distribution<int> magnitude(1, spec.max_power);
  std::bernoulli_distribution negative(0.5);
  for (;;) {
    BraidWord w{spec.strands, {}, std::nullopt};
    const int count = length(rng);
    for (int k = 0; k < count; ++k) {
      const int m = magnitude(rng);
      w.syllables.push_back({index(rng), negative(rng) ? -m : m, Orientation::Auto});
    }
    if (w.crossing_count() > spec.max_crossings)
      continue;
    const auto flips = consistent_flips(w);
    if (flips.empty())
      continue;
    w.flips = flips.front();
    return w;
  }
}

int writhe(const BraidWord &annotated) {
  int w = 0;
  for (const auto &s : annotated.syllables) {
    if (s.orientation == Orientation::Auto)
      throw Error(ErrorKind::UnannotatedSyllable, "writhe needs an annotated word");
    const int sign = s.orientation == Orientation::Parallel ? 1 : -1;
    w += sign * s.power;
  }
  return w;
}

} // namespace braidq
