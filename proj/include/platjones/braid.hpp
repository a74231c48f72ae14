#pragma once

// Braid words on 2n strands and the strand permutation they induce.

#include <cctype>
#include <cstddef>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "platjones/errors.hpp"

namespace platjones {

/// sigma_generator^exponent.
struct Syllable {
  int generator = 1;
  int exponent = 1;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

inline void check_strands(int strands) {
  if (strands < 2 || strands % 2 != 0) throw InvalidStrandCount(strands);
}

/// A braid word in syllable form: adjacent syllables always have different
/// generators and no exponent is zero. Construction normalizes.
class BraidWord {
 public:
  BraidWord() : BraidWord(2, {}) {}

  BraidWord(int strands, std::vector<Syllable> syllables) : strands_(strands) {
    check_strands(strands);
    for (const auto& s : syllables) {
      if (s.generator < 1 || s.generator > strands - 1)
        throw GeneratorOutOfRange(s.generator, strands);
      push(s);
    }
  }

  int strands() const noexcept { return strands_; }
  /// n, the number of bridges / caps.
  int bridges() const noexcept { return strands_ / 2; }
  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  bool empty() const noexcept { return syllables_.empty(); }

  /// Number of crossings, the sum of |exponent|.
  int crossing_count() const {
    int c = 0;
    for (const auto& s : syllables_) c += std::abs(s.exponent);
    return c;
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

  /// Concatenation; the strand counts must agree.
  friend BraidWord operator*(const BraidWord& u, const BraidWord& v) {
    if (u.strands_ != v.strands_)
      throw DimensionMismatch("cannot concatenate words on different strand counts");
    BraidWord r = u;
    for (const auto& s : v.syllables_) r.push(s);
    return r;
  }

 private:
  void push(const Syllable& s) {
    if (s.exponent == 0) return;
    if (!syllables_.empty() && syllables_.back().generator == s.generator) {
      syllables_.back().exponent += s.exponent;
      if (syllables_.back().exponent == 0) syllables_.pop_back();
    } else {
      syllables_.push_back(s);
    }
  }

  int strands_;
  std::vector<Syllable> syllables_;
};

/// Parses `s<k>^<e>` tokens separated by whitespace. `σ` is accepted for `s`;
/// a missing exponent means 1.
inline BraidWord parse_braid(std::string_view text, int strands) {
  check_strands(strands);
  static constexpr std::string_view kSigma = "\xCF\x83";
  std::vector<Syllable> syllables;
  std::size_t pos = 0;
  auto is_space = [&](std::size_t p) {
    return p < text.size() && std::isspace(static_cast<unsigned char>(text[p]));
  };
  auto is_digit = [&](std::size_t p) {
    return p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]));
  };
  auto read_int = [&](bool allow_sign) {
    const std::size_t start = pos;
    bool negative = false;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      negative = text[pos] == '-';
      ++pos;
    }
    if (!is_digit(pos)) throw SyntaxError("expected integer", pos);
    long value = 0;
    while (is_digit(pos)) {
      value = value * 10 + (text[pos++] - '0');
      if (value > 1'000'000'000L) throw SyntaxError("integer too large", start);
    }
    return static_cast<int>(negative ? -value : value);
  };

  while (true) {
    while (is_space(pos)) ++pos;
    if (pos >= text.size()) break;
    if (text[pos] == 's') {
      ++pos;
    } else if (text.substr(pos, kSigma.size()) == kSigma) {
      pos += kSigma.size();
    } else {
      throw SyntaxError("expected 's' to start a syllable", pos);
    }
    Syllable s;
    s.generator = read_int(false);
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      s.exponent = read_int(true);
    }
    if (pos < text.size() && !is_space(pos))
      throw SyntaxError("unexpected character after syllable", pos);
    if (s.generator < 1 || s.generator > strands - 1)
      throw GeneratorOutOfRange(s.generator, strands);
    syllables.push_back(s);
  }
  return BraidWord(strands, std::move(syllables));
}

/// Inverse of parse_braid on normalized words.
inline std::string render(const BraidWord& w) {
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(s.generator);
    if (s.exponent != 1) out += '^' + std::to_string(s.exponent);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const BraidWord& w) {
  return os << render(w);
}

/// Letters in reverse order, exponents unchanged.
inline BraidWord reverse(const BraidWord& w) {
  std::vector<Syllable> s(w.syllables().rbegin(), w.syllables().rend());
  return BraidWord(w.strands(), std::move(s));
}

/// Group inverse: reverse order and negate every exponent.
inline BraidWord inverse(const BraidWord& w) {
  std::vector<Syllable> s;
  s.reserve(w.syllables().size());
  for (auto it = w.syllables().rbegin(); it != w.syllables().rend(); ++it)
    s.push_back(Syllable{it->generator, -it->exponent});
  return BraidWord(w.strands(), std::move(s));
}

/// Mirror image: every crossing switched, order kept. Equals reverse(inverse(w)).
inline BraidWord mirror(const BraidWord& w) {
  std::vector<Syllable> s;
  s.reserve(w.syllables().size());
  for (const auto& x : w.syllables()) s.push_back(Syllable{x.generator, -x.exponent});
  return BraidWord(w.strands(), std::move(s));
}

/// A permutation of {1..2n} in the row-vector convention: `images` is the
/// row vector [1, ..., 2n] multiplied on the right by the permutation matrix.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
      if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("not a permutation");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  static Permutation identity(int size) {
    std::vector<int> im(static_cast<std::size_t>(size));
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im), Unchecked{});
  }

  int size() const noexcept { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const noexcept { return images_; }

  /// Entry at 1-based position p.
  int operator()(int p) const { return images_[static_cast<std::size_t>(p - 1)]; }

  /// Row vector times this permutation matrix: result[p] = v[images[p]].
  template <typename T>
  std::vector<T> act(const std::vector<T>& v) const {
    std::vector<T> out;
    out.reserve(v.size());
    for (int im : images_) out.push_back(v[static_cast<std::size_t>(im - 1)]);
    return out;
  }

  /// Matrix product P * Q (apply P first to a row vector, then Q).
  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw DimensionMismatch("permutation sizes differ");
    return Permutation(q.act(p.images_), Unchecked{});
  }

  /// Swaps the entries at positions i and i+1 (right multiplication by a
  /// transposition matrix).
  void swap_positions(int i) {
    std::swap(images_[static_cast<std::size_t>(i - 1)], images_[static_cast<std::size_t>(i)]);
  }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t p = 0; p < images_.size(); ++p)
      inv[static_cast<std::size_t>(images_[p] - 1)] = static_cast<int>(p) + 1;
    return Permutation(std::move(inv), Unchecked{});
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> images, Unchecked) : images_(std::move(images)) {}

  std::vector<int> images_;
};

/// The permutation of sigma_i^{+-1}: rows i and i+1 of the identity swapped.
inline Permutation perm_of_generator(int i, int strands) {
  check_strands(strands);
  if (i < 1 || i > strands - 1) throw GeneratorOutOfRange(i, strands);
  Permutation p = Permutation::identity(strands);
  p.swap_positions(i);
  return p;
}

/// The permutation homomorphism extended to words; exponent signs are ignored.
inline Permutation perm_of_word(const BraidWord& w) {
  Permutation p = Permutation::identity(w.strands());
  for (const auto& s : w.syllables())
    if (std::abs(s.exponent) % 2 == 1) p.swap_positions(s.generator);
  return p;
}

}  // namespace platjones
