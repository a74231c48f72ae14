#pragma once

// The bracket representation of the braid group B_2n on the span of the
// matching basis. Each generator matrix comes straight from the skein rule
//   <sigma_i^s T> = a^s <T> + a^-s <e_i T>,
// where e_i is the cap-cup smoothing and a closed circle contributes
// k = -a^2 - a^-2.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "platjones/braid.hpp"
#include "platjones/bracket_vector.hpp"
#include "platjones/errors.hpp"
#include "platjones/laurent.hpp"
#include "platjones/matchings.hpp"

namespace platjones {

/// Square matrix over Z[a, a^-1], row-major. Used for golden comparisons
/// and the braid-relation checks; never on the evaluation path.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Rows of entries in LaurentPoly text form, e.g. {{"a", "0"}, {"-a^-3", "a^-1"}}.
  static DenseMatrix parse(const std::vector<std::vector<std::string>>& rows) {
    DenseMatrix m(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != rows.size()) throw DimensionMismatch("matrix is not square");
      for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = parse_laurent(rows[r][c]);
    }
    return m;
  }

  std::size_t size() const noexcept { return n_; }
  LaurentPoly& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
  const LaurentPoly& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

  friend DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y) {
    if (x.n_ != y.n_) throw DimensionMismatch("matrix sizes differ");
    DenseMatrix z(x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t k = 0; k < x.n_; ++k) {
        const auto& xik = x(i, k);
        if (xik.is_zero()) continue;
        for (std::size_t j = 0; j < x.n_; ++j)
          if (!y(k, j).is_zero()) z(i, j) += xik * y(k, j);
      }
    return z;
  }

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < n_; ++r) {
      os << '[';
      for (std::size_t c = 0; c < n_; ++c) os << (c ? ", " : "") << (*this)(r, c);
      os << "]\n";
    }
    return os.str();
  }

 private:
  std::size_t n_ = 0;
  std::vector<LaurentPoly> entries_;
};

/// Sparse matrix of sigma_generator^sign: every column has at most two entries.
class GeneratorMatrix {
 public:
  struct Entry {
    std::size_t row;
    LaurentPoly value;
  };

  /// Builds the matrix on an explicit basis order.
  GeneratorMatrix(const MatchingBasis& basis, int generator, int sign)
      : strands_(basis.strands()), generator_(generator), sign_(sign) {
    if (generator < 1 || generator > strands_ - 1) throw GeneratorOutOfRange(generator, strands_);
    if (sign != 1 && sign != -1) throw std::invalid_argument("generator sign must be +1 or -1");
    const LaurentPoly keep = LaurentPoly::monomial(1, sign);
    const LaurentPoly smooth = LaurentPoly::monomial(1, -sign);
    columns_.resize(basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
      auto [next, closed] = apply_capcup(generator, basis[col]);
      auto& column = columns_[col];
      if (closed) {
        column.push_back(Entry{col, keep + smooth * loop_value()});
      } else {
        column.push_back(Entry{col, keep});
        column.push_back(Entry{basis.index_of(next), smooth});
        if (column[1].row < column[0].row) std::swap(column[0], column[1]);
      }
    }
  }

  int strands() const noexcept { return strands_; }
  int generator() const noexcept { return generator_; }
  int sign() const noexcept { return sign_; }
  std::size_t size() const noexcept { return columns_.size(); }
  const std::vector<Entry>& column(std::size_t c) const { return columns_[c]; }

  LaurentPoly entry(std::size_t row, std::size_t col) const {
    for (const auto& e : columns_.at(col))
      if (e.row == row) return e.value;
    return {};
  }

  DenseMatrix to_dense() const {
    DenseMatrix m(size());
    for (std::size_t c = 0; c < size(); ++c)
      for (const auto& e : columns_[c]) m(e.row, c) = e.value;
    return m;
  }

  std::string to_string() const { return to_dense().to_string(); }

 private:
  int strands_;
  int generator_;
  int sign_;
  std::vector<std::vector<Entry>> columns_;
};

/// Matrix of sigma_i^sign on `strands` strands in the canonical basis. Cached
/// per (strands, i, sign); the returned reference stays valid for the program
/// lifetime.
inline const GeneratorMatrix& generator_matrix(int strands, int i, int sign) {
  check_strands(strands);
  if (i < 1 || i > strands - 1) throw GeneratorOutOfRange(i, strands);
  if (sign != 1 && sign != -1) throw std::invalid_argument("generator sign must be +1 or -1");
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, std::unique_ptr<const GeneratorMatrix>> cache;
  const MatchingBasis& b = basis(strands);
  std::lock_guard lock(mutex);
  auto& slot = cache[{strands, i, sign}];
  if (!slot) slot = std::make_unique<const GeneratorMatrix>(b, i, sign);
  return *slot;
}

/// Sparse matrix-vector product, O(basis size) polynomial operations.
inline BracketVector apply(const GeneratorMatrix& mat, const BracketVector& v) {
  if (mat.strands() != v.strands || mat.size() != v.size())
    throw DimensionMismatch("generator matrix on " + std::to_string(mat.strands()) +
                            " strands applied to a vector on " + std::to_string(v.strands));
  BracketVector out{v.strands, std::vector<LaurentPoly>(v.size())};
  for (std::size_t col = 0; col < v.size(); ++col) {
    if (v[col].is_zero()) continue;
    for (const auto& e : mat.column(col)) out[e.row] += e.value * v[col];
  }
  return out;
}

/// Which end of the word sits next to the bottom caps.
enum class LetterOrder {
  /// B = M(l1) M(l2) ... M(lm) applied to e_cap: the last letter acts first.
  /// This is the convention that agrees with the tangle state sum.
  last_letter_first,
  /// M(lm) ... M(l1) e_cap. Kept only to demonstrate that it disagrees.
  first_letter_first,
};

/// Bracket vector of the tangle q_2n(w): start from the cap matching and fold
/// one sparse generator matrix per crossing.
inline BracketVector word_vector(const BraidWord& w,
                                 LetterOrder order = LetterOrder::last_letter_first) {
  const int strands = w.strands();
  BracketVector v = BracketVector::unit(strands, basis(strands).index_of_cap());
  auto step = [&](const Syllable& s) {
    const auto& mat = generator_matrix(strands, s.generator, s.exponent > 0 ? 1 : -1);
    for (int t = 0; t < std::abs(s.exponent); ++t) v = apply(mat, v);
  };
  const auto& syl = w.syllables();
  if (order == LetterOrder::last_letter_first) {
    std::for_each(syl.rbegin(), syl.rend(), step);
  } else {
    std::for_each(syl.begin(), syl.end(), step);
  }
  return v;
}

/// Dense product M(l1) ... M(lm) for a word. Test-only path.
inline DenseMatrix word_matrix_dense(const BraidWord& w) {
  DenseMatrix m = DenseMatrix::identity(basis(w.strands()).size());
  for (const auto& s : w.syllables()) {
    const DenseMatrix g = generator_matrix(w.strands(), s.generator, s.exponent > 0 ? 1 : -1).to_dense();
    for (int t = 0; t < std::abs(s.exponent); ++t) m = m * g;
  }
  return m;
}

/// A published generator matrix, given in some unknown labeling of the basis.
struct ReferenceMatrix {
  int generator;
  int sign;
  DenseMatrix matrix;
};

/// Finds every ordering of the matchings on `strands` points under which the
/// generated matrices equal all of `refs`. `pins` fixes basis positions in
/// advance (position -> matching). Brute force over the unpinned positions.
inline std::vector<std::vector<PlanarMatching>> align_basis(
    int strands, const std::vector<ReferenceMatrix>& refs,
    const std::vector<std::pair<std::size_t, PlanarMatching>>& pins = {}) {
  const std::vector<PlanarMatching> all = enumerate_lex(strands);
  const std::size_t n = all.size();
  std::vector<std::optional<PlanarMatching>> slot(n);
  std::vector<PlanarMatching> free;
  for (const auto& [pos, m] : pins) slot.at(pos) = m;
  for (const auto& m : all) {
    const bool pinned = std::any_of(pins.begin(), pins.end(), [&](const auto& p) { return p.second == m; });
    if (!pinned) free.push_back(m);
  }
  std::sort(free.begin(), free.end());
  std::vector<std::vector<PlanarMatching>> found;
  do {
    std::vector<PlanarMatching> order;
    order.reserve(n);
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i) order.push_back(slot[i] ? *slot[i] : free[next++]);
    const MatchingBasis candidate(strands, order);
    const bool ok = std::all_of(refs.begin(), refs.end(), [&](const ReferenceMatrix& r) {
      return GeneratorMatrix(candidate, r.generator, r.sign).to_dense() == r.matrix;
    });
    if (ok) found.push_back(std::move(order));
  } while (std::next_permutation(free.begin(), free.end()));
  return found;
}

}  // namespace platjones
