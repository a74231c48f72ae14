#pragma once

// Non-crossing perfect matchings of 2n boundary points (the trivial rational
// n-tangles) and the operations the bracket representation needs on them.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "platjones/braid.hpp"
#include "platjones/errors.hpp"

namespace platjones {

class PlanarMatching {
 public:
  PlanarMatching() = default;

  /// Validates that the pairs form a non-crossing perfect matching of
  /// {1, ..., strands}.
  static PlanarMatching from_pairs(int strands, const std::vector<std::pair<int, int>>& pairs) {
    check_strands(strands);
    std::vector<int> partner(static_cast<std::size_t>(strands), 0);
    for (auto [p, q] : pairs) {
      if (p < 1 || q < 1 || p > strands || q > strands || p == q)
        throw std::invalid_argument("matching pair out of range");
      if (partner[static_cast<std::size_t>(p - 1)] != 0 ||
          partner[static_cast<std::size_t>(q - 1)] != 0)
        throw std::invalid_argument("point matched twice");
      partner[static_cast<std::size_t>(p - 1)] = q;
      partner[static_cast<std::size_t>(q - 1)] = p;
    }
    for (int v : partner)
      if (v == 0) throw std::invalid_argument("matching is not perfect");
    PlanarMatching m(std::move(partner));
    if (!m.is_noncrossing()) throw std::invalid_argument("matching has crossing pairs");
    return m;
  }

  /// {1,2}, {3,4}, ..., {2n-1,2n}: the plat closure arcs.
  static PlanarMatching caps(int strands) {
    check_strands(strands);
    std::vector<int> partner(static_cast<std::size_t>(strands));
    for (int p = 1; p <= strands; ++p) partner[static_cast<std::size_t>(p - 1)] = p % 2 ? p + 1 : p - 1;
    return PlanarMatching(std::move(partner));
  }

  int strands() const noexcept { return static_cast<int>(partner_.size()); }
  int partner(int p) const { return partner_[static_cast<std::size_t>(p - 1)]; }
  const std::vector<int>& partners() const noexcept { return partner_; }

  /// Pairs (p, q) with p < q, sorted by p.
  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int p = 1; p <= strands(); ++p)
      if (partner(p) > p) out.emplace_back(p, partner(p));
    return out;
  }

  bool is_noncrossing() const {
    const auto ps = pairs();
    for (const auto& [p, q] : ps)
      for (const auto& [r, s] : ps)
        if (p < r && r < q && q < s) return false;
    return true;
  }

  std::string to_string() const {
    std::string out;
    for (auto [p, q] : pairs()) out += "(" + std::to_string(p) + " " + std::to_string(q) + ")";
    return out;
  }

  friend bool operator==(const PlanarMatching&, const PlanarMatching&) = default;

  /// Lexicographic on the sorted pair list.
  friend bool operator<(const PlanarMatching& l, const PlanarMatching& r) {
    return l.pairs() < r.pairs();
  }

  friend std::ostream& operator<<(std::ostream& os, const PlanarMatching& m) {
    return os << m.to_string();
  }

 private:
  friend std::pair<PlanarMatching, bool> apply_capcup(int i, const PlanarMatching& m);

  explicit PlanarMatching(std::vector<int> partner) : partner_(std::move(partner)) {}

  std::vector<int> partner_;  // partner_[p-1] = q
};

/// Number of non-crossing perfect matchings of two_n points, by the
/// first-point recursion psi(2k) = sum_i psi(2i-2) psi(2k-2i), psi(0) = 1.
inline std::uint64_t psi(int two_n) {
  if (two_n < 0 || two_n % 2 != 0) throw std::invalid_argument("psi needs an even argument >= 0");
  const int n = two_n / 2;
  std::vector<std::uint64_t> table(static_cast<std::size_t>(n) + 1, 0);
  table[0] = 1;
  for (int k = 1; k <= n; ++k) {
    std::uint64_t sum = 0;
    for (int i = 1; i <= k; ++i) {
      std::uint64_t term = 0;
      if (__builtin_mul_overflow(table[static_cast<std::size_t>(i - 1)],
                                 table[static_cast<std::size_t>(k - i)], &term) ||
          __builtin_add_overflow(sum, term, &sum))
        throw std::overflow_error("psi(" + std::to_string(two_n) + ") overflows 64 bits");
    }
    table[static_cast<std::size_t>(k)] = sum;
  }
  return table[static_cast<std::size_t>(n)];
}

namespace detail {

// Matches points [lo, hi] among themselves, appending every completion.
inline void enumerate_range(std::vector<int>& partner, int lo, int hi,
                            const std::function<void()>& emit) {
  if (lo > hi) {
    emit();
    return;
  }
  for (int q = lo + 1; q <= hi; q += 2) {
    partner[static_cast<std::size_t>(lo - 1)] = q;
    partner[static_cast<std::size_t>(q - 1)] = lo;
    enumerate_range(partner, lo + 1, q - 1, [&] { enumerate_range(partner, q + 1, hi, emit); });
  }
}

}  // namespace detail

/// All non-crossing perfect matchings of 1..two_n in lexicographic order.
inline std::vector<PlanarMatching> enumerate_lex(int two_n) {
  check_strands(two_n);
  std::vector<std::vector<std::pair<int, int>>> all;
  std::vector<int> partner(static_cast<std::size_t>(two_n), 0);
  detail::enumerate_range(partner, 1, two_n, [&] {
    std::vector<std::pair<int, int>> ps;
    for (int p = 1; p <= two_n; ++p)
      if (partner[static_cast<std::size_t>(p - 1)] > p) ps.emplace_back(p, partner[static_cast<std::size_t>(p - 1)]);
    all.push_back(std::move(ps));
  });
  std::sort(all.begin(), all.end());
  std::vector<PlanarMatching> out;
  out.reserve(all.size());
  for (const auto& ps : all) out.push_back(PlanarMatching::from_pairs(two_n, ps));
  return out;
}

/// Labeled trivial tangles for 4 and 6 points as used by the published 2x2
/// and 5x5 matrices. Recovered by `align_basis` in tlrep.hpp; pinned there by a
/// test that reruns the search.
inline std::vector<PlanarMatching> reference_order(int two_n) {
  if (two_n == 4)
    return {PlanarMatching::from_pairs(4, {{1, 4}, {2, 3}}),   // tangle 0
            PlanarMatching::from_pairs(4, {{1, 2}, {3, 4}})};  // tangle infinity
  if (two_n == 6)
    return {PlanarMatching::from_pairs(6, {{1, 6}, {2, 3}, {4, 5}}),
            PlanarMatching::from_pairs(6, {{1, 4}, {2, 3}, {5, 6}}),
            PlanarMatching::from_pairs(6, {{1, 2}, {3, 4}, {5, 6}}),
            PlanarMatching::from_pairs(6, {{1, 6}, {2, 5}, {3, 4}}),
            PlanarMatching::from_pairs(6, {{1, 2}, {3, 6}, {4, 5}})};
  return enumerate_lex(two_n);
}

/// An indexed basis of all matchings on 2n points.
class MatchingBasis {
 public:
  MatchingBasis(int strands, std::vector<PlanarMatching> order)
      : strands_(strands), order_(std::move(order)) {
    for (std::size_t i = 0; i < order_.size(); ++i) {
      if (order_[i].strands() != strands) throw DimensionMismatch("matching strand count");
      if (!index_.emplace(order_[i].partners(), i).second)
        throw std::invalid_argument("duplicate matching in basis");
    }
    index_of_cap_ = index_of(PlanarMatching::caps(strands));
  }

  int strands() const noexcept { return strands_; }
  std::size_t size() const noexcept { return order_.size(); }
  const std::vector<PlanarMatching>& order() const noexcept { return order_; }
  const PlanarMatching& operator[](std::size_t i) const { return order_[i]; }
  std::size_t index_of_cap() const noexcept { return index_of_cap_; }

  std::size_t index_of(const PlanarMatching& m) const {
    auto it = index_.find(m.partners());
    if (it == index_.end()) throw std::out_of_range("matching not in basis: " + m.to_string());
    return it->second;
  }

 private:
  int strands_;
  std::vector<PlanarMatching> order_;
  std::map<std::vector<int>, std::size_t> index_;
  std::size_t index_of_cap_ = 0;
};

/// Canonical basis for 2n points: the published labeling for 2n = 4, 6 and
/// lexicographic order otherwise. Cached; safe to call concurrently.
inline const MatchingBasis& basis(int two_n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const MatchingBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[two_n];
  if (!slot) slot = std::make_unique<const MatchingBasis>(two_n, reference_order(two_n));
  return *slot;
}

/// All matchings on two_n points in canonical order; same as `basis`.
inline const MatchingBasis& enumerate(int two_n) { return basis(two_n); }

/// Number of circles formed by gluing `m` to `caps` along the boundary points.
inline int close_with(const PlanarMatching& m, const PlanarMatching& caps) {
  if (m.strands() != caps.strands()) throw DimensionMismatch("matchings on different point sets");
  std::vector<bool> seen(static_cast<std::size_t>(m.strands()) + 1, false);
  int circles = 0;
  for (int start = 1; start <= m.strands(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++circles;
    int p = start;
    do {
      seen[static_cast<std::size_t>(p)] = true;
      const int q = m.partner(p);
      seen[static_cast<std::size_t>(q)] = true;
      p = caps.partner(q);
    } while (p != start);
  }
  return circles;
}

/// Cap-cup smoothing at positions i, i+1 placed on top of `m`. Returns the
/// new matching, and true when {i, i+1} was already a pair (a circle closes
/// and the matching is unchanged).
inline std::pair<PlanarMatching, bool> apply_capcup(int i, const PlanarMatching& m) {
  if (i < 1 || i > m.strands() - 1) throw GeneratorOutOfRange(i, m.strands());
  if (m.partner(i) == i + 1) return {m, true};
  std::vector<int> partner = m.partner_;
  const int p = m.partner(i);
  const int q = m.partner(i + 1);
  partner[static_cast<std::size_t>(p - 1)] = q;
  partner[static_cast<std::size_t>(q - 1)] = p;
  partner[static_cast<std::size_t>(i - 1)] = i + 1;
  partner[static_cast<std::size_t>(i)] = i;
  return {PlanarMatching(std::move(partner)), false};
}

}  // namespace platjones
