#pragma once

// Writhe of a plat closure from permutation data alone. Orbits of the top
// endpoints under "down the braid, across a bottom cap, up the braid" give
// the orientation of every top cap; the writhe is then a signed sum over
// syllables.

#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "platjones/braid.hpp"
#include "platjones/errors.hpp"

namespace platjones {

/// R: positions (1 2)(3 4)...(2n-1 2n) swapped.
inline Permutation cap_permutation(int strands) {
  check_strands(strands);
  Permutation r = Permutation::identity(strands);
  for (int i = 1; i < strands; i += 2) r.swap_positions(i);
  return r;
}

struct OrbitData {
  /// o[j-1] = o_j = u (P(w) R P(w^r) R)^{j-1} P(w) R P(w^r), j = 1..n.
  std::vector<Permutation> o;
  /// o_prime[j] = o'_j = u (P(w) R P(w^r) R)^j, j = 0..n.
  std::vector<Permutation> o_prime;
};

inline OrbitData orbits(const BraidWord& w) {
  const int n = w.bridges();
  const Permutation r = cap_permutation(w.strands());
  const Permutation down_up = perm_of_word(w) * r * perm_of_word(reverse(w));
  OrbitData d;
  d.o_prime.push_back(Permutation::identity(w.strands()));
  for (int j = 1; j <= n; ++j) {
    d.o.push_back(d.o_prime.back() * down_up);
    d.o_prime.push_back(d.o.back() * r);
  }
  return d;
}

/// Components of the plat closure, from the cycle structure of o'_1: each
/// component contributes two cycles, one per direction of travel.
inline int orbit_component_count(const BraidWord& w) {
  const Permutation loop = orbits(w).o_prime.at(1);
  std::vector<bool> seen(static_cast<std::size_t>(loop.size()) + 1, false);
  int cycles = 0;
  for (int start = 1; start <= loop.size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++cycles;
    for (int p = start; !seen[static_cast<std::size_t>(p)]; p = loop(p)) seen[static_cast<std::size_t>(p)] = true;
  }
  return cycles / 2;
}

/// True iff o'_0(1), ..., o'_{n-1}(1) are pairwise distinct.
inline bool is_knot(const BraidWord& w) {
  const OrbitData d = orbits(w);
  std::vector<bool> seen(static_cast<std::size_t>(w.strands()) + 1, false);
  for (int j = 0; j < w.bridges(); ++j) {
    const int p = d.o_prime[static_cast<std::size_t>(j)](1);
    if (seen[static_cast<std::size_t>(p)]) return false;
    seen[static_cast<std::size_t>(p)] = true;
  }
  return true;
}

/// r(p) = 1 if the knot runs up at top endpoint p, 2 if it runs down.
struct OrientationVector {
  std::vector<int> entries;

  int operator()(int p) const { return entries[static_cast<std::size_t>(p - 1)]; }
  friend bool operator==(const OrientationVector&, const OrientationVector&) = default;
};

/// Orients every top cap from the seed: the cap on {1, 2} runs from 1 to 2.
inline OrientationVector orientation(const BraidWord& w) {
  if (!is_knot(w)) throw IsLinkError(orbit_component_count(w));
  const OrbitData d = orbits(w);
  std::vector<int> r(static_cast<std::size_t>(w.strands()), 0);
  r[0] = 1;
  r[1] = 2;
  for (const auto& oi : d.o) {
    const int x = oi(1);
    const int k = (x + 1) / 2;
    // The cap ends at x; it starts at the other endpoint.
    const int start = x % 2 == 0 ? 2 * k - 1 : 2 * k;
    if (k == 1 && x != 2)
      throw std::logic_error("orbit assigns the seed cap the opposite orientation");
    r[static_cast<std::size_t>(start - 1)] = 1;
    r[static_cast<std::size_t>(x - 1)] = 2;
  }
  for (int v : r)
    if (v == 0) throw std::logic_error("orbit missed a top cap");
  return OrientationVector{std::move(r)};
}

/// w(K) = sum_i (-1)^{v(i)} eps_i, where v(i) = 0 iff the two strands entering
/// syllable i carry the same orientation label.
inline int writhe(const BraidWord& w) {
  std::vector<int> r = orientation(w).entries;
  int total = 0;
  for (const auto& s : w.syllables()) {
    const auto i = static_cast<std::size_t>(s.generator - 1);
    total += r[i] == r[i + 1] ? s.exponent : -s.exponent;
    if (std::abs(s.exponent) % 2 == 1) std::swap(r[i], r[i + 1]);
  }
  return total;
}

}  // namespace platjones
