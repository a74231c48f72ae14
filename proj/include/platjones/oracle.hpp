#pragma once

// Brute-force reference evaluator. Builds the explicit plat diagram of a word
// and expands every crossing by the skein axioms (2^c states), traces
// components by walking arcs, and computes the writhe from the geometric
// crossing signs. Shares no code with tlrep.hpp or writhe.hpp.
//
// Geometry: crossing number l sits between levels l and l+1; level 0 is the
// top of the braid, positions run 1..2n left to right. For sigma_i^{+1} the
// over-strand runs from (l, i+1) to (l+1, i). The crossing index is the sign
// of cross(over direction, under direction) in the plane (x right, y up).

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "platjones/braid.hpp"
#include "platjones/bracket_vector.hpp"
#include "platjones/errors.hpp"
#include "platjones/laurent.hpp"
#include "platjones/matchings.hpp"

namespace platjones::oracle {

inline constexpr int kDefaultCrossingLimit = 22;

struct Crossing {
  int position;  // strands position and position+1
  int sign;      // +1 or -1
};

struct PlatDiagram {
  int strands = 2;
  std::vector<Crossing> crossings;

  static PlatDiagram from_word(const BraidWord& w) {
    PlatDiagram d{w.strands(), {}};
    for (const auto& s : w.syllables())
      for (int t = 0; t < std::abs(s.exponent); ++t)
        d.crossings.push_back(Crossing{s.generator, s.exponent > 0 ? 1 : -1});
    return d;
  }

  int crossing_count() const { return static_cast<int>(crossings.size()); }
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }

  void unite(int x, int y) { parent[static_cast<std::size_t>(find(x))] = find(y); }
};

// Node (level, position) of the diagram.
inline int node(const PlatDiagram& d, int level, int position) {
  return level * d.strands + (position - 1);
}

inline std::size_t node_count(const PlatDiagram& d) {
  return static_cast<std::size_t>((d.crossing_count() + 1) * d.strands);
}

// Everything except the crossing bands' involved strands: pass-through
// segments, bottom caps, and (optionally) top caps.
inline UnionFind skeleton(const PlatDiagram& d, bool top_caps) {
  UnionFind uf(node_count(d));
  const int c = d.crossing_count();
  for (int l = 0; l < c; ++l) {
    const int i = d.crossings[static_cast<std::size_t>(l)].position;
    for (int p = 1; p <= d.strands; ++p)
      if (p != i && p != i + 1) uf.unite(node(d, l, p), node(d, l + 1, p));
  }
  for (int p = 1; p < d.strands; p += 2) {
    uf.unite(node(d, c, p), node(d, c, p + 1));
    if (top_caps) uf.unite(node(d, 0, p), node(d, 0, p + 1));
  }
  return uf;
}

// Applies smoothing choices: bit l set means crossing l takes the horizontal
// (cap-cup) smoothing. Returns the exponent of a contributed by the state.
inline int smooth(const PlatDiagram& d, std::uint64_t mask, UnionFind& uf) {
  int exponent = 0;
  for (int l = 0; l < d.crossing_count(); ++l) {
    const auto& x = d.crossings[static_cast<std::size_t>(l)];
    const int i = x.position;
    if (mask >> l & 1U) {
      uf.unite(node(d, l, i), node(d, l, i + 1));
      uf.unite(node(d, l + 1, i), node(d, l + 1, i + 1));
      exponent -= x.sign;
    } else {
      uf.unite(node(d, l, i), node(d, l + 1, i));
      uf.unite(node(d, l, i + 1), node(d, l + 1, i + 1));
      exponent += x.sign;
    }
  }
  return exponent;
}

inline void check_limit(const PlatDiagram& d, int limit) {
  if (d.crossing_count() > limit || d.crossing_count() > 62)
    throw TooManyCrossings(d.crossing_count(), limit);
}

inline LaurentPoly collect(const std::map<std::pair<int, int>, std::int64_t>& counts) {
  // counts[(exponent of a, power of k)] = number of states
  LaurentPoly total;
  const LaurentPoly k = loop_value();
  std::map<int, LaurentPoly> k_powers;
  for (const auto& [key, n] : counts) {
    auto [e, kp] = key;
    auto it = k_powers.find(kp);
    if (it == k_powers.end()) it = k_powers.emplace(kp, power(k, kp)).first;
    total += it->second.scaled(Integer(n), e);
  }
  return total;
}

}  // namespace detail

/// <K> of the plat closure: sum over all 2^c states of a^(#A - #B) k^(circles - 1).
inline LaurentPoly state_sum_bracket(const PlatDiagram& d, int limit = kDefaultCrossingLimit) {
  detail::check_limit(d, limit);
  const detail::UnionFind base = detail::skeleton(d, true);
  std::map<std::pair<int, int>, std::int64_t> counts;
  const std::uint64_t states = std::uint64_t{1} << d.crossing_count();
  const int nodes = static_cast<int>(detail::node_count(d));
  for (std::uint64_t mask = 0; mask < states; ++mask) {
    detail::UnionFind uf = base;
    const int e = detail::smooth(d, mask, uf);
    int circles = 0;
    for (int v = 0; v < nodes; ++v)
      if (uf.find(v) == v) ++circles;
    ++counts[{e, circles - 1}];
  }
  return detail::collect(counts);
}

/// Bracket vector of the open tangle (bottom caps only, top endpoints free)
/// in the canonical matching basis.
inline BracketVector state_sum_tangle(const PlatDiagram& d, int limit = kDefaultCrossingLimit) {
  detail::check_limit(d, limit);
  const MatchingBasis& b = basis(d.strands);
  const detail::UnionFind base = detail::skeleton(d, false);
  std::vector<std::map<std::pair<int, int>, std::int64_t>> counts(b.size());
  const std::uint64_t states = std::uint64_t{1} << d.crossing_count();
  const int nodes = static_cast<int>(detail::node_count(d));
  for (std::uint64_t mask = 0; mask < states; ++mask) {
    detail::UnionFind uf = base;
    const int e = detail::smooth(d, mask, uf);
    std::map<int, int> first_top;  // root -> first top endpoint seen on it
    std::vector<std::pair<int, int>> pairs;
    for (int p = 1; p <= d.strands; ++p) {
      const int root = uf.find(detail::node(d, 0, p));
      auto [it, fresh] = first_top.emplace(root, p);
      if (!fresh) pairs.emplace_back(it->second, p);
    }
    int circles = 0;
    for (int v = 0; v < nodes; ++v)
      if (uf.find(v) == v && !first_top.contains(v)) ++circles;
    const std::size_t idx = b.index_of(PlanarMatching::from_pairs(d.strands, pairs));
    ++counts[idx][{e, circles}];
  }
  BracketVector v{d.strands, {}};
  v.coeffs.reserve(b.size());
  for (const auto& c : counts) v.coeffs.push_back(detail::collect(c));
  return v;
}

/// Number of closed curves in the plat closure, following strands through
/// crossings.
inline int component_count(const PlatDiagram& d) {
  detail::UnionFind uf = detail::skeleton(d, true);
  for (int l = 0; l < d.crossing_count(); ++l) {
    const int i = d.crossings[static_cast<std::size_t>(l)].position;
    uf.unite(detail::node(d, l, i), detail::node(d, l + 1, i + 1));
    uf.unite(detail::node(d, l, i + 1), detail::node(d, l + 1, i));
  }
  int count = 0;
  const int nodes = static_cast<int>(detail::node_count(d));
  for (int v = 0; v < nodes; ++v)
    if (uf.find(v) == v) ++count;
  return count;
}

/// Writhe of the single-component closure, oriented so the knot leaves the
/// top cap {1, 2} downward at position 2.
inline int trace_writhe(const PlatDiagram& d) {
  const int components = component_count(d);
  if (components != 1) throw IsLinkError(components);

  struct Dir {
    int dx = 0;
    int dy = 0;
  };
  // Per crossing: direction of travel along the strand joining (l, i) to
  // (l+1, i+1) ("falling right") and along the one joining (l, i+1) to (l+1, i).
  std::vector<Dir> falling_right(d.crossings.size());
  std::vector<Dir> falling_left(d.crossings.size());

  const int c = d.crossing_count();
  auto cap_partner = [](int p) { return p % 2 ? p + 1 : p - 1; };
  int level = 0;
  int pos = 2;
  bool down = true;
  do {
    if (down) {
      if (level == c) {
        pos = cap_partner(pos);
        down = false;
        continue;
      }
      const auto l = static_cast<std::size_t>(level);
      const int i = d.crossings[l].position;
      if (pos == i) {
        falling_right[l] = {+1, -1};
        pos = i + 1;
      } else if (pos == i + 1) {
        falling_left[l] = {-1, -1};
        pos = i;
      }
      ++level;
    } else {
      if (level == 0) {
        pos = cap_partner(pos);
        down = true;
        continue;
      }
      const auto l = static_cast<std::size_t>(level - 1);
      const int i = d.crossings[l].position;
      if (pos == i + 1) {
        falling_right[l] = {-1, +1};
        pos = i;
      } else if (pos == i) {
        falling_left[l] = {+1, +1};
        pos = i + 1;
      }
      --level;
    }
  } while (!(level == 0 && pos == 2 && down));

  int total = 0;
  for (std::size_t l = 0; l < d.crossings.size(); ++l) {
    const bool positive = d.crossings[l].sign > 0;
    const Dir over = positive ? falling_left[l] : falling_right[l];
    const Dir under = positive ? falling_right[l] : falling_left[l];
    const int cross = over.dx * under.dy - over.dy * under.dx;
    total += cross > 0 ? 1 : -1;
  }
  return total;
}

}  // namespace platjones::oracle
