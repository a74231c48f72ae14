#pragma once

#include <cstddef>
#include <vector>

#include "platjones/laurent.hpp"
#include "platjones/matchings.hpp"

namespace platjones {

/// Coefficients of a tangle's bracket in the canonical matching basis.
struct BracketVector {
  int strands = 2;
  std::vector<LaurentPoly> coeffs;

  friend bool operator==(const BracketVector&, const BracketVector&) = default;

  std::size_t size() const noexcept { return coeffs.size(); }
  const LaurentPoly& operator[](std::size_t i) const { return coeffs[i]; }
  LaurentPoly& operator[](std::size_t i) { return coeffs[i]; }

  /// The vector with a single 1 at `index`.
  static BracketVector unit(int strands, std::size_t index) {
    BracketVector v{strands, std::vector<LaurentPoly>(basis(strands).size())};
    v.coeffs.at(index) = 1;
    return v;
  }

  BracketVector mirror() const {
    BracketVector v{strands, {}};
    v.coeffs.reserve(coeffs.size());
    for (const auto& c : coeffs) v.coeffs.push_back(c.mirror());
    return v;
  }
};

}  // namespace platjones
