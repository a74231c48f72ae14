#pragma once

// Plat-closure invariants: <K>, writhe, X_K(a) = (-a^-3)^w <K>, and V_K(t).

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "platjones/braid.hpp"
#include "platjones/bracket_vector.hpp"
#include "platjones/errors.hpp"
#include "platjones/laurent.hpp"
#include "platjones/matchings.hpp"
#include "platjones/oracle.hpp"
#include "platjones/tlrep.hpp"
#include "platjones/writhe.hpp"

namespace platjones {

/// The right-handed trefoil s2^3 on 4 strands gets t + t^3 - t^4 under t = a^-4.
inline constexpr JonesConvention kDefaultJonesConvention = JonesConvention::t_eq_a_minus4;

/// Matrix route (sparse representation + orbit writhe) or brute-force oracle.
enum class Engine { matrix, oracle };

/// <closure> = sum_i v_i k^(circles(basis_i, caps) - 1).
inline LaurentPoly closure_bracket(const BracketVector& v) {
  const MatchingBasis& b = basis(v.strands);
  if (v.size() != b.size()) throw DimensionMismatch("bracket vector length does not match basis");
  const PlanarMatching caps = PlanarMatching::caps(v.strands);
  std::vector<LaurentPoly> k_powers{1};
  LaurentPoly total;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    const auto e = static_cast<std::size_t>(close_with(b[i], caps) - 1);
    while (k_powers.size() <= e) k_powers.push_back(k_powers.back() * loop_value());
    total += v[i] * k_powers[e];
  }
  return total;
}

struct PlatInvariants {
  BracketVector bracket_vector;
  LaurentPoly bracket;
  int writhe = 0;
  LaurentPoly kauffman_x;
  JonesPoly jones;
  JonesConvention convention = kDefaultJonesConvention;

  friend bool operator==(const PlatInvariants&, const PlatInvariants&) = default;
};

namespace detail {

inline PlatInvariants assemble(BracketVector v, LaurentPoly bracket, int writhe,
                               JonesConvention convention) {
  PlatInvariants inv;
  inv.bracket_vector = std::move(v);
  inv.bracket = std::move(bracket);
  inv.writhe = writhe;
  inv.kauffman_x = pow_unit(writhe) * inv.bracket;
  inv.convention = convention;
  try {
    inv.jones = to_jones(inv.kauffman_x, convention);
  } catch (const NonQuarticExponent& e) {
    throw std::logic_error(std::string("knot invariant with non-quartic exponent: ") + e.what());
  }
  return inv;
}

}  // namespace detail

/// Throws IsLinkError when the closure has more than one component.
inline PlatInvariants invariants_of(const BraidWord& w,
                                    JonesConvention convention = kDefaultJonesConvention,
                                    Engine engine = Engine::matrix,
                                    int oracle_limit = oracle::kDefaultCrossingLimit) {
  if (engine == Engine::oracle) {
    const auto d = oracle::PlatDiagram::from_word(w);
    const int components = oracle::component_count(d);
    if (components != 1) throw IsLinkError(components);
    return detail::assemble(oracle::state_sum_tangle(d, oracle_limit),
                            oracle::state_sum_bracket(d, oracle_limit),
                            oracle::trace_writhe(d), convention);
  }
  if (!is_knot(w)) throw IsLinkError(orbit_component_count(w));
  BracketVector v = word_vector(w);
  LaurentPoly bracket = closure_bracket(v);
  return detail::assemble(std::move(v), std::move(bracket), writhe(w), convention);
}

/// Invariants of the mirror image (every crossing switched).
inline PlatInvariants mirror_invariants(const BraidWord& w,
                                        JonesConvention convention = kDefaultJonesConvention,
                                        Engine engine = Engine::matrix,
                                        int oracle_limit = oracle::kDefaultCrossingLimit) {
  return invariants_of(mirror(w), convention, engine, oracle_limit);
}

inline nlohmann::json to_json(const PlatInvariants& inv, const BraidWord& w) {
  auto vec = nlohmann::json::array();
  for (const auto& c : inv.bracket_vector.coeffs) vec.push_back(to_json(c));
  return {
      {"strands", w.strands()},
      {"word", render(w)},
      {"bracket_vector", vec},
      {"bracket", to_json(inv.bracket)},
      {"writhe", inv.writhe},
      {"kauffman_x", to_json(inv.kauffman_x)},
      {"jones", to_json(inv.jones.poly)},
      {"convention", to_string(inv.convention)},
  };
}

}  // namespace platjones
