#pragma once

// Exact Laurent polynomials over the integers, Z[a, a^-1].

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "platjones/errors.hpp"

namespace platjones {

using Integer = boost::multiprecision::cpp_int;

/// One monomial c * a^e with c != 0.
struct Term {
  int exponent = 0;
  Integer coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Element of Z[a, a^-1]. Terms are kept sorted by exponent with no zero
/// coefficients, so structural equality is polynomial equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  // NOLINTNEXTLINE(google-explicit-constructor)
  LaurentPoly(int constant) : LaurentPoly(Integer(constant), 0) {}

  LaurentPoly(Integer coeff, int exponent) {
    if (coeff != 0) terms_.push_back(Term{exponent, std::move(coeff)});
  }

  static LaurentPoly monomial(int coeff, int exponent) {
    return LaurentPoly(Integer(coeff), exponent);
  }

  /// Builds from arbitrary (exponent, coefficient) pairs; duplicates are summed.
  static LaurentPoly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& l, const Term& r) { return l.exponent < r.exponent; });
    LaurentPoly p;
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().exponent == t.exponent) {
        p.terms_.back().coeff += t.coeff;
        if (p.terms_.back().coeff == 0) p.terms_.pop_back();
      } else if (t.coeff != 0) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  int min_exponent() const { return terms_.front().exponent; }
  int max_exponent() const { return terms_.back().exponent; }

  Integer coeff(int exponent) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), exponent,
        [](const Term& t, int e) { return t.exponent < e; });
    if (it != terms_.end() && it->exponent == exponent) return it->coeff;
    return 0;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& q) {
    if (q.is_zero()) return *this;
    if (is_zero()) return *this = q;
    std::vector<Term> out;
    out.reserve(terms_.size() + q.terms_.size());
    auto i = terms_.begin();
    auto j = q.terms_.begin();
    while (i != terms_.end() || j != q.terms_.end()) {
      if (j == q.terms_.end() || (i != terms_.end() && i->exponent < j->exponent)) {
        out.push_back(std::move(*i++));
      } else if (i == terms_.end() || j->exponent < i->exponent) {
        out.push_back(*j++);
      } else {
        Integer c = i->coeff + j->coeff;
        if (c != 0) out.push_back(Term{i->exponent, std::move(c)});
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& q) { return *this += -q; }

  LaurentPoly& operator*=(const LaurentPoly& q) { return *this = *this * q; }

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }

  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    if (q.size() == 1) return p.scaled(q.terms_[0].coeff, q.terms_[0].exponent);
    if (p.size() == 1) return q.scaled(p.terms_[0].coeff, p.terms_[0].exponent);
    const int lo = p.min_exponent() + q.min_exponent();
    const int hi = p.max_exponent() + q.max_exponent();
    std::vector<Integer> dense(static_cast<std::size_t>(hi - lo) + 1);
    for (const auto& s : p.terms_)
      for (const auto& t : q.terms_)
        dense[static_cast<std::size_t>(s.exponent + t.exponent - lo)] += s.coeff * t.coeff;
    LaurentPoly r;
    for (std::size_t k = 0; k < dense.size(); ++k)
      if (dense[k] != 0) r.terms_.push_back(Term{lo + static_cast<int>(k), std::move(dense[k])});
    return r;
  }

  /// Multiplication by the monomial c * a^shift.
  LaurentPoly scaled(const Integer& c, int shift) const {
    if (c == 0) return {};
    LaurentPoly r = *this;
    for (auto& t : r.terms_) {
      t.exponent += shift;
      if (c != 1) t.coeff *= c;
    }
    return r;
  }

  LaurentPoly shifted(int shift) const { return scaled(1, shift); }

  /// Substitutes a -> a^-1.
  LaurentPoly mirror() const {
    LaurentPoly r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
      r.terms_.push_back(Term{-it->exponent, it->coeff});
    return r;
  }

  std::string to_string(char var = 'a') const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
      const bool neg = t.coeff < 0;
      if (first) {
        if (neg) os << '-';
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      const Integer mag = neg ? Integer(-t.coeff) : t.coeff;
      if (t.exponent == 0) {
        os << mag;
        continue;
      }
      if (mag != 1) os << mag;
      os << var;
      if (t.exponent != 1) os << '^' << t.exponent;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    return os << p.to_string();
  }

 private:
  std::vector<Term> terms_;
};

/// The variable a.
inline LaurentPoly var_a() { return LaurentPoly::monomial(1, 1); }

/// The loop value k = -a^2 - a^-2 contributed by each closed circle.
inline LaurentPoly loop_value() {
  return LaurentPoly::from_terms({Term{2, -1}, Term{-2, -1}});
}

inline LaurentPoly mirror(const LaurentPoly& p) { return p.mirror(); }

/// (-a^-3)^e, defined for every integer e.
inline LaurentPoly pow_unit(int e) {
  return LaurentPoly::monomial(e % 2 == 0 ? 1 : -1, -3 * e);
}

/// p^e for e >= 0.
inline LaurentPoly power(const LaurentPoly& p, int e) {
  LaurentPoly r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

enum class JonesConvention { t_eq_a4, t_eq_a_minus4 };

inline std::string to_string(JonesConvention c) {
  return c == JonesConvention::t_eq_a4 ? "t=a^4" : "t=a^-4";
}

/// A Laurent polynomial in t. Same storage as LaurentPoly; renders with `t`.
struct JonesPoly {
  LaurentPoly poly;

  friend bool operator==(const JonesPoly&, const JonesPoly&) = default;

  std::string to_string() const { return poly.to_string('t'); }
};

inline JonesPoly to_jones(const LaurentPoly& p, JonesConvention convention) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    if (t.exponent % 4 != 0) throw NonQuarticExponent(t.exponent);
    const int e = t.exponent / 4;
    out.push_back(Term{convention == JonesConvention::t_eq_a4 ? e : -e, t.coeff});
  }
  return JonesPoly{LaurentPoly::from_terms(std::move(out))};
}

/// Parses the text rendering produced by LaurentPoly::to_string. Also accepts
/// `*` between coefficient and variable and arbitrary spacing.
inline LaurentPoly parse_laurent(std::string_view text, char var = 'a') {
  std::vector<Term> terms;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_digits = [&](std::string& out) {
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      out.push_back(text[pos++]);
  };
  skip_ws();
  if (text.substr(pos) == "0") return {};
  bool first = true;
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      throw SyntaxError("expected '+' or '-' between terms", pos);
    }
    first = false;
    std::string digits;
    read_digits(digits);
    Integer coeff = digits.empty() ? Integer(1) : Integer(digits);
    if (pos < text.size() && text[pos] == '*') ++pos;
    int exponent = 0;
    if (pos < text.size() && text[pos] == var) {
      ++pos;
      exponent = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        int esign = 1;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
          esign = text[pos] == '-' ? -1 : 1;
          ++pos;
        }
        std::string edigits;
        const std::size_t at = pos;
        read_digits(edigits);
        if (edigits.empty()) throw SyntaxError("expected exponent", at);
        exponent = esign * std::stoi(edigits);
      }
    } else if (digits.empty()) {
      throw SyntaxError("expected coefficient or variable", pos);
    }
    terms.push_back(Term{exponent, Integer(sign * coeff)});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

/// JSON form: [[exponent, coefficient], ...] sorted by exponent. Coefficients
/// outside the int64 range are written as decimal strings.
inline nlohmann::json to_json(const LaurentPoly& p) {
  auto arr = nlohmann::json::array();
  for (const auto& t : p.terms()) {
    if (t.coeff >= std::numeric_limits<std::int64_t>::min() &&
        t.coeff <= std::numeric_limits<std::int64_t>::max()) {
      arr.push_back({t.exponent, static_cast<std::int64_t>(t.coeff)});
    } else {
      arr.push_back({t.exponent, t.coeff.str()});
    }
  }
  return arr;
}

inline LaurentPoly laurent_from_json(const nlohmann::json& j) {
  std::vector<Term> terms;
  for (const auto& pair : j) {
    const int e = pair.at(0).get<int>();
    const auto& c = pair.at(1);
    terms.push_back(Term{e, c.is_string() ? Integer(c.get<std::string>())
                                          : Integer(c.get<std::int64_t>())});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace platjones
