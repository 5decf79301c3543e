#pragma once

// Exact Laurent polynomials in one variable with arbitrary-precision integer
// coefficients. Terms are kept sorted by exponent with no zero coefficients,
// so structural equality is polynomial equality.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "knotslope/error.hpp"

namespace knotslope {

using Integer = boost::multiprecision::cpp_int;
using Exponent = std::int64_t;

struct Term {
  Exponent exp;
  Integer coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

struct DegreeBounds {
  Exponent min;
  Exponent max;

  friend bool operator==(const DegreeBounds&, const DegreeBounds&) = default;
};

class LaurentPoly {
 public:
  LaurentPoly() = default;

  // Builds from (exponent, coefficient) pairs in any order; repeated exponents add up.
  LaurentPoly(std::initializer_list<std::pair<Exponent, long long>> terms) {
    std::vector<Term> raw;
    raw.reserve(terms.size());
    for (const auto& [e, c] : terms) raw.push_back({e, Integer(c)});
    *this = from_terms(std::move(raw));
  }

  static LaurentPoly mono(const Integer& coeff, Exponent exp) {
    LaurentPoly p;
    if (coeff != 0) p.terms_.push_back({exp, coeff});
    return p;
  }

  static LaurentPoly constant(const Integer& c) { return mono(c, 0); }

  static LaurentPoly from_terms(std::vector<Term> raw) {
    std::sort(raw.begin(), raw.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
    LaurentPoly p;
    p.terms_.reserve(raw.size());
    for (auto& t : raw) {
      if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
        p.terms_.back().coeff += t.coeff;
      } else {
        if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
      }
    }
    if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    return p;
  }

  // -A^2 - A^-2, the value of a closed circle in the Kauffman bracket.
  static LaurentPoly delta() { return LaurentPoly{{-2, -1}, {2, -1}}; }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  Integer coeff(Exponent e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, Exponent x) { return t.exp < x; });
    return (it != terms_.end() && it->exp == e) ? it->coeff : Integer(0);
  }

  DegreeBounds degree_bounds() const {
    if (terms_.empty()) throw ZeroPolynomial();
    return {terms_.front().exp, terms_.back().exp};
  }
  Exponent min_degree() const { return degree_bounds().min; }
  Exponent max_degree() const { return degree_bounds().max; }

  // this += sign * A^shift * src. The hot path of the bracket sweep.
  void add_shifted(const LaurentPoly& src, Exponent shift, bool negate = false) {
    if (src.terms_.empty()) return;
    if (terms_.empty()) {
      terms_.reserve(src.terms_.size());
      for (const auto& t : src.terms_) terms_.push_back({t.exp + shift, negate ? Integer(-t.coeff) : t.coeff});
      return;
    }
    std::vector<Term> out;
    out.reserve(terms_.size() + src.terms_.size());
    auto a = terms_.begin();
    auto b = src.terms_.begin();
    while (a != terms_.end() || b != src.terms_.end()) {
      if (b == src.terms_.end() || (a != terms_.end() && a->exp < b->exp + shift)) {
        out.push_back(std::move(*a++));
      } else if (a == terms_.end() || b->exp + shift < a->exp) {
        out.push_back({b->exp + shift, negate ? Integer(-b->coeff) : b->coeff});
        ++b;
      } else {
        if (negate) {
          a->coeff -= b->coeff;
        } else {
          a->coeff += b->coeff;
        }
        if (a->coeff != 0) out.push_back(std::move(*a));
        ++a;
        ++b;
      }
    }
    terms_ = std::move(out);
  }

  LaurentPoly shifted(Exponent shift) const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.exp += shift;
    return p;
  }

  LaurentPoly operator-() const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    add_shifted(o, 0, false);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    add_shifted(o, 0, true);
    return *this;
  }
  LaurentPoly& operator*=(const Integer& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.coeff *= s;
    }
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Integer& s) { return a *= s; }
  friend LaurentPoly operator*(const Integer& s, LaurentPoly a) { return a *= s; }

  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    if (q.size() < p.size()) return q * p;
    // Dense accumulation over the product's exponent span.
    const Exponent lo = p.terms_.front().exp + q.terms_.front().exp;
    const Exponent hi = p.terms_.back().exp + q.terms_.back().exp;
    std::vector<Integer> acc(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& s : p.terms_) {
      for (const auto& t : q.terms_) acc[static_cast<std::size_t>(s.exp + t.exp - lo)] += s.coeff * t.coeff;
    }
    LaurentPoly r;
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (acc[i] != 0) r.terms_.push_back({lo + static_cast<Exponent>(i), std::move(acc[i])});
    }
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Exact quotient p / q; throws NonDivisible when q does not divide p in Z[A, A^-1].
  friend LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q) {
    if (q.is_zero()) throw NonDivisible("division by the zero polynomial");
    if (p.is_zero()) return {};
    const Term& lead = q.terms_.back();
    const Exponent qmin = q.terms_.front().exp;
    const Exponent lowest_allowed = p.terms_.front().exp - qmin;
    LaurentPoly rem = p;
    std::vector<Term> quot;
    while (!rem.is_zero()) {
      const Term& top = rem.terms_.back();
      const Exponent e = top.exp - lead.exp;
      if (e < lowest_allowed || top.coeff % lead.coeff != 0) {
        throw NonDivisible("polynomial is not an exact multiple of the divisor");
      }
      Integer c = top.coeff / lead.coeff;
      rem.add_shifted(q * c, e, true);
      quot.push_back({e, std::move(c)});
    }
    std::reverse(quot.begin(), quot.end());
    LaurentPoly r;
    r.terms_ = std::move(quot);
    return r;
  }

  // Term c*A^e becomes c*A^-e.
  LaurentPoly invert_variable() const {
    LaurentPoly r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.push_back({-it->exp, it->coeff});
    return r;
  }

  // Rewrites a polynomial in A as one in q under q = A^-4.
  LaurentPoly substitute_q() const {
    LaurentPoly r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (it->exp % 4 != 0) {
        throw NotDivisibleBy4("exponent " + std::to_string(it->exp) + " is not divisible by 4");
      }
      r.terms_.push_back({-it->exp / 4, it->coeff});
    }
    return r;
  }

  // Human-readable form, highest degree first: "-q^4 + q^3 + q".
  std::string to_string(const std::string& var = "A") const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      Integer c = it->coeff;
      const bool neg = c < 0;
      if (neg) c = -c;
      if (first) {
        if (neg) os << '-';
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      const bool unit = (c == 1);
      if (!unit || it->exp == 0) os << c;
      if (it->exp != 0) {
        os << var;
        if (it->exp != 1) os << '^' << it->exp;
      }
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

 private:
  std::vector<Term> terms_;
};

inline LaurentPoly pow(const LaurentPoly& base, unsigned k) {
  LaurentPoly r = LaurentPoly::constant(1);
  for (unsigned i = 0; i < k; ++i) r *= base;
  return r;
}

}  // namespace knotslope
