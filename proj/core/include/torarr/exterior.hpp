#pragma once

#include <torarr/arrangement.hpp>
#include <torarr/ints.hpp>

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>

namespace torarr::ospres {

// Square-free monomial in the degree-1 symbols x_1..x_d, as a bitmask.
using Monomial = std::uint64_t;

// 0 when the monomials share a symbol, else the sign collecting a∧b into
// increasing order: parity of pairs (i in a, j in b) with i > j.
inline int wedge_sign(Monomial a, Monomial b) {
  if (a & b) return 0;
  int inversions = 0;
  for (Monomial rest = b; rest;) {
    const int j = std::countr_zero(rest);
    rest &= rest - 1;
    inversions += std::popcount(a >> (j + 1));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

// Element of the exterior algebra over Q on x_1..x_d.
struct ExteriorElement {
  std::map<Monomial, Rat> terms;  // monomial -> nonzero coefficient

  static ExteriorElement one() { return unit(0); }

  static ExteriorElement unit(Monomial m) {
    ExteriorElement e;
    e.terms[m] = 1;
    return e;
  }

  // chi_1 x_1 + ... + chi_d x_d
  static ExteriorElement character_form(const arrangement::Character& chi) {
    ExteriorElement e;
    for (std::size_t i = 0; i < chi.size(); ++i)
      if (chi[i] != 0) e.terms[Monomial{1} << i] = Rat(chi[i]);
    return e;
  }

  bool is_zero() const { return terms.empty(); }

  // degree when homogeneous, nullopt otherwise (the zero element has degree 0)
  std::optional<std::size_t> degree() const {
    std::optional<std::size_t> deg;
    for (const auto& [m, c] : terms) {
      const std::size_t d = static_cast<std::size_t>(std::popcount(m));
      if (deg && *deg != d) return std::nullopt;
      deg = d;
    }
    return deg ? deg : std::optional<std::size_t>{0};
  }

  ExteriorElement& add_term(Monomial m, const Rat& c) {
    auto it = terms.find(m);
    if (it == terms.end()) {
      if (c != 0) terms.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
    return *this;
  }

  ExteriorElement operator+(const ExteriorElement& o) const {
    ExteriorElement r = *this;
    for (const auto& [m, c] : o.terms) r.add_term(m, c);
    return r;
  }

  ExteriorElement scaled(const Rat& s) const {
    ExteriorElement r;
    if (s == 0) return r;
    for (const auto& [m, c] : terms) r.terms[m] = c * s;
    return r;
  }

  ExteriorElement operator-(const ExteriorElement& o) const { return *this + o.scaled(-1); }

  ExteriorElement operator*(const ExteriorElement& o) const {
    ExteriorElement r;
    for (const auto& [ma, ca] : terms)
      for (const auto& [mb, cb] : o.terms) {
        const int s = wedge_sign(ma, mb);
        if (s != 0) r.add_term(ma | mb, ca * cb * s);
      }
    return r;
  }

  bool operator==(const ExteriorElement& o) const = default;

  std::string str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms) {
      if (!first) os << " + ";
      first = false;
      if (m == 0 || c != 1) os << c;
      if (m != 0 && c != 1) os << "*";
      for (Monomial rest = m; rest;) {
        const int i = std::countr_zero(rest);
        rest &= rest - 1;
        os << "x" << (i + 1);
        if (rest) os << "*";
      }
    }
    return os.str();
  }
};

// ordered product of the character forms of the given rows
inline ExteriorElement wedge_of_characters(const std::vector<arrangement::Character>& rows) {
  ExteriorElement e = ExteriorElement::one();
  for (const auto& chi : rows) e = e * ExteriorElement::character_form(chi);
  return e;
}

}  // namespace torarr::ospres
