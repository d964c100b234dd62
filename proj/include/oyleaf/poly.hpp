#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>

#include "oyleaf/bigint.hpp"
#include "oyleaf/errors.hpp"

namespace oyleaf {

/// Variable universe for all polynomial identities in this project.
enum class Var : std::size_t { t = 0, s = 1, x = 2, y = 3, z = 4 };

inline constexpr std::size_t kNumVars = 5;
inline constexpr char kVarNames[kNumVars + 1] = "tsxyz";

using Monomial = std::array<unsigned, kNumVars>;

/// Sparse exact multivariate polynomial. Coefficients are exact (BigInt or
/// Rational); zero coefficients are never stored, so equality is plain
/// map equality.
template <class Coeff>
class PolyT {
 public:
  PolyT() = default;

  static PolyT constant(Coeff c) {
    PolyT p;
    if (c != 0) p.terms_[Monomial{}] = std::move(c);
    return p;
  }
  static PolyT one() { return constant(Coeff(1)); }
  static PolyT var(Var v, unsigned exp = 1) {
    PolyT p;
    if (exp == 0) return one();
    Monomial m{};
    m[static_cast<std::size_t>(v)] = exp;
    p.terms_[m] = Coeff(1);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Coeff>& terms() const { return terms_; }

  Coeff coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  PolyT& operator+=(const PolyT& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  PolyT& operator-=(const PolyT& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend PolyT operator+(PolyT a, const PolyT& b) { return a += b; }
  friend PolyT operator-(PolyT a, const PolyT& b) { return a -= b; }

  friend PolyT operator*(const PolyT& a, const PolyT& b) {
    PolyT out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m;
        for (std::size_t i = 0; i < kNumVars; ++i) m[i] = ma[i] + mb[i];
        out.add_term(m, ca * cb);
      }
    return out;
  }
  PolyT& operator*=(const PolyT& o) { return *this = *this * o; }

  friend PolyT operator*(const Coeff& c, const PolyT& p) {
    return constant(c) * p;
  }

  PolyT pow(unsigned e) const {
    PolyT out = one();
    PolyT base = *this;
    while (e) {
      if (e & 1) out *= base;
      base *= base;
      e >>= 1;
    }
    return out;
  }

  /// Substitutes `value` for variable v.
  PolyT subs(Var v, const PolyT& value) const {
    const std::size_t vi = static_cast<std::size_t>(v);
    PolyT out;
    for (const auto& [m, c] : terms_) {
      Monomial rest = m;
      unsigned e = rest[vi];
      rest[vi] = 0;
      PolyT term;
      term.terms_[rest] = c;
      out += term * value.pow(e);
    }
    return out;
  }

  bool operator==(const PolyT& o) const { return terms_ == o.terms_; }
  bool operator!=(const PolyT& o) const { return !(*this == o); }

  /// Deterministic rendering, terms in increasing monomial order.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      if (!out.empty()) out += " + ";
      std::string mono;
      for (std::size_t i = 0; i < kNumVars; ++i) {
        if (m[i] == 0) continue;
        mono += kVarNames[i];
        if (m[i] > 1) mono += "^" + std::to_string(m[i]);
      }
      std::string cs = coeff_str(c);
      if (mono.empty())
        out += cs;
      else if (cs == "1")
        out += mono;
      else if (cs == "-1")
        out += "-" + mono;
      else
        out += cs + "*" + mono;
    }
    return out;
  }

 private:
  static std::string coeff_str(const mpz_class& c) { return c.get_str(); }
  static std::string coeff_str(const mpq_class& c) { return c.get_str(); }

  void add_term(const Monomial& m, Coeff c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (c != 0) terms_.emplace(m, std::move(c));
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<Monomial, Coeff> terms_;
};

using MultiPoly = PolyT<BigInt>;
using RatPoly = PolyT<Rational>;

inline RatPoly to_rational(const MultiPoly& p) {
  RatPoly out;
  for (const auto& [m, c] : p.terms())
    out += RatPoly::constant(Rational(c)) * [&] {
      RatPoly mono = RatPoly::one();
      for (std::size_t i = 0; i < kNumVars; ++i)
        if (m[i]) mono *= RatPoly::var(static_cast<Var>(i), m[i]);
      return mono;
    }();
  return out;
}

}  // namespace oyleaf
