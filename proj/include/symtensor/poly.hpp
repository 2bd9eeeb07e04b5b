#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symtensor/ring.hpp"

namespace symtensor {

// Dense univariate polynomial; coeffs[i] is the coefficient of X^i and the
// last stored coefficient is never zero.
class Poly {
 public:
  explicit Poly(RingSpec spec) : spec_(std::move(spec)) {}
  Poly(RingSpec spec, std::vector<RingValue> coeffs);

  static Poly constant(const RingValue& c);
  static Poly monomial(const RingValue& c, std::size_t degree);
  static Poly x(const RingSpec& spec);

  const RingSpec& spec() const noexcept { return spec_; }
  // std::nullopt stands for the degree of the zero polynomial.
  std::optional<std::size_t> degree() const noexcept;
  bool is_zero() const noexcept { return coeffs_.empty(); }

  std::span<const RingValue> coefficients() const noexcept { return coeffs_; }
  // Coefficient of X^i; zero beyond the degree.
  RingValue coeff(std::size_t i) const;
  const RingValue& leading() const;

  RingValue operator()(const RingValue& at) const;
  Poly pow(std::uint64_t exponent) const;

  std::string to_string(std::string_view var = "X") const;
  CoeffText text(std::string_view var = "X") const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const RingValue& scalar);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const RingValue& s) { return a *= s; }
  friend Poly operator*(const RingValue& s, Poly a) { return a *= s; }
  friend Poly operator-(const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void check_same_ring(const Poly& other) const;

  RingSpec spec_;
  std::vector<RingValue> coeffs_;
};

// A polynomial with leading coefficient exactly one and degree >= 1.
class MonicPoly {
 public:
  explicit MonicPoly(Poly poly);

  // Builds X^n - c_1 X^{n-1} + c_2 X^{n-2} - ... + (-1)^n c_n.
  static MonicPoly from_signed_coefficients(const RingSpec& spec,
                                            std::span<const RingValue> c);
  // Builds (X - a_1)...(X - a_n).
  static MonicPoly from_roots(const RingSpec& spec, std::span<const RingValue> roots);

  const Poly& poly() const noexcept { return poly_; }
  const RingSpec& spec() const noexcept { return poly_.spec(); }
  std::size_t degree() const noexcept { return *poly_.degree(); }
  // c_1..c_n of the alternating-sign view above.
  std::vector<RingValue> signed_coefficients() const;

  std::string to_string() const { return poly_.to_string(); }

  friend bool operator==(const MonicPoly& a, const MonicPoly& b) {
    return a.poly_ == b.poly_;
  }

 private:
  Poly poly_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

// Exact division by a monic polynomial; needs no division in the base ring.
DivMod poly_divmod(const Poly& f, const MonicPoly& g);
// Division by any polynomial whose leading coefficient is a unit.
DivMod poly_divmod(const Poly& f, const Poly& g);

struct ExtendedGcd {
  Poly gcd;  // monic, or zero when both inputs are zero
  Poly s;
  Poly t;    // s*a + t*b == gcd
};

// Extended Euclid; the base ring must be a field.
ExtendedGcd extended_gcd(const Poly& a, const Poly& b);
Poly poly_gcd(const Poly& a, const Poly& b);

// Residue class modulo a monic polynomial, kept as its reduced representative.
class QuotientElem {
 public:
  QuotientElem(MonicPoly modulus, const Poly& f);

  const MonicPoly& modulus() const noexcept { return modulus_; }
  const Poly& rep() const noexcept { return rep_; }
  bool is_one() const;

  friend QuotientElem operator*(const QuotientElem& a, const QuotientElem& b);
  friend QuotientElem operator+(const QuotientElem& a, const QuotientElem& b);
  friend bool operator==(const QuotientElem& a, const QuotientElem& b) {
    return a.modulus_ == b.modulus_ && a.rep_ == b.rep_;
  }

 private:
  MonicPoly modulus_;
  Poly rep_;
};

// The inverse of f modulo F via the Bezout identity f*h + F*H = 1.
// Requires a field base; throws kNotInvertible when gcd(f, F) != 1.
QuotientElem invert_mod(const Poly& f, const MonicPoly& F);

}  // namespace symtensor
