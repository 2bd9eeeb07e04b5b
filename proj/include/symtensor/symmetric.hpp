#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "symtensor/poly.hpp"
#include "symtensor/sparse.hpp"

namespace symtensor {

// A permutation of {0, ..., n-1}, stored as its image list.
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t n);
  // Swaps the 0-based letters i and j.
  static Permutation transposition(std::size_t n, std::size_t i, std::size_t j);

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_.at(i); }

  // (p * q)(i) = p(q(i)).
  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

// Relabels X_i as X_{p(i)}.
MultiPoly apply_permutation(const Permutation& p, const MultiPoly& m);

// Fixed by every adjacent transposition (i, i+1)?
bool is_symmetric(const MultiPoly& m);

// e_i in X_1..X_n; e_0 = 1. Throws kInvalidIndex for i > n.
MultiPoly elementary(const RingSpec& spec, std::size_t i, std::size_t n);

// The basis symbol s_{i,n} as a SymElem of arity n, with s_{0,n} = 1 and
// s_{i,n} = 0 for i > n.
SymElem sym_generator(const RingSpec& spec, std::size_t i, std::size_t n);

// Substitutes e_i -> elementary(i, n).
MultiPoly expand(const SymElem& s);

// The unique e-basis expression of a symmetric polynomial. Throws
// kPrecondition when m is not symmetric.
SymElem decompose(const MultiPoly& m);

// f(X_var) in n variables (var is 0-based).
MultiPoly embed(const Poly& f, std::size_t n, std::size_t var);

// s_{1,n}(f), ..., s_{n,n}(f): (-1)^i times the coefficient of Y^{n-i} in
// prod_i (Y - f(X_i)), written in the e-basis.
std::vector<SymElem> sym_ops_of(const Poly& f, std::size_t n);

// f(X_1) * ... * f(X_n) in the e-basis; equals s_{n,n}(f).
SymElem diagonal_tensor(const Poly& f, std::size_t n);

// Polynomial in an outer variable X whose coefficients are SymElem of a
// fixed arity: an element of (symmetric tensors) (x) A[X].
class SymPolyX {
 public:
  SymPolyX(RingSpec spec, std::size_t arity) : spec_(std::move(spec)), arity_(arity) {}
  SymPolyX(RingSpec spec, std::size_t arity, std::vector<SymElem> coeffs);

  static SymPolyX constant(const SymElem& c);
  static SymPolyX x(const RingSpec& spec, std::size_t arity);
  // A polynomial with ring coefficients, lifted to constant SymElem coefficients.
  static SymPolyX lift(const Poly& f, std::size_t arity);

  const RingSpec& spec() const noexcept { return spec_; }
  std::size_t arity() const noexcept { return arity_; }
  std::optional<std::size_t> degree() const noexcept;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<SymElem>& coefficients() const noexcept { return coeffs_; }
  SymElem coeff(std::size_t i) const;

  std::string to_string() const;

  SymPolyX& operator+=(const SymPolyX& rhs);
  SymPolyX& operator-=(const SymPolyX& rhs);
  SymPolyX& operator*=(const SymPolyX& rhs);

  friend SymPolyX operator+(SymPolyX a, const SymPolyX& b) { return a += b; }
  friend SymPolyX operator-(SymPolyX a, const SymPolyX& b) { return a -= b; }
  friend SymPolyX operator*(SymPolyX a, const SymPolyX& b) { return a *= b; }
  friend bool operator==(const SymPolyX& a, const SymPolyX& b);

 private:
  void check_compatible(const SymPolyX& other) const;
  void trim();

  RingSpec spec_;
  std::size_t arity_;
  std::vector<SymElem> coeffs_;  // coeffs_[k] multiplies X^k
};

// Delta_{n,f}(X) = prod_i (X - f(X_i)) = X^n - s_{1,n}(f) X^{n-1} + ... .
SymPolyX delta(const Poly& f, std::size_t n);

// The coefficients of t in the outer variable, each expanded to X_1..X_n.
std::vector<MultiPoly> expand_coefficients(const SymPolyX& t);

}  // namespace symtensor
