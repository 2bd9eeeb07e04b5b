#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symtensor/errors.hpp"
#include "symtensor/ring.hpp"

namespace symtensor {

// Exponent vector of at most kMaxVars variables, packed one byte per
// variable with the first variable in the most significant byte, so the
// integer order of keys is the lexicographic order with X_1 > X_2 > ...
class Monomial {
 public:
  static constexpr std::size_t kMaxVars = 8;
  static constexpr unsigned kMaxExponent = 255;

  constexpr Monomial() = default;

  static Monomial from_exponents(const std::vector<unsigned>& exponents);
  static Monomial unit(std::size_t var) { return Monomial().with(var, 1); }

  unsigned operator[](std::size_t var) const noexcept {
    return static_cast<unsigned>((key_ >> shift(var)) & 0xFFU);
  }
  Monomial with(std::size_t var, unsigned exponent) const;
  unsigned total_degree() const noexcept;
  bool is_one() const noexcept { return key_ == 0; }
  std::vector<unsigned> exponents(std::size_t nvars) const;

  // Exponent-wise sum; throws kUsage on exponent overflow.
  friend Monomial operator*(Monomial a, Monomial b);

  friend constexpr auto operator<=>(Monomial, Monomial) = default;

 private:
  static constexpr unsigned shift(std::size_t var) noexcept {
    return static_cast<unsigned>(8 * (kMaxVars - 1 - var));
  }
  std::uint64_t key_ = 0;
};

namespace detail {
std::string render_sparse(const std::map<Monomial, RingValue, std::greater<>>& terms,
                          std::size_t nvars, std::string_view symbol, bool as_factor,
                          CoeffText* factor_out);
}

// Sparse polynomial in nvars variables over a RingSpec, terms ordered
// lexicographically (leading term first). Tag selects the printed symbol
// and keeps polynomials in X_i and in e_i distinct types.
template <class Tag>
class SparsePoly {
 public:
  using Terms = std::map<Monomial, RingValue, std::greater<>>;

  SparsePoly(RingSpec spec, std::size_t nvars) : spec_(std::move(spec)), nvars_(nvars) {
    if (nvars_ > Monomial::kMaxVars) {
      throw Error(ErrorKind::kUsage, "at most " + std::to_string(Monomial::kMaxVars) +
                                         " variables are supported");
    }
  }

  static SparsePoly constant(const RingValue& c, std::size_t nvars) {
    SparsePoly p(c.spec(), nvars);
    p.add_term(Monomial(), c);
    return p;
  }

  // The variable with 0-based index var.
  static SparsePoly variable(const RingSpec& spec, std::size_t nvars, std::size_t var) {
    if (var >= nvars) throw Error(ErrorKind::kInvalidIndex, "variable index out of range");
    SparsePoly p(spec, nvars);
    p.add_term(Monomial::unit(var), spec.one());
    return p;
  }

  const RingSpec& spec() const noexcept { return spec_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  RingValue coeff(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? spec_.zero() : it->second;
  }

  void add_term(Monomial m, const RingValue& c) {
    if (!(c.spec() == spec_)) throw Error(ErrorKind::kUsage, "term coefficient outside " + spec_.to_string());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  SparsePoly pow(std::uint64_t exponent) const {
    SparsePoly result = constant(spec_.one(), nvars_);
    SparsePoly base = *this;
    while (exponent > 0) {
      if (exponent & 1U) result *= base;
      exponent >>= 1U;
      if (exponent > 0) base *= base;
    }
    return result;
  }

  std::string to_string() const {
    return detail::render_sparse(terms_, nvars_, Tag::kSymbol, false, nullptr);
  }
  CoeffText text() const {
    CoeffText out;
    detail::render_sparse(terms_, nvars_, Tag::kSymbol, true, &out);
    return out;
  }

  SparsePoly& operator+=(const SparsePoly& rhs) {
    check_compatible(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& rhs) {
    check_compatible(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
  }
  SparsePoly& operator*=(const SparsePoly& rhs) {
    check_compatible(rhs);
    SparsePoly out(spec_, nvars_);
    for (const auto& [ma, ca] : terms_) {
      for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, ca * cb);
    }
    terms_ = std::move(out.terms_);
    return *this;
  }
  SparsePoly& operator*=(const RingValue& scalar) {
    Terms out;
    for (const auto& [m, c] : terms_) {
      RingValue v = c * scalar;
      if (!v.is_zero()) out.emplace(m, std::move(v));
    }
    terms_ = std::move(out);
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(SparsePoly a, const SparsePoly& b) { return a *= b; }
  friend SparsePoly operator*(SparsePoly a, const RingValue& s) { return a *= s; }
  friend SparsePoly operator*(const RingValue& s, SparsePoly a) { return a *= s; }
  friend SparsePoly operator-(const SparsePoly& a) {
    SparsePoly out(a.spec_, a.nvars_);
    for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
    return out;
  }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.spec_ == b.spec_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const SparsePoly& other) const {
    if (!(spec_ == other.spec_) || nvars_ != other.nvars_) {
      throw Error(ErrorKind::kUsage, "arity or ring mismatch: " + std::to_string(nvars_) +
                                         " vs " + std::to_string(other.nvars_) + " variables");
    }
  }

  RingSpec spec_;
  std::size_t nvars_;
  Terms terms_;
};

struct XSymbols {
  static constexpr std::string_view kSymbol = "X";
};
struct ESymbols {
  static constexpr std::string_view kSymbol = "e";
};

// Polynomial in X_1..X_n; printed as X1..Xn.
using MultiPoly = SparsePoly<XSymbols>;
// Polynomial in the elementary symmetric functions e_1..e_n; printed as
// e1..en. Arity 0 holds a bare ring constant.
using SymElem = SparsePoly<ESymbols>;

}  // namespace symtensor
