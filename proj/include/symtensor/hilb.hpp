#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symtensor/matrix.hpp"
#include "symtensor/poly.hpp"
#include "symtensor/symmetric.hpp"

namespace symtensor {

enum class MultSetKind {
  kTrivial,     // U = {1}
  kFinGen,      // multiplicative closure of finitely many generators
  kLocalAt,     // all f with f(a) a unit
  kAllNonzero,  // all nonzero polynomials; base must be a domain
};

// A multiplicatively closed subset U of A[X], described finitely.
class MultSetSpec {
 public:
  static MultSetSpec trivial();
  static MultSetSpec generated_by(std::vector<Poly> generators);
  static MultSetSpec local_at(RingValue point);
  static MultSetSpec all_nonzero();

  MultSetKind kind() const noexcept { return kind_; }
  const std::vector<Poly>& generators() const noexcept { return generators_; }
  const RingValue& point() const;

  // Generators f (x) ... (x) f of U(n), for finitely generated U.
  std::vector<SymElem> diagonal_power(std::size_t n) const;

  // trivial | gens:<poly>,... | local-at:<elt> | all-nonzero
  std::string to_string() const;

 private:
  MultSetSpec(MultSetKind kind, std::vector<Poly> generators, std::optional<RingValue> point)
      : kind_(kind), generators_(std::move(generators)), point_(std::move(point)) {}

  MultSetKind kind_;
  std::vector<Poly> generators_;
  std::optional<RingValue> point_;
};

// Is A[X]/(F) -> A[X]_U/(F) an isomorphism? Decided by the norm N_F(g)
// being a unit for every generator g (norms are multiplicative).
bool is_free_quotient(const MonicPoly& F, const MultSetSpec& U);

// Search space bound of free_quotient_oracle (residues per generator).
inline constexpr std::uint64_t kOracleSearchLimit = 100'000;

// Same question decided by exhaustively searching A[X]/(F) for an inverse
// of every generator. Finite base rings and finitely generated U only.
bool free_quotient_oracle(const MonicPoly& F, const MultSetSpec& U);

// The monic generator of a rank-n free quotient from the matrix of X acting
// on it: its characteristic polynomial, checked to annihilate theta.
MonicPoly recover_monic(const SquareMatrix& theta);

// a_n: sends s_{i,n} to s_{i,n-1} + s_{i-1,n-1} X. Result has arity n-1.
SymPolyX addition_map(const SymElem& s);
// The A[X]-linear extension of a_n to (arity n) (x) A[X].
SymPolyX addition_map(const SymPolyX& t);

// p_n: (arity n-1) (x) A[X] -> (arity n) (x) A[X], the A[X]-algebra map with
// p_n(s_{i,n-1}) = s_{i,n} - p_n(s_{i-1,n-1}) X.
SymPolyX section_map(const SymPolyX& t, std::size_t n);

// Remainder of t modulo Delta_{n,X}(X), n = t.arity(); the canonical
// representative of t in V_{n,X}.
SymPolyX reduce_mod_delta(const SymPolyX& t);

// p_n(a_n(s)) == s in V_{n,X}.
bool section_inverts_addition(const SymElem& s);
// a_n(p_n(t)) == t, for t of arity n-1.
bool addition_inverts_section(const SymPolyX& t, std::size_t n);

// a_n(Delta_{n,X}(X)) == 0.
bool addition_kernel_check(std::size_t n);

// a_n(f (x) ... (x) f) == (f (x) ... (x) f) (x) f, together with
// a_n(s_{i,n}(f)) == s_{i,n-1}(f) + s_{i-1,n-1}(f) f(X) for each i.
bool addition_diagonal_check(const Poly& f, std::size_t n);

// Enumeration bound of count_points (monic polynomials).
inline constexpr std::uint64_t kCountLimit = 1'000'000;

// Number of monic degree-n F over GF(q) with is_free_quotient(F, U). The
// range is split across `threads` workers; the total does not depend on it.
std::uint64_t count_points(std::uint64_t q, std::size_t n, const MultSetSpec& U,
                           unsigned threads = 1);

}  // namespace symtensor
