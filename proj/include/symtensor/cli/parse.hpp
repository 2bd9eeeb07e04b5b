#pragma once

// Text front end: ring specs, polynomial expressions, multiplicative sets,
// homomorphisms and matrices.
//
// Expression grammar, loosest binding first:
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := '-' unary | power
//   power := atom ('^' integer)?
//   atom  := integer | symbol | '(' expr ')'
// Division is only by unit constants of the coefficient ring.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "symtensor/hilb.hpp"
#include "symtensor/matrix.hpp"
#include "symtensor/norm.hpp"
#include "symtensor/symmetric.hpp"

namespace symtensor::cli {

struct ExprNode {
  enum class Kind { kInteger, kSymbol, kAdd, kSub, kMul, kDiv, kNeg, kPow };

  Kind kind;
  std::size_t position;  // offset of the node's first character
  mpz_class integer;     // kInteger
  std::string symbol;    // kSymbol
  std::uint64_t exponent = 0;  // kPow
  std::vector<std::unique_ptr<ExprNode>> children;
};

using ExprAST = std::unique_ptr<ExprNode>;

// Throws ParseError; positions are offsets into `text` plus `offset`.
ExprAST parse_expr(std::string_view text, std::size_t offset = 0);

RingSpec parse_ring(std::string_view text);

// An element of the ring: integers and tower variables only.
RingValue parse_element(std::string_view text, const RingSpec& spec, std::size_t offset = 0);

// A polynomial in X over the ring.
Poly parse_poly(std::string_view text, const RingSpec& spec, std::size_t offset = 0);

// A polynomial in X1..Xn.
MultiPoly parse_multi(std::string_view text, const RingSpec& spec, std::size_t n);

// A polynomial in e1..en.
SymElem parse_sym(std::string_view text, const RingSpec& spec, std::size_t n);

// A polynomial in X with coefficients in e1..e_arity.
SymPolyX parse_sym_x(std::string_view text, const RingSpec& spec, std::size_t arity);

// trivial | gens:<poly>[,<poly>...] | local-at:<elt> | all-nonzero
MultSetSpec parse_multset(std::string_view text, const RingSpec& spec);

// id | to:<ring> | eval:<elt>
RingHom parse_hom(std::string_view text, const RingSpec& source);

// Rows separated by ';', entries by ','. Must be square.
SquareMatrix parse_matrix(std::string_view text, const RingSpec& spec);

}  // namespace symtensor::cli
