#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "symtensor/matrix.hpp"
#include "symtensor/poly.hpp"
#include "symtensor/symmetric.hpp"

namespace symtensor::check {

// Seeded source of random ring elements, polynomials and matrices. Integer
// draws are reduced into the ring, so a bound of 9 over Zmod:12 gives the
// residues of [-9, 9].
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  std::mt19937_64& engine() noexcept { return engine_; }

  long integer(long lo, long hi);
  std::size_t index(std::size_t lo, std::size_t hi);

  RingValue value(const RingSpec& spec, long bound = 9);
  RingValue nonzero_value(const RingSpec& spec, long bound = 9);
  // Units of ZZ are +-1; in a field any nonzero element.
  RingValue unit(const RingSpec& spec, long bound = 9);

  // Degree drawn from [0, max_degree]; the result may reduce to zero.
  Poly poly(const RingSpec& spec, std::size_t max_degree, long bound = 9);
  MonicPoly monic(const RingSpec& spec, std::size_t min_degree, std::size_t max_degree,
                  long bound = 9);
  std::vector<RingValue> values(const RingSpec& spec, std::size_t count, long bound = 9);

  SquareMatrix matrix(const RingSpec& spec, std::size_t n, long bound = 9);
  // S and S^{-1}, built from elementary row operations and unit scalings.
  std::pair<SquareMatrix, SquareMatrix> invertible(const RingSpec& spec, std::size_t n,
                                                   std::size_t steps = 6, long bound = 3);

  // Up to max_terms monomials e^a with sum(a) <= max_total.
  SymElem sym_elem(const RingSpec& spec, std::size_t n, std::size_t max_total,
                   std::size_t max_terms = 4, long bound = 9);
  SymPolyX sym_poly_x(const RingSpec& spec, std::size_t arity, std::size_t max_x_degree,
                      std::size_t max_total, long bound = 9);

  Permutation permutation(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace symtensor::check
