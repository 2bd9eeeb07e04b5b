#pragma once

// Brute-force reference computations. None of these touch the symmetric
// function code or the Berkowitz characteristic polynomial, so they can
// referee both.

#include <cstdint>
#include <span>
#include <vector>

#include "symtensor/matrix.hpp"
#include "symtensor/poly.hpp"
#include "symtensor/sparse.hpp"

namespace symtensor::check {

// Sum over all permutations; n <= 7.
RingValue det_leibniz(const SquareMatrix& M);

// Cofactor expansion along the first row; any ring.
RingValue det_cofactor(const SquareMatrix& M);

// Fraction-free Gaussian elimination; integer matrices only.
RingValue det_bareiss(const SquareMatrix& M);

// det(X*I - M) by cofactor expansion over polynomial entries.
Poly charpoly_cofactor(const SquareMatrix& M);

// Sylvester matrix of a (degree n) and b (degree m): m shifted rows of a
// first, then n shifted rows of b. Both degrees must be positive.
SquareMatrix sylvester_matrix(const Poly& a, const Poly& b);

// det of the Sylvester matrix; Bareiss over ZZ, cofactors otherwise.
RingValue sylvester_resultant(const Poly& a, const Poly& b);

// prod_i f(a_i).
RingValue product_at_roots(const Poly& f, std::span<const RingValue> roots);

// Exhaustive search for a multiplicative inverse in a finite ring.
bool unit_by_search(const RingValue& a);

// Evaluates m at the point (x_1, ..., x_n).
RingValue evaluate_at(const MultiPoly& m, std::span<const RingValue> point);

// Monic F of degree n over GF(q) coprime to every generator.
std::uint64_t count_coprime(std::uint64_t q, std::size_t n, std::span<const Poly> generators);

}  // namespace symtensor::check
