#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "symtensor/poly.hpp"
#include "symtensor/ring.hpp"

namespace symtensor {

class SquareMatrix {
 public:
  // The n x n zero matrix; n >= 1.
  SquareMatrix(RingSpec spec, std::size_t n);
  SquareMatrix(RingSpec spec, std::size_t n, std::vector<RingValue> row_major);

  static SquareMatrix identity(const RingSpec& spec, std::size_t n);
  static SquareMatrix scalar(const RingValue& c, std::size_t n);

  const RingSpec& spec() const noexcept { return spec_; }
  std::size_t size() const noexcept { return n_; }

  const RingValue& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * n_ + col];
  }
  void set(std::size_t row, std::size_t col, RingValue value);

  bool is_zero() const noexcept;
  std::string to_string() const;

  friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b);
  friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b);
  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
  friend SquareMatrix operator*(const RingValue& s, const SquareMatrix& a);
  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b);

 private:
  void check_compatible(const SquareMatrix& other) const;

  RingSpec spec_;
  std::size_t n_;
  std::vector<RingValue> entries_;
};

// Matrix of multiplication by X on the basis 1, x, ..., x^{n-1} of A[X]/(F).
SquareMatrix companion_matrix(const MonicPoly& F);

// Matrix of multiplication by f on A[X]/(F); column j holds f*x^j mod F.
SquareMatrix mult_matrix(const Poly& f, const MonicPoly& F);

// det(X*I - M), by Berkowitz's division-free algorithm: O(n^4) ring
// operations and valid over every commutative ring.
MonicPoly char_poly(const SquareMatrix& M);

RingValue det(const SquareMatrix& M);

// f(M) by Horner's rule.
SquareMatrix evaluate(const Poly& f, const SquareMatrix& M);

}  // namespace symtensor
