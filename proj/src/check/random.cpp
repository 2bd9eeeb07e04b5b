#include "symtensor/check/random.hpp"

#include <algorithm>
#include <numeric>

#include "symtensor/errors.hpp"

namespace symtensor::check {

long Gen::integer(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(engine_);
}

std::size_t Gen::index(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
}

RingValue Gen::value(const RingSpec& spec, long bound) {
  switch (spec.kind()) {
    case RingKind::kRationals: {
      mpq_class q(integer(-bound, bound), static_cast<unsigned long>(integer(1, bound)));
      q.canonicalize();
      return RingValue::from_rational(spec, q);
    }
    case RingKind::kPolyOver: {
      std::vector<RingValue> c{value(spec.base(), bound), value(spec.base(), bound)};
      return RingValue::from_tower_coefficients(spec, std::move(c));
    }
    default:
      return spec.from_int(integer(-bound, bound));
  }
}

RingValue Gen::nonzero_value(const RingSpec& spec, long bound) {
  for (;;) {
    RingValue v = value(spec, bound);
    if (!v.is_zero()) return v;
  }
}

RingValue Gen::unit(const RingSpec& spec, long bound) {
  if (spec.is_field()) return nonzero_value(spec, bound);
  for (int attempt = 0; attempt < 64; ++attempt) {
    RingValue v = value(spec, bound);
    if (is_unit(v)) return v;
  }
  return integer(0, 1) ? spec.one() : -spec.one();
}

Poly Gen::poly(const RingSpec& spec, std::size_t max_degree, long bound) {
  const std::size_t d = index(0, max_degree);
  std::vector<RingValue> coeffs;
  for (std::size_t i = 0; i < d; ++i) coeffs.push_back(value(spec, bound));
  coeffs.push_back(nonzero_value(spec, bound));
  return Poly(spec, std::move(coeffs));
}

MonicPoly Gen::monic(const RingSpec& spec, std::size_t min_degree, std::size_t max_degree,
                     long bound) {
  const std::size_t d = index(min_degree, max_degree);
  std::vector<RingValue> coeffs;
  for (std::size_t i = 0; i < d; ++i) coeffs.push_back(value(spec, bound));
  coeffs.push_back(spec.one());
  return MonicPoly(Poly(spec, std::move(coeffs)));
}

std::vector<RingValue> Gen::values(const RingSpec& spec, std::size_t count, long bound) {
  std::vector<RingValue> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(value(spec, bound));
  return out;
}

SquareMatrix Gen::matrix(const RingSpec& spec, std::size_t n, long bound) {
  return SquareMatrix(spec, n, values(spec, n * n, bound));
}

std::pair<SquareMatrix, SquareMatrix> Gen::invertible(const RingSpec& spec, std::size_t n,
                                                      std::size_t steps, long bound) {
  SquareMatrix S = SquareMatrix::identity(spec, n);
  SquareMatrix S_inv = S;
  for (std::size_t step = 0; step < steps; ++step) {
    SquareMatrix E = SquareMatrix::identity(spec, n);
    SquareMatrix E_inv = E;
    const std::size_t i = index(0, n - 1);
    const std::size_t j = index(0, n - 1);
    if (i == j) {
      const RingValue u = unit(spec, bound);
      E.set(i, i, u);
      E_inv.set(i, i, inverse(u));
    } else {
      const RingValue c = value(spec, bound);
      E.set(i, j, c);
      E_inv.set(i, j, -c);
    }
    S = S * E;
    S_inv = E_inv * S_inv;
  }
  return {std::move(S), std::move(S_inv)};
}

SymElem Gen::sym_elem(const RingSpec& spec, std::size_t n, std::size_t max_total,
                      std::size_t max_terms, long bound) {
  SymElem out(spec, n);
  const std::size_t terms = index(1, max_terms);
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<unsigned> exps(n, 0);
    if (n > 0) {
      const std::size_t total = index(0, max_total);
      for (std::size_t k = 0; k < total; ++k) ++exps[index(0, n - 1)];
    }
    out.add_term(Monomial::from_exponents(exps), value(spec, bound));
  }
  return out;
}

SymPolyX Gen::sym_poly_x(const RingSpec& spec, std::size_t arity, std::size_t max_x_degree,
                         std::size_t max_total, long bound) {
  std::vector<SymElem> coeffs;
  const std::size_t d = index(0, max_x_degree);
  for (std::size_t i = 0; i <= d; ++i) coeffs.push_back(sym_elem(spec, arity, max_total, 3, bound));
  return SymPolyX(spec, arity, std::move(coeffs));
}

Permutation Gen::permutation(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), engine_);
  return Permutation(std::move(images));
}

}  // namespace symtensor::check
