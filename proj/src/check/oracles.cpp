#include "symtensor/check/oracles.hpp"

#include <algorithm>
#include <numeric>

#include "symtensor/errors.hpp"

namespace symtensor::check {

namespace {

template <class T>
using Grid = std::vector<std::vector<T>>;

template <class T>
T cofactor_expand(const Grid<T>& m, const T& zero) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  T acc = zero;
  for (std::size_t col = 0; col < n; ++col) {
    Grid<T> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<T> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    T term = m[0][col] * cofactor_expand(minor, zero);
    if (col % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

Grid<RingValue> to_grid(const SquareMatrix& M) {
  Grid<RingValue> g(M.size());
  for (std::size_t i = 0; i < M.size(); ++i) {
    for (std::size_t j = 0; j < M.size(); ++j) g[i].push_back(M(i, j));
  }
  return g;
}

}  // namespace

RingValue det_leibniz(const SquareMatrix& M) {
  const std::size_t n = M.size();
  if (n > 7) throw Error(ErrorKind::kUsage, "Leibniz expansion limited to n <= 7");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  RingValue acc = M.spec().zero();
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    RingValue term = M.spec().one();
    for (std::size_t i = 0; i < n; ++i) term *= M(i, perm[i]);
    if (inversions % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

RingValue det_cofactor(const SquareMatrix& M) {
  return cofactor_expand(to_grid(M), M.spec().zero());
}

RingValue det_bareiss(const SquareMatrix& M) {
  if (M.spec().kind() != RingKind::kIntegers) {
    throw Error(ErrorKind::kUnsupportedRing, "Bareiss elimination here is integer-only");
  }
  const std::size_t n = M.size();
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = M(i, j).integer();
  }
  mpz_class previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return M.spec().zero();
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        a[i][j] = v;
      }
    }
    previous = a[k][k];
  }
  return M.spec().from_integer(sign * a[n - 1][n - 1]);
}

Poly charpoly_cofactor(const SquareMatrix& M) {
  const RingSpec& spec = M.spec();
  const std::size_t n = M.size();
  Grid<Poly> g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Poly entry = Poly::constant(-M(i, j));
      if (i == j) entry += Poly::x(spec);
      g[i].push_back(std::move(entry));
    }
  }
  return cofactor_expand(g, Poly(spec));
}

SquareMatrix sylvester_matrix(const Poly& a, const Poly& b) {
  if (!a.degree() || !b.degree() || *a.degree() == 0 || *b.degree() == 0) {
    throw Error(ErrorKind::kPrecondition, "Sylvester matrix needs positive degrees");
  }
  const std::size_t n = *a.degree();
  const std::size_t m = *b.degree();
  const std::size_t size = n + m;
  SquareMatrix s(a.spec(), size);
  // Row r holds the coefficients of X^{size-1-r-shift}... written highest
  // degree first, shifted right by the row index within its block.
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k <= n; ++k) s.set(r, r + k, a.coeff(n - k));
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k <= m; ++k) s.set(m + r, r + k, b.coeff(m - k));
  }
  return s;
}

RingValue sylvester_resultant(const Poly& a, const Poly& b) {
  SquareMatrix s = sylvester_matrix(a, b);
  if (s.spec().kind() == RingKind::kIntegers) return det_bareiss(s);
  return det_cofactor(s);
}

RingValue product_at_roots(const Poly& f, std::span<const RingValue> roots) {
  RingValue acc = f.spec().one();
  for (const auto& a : roots) acc *= f(a);
  return acc;
}

bool unit_by_search(const RingValue& a) {
  const std::uint64_t size = ring_size(a.spec());
  for (std::uint64_t i = 0; i < size; ++i) {
    if ((a * element_at(a.spec(), i)).is_one()) return true;
  }
  return false;
}

RingValue evaluate_at(const MultiPoly& m, std::span<const RingValue> point) {
  if (point.size() != m.nvars()) throw Error(ErrorKind::kUsage, "evaluation point arity mismatch");
  RingValue acc = m.spec().zero();
  for (const auto& [mono, c] : m.terms()) {
    RingValue term = c;
    for (std::size_t i = 0; i < m.nvars(); ++i) term *= point[i].pow(mono[i]);
    acc += term;
  }
  return acc;
}

std::uint64_t count_coprime(std::uint64_t q, std::size_t n, std::span<const Poly> generators) {
  const RingSpec field = RingSpec::prime_field(mpz_class(static_cast<unsigned long>(q)));
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= q;
  const Poly one = Poly::constant(field.one());
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<RingValue> coeffs;
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < n; ++i) {
      coeffs.push_back(field.from_int(static_cast<long>(rest % q)));
      rest /= q;
    }
    coeffs.push_back(field.one());
    const Poly F(field, std::move(coeffs));
    bool coprime = true;
    for (const auto& g : generators) coprime = coprime && poly_gcd(F, g) == one;
    count += coprime;
  }
  return count;
}

}  // namespace symtensor::check
