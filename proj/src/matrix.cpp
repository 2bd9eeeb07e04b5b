#include "symtensor/matrix.hpp"

#include <algorithm>
#include <utility>

#include "symtensor/errors.hpp"

namespace symtensor {

SquareMatrix::SquareMatrix(RingSpec spec, std::size_t n)
    : spec_(std::move(spec)), n_(n) {
  if (n_ == 0) throw Error(ErrorKind::kPrecondition, "matrix size must be positive");
  entries_.assign(n_ * n_, spec_.zero());
}

SquareMatrix::SquareMatrix(RingSpec spec, std::size_t n, std::vector<RingValue> row_major)
    : spec_(std::move(spec)), n_(n), entries_(std::move(row_major)) {
  if (n_ == 0) throw Error(ErrorKind::kPrecondition, "matrix size must be positive");
  if (entries_.size() != n_ * n_) {
    throw Error(ErrorKind::kUsage, "matrix of size " + std::to_string(n_) + " needs " +
                                       std::to_string(n_ * n_) + " entries");
  }
  for (const auto& e : entries_) {
    if (!(e.spec() == spec_)) throw Error(ErrorKind::kUsage, "matrix entry outside " + spec_.to_string());
  }
}

SquareMatrix SquareMatrix::identity(const RingSpec& spec, std::size_t n) {
  return scalar(spec.one(), n);
}

SquareMatrix SquareMatrix::scalar(const RingValue& c, std::size_t n) {
  SquareMatrix m(c.spec(), n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = c;
  return m;
}

void SquareMatrix::set(std::size_t row, std::size_t col, RingValue value) {
  if (!(value.spec() == spec_)) throw Error(ErrorKind::kUsage, "matrix entry outside " + spec_.to_string());
  if (row >= n_ || col >= n_) throw Error(ErrorKind::kInvalidIndex, "matrix index out of range");
  entries_[row * n_ + col] = std::move(value);
}

bool SquareMatrix::is_zero() const noexcept {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

std::string SquareMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) out += ", ";
      out += (*this)(i, j).to_string();
    }
    out += "]";
  }
  return out + "]";
}

void SquareMatrix::check_compatible(const SquareMatrix& other) const {
  if (!(spec_ == other.spec_) || n_ != other.n_) {
    throw Error(ErrorKind::kUsage, "matrix shape or ring mismatch");
  }
}

SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
  a.check_compatible(b);
  SquareMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
  a.check_compatible(b);
  SquareMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  a.check_compatible(b);
  const std::size_t n = a.n_;
  SquareMatrix out(a.spec_, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const RingValue& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) out.entries_[i * n + j] += aik * b(k, j);
    }
  }
  return out;
}

SquareMatrix operator*(const RingValue& s, const SquareMatrix& a) {
  SquareMatrix out = a;
  for (auto& e : out.entries_) e = s * e;
  return out;
}

bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
  return a.spec_ == b.spec_ && a.n_ == b.n_ && a.entries_ == b.entries_;
}

SquareMatrix companion_matrix(const MonicPoly& F) {
  const RingSpec& spec = F.spec();
  const std::size_t n = F.degree();
  const Poly x = Poly::x(spec);
  SquareMatrix m(spec, n);
  for (std::size_t j = 0; j < n; ++j) {
    Poly column = poly_divmod(x * Poly::monomial(spec.one(), j), F).remainder;
    for (std::size_t i = 0; i < n; ++i) m.set(i, j, column.coeff(i));
  }
  return m;
}

SquareMatrix mult_matrix(const Poly& f, const MonicPoly& F) {
  if (!(f.spec() == F.spec())) {
    throw Error(ErrorKind::kUsage, "mult_matrix ring mismatch");
  }
  const RingSpec& spec = F.spec();
  const std::size_t n = F.degree();
  const Poly x = Poly::x(spec);
  SquareMatrix m(spec, n);
  Poly column = poly_divmod(f, F).remainder;
  for (std::size_t j = 0; j < n; ++j) {
    if (j > 0) column = poly_divmod(column * x, F).remainder;
    for (std::size_t i = 0; i < n; ++i) m.set(i, j, column.coeff(i));
  }
  return m;
}

MonicPoly char_poly(const SquareMatrix& M) {
  const RingSpec& spec = M.spec();
  const std::size_t n = M.size();

  // p holds the characteristic polynomial of the leading k x k block,
  // highest degree first. Each step multiplies by the Toeplitz matrix built
  // from q = (1, -a_kk, -R C, -R A C, ..., -R A^{k-1} C).
  std::vector<RingValue> p{spec.one()};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<RingValue> q;
    q.reserve(k + 2);
    q.push_back(spec.one());
    q.push_back(-M(k, k));
    std::vector<RingValue> v;
    v.reserve(k);
    for (std::size_t i = 0; i < k; ++i) v.push_back(M(i, k));
    for (std::size_t j = 0; j < k; ++j) {
      RingValue dot = spec.zero();
      for (std::size_t i = 0; i < k; ++i) dot += M(k, i) * v[i];
      q.push_back(-dot);
      if (j + 1 == k) break;
      std::vector<RingValue> next(k, spec.zero());
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) next[r] += M(r, c) * v[c];
      }
      v = std::move(next);
    }

    std::vector<RingValue> np(k + 2, spec.zero());
    for (std::size_t i = 0; i < k + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, k); ++j) np[i] += q[i - j] * p[j];
    }
    p = std::move(np);
  }

  std::vector<RingValue> ascending(p.rbegin(), p.rend());
  return MonicPoly(Poly(spec, std::move(ascending)));
}

RingValue det(const SquareMatrix& M) {
  RingValue c0 = char_poly(M).poly().coeff(0);
  return M.size() % 2 == 0 ? c0 : -c0;
}

SquareMatrix evaluate(const Poly& f, const SquareMatrix& M) {
  if (!(f.spec() == M.spec())) throw Error(ErrorKind::kUsage, "evaluate ring mismatch");
  SquareMatrix acc(M.spec(), M.size());
  auto c = f.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * M + SquareMatrix::scalar(c[i], M.size());
  }
  return acc;
}

}  // namespace symtensor
