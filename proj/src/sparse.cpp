#include "symtensor/sparse.hpp"

#include "render.hpp"

namespace symtensor {

Monomial Monomial::from_exponents(const std::vector<unsigned>& exponents) {
  if (exponents.size() > kMaxVars) {
    throw Error(ErrorKind::kUsage, "too many variables in exponent vector");
  }
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i) m = m.with(i, exponents[i]);
  return m;
}

Monomial Monomial::with(std::size_t var, unsigned exponent) const {
  if (var >= kMaxVars) throw Error(ErrorKind::kInvalidIndex, "variable index out of range");
  if (exponent > kMaxExponent) {
    throw Error(ErrorKind::kUsage, "exponent " + std::to_string(exponent) + " exceeds " +
                                       std::to_string(kMaxExponent));
  }
  Monomial out = *this;
  out.key_ &= ~(std::uint64_t{0xFF} << shift(var));
  out.key_ |= std::uint64_t{exponent} << shift(var);
  return out;
}

unsigned Monomial::total_degree() const noexcept {
  unsigned total = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) total += (*this)[i];
  return total;
}

std::vector<unsigned> Monomial::exponents(std::size_t nvars) const {
  std::vector<unsigned> out(nvars);
  for (std::size_t i = 0; i < nvars; ++i) out[i] = (*this)[i];
  return out;
}

Monomial operator*(Monomial a, Monomial b) {
  // Byte-wise carry test: any byte sum above 255 would spill over.
  for (std::size_t i = 0; i < Monomial::kMaxVars; ++i) {
    if (a[i] + b[i] > Monomial::kMaxExponent) {
      throw Error(ErrorKind::kUsage, "monomial exponent overflow");
    }
  }
  Monomial out;
  out.key_ = a.key_ + b.key_;
  return out;
}

namespace detail {

std::string render_sparse(const std::map<Monomial, RingValue, std::greater<>>& terms,
                          std::size_t nvars, std::string_view symbol, bool as_factor,
                          CoeffText* factor_out) {
  std::vector<RenderTerm> parts;
  parts.reserve(terms.size());
  for (const auto& [m, c] : terms) {
    std::string mono;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += power_text(std::string(symbol) + std::to_string(i + 1), m[i]);
    }
    parts.push_back({c.text(), std::move(mono)});
  }
  if (as_factor) {
    *factor_out = sum_text(parts);
    return {};
  }
  return render_sum(parts);
}

}  // namespace detail

}  // namespace symtensor
