#include "symtensor/poly.hpp"

#include <algorithm>
#include <utility>

#include "render.hpp"
#include "symtensor/errors.hpp"

namespace symtensor {

namespace {

void trim(std::vector<RingValue>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

}  // namespace

Poly::Poly(RingSpec spec, std::vector<RingValue> coeffs)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!(c.spec() == spec_)) {
      throw Error(ErrorKind::kUsage, "coefficient in " + c.spec().to_string() +
                                         " for a polynomial over " + spec_.to_string());
    }
  }
  trim(coeffs_);
}

Poly Poly::constant(const RingValue& c) { return Poly(c.spec(), {c}); }

Poly Poly::monomial(const RingValue& c, std::size_t degree) {
  std::vector<RingValue> coeffs(degree + 1, c.spec().zero());
  coeffs[degree] = c;
  return Poly(c.spec(), std::move(coeffs));
}

Poly Poly::x(const RingSpec& spec) { return monomial(spec.one(), 1); }

std::optional<std::size_t> Poly::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

RingValue Poly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : spec_.zero();
}

const RingValue& Poly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorKind::kPrecondition, "zero polynomial has no leading term");
  return coeffs_.back();
}

RingValue Poly::operator()(const RingValue& at) const {
  RingValue acc = spec_.zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc *= at;
    acc += coeffs_[i];
  }
  return acc;
}

Poly Poly::pow(std::uint64_t exponent) const {
  Poly result = constant(spec_.one());
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

CoeffText Poly::text(std::string_view var) const {
  std::vector<detail::RenderTerm> terms;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    terms.push_back({coeffs_[i].text(), detail::power_text(var, i)});
  }
  return detail::sum_text(terms);
}

std::string Poly::to_string(std::string_view var) const {
  std::vector<detail::RenderTerm> terms;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    terms.push_back({coeffs_[i].text(), detail::power_text(var, i)});
  }
  return detail::render_sum(terms);
}

void Poly::check_same_ring(const Poly& other) const {
  if (!(spec_ == other.spec_)) {
    throw Error(ErrorKind::kUsage, "polynomial ring mismatch: " + spec_.to_string() + " vs " +
                                       other.spec_.to_string());
  }
}

Poly& Poly::operator+=(const Poly& rhs) {
  check_same_ring(rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), spec_.zero());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim(coeffs_);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) { return *this += -rhs; }

Poly& Poly::operator*=(const Poly& rhs) {
  check_same_ring(rhs);
  if (coeffs_.empty() || rhs.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<RingValue> out(coeffs_.size() + rhs.coeffs_.size() - 1, spec_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  trim(out);
  coeffs_ = std::move(out);
  return *this;
}

Poly& Poly::operator*=(const RingValue& scalar) {
  if (!(scalar.spec() == spec_)) {
    throw Error(ErrorKind::kUsage, "scalar outside " + spec_.to_string());
  }
  for (auto& c : coeffs_) c *= scalar;
  trim(coeffs_);
  return *this;
}

Poly operator-(const Poly& a) {
  Poly out(a.spec_);
  out.coeffs_.reserve(a.coeffs_.size());
  for (const auto& c : a.coeffs_) out.coeffs_.push_back(-c);
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  return a.spec_ == b.spec_ && a.coeffs_ == b.coeffs_;
}

// ---------------------------------------------------------------------------
// MonicPoly

MonicPoly::MonicPoly(Poly poly) : poly_(std::move(poly)) {
  auto deg = poly_.degree();
  if (!deg || *deg == 0) {
    throw Error(ErrorKind::kPrecondition,
                "monic polynomial needs positive degree: " + poly_.to_string());
  }
  if (!poly_.leading().is_one()) {
    throw Error(ErrorKind::kPrecondition, "polynomial is not monic: " + poly_.to_string());
  }
}

MonicPoly MonicPoly::from_signed_coefficients(const RingSpec& spec,
                                              std::span<const RingValue> c) {
  const std::size_t n = c.size();
  std::vector<RingValue> coeffs(n + 1, spec.zero());
  coeffs[n] = spec.one();
  for (std::size_t i = 1; i <= n; ++i) {
    coeffs[n - i] = (i % 2 == 0) ? c[i - 1] : -c[i - 1];
  }
  return MonicPoly(Poly(spec, std::move(coeffs)));
}

MonicPoly MonicPoly::from_roots(const RingSpec& spec, std::span<const RingValue> roots) {
  Poly p = Poly::constant(spec.one());
  for (const auto& a : roots) p *= Poly(spec, {-a, spec.one()});
  return MonicPoly(std::move(p));
}

std::vector<RingValue> MonicPoly::signed_coefficients() const {
  const std::size_t n = degree();
  std::vector<RingValue> c;
  c.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    RingValue a = poly_.coeff(n - i);
    c.push_back(i % 2 == 0 ? a : -a);
  }
  return c;
}

// ---------------------------------------------------------------------------
// Division

namespace {

DivMod divmod_by_unit_leading(const Poly& f, const Poly& g, const RingValue* lead_inverse) {
  const RingSpec& spec = f.spec();
  const std::size_t dg = *g.degree();
  if (!f.degree() || *f.degree() < dg) return {Poly(spec), f};

  std::vector<RingValue> rem(f.coefficients().begin(), f.coefficients().end());
  std::vector<RingValue> quot(rem.size() - dg, spec.zero());
  auto gc = g.coefficients();
  for (std::size_t k = rem.size(); k-- > dg;) {
    if (rem[k].is_zero()) continue;
    RingValue q = lead_inverse ? rem[k] * *lead_inverse : rem[k];
    quot[k - dg] = q;
    for (std::size_t j = 0; j <= dg; ++j) rem[k - dg + j] -= q * gc[j];
  }
  rem.resize(dg, spec.zero());
  return {Poly(spec, std::move(quot)), Poly(spec, std::move(rem))};
}

}  // namespace

DivMod poly_divmod(const Poly& f, const MonicPoly& g) {
  if (!(f.spec() == g.spec())) {
    throw Error(ErrorKind::kUsage, "divmod ring mismatch: " + f.spec().to_string() + " vs " +
                                       g.spec().to_string());
  }
  return divmod_by_unit_leading(f, g.poly(), nullptr);
}

DivMod poly_divmod(const Poly& f, const Poly& g) {
  if (!(f.spec() == g.spec())) {
    throw Error(ErrorKind::kUsage, "divmod ring mismatch: " + f.spec().to_string() + " vs " +
                                       g.spec().to_string());
  }
  if (g.is_zero()) throw Error(ErrorKind::kPrecondition, "division by the zero polynomial");
  RingValue inv = inverse(g.leading());
  return divmod_by_unit_leading(f, g, &inv);
}

ExtendedGcd extended_gcd(const Poly& a, const Poly& b) {
  const RingSpec& spec = a.spec();
  if (!spec.is_field()) {
    throw Error(ErrorKind::kUnsupportedRing,
                "extended Euclid needs a field base, got " + spec.to_string());
  }
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(spec.one()), s1(spec);
  Poly t0(spec), t1 = Poly::constant(spec.one());
  while (!r1.is_zero()) {
    DivMod qr = poly_divmod(r0, r1);
    r0 = std::exchange(r1, qr.remainder);
    s0 = std::exchange(s1, s0 - qr.quotient * s1);
    t0 = std::exchange(t1, t0 - qr.quotient * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  RingValue scale = inverse(r0.leading());
  return {r0 * scale, s0 * scale, t0 * scale};
}

Poly poly_gcd(const Poly& a, const Poly& b) { return extended_gcd(a, b).gcd; }

// ---------------------------------------------------------------------------
// QuotientElem

QuotientElem::QuotientElem(MonicPoly modulus, const Poly& f)
    : modulus_(std::move(modulus)), rep_(poly_divmod(f, modulus_).remainder) {}

bool QuotientElem::is_one() const { return rep_ == Poly::constant(rep_.spec().one()); }

QuotientElem operator*(const QuotientElem& a, const QuotientElem& b) {
  if (!(a.modulus_ == b.modulus_)) throw Error(ErrorKind::kUsage, "quotient modulus mismatch");
  return QuotientElem(a.modulus_, a.rep_ * b.rep_);
}

QuotientElem operator+(const QuotientElem& a, const QuotientElem& b) {
  if (!(a.modulus_ == b.modulus_)) throw Error(ErrorKind::kUsage, "quotient modulus mismatch");
  return QuotientElem(a.modulus_, a.rep_ + b.rep_);
}

QuotientElem invert_mod(const Poly& f, const MonicPoly& F) {
  if (!F.spec().is_field()) {
    throw Error(ErrorKind::kUnsupportedRing,
                "invert_mod needs a field base, got " + F.spec().to_string() +
                    "; use the unit-norm criterion instead");
  }
  ExtendedGcd eg = extended_gcd(f, F.poly());
  if (!(eg.gcd == Poly::constant(F.spec().one()))) {
    throw Error(ErrorKind::kNotInvertible,
                "gcd(" + f.to_string() + ", " + F.to_string() + ") = " + eg.gcd.to_string());
  }
  return QuotientElem(F, eg.s);
}

}  // namespace symtensor
