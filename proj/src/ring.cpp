#include "symtensor/ring.hpp"

#include <algorithm>
#include <utility>

#include "render.hpp"
#include "symtensor/errors.hpp"

namespace symtensor {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kUsage: return "usage-error";
    case ErrorKind::kUnsupportedRing: return "unsupported-ring";
    case ErrorKind::kUnsupportedKind: return "unsupported-kind";
    case ErrorKind::kNotInvertible: return "not-invertible";
    case ErrorKind::kInvalidIndex: return "invalid-index";
    case ErrorKind::kPrecondition: return "precondition-error";
    case ErrorKind::kInvariantViolation: return "invariant-violation";
    case ErrorKind::kOracleInfeasible: return "oracle-infeasible";
    case ErrorKind::kEnumerationTooLarge: return "enumeration-too-large";
    case ErrorKind::kParse: return "parse-error";
  }
  return "error";
}

namespace detail {

struct RingNode {
  RingKind kind;
  mpz_class modulus;
  std::optional<RingSpec> base;
  std::string variable;
};

}  // namespace detail

namespace {

using Coeffs = std::vector<RingValue>;

void trim(Coeffs& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

}  // namespace

// ---------------------------------------------------------------------------
// RingSpec

RingSpec RingSpec::integers() {
  static const RingSpec spec(std::make_shared<const detail::RingNode>(
      detail::RingNode{RingKind::kIntegers, 0, std::nullopt, {}}));
  return spec;
}

RingSpec RingSpec::rationals() {
  static const RingSpec spec(std::make_shared<const detail::RingNode>(
      detail::RingNode{RingKind::kRationals, 0, std::nullopt, {}}));
  return spec;
}

RingSpec RingSpec::mod(const mpz_class& m) {
  if (m < 2) {
    throw Error(ErrorKind::kUsage, "Zmod requires modulus >= 2, got " + m.get_str());
  }
  return RingSpec(std::make_shared<const detail::RingNode>(
      detail::RingNode{RingKind::kModM, m, std::nullopt, {}}));
}

RingSpec RingSpec::prime_field(const mpz_class& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0) {
    throw Error(ErrorKind::kUsage, "GF requires a prime, got " + p.get_str());
  }
  return RingSpec(std::make_shared<const detail::RingNode>(
      detail::RingNode{RingKind::kPrimeField, p, std::nullopt, {}}));
}

RingSpec RingSpec::poly_over(const RingSpec& base, std::string variable) {
  if (variable.empty()) {
    throw Error(ErrorKind::kUsage, "tower variable name must be nonempty");
  }
  for (const RingSpec* r = &base; r->kind() == RingKind::kPolyOver; r = &r->base()) {
    if (r->variable() == variable) {
      throw Error(ErrorKind::kUsage, "tower variable '" + variable + "' used twice");
    }
  }
  return RingSpec(std::make_shared<const detail::RingNode>(
      detail::RingNode{RingKind::kPolyOver, 0, base, std::move(variable)}));
}

RingKind RingSpec::kind() const noexcept { return node_->kind; }

const mpz_class& RingSpec::modulus() const noexcept { return node_->modulus; }

const RingSpec& RingSpec::base() const {
  if (!node_->base) throw Error(ErrorKind::kUsage, to_string() + " has no base ring");
  return *node_->base;
}

const std::string& RingSpec::variable() const {
  if (kind() != RingKind::kPolyOver) {
    throw Error(ErrorKind::kUsage, to_string() + " has no adjoined variable");
  }
  return node_->variable;
}

bool RingSpec::is_field() const noexcept {
  switch (kind()) {
    case RingKind::kRationals:
    case RingKind::kPrimeField:
      return true;
    case RingKind::kModM:
      return mpz_probab_prime_p(modulus().get_mpz_t(), 40) != 0;
    default:
      return false;
  }
}

bool RingSpec::is_domain() const noexcept {
  switch (kind()) {
    case RingKind::kIntegers: return true;
    case RingKind::kPolyOver: return node_->base->is_domain();
    default: return is_field();
  }
}

bool RingSpec::is_finite() const noexcept {
  return kind() == RingKind::kModM || kind() == RingKind::kPrimeField;
}

RingValue RingSpec::zero() const { return from_int(0); }
RingValue RingSpec::one() const { return from_int(1); }
RingValue RingSpec::from_int(long value) const { return from_integer(mpz_class(value)); }

RingValue RingSpec::from_integer(const mpz_class& value) const {
  switch (kind()) {
    case RingKind::kIntegers:
      return RingValue(*this, value);
    case RingKind::kRationals:
      return RingValue(*this, mpq_class(value));
    case RingKind::kModM:
    case RingKind::kPrimeField: {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), modulus().get_mpz_t());
      return RingValue(*this, r);
    }
    case RingKind::kPolyOver: {
      Coeffs c{base().from_integer(value)};
      trim(c);
      return RingValue(*this, std::move(c));
    }
  }
  throw Error(ErrorKind::kUsage, "unknown ring kind");
}

RingValue RingSpec::generator() const {
  Coeffs c{base().zero(), base().one()};
  return RingValue(*this, std::move(c));
}

std::optional<RingValue> RingSpec::tower_variable(std::string_view name) const {
  if (kind() != RingKind::kPolyOver) return std::nullopt;
  if (variable() == name) return generator();
  auto inner = base().tower_variable(name);
  if (!inner) return std::nullopt;
  Coeffs c{*inner};
  trim(c);
  return RingValue(*this, std::move(c));
}

std::string RingSpec::to_string() const {
  switch (kind()) {
    case RingKind::kIntegers: return "ZZ";
    case RingKind::kRationals: return "QQ";
    case RingKind::kModM: return "Zmod:" + modulus().get_str();
    case RingKind::kPrimeField: return "GF:" + modulus().get_str();
    case RingKind::kPolyOver: return "Poly:" + base().to_string() + ":" + variable();
  }
  return "?";
}

bool operator==(const RingSpec& a, const RingSpec& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case RingKind::kIntegers:
    case RingKind::kRationals:
      return true;
    case RingKind::kModM:
    case RingKind::kPrimeField:
      return a.modulus() == b.modulus();
    case RingKind::kPolyOver:
      return a.node_->variable == b.node_->variable && *a.node_->base == *b.node_->base;
  }
  return false;
}

// ---------------------------------------------------------------------------
// RingValue

void RingValue::check_same_ring(const RingValue& other) const {
  if (!(spec_ == other.spec_)) {
    throw Error(ErrorKind::kUsage, "ring mismatch: " + spec_.to_string() + " vs " +
                                       other.spec_.to_string());
  }
}

bool RingValue::is_zero() const noexcept {
  switch (payload_.index()) {
    case 0: return sgn(std::get<0>(payload_)) == 0;
    case 1: return sgn(std::get<1>(payload_)) == 0;
    default: return std::get<2>(payload_).empty();
  }
}

bool RingValue::is_one() const { return *this == spec_.one(); }

const mpz_class& RingValue::integer() const {
  if (payload_.index() != 0) {
    throw Error(ErrorKind::kUsage, spec_.to_string() + " value has no integer payload");
  }
  return std::get<0>(payload_);
}

const mpq_class& RingValue::rational() const {
  if (payload_.index() != 1) {
    throw Error(ErrorKind::kUsage, spec_.to_string() + " value is not rational");
  }
  return std::get<1>(payload_);
}

std::span<const RingValue> RingValue::tower_coefficients() const {
  if (payload_.index() != 2) {
    throw Error(ErrorKind::kUsage, spec_.to_string() + " value is not a tower polynomial");
  }
  return std::get<2>(payload_);
}

RingValue RingValue::from_tower_coefficients(const RingSpec& spec, std::vector<RingValue> coeffs) {
  if (spec.kind() != RingKind::kPolyOver) {
    throw Error(ErrorKind::kUsage, spec.to_string() + " is not a polynomial tower");
  }
  for (const auto& c : coeffs) {
    if (!(c.spec() == spec.base())) {
      throw Error(ErrorKind::kUsage, "tower coefficient outside " + spec.base().to_string());
    }
  }
  trim(coeffs);
  return RingValue(spec, std::move(coeffs));
}

RingValue RingValue::from_rational(const RingSpec& spec, const mpq_class& q) {
  if (spec.kind() != RingKind::kRationals) {
    throw Error(ErrorKind::kUsage, "fractions need QQ, got " + spec.to_string());
  }
  mpq_class c = q;
  c.canonicalize();
  return RingValue(spec, c);
}

RingValue& RingValue::operator+=(const RingValue& rhs) {
  check_same_ring(rhs);
  switch (spec_.kind()) {
    case RingKind::kIntegers:
      std::get<0>(payload_) += std::get<0>(rhs.payload_);
      break;
    case RingKind::kRationals:
      std::get<1>(payload_) += std::get<1>(rhs.payload_);
      break;
    case RingKind::kModM:
    case RingKind::kPrimeField: {
      mpz_class& v = std::get<0>(payload_);
      v += std::get<0>(rhs.payload_);
      if (v >= spec_.modulus()) v -= spec_.modulus();
      break;
    }
    case RingKind::kPolyOver: {
      Coeffs& a = std::get<2>(payload_);
      const Coeffs& b = std::get<2>(rhs.payload_);
      if (a.size() < b.size()) a.resize(b.size(), spec_.base().zero());
      for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
      trim(a);
      break;
    }
  }
  return *this;
}

RingValue& RingValue::operator-=(const RingValue& rhs) { return *this += -rhs; }

RingValue& RingValue::operator*=(const RingValue& rhs) {
  check_same_ring(rhs);
  switch (spec_.kind()) {
    case RingKind::kIntegers:
      std::get<0>(payload_) *= std::get<0>(rhs.payload_);
      break;
    case RingKind::kRationals:
      std::get<1>(payload_) *= std::get<1>(rhs.payload_);
      break;
    case RingKind::kModM:
    case RingKind::kPrimeField: {
      mpz_class& v = std::get<0>(payload_);
      v *= std::get<0>(rhs.payload_);
      mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), spec_.modulus().get_mpz_t());
      break;
    }
    case RingKind::kPolyOver: {
      const Coeffs& a = std::get<2>(payload_);
      const Coeffs& b = std::get<2>(rhs.payload_);
      if (a.empty() || b.empty()) {
        payload_ = Coeffs{};
        break;
      }
      Coeffs out(a.size() + b.size() - 1, spec_.base().zero());
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
      }
      trim(out);
      payload_ = std::move(out);
      break;
    }
  }
  return *this;
}

RingValue operator-(const RingValue& a) {
  switch (a.spec_.kind()) {
    case RingKind::kIntegers:
      return RingValue(a.spec_, mpz_class(-std::get<0>(a.payload_)));
    case RingKind::kRationals:
      return RingValue(a.spec_, mpq_class(-std::get<1>(a.payload_)));
    case RingKind::kModM:
    case RingKind::kPrimeField: {
      const mpz_class& v = std::get<0>(a.payload_);
      return RingValue(a.spec_, sgn(v) == 0 ? mpz_class(0) : mpz_class(a.spec_.modulus() - v));
    }
    case RingKind::kPolyOver: {
      Coeffs c;
      c.reserve(std::get<2>(a.payload_).size());
      for (const auto& x : std::get<2>(a.payload_)) c.push_back(-x);
      return RingValue(a.spec_, std::move(c));
    }
  }
  return a;
}

bool operator==(const RingValue& a, const RingValue& b) {
  if (!(a.spec_ == b.spec_)) return false;
  return a.payload_ == b.payload_;
}

RingValue RingValue::pow(std::uint64_t exponent) const {
  RingValue result = spec_.one();
  RingValue base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

CoeffText RingValue::text() const {
  switch (spec_.kind()) {
    case RingKind::kIntegers: {
      const mpz_class& v = std::get<0>(payload_);
      return {sgn(v) < 0, mpz_class(abs(v)).get_str(), false};
    }
    case RingKind::kRationals: {
      const mpq_class& v = std::get<1>(payload_);
      return {sgn(v) < 0, mpq_class(abs(v)).get_str(), false};
    }
    case RingKind::kModM:
    case RingKind::kPrimeField:
      return {false, std::get<0>(payload_).get_str(), false};
    case RingKind::kPolyOver: {
      const Coeffs& c = std::get<2>(payload_);
      std::vector<detail::RenderTerm> terms;
      for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i].is_zero()) continue;
        terms.push_back({c[i].text(), detail::power_text(spec_.variable(), i)});
      }
      return detail::sum_text(terms);
    }
  }
  return {};
}

std::string RingValue::to_string() const {
  CoeffText t = text();
  return (t.negative ? "-" : "") + t.magnitude;
}

// ---------------------------------------------------------------------------
// Units

bool is_unit(const RingValue& a) {
  const RingSpec& spec = a.spec();
  switch (spec.kind()) {
    case RingKind::kIntegers:
      return abs(a.integer()) == 1;
    case RingKind::kRationals:
    case RingKind::kPrimeField:
      return !a.is_zero();
    case RingKind::kModM: {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), a.integer().get_mpz_t(), spec.modulus().get_mpz_t());
      return g == 1;
    }
    case RingKind::kPolyOver: {
      if (!spec.base().is_domain()) {
        throw Error(ErrorKind::kUnsupportedRing,
                    "unit detection in " + spec.to_string() + " needs an integral-domain base");
      }
      auto c = a.tower_coefficients();
      return c.size() == 1 && is_unit(c.front());
    }
  }
  return false;
}

RingValue inverse(const RingValue& a) {
  if (!is_unit(a)) {
    throw Error(ErrorKind::kNotInvertible, a.to_string() + " is not a unit in " +
                                               a.spec().to_string());
  }
  const RingSpec& spec = a.spec();
  switch (spec.kind()) {
    case RingKind::kIntegers:
      return a;
    case RingKind::kRationals:
      return RingValue::from_rational(spec, 1 / a.rational());
    case RingKind::kModM:
    case RingKind::kPrimeField: {
      mpz_class r;
      mpz_invert(r.get_mpz_t(), a.integer().get_mpz_t(), spec.modulus().get_mpz_t());
      return spec.from_integer(r);
    }
    case RingKind::kPolyOver:
      return RingValue::from_tower_coefficients(spec, {inverse(a.tower_coefficients().front())});
  }
  return a;
}

std::uint64_t ring_size(const RingSpec& spec) {
  if (!spec.is_finite()) {
    throw Error(ErrorKind::kUsage, spec.to_string() + " is not a finite ring");
  }
  if (!spec.modulus().fits_ulong_p()) {
    throw Error(ErrorKind::kEnumerationTooLarge, spec.to_string() + " is too large to enumerate");
  }
  return spec.modulus().get_ui();
}

RingValue element_at(const RingSpec& spec, std::uint64_t index) {
  if (index >= ring_size(spec)) {
    throw Error(ErrorKind::kInvalidIndex, "element index out of range");
  }
  return spec.from_integer(mpz_class(static_cast<unsigned long>(index)));
}

}  // namespace symtensor
