#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace symtensor {

enum class RingKind {
  kIntegers,
  kRationals,
  kModM,
  kPrimeField,
  kPolyOver,
};

class RingValue;

namespace detail {
struct RingNode;
}

// A commutative ring from a fixed family. Cheap to copy; all copies share
// one immutable node. Tower rings (kPolyOver) are R[T] for a base ring R.
class RingSpec {
 public:
  static RingSpec integers();
  static RingSpec rationals();
  static RingSpec mod(const mpz_class& m);         // m >= 2
  static RingSpec prime_field(const mpz_class& p);  // p prime
  static RingSpec poly_over(const RingSpec& base, std::string variable);

  RingKind kind() const noexcept;
  // Modulus of kModM / kPrimeField; zero otherwise.
  const mpz_class& modulus() const noexcept;
  // Base ring and adjoined variable of kPolyOver.
  const RingSpec& base() const;
  const std::string& variable() const;

  bool is_field() const noexcept;
  bool is_domain() const noexcept;
  bool is_finite() const noexcept;

  RingValue zero() const;
  RingValue one() const;
  RingValue from_int(long value) const;
  RingValue from_integer(const mpz_class& value) const;
  // Adjoined variable T of a kPolyOver ring.
  RingValue generator() const;
  // Looks up a tower variable by name at any depth and embeds it here.
  std::optional<RingValue> tower_variable(std::string_view name) const;

  // Canonical text: ZZ, QQ, Zmod:m, GF:p, Poly:<ring>:<var>.
  std::string to_string() const;

  friend bool operator==(const RingSpec& a, const RingSpec& b) noexcept;

 private:
  explicit RingSpec(std::shared_ptr<const detail::RingNode> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const detail::RingNode> node_;
};

// Pieces needed to print a coefficient in front of a monomial.
struct CoeffText {
  bool negative = false;  // leading sign, printed by the caller
  std::string magnitude;  // text without the leading sign
  bool compound = false;  // a top-level sum; needs parentheses as a factor
};

// An element of a RingSpec, always held in canonical form: residues in
// [0, m), fractions in lowest terms, tower polynomials without trailing
// zero coefficients.
class RingValue {
 public:
  const RingSpec& spec() const noexcept { return spec_; }

  bool is_zero() const noexcept;
  bool is_one() const;

  // Integer payload of kIntegers, kModM and kPrimeField values.
  const mpz_class& integer() const;
  const mpq_class& rational() const;
  // Coefficients (in the base ring) of a tower value, low degree first.
  std::span<const RingValue> tower_coefficients() const;
  static RingValue from_tower_coefficients(const RingSpec& spec,
                                           std::vector<RingValue> coeffs);

  static RingValue from_rational(const RingSpec& spec, const mpq_class& q);

  RingValue pow(std::uint64_t exponent) const;

  std::string to_string() const;
  CoeffText text() const;

  RingValue& operator+=(const RingValue& rhs);
  RingValue& operator-=(const RingValue& rhs);
  RingValue& operator*=(const RingValue& rhs);

  friend RingValue operator+(RingValue a, const RingValue& b) { return a += b; }
  friend RingValue operator-(RingValue a, const RingValue& b) { return a -= b; }
  friend RingValue operator*(RingValue a, const RingValue& b) { return a *= b; }
  friend RingValue operator-(const RingValue& a);
  friend bool operator==(const RingValue& a, const RingValue& b);

 private:
  friend class RingSpec;
  using Payload = std::variant<mpz_class, mpq_class, std::vector<RingValue>>;

  RingValue(RingSpec spec, Payload payload)
      : spec_(std::move(spec)), payload_(std::move(payload)) {}

  void check_same_ring(const RingValue& other) const;

  RingSpec spec_;
  Payload payload_;
};

bool is_unit(const RingValue& a);
// Multiplicative inverse; throws kNotInvertible when a is not a unit.
RingValue inverse(const RingValue& a);

// Number of elements of a finite ring, and a fixed enumeration of them.
std::uint64_t ring_size(const RingSpec& spec);
RingValue element_at(const RingSpec& spec, std::uint64_t index);

}  // namespace symtensor
