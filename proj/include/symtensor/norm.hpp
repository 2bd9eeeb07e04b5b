#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symtensor/matrix.hpp"
#include "symtensor/poly.hpp"
#include "symtensor/symmetric.hpp"

namespace symtensor {

// The A-algebra map from symmetric tensors of arity n = deg F to A sending
// e_i to the i-th signed coefficient c_i of F.
class EvalMap {
 public:
  explicit EvalMap(MonicPoly F);

  const MonicPoly& modulus() const noexcept { return F_; }
  std::size_t arity() const noexcept { return F_.degree(); }
  const std::vector<RingValue>& images() const noexcept { return c_; }

  RingValue operator()(const SymElem& s) const;
  // Applied coefficientwise in the outer variable.
  Poly operator()(const SymPolyX& t) const;

 private:
  MonicPoly F_;
  std::vector<RingValue> c_;
};

inline RingValue eval_sym(const EvalMap& u, const SymElem& s) { return u(s); }

// Characteristic polynomial of multiplication by f on A[X]/(F), read off
// the symmetric operators s_{i,n}(f) evaluated at F.
MonicPoly charpoly_mult_symmetric(const Poly& f, const MonicPoly& F);

// det of multiplication by f on A[X]/(F). Production route.
RingValue norm_by_matrix(const Poly& f, const MonicPoly& F);
// u_F(f (x) ... (x) f). Exponential in deg F through symmetric expansion.
RingValue norm_by_symmetric(const Poly& f, const MonicPoly& F);
// Both routes; throws kInvariantViolation if they disagree.
RingValue norm_checked(const Poly& f, const MonicPoly& F);
// The matrix route, cross-checked against the symmetric route in builds
// without NDEBUG.
RingValue norm(const Poly& f, const MonicPoly& F);

// prod_{i<=p} prod_{j<=q} (X_i - X_{p+j}) in p+q variables.
MultiPoly res_product(std::size_t p, std::size_t q);
MultiPoly res_product(const RingSpec& spec, std::size_t p, std::size_t q);

// The permutation moving the last q letters in front of the first p.
Permutation block_swap(std::size_t p, std::size_t q);

struct ResultantSymmetry {
  RingValue norm_p_of_q;  // N_P(Q)
  RingValue norm_q_of_p;  // N_Q(P)
  int sign;               // (-1)^{pq}
  bool holds;
};

ResultantSymmetry resultant_symmetry(const MonicPoly& P, const MonicPoly& Q);
// N_P(Q) == (-1)^{pq} N_Q(P)?
bool resultant_symmetry_check(const MonicPoly& P, const MonicPoly& Q);

enum class HomRule {
  kIdentity,
  kReduce,    // ZZ -> Zmod:m or GF:p, and Zmod:m -> Zmod:d or GF:d for d | m
  kEvaluate,  // Poly:R:T -> R by T -> t
};

// A ring homomorphism from a closed list of rules.
class RingHom {
 public:
  static RingHom identity(const RingSpec& spec);
  static RingHom reduce(const RingSpec& source, const RingSpec& target);
  static RingHom evaluate(const RingSpec& source, const RingValue& point);

  HomRule rule() const noexcept { return rule_; }
  const RingSpec& source() const noexcept { return source_; }
  const RingSpec& target() const noexcept { return target_; }
  std::string to_string() const;

  RingValue operator()(const RingValue& a) const;
  Poly operator()(const Poly& f) const;

 private:
  RingHom(HomRule rule, RingSpec source, RingSpec target, std::optional<RingValue> point)
      : rule_(rule), source_(std::move(source)), target_(std::move(target)),
        point_(std::move(point)) {}

  HomRule rule_;
  RingSpec source_;
  RingSpec target_;
  std::optional<RingValue> point_;
};

struct PushedNorm {
  RingValue image_of_norm;  // phi(N_F(f))
  RingValue norm_of_image;  // N_{F^phi}(f^phi)
  // (phi(u_F(s_{i,n}(f))), u_{F^phi}(s_{i,n}(f^phi))) for i = 1..n.
  std::vector<std::pair<RingValue, RingValue>> operator_pairs;

  bool holds() const;
};

// Base change of norms along phi.
PushedNorm push_norm(const RingHom& phi, const Poly& f, const MonicPoly& F);

}  // namespace symtensor
