#include "symtensor/norm.hpp"

#include <utility>

#include "symtensor/errors.hpp"

namespace symtensor {

EvalMap::EvalMap(MonicPoly F) : F_(std::move(F)), c_(F_.signed_coefficients()) {}

RingValue EvalMap::operator()(const SymElem& s) const {
  if (s.nvars() != arity()) {
    throw Error(ErrorKind::kUsage, "symmetric element of arity " + std::to_string(s.nvars()) +
                                       " evaluated at a degree-" + std::to_string(arity()) +
                                       " polynomial");
  }
  if (!(s.spec() == F_.spec())) throw Error(ErrorKind::kUsage, "eval_sym ring mismatch");
  const RingSpec& spec = F_.spec();
  RingValue acc = spec.zero();
  for (const auto& [mono, coeff] : s.terms()) {
    RingValue term = coeff;
    for (std::size_t i = 0; i < arity() && !term.is_zero(); ++i) {
      if (mono[i] > 0) term *= c_[i].pow(mono[i]);
    }
    acc += term;
  }
  return acc;
}

Poly EvalMap::operator()(const SymPolyX& t) const {
  std::vector<RingValue> coeffs;
  coeffs.reserve(t.coefficients().size());
  for (const auto& c : t.coefficients()) coeffs.push_back((*this)(c));
  return Poly(F_.spec(), std::move(coeffs));
}

MonicPoly charpoly_mult_symmetric(const Poly& f, const MonicPoly& F) {
  if (!(f.spec() == F.spec())) throw Error(ErrorKind::kUsage, "charpoly ring mismatch");
  EvalMap u(F);
  std::vector<RingValue> values;
  for (const auto& s : sym_ops_of(f, F.degree())) values.push_back(u(s));
  return MonicPoly::from_signed_coefficients(F.spec(), values);
}

RingValue norm_by_matrix(const Poly& f, const MonicPoly& F) { return det(mult_matrix(f, F)); }

RingValue norm_by_symmetric(const Poly& f, const MonicPoly& F) {
  if (!(f.spec() == F.spec())) throw Error(ErrorKind::kUsage, "norm ring mismatch");
  return EvalMap(F)(diagonal_tensor(f, F.degree()));
}

RingValue norm_checked(const Poly& f, const MonicPoly& F) {
  RingValue by_matrix = norm_by_matrix(f, F);
  RingValue by_symmetric = norm_by_symmetric(f, F);
  if (!(by_matrix == by_symmetric)) {
    throw Error(ErrorKind::kInvariantViolation,
                "norm routes disagree for f = " + f.to_string() + ", F = " + F.to_string() +
                    ": det gives " + by_matrix.to_string() + ", u_F gives " +
                    by_symmetric.to_string());
  }
  return by_matrix;
}

RingValue norm(const Poly& f, const MonicPoly& F) {
#ifdef NDEBUG
  return norm_by_matrix(f, F);
#else
  return norm_checked(f, F);
#endif
}

MultiPoly res_product(const RingSpec& spec, std::size_t p, std::size_t q) {
  if (p == 0 || q == 0) throw Error(ErrorKind::kPrecondition, "res(p, q) needs p, q >= 1");
  const std::size_t n = p + q;
  MultiPoly out = MultiPoly::constant(spec.one(), n);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      out *= MultiPoly::variable(spec, n, i) - MultiPoly::variable(spec, n, p + j);
    }
  }
  return out;
}

MultiPoly res_product(std::size_t p, std::size_t q) {
  return res_product(RingSpec::integers(), p, q);
}

Permutation block_swap(std::size_t p, std::size_t q) {
  std::vector<std::size_t> images(p + q);
  for (std::size_t i = 0; i < p; ++i) images[i] = q + i;
  for (std::size_t j = 0; j < q; ++j) images[p + j] = j;
  return Permutation(std::move(images));
}

ResultantSymmetry resultant_symmetry(const MonicPoly& P, const MonicPoly& Q) {
  const std::size_t p = P.degree();
  const std::size_t q = Q.degree();
  const int sign = (p * q) % 2 == 0 ? 1 : -1;
  RingValue npq = norm(Q.poly(), P);
  RingValue nqp = norm(P.poly(), Q);
  RingValue rhs = sign > 0 ? nqp : -nqp;
  const bool holds = npq == rhs;
  return {std::move(npq), std::move(nqp), sign, holds};
}

bool resultant_symmetry_check(const MonicPoly& P, const MonicPoly& Q) {
  return resultant_symmetry(P, Q).holds;
}

// ---------------------------------------------------------------------------
// RingHom

RingHom RingHom::identity(const RingSpec& spec) {
  return RingHom(HomRule::kIdentity, spec, spec, std::nullopt);
}

RingHom RingHom::reduce(const RingSpec& source, const RingSpec& target) {
  const bool target_ok = target.is_finite();
  bool ok = false;
  if (source.kind() == RingKind::kIntegers) {
    ok = target_ok;
  } else if (source.is_finite() && target_ok) {
    ok = mpz_divisible_p(source.modulus().get_mpz_t(), target.modulus().get_mpz_t()) != 0;
  }
  if (!ok) {
    throw Error(ErrorKind::kUsage, "no reduction homomorphism " + source.to_string() + " -> " +
                                       target.to_string());
  }
  return RingHom(HomRule::kReduce, source, target, std::nullopt);
}

RingHom RingHom::evaluate(const RingSpec& source, const RingValue& point) {
  if (source.kind() != RingKind::kPolyOver || !(point.spec() == source.base())) {
    throw Error(ErrorKind::kUsage, "evaluation homomorphism needs a tower ring and a point in its base");
  }
  return RingHom(HomRule::kEvaluate, source, source.base(), point);
}

std::string RingHom::to_string() const {
  switch (rule_) {
    case HomRule::kIdentity: return "id";
    case HomRule::kReduce: return source_.to_string() + " -> " + target_.to_string();
    case HomRule::kEvaluate:
      return source_.to_string() + " -> " + target_.to_string() + " by " + source_.variable() +
             " = " + point_->to_string();
  }
  return "?";
}

RingValue RingHom::operator()(const RingValue& a) const {
  if (!(a.spec() == source_)) {
    throw Error(ErrorKind::kUsage, "homomorphism " + to_string() + " inapplicable to " +
                                       a.spec().to_string());
  }
  switch (rule_) {
    case HomRule::kIdentity:
      return a;
    case HomRule::kReduce:
      return target_.from_integer(a.integer());
    case HomRule::kEvaluate: {
      RingValue acc = target_.zero();
      auto c = a.tower_coefficients();
      for (std::size_t i = c.size(); i-- > 0;) {
        acc *= *point_;
        acc += c[i];
      }
      return acc;
    }
  }
  return a;
}

Poly RingHom::operator()(const Poly& f) const {
  std::vector<RingValue> coeffs;
  coeffs.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) coeffs.push_back((*this)(c));
  return Poly(target_, std::move(coeffs));
}

bool PushedNorm::holds() const {
  if (!(image_of_norm == norm_of_image)) return false;
  for (const auto& [a, b] : operator_pairs) {
    if (!(a == b)) return false;
  }
  return true;
}

PushedNorm push_norm(const RingHom& phi, const Poly& f, const MonicPoly& F) {
  if (!(F.spec() == phi.source()) || !(f.spec() == phi.source())) {
    throw Error(ErrorKind::kUsage, "homomorphism " + phi.to_string() + " inapplicable to " +
                                       F.spec().to_string());
  }
  const MonicPoly F_phi(phi(F.poly()));
  const Poly f_phi = phi(f);
  PushedNorm out{phi(norm(f, F)), norm(f_phi, F_phi), {}};

  const EvalMap u(F);
  const EvalMap u_phi(F_phi);
  const auto s = sym_ops_of(f, F.degree());
  const auto s_phi = sym_ops_of(f_phi, F.degree());
  for (std::size_t i = 0; i < s.size(); ++i) {
    out.operator_pairs.emplace_back(phi(u(s[i])), u_phi(s_phi[i]));
  }
  return out;
}

}  // namespace symtensor
