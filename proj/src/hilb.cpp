#include "symtensor/hilb.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <utility>

#include "symtensor/errors.hpp"
#include "symtensor/norm.hpp"

namespace symtensor {

// ---------------------------------------------------------------------------
// MultSetSpec

MultSetSpec MultSetSpec::trivial() { return MultSetSpec(MultSetKind::kTrivial, {}, std::nullopt); }

MultSetSpec MultSetSpec::generated_by(std::vector<Poly> generators) {
  if (generators.empty()) throw Error(ErrorKind::kUsage, "gens: needs at least one generator");
  for (const auto& g : generators) {
    if (g.is_zero()) throw Error(ErrorKind::kPrecondition, "generators must be nonzero");
    if (!(g.spec() == generators.front().spec())) {
      throw Error(ErrorKind::kUsage, "generators over different rings");
    }
  }
  return MultSetSpec(MultSetKind::kFinGen, std::move(generators), std::nullopt);
}

MultSetSpec MultSetSpec::local_at(RingValue point) {
  return MultSetSpec(MultSetKind::kLocalAt, {}, std::move(point));
}

MultSetSpec MultSetSpec::all_nonzero() {
  return MultSetSpec(MultSetKind::kAllNonzero, {}, std::nullopt);
}

const RingValue& MultSetSpec::point() const {
  if (!point_) throw Error(ErrorKind::kUsage, "only local-at sets have a point");
  return *point_;
}

std::vector<SymElem> MultSetSpec::diagonal_power(std::size_t n) const {
  if (kind_ != MultSetKind::kFinGen) {
    throw Error(ErrorKind::kUnsupportedKind, "U(n) generators exist only for gens: sets");
  }
  std::vector<SymElem> out;
  for (const auto& g : generators_) out.push_back(diagonal_tensor(g, n));
  return out;
}

std::string MultSetSpec::to_string() const {
  switch (kind_) {
    case MultSetKind::kTrivial: return "trivial";
    case MultSetKind::kAllNonzero: return "all-nonzero";
    case MultSetKind::kLocalAt: return "local-at:" + point_->to_string();
    case MultSetKind::kFinGen: {
      std::string out = "gens:";
      for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (i) out += ",";
        out += generators_[i].to_string();
      }
      return out;
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Free quotients

namespace {

void check_generator_ring(const MonicPoly& F, const MultSetSpec& U) {
  for (const auto& g : U.generators()) {
    if (!(g.spec() == F.spec())) {
      throw Error(ErrorKind::kUsage, "generator over " + g.spec().to_string() +
                                         " for F over " + F.spec().to_string());
    }
  }
}

// Residue number `index` of A[X]/(F): base-m digits as coefficients.
Poly residue_at(const RingSpec& spec, std::size_t n, std::uint64_t index) {
  const std::uint64_t m = ring_size(spec);
  std::vector<RingValue> coeffs;
  coeffs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    coeffs.push_back(element_at(spec, index % m));
    index /= m;
  }
  return Poly(spec, std::move(coeffs));
}

std::optional<std::uint64_t> bounded_power(std::uint64_t base, std::size_t exponent,
                                           std::uint64_t limit) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (total > limit / base) return std::nullopt;
    total *= base;
  }
  return total;
}

}  // namespace

bool is_free_quotient(const MonicPoly& F, const MultSetSpec& U) {
  const RingSpec& spec = F.spec();
  switch (U.kind()) {
    case MultSetKind::kTrivial:
      return true;
    case MultSetKind::kFinGen:
      check_generator_ring(F, U);
      return std::all_of(U.generators().begin(), U.generators().end(),
                         [&](const Poly& g) { return is_unit(norm(g, F)); });
    case MultSetKind::kLocalAt: {
      if (!spec.is_field()) {
        throw Error(ErrorKind::kUnsupportedKind,
                    "local-at membership is only characterized over a field, not " + spec.to_string());
      }
      if (!(U.point().spec() == spec)) throw Error(ErrorKind::kUsage, "local-at point outside " + spec.to_string());
      const Poly linear(spec, {-U.point(), spec.one()});
      return F.poly() == linear.pow(F.degree());
    }
    case MultSetKind::kAllNonzero:
      if (!spec.is_domain()) {
        throw Error(ErrorKind::kUnsupportedKind, "all-nonzero needs an integral domain, not " + spec.to_string());
      }
      // F itself lies in U and has norm zero.
      return false;
  }
  return false;
}

bool free_quotient_oracle(const MonicPoly& F, const MultSetSpec& U) {
  const RingSpec& spec = F.spec();
  if (!spec.is_finite()) {
    throw Error(ErrorKind::kOracleInfeasible, "exhaustive search needs a finite base, not " + spec.to_string());
  }
  if (U.kind() == MultSetKind::kTrivial) return true;
  if (U.kind() != MultSetKind::kFinGen) {
    throw Error(ErrorKind::kUnsupportedKind, "exhaustive search needs a gens: set");
  }
  check_generator_ring(F, U);
  const std::size_t n = F.degree();
  const auto residues = bounded_power(ring_size(spec), n, kOracleSearchLimit);
  if (!residues) {
    throw Error(ErrorKind::kOracleInfeasible,
                "A[X]/(F) has more than " + std::to_string(kOracleSearchLimit) + " residues");
  }
  for (const auto& g : U.generators()) {
    const QuotientElem target(F, g);
    bool found = false;
    for (std::uint64_t idx = 0; idx < *residues && !found; ++idx) {
      found = (target * QuotientElem(F, residue_at(spec, n, idx))).is_one();
    }
    if (!found) return false;
  }
  return true;
}

MonicPoly recover_monic(const SquareMatrix& theta) {
  MonicPoly F = char_poly(theta);
  if (!evaluate(F.poly(), theta).is_zero()) {
    throw Error(ErrorKind::kInvariantViolation,
                "characteristic polynomial " + F.to_string() + " does not annihilate the matrix");
  }
  return F;
}

// ---------------------------------------------------------------------------
// Addition map and its section

namespace {

// The A-algebra map on e-basis expressions fixed by generator images.
SymPolyX substitute(const SymElem& s, const std::vector<SymPolyX>& images,
                    const RingSpec& spec, std::size_t target_arity) {
  std::vector<std::vector<SymPolyX>> powers(images.size());
  auto power = [&](std::size_t i, unsigned k) -> const SymPolyX& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(SymPolyX::constant(SymElem::constant(spec.one(), target_arity)));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  SymPolyX out(spec, target_arity);
  for (const auto& [mono, c] : s.terms()) {
    SymPolyX term = SymPolyX::constant(SymElem::constant(c, target_arity));
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (mono[i] > 0) term *= power(i, mono[i]);
    }
    out += term;
  }
  return out;
}

SymPolyX shift_by_x(const SymPolyX& t, std::size_t k) {
  if (t.is_zero() || k == 0) return t;
  std::vector<SymElem> coeffs(k, SymElem(t.spec(), t.arity()));
  coeffs.insert(coeffs.end(), t.coefficients().begin(), t.coefficients().end());
  return SymPolyX(t.spec(), t.arity(), std::move(coeffs));
}

std::vector<SymPolyX> addition_images(const RingSpec& spec, std::size_t n) {
  const std::size_t m = n - 1;
  const SymPolyX x = SymPolyX::x(spec, m);
  std::vector<SymPolyX> images;
  for (std::size_t i = 1; i <= n; ++i) {
    images.push_back(SymPolyX::constant(sym_generator(spec, i, m)) +
                     SymPolyX::constant(sym_generator(spec, i - 1, m)) * x);
  }
  return images;
}

std::vector<SymPolyX> section_images(const RingSpec& spec, std::size_t n) {
  const SymPolyX x = SymPolyX::x(spec, n);
  std::vector<SymPolyX> images;
  SymPolyX previous = SymPolyX::constant(SymElem::constant(spec.one(), n));  // p_n(1)
  for (std::size_t i = 1; i + 1 <= n; ++i) {
    previous = SymPolyX::constant(sym_generator(spec, i, n)) - previous * x;
    images.push_back(previous);
  }
  return images;
}

}  // namespace

SymPolyX addition_map(const SymElem& s) {
  const std::size_t n = s.nvars();
  if (n == 0) throw Error(ErrorKind::kPrecondition, "addition map needs arity n >= 1");
  return substitute(s, addition_images(s.spec(), n), s.spec(), n - 1);
}

SymPolyX addition_map(const SymPolyX& t) {
  const std::size_t n = t.arity();
  if (n == 0) throw Error(ErrorKind::kPrecondition, "addition map needs arity n >= 1");
  const auto images = addition_images(t.spec(), n);
  SymPolyX out(t.spec(), n - 1);
  for (std::size_t k = 0; k < t.coefficients().size(); ++k) {
    out += shift_by_x(substitute(t.coefficients()[k], images, t.spec(), n - 1), k);
  }
  return out;
}

SymPolyX section_map(const SymPolyX& t, std::size_t n) {
  if (n == 0 || t.arity() + 1 != n) {
    throw Error(ErrorKind::kUsage, "section map p_n needs an element of arity n-1");
  }
  const auto images = section_images(t.spec(), n);
  SymPolyX out(t.spec(), n);
  for (std::size_t k = 0; k < t.coefficients().size(); ++k) {
    out += shift_by_x(substitute(t.coefficients()[k], images, t.spec(), n), k);
  }
  return out;
}

SymPolyX reduce_mod_delta(const SymPolyX& t) {
  const std::size_t n = t.arity();
  if (n == 0) throw Error(ErrorKind::kPrecondition, "Delta_{n,X} needs n >= 1");
  const SymPolyX d = delta(Poly::x(t.spec()), n);
  std::vector<SymElem> rem = t.coefficients();
  const auto& dc = d.coefficients();
  for (std::size_t k = rem.size(); k-- > n;) {
    if (rem[k].is_zero()) continue;
    const SymElem q = rem[k];
    for (std::size_t j = 0; j <= n; ++j) rem[k - n + j] -= q * dc[j];
  }
  if (rem.size() > n) rem.resize(n, SymElem(t.spec(), n));
  return SymPolyX(t.spec(), n, std::move(rem));
}

bool section_inverts_addition(const SymElem& s) {
  const std::size_t n = s.nvars();
  const SymPolyX round_trip = section_map(addition_map(s), n);
  return reduce_mod_delta(round_trip) == reduce_mod_delta(SymPolyX::constant(s));
}

bool addition_inverts_section(const SymPolyX& t, std::size_t n) {
  return addition_map(section_map(t, n)) == t;
}

bool addition_kernel_check(std::size_t n) {
  const RingSpec zz = RingSpec::integers();
  return addition_map(delta(Poly::x(zz), n)).is_zero();
}

bool addition_diagonal_check(const Poly& f, std::size_t n) {
  if (n < 2) throw Error(ErrorKind::kPrecondition, "addition_diagonal_check needs n >= 2");
  const RingSpec& spec = f.spec();
  const SymPolyX f_outer = SymPolyX::lift(f, n - 1);

  const SymPolyX lhs = addition_map(diagonal_tensor(f, n));
  const SymPolyX rhs = SymPolyX::constant(diagonal_tensor(f, n - 1)) * f_outer;
  if (!(lhs == rhs)) return false;

  const auto s_n = sym_ops_of(f, n);
  const auto s_m = sym_ops_of(f, n - 1);
  auto lower = [&](std::size_t i) {
    if (i == 0) return SymPolyX::constant(SymElem::constant(spec.one(), n - 1));
    if (i > n - 1) return SymPolyX(spec, n - 1);
    return SymPolyX::constant(s_m[i - 1]);
  };
  for (std::size_t i = 1; i <= n; ++i) {
    if (!(addition_map(s_n[i - 1]) == lower(i) + lower(i - 1) * f_outer)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Point counts

std::uint64_t count_points(std::uint64_t q, std::size_t n, const MultSetSpec& U,
                           unsigned threads) {
  const RingSpec field = RingSpec::prime_field(mpz_class(static_cast<unsigned long>(q)));
  if (n == 0) throw Error(ErrorKind::kPrecondition, "count_points needs n >= 1");
  const auto total = bounded_power(q, n, kCountLimit);
  if (!total) {
    throw Error(ErrorKind::kEnumerationTooLarge,
                "more than " + std::to_string(kCountLimit) + " monic polynomials to enumerate");
  }
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(*total)));

  auto count_range = [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t count = 0;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      Poly low = residue_at(field, n, idx);
      MonicPoly F(low + Poly::monomial(field.one(), n));
      if (is_free_quotient(F, U)) ++count;
    }
    return count;
  };

  if (threads == 1) return count_range(0, *total);

  std::vector<std::uint64_t> partial(threads, 0);
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> workers;
  const std::uint64_t chunk = (*total + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t begin = std::min<std::uint64_t>(*total, t * chunk);
    const std::uint64_t end = std::min<std::uint64_t>(*total, begin + chunk);
    workers.emplace_back([&, t, begin, end] {
      try {
        partial[t] = count_range(begin, end);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::uint64_t sum = 0;
  for (auto c : partial) sum += c;
  return sum;
}

}  // namespace symtensor
