#include "symtensor/check/properties.hpp"

#include <sstream>

#include "symtensor/check/oracles.hpp"
#include "symtensor/errors.hpp"
#include "symtensor/norm.hpp"

namespace symtensor::check {

void CheckReport::run(const std::function<bool()>& body,
                      const std::function<std::string()>& describe) {
  ++trials;
  std::string problem;
  try {
    if (body()) return;
    problem = describe();
  } catch (const Error& e) {
    problem = describe() + " threw " + std::string(e.name()) + ": " + e.what();
  }
  if (failures++ == 0) first_failure = problem;
}

void CheckReport::absorb(const CheckReport& other) {
  trials += other.trials;
  if (failures == 0 && other.failures > 0) {
    first_failure = other.name.empty() ? other.first_failure : other.name + ": " + other.first_failure;
  }
  failures += other.failures;
}

std::string CheckReport::summary() const {
  std::ostringstream out;
  out << (passed() ? "PASS" : "FAIL") << " " << name << " (" << trials << " cases, " << failures
      << " failures)";
  if (failures > 0) out << " first: " << first_failure;
  return out.str();
}

CheckReport combine(std::string name, const std::vector<CheckReport>& parts) {
  CheckReport out{std::move(name)};
  for (const auto& p : parts) out.absorb(p);
  return out;
}

namespace {

std::string pair_text(const Poly& f, const MonicPoly& F) {
  return "f = " + f.to_string() + ", F = " + F.to_string() + " over " + F.spec().to_string();
}

RingSpec zmod(long m) { return RingSpec::mod(mpz_class(m)); }

}  // namespace

CheckReport charpoly_routes(Gen& gen, const RingSpec& spec, std::size_t pairs,
                            std::size_t max_deg_F, std::size_t max_deg_f, long bound) {
  CheckReport report{"charpoly-routes " + spec.to_string()};
  for (std::size_t k = 0; k < pairs; ++k) {
    const MonicPoly F = gen.monic(spec, 1, max_deg_F, bound);
    const Poly f = gen.poly(spec, max_deg_f, bound);
    report.run([&] { return charpoly_mult_symmetric(f, F) == char_poly(mult_matrix(f, F)); },
               [&] { return pair_text(f, F); });
  }
  return report;
}

CheckReport resultant_symmetry_suite(Gen& gen, std::size_t pairs, std::size_t max_deg,
                                     long bound) {
  const RingSpec zz = RingSpec::integers();
  CheckReport report{"resultant-symmetry"};
  for (std::size_t k = 0; k < pairs; ++k) {
    const MonicPoly P = gen.monic(zz, 1, max_deg, bound);
    const MonicPoly Q = gen.monic(zz, 1, max_deg, bound);
    report.run(
        [&] {
          const ResultantSymmetry r = resultant_symmetry(P, Q);
          return r.holds && r.norm_p_of_q == sylvester_resultant(P.poly(), Q.poly()) &&
                 r.norm_q_of_p == sylvester_resultant(Q.poly(), P.poly());
        },
        [&] { return "P = " + P.to_string() + ", Q = " + Q.to_string(); });
  }
  return report;
}

CheckReport base_change_suite(Gen& gen, std::size_t pairs, const std::vector<long>& moduli,
                              std::size_t max_deg, long bound) {
  const RingSpec zz = RingSpec::integers();
  CheckReport report{"base-change"};
  for (std::size_t k = 0; k < pairs; ++k) {
    const MonicPoly F = gen.monic(zz, 1, max_deg, bound);
    const Poly f = gen.poly(zz, max_deg, bound);
    for (long m : moduli) {
      const RingHom phi = RingHom::reduce(zz, zmod(m));
      report.run([&] { return push_norm(phi, f, F).holds(); },
                 [&] { return pair_text(f, F) + " -> Zmod:" + std::to_string(m); });
    }
  }
  return report;
}

CheckReport tower_evaluation_suite(Gen& gen, std::size_t pairs) {
  const RingSpec zz = RingSpec::integers();
  const RingSpec tower = RingSpec::poly_over(zz, "T");
  CheckReport report{"tower-evaluation"};
  for (std::size_t k = 0; k < pairs; ++k) {
    const MonicPoly F = gen.monic(tower, 1, 3, 5);
    const Poly f = gen.poly(tower, 3, 5);
    const RingHom phi = RingHom::evaluate(tower, gen.value(zz, 5));
    report.run([&] { return push_norm(phi, f, F).holds(); },
               [&] { return pair_text(f, F) + " along " + phi.to_string(); });
  }
  return report;
}

CheckReport free_quotient_agreement(const RingSpec& finite_spec, std::size_t max_deg_F,
                                    std::size_t max_deg_g) {
  CheckReport report{"free-quotient-agreement " + finite_spec.to_string()};
  const std::uint64_t m = ring_size(finite_spec);
  auto poly_at = [&](std::size_t len, std::uint64_t idx) {
    std::vector<RingValue> c;
    for (std::size_t i = 0; i < len; ++i) {
      c.push_back(element_at(finite_spec, idx % m));
      idx /= m;
    }
    return Poly(finite_spec, std::move(c));
  };
  std::uint64_t g_count = 1;
  for (std::size_t i = 0; i <= max_deg_g; ++i) g_count *= m;
  std::vector<Poly> generators;
  for (std::uint64_t idx = 1; idx < g_count; ++idx) generators.push_back(poly_at(max_deg_g + 1, idx));

  for (std::size_t n = 1; n <= max_deg_F; ++n) {
    std::uint64_t f_count = 1;
    for (std::size_t i = 0; i < n; ++i) f_count *= m;
    for (std::uint64_t idx = 0; idx < f_count; ++idx) {
      const MonicPoly F(poly_at(n, idx) + Poly::monomial(finite_spec.one(), n));
      for (const auto& g : generators) {
        const MultSetSpec U = MultSetSpec::generated_by({g});
        report.run([&] { return is_free_quotient(F, U) == free_quotient_oracle(F, U); },
                   [&] { return pair_text(g, F); });
      }
    }
  }
  return report;
}

CheckReport recover_suite(Gen& gen, const RingSpec& spec, std::size_t trials, std::size_t max_n) {
  CheckReport report{"recover-monic " + spec.to_string()};
  for (std::size_t k = 0; k < trials; ++k) {
    const MonicPoly F = gen.monic(spec, 1, max_n);
    const auto [S, S_inv] = gen.invertible(spec, F.degree());
    const SquareMatrix theta = S * companion_matrix(F) * S_inv;
    report.run([&] { return recover_monic(theta) == F && evaluate(F.poly(), theta).is_zero(); },
               [&] { return "F = " + F.to_string() + ", theta = " + theta.to_string(); });
  }
  return report;
}

CheckReport section_suite(Gen& gen, std::size_t max_n, std::size_t random_per_n) {
  const RingSpec zz = RingSpec::integers();
  CheckReport report{"section-identities"};
  for (std::size_t n = 1; n <= max_n; ++n) {
    const std::string tag = " (n = " + std::to_string(n) + ")";
    for (std::size_t i = 1; i <= n; ++i) {
      const SymElem s = sym_generator(zz, i, n);
      report.run([&] { return section_inverts_addition(s); },
                 [&] { return "p(a(" + s.to_string() + "))" + tag; });
    }
    for (std::size_t i = 1; i < n; ++i) {
      const SymPolyX t = SymPolyX::constant(sym_generator(zz, i, n - 1));
      report.run([&] { return addition_inverts_section(t, n); },
                 [&] { return "a(p(" + t.to_string() + "))" + tag; });
    }
    const SymPolyX x = SymPolyX::x(zz, n - 1);
    report.run([&] { return addition_inverts_section(x, n); },
               [&] { return "a(p(X))" + tag; });
    for (std::size_t k = 0; k < random_per_n; ++k) {
      const SymElem s = gen.sym_elem(zz, n, 3);
      report.run([&] { return section_inverts_addition(s); },
                 [&] { return "p(a(" + s.to_string() + "))" + tag; });
      const SymPolyX t = gen.sym_poly_x(zz, n - 1, 2, 2);
      report.run([&] { return addition_inverts_section(t, n); },
                 [&] { return "a(p(" + t.to_string() + "))" + tag; });
    }
    report.run([&] { return addition_kernel_check(n); }, [&] { return "a(Delta)" + tag; });
  }
  return report;
}

CheckReport diagonal_suite(Gen& gen, std::size_t trials, const std::vector<std::size_t>& ns,
                           std::size_t max_deg) {
  const RingSpec zz = RingSpec::integers();
  CheckReport report{"addition-diagonal"};
  for (std::size_t k = 0; k < trials; ++k) {
    const Poly f = gen.poly(zz, max_deg);
    for (std::size_t n : ns) {
      report.run([&] { return addition_diagonal_check(f, n); },
                 [&] { return "f = " + f.to_string() + ", n = " + std::to_string(n); });
    }
  }
  return report;
}

CheckReport affine_count_suite(const std::vector<std::uint64_t>& qs,
                               const std::vector<std::size_t>& ns) {
  CheckReport report{"affine-count"};
  for (auto q : qs) {
    for (auto n : ns) {
      std::uint64_t expected = 1;
      for (std::size_t i = 0; i < n; ++i) expected *= q;
      report.run([&] { return count_points(q, n, MultSetSpec::trivial()) == expected; },
                 [&] { return "q = " + std::to_string(q) + ", n = " + std::to_string(n); });
    }
  }
  return report;
}

CheckReport local_and_generic_count_suite(const std::vector<std::uint64_t>& qs,
                                          const std::vector<std::size_t>& ns) {
  CheckReport report{"local-and-generic-count"};
  for (auto q : qs) {
    const RingSpec field = RingSpec::prime_field(mpz_class(static_cast<unsigned long>(q)));
    for (auto n : ns) {
      const std::string tag = "q = " + std::to_string(q) + ", n = " + std::to_string(n);
      report.run([&] { return count_points(q, n, MultSetSpec::local_at(field.zero())) == 1; },
                 [&] { return "local-at:0, " + tag; });
      report.run([&] { return count_points(q, n, MultSetSpec::all_nonzero()) == 0; },
                 [&] { return "all-nonzero, " + tag; });
    }
  }
  return report;
}

CheckReport spectral_suite(Gen& gen, const RingSpec& spec, std::size_t trials, std::size_t max_n) {
  CheckReport report{"spectral-mapping " + spec.to_string()};
  for (std::size_t k = 0; k < trials; ++k) {
    const auto roots = gen.values(spec, gen.index(1, max_n), 5);
    const MonicPoly F = MonicPoly::from_roots(spec, roots);
    const Poly f = gen.poly(spec, 3, 5);
    const auto [S, S_inv] = gen.invertible(spec, F.degree());
    const SquareMatrix M = S * companion_matrix(F) * S_inv;
    report.run(
        [&] {
          std::vector<RingValue> images;
          for (const auto& a : roots) images.push_back(f(a));
          return char_poly(evaluate(f, M)) == MonicPoly::from_roots(spec, images);
        },
        [&] { return pair_text(f, F); });
  }
  return report;
}

CheckReport round_trip_suite(Gen& gen, std::size_t trials, std::size_t max_n,
                             std::size_t max_total) {
  const RingSpec zz = RingSpec::integers();
  CheckReport report{"symmetric-round-trip"};
  for (std::size_t k = 0; k < trials; ++k) {
    const SymElem s = gen.sym_elem(zz, gen.index(1, max_n), max_total);
    report.run([&] { return decompose(expand(s)) == s; },
               [&] { return "s = " + s.to_string() + " (n = " + std::to_string(s.nvars()) + ")"; });
  }
  return report;
}

CheckReport ring_axioms_suite(Gen& gen, const RingSpec& spec, std::size_t trials) {
  CheckReport report{"ring-axioms " + spec.to_string()};
  const bool units_decidable = spec.kind() != RingKind::kPolyOver || spec.base().is_domain();
  for (std::size_t k = 0; k < trials; ++k) {
    const RingValue a = gen.value(spec), b = gen.value(spec), c = gen.value(spec);
    report.run(
        [&] {
          return a + b == b + a && a * b == b * a && (a + b) + c == a + (b + c) &&
                 (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
                 a + spec.zero() == a && a * spec.one() == a && a + (-a) == spec.zero() &&
                 (!units_decidable || !is_unit(a) || a * inverse(a) == spec.one());
        },
        [&] { return "a = " + a.to_string() + ", b = " + b.to_string() + ", c = " + c.to_string(); });
  }
  return report;
}

CheckReport cayley_hamilton_suite(Gen& gen, const RingSpec& spec, std::size_t trials,
                                  std::size_t max_n) {
  CheckReport report{"cayley-hamilton " + spec.to_string()};
  for (std::size_t k = 0; k < trials; ++k) {
    const SquareMatrix M = gen.matrix(spec, gen.index(1, max_n));
    report.run(
        [&] {
          const MonicPoly chi = char_poly(M);
          return evaluate(chi.poly(), M).is_zero() && chi.poly() == charpoly_cofactor(M) &&
                 det(M) == det_leibniz(M);
        },
        [&] { return "M = " + M.to_string(); });
  }
  return report;
}

CheckReport norm_identities_suite(Gen& gen, const RingSpec& spec, std::size_t trials) {
  CheckReport report{"norm-identities " + spec.to_string()};
  for (std::size_t k = 0; k < trials; ++k) {
    const auto roots = gen.values(spec, gen.index(1, 4), 5);
    const MonicPoly F = MonicPoly::from_roots(spec, roots);
    const Poly f = gen.poly(spec, 3, 5);
    const Poly g = gen.poly(spec, 3, 5);
    report.run(
        [&] {
          const RingValue sign = F.degree() % 2 == 0 ? spec.one() : -spec.one();
          return norm_checked(f * g, F) == norm_checked(f, F) * norm_checked(g, F) &&
                 norm_checked(Poly::x(spec), F) == sign * F.poly().coeff(0) &&
                 norm_checked(f, F) == product_at_roots(f, roots);
        },
        [&] { return pair_text(f, F) + ", g = " + g.to_string(); });
  }
  return report;
}

CheckReport coprimality_suite(Gen& gen, std::uint64_t p, std::size_t trials) {
  const RingSpec field = RingSpec::prime_field(mpz_class(static_cast<unsigned long>(p)));
  const Poly one = Poly::constant(field.one());
  CheckReport report{"resultant-coprimality " + field.to_string()};
  for (std::size_t k = 0; k < trials; ++k) {
    const MonicPoly F = gen.monic(field, 1, 4);
    const Poly f = gen.poly(field, 3);
    report.run([&] { return norm_checked(f, F).is_zero() != (poly_gcd(F.poly(), f) == one); },
               [&] { return pair_text(f, F); });
  }
  return report;
}

CheckReport delta_product_suite(Gen& gen, std::size_t trials, std::size_t max_n) {
  const RingSpec zz = RingSpec::integers();
  CheckReport report{"delta-product"};
  for (std::size_t k = 0; k < trials; ++k) {
    const std::size_t n = gen.index(1, max_n);
    const Poly f = gen.poly(zz, 3, 4);
    const auto point = gen.values(zz, n, 4);
    report.run(
        [&] {
          std::vector<RingValue> images;
          for (const auto& a : point) images.push_back(f(a));
          const Poly expected = MonicPoly::from_roots(zz, images).poly();
          const auto coeffs = expand_coefficients(delta(f, n));
          if (coeffs.size() != n + 1) return false;
          for (std::size_t i = 0; i <= n; ++i) {
            if (!(evaluate_at(coeffs[i], point) == expected.coeff(i))) return false;
          }
          return true;
        },
        [&] { return "f = " + f.to_string() + ", n = " + std::to_string(n); });
  }
  return report;
}

CheckReport sym_ops_specialization_suite(Gen& gen, std::size_t trials, std::size_t max_n) {
  const RingSpec zz = RingSpec::integers();
  CheckReport report{"sym-ops-specialization"};
  for (std::size_t k = 0; k < trials; ++k) {
    const auto roots = gen.values(zz, gen.index(1, max_n), 4);
    const MonicPoly F = MonicPoly::from_roots(zz, roots);
    const Poly f = gen.poly(zz, 3, 4);
    report.run(
        [&] {
          std::vector<RingValue> images;
          for (const auto& a : roots) images.push_back(f(a));
          return charpoly_mult_symmetric(f, F) == MonicPoly::from_roots(zz, images);
        },
        [&] { return pair_text(f, F); });
  }
  return report;
}

CheckReport permutation_suite(Gen& gen, std::size_t trials) {
  const RingSpec zz = RingSpec::integers();
  CheckReport report{"permutation-action"};
  for (std::size_t k = 0; k < trials; ++k) {
    const std::size_t n = gen.index(1, 4);
    const Permutation p = gen.permutation(n), q = gen.permutation(n);
    MultiPoly m(zz, n);
    for (int t = 0; t < 4; ++t) {
      std::vector<unsigned> exps;
      for (std::size_t i = 0; i < n; ++i) exps.push_back(static_cast<unsigned>(gen.index(0, 3)));
      m.add_term(Monomial::from_exponents(exps), gen.value(zz));
    }
    report.run(
        [&] {
          return apply_permutation(p * q, m) == apply_permutation(p, apply_permutation(q, m)) &&
                 is_symmetric(expand(gen.sym_elem(zz, n, 3)));
        },
        [&] { return "m = " + m.to_string(); });
  }
  return report;
}

CheckReport addition_homomorphism_suite(Gen& gen, std::size_t trials, std::size_t max_n) {
  const RingSpec zz = RingSpec::integers();
  CheckReport report{"addition-homomorphism"};
  for (std::size_t k = 0; k < trials; ++k) {
    const std::size_t n = gen.index(1, max_n);
    const SymElem s = gen.sym_elem(zz, n, 2, 3);
    const SymElem t = gen.sym_elem(zz, n, 2, 3);
    report.run(
        [&] {
          return addition_map(s * t) == addition_map(s) * addition_map(t) &&
                 addition_map(s + t) == addition_map(s) + addition_map(t);
        },
        [&] { return "s = " + s.to_string() + ", t = " + t.to_string(); });
  }
  return report;
}

CheckReport count_oracle_suite(Gen& gen, std::size_t trials) {
  CheckReport report{"count-oracle"};
  const std::uint64_t qs[] = {2, 3, 5};
  for (std::size_t k = 0; k < trials; ++k) {
    const std::uint64_t q = qs[gen.index(0, 2)];
    const std::size_t n = gen.index(1, q == 5 ? 2 : 3);
    const RingSpec field = RingSpec::prime_field(mpz_class(static_cast<unsigned long>(q)));
    std::vector<Poly> gens{gen.poly(field, 2)};
    if (gen.index(0, 1)) gens.push_back(gen.poly(field, 2));
    report.run(
        [&] {
          const auto U = MultSetSpec::generated_by(gens);
          std::vector<Poly> closed = gens;
          closed.push_back(gens.front() * gens.back());
          closed.push_back(gens.front().pow(2));
          const std::uint64_t c = count_points(q, n, U);
          return c == count_coprime(q, n, gens) && c == count_points(q, n, U, 3) &&
                 c == count_points(q, n, MultSetSpec::generated_by(closed));
        },
        [&] {
          return "q = " + std::to_string(q) + ", n = " + std::to_string(n) + ", " +
                 MultSetSpec::generated_by(gens).to_string();
        });
  }
  return report;
}

std::vector<CheckReport> selftest_suite(std::uint64_t seed) {
  Gen gen(seed);
  const RingSpec zz = RingSpec::integers();
  const RingSpec qq = RingSpec::rationals();
  const RingSpec z12 = zmod(12);
  const RingSpec gf7 = RingSpec::prime_field(7);
  const RingSpec zt = RingSpec::poly_over(zz, "T");
  std::vector<CheckReport> out;
  for (const auto& spec : {zz, qq, z12, gf7, zt}) out.push_back(ring_axioms_suite(gen, spec, 100));
  for (const auto& spec : {zz, z12, gf7}) out.push_back(cayley_hamilton_suite(gen, spec, 60));
  out.push_back(round_trip_suite(gen, 100));
  out.push_back(permutation_suite(gen, 100));
  out.push_back(delta_product_suite(gen, 60));
  out.push_back(sym_ops_specialization_suite(gen, 60));
  out.push_back(charpoly_routes(gen, zz, 150));
  out.push_back(charpoly_routes(gen, z12, 150));
  out.push_back(norm_identities_suite(gen, zz, 60));
  out.push_back(norm_identities_suite(gen, gf7, 60));
  out.push_back(coprimality_suite(gen, 5, 100));
  out.push_back(resultant_symmetry_suite(gen, 100));
  out.push_back(base_change_suite(gen, 50, {2, 5, 12}));
  out.push_back(tower_evaluation_suite(gen, 30));
  out.push_back(free_quotient_agreement(zmod(4), 2, 2));
  out.push_back(free_quotient_agreement(RingSpec::prime_field(3), 2, 2));
  out.push_back(recover_suite(gen, zz, 50));
  out.push_back(recover_suite(gen, RingSpec::prime_field(5), 50));
  out.push_back(spectral_suite(gen, zz, 50));
  out.push_back(spectral_suite(gen, gf7, 50));
  out.push_back(section_suite(gen, 4, 10));
  out.push_back(addition_homomorphism_suite(gen, 40));
  out.push_back(diagonal_suite(gen, 20, {2, 3}));
  out.push_back(affine_count_suite({2, 3, 5}, {1, 2, 3}));
  out.push_back(local_and_generic_count_suite({2, 3, 5}, {1, 2, 3}));
  out.push_back(count_oracle_suite(gen, 20));
  return out;
}

}  // namespace symtensor::check
