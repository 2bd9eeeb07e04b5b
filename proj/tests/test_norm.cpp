#include <doctest.h>

#include "symtensor/check/oracles.hpp"
#include "symtensor/check/properties.hpp"
#include "symtensor/errors.hpp"
#include "symtensor/norm.hpp"

using namespace symtensor;

namespace {

const RingSpec kZZ = RingSpec::integers();

Poly poly_over(const RingSpec& spec, std::initializer_list<long> low_to_high) {
  std::vector<RingValue> v;
  for (long x : low_to_high) v.push_back(spec.from_int(x));
  return Poly(spec, std::move(v));
}
Poly zpoly(std::initializer_list<long> c) { return poly_over(kZZ, c); }

MonicPoly running() { return MonicPoly(zpoly({2, -3, 1})); }
SymElem e(std::size_t n, std::size_t i) { return SymElem::variable(kZZ, n, i - 1); }
SymElem c(long v, std::size_t n) { return SymElem::constant(kZZ.from_int(v), n); }

}  // namespace

TEST_CASE("evaluation map sends e_i to signed coefficients") {
  const EvalMap u(running());
  CHECK(u(e(2, 1)) == kZZ.from_int(3));
  CHECK(u(e(2, 2)) == kZZ.from_int(2));
  CHECK(u(c(1, 2)).is_one());
  CHECK(eval_sym(u, e(2, 1).pow(2) - c(2, 2) * e(2, 2)) == kZZ.from_int(5));
  CHECK_THROWS_AS((void)u(e(3, 1)), Error);
}

TEST_CASE("evaluation map is a ring homomorphism") {
  check::Gen gen(21);
  for (int k = 0; k < 100; ++k) {
    const MonicPoly F = gen.monic(kZZ, 1, 4);
    const EvalMap u(F);
    const SymElem s = gen.sym_elem(kZZ, F.degree(), 3), t = gen.sym_elem(kZZ, F.degree(), 3);
    CHECK(u(s * t) == u(s) * u(t));
    CHECK(u(s + t) == u(s) + u(t));
  }
}

TEST_CASE("characteristic polynomial through symmetric functions") {
  CHECK(charpoly_mult_symmetric(Poly::x(kZZ), running()) == running());
  CHECK(charpoly_mult_symmetric(zpoly({0, 0, 1}), running()).to_string() == "X^2 - 5*X + 4");
  CHECK(char_poly(mult_matrix(zpoly({0, 0, 1}), running())).to_string() == "X^2 - 5*X + 4");
  const MonicPoly linear(zpoly({-5, 1}));
  const Poly f = zpoly({1, 2, 3});
  CHECK(charpoly_mult_symmetric(f, linear).poly() == zpoly({-86, 1}));
}

TEST_CASE("both characteristic polynomial routes agree") {
  check::Gen gen(22);
  for (long m : {4L, 6L, 9L, 12L}) {
    const auto r = check::charpoly_routes(gen, RingSpec::mod(m), 80);
    CHECK_MESSAGE(r.passed(), r.summary());
  }
  const auto r = check::charpoly_routes(gen, kZZ, 150);
  CHECK_MESSAGE(r.passed(), r.summary());
  const auto t = check::charpoly_routes(gen, RingSpec::poly_over(kZZ, "T"), 40, 3, 3, 3);
  CHECK_MESSAGE(t.passed(), t.summary());
}

TEST_CASE("norm examples") {
  CHECK(norm(zpoly({1}), running()).is_one());
  CHECK(norm(Poly::x(kZZ), running()) == kZZ.from_int(2));
  CHECK(norm(zpoly({-4, 1}), running()) == kZZ.from_int(6));
  CHECK(norm_checked(zpoly({-4, 1}), running()) == kZZ.from_int(6));
  CHECK(norm_by_symmetric(zpoly({-4, 1}), running()) == kZZ.from_int(6));
}

TEST_CASE("norm identities") {
  check::Gen gen(23);
  for (const auto& spec : {kZZ, RingSpec::mod(12), RingSpec::prime_field(7)}) {
    const auto r = check::norm_identities_suite(gen, spec, 100);
    CHECK_MESSAGE(r.passed(), r.summary());
  }
}

TEST_CASE("norm equals the Sylvester resultant") {
  check::Gen gen(24);
  for (const auto& spec : {kZZ, RingSpec::mod(12)}) {
    for (int k = 0; k < 150; ++k) {
      const MonicPoly F = gen.monic(spec, 1, 4);
      Poly f = gen.poly(spec, 4);
      if (!f.degree() || *f.degree() == 0) f += Poly::x(spec);
      CHECK(norm(f, F) == check::sylvester_resultant(F.poly(), f));
    }
  }
}

TEST_CASE("Sylvester matrix layout puts shifted F first") {
  const SquareMatrix S = check::sylvester_matrix(running().poly(), zpoly({-4, 1}));
  CHECK(S.to_string() == "[[1, -3, 2], [1, -4, 0], [0, 1, -4]]");
  CHECK(check::sylvester_resultant(running().poly(), zpoly({-4, 1})) == kZZ.from_int(6));
}

TEST_CASE("resultant products") {
  CHECK(res_product(1, 1) == MultiPoly::variable(kZZ, 2, 0) - MultiPoly::variable(kZZ, 2, 1));
  const MultiPoly x1 = MultiPoly::variable(kZZ, 3, 0), x2 = MultiPoly::variable(kZZ, 3, 1),
                  x3 = MultiPoly::variable(kZZ, 3, 2);
  CHECK(res_product(2, 1) == (x1 - x3) * (x2 - x3));
  for (std::size_t p = 1; p <= 3; ++p) {
    for (std::size_t q = 1; p + q <= 6; ++q) {
      const MultiPoly r = res_product(p, q);
      const MultiPoly swapped = apply_permutation(block_swap(p, q), r);
      const RingValue sign = (p * q) % 2 == 0 ? kZZ.one() : -kZZ.one();
      // Relabeling the blocks turns res(p, q) into (-1)^{pq} res(q, p).
      CHECK(swapped == sign * res_product(q, p));
      for (std::size_t i = 0; i + 1 < p; ++i) {
        CHECK(apply_permutation(Permutation::transposition(p + q, i, i + 1), r) == r);
      }
      for (std::size_t j = p; j + 1 < p + q; ++j) {
        CHECK(apply_permutation(Permutation::transposition(p + q, j, j + 1), r) == r);
      }
    }
  }
}

TEST_CASE("resultant symmetry") {
  const ResultantSymmetry r = resultant_symmetry(running(), MonicPoly(zpoly({-4, 1})));
  CHECK(r.norm_p_of_q == kZZ.from_int(6));
  CHECK(r.norm_q_of_p == kZZ.from_int(6));
  CHECK(r.sign == 1);
  CHECK(r.holds);
  const ResultantSymmetry same = resultant_symmetry(running(), running());
  CHECK(same.norm_p_of_q.is_zero());
  CHECK(same.norm_q_of_p.is_zero());

  check::Gen gen(25);
  for (int k = 0; k < 200; ++k) {
    CHECK(resultant_symmetry_check(gen.monic(kZZ, 1, 4, 5), gen.monic(kZZ, 1, 4, 5)));
  }
  const auto s = check::resultant_symmetry_suite(gen, 100, 4, 5);
  CHECK_MESSAGE(s.passed(), s.summary());
}

TEST_CASE("norms commute with reduction") {
  const RingSpec z5 = RingSpec::mod(5);
  const PushedNorm p = push_norm(RingHom::reduce(kZZ, z5), Poly::x(kZZ), running());
  CHECK(p.image_of_norm == z5.from_int(2));
  CHECK(p.norm_of_image == z5.from_int(2));
  CHECK(p.holds());
  CHECK(push_norm(RingHom::identity(kZZ), zpoly({1, 2, 3}), running()).holds());

  check::Gen gen(26);
  const auto r = check::base_change_suite(gen, 60, {2, 3, 4, 5, 12});
  CHECK_MESSAGE(r.passed(), r.summary());
  const RingSpec z12 = RingSpec::mod(12);
  for (int k = 0; k < 60; ++k) {
    const MonicPoly F = gen.monic(z12, 1, 4);
    const Poly f = gen.poly(z12, 4);
    CHECK(push_norm(RingHom::reduce(z12, RingSpec::mod(4)), f, F).holds());
    CHECK(push_norm(RingHom::reduce(z12, RingSpec::prime_field(3)), f, F).holds());
  }
}

TEST_CASE("norms commute with evaluation of a tower variable") {
  const RingSpec zt = RingSpec::poly_over(kZZ, "T");
  const MonicPoly F(Poly(zt, {-zt.generator(), zt.one()}));
  const PushedNorm p = push_norm(RingHom::evaluate(zt, kZZ.zero()), Poly::x(zt), F);
  CHECK(norm(Poly::x(zt), F) == zt.generator());
  CHECK(p.image_of_norm.is_zero());
  CHECK(p.norm_of_image.is_zero());
  CHECK(p.holds());

  check::Gen gen(27);
  const auto r = check::tower_evaluation_suite(gen, 60);
  CHECK_MESSAGE(r.passed(), r.summary());
}

TEST_CASE("ring homomorphisms preserve the ring operations") {
  check::Gen gen(28);
  const RingSpec zt = RingSpec::poly_over(kZZ, "T");
  const RingHom homs[] = {RingHom::reduce(kZZ, RingSpec::mod(12)),
                          RingHom::reduce(kZZ, RingSpec::prime_field(7)),
                          RingHom::reduce(RingSpec::mod(12), RingSpec::mod(6)),
                          RingHom::evaluate(zt, kZZ.from_int(-3)), RingHom::identity(kZZ)};
  for (const auto& phi : homs) {
    CHECK(phi(phi.source().zero()).is_zero());
    CHECK(phi(phi.source().one()).is_one());
    for (int k = 0; k < 50; ++k) {
      const RingValue a = gen.value(phi.source()), b = gen.value(phi.source());
      CHECK(phi(a + b) == phi(a) + phi(b));
      CHECK(phi(a * b) == phi(a) * phi(b));
    }
  }
}

TEST_CASE("inapplicable homomorphisms are rejected") {
  CHECK_THROWS_AS(RingHom::reduce(RingSpec::mod(12), RingSpec::mod(5)), Error);
  CHECK_THROWS_AS(RingHom::reduce(RingSpec::rationals(), RingSpec::mod(5)), Error);
  CHECK_THROWS_AS(RingHom::evaluate(kZZ, kZZ.one()), Error);
  const RingHom phi = RingHom::reduce(kZZ, RingSpec::mod(5));
  const RingSpec z7 = RingSpec::mod(7);
  CHECK_THROWS_AS((void)push_norm(phi, poly_over(z7, {1, 1}), MonicPoly(poly_over(z7, {1, 1}))), Error);
}
