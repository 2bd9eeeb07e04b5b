#include <doctest.h>

#include "symtensor/check/oracles.hpp"
#include "symtensor/check/properties.hpp"
#include "symtensor/errors.hpp"
#include "symtensor/hilb.hpp"
#include "symtensor/norm.hpp"

using namespace symtensor;

namespace {

const RingSpec kZZ = RingSpec::integers();

Poly poly_over(const RingSpec& spec, std::initializer_list<long> low_to_high) {
  std::vector<RingValue> v;
  for (long x : low_to_high) v.push_back(spec.from_int(x));
  return Poly(spec, std::move(v));
}

MonicPoly monic_over(const RingSpec& spec, std::initializer_list<long> low_to_high) {
  return MonicPoly(poly_over(spec, low_to_high));
}

SymElem e(std::size_t n, std::size_t i) { return SymElem::variable(kZZ, n, i - 1); }
SymElem c(long v, std::size_t n) { return SymElem::constant(kZZ.from_int(v), n); }
SymPolyX lift(const SymElem& s) { return SymPolyX::constant(s); }
SymPolyX X(std::size_t arity) { return SymPolyX::x(kZZ, arity); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& err) {
    return err.kind();
  }
  FAIL("expected an error");
  return ErrorKind::kUsage;
}

}  // namespace

TEST_CASE("unit-norm criterion examples") {
  const auto gens_x = [](const RingSpec& s) { return MultSetSpec::generated_by({Poly::x(s)}); };
  CHECK_FALSE(is_free_quotient(monic_over(kZZ, {2, -3, 1}), gens_x(kZZ)));
  const RingSpec f5 = RingSpec::prime_field(5);
  CHECK(is_free_quotient(monic_over(f5, {2, -3, 1}), gens_x(f5)));
  CHECK(is_free_quotient(monic_over(kZZ, {2, -3, 1}), MultSetSpec::trivial()));
  CHECK(is_free_quotient(monic_over(kZZ, {-1, 1}), gens_x(kZZ)));
}

TEST_CASE("local-at and all-nonzero sets") {
  const RingSpec f5 = RingSpec::prime_field(5);
  const auto at0 = MultSetSpec::local_at(f5.zero());
  CHECK(is_free_quotient(monic_over(f5, {0, 0, 1}), at0));
  CHECK_FALSE(is_free_quotient(monic_over(f5, {-1, 0, 1}), at0));
  CHECK(is_free_quotient(monic_over(f5, {4, 1}), MultSetSpec::local_at(f5.from_int(1))));
  CHECK_FALSE(is_free_quotient(monic_over(f5, {0, 1}), MultSetSpec::all_nonzero()));
  CHECK_FALSE(is_free_quotient(monic_over(kZZ, {0, 1}), MultSetSpec::all_nonzero()));

  const RingSpec z4 = RingSpec::mod(4);
  CHECK(kind_of([&] { (void)is_free_quotient(monic_over(z4, {0, 1}), MultSetSpec::local_at(z4.zero())); }) ==
        ErrorKind::kUnsupportedKind);
  CHECK(kind_of([&] { (void)is_free_quotient(monic_over(z4, {0, 1}), MultSetSpec::all_nonzero()); }) ==
        ErrorKind::kUnsupportedKind);
  CHECK(kind_of([&] { (void)is_free_quotient(monic_over(kZZ, {0, 1}), MultSetSpec::local_at(kZZ.zero())); }) ==
        ErrorKind::kUnsupportedKind);
}

TEST_CASE("inverse-search oracle examples") {
  const RingSpec z4 = RingSpec::mod(4);
  const MonicPoly F = monic_over(z4, {0, -1, 1});
  CHECK_FALSE(free_quotient_oracle(F, MultSetSpec::generated_by({Poly::x(z4)})));
  CHECK(free_quotient_oracle(F, MultSetSpec::generated_by({poly_over(z4, {1})})));
  CHECK(free_quotient_oracle(F, MultSetSpec::trivial()));

  for (long a = 0; a < 4; ++a) {
    for (long b = 0; b < 4; ++b) {
      const MonicPoly G = monic_over(z4, {a, b, 1});
      for (long k = 0; k < 4; ++k) {
        const auto U = MultSetSpec::generated_by({poly_over(z4, {k, 1})});
        CHECK(is_free_quotient(G, U) == free_quotient_oracle(G, U));
      }
    }
  }
}

TEST_CASE("oracle refuses infeasible searches") {
  const RingSpec z4 = RingSpec::mod(4);
  const MonicPoly big(Poly::monomial(z4.one(), 9));
  CHECK(kind_of([&] { (void)free_quotient_oracle(big, MultSetSpec::generated_by({Poly::x(z4)})); }) ==
        ErrorKind::kOracleInfeasible);
  CHECK(kind_of([&] {
          (void)free_quotient_oracle(monic_over(kZZ, {0, 1}), MultSetSpec::generated_by({Poly::x(kZZ)}));
        }) == ErrorKind::kOracleInfeasible);
}

TEST_CASE("criterion agrees with the oracle exhaustively") {
  for (const auto& spec : {RingSpec::mod(4), RingSpec::prime_field(2), RingSpec::prime_field(3)}) {
    const auto r = check::free_quotient_agreement(spec, 3, 2);
    CHECK_MESSAGE(r.passed(), r.summary());
  }
  const auto z6 = check::free_quotient_agreement(RingSpec::mod(6), 2, 2);
  CHECK_MESSAGE(z6.passed(), z6.summary());
}

TEST_CASE("nonzero norm over a field means coprime") {
  for (long q : {2L, 3L, 5L}) {
    const RingSpec field = RingSpec::prime_field(q);
    const Poly one = Poly::constant(field.one());
    std::size_t cases = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
      std::uint64_t f_total = 1;
      for (std::size_t i = 0; i < n; ++i) f_total *= q;
      for (std::uint64_t fi = 0; fi < f_total; ++fi) {
        std::vector<RingValue> fc;
        for (std::uint64_t r = fi, i = 0; i < n; ++i, r /= q) fc.push_back(field.from_int(r % q));
        fc.push_back(field.one());
        const MonicPoly F(Poly(field, fc));
        for (std::uint64_t gi = 1; gi < static_cast<std::uint64_t>(q * q * q); ++gi) {
          std::vector<RingValue> gc;
          for (std::uint64_t r = gi, i = 0; i < 3; ++i, r /= q) gc.push_back(field.from_int(r % q));
          const Poly g(field, gc);
          CHECK((!norm(g, F).is_zero()) == (poly_gcd(F.poly(), g) == one));
          ++cases;
        }
      }
    }
    CHECK(cases > 0);
  }
}

TEST_CASE("monic generator recovery") {
  const MonicPoly F = monic_over(kZZ, {2, -3, 1});
  CHECK(recover_monic(companion_matrix(F)) == F);
  CHECK(recover_monic(SquareMatrix::scalar(kZZ.from_int(7), 1)) == monic_over(kZZ, {-7, 1}));
  check::Gen gen(31);
  for (const auto& spec : {kZZ, RingSpec::prime_field(5), RingSpec::prime_field(2)}) {
    const auto r = check::recover_suite(gen, spec, 100, 4);
    CHECK_MESSAGE(r.passed(), r.summary());
  }
  for (int k = 0; k < 50; ++k) {
    const SquareMatrix theta = gen.matrix(kZZ, gen.index(1, 4));
    const auto [S, S_inv] = gen.invertible(kZZ, theta.size());
    CHECK(S * S_inv == SquareMatrix::identity(kZZ, theta.size()));
    CHECK(char_poly(S * theta * S_inv) == char_poly(theta));
  }
}

TEST_CASE("addition map on generators") {
  CHECK(addition_map(e(2, 1)) == lift(e(1, 1)) + X(1));
  CHECK(addition_map(e(2, 2)) == lift(e(1, 1)) * X(1));
  CHECK(addition_map(c(1, 2)) == lift(c(1, 1)));
  CHECK(addition_map(e(1, 1)) == X(0));
  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::size_t i = 1; i <= n; ++i) {
      const SymPolyX expected = lift(sym_generator(kZZ, i, n - 1)) + lift(sym_generator(kZZ, i - 1, n - 1)) * X(n - 1);
      CHECK(addition_map(e(n, i)) == expected);
    }
  }
}

TEST_CASE("addition map is a ring homomorphism") {
  check::Gen gen(32);
  const auto r = check::addition_homomorphism_suite(gen, 100, 4);
  CHECK_MESSAGE(r.passed(), r.summary());
}

TEST_CASE("section map") {
  CHECK(section_map(lift(e(1, 1)), 2) == lift(e(2, 1)) - X(2));
  CHECK(section_map(lift(c(1, 1)), 2) == lift(c(1, 2)));
  CHECK(section_map(X(1), 2) == X(2));
  // p_3(e'_1 X + e'_2) = (e1 - X) X + (e2 - e1 X + X^2) = e2
  CHECK(section_map(lift(e(2, 1)) * X(2) + lift(e(2, 2)), 3) == lift(e(3, 2)));
}

TEST_CASE("section inverts addition on generators") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t i = 1; i < n; ++i) {
      // Below the top generator the identity holds on the nose.
      CHECK(section_map(addition_map(e(n, i)), n) == lift(e(n, i)));
      CHECK(section_inverts_addition(e(n, i)));
    }
    // For e_n the round trip returns e_n only modulo Delta_{n,X}(X).
    const SymPolyX top = section_map(addition_map(e(n, n)), n);
    CHECK(reduce_mod_delta(top) == reduce_mod_delta(lift(e(n, n))));
    CHECK(reduce_mod_delta(top - lift(e(n, n))).is_zero());
    CHECK(section_inverts_addition(e(n, n)));
  }
}

TEST_CASE("reduction modulo Delta") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(reduce_mod_delta(delta(Poly::x(kZZ), n)).is_zero());
    const SymPolyX low = lift(e(n, 1)) * X(n) + lift(c(3, n));
    if (n >= 2) CHECK(reduce_mod_delta(low) == low);
  }
}

TEST_CASE("section and addition identities for n up to 4") {
  check::Gen gen(33);
  const auto r = check::section_suite(gen, 4, 50);
  CHECK_MESSAGE(r.passed(), r.summary());
}

TEST_CASE("addition map kills Delta") {
  for (std::size_t n = 1; n <= 5; ++n) CHECK(addition_kernel_check(n));
  const SymPolyX d2 = delta(Poly::x(kZZ), 2);
  CHECK(addition_map(d2).is_zero());
  CHECK(addition_map(delta(Poly::x(kZZ), 1)).is_zero());
}

TEST_CASE("addition map on diagonal tensors") {
  CHECK(addition_diagonal_check(Poly::x(kZZ), 2));
  CHECK(addition_map(diagonal_tensor(Poly::x(kZZ), 2)) == lift(e(1, 1)) * X(1));
  CHECK(addition_diagonal_check(poly_over(kZZ, {5}), 3));
  CHECK(addition_map(diagonal_tensor(poly_over(kZZ, {5}), 3)) == lift(c(125, 2)));
  check::Gen gen(34);
  const auto r = check::diagonal_suite(gen, 60, {2, 3, 4}, 3);
  CHECK_MESSAGE(r.passed(), r.summary());
  CHECK_THROWS_AS((void)addition_diagonal_check(Poly::x(kZZ), 1), Error);
}

TEST_CASE("point counts") {
  for (std::uint64_t q : {2u, 3u, 5u, 7u}) {
    const RingSpec field = RingSpec::prime_field(q);
    std::uint64_t qn = 1;
    for (std::size_t n = 1; n <= 3; ++n) {
      qn *= q;
      CHECK(count_points(q, n, MultSetSpec::trivial()) == qn);
      CHECK(count_points(q, n, MultSetSpec::local_at(field.zero())) == 1);
      CHECK(count_points(q, n, MultSetSpec::local_at(field.from_int(1))) == 1);
      CHECK(count_points(q, n, MultSetSpec::all_nonzero()) == 0);
    }
  }
  const RingSpec f3 = RingSpec::prime_field(3);
  CHECK(count_points(3, 2, MultSetSpec::generated_by({Poly::x(f3)})) == 6);
  CHECK(kind_of([] { (void)count_points(2, 21, MultSetSpec::trivial()); }) == ErrorKind::kEnumerationTooLarge);
}

TEST_CASE("point counts match the gcd oracle and ignore partitioning") {
  check::Gen gen(35);
  const auto r = check::count_oracle_suite(gen, 40);
  CHECK_MESSAGE(r.passed(), r.summary());
  const RingSpec f5 = RingSpec::prime_field(5);
  const auto U = MultSetSpec::generated_by({poly_over(f5, {1, 0, 1}), Poly::x(f5)});
  const std::uint64_t base = count_points(5, 4, U);
  for (unsigned threads : {2u, 3u, 7u, 16u}) CHECK(count_points(5, 4, U, threads) == base);
  const Poly gens[] = {poly_over(f5, {1, 0, 1}), Poly::x(f5)};
  CHECK(base == check::count_coprime(5, 4, gens));
}

TEST_CASE("multiplicative set descriptions") {
  const RingSpec f5 = RingSpec::prime_field(5);
  CHECK(MultSetSpec::trivial().to_string() == "trivial");
  CHECK(MultSetSpec::all_nonzero().to_string() == "all-nonzero");
  CHECK(MultSetSpec::local_at(f5.from_int(3)).to_string() == "local-at:3");
  const auto U = MultSetSpec::generated_by({Poly::x(f5), poly_over(f5, {1, 1})});
  CHECK(U.to_string() == "gens:X,X + 1");
  const auto diag = U.diagonal_power(2);
  REQUIRE(diag.size() == 2);
  CHECK(diag[0] == SymElem::variable(f5, 2, 1));
  CHECK_THROWS_AS((void)MultSetSpec::generated_by({Poly(f5)}), Error);
  CHECK_THROWS_AS((void)MultSetSpec::trivial().diagonal_power(2), Error);
}
