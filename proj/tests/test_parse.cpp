#include <doctest.h>

#include <string>

#include "symtensor/check/random.hpp"
#include "symtensor/cli/parse.hpp"
#include "symtensor/errors.hpp"

using namespace symtensor;
using namespace symtensor::cli;

namespace {

// Position reported by a ParseError thrown from f, or npos if none was thrown.
template <class F>
std::size_t parse_error_at(F&& f) {
  try {
    f();
  } catch (const ParseError& err) {
    return err.position();
  }
  return std::string::npos;
}

template <class F>
std::string parse_error_text(F&& f) {
  try {
    f();
  } catch (const ParseError& err) {
    return err.what();
  }
  return {};
}

}  // namespace

TEST_CASE("ring specs") {
  CHECK(parse_ring("ZZ") == RingSpec::integers());
  CHECK(parse_ring("QQ") == RingSpec::rationals());
  CHECK(parse_ring("Zmod:12") == RingSpec::mod(12));
  CHECK(parse_ring("GF:7") == RingSpec::prime_field(7));
  CHECK(parse_ring("Poly:GF:5:T") == RingSpec::poly_over(RingSpec::prime_field(5), "T"));
  const RingSpec nested = parse_ring("Poly:Poly:ZZ:S:T");
  CHECK(nested.variable() == "T");
  CHECK(nested.base().variable() == "S");
  CHECK(nested.to_string() == "Poly:Poly:ZZ:S:T");
  CHECK_FALSE(RingSpec::mod(12) == RingSpec::mod(4));
}

TEST_CASE("ring spec errors carry positions") {
  CHECK(parse_error_at([] { (void)parse_ring("GF:4"); }) == 3);
  CHECK(parse_error_text([] { (void)parse_ring("GF:4"); }).find("prime") != std::string::npos);
  CHECK(parse_error_at([] { (void)parse_ring("Zmod:1"); }) == 5);
  CHECK(parse_error_at([] { (void)parse_ring("Zmod:x"); }) == 5);
  CHECK(parse_error_at([] { (void)parse_ring("RR"); }) == 0);
  CHECK(parse_error_at([] { (void)parse_ring("Poly:ZZ:X"); }) == 8);
  CHECK(parse_error_at([] { (void)parse_ring("Poly:ZZ:e2"); }) == 8);
  CHECK(parse_error_at([] { (void)parse_ring("Poly:Poly:ZZ:T:T"); }) == 15);
  CHECK(parse_error_at([] { (void)parse_ring("ZZ:3"); }) == 2);
  CHECK(parse_error_at([] { (void)parse_ring("GF"); }) == 2);
  CHECK(parse_error_at([] { (void)parse_ring(""); }) == 0);
}

TEST_CASE("polynomials") {
  const RingSpec f5 = RingSpec::prime_field(5);
  CHECK(parse_poly("X^2+7", f5).to_string() == "X^2 + 2");
  const RingSpec zz = RingSpec::integers();
  CHECK(parse_poly("(X-1)*(X-2)", zz).to_string() == "X^2 - 3*X + 2");
  CHECK(parse_poly("-X^2", zz).to_string() == "-X^2");
  CHECK(parse_poly("2*X^2 - X*3 + 0", zz) == parse_poly("X*(2*X - 3)", zz));
  CHECK(parse_poly(" 1 + 2 * 3 ", zz).to_string() == "7");
  CHECK(parse_poly("(X+1)^3", zz).to_string() == "X^3 + 3*X^2 + 3*X + 1");
  CHECK(parse_poly("X/2", RingSpec::rationals()).to_string() == "1/2*X");
  CHECK(parse_poly("X/3", f5) == parse_poly("2*X", f5));
  const RingSpec tower = parse_ring("Poly:ZZ:T");
  CHECK(parse_poly("X - T", tower) == Poly::x(tower) - Poly::constant(tower.generator()));
}

TEST_CASE("expression errors") {
  const RingSpec zz = RingSpec::integers();
  CHECK(parse_error_text([&] { (void)parse_poly("Y + 1", zz); }).find("unknown symbol 'Y'") !=
        std::string::npos);
  CHECK(parse_error_at([&] { (void)parse_poly("Y + 1", zz); }) == 0);
  CHECK(parse_error_at([&] { (void)parse_poly("X^-1", zz); }) == 2);
  CHECK(parse_error_at([&] { (void)parse_poly("X^2^3", zz); }) == 3);
  CHECK(parse_error_text([&] { (void)parse_poly("X/2", zz); }).find("not a unit") != std::string::npos);
  CHECK(parse_error_at([&] { (void)parse_poly("X/X", zz); }) != std::string::npos);
  CHECK(parse_error_at([&] { (void)parse_poly("(X+1", zz); }) == 4);
  CHECK(parse_error_at([&] { (void)parse_poly("X + ", zz); }) != std::string::npos);
  CHECK(parse_error_at([&] { (void)parse_poly("X # 1", zz); }) == 2);
  CHECK(parse_error_at([&] { (void)parse_poly("X^99999999999", zz); }) == 2);
  CHECK(parse_error_at([&] { (void)parse_poly("", zz); }) == 0);
  CHECK(parse_error_at([&] { (void)parse_element("X", zz); }) == 0);
  CHECK(parse_error_at([&] { (void)parse_poly("X+1", zz, 10); }) == std::string::npos);
  CHECK(parse_error_at([&] { (void)parse_poly("X+Y", zz, 10); }) == 12);
}

TEST_CASE("indexed variables") {
  const RingSpec zz = RingSpec::integers();
  const MultiPoly m = parse_multi("X1^2 + X2^2", zz, 2);
  CHECK(m == MultiPoly::variable(zz, 2, 0).pow(2) + MultiPoly::variable(zz, 2, 1).pow(2));
  CHECK(parse_error_text([&] { (void)parse_multi("X5", zz, 2); }).find("out of range") != std::string::npos);
  CHECK(parse_error_at([&] { (void)parse_multi("X", zz, 2); }) == 0);
  CHECK(parse_sym("e1^2 - 2*e2", zz, 3) ==
        SymElem::variable(zz, 3, 0).pow(2) - SymElem::constant(zz.from_int(2), 3) * SymElem::variable(zz, 3, 1));
  CHECK(parse_error_at([&] { (void)parse_sym("e4", zz, 3); }) == 0);
  CHECK(parse_error_at([&] { (void)parse_sym("e0", zz, 3); }) == 0);
  const SymPolyX t = parse_sym_x("e1*X + e2", zz, 2);
  CHECK(t.degree() == 1u);
  CHECK(t.coeff(0) == SymElem::variable(zz, 2, 1));
}

TEST_CASE("render and parse round trip") {
  check::Gen gen(41);
  const std::vector<RingSpec> specs = {RingSpec::integers(),       RingSpec::rationals(),
                                       RingSpec::mod(12),          RingSpec::prime_field(7),
                                       parse_ring("Poly:ZZ:T"),    parse_ring("Poly:GF:5:T")};
  for (const auto& spec : specs) {
    for (int k = 0; k < 100; ++k) {
      const Poly f = gen.poly(spec, 5);
      const std::string text = f.to_string();
      CHECK_MESSAGE(parse_poly(text, spec) == f, spec.to_string() << ": " << text);
      const RingValue a = gen.value(spec);
      CHECK(parse_element(a.to_string(), spec) == a);
    }
  }
  const RingSpec zz = RingSpec::integers();
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = gen.index(1, 4);
    const SymElem s = gen.sym_elem(zz, n, 5);
    CHECK(parse_sym(s.to_string(), zz, n) == s);
    const MultiPoly m = expand(s);
    CHECK(parse_multi(m.to_string(), zz, n) == m);
    const SymPolyX t = gen.sym_poly_x(zz, n, 3, 3);
    CHECK_MESSAGE(parse_sym_x(t.to_string(), zz, n) == t, t.to_string());
  }
}

TEST_CASE("multiplicative sets") {
  const RingSpec f5 = RingSpec::prime_field(5);
  CHECK(parse_multset("trivial", f5).kind() == MultSetKind::kTrivial);
  CHECK(parse_multset("all-nonzero", f5).kind() == MultSetKind::kAllNonzero);
  const MultSetSpec at = parse_multset("local-at:7", f5);
  REQUIRE(at.kind() == MultSetKind::kLocalAt);
  CHECK(at.point() == f5.from_int(2));
  const MultSetSpec gens = parse_multset("gens:X,X^2+1", f5);
  REQUIRE(gens.generators().size() == 2);
  CHECK(gens.generators()[1].to_string() == "X^2 + 1");
  CHECK(parse_error_at([&] { (void)parse_multset("gens:X,0", f5); }) == 7);
  CHECK(parse_error_at([&] { (void)parse_multset("gens:X,Y", f5); }) == 7);
  CHECK(parse_error_at([&] { (void)parse_multset("local-at:X", f5); }) == 9);
  CHECK(parse_error_at([&] { (void)parse_multset("everything", f5); }) == 0);
}

TEST_CASE("homomorphisms") {
  const RingSpec zz = RingSpec::integers();
  CHECK(parse_hom("id", zz).rule() == HomRule::kIdentity);
  const RingHom red = parse_hom("to:Zmod:6", zz);
  CHECK(red.rule() == HomRule::kReduce);
  CHECK(red(zz.from_int(13)) == RingSpec::mod(6).from_int(1));
  CHECK(parse_error_at([&] { (void)parse_hom("to:GF:6", zz); }) == 6);
  const RingSpec tower = parse_ring("Poly:ZZ:T");
  const RingHom ev = parse_hom("eval:3", tower);
  CHECK(ev.rule() == HomRule::kEvaluate);
  CHECK(ev(parse_element("T^2 + 1", tower)) == zz.from_int(10));
  CHECK_THROWS_AS((void)parse_hom("eval:3", zz), Error);
  CHECK(parse_error_at([&] { (void)parse_hom("swap", zz); }) == 0);
}

TEST_CASE("matrices") {
  const RingSpec zz = RingSpec::integers();
  const SquareMatrix m = parse_matrix("0,-2;1,3", zz);
  REQUIRE(m.size() == 2);
  CHECK(m(0, 1) == zz.from_int(-2));
  CHECK(m(1, 0) == zz.from_int(1));
  CHECK(parse_matrix("5", zz) == SquareMatrix::scalar(zz.from_int(5), 1));
  CHECK(parse_error_at([&] { (void)parse_matrix("1,2;3", zz); }) != std::string::npos);
  CHECK(parse_error_at([&] { (void)parse_matrix("1,2", zz); }) != std::string::npos);
  CHECK(parse_error_at([&] { (void)parse_matrix("1,X;0,1", zz); }) == 2);
}
