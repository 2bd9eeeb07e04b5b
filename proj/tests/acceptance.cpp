// Runs every acceptance criterion at its full size and prints one
// PASS/FAIL line per criterion. Exit status is nonzero if any fails.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "symtensor/check/properties.hpp"

using namespace symtensor;
using namespace symtensor::check;

namespace {

constexpr std::uint64_t kSeed = 20240611;

bool report(int number, const std::string& title, CheckReport r,
            std::chrono::steady_clock::time_point start) {
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  std::cout << (r.passed() ? "PASS" : "FAIL") << "  criterion " << number << ": " << title << " ["
            << r.trials << " cases, " << r.failures << " failures, " << ms << " ms]";
  if (!r.passed()) std::cout << " first failure: " << r.first_failure;
  std::cout << "\n" << std::flush;
  return r.passed();
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : kSeed;
  Gen gen(seed);
  const RingSpec zz = RingSpec::integers();
  bool ok = true;
  auto t = std::chrono::steady_clock::now();

  ok &= report(1, "symmetric and matrix characteristic polynomials agree",
               combine("", {charpoly_routes(gen, zz, 1000, 5, 6, 9),
                            charpoly_routes(gen, RingSpec::mod(12), 1000, 5, 6, 9)}),
               t);

  t = std::chrono::steady_clock::now();
  ok &= report(2, "resultant symmetry with Sylvester cross-check",
               resultant_symmetry_suite(gen, 500, 4, 9), t);

  t = std::chrono::steady_clock::now();
  ok &= report(3, "norms commute with reduction mod 2, 5, 12",
               base_change_suite(gen, 200, {2, 5, 12}, 4, 9), t);

  t = std::chrono::steady_clock::now();
  ok &= report(4, "free-quotient criterion matches exhaustive inverse search",
               combine("", {free_quotient_agreement(RingSpec::mod(4), 3, 2),
                            free_quotient_agreement(RingSpec::prime_field(3), 3, 2)}),
               t);

  t = std::chrono::steady_clock::now();
  ok &= report(5, "monic generator recovered from conjugated companion matrices",
               combine("", {recover_suite(gen, zz, 200, 4),
                            recover_suite(gen, RingSpec::prime_field(5), 200, 4)}),
               t);

  t = std::chrono::steady_clock::now();
  ok &= report(6, "section and addition identities, n = 1..4", section_suite(gen, 4, 50), t);

  t = std::chrono::steady_clock::now();
  ok &= report(7, "addition map on diagonal tensors, n = 2, 3",
               diagonal_suite(gen, 100, {2, 3}, 3), t);

  t = std::chrono::steady_clock::now();
  ok &= report(8, "trivial multiplicative set counts q^n points",
               affine_count_suite({2, 3, 5}, {1, 2, 3}), t);

  t = std::chrono::steady_clock::now();
  ok &= report(9, "local-at 0 counts 1, all-nonzero counts 0",
               local_and_generic_count_suite({2, 3, 5}, {1, 2, 3}), t);

  t = std::chrono::steady_clock::now();
  ok &= report(10, "characteristic polynomial of f(M) for split M",
               combine("", {spectral_suite(gen, zz, 300, 4),
                            spectral_suite(gen, RingSpec::prime_field(7), 300, 4)}),
               t);

  t = std::chrono::steady_clock::now();
  ok &= report(11, "decompose inverts expand", round_trip_suite(gen, 500, 4, 6), t);

  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
