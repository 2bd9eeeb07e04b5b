#pragma once

// Named randomized and exhaustive property suites. Each returns a report of
// how many cases ran and how many failed; the first failure is described.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "symtensor/check/random.hpp"
#include "symtensor/hilb.hpp"

namespace symtensor::check {

struct CheckReport {
  explicit CheckReport(std::string name_ = {}) : name(std::move(name_)) {}

  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const noexcept { return trials > 0 && failures == 0; }

  // Runs one case. A thrown library error counts as a failure.
  void run(const std::function<bool()>& body, const std::function<std::string()>& describe);

  void absorb(const CheckReport& other);
  std::string summary() const;
};

CheckReport combine(std::string name, const std::vector<CheckReport>& parts);

// charpoly_mult_symmetric(f, F) == char_poly(mult_matrix(f, F)).
CheckReport charpoly_routes(Gen& gen, const RingSpec& spec, std::size_t pairs,
                            std::size_t max_deg_F = 5, std::size_t max_deg_f = 6, long bound = 9);

// N_P(Q) == (-1)^{pq} N_Q(P), and N_P(Q) equals the Sylvester determinant.
CheckReport resultant_symmetry_suite(Gen& gen, std::size_t pairs, std::size_t max_deg = 4,
                                     long bound = 9);

// push_norm along ZZ -> Zmod:m for each modulus, on the same random pairs.
CheckReport base_change_suite(Gen& gen, std::size_t pairs, const std::vector<long>& moduli,
                              std::size_t max_deg = 4, long bound = 9);

// push_norm along the evaluation Poly:ZZ:T -> ZZ at random points.
CheckReport tower_evaluation_suite(Gen& gen, std::size_t pairs);

// is_free_quotient against free_quotient_oracle for every monic F of degree
// 1..max_deg_F and every nonzero singleton generator of degree <= max_deg_g.
CheckReport free_quotient_agreement(const RingSpec& finite_spec, std::size_t max_deg_F = 3,
                                    std::size_t max_deg_g = 2);

// recover_monic(S C_F S^{-1}) == F, and F(theta) == 0.
CheckReport recover_suite(Gen& gen, const RingSpec& spec, std::size_t trials,
                          std::size_t max_n = 4);

// The three section/addition identities for each n in [1, max_n].
CheckReport section_suite(Gen& gen, std::size_t max_n, std::size_t random_per_n);

// addition_diagonal_check over ZZ.
CheckReport diagonal_suite(Gen& gen, std::size_t trials, const std::vector<std::size_t>& ns,
                           std::size_t max_deg = 3);

// count_points(q, n, trivial) == q^n.
CheckReport affine_count_suite(const std::vector<std::uint64_t>& qs,
                               const std::vector<std::size_t>& ns);

// local-at(0) counts 1 and all-nonzero counts 0.
CheckReport local_and_generic_count_suite(const std::vector<std::uint64_t>& qs,
                                          const std::vector<std::size_t>& ns);

// char_poly(f(M)) == prod (X - f(a_i)) for M conjugate to a split companion.
CheckReport spectral_suite(Gen& gen, const RingSpec& spec, std::size_t trials,
                           std::size_t max_n = 4);

// decompose(expand(s)) == s.
CheckReport round_trip_suite(Gen& gen, std::size_t trials, std::size_t max_n = 4,
                             std::size_t max_total = 6);

// Commutative ring axioms on random triples.
CheckReport ring_axioms_suite(Gen& gen, const RingSpec& spec, std::size_t trials);

// char_poly(M)(M) == 0 and char_poly agrees with the cofactor expansion.
CheckReport cayley_hamilton_suite(Gen& gen, const RingSpec& spec, std::size_t trials,
                                  std::size_t max_n = 4);

// N_F(fg) == N_F(f) N_F(g), N_F(X) == (-1)^n F(0), N_F(f) == prod f(a_i).
CheckReport norm_identities_suite(Gen& gen, const RingSpec& spec, std::size_t trials);

// Over GF(p): N_F(f) != 0 exactly when gcd(F, f) == 1.
CheckReport coprimality_suite(Gen& gen, std::uint64_t p, std::size_t trials);

// expand(delta(f, n)) evaluated at random points matches prod (Y - f(a_i)).
CheckReport delta_product_suite(Gen& gen, std::size_t trials, std::size_t max_n = 4);

// sym_ops_of(f, n) specializes to the elementary symmetric values of f(a).
CheckReport sym_ops_specialization_suite(Gen& gen, std::size_t trials, std::size_t max_n = 4);

// Permutation action composes: (p*q).m == p.(q.m).
CheckReport permutation_suite(Gen& gen, std::size_t trials);

// a_n is multiplicative and kills Delta_{n,X}.
CheckReport addition_homomorphism_suite(Gen& gen, std::size_t trials, std::size_t max_n = 4);

// count_points with generators against the gcd oracle; independent of thread
// count and of adding redundant generators.
CheckReport count_oracle_suite(Gen& gen, std::size_t trials);

// The full suite run by `selftest`, in a fixed order.
std::vector<CheckReport> selftest_suite(std::uint64_t seed);

}  // namespace symtensor::check
