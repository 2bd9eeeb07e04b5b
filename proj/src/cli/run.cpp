#include "symtensor/cli/run.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "symtensor/check/oracles.hpp"
#include "symtensor/check/properties.hpp"
#include "symtensor/cli/parse.hpp"
#include "symtensor/errors.hpp"

namespace symtensor::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string ring = "ZZ";
  std::string F, f, P, Q, poly, s, t, matrix, multset, hom;
  std::size_t n = 0;
  std::uint64_t seed = kDefaultSeed;
  bool json = false;
};

struct Outcome {
  json result;
  json oracle;  // null when no oracle applies
  std::string text;
  bool ok = true;  // false when a named check did not hold
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

MonicPoly parse_monic(const std::string& text, const RingSpec& spec, const char* what) {
  Poly p = parse_poly(text, spec);
  if (!p.degree() || *p.degree() == 0 || !p.leading().is_one()) {
    throw Error(ErrorKind::kPrecondition,
                std::string(what) + " must be monic of degree >= 1, got " + p.to_string());
  }
  return MonicPoly(std::move(p));
}

unsigned thread_count() {
  const char* env = std::getenv(kThreadsEnv);
  if (!env || !*env) return 1;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v == 0 || v > 256) {
    throw Error(ErrorKind::kUsage, std::string(kThreadsEnv) + " must be an integer in [1, 256]");
  }
  return static_cast<unsigned>(v);
}

void require_n(const Options& o) {
  if (o.n == 0) throw Error(ErrorKind::kUsage, "--n must be at least 1");
}

Outcome do_norm(const Options& o) {
  const RingSpec spec = parse_ring(o.ring);
  const MonicPoly F = parse_monic(o.F, spec, "F");
  const Poly f = parse_poly(o.f, spec);
  const RingValue by_matrix = norm_by_matrix(f, F);
  const RingValue by_symmetric = norm_by_symmetric(f, F);
  if (!(by_matrix == by_symmetric)) {
    throw Error(ErrorKind::kInvariantViolation, "norm routes disagree: " + by_matrix.to_string() +
                                                    " vs " + by_symmetric.to_string());
  }
  Outcome out;
  out.result = by_matrix.to_string();
  out.oracle = {{"method", "symmetric-evaluation"}, {"value", by_symmetric.to_string()}, {"agrees", true}};
  out.text = by_matrix.to_string();
  return out;
}

Outcome do_charpoly(const Options& o) {
  const RingSpec spec = parse_ring(o.ring);
  Outcome out;
  if (!o.matrix.empty()) {
    const SquareMatrix M = parse_matrix(o.matrix, spec);
    const MonicPoly chi = char_poly(M);
    const bool agrees = chi.poly() == check::charpoly_cofactor(M);
    out.result = chi.to_string();
    out.oracle = {{"method", "cofactor-expansion"}, {"agrees", agrees}};
    out.text = chi.to_string();
    out.ok = agrees;
    return out;
  }
  if (o.F.empty() || o.f.empty()) throw Error(ErrorKind::kUsage, "charpoly needs --matrix, or --F and --f");
  const MonicPoly F = parse_monic(o.F, spec, "F");
  const Poly f = parse_poly(o.f, spec);
  const MonicPoly chi = char_poly(mult_matrix(f, F));
  const MonicPoly by_symmetric = charpoly_mult_symmetric(f, F);
  out.result = chi.to_string();
  out.oracle = {{"method", "symmetric-evaluation"},
                {"value", by_symmetric.to_string()},
                {"agrees", chi == by_symmetric}};
  out.text = chi.to_string();
  out.ok = chi == by_symmetric;
  return out;
}

Outcome do_sym_ops(const Options& o) {
  require_n(o);
  const RingSpec spec = parse_ring(o.ring);
  const Poly f = parse_poly(o.f, spec);
  Outcome out;
  out.result = json::array();
  std::ostringstream text;
  const auto ops = sym_ops_of(f, o.n);
  for (std::size_t i = 0; i < ops.size(); ++i) {
    out.result.push_back(ops[i].to_string());
    text << (i ? "\n" : "") << "s" << i + 1 << " = " << ops[i].to_string();
  }
  out.text = text.str();
  return out;
}

Outcome do_decompose(const Options& o) {
  require_n(o);
  const RingSpec spec = parse_ring(o.ring);
  const MultiPoly m = parse_multi(o.poly, spec, o.n);
  const SymElem s = decompose(m);
  const bool agrees = expand(s) == m;
  Outcome out;
  out.result = s.to_string();
  out.oracle = {{"method", "expand"}, {"agrees", agrees}};
  out.text = s.to_string();
  out.ok = agrees;
  return out;
}

Outcome do_resultant_check(const Options& o) {
  const RingSpec spec = parse_ring(o.ring);
  const MonicPoly P = parse_monic(o.P, spec, "P");
  const MonicPoly Q = parse_monic(o.Q, spec, "Q");
  const ResultantSymmetry r = resultant_symmetry(P, Q);
  const RingValue sylvester = check::sylvester_resultant(P.poly(), Q.poly());
  Outcome out;
  out.result = {{"norm-P-of-Q", r.norm_p_of_q.to_string()},
                {"norm-Q-of-P", r.norm_q_of_p.to_string()},
                {"sign", r.sign},
                {"holds", r.holds}};
  out.oracle = {{"method", "sylvester-determinant"},
                {"value", sylvester.to_string()},
                {"agrees", sylvester == r.norm_p_of_q}};
  out.text = "N_P(Q) = " + r.norm_p_of_q.to_string() + "\nN_Q(P) = " + r.norm_q_of_p.to_string() +
             "\nsign = " + std::to_string(r.sign) + "\nholds = " + yes_no(r.holds);
  out.ok = r.holds && sylvester == r.norm_p_of_q;
  return out;
}

Outcome do_push_norm(const Options& o) {
  const RingSpec spec = parse_ring(o.ring);
  const RingHom phi = parse_hom(o.hom, spec);
  const MonicPoly F = parse_monic(o.F, spec, "F");
  const Poly f = parse_poly(o.f, spec);
  const PushedNorm p = push_norm(phi, f, F);
  Outcome out;
  json pairs = json::array();
  std::ostringstream text;
  text << "phi(N_F(f)) = " << p.image_of_norm.to_string()
       << "\nN_F'(f') = " << p.norm_of_image.to_string();
  for (std::size_t i = 0; i < p.operator_pairs.size(); ++i) {
    const auto& [a, b] = p.operator_pairs[i];
    pairs.push_back({a.to_string(), b.to_string()});
    text << "\ns" << i + 1 << ": " << a.to_string() << " | " << b.to_string();
  }
  text << "\nholds = " << yes_no(p.holds());
  out.result = {{"image-of-norm", p.image_of_norm.to_string()},
                {"norm-of-image", p.norm_of_image.to_string()},
                {"coefficient-pairs", pairs},
                {"holds", p.holds()}};
  out.text = text.str();
  out.ok = p.holds();
  return out;
}

Outcome do_membership(const Options& o) {
  const RingSpec spec = parse_ring(o.ring);
  const MonicPoly F = parse_monic(o.F, spec, "F");
  const MultSetSpec U = parse_multset(o.multset, spec);
  const bool member = is_free_quotient(F, U);
  Outcome out;
  out.result = member;
  out.text = yes_no(member);
  const bool searchable = spec.is_finite() && (U.kind() == MultSetKind::kFinGen ||
                                               U.kind() == MultSetKind::kTrivial);
  if (searchable) {
    try {
      const bool by_search = free_quotient_oracle(F, U);
      out.oracle = {{"method", "inverse-search"}, {"value", by_search}, {"agrees", by_search == member}};
      out.ok = by_search == member;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kOracleInfeasible) throw;
    }
  }
  return out;
}

Outcome do_recover(const Options& o) {
  const RingSpec spec = parse_ring(o.ring);
  const SquareMatrix theta = parse_matrix(o.matrix, spec);
  const MonicPoly F = recover_monic(theta);
  const bool agrees = F.poly() == check::charpoly_cofactor(theta);
  Outcome out;
  out.result = F.to_string();
  out.oracle = {{"method", "cofactor-expansion"}, {"cayley-hamilton", true}, {"agrees", agrees}};
  out.text = F.to_string();
  out.ok = agrees;
  return out;
}

Outcome do_addition(const Options& o) {
  require_n(o);
  const RingSpec spec = parse_ring(o.ring);
  const SymElem s = parse_sym(o.s, spec, o.n);
  const SymPolyX image = addition_map(s);
  const bool round_trip = section_inverts_addition(s);
  Outcome out;
  out.result = image.to_string();
  out.oracle = {{"method", "section-round-trip"}, {"agrees", round_trip}};
  out.text = image.to_string();
  out.ok = round_trip;
  return out;
}

Outcome do_section(const Options& o) {
  require_n(o);
  const RingSpec spec = parse_ring(o.ring);
  const SymPolyX t = parse_sym_x(o.t, spec, o.n - 1);
  const SymPolyX image = section_map(t, o.n);
  const bool round_trip = addition_inverts_section(t, o.n);
  Outcome out;
  out.result = image.to_string();
  out.oracle = {{"method", "addition-round-trip"}, {"agrees", round_trip}};
  out.text = image.to_string();
  out.ok = round_trip;
  return out;
}

Outcome do_count(const Options& o) {
  require_n(o);
  const RingSpec spec = parse_ring(o.ring);
  if (spec.kind() != RingKind::kPrimeField || !spec.modulus().fits_ulong_p()) {
    throw Error(ErrorKind::kUnsupportedRing, "count needs a ring GF:<p>, not " + spec.to_string());
  }
  const std::uint64_t q = spec.modulus().get_ui();
  const MultSetSpec U = parse_multset(o.multset, spec);
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t count = count_points(q, o.n, U, thread_count());
  const double elapsed = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  Outcome out;
  out.result = {{"q", q}, {"n", o.n}, {"multset", U.to_string()}, {"count", count}, {"elapsed", elapsed}};
  out.text = std::to_string(count);
  if (U.kind() == MultSetKind::kFinGen || U.kind() == MultSetKind::kTrivial) {
    const std::uint64_t by_gcd = check::count_coprime(q, o.n, U.generators());
    out.oracle = {{"method", "gcd-enumeration"}, {"value", by_gcd}, {"agrees", by_gcd == count}};
    out.ok = by_gcd == count;
  }
  return out;
}

Outcome do_selftest(const Options& o) {
  Outcome out;
  out.result = json::array();
  std::ostringstream text;
  std::size_t failed = 0;
  const auto reports = check::selftest_suite(o.seed);
  for (const auto& r : reports) {
    out.result.push_back({{"name", r.name},
                          {"trials", r.trials},
                          {"failures", r.failures},
                          {"passed", r.passed()},
                          {"first-failure", r.first_failure}});
    text << r.summary() << "\n";
    failed += !r.passed();
  }
  text << "selftest seed " << o.seed << ": " << reports.size() - failed << "/" << reports.size()
       << " suites passed";
  out.text = text.str();
  out.ok = failed == 0;
  return out;
}

struct Verb {
  const char* name;
  const char* description;
  std::function<void(CLI::App&, Options&)> options;
  std::function<Outcome(const Options&)> action;
};

void add_ring(CLI::App& app, Options& o) {
  app.add_option("--ring", o.ring, "Coefficient ring: ZZ | QQ | Zmod:<m> | GF:<p> | Poly:<ring>:<var>")
      ->capture_default_str();
}

std::vector<Verb> verbs() {
  return {
      {"norm", "Norm N_F(f) = det of multiplication by f on A[X]/(F)",
       [](CLI::App& a, Options& o) {
         add_ring(a, o);
         a.add_option("--F", o.F, "Monic modulus F")->required();
         a.add_option("--f", o.f, "Polynomial f")->required();
       },
       do_norm},
      {"charpoly", "Characteristic polynomial of a matrix, or of multiplication by f mod F",
       [](CLI::App& a, Options& o) {
         add_ring(a, o);
         a.add_option("--matrix", o.matrix, "Matrix rows separated by ';', entries by ','");
         a.add_option("--F", o.F, "Monic modulus F");
         a.add_option("--f", o.f, "Polynomial f");
       },
       do_charpoly},
      {"sym-ops", "Coefficients s_i(f) of prod (Y - f(X_k)) in terms of e1..en",
       [](CLI::App& a, Options& o) {
         add_ring(a, o);
         a.add_option("--n", o.n, "Number of variables")->required();
         a.add_option("--f", o.f, "Polynomial f")->required();
       },
       do_sym_ops},
      {"decompose", "Write a symmetric polynomial in X1..Xn in terms of e1..en",
       [](CLI::App& a, Options& o) {
         add_ring(a, o);
         a.add_option("--n", o.n, "Number of variables")->required();
         a.add_option("--poly", o.poly, "Symmetric polynomial in X1..Xn")->required();
       },
       do_decompose},
      {"resultant-check", "Check N_P(Q) = (-1)^{pq} N_Q(P) for monic P, Q",
       [](CLI::App& a, Options& o) {
         add_ring(a, o);
         a.add_option("--P", o.P, "Monic P")->required();
         a.add_option("--Q", o.Q, "Monic Q")->required();
       },
       do_resultant_check},
      {"push-norm", "Check that a ring homomorphism commutes with N_F",
       [](CLI::App& a, Options& o) {
         add_ring(a, o);
         a.add_option("--hom", o.hom, "id | to:<ring> | eval:<elt>")->required();
         a.add_option("--F", o.F, "Monic modulus F")->required();
         a.add_option("--f", o.f, "Polynomial f")->required();
       },
       do_push_norm},
      {"membership", "Is A[X]/(F) unchanged by inverting U?",
       [](CLI::App& a, Options& o) {
         add_ring(a, o);
         a.add_option("--F", o.F, "Monic F")->required();
         a.add_option("--multset", o.multset, "trivial | gens:<poly>,... | local-at:<elt> | all-nonzero")
             ->required();
       },
       do_membership},
      {"recover", "Monic generator of a free quotient from the matrix of X",
       [](CLI::App& a, Options& o) {
         add_ring(a, o);
         a.add_option("--matrix", o.matrix, "Matrix rows separated by ';', entries by ','")->required();
       },
       do_recover},
      {"addition", "Image of an element of e1..en under the addition map",
       [](CLI::App& a, Options& o) {
         add_ring(a, o);
         a.add_option("--n", o.n, "Arity n")->required();
         a.add_option("--s", o.s, "Polynomial in e1..en")->required();
       },
       do_addition},
      {"section", "Image of a polynomial in X over e1..e(n-1) under the section map",
       [](CLI::App& a, Options& o) {
         add_ring(a, o);
         a.add_option("--n", o.n, "Target arity n")->required();
         a.add_option("--t", o.t, "Polynomial in X over e1..e(n-1)")->required();
       },
       do_section},
      {"count", "Count monic degree-n F over GF(p) with a free quotient for U",
       [](CLI::App& a, Options& o) {
         add_ring(a, o);
         a.add_option("--n", o.n, "Degree n")->required();
         a.add_option("--multset", o.multset, "trivial | gens:<poly>,... | local-at:<elt> | all-nonzero")
             ->required();
       },
       do_count},
      {"selftest", "Run the full invariant suite",
       [](CLI::App& a, Options& o) {
         a.add_option("--seed", o.seed, "Seed for the randomized suites")->capture_default_str();
       },
       do_selftest},
  };
}

json collect_inputs(const CLI::App& sub) {
  json inputs = json::object();
  for (const CLI::Option* opt : sub.get_options()) {
    if (opt->count() == 0 || opt->get_lnames().empty()) continue;
    const std::string& name = opt->get_lnames().front();
    if (name == "json" || name == "help") continue;
    inputs[name] = opt->results().back();
  }
  return inputs;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Norms, symmetric tensors and Hilbert points of the line", "symtensor"};
  app.require_subcommand(1);
  Options options;
  const auto table = verbs();
  std::map<const CLI::App*, const Verb*> by_app;
  for (const auto& verb : table) {
    CLI::App* sub = app.add_subcommand(verb.name, verb.description);
    verb.options(*sub, options);
    sub->add_flag("--json", options.json, "Print one JSON object");
    by_app[sub] = &verb;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const Verb& verb = *by_app.at(sub);
  json doc;
  doc["verb"] = verb.name;
  doc["inputs"] = collect_inputs(*sub);
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };

  int status = 0;
  try {
    const Outcome result = verb.action(options);
    doc["result"] = result.result;
    if (!result.oracle.is_null()) doc["oracle"] = result.oracle;
    doc["elapsed-ms"] = elapsed();
    if (options.json) {
      out << doc.dump() << "\n";
    } else {
      out << result.text << "\n";
    }
    if (!result.ok) {
      err << "invariant-violation: " << verb.name << " check failed\n";
      status = 1;
    }
  } catch (const Error& e) {
    status = e.kind() == ErrorKind::kParse ? 2 : 1;
    err << e.name() << ": " << e.what() << "\n";
    if (options.json) {
      doc["error"] = {{"name", std::string(e.name())}, {"message", e.what()}};
      doc["elapsed-ms"] = elapsed();
      out << doc.dump() << "\n";
    }
  }
  return status;
}

}  // namespace symtensor::cli
