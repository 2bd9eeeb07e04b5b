#include "symtensor/symmetric.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <utility>

#include "render.hpp"
#include "symtensor/errors.hpp"

namespace symtensor {

// ---------------------------------------------------------------------------
// Permutations

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t v : images_) {
    if (v >= images_.size() || seen[v]) throw Error(ErrorKind::kUsage, "not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n) throw Error(ErrorKind::kInvalidIndex, "transposition letter out of range");
  std::vector<std::size_t> images(n);
  for (std::size_t k = 0; k < n; ++k) images[k] = k;
  std::swap(images[i], images[j]);
  return Permutation(std::move(images));
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw Error(ErrorKind::kUsage, "permutation arity mismatch");
  std::vector<std::size_t> images(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) images[i] = p(q(i));
  return Permutation(std::move(images));
}

MultiPoly apply_permutation(const Permutation& p, const MultiPoly& m) {
  if (p.size() != m.nvars()) {
    throw Error(ErrorKind::kUsage, "permutation of " + std::to_string(p.size()) +
                                       " letters applied to " + std::to_string(m.nvars()) +
                                       " variables");
  }
  MultiPoly out(m.spec(), m.nvars());
  for (const auto& [mono, c] : m.terms()) {
    Monomial image;
    for (std::size_t i = 0; i < m.nvars(); ++i) image = image.with(p(i), mono[i]);
    out.add_term(image, c);
  }
  return out;
}

bool is_symmetric(const MultiPoly& m) {
  for (std::size_t i = 0; i + 1 < m.nvars(); ++i) {
    if (!(apply_permutation(Permutation::transposition(m.nvars(), i, i + 1), m) == m)) {
      return false;
    }
  }
  return true;
}

MultiPoly elementary(const RingSpec& spec, std::size_t i, std::size_t n) {
  if (i > n) {
    throw Error(ErrorKind::kInvalidIndex,
                "e_" + std::to_string(i) + " undefined in " + std::to_string(n) + " variables");
  }
  MultiPoly out(spec, n);
  if (n == 0) {
    out.add_term(Monomial(), spec.one());
    return out;
  }
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != i) continue;
    Monomial m;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask & (1U << k)) m = m.with(k, 1);
    }
    out.add_term(m, spec.one());
  }
  return out;
}

SymElem sym_generator(const RingSpec& spec, std::size_t i, std::size_t n) {
  if (i == 0) return SymElem::constant(spec.one(), n);
  if (i > n) return SymElem(spec, n);
  return SymElem::variable(spec, n, i - 1);
}

MultiPoly expand(const SymElem& s) {
  const std::size_t n = s.nvars();
  const RingSpec& spec = s.spec();
  std::vector<std::vector<MultiPoly>> powers(n);  // powers[i][k] = e_{i+1}^k
  auto power = [&](std::size_t i, unsigned k) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MultiPoly::constant(spec.one(), n));
    while (cache.size() <= k) cache.push_back(cache.back() * elementary(spec, i + 1, n));
    return cache[k];
  };
  MultiPoly out(spec, n);
  for (const auto& [mono, c] : s.terms()) {
    MultiPoly term = MultiPoly::constant(c, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (mono[i] > 0) term *= power(i, mono[i]);
    }
    out += term;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Decomposition into the elementary basis
//
// A symmetric polynomial is determined by its coefficients on partitions
// (exponent vectors sorted non-increasingly), because every monomial shares
// its coefficient with its sorted rearrangement. The decomposition loop only
// ever reads leading terms, which are partitions, so it runs entirely on
// partition coefficients.

namespace {

using PartitionCoeffs = std::map<Monomial, RingValue, std::greater<>>;

Monomial sorted_desc(Monomial m, std::size_t n) {
  std::vector<unsigned> e = m.exponents(n);
  std::sort(e.begin(), e.end(), std::greater<>());
  return Monomial::from_exponents(e);
}

bool is_partition(Monomial m, std::size_t n) {
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (m[i] < m[i + 1]) return false;
  }
  return true;
}

class Decomposer {
 public:
  Decomposer(RingSpec spec, std::size_t n) : spec_(std::move(spec)), n_(n) {
    subsets_.resize(n_ + 1);
    for (std::uint32_t mask = 0; mask < (1U << n_); ++mask) {
      subsets_[std::popcount(mask)].push_back(mask);
    }
  }

  SymElem run(const MultiPoly& m) {
    if (!is_symmetric(m)) {
      throw Error(ErrorKind::kPrecondition, "decompose needs a symmetric polynomial: " + m.to_string());
    }
    PartitionCoeffs rest;
    for (const auto& [mono, c] : m.terms()) {
      if (is_partition(mono, n_)) rest.emplace(mono, c);
    }
    SymElem out(spec_, n_);
    while (!rest.empty()) {
      const Monomial lead = rest.begin()->first;
      const RingValue c = rest.begin()->second;
      Monomial e_exponents;
      for (std::size_t i = 0; i < n_; ++i) {
        unsigned next = (i + 1 < n_) ? lead[i + 1] : 0;
        e_exponents = e_exponents.with(i, lead[i] - next);
      }
      out.add_term(e_exponents, c);
      for (const auto& [mu, v] : e_product(e_exponents)) {
        auto [it, inserted] = rest.try_emplace(mu, -(c * v));
        if (!inserted) {
          it->second -= c * v;
          if (it->second.is_zero()) rest.erase(it);
        } else if (it->second.is_zero()) {
          rest.erase(it);
        }
      }
      if (!rest.empty() && !(rest.begin()->first < lead)) {
        throw Error(ErrorKind::kInvariantViolation, "decomposition failed to reduce leading term");
      }
    }
    return out;
  }

 private:
  // Partition coefficients of e_1^{a_1} ... e_n^{a_n}.
  const PartitionCoeffs& e_product(Monomial a) {
    auto it = cache_.find(a);
    if (it != cache_.end()) return it->second;
    PartitionCoeffs value;
    if (a.is_one()) {
      value.emplace(Monomial(), spec_.one());
    } else {
      std::size_t i = n_;
      while (a[i - 1] == 0) --i;
      value = times_elementary(e_product(a.with(i - 1, a[i - 1] - 1)), i);
    }
    return cache_.emplace(a, std::move(value)).first->second;
  }

  // P * e_i on partition coefficients: the coefficient at mu sums the
  // coefficients of P at sort(mu - 1_S) over i-subsets S inside supp(mu).
  PartitionCoeffs times_elementary(const PartitionCoeffs& p, std::size_t i) {
    const auto& subsets = subsets_[i];
    auto add_mask = [&](Monomial m, std::uint32_t mask, int delta) -> std::optional<Monomial> {
      for (std::size_t k = 0; k < n_; ++k) {
        if (!(mask & (1U << k))) continue;
        if (delta < 0 && m[k] == 0) return std::nullopt;
        m = m.with(k, static_cast<unsigned>(static_cast<int>(m[k]) + delta));
      }
      return m;
    };
    std::set<Monomial> targets;
    for (const auto& [nu, c] : p) {
      for (std::uint32_t mask : subsets) targets.insert(sorted_desc(*add_mask(nu, mask, 1), n_));
    }
    PartitionCoeffs out;
    for (Monomial mu : targets) {
      RingValue acc = spec_.zero();
      for (std::uint32_t mask : subsets) {
        auto source = add_mask(mu, mask, -1);
        if (!source) continue;
        auto it = p.find(sorted_desc(*source, n_));
        if (it != p.end()) acc += it->second;
      }
      if (!acc.is_zero()) out.emplace(mu, std::move(acc));
    }
    return out;
  }

  RingSpec spec_;
  std::size_t n_;
  std::vector<std::vector<std::uint32_t>> subsets_;
  std::map<Monomial, PartitionCoeffs> cache_;
};

}  // namespace

SymElem decompose(const MultiPoly& m) { return Decomposer(m.spec(), m.nvars()).run(m); }

MultiPoly embed(const Poly& f, std::size_t n, std::size_t var) {
  if (var >= n) throw Error(ErrorKind::kInvalidIndex, "variable index out of range");
  MultiPoly out(f.spec(), n);
  auto c = f.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    out.add_term(Monomial().with(var, static_cast<unsigned>(k)), c[k]);
  }
  return out;
}

std::vector<SymElem> sym_ops_of(const Poly& f, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::kPrecondition, "sym_ops_of needs arity n >= 1");
  const RingSpec& spec = f.spec();
  // coeffs[j] is the coefficient of Y^j in prod_{k <= step} (Y - f(X_k)).
  std::vector<MultiPoly> coeffs{MultiPoly::constant(spec.one(), n)};
  for (std::size_t k = 0; k < n; ++k) {
    const MultiPoly fk = embed(f, n, k);
    std::vector<MultiPoly> next(coeffs.size() + 1, MultiPoly(spec, n));
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      next[j + 1] += coeffs[j];
      next[j] -= fk * coeffs[j];
    }
    coeffs = std::move(next);
  }
  Decomposer decomposer(spec, n);
  std::vector<SymElem> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    MultiPoly c = coeffs[n - i];
    if (i % 2 == 1) c = -c;
    out.push_back(decomposer.run(c));
  }
  return out;
}

SymElem diagonal_tensor(const Poly& f, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::kPrecondition, "diagonal_tensor needs arity n >= 1");
  MultiPoly product = MultiPoly::constant(f.spec().one(), n);
  for (std::size_t k = 0; k < n; ++k) product *= embed(f, n, k);
  return decompose(product);
}

// ---------------------------------------------------------------------------
// SymPolyX

SymPolyX::SymPolyX(RingSpec spec, std::size_t arity, std::vector<SymElem> coeffs)
    : spec_(std::move(spec)), arity_(arity), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!(c.spec() == spec_) || c.nvars() != arity_) {
      throw Error(ErrorKind::kUsage, "coefficient arity or ring mismatch");
    }
  }
  trim();
}

SymPolyX SymPolyX::constant(const SymElem& c) { return SymPolyX(c.spec(), c.nvars(), {c}); }

SymPolyX SymPolyX::x(const RingSpec& spec, std::size_t arity) {
  return SymPolyX(spec, arity, {SymElem(spec, arity), SymElem::constant(spec.one(), arity)});
}

SymPolyX SymPolyX::lift(const Poly& f, std::size_t arity) {
  std::vector<SymElem> coeffs;
  for (const auto& c : f.coefficients()) coeffs.push_back(SymElem::constant(c, arity));
  return SymPolyX(f.spec(), arity, std::move(coeffs));
}

std::optional<std::size_t> SymPolyX::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

SymElem SymPolyX::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : SymElem(spec_, arity_);
}

void SymPolyX::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void SymPolyX::check_compatible(const SymPolyX& other) const {
  if (!(spec_ == other.spec_) || arity_ != other.arity_) {
    throw Error(ErrorKind::kUsage, "arity or ring mismatch between symmetric polynomials");
  }
}

SymPolyX& SymPolyX::operator+=(const SymPolyX& rhs) {
  check_compatible(rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), SymElem(spec_, arity_));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

SymPolyX& SymPolyX::operator-=(const SymPolyX& rhs) {
  check_compatible(rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), SymElem(spec_, arity_));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

SymPolyX& SymPolyX::operator*=(const SymPolyX& rhs) {
  check_compatible(rhs);
  if (coeffs_.empty() || rhs.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<SymElem> out(coeffs_.size() + rhs.coeffs_.size() - 1, SymElem(spec_, arity_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

bool operator==(const SymPolyX& a, const SymPolyX& b) {
  return a.spec_ == b.spec_ && a.arity_ == b.arity_ && a.coeffs_ == b.coeffs_;
}

std::string SymPolyX::to_string() const {
  std::vector<detail::RenderTerm> terms;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k].is_zero()) continue;
    terms.push_back({coeffs_[k].text(), detail::power_text("X", k)});
  }
  return detail::render_sum(terms);
}

SymPolyX delta(const Poly& f, std::size_t n) {
  std::vector<SymElem> s = sym_ops_of(f, n);
  const RingSpec& spec = f.spec();
  std::vector<SymElem> coeffs(n + 1, SymElem(spec, n));
  coeffs[n] = SymElem::constant(spec.one(), n);
  for (std::size_t i = 1; i <= n; ++i) coeffs[n - i] = (i % 2 == 0) ? s[i - 1] : -s[i - 1];
  return SymPolyX(spec, n, std::move(coeffs));
}

std::vector<MultiPoly> expand_coefficients(const SymPolyX& t) {
  std::vector<MultiPoly> out;
  out.reserve(t.coefficients().size());
  for (const auto& c : t.coefficients()) out.push_back(expand(c));
  return out;
}

}  // namespace symtensor
