#include "csfkit/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "csfkit/errors.hpp"
#include "csfkit/limits.hpp"

namespace csfkit {

char basis_letter(SymBasis b) { return b == SymBasis::e ? 'e' : 'p'; }

// ---------------------------------------------------------------------------
// SymF

SymF SymF::one(SymBasis basis) { return monomial(basis, IntPartition{}, 1); }

SymF SymF::monomial(SymBasis basis, IntPartition index, Rational coefficient) {
  SymF f(basis);
  f.add_term(index, coefficient);
  return f;
}

SymF SymF::generator(SymBasis basis, int n) {
  if (n < 0) throw DomainError("generator index must be nonnegative");
  return n == 0 ? one(basis) : monomial(basis, IntPartition{n});
}

Rational SymF::coefficient(const IntPartition& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> SymF::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int deg = terms_.begin()->first.weight();
  for (const auto& [index, c] : terms_) {
    if (index.weight() != deg) return std::nullopt;
  }
  return deg;
}

void SymF::add_term(const IntPartition& index, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(index, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {

void require_same_basis(const SymF& a, const SymF& b) {
  if (a.basis() != b.basis()) {
    throw DomainError(std::string("symmetric function basis mismatch: ") + basis_letter(a.basis()) + " vs " +
                      basis_letter(b.basis()));
  }
}

}  // namespace

SymF& SymF::operator+=(const SymF& other) {
  require_same_basis(*this, other);
  for (const auto& [index, c] : other.terms_) add_term(index, c);
  return *this;
}

SymF& SymF::operator-=(const SymF& other) {
  require_same_basis(*this, other);
  for (const auto& [index, c] : other.terms_) add_term(index, -c);
  return *this;
}

SymF& SymF::operator*=(const Rational& r) {
  if (r == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [index, c] : terms_) c *= r;
  return *this;
}

SymF add(const SymF& a, const SymF& b) { return a + b; }
SymF scale(const SymF& a, const Rational& r) { return a * r; }

SymF multiply(const SymF& a, const SymF& b) {
  require_same_basis(a, b);
  SymF out(a.basis());
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) out.add_term(ia.joined(ib), ca * cb);
  return out;
}

SymF operator+(SymF a, const SymF& b) { return a += b; }
SymF operator-(SymF a, const SymF& b) { return a -= b; }
SymF operator*(const SymF& a, const SymF& b) { return multiply(a, b); }
SymF operator*(SymF a, const Rational& r) { return a *= r; }
SymF operator*(const Rational& r, SymF a) { return a *= r; }
SymF operator-(SymF a) { return a *= Rational(-1); }

// ---------------------------------------------------------------------------
// Subset expansion

SymF csf_via_subsets(const LabeledGraph& g) {
  const auto& edges = g.edges();
  if (edges.size() > max_subset_edges()) {
    throw CapacityError("subset expansion limited to " + std::to_string(max_subset_edges()) + " edges, graph has " +
                        std::to_string(edges.size()));
  }
  const int d = g.order();
  const std::uint64_t subsets = std::uint64_t{1} << edges.size();
  std::map<std::vector<int>, long long> counts;
  std::vector<int> parent(static_cast<std::size_t>(d));
  std::vector<int> sizes(static_cast<std::size_t>(d));
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (std::uint64_t s = 0; s < subsets; ++s) {
    for (int k = 0; k < d; ++k) {
      parent[static_cast<std::size_t>(k)] = k;
      sizes[static_cast<std::size_t>(k)] = 1;
    }
    int parity = 0;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (!((s >> e) & 1u)) continue;
      parity ^= 1;
      int a = find(edges[e].first - 1), b = find(edges[e].second - 1);
      if (a == b) continue;
      if (sizes[static_cast<std::size_t>(a)] < sizes[static_cast<std::size_t>(b)]) std::swap(a, b);
      parent[static_cast<std::size_t>(b)] = a;
      sizes[static_cast<std::size_t>(a)] += sizes[static_cast<std::size_t>(b)];
    }
    std::vector<int> type;
    for (int k = 0; k < d; ++k)
      if (parent[static_cast<std::size_t>(k)] == k) type.push_back(sizes[static_cast<std::size_t>(k)]);
    std::sort(type.begin(), type.end(), std::greater<>());
    counts[type] += parity ? -1 : 1;
  }
  SymF out(SymBasis::p);
  for (const auto& [type, c] : counts) out.add_term(IntPartition(type), Rational(static_cast<long>(c)));
  return out;
}

// ---------------------------------------------------------------------------
// Change of basis through Newton's identities

namespace {

class GeneratorTables {
 public:
  /// p_n written in the e-basis.
  SymF p_in_e(int n) {
    std::lock_guard lock(mutex_);
    while (static_cast<int>(p_in_e_.size()) <= n) {
      const int k = static_cast<int>(p_in_e_.size());
      if (k == 0) {
        p_in_e_.push_back(SymF::one(SymBasis::e));
        continue;
      }
      // p_k = (-1)^{k-1} k e_k + sum_{j=1}^{k-1} (-1)^{j-1} e_j p_{k-j}
      SymF next = SymF::monomial(SymBasis::e, IntPartition{k}, Rational(k % 2 == 1 ? k : -k));
      for (int j = 1; j < k; ++j) {
        SymF term = multiply(SymF::generator(SymBasis::e, j), p_in_e_[static_cast<std::size_t>(k - j)]);
        if (j % 2 == 0) term *= Rational(-1);
        next += term;
      }
      p_in_e_.push_back(std::move(next));
    }
    return p_in_e_[static_cast<std::size_t>(n)];
  }

  /// e_n written in the p-basis.
  SymF e_in_p(int n) {
    std::lock_guard lock(mutex_);
    while (static_cast<int>(e_in_p_.size()) <= n) {
      const int k = static_cast<int>(e_in_p_.size());
      if (k == 0) {
        e_in_p_.push_back(SymF::one(SymBasis::p));
        continue;
      }
      // k e_k = sum_{j=1}^{k} (-1)^{j-1} e_{k-j} p_j
      SymF next(SymBasis::p);
      for (int j = 1; j <= k; ++j) {
        SymF term = multiply(e_in_p_[static_cast<std::size_t>(k - j)], SymF::generator(SymBasis::p, j));
        if (j % 2 == 0) term *= Rational(-1);
        next += term;
      }
      next *= Rational(1, k);
      e_in_p_.push_back(std::move(next));
    }
    return e_in_p_[static_cast<std::size_t>(n)];
  }

 private:
  std::mutex mutex_;
  std::vector<SymF> p_in_e_;
  std::vector<SymF> e_in_p_;
};

GeneratorTables& tables() {
  static GeneratorTables t;
  return t;
}

SymF convert_multiplicatively(const SymF& f, SymBasis target, SymF (GeneratorTables::*gen)(int)) {
  SymF out(target);
  for (const auto& [index, c] : f.terms()) {
    SymF product = SymF::one(target);
    for (int part : index.parts()) product = multiply(product, (tables().*gen)(part));
    product *= c;
    out += product;
  }
  return out;
}

}  // namespace

SymF p_to_e(const SymF& f) {
  if (f.basis() == SymBasis::e) throw DomainError("p_to_e expects a p-basis input");
  return convert_multiplicatively(f, SymBasis::e, &GeneratorTables::p_in_e);
}

SymF e_to_p(const SymF& f) {
  if (f.basis() == SymBasis::p) throw DomainError("e_to_p expects an e-basis input");
  return convert_multiplicatively(f, SymBasis::p, &GeneratorTables::e_in_p);
}

SymF to_basis(const SymF& f, SymBasis target) {
  if (f.basis() == target) return f;
  return target == SymBasis::e ? p_to_e(f) : e_to_p(f);
}

EPositivity is_e_positive(const SymF& f) {
  const SymF in_e = to_basis(f, SymBasis::e);
  for (const auto& [index, c] : in_e.terms()) {
    if (c < 0) return EPositivity{false, std::make_pair(index, c)};
  }
  return EPositivity{};
}

Rational specialize_ones(const SymF& f, int k) {
  if (k < 0) throw DomainError("number of variables must be nonnegative");
  Rational total = 0;
  for (const auto& [index, c] : f.terms()) {
    Rational value = c;
    for (int part : index.parts()) {
      value *= f.basis() == SymBasis::e ? binomial(k, part) : Rational(k);
      if (value == 0) break;
    }
    total += value;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Monomial expansion oracle

namespace {

constexpr int kExponentBits = 6;
using Poly = std::unordered_map<std::uint64_t, mpz_class>;

Poly poly_multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) out[ma + mb] += ca * cb;
  return out;
}

Poly generator_poly(SymBasis basis, int n, int variables) {
  Poly out;
  if (basis == SymBasis::p) {
    for (int v = 0; v < variables; ++v) out[static_cast<std::uint64_t>(n) << (kExponentBits * v)] = 1;
    return out;
  }
  if (n > variables) return out;
  // Squarefree monomials of degree n.
  for (std::uint32_t mask = 0; mask < (1u << variables); ++mask) {
    if (__builtin_popcount(mask) != n) continue;
    std::uint64_t key = 0;
    for (int v = 0; v < variables; ++v)
      if ((mask >> v) & 1u) key += std::uint64_t{1} << (kExponentBits * v);
    out[key] = 1;
  }
  return out;
}

}  // namespace

MonomialVector to_monomial_vector(const SymF& f, int variables) {
  if (variables < 0) throw DomainError("variable count must be nonnegative");
  if (variables > 10) throw CapacityError("monomial expansion limited to 10 variables");
  for (const auto& [index, c] : f.terms()) {
    if (index.weight() > variables) {
      throw DomainError("need at least " + std::to_string(index.weight()) + " variables, got " +
                        std::to_string(variables));
    }
  }
  std::map<std::pair<SymBasis, int>, Poly> generators;
  auto gen = [&](int n) -> const Poly& {
    auto key = std::make_pair(f.basis(), n);
    auto it = generators.find(key);
    if (it == generators.end()) it = generators.emplace(key, generator_poly(f.basis(), n, variables)).first;
    return it->second;
  };
  std::unordered_map<std::uint64_t, Rational> accum;
  for (const auto& [index, c] : f.terms()) {
    Poly product{{0, mpz_class(1)}};
    for (int part : index.parts()) product = poly_multiply(product, gen(part));
    for (const auto& [mono, coeff] : product) accum[mono] += c * Rational(coeff);
  }
  MonomialVector out;
  const std::uint64_t field = (std::uint64_t{1} << kExponentBits) - 1;
  for (const auto& [mono, coeff] : accum) {
    if (coeff == 0) continue;
    std::vector<int> exponents(static_cast<std::size_t>(variables));
    for (int v = 0; v < variables; ++v) {
      exponents[static_cast<std::size_t>(v)] = static_cast<int>((mono >> (kExponentBits * v)) & field);
    }
    out.emplace(std::move(exponents), coeff);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Triple deletion

TripleDeletionVerdict verify_triple_deletion(const LabeledGraph& g, int u, int v, int w) {
  const int d = g.order();
  for (int x : {u, v, w}) {
    if (x < 1 || x > d) throw DomainError("triple deletion vertex out of range");
  }
  if (u == v || v == w || u == w) throw DomainError("triple deletion needs three distinct vertices");
  if (g.has_edge(u, v) || g.has_edge(v, w) || g.has_edge(u, w)) {
    throw DomainError("triple deletion vertices must be pairwise nonadjacent");
  }
  const Edge e1 = make_edge(u, v), e2 = make_edge(v, w), e3 = make_edge(w, u);
  auto x_of = [&](std::initializer_list<Edge> extra) {
    LabeledGraph h = g;
    for (const Edge& e : extra) h = add_edge(h, e);
    return csf_via_subsets(h);
  };
  const SymF g1 = x_of({e1}), g2 = x_of({e2}), g3 = x_of({e3});
  const SymF g12 = x_of({e1, e2}), g23 = x_of({e2, e3}), g123 = x_of({e1, e2, e3});
  return TripleDeletionVerdict{g12 == g1 + g23 - g3, g123 == g12 + g23 - g2};
}

}  // namespace csfkit
