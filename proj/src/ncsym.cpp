#include "csfkit/ncsym.hpp"

#include <algorithm>
#include <numeric>

#include "csfkit/errors.hpp"
#include "csfkit/limits.hpp"
#include "lattice.hpp"

namespace csfkit {

char basis_letter(NCBasis b) {
  switch (b) {
    case NCBasis::m: return 'm';
    case NCBasis::e: return 'e';
    case NCBasis::p: return 'p';
  }
  return '?';
}

// ---------------------------------------------------------------------------
// NCSymF

NCSymF NCSymF::monomial(NCBasis basis, const SetPartition& index, Rational coefficient) {
  NCSymF f(index.ground_size(), basis);
  f.add_term(index, coefficient);
  return f;
}

Rational NCSymF::coefficient(const SetPartition& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Rational(0) : it->second;
}

void NCSymF::add_term(const SetPartition& index, const Rational& coefficient) {
  if (index.ground_size() != degree_) {
    throw DomainError("index " + index.to_string() + " is not a partition of [" + std::to_string(degree_) + "]");
  }
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(index, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {

void require_compatible(const NCSymF& a, const NCSymF& b) {
  if (a.degree() != b.degree() || a.basis() != b.basis()) {
    throw DomainError(std::string("NCSym operands differ: ") + basis_letter(a.basis()) + std::to_string(a.degree()) +
                      " vs " + basis_letter(b.basis()) + std::to_string(b.degree()));
  }
}

}  // namespace

NCSymF& NCSymF::operator+=(const NCSymF& other) {
  require_compatible(*this, other);
  for (const auto& [index, c] : other.terms_) add_term(index, c);
  return *this;
}

NCSymF& NCSymF::operator-=(const NCSymF& other) {
  require_compatible(*this, other);
  for (const auto& [index, c] : other.terms_) add_term(index, -c);
  return *this;
}

NCSymF& NCSymF::operator*=(const Rational& r) {
  if (r == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [index, c] : terms_) c *= r;
  return *this;
}

NCSymF operator+(NCSymF a, const NCSymF& b) { return a += b; }
NCSymF operator-(NCSymF a, const NCSymF& b) { return a -= b; }
NCSymF operator*(NCSymF a, const Rational& r) { return a *= r; }
NCSymF operator*(const Rational& r, NCSymF a) { return a *= r; }

// ---------------------------------------------------------------------------
// Change of basis

namespace {

void require_degree(int d, int cap, const char* what) {
  if (d < 0) throw DomainError("negative degree");
  if (d > cap) {
    throw CapacityError(std::string(what) + " at degree " + std::to_string(d) + " exceeds cap " + std::to_string(cap));
  }
}

using Dense = std::vector<Rational>;

Dense to_dense(const NCSymF& f, const detail::PartitionTable& table) {
  Dense v(table.size());
  for (const auto& [index, c] : f.terms()) v[static_cast<std::size_t>(table.index_of(index))] = c;
  return v;
}

NCSymF from_dense(const Dense& v, const detail::PartitionTable& table, NCBasis basis) {
  NCSymF out(table.degree(), basis);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] != 0) out.add_term(table.at(static_cast<int>(k)), v[k]);
  }
  return out;
}

// p_pi = sum_{sigma >= pi} m_sigma
Dense p_to_m(const Dense& a, const detail::PartitionTable& t) {
  Dense b(t.size());
  for (std::size_t pi = 0; pi < t.size(); ++pi) {
    if (a[pi] == 0) continue;
    for (const auto& up : t.coarsenings(static_cast<int>(pi))) b[static_cast<std::size_t>(up.index)] += a[pi];
  }
  return b;
}

// m_sigma = sum_{tau >= sigma} mu(sigma, tau) p_tau
Dense m_to_p(const Dense& b, const detail::PartitionTable& t) {
  Dense a(t.size());
  for (std::size_t sigma = 0; sigma < t.size(); ++sigma) {
    if (b[sigma] == 0) continue;
    for (const auto& up : t.coarsenings(static_cast<int>(sigma))) {
      a[static_cast<std::size_t>(up.index)] += b[sigma] * Rational(static_cast<long>(up.mobius));
    }
  }
  return a;
}

// e_pi = sum_{sigma <= pi} mu(0, sigma) p_sigma, so
// a_sigma = mu(0, sigma) * sum_{pi >= sigma} c_pi.
Dense e_to_p(const Dense& c, const detail::PartitionTable& t) {
  Dense a(t.size());
  for (std::size_t sigma = 0; sigma < t.size(); ++sigma) {
    Rational sum = 0;
    for (const auto& up : t.coarsenings(static_cast<int>(sigma))) sum += c[static_cast<std::size_t>(up.index)];
    if (sum != 0) a[sigma] = sum * Rational(static_cast<long>(t.mobius_from_bottom(static_cast<int>(sigma))));
  }
  return a;
}

// Inverse of e_to_p: c_pi = sum_{tau >= pi} mu(pi, tau) a_tau / mu(0, tau).
Dense p_to_e(const Dense& a, const detail::PartitionTable& t) {
  Dense scaled(t.size());
  for (std::size_t tau = 0; tau < t.size(); ++tau) {
    if (a[tau] != 0) scaled[tau] = a[tau] / Rational(static_cast<long>(t.mobius_from_bottom(static_cast<int>(tau))));
  }
  Dense c(t.size());
  for (std::size_t pi = 0; pi < t.size(); ++pi) {
    Rational sum = 0;
    for (const auto& up : t.coarsenings(static_cast<int>(pi))) {
      const Rational& s = scaled[static_cast<std::size_t>(up.index)];
      if (s != 0) sum += s * Rational(static_cast<long>(up.mobius));
    }
    c[pi] = sum;
  }
  return c;
}

// e_pi = sum of m_sigma over sigma with meet(sigma, pi) finest.
Dense e_to_m(const Dense& c, const detail::PartitionTable& t) {
  Dense b(t.size());
  for (std::size_t pi = 0; pi < t.size(); ++pi) {
    if (c[pi] == 0) continue;
    for (std::size_t sigma = 0; sigma < t.size(); ++sigma) {
      if (t.meet_is_finest(static_cast<int>(pi), static_cast<int>(sigma))) b[sigma] += c[pi];
    }
  }
  return b;
}

}  // namespace

NCSymF convert(const NCSymF& f, NCBasis target) {
  if (f.basis() == target) return f;
  const bool touches_e = f.basis() == NCBasis::e || target == NCBasis::e;
  require_degree(f.degree(), touches_e ? max_ncsym_e_degree() : max_ncsym_mp_degree(), "NCSym change of basis");
  const auto& t = detail::partition_table(f.degree());
  Dense v = to_dense(f, t);
  Dense out;
  switch (f.basis()) {
    case NCBasis::m:
      out = m_to_p(v, t);
      if (target == NCBasis::e) out = p_to_e(out, t);
      break;
    case NCBasis::p:
      out = target == NCBasis::m ? p_to_m(v, t) : p_to_e(v, t);
      break;
    case NCBasis::e:
      out = target == NCBasis::m ? e_to_m(v, t) : e_to_p(v, t);
      break;
  }
  return from_dense(out, t, target);
}

// ---------------------------------------------------------------------------
// Y_G

NCSymF y_via_stable_partitions(const LabeledGraph& g) {
  const int d = g.order();
  require_degree(d, max_ncsym_mp_degree(), "stable partition expansion");
  const auto adj = g.adjacency();
  const auto& t = detail::partition_table(d);
  NCSymF out(d, NCBasis::m);
  for (std::size_t k = 0; k < t.size(); ++k) {
    bool stable = true;
    for (std::uint32_t block : t.masks(static_cast<int>(k))) {
      for (std::uint32_t rest = block; rest && stable; rest &= rest - 1) {
        if (adj[static_cast<std::size_t>(__builtin_ctz(rest))] & block) stable = false;
      }
      if (!stable) break;
    }
    if (stable) out.add_term(t.at(static_cast<int>(k)), 1);
  }
  return out;
}

NCSymF y_via_edge_subsets(const LabeledGraph& g) {
  const int d = g.order();
  require_degree(d, max_ncsym_mp_degree(), "edge subset expansion");
  const auto& edges = g.edges();
  if (edges.size() > max_subset_edges()) {
    throw CapacityError("subset expansion limited to " + std::to_string(max_subset_edges()) + " edges");
  }
  std::map<SetPartition, long> counts;
  std::vector<Edge> chosen;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << edges.size()); ++s) {
    chosen.clear();
    for (std::size_t e = 0; e < edges.size(); ++e)
      if ((s >> e) & 1u) chosen.push_back(edges[e]);
    counts[component_partition(d, chosen)] += chosen.size() % 2 == 0 ? 1 : -1;
  }
  NCSymF out(d, NCBasis::p);
  for (const auto& [pi, c] : counts) out.add_term(pi, Rational(c));
  return out;
}

namespace {

NCSymF edgeless_y(int d) {
  const auto& t = detail::partition_table(d);
  NCSymF out(d, NCBasis::m);
  for (const auto& pi : t.partitions()) out.add_term(pi, 1);
  return out;
}

std::vector<int> inverse_permutation(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) inv[static_cast<std::size_t>(perm[k] - 1)] = static_cast<int>(k + 1);
  return inv;
}

class DeletionContraction {
 public:
  NCSymF y(const LabeledGraph& g) {
    if (g.edge_count() == 0) return edgeless_y(g.order());
    if (auto it = memo_.find(g); it != memo_.end()) return it->second;
    const int d = g.order();
    NCSymF result(d, NCBasis::m);
    if (g.has_edge(d - 1, d)) {
      result = step(g, Edge{d - 1, d});
    } else {
      // Move the largest edge {u, v} to {d-1, d}; Y is equivariant under
      // relabeling, so undo the relabeling on the result.
      const auto [u, v] = g.edges().back();
      std::vector<int> perm(static_cast<std::size_t>(d));
      std::iota(perm.begin(), perm.end(), 1);
      std::swap(perm[static_cast<std::size_t>(v - 1)], perm[static_cast<std::size_t>(d - 1)]);
      const int u_image = perm[static_cast<std::size_t>(u - 1)];
      // Compose with the transposition (u_image, d-1) applied after perm.
      for (int& image : perm) {
        if (image == u_image) {
          image = d - 1;
        } else if (image == d - 1) {
          image = u_image;
        }
      }
      result = permute(y(relabel(g, perm)), inverse_permutation(perm));
    }
    memo_.emplace(g, result);
    return result;
  }

  NCSymF step(const LabeledGraph& g, Edge e) {
    return y(delete_edge(g, e)) - induce(y(contract_edge(g, e)));
  }

 private:
  std::map<LabeledGraph, NCSymF> memo_;
};

}  // namespace

NCSymF y_via_deletion_contraction(const LabeledGraph& g) {
  require_degree(g.order(), max_ncsym_mp_degree(), "deletion-contraction");
  DeletionContraction dc;
  return dc.y(g);
}

NCSymF deletion_contraction(const LabeledGraph& g, Edge e) {
  const int d = g.order();
  require_degree(d, max_ncsym_mp_degree(), "deletion-contraction");
  e = make_edge(e.first, e.second);
  if (!g.has_edge(e.first, e.second)) throw DomainError("deletion-contraction edge not in graph");
  if (e != Edge{d - 1, d}) throw DomainError("deletion-contraction needs the edge {d-1, d}; relabel first");
  DeletionContraction dc;
  return dc.step(g, e);
}

// ---------------------------------------------------------------------------
// Induction, relabeling, commutative image

NCSymF induce(const NCSymF& f) {
  const int n = f.degree();
  if (n < 1) throw DomainError("induction needs degree >= 1");
  const NCSymF in_m = convert(f, NCBasis::m);
  NCSymF out(n + 1, NCBasis::m);
  for (const auto& [pi, c] : in_m.terms()) out.add_term(insert_into_block_of(pi, n), c);
  return out;
}

NCSymF permute(const NCSymF& f, const std::vector<int>& perm) {
  NCSymF out(f.degree(), f.basis());
  for (const auto& [pi, c] : f.terms()) out.add_term(csfkit::permute(pi, perm), c);
  return out;
}

SymF commutative_image(const NCSymF& f) {
  const NCSymF in_e = convert(f, NCBasis::e);
  SymF out(SymBasis::e);
  for (const auto& [pi, c] : in_e.terms()) {
    const IntPartition lambda = type_of(pi);
    Rational weight = c;
    for (int part : lambda.parts()) weight *= factorial(part);
    out.add_term(lambda, weight);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Congruence classes

ClassExpansion::ClassExpansion(int degree, int anchor) : degree_(degree), anchor_(anchor) {
  if (degree < 0) throw DomainError("negative degree");
  if (degree > 0 && (anchor < 1 || anchor > degree)) {
    throw DomainError("anchor " + std::to_string(anchor) + " outside [1.." + std::to_string(degree) + "]");
  }
}

Rational ClassExpansion::coefficient(const CongruenceKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ClassExpansion::add_term(const CongruenceKey& key, const Rational& coefficient) {
  if (key.type.weight() != degree_) {
    throw DomainError("class type " + key.type.to_string() + " does not have weight " + std::to_string(degree_));
  }
  if (!key.type.contains_part(key.marked_block_size)) {
    throw DomainError("marked block size " + std::to_string(key.marked_block_size) + " is not a part of " +
                      key.type.to_string());
  }
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

bool ClassExpansion::all_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second >= 0; });
}

namespace {

void require_compatible(const ClassExpansion& a, const ClassExpansion& b) {
  if (a.degree() != b.degree() || a.anchor() != b.anchor()) {
    throw DomainError("class expansions differ in degree or anchor");
  }
}

}  // namespace

ClassExpansion& ClassExpansion::operator+=(const ClassExpansion& other) {
  require_compatible(*this, other);
  for (const auto& [key, c] : other.terms_) add_term(key, c);
  return *this;
}

ClassExpansion& ClassExpansion::operator-=(const ClassExpansion& other) {
  require_compatible(*this, other);
  for (const auto& [key, c] : other.terms_) add_term(key, -c);
  return *this;
}

ClassExpansion& ClassExpansion::operator*=(const Rational& r) {
  if (r == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= r;
  return *this;
}

ClassExpansion operator+(ClassExpansion a, const ClassExpansion& b) { return a += b; }
ClassExpansion operator-(ClassExpansion a, const ClassExpansion& b) { return a -= b; }

ClassExpansion class_reduce(const NCSymF& f, int anchor) {
  const NCSymF in_e = convert(f, NCBasis::e);
  ClassExpansion out(f.degree(), anchor);
  for (const auto& [pi, c] : in_e.terms()) out.add_term(congruence_key(pi, anchor), c);
  return out;
}

ClassExpansion induce_e_class(const SetPartition& pi, int i) {
  const int d = pi.ground_size();
  if (i < 1 || i > d) throw DomainError("induction anchor outside [1..d]");
  const Rational weight = Rational(1, block_size_containing(pi, i));
  ClassExpansion out(d + 1, d + 1);
  out.add_term(congruence_key(add_block(pi, {d + 1}), d + 1), weight);
  out.add_term(congruence_key(insert_into_block_of(pi, i), d + 1), -weight);
  return out;
}

ClassExpansion induce_classes(const ClassExpansion& classes) {
  if (classes.anchor() != classes.degree()) throw DomainError("class-level induction needs anchor = degree");
  ClassExpansion out(classes.degree() + 1, classes.degree() + 1);
  for (const auto& [key, c] : classes.terms()) {
    const int b = key.marked_block_size;
    const Rational weight = c / Rational(b);
    out.add_term(CongruenceKey{key.type.with_part_added(1), 1}, weight);
    out.add_term(CongruenceKey{key.type.with_part_grown(b), b + 1}, -weight);
  }
  return out;
}

SymF commutative_image(const ClassExpansion& classes) {
  SymF out(SymBasis::e);
  for (const auto& [key, c] : classes.terms()) {
    Rational weight = c;
    for (int part : key.type.parts()) weight *= factorial(part);
    out.add_term(key.type, weight);
  }
  return out;
}

ParenVerdict is_e_paren_positive(const LabeledGraph& g, int anchor) {
  require_degree(g.order(), max_ncsym_e_degree(), "(e)-positivity check");
  ParenVerdict verdict;
  verdict.classes = class_reduce(y_via_stable_partitions(g), anchor);
  for (const auto& [key, c] : verdict.classes.terms()) {
    if (c < 0) {
      verdict.positive = false;
      verdict.witness = std::make_pair(key, c);
      break;
    }
  }
  return verdict;
}

PathCycleStep path_cycle_recursion_step(const ClassExpansion& path_classes) {
  const int d = path_classes.degree();
  if (path_classes.anchor() != d) throw DomainError("path classes must be anchored at d");
  PathCycleStep out{ClassExpansion(d + 1, d + 1), ClassExpansion(d + 1, d + 1)};
  for (const auto& [key, c] : path_classes.terms()) {
    const int b = key.marked_block_size;
    const CongruenceKey singleton{key.type.with_part_added(1), 1};
    const CongruenceKey grown{key.type.with_part_grown(b), b + 1};
    out.path.add_term(singleton, c * Rational(b - 1) / Rational(b));
    out.path.add_term(grown, c / Rational(b));
    out.cycle.add_term(grown, c);
  }
  return out;
}

ClassExpansion disjoint_union_clique_classes(const ClassExpansion& classes, int m, CliqueAnchor anchor) {
  if (m < 1) throw DomainError("clique order must be >= 1");
  const int d = classes.degree();
  ClassExpansion out(d + m, anchor == CliqueAnchor::kept ? classes.anchor() : d + m);
  for (const auto& [key, c] : classes.terms()) {
    const int marked = anchor == CliqueAnchor::kept ? key.marked_block_size : m;
    out.add_term(CongruenceKey{key.type.with_part_added(m), marked}, c);
  }
  return out;
}

bool verify_relabel_congruence(const LabeledGraph& g, const std::vector<int>& perm) {
  const int d = g.order();
  if (static_cast<int>(perm.size()) != d) throw DomainError("relabeling size does not match vertex count");
  if (d >= 1 && perm[static_cast<std::size_t>(d - 1)] != d) throw DomainError("relabeling must fix vertex d");
  const LabeledGraph moved = relabel(g, perm);
  return class_reduce(y_via_stable_partitions(moved), d) == class_reduce(y_via_stable_partitions(g), d);
}

}  // namespace csfkit
