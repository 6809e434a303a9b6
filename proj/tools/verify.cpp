#include "verify.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>

#include "csfkit/errors.hpp"
#include "csfkit/io.hpp"
#include "csfkit/ncsym.hpp"
#include "csfkit/series.hpp"
#include "csfkit/symfunc.hpp"

namespace csfkit::cli {
namespace {

std::string pair_name(const char* kind, int a, int b) {
  return std::string(kind) + ":" + std::to_string(a) + "," + std::to_string(b);
}

SymF brute(const LabeledGraph& g) { return csf_via_subsets(g); }

VerifyRow equality_row(std::string instance, const SymF& lhs, const SymF& rhs) {
  const SymF a = to_basis(lhs, SymBasis::e);
  const SymF b = to_basis(rhs, SymBasis::e);
  if (a == b) return {std::move(instance), true, format(a)};
  return {std::move(instance), false, format(a) + " != " + format(b)};
}

VerifyRow gf_row(const GfReport& r) {
  std::string instance = "gf " + r.identity + " to (";
  for (std::size_t k = 0; k < r.truncation.size(); ++k) instance += (k ? "," : "") + std::to_string(r.truncation[k]);
  instance += ")";
  if (r.match()) return {instance, true, std::to_string(r.compared) + " coefficients"};
  std::string where;
  for (int p : r.first_mismatch->position) where += (where.empty() ? "" : ",") + std::to_string(p);
  return {instance, false,
          r.first_mismatch->series + " at (" + where + "): residual " +
              format(r.first_mismatch->lhs - r.first_mismatch->rhs)};
}

std::pair<int, int> order_or(const VerifyOptions& o, int nx, int ny) { return o.order.value_or(std::make_pair(nx, ny)); }

std::pair<int, int> m_range_or(const VerifyOptions& o, int lo, int hi) { return o.m_range.value_or(std::make_pair(lo, hi)); }

VerifyRow replay_row(const ReplayReport& r, bool want_nonnegative) {
  std::string detail;
  for (const auto& c : r.checks) {
    if (!c.match()) detail += (detail.empty() ? "mismatch: " : "; ") + c.label;
  }
  bool pass = r.match();
  if (want_nonnegative && !r.nonnegative()) {
    pass = false;
    detail += (detail.empty() ? "" : "; ") + std::string("negative class coefficient");
  }
  if (pass) detail = format(r.formula());
  return {r.identity + " m=" + std::to_string(r.m), pass, detail};
}

std::vector<VerifyRow> tadpole_recurrence(const VerifyOptions& o) {
  std::vector<VerifyRow> rows;
  const int max_d = o.max_d.value_or(8);
  for (int m = 2; m <= max_d; ++m)
    for (int l = 0; m + l <= max_d; ++l) {
      const LabeledGraph g = m == 2 ? path(l + 2) : tadpole(m, l);
      rows.push_back(equality_row(pair_name("tadpole", m, l), tadpole_via_recurrence(m, l), brute(g)));
    }
  const auto [nx, ny] = order_or(o, 5, 5);
  rows.push_back(gf_row(verify_tadpole_gf(nx, ny)));
  return rows;
}

std::vector<VerifyRow> line_tadpole_formula(const VerifyOptions& o) {
  std::vector<VerifyRow> rows;
  const int max_d = o.max_d.value_or(8);
  for (int m = 2; m <= max_d; ++m)
    for (int l = m == 2 ? 1 : 0; m + l <= max_d; ++l) {
      // L(Tp_{2,l}) is a triangle with a pendant path of length l-1.
      const LabeledGraph g = m == 2 ? tadpole(3, l - 1) : (l == 0 ? cycle(m) : line_tadpole(m, l));
      const SymF formula = line_tadpole_via_formula(m, l);
      VerifyRow row = equality_row(pair_name("ltadpole", m, l), formula, brute(g));
      if (row.pass && to_basis(line_tadpole_via_tadpole(m, l), SymBasis::e) != to_basis(formula, SymBasis::e)) {
        row = {row.instance, false, "closed form and tadpole route disagree"};
      }
      rows.push_back(std::move(row));
    }
  const auto [nx, ny] = order_or(o, 5, 5);
  rows.push_back(gf_row(verify_ltadpole_gf(nx, ny)));
  return rows;
}

std::vector<VerifyRow> cycle_chord_formula(const VerifyOptions& o) {
  std::vector<VerifyRow> rows;
  const int max_d = o.max_d.value_or(8);
  for (int a = 2; a + 2 <= max_d; ++a)
    for (int b = 2; a + b <= max_d; ++b) {
      rows.push_back(equality_row(pair_name("cc", a, b), cc_via_formula(a, b), brute(cycle_chord(a, b))));
    }
  for (int a = 2; a + 2 <= max_d; ++a) {
    rows.push_back(equality_row(pair_name("cc", a, 1) + " vs cycle:" + std::to_string(a + 1), cc_via_formula(a, 1),
                                cycle_csf(a + 1)));
  }
  const auto [nx, ny] = order_or(o, 4, 4);
  rows.push_back(gf_row(verify_cc_gf(nx, ny)));
  return rows;
}

std::vector<VerifyRow> triple_deletion(const VerifyOptions& o) {
  const int max_d = std::min(o.max_d.value_or(7), 7);
  if (max_d < 3) throw DomainError("triple deletion needs --max >= 3");
  std::mt19937 rng(20240917u);
  std::vector<VerifyRow> rows;
  while (rows.size() < 50) {
    const int d = std::uniform_int_distribution<int>(3, max_d)(rng);
    std::vector<Edge> edges;
    for (int u = 1; u <= d; ++u)
      for (int v = u + 1; v <= d; ++v)
        if (rng() % 2) edges.emplace_back(u, v);
    const LabeledGraph g(d, edges);
    std::vector<std::array<int, 3>> triples;
    for (int u = 1; u <= d; ++u)
      for (int v = u + 1; v <= d; ++v)
        for (int w = v + 1; w <= d; ++w)
          if (!g.has_edge(u, v) && !g.has_edge(v, w) && !g.has_edge(u, w)) triples.push_back({u, v, w});
    if (triples.empty()) continue;
    const auto [u, v, w] = triples[rng() % triples.size()];
    const TripleDeletionVerdict verdict = verify_triple_deletion(g, u, v, w);
    rows.push_back({describe(g) + " at " + std::to_string(u) + "," + std::to_string(v) + "," + std::to_string(w),
                    verdict.first && verdict.second,
                    std::string(verdict.first ? "" : "first identity fails ") + (verdict.second ? "" : "second identity fails")});
  }
  return rows;
}

std::vector<VerifyRow> subset_expansion(const VerifyOptions& o) {
  std::vector<VerifyRow> rows;
  for (const auto& [name, g] : corpus(o.max_d.value_or(8))) {
    const SymF x = csf_via_subsets(g);
    std::string detail;
    for (int k = 0; k <= g.order() + 1; ++k) {
      const Rational lhs = specialize_ones(x, k);
      const Rational rhs(static_cast<unsigned long>(chromatic_polynomial_value(g, k)));
      if (lhs != rhs) {
        detail = "k=" + std::to_string(k) + ": " + to_string(lhs) + " != " + to_string(rhs);
        break;
      }
    }
    rows.push_back({name, detail.empty(), detail.empty() ? "chromatic polynomial agrees" : detail});
  }
  return rows;
}

std::vector<VerifyRow> relabel_congruence(const VerifyOptions& o) {
  std::vector<VerifyRow> rows;
  for (const auto& [name, g] : corpus(std::min(o.max_d.value_or(6), 7))) {
    const int d = g.order();
    int checked = 0;
    bool ok = true;
    for (int i = 1; i < d && ok; ++i)
      for (int j = i + 1; j < d && ok; ++j) {
        std::vector<int> perm(static_cast<std::size_t>(d));
        for (int k = 1; k <= d; ++k) perm[static_cast<std::size_t>(k - 1)] = k;
        std::swap(perm[static_cast<std::size_t>(i - 1)], perm[static_cast<std::size_t>(j - 1)]);
        ok = verify_relabel_congruence(g, perm);
        ++checked;
      }
    rows.push_back({name, ok, std::to_string(checked) + " transpositions fixing " + std::to_string(d)});
  }
  return rows;
}

std::vector<VerifyRow> line_tadpole_replay(const VerifyOptions& o) {
  std::vector<VerifyRow> rows;
  const auto [lo, hi] = m_range_or(o, 3, 6);
  for (int m = lo; m <= hi; ++m) rows.push_back(replay_row(replay_line_tadpole(m), true));
  const int max_d = o.max_d.value_or(7);
  for (int m = 3; m < max_d; ++m)
    for (int l = 1; m + l <= max_d; ++l) {
      const ParenVerdict v = is_e_paren_positive(line_tadpole(m, l));
      rows.push_back({pair_name("ltadpole", m, l) + " (e)-positive", v.positive,
                      v.witness ? v.witness->first.to_string() + ": " + to_string(v.witness->second) : ""});
    }
  for (int m = 3; m + 2 <= max_d; ++m) {
    const LabeledGraph attached = clique_attach(line_tadpole(m, 1), 2);
    const bool same = attached == line_tadpole(m, 2);
    const bool positive = is_e_paren_positive(attached).positive;
    rows.push_back({pair_name("ltadpole", m, 1) + " + K_2", same && positive,
                    same ? "equals ltadpole:" + std::to_string(m) + ",2" : "differs from ltadpole:" + std::to_string(m) + ",2"});
  }
  return rows;
}

std::vector<VerifyRow> relabeled_line_tadpole_replay(const VerifyOptions& o) {
  std::vector<VerifyRow> rows;
  const auto [lo, hi] = m_range_or(o, 3, 5);
  for (int m = lo; m <= hi; ++m) rows.push_back(replay_row(replay_relabeled_line_tadpole(m), false));
  return rows;
}

std::vector<VerifyRow> cycle_chord_replay(const VerifyOptions& o) {
  std::vector<VerifyRow> rows;
  const auto [lo, hi] = m_range_or(o, 3, 5);
  for (int m = lo; m <= hi; ++m) rows.push_back(replay_row(replay_cycle_chord_m3(m), true));
  return rows;
}

std::vector<VerifyRow> class_induction(const VerifyOptions& o) {
  std::vector<VerifyRow> rows;
  const int max_d = std::min(o.max_d.value_or(5), 6);
  for (int d = 1; d <= max_d; ++d) {
    int checked = 0;
    std::string failure;
    for (const SetPartition& pi : enumerate_partitions(d)) {
      for (int i = 1; i <= d && failure.empty(); ++i) {
        const SetPartition moved = apply_transposition(pi, d, i);
        const ClassExpansion direct = class_reduce(induce(NCSymF::monomial(NCBasis::e, moved)), d + 1);
        if (direct != induce_e_class(pi, i)) failure = pi.to_string() + " at i=" + std::to_string(i);
        ++checked;
      }
    }
    rows.push_back({"d=" + std::to_string(d), failure.empty(),
                    failure.empty() ? std::to_string(checked) + " (partition, i) pairs" : "fails for " + failure});
  }
  return rows;
}

std::vector<VerifyRow> path_cycle_classes(const VerifyOptions& o) {
  std::vector<VerifyRow> rows;
  const int max_d = std::min(o.max_d.value_or(7), 8);
  ClassExpansion path_classes = class_reduce(y_via_stable_partitions(path(1)), 1);
  for (int d = 1; d < max_d; ++d) {
    const PathCycleStep step = path_cycle_recursion_step(path_classes);
    const int n = d + 1;
    const bool path_ok = step.path == class_reduce(y_via_stable_partitions(path(n)), n);
    rows.push_back({"path:" + std::to_string(n), path_ok && step.path.all_nonnegative(), format(step.path)});
    if (n >= 3) {
      const bool cycle_ok = step.cycle == class_reduce(y_via_stable_partitions(cycle(n)), n);
      rows.push_back({"cycle:" + std::to_string(n), cycle_ok && step.cycle.all_nonnegative(), format(step.cycle)});
    }
    path_classes = step.path;
  }
  return rows;
}

std::vector<VerifyRow> univariate_gf(const VerifyOptions& o, GfReport (*run)(int)) {
  return {gf_row(run(order_or(o, 8, 8).first))};
}

}  // namespace

const std::vector<VerifyEntry>& verify_catalog() {
  static const std::vector<VerifyEntry> catalog = {
      {"tadpole-recurrence", "thm3.1", "tadpole recurrence against brute force, and the tadpole generating function",
       tadpole_recurrence},
      {"line-tadpole-formula", "thm3.2",
       "both line-tadpole formulas against brute force, and their generating function", line_tadpole_formula},
      {"cycle-chord-formula", "thm4.1",
       "cycle-chord expansion against brute force and cycles, and its generating function", cycle_chord_formula},
      {"triple-deletion", "thm2.4", "triple deletion on 50 random graphs", triple_deletion},
      {"subset-expansion", "prop2.1", "edge-subset expansion against chromatic polynomials", subset_expansion},
      {"relabel-congruence", "lemma2.7", "relabelings fixing d preserve class sums", relabel_congruence},
      {"line-tadpole-replay", "thm3.3", "class-level derivation for L(Tp_{m,1}) and (e)-positivity",
       line_tadpole_replay},
      {"relabeled-line-tadpole-replay", "lemma4.5", "class-level derivation for L(Tp_{m,1})'",
       relabeled_line_tadpole_replay},
      {"cycle-chord-replay", "thm4.4", "class-level derivation for CC_{m,3}", cycle_chord_replay},
      {"class-induction", "prop2.8", "two-term class rule for induction, every anchor", class_induction},
      {"path-cycle-classes", "prop2.9", "class recursion for paths and cycles", path_cycle_classes},
      {"power-sum-gf", "gf-p", "sum p_j (-z)^j = F/E", [](const VerifyOptions& o) { return univariate_gf(o, verify_power_sum_gf); }},
      {"path-cycle-gf", "gf-path", "path and cycle generating functions",
       [](const VerifyOptions& o) { return univariate_gf(o, verify_path_cycle_gf); }},
      {"tadpole-gf", "gf-tadpole", "tadpole generating function",
       [](const VerifyOptions& o) {
         const auto [nx, ny] = order_or(o, 5, 5);
         return std::vector<VerifyRow>{gf_row(verify_tadpole_gf(nx, ny))};
       }},
      {"line-tadpole-gf", "gf-ltadpole", "line-tadpole generating function",
       [](const VerifyOptions& o) {
         const auto [nx, ny] = order_or(o, 5, 5);
         return std::vector<VerifyRow>{gf_row(verify_ltadpole_gf(nx, ny))};
       }},
      {"cycle-chord-gf", "gf-cc", "cycle-chord generating function",
       [](const VerifyOptions& o) {
         const auto [nx, ny] = order_or(o, 4, 4);
         return std::vector<VerifyRow>{gf_row(verify_cc_gf(nx, ny))};
       }},
  };
  return catalog;
}

const VerifyEntry* find_verify_entry(const std::string& name) {
  for (const auto& entry : verify_catalog()) {
    if (entry.id == name || entry.alias == name) return &entry;
  }
  return nullptr;
}

}  // namespace csfkit::cli
