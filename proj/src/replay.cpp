// Class-level replays for L(Tp_{m,1}), its relabeling L(Tp_{m,1})', and
// CC_{m,3}. Every expansion is rebuilt from the classes (rho, b) of Y_{P_{m-1}}
// and compared key by key with class_reduce of a direct computation.

#include <algorithm>
#include <functional>

#include "csfkit/errors.hpp"
#include "csfkit/limits.hpp"
#include "csfkit/ncsym.hpp"

namespace csfkit {
namespace {

// Operations on a class key (lambda, b): the marked block absorbs the next
// element, or the next element opens a singleton marked block.
CongruenceKey grow(const CongruenceKey& k) {
  return {k.type.with_part_grown(k.marked_block_size), k.marked_block_size + 1};
}
CongruenceKey single(const CongruenceKey& k) { return {k.type.with_part_added(1), 1}; }
// rho': element m-1 renamed to m, m+1 joins its block, {m-1} becomes a singleton.
CongruenceKey rho_prime(const CongruenceKey& k) {
  return {k.type.with_part_grown(k.marked_block_size).with_part_added(1), k.marked_block_size + 1};
}
CongruenceKey add_marked_pair(const CongruenceKey& k) { return {k.type.with_part_added(2), 2}; }
CongruenceKey add_two_singletons(const CongruenceKey& k) {
  return {k.type.with_part_added(1).with_part_added(1), 1};
}

using Emit = std::function<void(const CongruenceKey&, const Rational&)>;

ClassExpansion build(const ClassExpansion& base, int degree,
                     const std::function<void(const CongruenceKey&, const Rational&, int, const Emit&)>& rule) {
  ClassExpansion out(degree, degree);
  const Emit emit = [&out](const CongruenceKey& key, const Rational& c) { out.add_term(key, c); };
  for (const auto& [key, c] : base.terms()) rule(key, c, key.marked_block_size, emit);
  return out;
}

ClassExpansion direct(const LabeledGraph& g, int anchor) { return class_reduce(y_via_stable_partitions(g), anchor); }

ClassExpansion direct_induced(const NCSymF& y, int times, int anchor) {
  NCSymF f = y;
  for (int k = 0; k < times; ++k) f = induce(f);
  return class_reduce(f, anchor);
}

ClassExpansion path_classes(int m) { return direct(path(m - 1), m - 1); }

void require_range(int m, int extra, const char* what) {
  if (m < 3) throw DomainError(std::string(what) + " replay needs m >= 3");
  if (m + extra > max_ncsym_e_degree()) {
    throw CapacityError(std::string(what) + " replay at m = " + std::to_string(m) + " exceeds the e-basis cap");
  }
}

// Y_{C_m} = sum c e_(rho + m), anchor m.
ClassExpansion cycle_formula(const ClassExpansion& p, int m) {
  return build(p, m, [](const auto& k, const Rational& c, int, const Emit& emit) { emit(grow(k), c); });
}

// Y_{C_m disjoint K_1}, anchor m+1.
ClassExpansion cycle_plus_vertex_formula(const ClassExpansion& p, int m) {
  return build(p, m + 1, [](const auto& k, const Rational& c, int, const Emit& emit) { emit(single(grow(k)), c); });
}

// ind Y_{C_m}, anchor m+1.
ClassExpansion induced_cycle_formula(const ClassExpansion& p, int m) {
  return build(p, m + 1, [](const auto& k, const Rational& c, int b, const Emit& emit) {
    const Rational w = c / Rational(b + 1);
    emit(single(grow(k)), w);
    emit(grow(grow(k)), -w);
  });
}

ClassExpansion line_tadpole_formula(const ClassExpansion& p, int m) {
  return build(p, m + 1, [](const auto& k, const Rational& c, int b, const Emit& emit) {
    emit(single(grow(k)), c * Rational(b - 1) / Rational(b + 1));
    emit(grow(grow(k)), c * Rational(2) / Rational(b + 1));
  });
}

ClassExpansion relabeled_line_tadpole_formula(const ClassExpansion& p, int m) {
  return build(p, m + 1, [](const auto& k, const Rational& c, int b, const Emit& emit) {
    emit(grow(grow(k)), c * Rational(2) / Rational(b + 1));
    emit(single(grow(k)), -c * Rational(b - 1) / Rational(b * (b + 1)));
    emit(rho_prime(k), c * Rational(b - 1) / Rational(b));
  });
}

ClassExpansion tadpole_formula(const ClassExpansion& p, int m) {
  return build(p, m + 1, [](const auto& k, const Rational& c, int b, const Emit& emit) {
    const Rational w = c / Rational(b + 1);
    emit(single(grow(k)), w * Rational(b));
    emit(grow(grow(k)), w);
  });
}

ReplayCheck check(std::string label, ClassExpansion formula, ClassExpansion direct) {
  return ReplayCheck{std::move(label), std::move(formula), std::move(direct)};
}

}  // namespace

bool ReplayReport::match() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const ReplayCheck& c) { return c.match(); });
}

bool ReplayReport::nonnegative() const { return !checks.empty() && formula().all_nonnegative() && direct().all_nonnegative(); }

LabeledGraph relabeled_line_tadpole(int m) {
  if (m < 3) throw DomainError("L(Tp_{m,1})' needs m >= 3");
  return add_edge(cycle(m + 1), make_edge(m - 1, m + 1));
}

ReplayReport replay_line_tadpole(int m) {
  require_range(m, 1, "L(Tp_{m,1})");
  const ClassExpansion p = path_classes(m);
  const LabeledGraph cm = cycle(m);
  const NCSymF y_cycle = y_via_stable_partitions(cm);

  ReplayReport report{"line-tadpole", m, {}, {}};
  report.checks.push_back(check("Y_{L(Tp_{m,1})} mod m+1", line_tadpole_formula(p, m), direct(line_tadpole(m, 1), m + 1)));
  report.checks.push_back(check("Y_{C_m} mod m", cycle_formula(p, m), class_reduce(y_cycle, m)));
  report.checks.push_back(check("Y_{C_m + K_1} mod m+1", cycle_plus_vertex_formula(p, m),
                                direct(disjoint_union(cm, complete(1)), m + 1)));
  report.checks.push_back(check("ind Y_{C_m} mod m+1", induced_cycle_formula(p, m), direct_induced(y_cycle, 1, m + 1)));
  return report;
}

ReplayReport replay_relabeled_line_tadpole(int m) {
  require_range(m, 1, "L(Tp_{m,1})'");
  const ClassExpansion p = path_classes(m);

  ReplayReport report{"relabeled-line-tadpole", m, {}, {}};
  report.checks.push_back(check("Y_{L(Tp_{m,1})'} mod m+1", relabeled_line_tadpole_formula(p, m),
                                direct(relabeled_line_tadpole(m), m + 1)));

  report.checks.push_back(check("Y_{P_{m+1}} mod m+1",
                                build(p, m + 1,
                                      [](const auto& k, const Rational& c, int b, const Emit& emit) {
                                        emit(add_marked_pair(k), c * Rational(b - 1) / Rational(b));
                                        emit(single(grow(k)), c / Rational(b + 1));
                                        emit(grow(grow(k)), c / Rational(b * (b + 1)));
                                      }),
                                direct(path(m + 1), m + 1)));

  // (C_{m-1} + K_1) o (m, m-1); for m = 3 the 2-cycle is a single edge.
  const LabeledGraph small_cycle = m == 3 ? path(2) : cycle(m - 1);
  std::vector<int> swap_last(static_cast<std::size_t>(m));
  for (int k = 1; k <= m; ++k) swap_last[static_cast<std::size_t>(k - 1)] = k;
  std::swap(swap_last[static_cast<std::size_t>(m - 2)], swap_last[static_cast<std::size_t>(m - 1)]);
  const LabeledGraph swapped = relabel(disjoint_union(small_cycle, complete(1)), swap_last);
  report.checks.push_back(check("ind Y_{(C_{m-1} + K_1) o (m,m-1)} mod m+1",
                                build(p, m + 1,
                                      [](const auto& k, const Rational& c, int b, const Emit& emit) {
                                        const Rational w = c * Rational(b - 1) / Rational(b);
                                        emit(add_two_singletons(k), w);
                                        emit(rho_prime(k), -w);
                                      }),
                                direct_induced(y_via_stable_partitions(swapped), 1, m + 1)));
  return report;
}

ReplayReport replay_cycle_chord_m3(int m) {
  require_range(m, 2, "CC_{m,3}");
  const ClassExpansion p = path_classes(m);
  const int d = m + 2;

  const ClassExpansion headline_formula = build(p, d, [](const auto& k, const Rational& c, int b, const Emit& emit) {
    const Rational w = c / Rational(b + 1);
    emit(single(grow(grow(k))), w * Rational(b - 1) / Rational(b + 2));
    emit(grow(single(grow(k))), w * Rational(b * b - b + 1) / Rational(b));
    emit(grow(grow(grow(k))), w * Rational(3) / Rational(b + 2));
    emit(grow(rho_prime(k)), w * Rational(b - 1) / Rational(b));
  });
  const ClassExpansion headline_direct = direct(cc_m3_labeled(m), d);

  const LabeledGraph cm = cycle(m);
  const LabeledGraph tp = tadpole(m, 1);
  const NCSymF y_cycle = y_via_stable_partitions(cm);

  const ClassExpansion t1_formula = build(p, d, [](const auto& k, const Rational& c, int b, const Emit& emit) {
    const Rational w = c / Rational(b + 1);
    emit(single(single(grow(k))), w * Rational(b));
    emit(single(grow(grow(k))), w);
  });
  const ClassExpansion t2_formula = build(p, d, [](const auto& k, const Rational& c, int b, const Emit& emit) {
    const Rational w = c / Rational(b + 1);
    const Rational v = c / Rational((b + 1) * (b + 2));
    emit(single(single(grow(k))), w);
    emit(grow(single(grow(k))), -w);
    emit(single(grow(grow(k))), -v);
    emit(grow(grow(grow(k))), v);
  });
  const ClassExpansion t3_formula = build(p, d, [](const auto& k, const Rational& c, int, const Emit& emit) {
    emit(single(single(grow(k))), c);
    emit(grow(single(grow(k))), -c);
  });
  const ClassExpansion t4_formula = build(p, d, [](const auto& k, const Rational& c, int b, const Emit& emit) {
    const Rational u = c * Rational(2) / Rational((b + 1) * (b + 2));
    const Rational v = c * Rational(b - 1) / Rational(b * (b + 1));
    emit(single(grow(grow(k))), u);
    emit(grow(grow(grow(k))), -u);
    emit(grow(single(grow(k))), v);
    emit(grow(rho_prime(k)), -v);
  });

  const ClassExpansion t1 = direct(disjoint_union(tp, complete(1)), d);
  const ClassExpansion t2 = direct_induced(y_cycle, 2, d);
  const ClassExpansion t3 = direct_induced(y_via_stable_partitions(disjoint_union(cm, complete(1))), 1, d);
  const ClassExpansion t4 = direct_induced(y_via_stable_partitions(relabeled_line_tadpole(m)), 1, d);

  ReplayReport report{"cycle-chord-m3", m, {}, {}};
  report.checks.push_back(check("Y_{CC_{m,3}} mod m+2", headline_formula, headline_direct));
  report.checks.push_back(check("Y_{Tp_{m,1}} mod m+1", tadpole_formula(p, m), direct(tp, m + 1)));
  report.checks.push_back(check("Y_{Tp_{m,1} + K_1} mod m+2", t1_formula, t1));
  report.checks.push_back(check("ind ind Y_{C_m} mod m+2", t2_formula, t2));
  report.checks.push_back(check("ind Y_{C_m + K_1} mod m+2", t3_formula, t3));
  report.checks.push_back(check("ind Y_{L(Tp_{m,1})'} mod m+2", t4_formula, t4));
  report.checks.push_back(check("four-term identity mod m+2", t1 + t2 - t3 - t4, headline_direct));

  // The disjoint-union rule read with both anchors.
  const ClassExpansion tp_classes = direct(tp, m + 1);
  report.checks.push_back(check("Y_{Tp_{m,1} + K_1} via clique rule, anchor in K_1",
                                disjoint_union_clique_classes(tp_classes, 1, CliqueAnchor::new_block), t1));
  report.checks.push_back(check("Y_{Tp_{m,1} + K_1} via clique rule, anchor m+1",
                                disjoint_union_clique_classes(tp_classes, 1, CliqueAnchor::kept),
                                direct(disjoint_union(tp, complete(1)), m + 1)));
  report.notes.push_back("disjoint-union anchors: kept = " + std::to_string(m + 1) +
                         ", new block = " + std::to_string(d) + "; the derivation reduces modulo " + std::to_string(d));
  return report;
}

}  // namespace csfkit
