#pragma once

// Symmetric functions in noncommuting variables (NCSym) of a fixed degree d,
// indexed by set partitions of [d] in the monomial (m), elementary (e) and
// power-sum (p) bases; the chromatic function Y_G; induction; and reduction
// to congruence classes.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csfkit/graphs.hpp"
#include "csfkit/partitions.hpp"
#include "csfkit/rational.hpp"
#include "csfkit/symfunc.hpp"

namespace csfkit {

enum class NCBasis { m, e, p };

char basis_letter(NCBasis b);

/// m_pi is the sum of words whose kernel is exactly pi; e_pi sums words with
/// distinct letters inside each block of pi; p_pi sums words constant on each
/// block of pi.
class NCSymF {
 public:
  using Terms = std::map<SetPartition, Rational>;

  NCSymF(int degree, NCBasis basis) : degree_(degree), basis_(basis) {}
  static NCSymF monomial(NCBasis basis, const SetPartition& index, Rational coefficient = 1);

  int degree() const noexcept { return degree_; }
  NCBasis basis() const noexcept { return basis_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const SetPartition& index) const;

  void add_term(const SetPartition& index, const Rational& coefficient);

  NCSymF& operator+=(const NCSymF& other);
  NCSymF& operator-=(const NCSymF& other);
  NCSymF& operator*=(const Rational& r);

  friend bool operator==(const NCSymF&, const NCSymF&) = default;

 private:
  int degree_;
  NCBasis basis_;
  Terms terms_;
};

NCSymF operator+(NCSymF a, const NCSymF& b);
NCSymF operator-(NCSymF a, const NCSymF& b);
NCSymF operator*(NCSymF a, const Rational& r);
NCSymF operator*(const Rational& r, NCSymF a);

/// Sum of m_sigma over the partitions of the vertex set whose blocks are all
/// independent in G.
NCSymF y_via_stable_partitions(const LabeledGraph& g);
/// Signed sum over edge subsets S of p_{component partition of S}.
NCSymF y_via_edge_subsets(const LabeledGraph& g);
/// Y_G by repeated deletion-contraction on the edge {d-1, d}, relabeling the
/// chosen edge into that position when needed. Result in the m-basis.
NCSymF y_via_deletion_contraction(const LabeledGraph& g);
/// One deletion-contraction step on e = {d-1, d}: Y_{G\e} - ind(Y_{G/e}).
NCSymF deletion_contraction(const LabeledGraph& g, Edge e);

/// Exact change of basis among m, e and p.
NCSymF convert(const NCSymF& f, NCBasis target);

/// Letter-doubling induction ind: degree d-1 -> degree d, returned in the
/// m-basis (inputs in other bases are converted first).
NCSymF induce(const NCSymF& f);

/// Relabels every index partition by `perm` (perm[k-1] is the image of k).
NCSymF permute(const NCSymF& f, const std::vector<int>& perm);

/// Image when the variables commute: e_pi -> lambda(pi)! e_{lambda(pi)}.
SymF commutative_image(const NCSymF& f);

/// Coefficients summed over congruence classes modulo an anchor element.
class ClassExpansion {
 public:
  using Terms = std::map<CongruenceKey, Rational>;

  ClassExpansion(int degree, int anchor);

  int degree() const noexcept { return degree_; }
  int anchor() const noexcept { return anchor_; }
  const Terms& terms() const noexcept { return terms_; }
  Rational coefficient(const CongruenceKey& key) const;
  void add_term(const CongruenceKey& key, const Rational& coefficient);
  bool all_nonnegative() const;

  ClassExpansion& operator+=(const ClassExpansion& other);
  ClassExpansion& operator-=(const ClassExpansion& other);
  ClassExpansion& operator*=(const Rational& r);

  friend bool operator==(const ClassExpansion&, const ClassExpansion&) = default;

 private:
  int degree_;
  int anchor_;
  Terms terms_;
};

ClassExpansion operator+(ClassExpansion a, const ClassExpansion& b);
ClassExpansion operator-(ClassExpansion a, const ClassExpansion& b);

/// Sums e-coefficients over congruence classes modulo `anchor`.
/// Non-e inputs are converted first.
ClassExpansion class_reduce(const NCSymF& f, int anchor);
inline ClassExpansion class_reduce(const NCSymF& f) { return class_reduce(f, f.degree()); }

/// Class expansion (anchor d+1) of ind(e_{pi o (d,i)}):
///   (1/b_{pi,i}) (e_{(pi/d+1)} - e_{(pi +_i (d+1))}).
/// With i = d this is the untransposed rule.
ClassExpansion induce_e_class(const SetPartition& pi, int i);

/// Induction at class level; the anchor must be the degree.
ClassExpansion induce_classes(const ClassExpansion& classes);

/// Commutative image of a class expansion: sum c lambda! e_lambda.
SymF commutative_image(const ClassExpansion& classes);

struct ParenVerdict {
  bool positive = true;
  ClassExpansion classes{0, 0};
  std::optional<std::pair<CongruenceKey, Rational>> witness;
};

/// Y_G in the e-basis, reduced modulo `anchor`, checked for nonnegativity.
ParenVerdict is_e_paren_positive(const LabeledGraph& g, int anchor);
inline ParenVerdict is_e_paren_positive(const LabeledGraph& g) { return is_e_paren_positive(g, g.order()); }

struct PathCycleStep {
  ClassExpansion path;
  ClassExpansion cycle;
};

/// Given the classes of Y_{P_d} (anchor d), the classes of Y_{P_{d+1}} and
/// Y_{C_{d+1}} (anchor d+1).
PathCycleStep path_cycle_recursion_step(const ClassExpansion& path_classes);

enum class CliqueAnchor {
  kept,       // reduce modulo the original anchor
  new_block,  // reduce modulo d+m, an element of the attached clique
};

/// Classes of Y_{G disjoint-union K_m} from the classes of Y_G: each key gains
/// a part m.
ClassExpansion disjoint_union_clique_classes(const ClassExpansion& classes, int m,
                                             CliqueAnchor anchor = CliqueAnchor::kept);

/// Checks Y_{gamma(G)} and Y_G have the same classes modulo d, for a
/// relabeling gamma fixing d.
bool verify_relabel_congruence(const LabeledGraph& g, const std::vector<int>& perm);

// ---------------------------------------------------------------------------
// Replays of the class-level derivations for line graphs of tadpoles and the
// cycle-chord graphs with a 4-cycle. Each rebuilds the displayed expansion from
// the classes of Y_{P_{m-1}} and compares it with the direct computation.

struct ReplayCheck {
  std::string label;
  ClassExpansion formula;
  ClassExpansion direct;
  bool match() const { return formula == direct; }
};

struct ReplayReport {
  std::string identity;
  int m = 0;
  std::vector<ReplayCheck> checks;  // checks.front() is the headline expansion
  std::vector<std::string> notes;

  bool match() const;
  bool nonnegative() const;
  const ClassExpansion& formula() const { return checks.front().formula; }
  const ClassExpansion& direct() const { return checks.front().direct; }
};

/// L(Tp_{m,1}) labeled as in line_tadpole(m, 1), anchor m+1.
ReplayReport replay_line_tadpole(int m);
/// L(Tp_{m,1})': the cycle v_1 ... v_{m+1} v_1 plus the edge v_{m-1} v_{m+1}.
ReplayReport replay_relabeled_line_tadpole(int m);
/// cc_m3_labeled(m), anchor m+2, plus the four-term intermediate identity.
ReplayReport replay_cycle_chord_m3(int m);

/// The graph L(Tp_{m,1})' used by replay_relabeled_line_tadpole.
LabeledGraph relabeled_line_tadpole(int m);

}  // namespace csfkit
