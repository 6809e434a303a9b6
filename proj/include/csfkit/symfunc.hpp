#pragma once

// Commutative symmetric functions in the elementary (e) and power-sum (p)
// bases, the chromatic symmetric function X_G, and evaluators for the closed
// forms of tadpoles, their line graphs, and cycle-chord graphs.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csfkit/graphs.hpp"
#include "csfkit/partitions.hpp"
#include "csfkit/rational.hpp"

namespace csfkit {

enum class SymBasis { e, p };

char basis_letter(SymBasis b);

/// Sparse linear combination of e_lambda (or p_lambda). Zero coefficients are
/// never stored; the empty partition indexes the constant 1.
class SymF {
 public:
  using Terms = std::map<IntPartition, Rational>;

  explicit SymF(SymBasis basis = SymBasis::e) : basis_(basis) {}
  static SymF one(SymBasis basis = SymBasis::e);
  static SymF monomial(SymBasis basis, IntPartition index, Rational coefficient = 1);
  /// The single generator e_n or p_n (n = 0 gives 1).
  static SymF generator(SymBasis basis, int n);

  SymBasis basis() const noexcept { return basis_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const IntPartition& index) const;
  /// Degree when every index has the same weight; nullopt for 0 or mixed.
  std::optional<int> homogeneous_degree() const;

  void add_term(const IntPartition& index, const Rational& coefficient);

  SymF& operator+=(const SymF& other);
  SymF& operator-=(const SymF& other);
  SymF& operator*=(const Rational& r);

  friend bool operator==(const SymF&, const SymF&) = default;

 private:
  SymBasis basis_;
  Terms terms_;
};

SymF add(const SymF& a, const SymF& b);
SymF scale(const SymF& a, const Rational& r);
/// Products of basis elements concatenate their indices.
SymF multiply(const SymF& a, const SymF& b);

SymF operator+(SymF a, const SymF& b);
SymF operator-(SymF a, const SymF& b);
SymF operator*(const SymF& a, const SymF& b);
SymF operator*(SymF a, const Rational& r);
SymF operator*(const Rational& r, SymF a);
SymF operator-(SymF a);

/// X_G as the signed sum over spanning edge subsets of p_{lambda(S)}.
SymF csf_via_subsets(const LabeledGraph& g);

SymF p_to_e(const SymF& f);
SymF e_to_p(const SymF& f);
SymF to_basis(const SymF& f, SymBasis target);

struct EPositivity {
  bool positive = true;
  std::optional<std::pair<IntPartition, Rational>> witness;
};

/// Converts to the e-basis and reports the first negative coefficient.
EPositivity is_e_positive(const SymF& f);

/// x_1 = ... = x_k = 1, remaining variables 0.
Rational specialize_ones(const SymF& f, int k);

/// Exponent vector (length = variable count) -> coefficient.
using MonomialVector = std::map<std::vector<int>, Rational>;

/// Full expansion in `variables` commuting variables.
MonomialVector to_monomial_vector(const SymF& f, int variables);

struct TripleDeletionVerdict {
  bool first = false;   // X_{G12} = X_{G1} + X_{G23} - X_{G3}
  bool second = false;  // X_{G123} = X_{G12} + X_{G23} - X_{G2}
};

/// u, v, w must be pairwise nonadjacent. Builds the six graphs G_S and checks
/// both triple-deletion identities by direct computation.
TripleDeletionVerdict verify_triple_deletion(const LabeledGraph& g, int u, int v, int w);

// ---------------------------------------------------------------------------
// Closed-form evaluators. All results are in the p-basis.

/// X_{P_n}; 1 for n = 0 and 0 for n < 0.
SymF path_csf(int n);
/// X_{C_n} for n >= 3; for n = 2 the single-edge value p_{11} - p_2.
SymF cycle_csf(int n);

/// (m-1) X_{P_{m+l}} - sum_{i=2}^{m-1} X_{P_{m+l-i}} X_{C_i}, for m >= 2, l >= 0.
SymF tadpole_via_recurrence(int m, int l);
/// X_{P_l} X_{C_m} + 2 sum_{k>=1} X_{P_{l-k}} X_{C_{m+k}} - 2l X_{P_{m+l}}.
SymF line_tadpole_via_formula(int m, int l);
/// 2 X_{Tp_{m,l}} - X_{C_m} X_{P_l}, with X_{Tp} from the recurrence.
SymF line_tadpole_via_tadpole(int m, int l);
/// Five-term expansion of X_{CC_{a,b}} obtained by splitting edge subsets on
/// whether they contain the chord; a, b >= 1.
SymF cc_via_formula(int a, int b);

}  // namespace csfkit
