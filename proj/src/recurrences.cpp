// Closed-form evaluators for X of tadpoles, line graphs of tadpoles and
// cycle-chord graphs, written in terms of path and cycle values.

#include <map>
#include <mutex>

#include "csfkit/errors.hpp"
#include "csfkit/symfunc.hpp"

namespace csfkit {
namespace {

// Path and cycle values are requested many times by the generating-function
// checks; memoize them behind one lock.
class PathCycleCache {
 public:
  SymF path(int n) {
    std::lock_guard lock(mutex_);
    auto it = paths_.find(n);
    if (it == paths_.end()) it = paths_.emplace(n, csf_via_subsets(csfkit::path(n))).first;
    return it->second;
  }
  SymF cycle(int n) {
    std::lock_guard lock(mutex_);
    auto it = cycles_.find(n);
    if (it == cycles_.end()) it = cycles_.emplace(n, csf_via_subsets(csfkit::cycle(n))).first;
    return it->second;
  }

 private:
  std::mutex mutex_;
  std::map<int, SymF> paths_;
  std::map<int, SymF> cycles_;
};

PathCycleCache& cache() {
  static PathCycleCache c;
  return c;
}

SymF p_gen(int n) { return SymF::generator(SymBasis::p, n); }

}  // namespace

SymF path_csf(int n) {
  if (n < 0) return SymF(SymBasis::p);
  if (n == 0) return SymF::one(SymBasis::p);
  return cache().path(n);
}

SymF cycle_csf(int n) {
  if (n == 2) {
    SymF edge(SymBasis::p);
    edge.add_term(IntPartition{1, 1}, 1);
    edge.add_term(IntPartition{2}, -1);
    return edge;
  }
  if (n < 2) throw DomainError("cycle value needs n >= 2");
  return cache().cycle(n);
}

SymF tadpole_via_recurrence(int m, int l) {
  if (m < 2 || l < 0) throw DomainError("tadpole recurrence needs m >= 2 and l >= 0");
  SymF out = path_csf(m + l) * Rational(m - 1);
  for (int i = 2; i <= m - 1; ++i) out -= path_csf(m + l - i) * cycle_csf(i);
  return out;
}

SymF line_tadpole_via_formula(int m, int l) {
  if (m < 2 || l < 0) throw DomainError("line tadpole formula needs m >= 2 and l >= 0");
  SymF out = path_csf(l) * cycle_csf(m);
  // X_{P_{l-k}} vanishes once k > l.
  for (int k = 1; k <= l; ++k) out += Rational(2) * (path_csf(l - k) * cycle_csf(m + k));
  out -= path_csf(m + l) * Rational(2 * l);
  return out;
}

SymF line_tadpole_via_tadpole(int m, int l) {
  if (m < 2 || l < 0) throw DomainError("line tadpole recurrence needs m >= 2 and l >= 0");
  return tadpole_via_recurrence(m, l) * Rational(2) - cycle_csf(m) * path_csf(l);
}

SymF cc_via_formula(int a, int b) {
  if (a < 1 || b < 1) throw DomainError("cycle-chord formula needs a, b >= 1");
  auto sign = [](int exponent) { return exponent % 2 == 0 ? Rational(1) : Rational(-1); };

  SymF out = cycle_csf(a + b);
  for (int i = 1; i <= a; ++i) {
    for (int j = 1; j <= b; ++j) {
      out += (sign(i + j + 1) * Rational(i * j)) * (p_gen(i + j) * path_csf(a - i) * path_csf(b - j));
    }
  }
  out += sign(a + b + 1) * p_gen(a + b);
  for (int i = 1; i <= a; ++i) out += (sign(b + i) * Rational(i)) * (p_gen(b + i) * path_csf(a - i));
  for (int j = 1; j <= b; ++j) out += (sign(a + j) * Rational(j)) * (p_gen(a + j) * path_csf(b - j));
  return out;
}

}  // namespace csfkit
