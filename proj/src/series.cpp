#include "csfkit/series.hpp"

#include <algorithm>

#include "csfkit/errors.hpp"

namespace csfkit {
namespace {

SymF zero() { return SymF(SymBasis::e); }

void require_order(int n) {
  if (n < 0) throw DomainError("series order must be nonnegative");
}

// Every coefficient of a cleared identity must be homogeneous of a known degree.
void assert_homogeneous(const SymF& f, int degree, const char* where) {
  if (f.is_zero()) return;
  const auto d = f.homogeneous_degree();
  if (!d || *d != degree) {
    throw InternalError(std::string(where) + ": coefficient is not homogeneous of degree " + std::to_string(degree));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// One variable

SymSeries::SymSeries(int order) {
  require_order(order);
  coeffs_.assign(static_cast<std::size_t>(order + 1), zero());
}

SymSeries E_series(int order) {
  SymSeries e(order);
  for (int n = 0; n <= order; ++n) e[n] = SymF::generator(SymBasis::e, n);
  return e;
}

SymSeries F_series(int order) {
  SymSeries f(order);
  for (int n = 0; n <= order; ++n) f[n] = SymF::generator(SymBasis::e, n) * Rational(1 - n);
  return f;
}

SymSeries add(const SymSeries& a, const SymSeries& b) {
  SymSeries out(std::min(a.order(), b.order()));
  for (int n = 0; n <= out.order(); ++n) out[n] = a[n] + b[n];
  return out;
}

SymSeries subtract(const SymSeries& a, const SymSeries& b) {
  SymSeries out(std::min(a.order(), b.order()));
  for (int n = 0; n <= out.order(); ++n) out[n] = a[n] - b[n];
  return out;
}

SymSeries mul(const SymSeries& a, const SymSeries& b) {
  SymSeries out(std::min(a.order(), b.order()));
  for (int n = 0; n <= out.order(); ++n) {
    for (int k = 0; k <= n; ++k) {
      if (a[k].is_zero() || b[n - k].is_zero()) continue;
      out[n] += a[k] * b[n - k];
    }
  }
  return out;
}

SymSeries div(const SymSeries& a, const SymSeries& b) {
  if (b[0] != SymF::one(SymBasis::e)) throw DomainError("series division needs a divisor with constant term 1");
  SymSeries q(std::min(a.order(), b.order()));
  for (int n = 0; n <= q.order(); ++n) {
    SymF qn = a[n];
    for (int k = 1; k <= n; ++k) {
      if (b[k].is_zero() || q[n - k].is_zero()) continue;
      qn -= b[k] * q[n - k];
    }
    q[n] = std::move(qn);
  }
  return q;
}

SymSeries derivative(const SymSeries& a) {
  SymSeries out(std::max(a.order() - 1, 0));
  for (int n = 1; n <= a.order(); ++n) out[n - 1] = a[n] * Rational(n);
  return out;
}

SymSeries truncate(const SymSeries& a, int order) {
  if (order > a.order()) throw DomainError("cannot truncate a series above its order");
  SymSeries out(order);
  for (int n = 0; n <= order; ++n) out[n] = a[n];
  return out;
}

SymSeries shift(const SymSeries& a, int k) {
  if (k < 0) throw DomainError("negative shift");
  SymSeries out(a.order());
  for (int n = k; n <= a.order(); ++n) out[n] = a[n - k];
  return out;
}

// ---------------------------------------------------------------------------
// Two variables

SymSeries2::SymSeries2(int order_x, int order_y) : nx_(order_x), ny_(order_y) {
  require_order(order_x);
  require_order(order_y);
  coeffs_.assign(static_cast<std::size_t>((order_x + 1) * (order_y + 1)), zero());
}

const SymF& SymSeries2::at(int i, int j) const {
  if (i < 0 || i > nx_ || j < 0 || j > ny_) throw DomainError("bivariate index out of range");
  return coeffs_[static_cast<std::size_t>(i * (ny_ + 1) + j)];
}

SymF& SymSeries2::at(int i, int j) {
  if (i < 0 || i > nx_ || j < 0 || j > ny_) throw DomainError("bivariate index out of range");
  return coeffs_[static_cast<std::size_t>(i * (ny_ + 1) + j)];
}

SymSeries2 outer(const SymSeries& a, const SymSeries& b) {
  SymSeries2 out(a.order(), b.order());
  for (int i = 0; i <= a.order(); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j <= b.order(); ++j) {
      if (!b[j].is_zero()) out.at(i, j) = a[i] * b[j];
    }
  }
  return out;
}

SymSeries2 add(const SymSeries2& a, const SymSeries2& b) {
  SymSeries2 out(std::min(a.order_x(), b.order_x()), std::min(a.order_y(), b.order_y()));
  for (int i = 0; i <= out.order_x(); ++i)
    for (int j = 0; j <= out.order_y(); ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
  return out;
}

SymSeries2 subtract(const SymSeries2& a, const SymSeries2& b) {
  SymSeries2 out(std::min(a.order_x(), b.order_x()), std::min(a.order_y(), b.order_y()));
  for (int i = 0; i <= out.order_x(); ++i)
    for (int j = 0; j <= out.order_y(); ++j) out.at(i, j) = a.at(i, j) - b.at(i, j);
  return out;
}

SymSeries2 mul(const SymSeries2& a, const SymSeries2& b) {
  SymSeries2 out(std::min(a.order_x(), b.order_x()), std::min(a.order_y(), b.order_y()));
  for (int i1 = 0; i1 <= out.order_x(); ++i1) {
    for (int j1 = 0; j1 <= out.order_y(); ++j1) {
      const SymF& left = a.at(i1, j1);
      if (left.is_zero()) continue;
      for (int i2 = 0; i1 + i2 <= out.order_x(); ++i2) {
        for (int j2 = 0; j1 + j2 <= out.order_y(); ++j2) {
          const SymF& right = b.at(i2, j2);
          if (!right.is_zero()) out.at(i1 + i2, j1 + j2) += left * right;
        }
      }
    }
  }
  return out;
}

SymSeries2 scale(const SymSeries2& a, const Rational& r) {
  SymSeries2 out(a.order_x(), a.order_y());
  for (int i = 0; i <= a.order_x(); ++i)
    for (int j = 0; j <= a.order_y(); ++j) out.at(i, j) = a.at(i, j) * r;
  return out;
}

SymSeries2 mul(const SymSeries2& a, const std::vector<Monomial2>& poly) {
  SymSeries2 out(a.order_x(), a.order_y());
  for (const auto& [di, dj, c] : poly) {
    if (di < 0 || dj < 0) throw DomainError("polynomial multiplier with negative exponent");
    for (int i = 0; i + di <= a.order_x(); ++i)
      for (int j = 0; j + dj <= a.order_y(); ++j) {
        if (!a.at(i, j).is_zero()) out.at(i + di, j + dj) += a.at(i, j) * c;
      }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Identities

namespace {

SymF in_e(const SymF& f) { return to_basis(f, SymBasis::e); }

void require_univariate_cap(int order, int cap, const char* what) {
  require_order(order);
  if (order > cap) {
    throw CapacityError(std::string(what) + " limited to order " + std::to_string(cap));
  }
}

void require_bivariate_cap(int nx, int ny) {
  require_order(nx);
  require_order(ny);
  if (nx + ny > 10) throw CapacityError("bivariate identities limited to Nx + Ny <= 10");
}

void compare(GfReport& report, const std::string& series, std::vector<int> position, const SymF& lhs, const SymF& rhs) {
  ++report.compared;
  if (!report.first_mismatch && lhs != rhs) report.first_mismatch = GfMismatch{series, std::move(position), lhs, rhs};
}

void compare(GfReport& report, const std::string& series, const SymSeries2& lhs, const SymSeries2& rhs) {
  for (int i = 0; i <= lhs.order_x(); ++i) {
    for (int j = 0; j <= lhs.order_y(); ++j) {
      assert_homogeneous(lhs.at(i, j), i + j - report.clearing_power, "cleared left side");
      assert_homogeneous(rhs.at(i, j), i + j - report.clearing_power, "cleared right side");
      compare(report, series, {i, j}, lhs.at(i, j), rhs.at(i, j));
    }
  }
}

// (x - y)^k as monomials.
std::vector<Monomial2> difference_power(int k) {
  std::vector<Monomial2> poly;
  for (int j = 0; j <= k; ++j) {
    Rational c = binomial(k, j);
    if (j % 2 == 1) c = -c;
    poly.push_back({k - j, j, c});
  }
  return poly;
}

struct Ingredients {
  SymSeries e, f, e1, e2;
};

Ingredients ingredients(int order) {
  const SymSeries e_long = E_series(order + 2);
  return {E_series(order), F_series(order), truncate(derivative(e_long), order),
          truncate(derivative(derivative(e_long)), order)};
}

// (x - y)^k F(x) F(y) sum c_{ab} x^a y^b.
SymSeries2 clear(const SymSeries2& values, const Ingredients& x, const Ingredients& y, int k) {
  return mul(mul(values, outer(x.f, y.f)), difference_power(k));
}

// E'(x) F(y) - E'(y) F(x).
SymSeries2 derivative_difference(const Ingredients& x, const Ingredients& y) {
  return subtract(outer(x.e1, y.f), outer(x.f, y.e1));
}

}  // namespace

GfReport verify_power_sum_gf(int order) {
  require_univariate_cap(order, 10, "power-sum generating function");
  GfReport report{"power-sum", {order}, 0, std::nullopt, 0};
  const SymSeries rhs = div(F_series(order), E_series(order));
  for (int j = 0; j <= order; ++j) {
    SymF lhs = in_e(SymF::generator(SymBasis::p, j));
    if (j % 2 == 1) lhs *= Rational(-1);
    assert_homogeneous(lhs, j, "power-sum series");
    assert_homogeneous(rhs[j], j, "F/E");
    compare(report, "sum p_j (-z)^j", {j}, lhs, rhs[j]);
  }
  return report;
}

GfReport verify_path_cycle_gf(int order) {
  require_univariate_cap(order, 9, "path and cycle generating functions");
  GfReport report{"path-cycle", {order}, 0, std::nullopt, 0};
  const SymSeries e = E_series(order);
  const SymSeries f = F_series(order);
  const SymSeries paths = div(e, f);
  const SymSeries e2 = truncate(derivative(derivative(E_series(order + 2))), order);
  const SymSeries cycles = div(shift(e2, 2), f);
  for (int n = 0; n <= order; ++n) {
    assert_homogeneous(paths[n], n, "E/F");
    compare(report, "paths", {n}, in_e(path_csf(n)), paths[n]);
  }
  for (int n = 0; n <= order; ++n) {
    assert_homogeneous(cycles[n], n, "z^2 E''/F");
    const SymF graph_side = n < 2 ? zero() : in_e(cycle_csf(n));
    compare(report, "cycles", {n}, graph_side, cycles[n]);
  }
  return report;
}

GfReport verify_tadpole_gf(int order_x, int order_y) {
  require_bivariate_cap(order_x, order_y);
  GfReport report{"tadpole", {order_x, order_y}, 2, std::nullopt, 0};
  SymSeries2 values(order_x, order_y);
  for (int m = 2; m <= order_x; ++m)
    for (int l = 0; l <= order_y; ++l) values.at(m, l) = in_e(tadpole_via_recurrence(m, l));

  const Ingredients x = ingredients(order_x);
  const Ingredients y = ingredients(order_y);
  const SymSeries2 lhs = clear(values, x, y, 2);
  // x^2 [ x(x - y) E''(x) E(y) - y (E'(x) F(y) - E'(y) F(x)) ]
  const SymSeries2 rhs = subtract(mul(outer(x.e2, y.e), {{4, 0, 1}, {3, 1, -1}}),
                                  mul(derivative_difference(x, y), {{2, 1, 1}}));
  compare(report, "cleared tadpole series", lhs, rhs);
  return report;
}

GfReport verify_ltadpole_gf(int order_x, int order_y) {
  require_bivariate_cap(order_x, order_y);
  GfReport report{"line-tadpole", {order_x, order_y}, 2, std::nullopt, 0};
  SymSeries2 values(order_x, order_y);
  for (int m = 2; m <= order_x; ++m)
    for (int l = 0; l <= order_y; ++l) values.at(m, l) = in_e(line_tadpole_via_formula(m, l));

  const Ingredients x = ingredients(order_x);
  const Ingredients y = ingredients(order_y);
  const SymSeries2 lhs = clear(values, x, y, 2);
  // x^2 [ (x^2 - y^2) E''(x) E(y) - 2y (E'(x) F(y) - E'(y) F(x)) ]
  const SymSeries2 rhs = subtract(mul(outer(x.e2, y.e), {{4, 0, 1}, {2, 2, -1}}),
                                  mul(derivative_difference(x, y), {{2, 1, 2}}));
  compare(report, "cleared line-tadpole series", lhs, rhs);
  return report;
}

GfReport verify_cc_gf(int order_x, int order_y) {
  require_bivariate_cap(order_x, order_y);
  GfReport report{"cycle-chord", {order_x, order_y}, 3, std::nullopt, 0};
  SymSeries2 values(order_x, order_y);
  for (int a = 1; a <= order_x; ++a)
    for (int b = 1; b <= order_y; ++b) values.at(a, b) = in_e(cc_via_formula(a, b));

  const Ingredients x = ingredients(order_x);
  const Ingredients y = ingredients(order_y);
  const SymSeries2 lhs = clear(values, x, y, 3);
  // xy [ (x - y)(x^2 E''(x) E(y) + y^2 E''(y) E(x)) - 2xy (E'(x) F(y) - E'(y) F(x)) ]
  const SymSeries2 rhs = subtract(add(mul(outer(x.e2, y.e), {{4, 1, 1}, {3, 2, -1}}),
                                      mul(outer(x.e, y.e2), {{2, 3, 1}, {1, 4, -1}})),
                                  mul(derivative_difference(x, y), {{2, 2, 2}}));
  compare(report, "cleared cycle-chord series", lhs, rhs);
  return report;
}

}  // namespace csfkit
