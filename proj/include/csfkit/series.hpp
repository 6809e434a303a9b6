#pragma once

// Truncated power series in one or two variables with symmetric-function
// coefficients (e-basis), and the generating-function identities for power
// sums, paths, cycles, tadpoles, their line graphs and cycle-chord graphs.

#include <optional>
#include <string>
#include <vector>

#include "csfkit/symfunc.hpp"

namespace csfkit {

/// sum_{n <= N} c_n z^n.
class SymSeries {
 public:
  explicit SymSeries(int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const SymF& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  SymF& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
  const std::vector<SymF>& coefficients() const noexcept { return coeffs_; }

  friend bool operator==(const SymSeries&, const SymSeries&) = default;

 private:
  std::vector<SymF> coeffs_;
};

SymSeries E_series(int order);
/// F(z) = E(z) - z E'(z).
SymSeries F_series(int order);

SymSeries add(const SymSeries& a, const SymSeries& b);
SymSeries subtract(const SymSeries& a, const SymSeries& b);
SymSeries mul(const SymSeries& a, const SymSeries& b);
/// a / b; the constant term of b must be 1.
SymSeries div(const SymSeries& a, const SymSeries& b);
/// Term-wise derivative; the result has order one less (0 stays 0).
SymSeries derivative(const SymSeries& a);
SymSeries truncate(const SymSeries& a, int order);
/// z^k a(z), truncated at the order of a.
SymSeries shift(const SymSeries& a, int k);

/// sum_{i <= Nx, j <= Ny} c_{ij} x^i y^j.
class SymSeries2 {
 public:
  SymSeries2(int order_x, int order_y);

  int order_x() const noexcept { return nx_; }
  int order_y() const noexcept { return ny_; }
  const SymF& at(int i, int j) const;
  SymF& at(int i, int j);

  friend bool operator==(const SymSeries2&, const SymSeries2&) = default;

 private:
  int nx_;
  int ny_;
  std::vector<SymF> coeffs_;
};

/// a(x) b(y).
SymSeries2 outer(const SymSeries& a, const SymSeries& b);
SymSeries2 add(const SymSeries2& a, const SymSeries2& b);
SymSeries2 subtract(const SymSeries2& a, const SymSeries2& b);
SymSeries2 mul(const SymSeries2& a, const SymSeries2& b);
SymSeries2 scale(const SymSeries2& a, const Rational& r);
/// Multiplication by a polynomial sum c_{ij} x^i y^j with rational coefficients,
/// given as (i, j, c) triples.
struct Monomial2 {
  int i;
  int j;
  Rational c;
};
SymSeries2 mul(const SymSeries2& a, const std::vector<Monomial2>& poly);

struct GfMismatch {
  std::string series;         // which series disagreed
  std::vector<int> position;  // order, or (i, j)
  SymF lhs;
  SymF rhs;
};

struct GfReport {
  std::string identity;
  std::vector<int> truncation;
  int clearing_power = 0;  // power of (x - y) multiplied through
  std::optional<GfMismatch> first_mismatch;
  int compared = 0;  // number of coefficients compared

  bool match() const { return !first_mismatch.has_value(); }
};

GfReport verify_power_sum_gf(int order);
GfReport verify_path_cycle_gf(int order);
GfReport verify_tadpole_gf(int order_x, int order_y);
GfReport verify_ltadpole_gf(int order_x, int order_y);
GfReport verify_cc_gf(int order_x, int order_y);

}  // namespace csfkit
