#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

namespace connperm {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

std::string to_string(const BigInt& v);
std::string to_string(const BigRational& v);

/// Sparse polynomial in x and y with exact integer coefficients. Zero
/// coefficients are never stored, so equality is structural. Univariate
/// polynomials use only one of the two degrees.
class BivariatePoly {
 public:
  using Monomial = std::pair<int, int>;  // (degree in x, degree in y)
  using Terms = std::map<Monomial, BigInt>;

  BivariatePoly() = default;
  BivariatePoly(const BigInt& constant);  // NOLINT: implicit by intent

  static BivariatePoly x();
  static BivariatePoly y();
  static BivariatePoly monomial(int px, int qy, const BigInt& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coeff(int px, int qy) const;
  void add_term(int px, int qy, const BigInt& c);

  BivariatePoly& operator+=(const BivariatePoly& o);
  BivariatePoly& operator-=(const BivariatePoly& o);
  BivariatePoly& operator*=(const BivariatePoly& o);
  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator*(BivariatePoly a, const BigInt& c);

  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

  /// p(x, y + shift).
  BivariatePoly shift_y(const BigInt& shift) const;
  /// p(y, x).
  BivariatePoly swap_xy() const;
  BigInt eval(const BigInt& xv, const BigInt& yv) const;
  /// p(x, 1) as a polynomial in x.
  BivariatePoly at_y_one() const;
  /// p(1, y) as a polynomial in y.
  BivariatePoly at_x_one() const;

  int degree_x() const;
  int degree_y() const;

  /// Terms in decreasing lexicographic (x-degree, y-degree) order with
  /// explicit `*` and `^`: "x^2*y + 3*x*y^2", "5*y^4 + 22*y^3 + 15*y".
  std::string to_string() const;
  /// [{"x":p,"y":q,"c":"<decimal>"}] in the same order as to_string.
  nlohmann::ordered_json to_json() const;
  static BivariatePoly from_json(const nlohmann::ordered_json& j);

 private:
  Terms terms_;
};

/// Power series in z with polynomial coefficients, exact through z^order.
class SeriesInZ {
 public:
  explicit SeriesInZ(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {}

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BivariatePoly& operator[](int m) const { return coeffs_[static_cast<std::size_t>(m)]; }
  BivariatePoly& operator[](int m) { return coeffs_[static_cast<std::size_t>(m)]; }

  SeriesInZ& operator+=(const SeriesInZ& o);
  SeriesInZ& operator-=(const SeriesInZ& o);
  friend SeriesInZ operator*(const SeriesInZ& a, const SeriesInZ& b);
  /// z * s, truncated.
  SeriesInZ times_z() const;
  /// Coefficientwise y -> y + shift.
  SeriesInZ shift_y(const BigInt& shift) const;
  bool is_zero() const;

 private:
  std::vector<BivariatePoly> coeffs_;
};

}  // namespace connperm
