#include "connperm/poly.hpp"

#include <algorithm>
#include <sstream>

#include "connperm/errors.hpp"

namespace connperm {

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const BigRational& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BivariatePoly::BivariatePoly(const BigInt& constant) {
  if (constant != 0) terms_.emplace(Monomial{0, 0}, constant);
}

BivariatePoly BivariatePoly::x() { return monomial(1, 0); }
BivariatePoly BivariatePoly::y() { return monomial(0, 1); }

BivariatePoly BivariatePoly::monomial(int px, int qy, const BigInt& c) {
  BivariatePoly p;
  p.add_term(px, qy, c);
  return p;
}

BigInt BivariatePoly::coeff(int px, int qy) const {
  auto it = terms_.find({px, qy});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void BivariatePoly::add_term(int px, int qy, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({px, qy}, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m.first, m.second, c);
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m.first, m.second, -c);
  return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Dense accumulator; the products in this library are small and nearly full.
  const int wy = a.degree_y() + b.degree_y() + 1;
  const int wx = a.degree_x() + b.degree_x() + 1;
  std::vector<BigInt> acc(static_cast<std::size_t>(wx) * static_cast<std::size_t>(wy));
  BigInt prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      boost::multiprecision::multiply(prod, ca, cb);
      acc[static_cast<std::size_t>((ma.first + mb.first) * wy + ma.second + mb.second)] += prod;
    }
  }
  BivariatePoly out;
  for (int px = 0; px < wx; ++px)
    for (int qy = 0; qy < wy; ++qy) {
      auto& c = acc[static_cast<std::size_t>(px * wy + qy)];
      if (c != 0) out.terms_.emplace_hint(out.terms_.end(), BivariatePoly::Monomial{px, qy}, std::move(c));
    }
  return out;
}

BivariatePoly& BivariatePoly::operator*=(const BivariatePoly& o) { return *this = *this * o; }

BivariatePoly operator*(BivariatePoly a, const BigInt& c) {
  if (c == 0) return {};
  for (auto& [m, v] : a.terms_) v *= c;
  return a;
}

BivariatePoly BivariatePoly::shift_y(const BigInt& shift) const {
  // (y + s)^q expanded with binomial coefficients, row by row.
  BivariatePoly out;
  for (const auto& [m, c] : terms_) {
    const auto [px, qy] = m;
    BigInt binom = 1;
    BigInt power = 1;
    std::vector<BigInt> shifts(static_cast<std::size_t>(qy) + 1);
    for (int j = 0; j <= qy; ++j) {
      shifts[static_cast<std::size_t>(j)] = power;
      power *= shift;
    }
    for (int j = 0; j <= qy; ++j) {
      // term: C(qy, j) * y^(qy-j) * shift^j
      out.add_term(px, qy - j, c * binom * shifts[static_cast<std::size_t>(j)]);
      binom = binom * (qy - j) / (j + 1);
    }
  }
  return out;
}

BivariatePoly BivariatePoly::swap_xy() const {
  BivariatePoly out;
  for (const auto& [m, c] : terms_) out.add_term(m.second, m.first, c);
  return out;
}

BigInt BivariatePoly::eval(const BigInt& xv, const BigInt& yv) const {
  BigInt total = 0;
  for (const auto& [m, c] : terms_) total += c * boost::multiprecision::pow(xv, static_cast<unsigned>(m.first)) *
                                          boost::multiprecision::pow(yv, static_cast<unsigned>(m.second));
  return total;
}

BivariatePoly BivariatePoly::at_y_one() const {
  BivariatePoly out;
  for (const auto& [m, c] : terms_) out.add_term(m.first, 0, c);
  return out;
}

BivariatePoly BivariatePoly::at_x_one() const {
  BivariatePoly out;
  for (const auto& [m, c] : terms_) out.add_term(0, m.second, c);
  return out;
}

int BivariatePoly::degree_x() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.first);
  return d;
}

int BivariatePoly::degree_y() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.second);
  return d;
}

namespace {

void append_term(std::ostringstream& out, bool first, int px, int qy, const BigInt& c) {
  BigInt mag = c < 0 ? BigInt(-c) : c;
  if (first)
    out << (c < 0 ? "-" : "");
  else
    out << (c < 0 ? " - " : " + ");
  const bool constant = px == 0 && qy == 0;
  bool need_star = false;
  if (mag != 1 || constant) {
    out << mag;
    need_star = true;
  }
  auto var = [&](char name, int deg) {
    if (deg == 0) return;
    if (need_star) out << '*';
    out << name;
    if (deg > 1) out << '^' << deg;
    need_star = true;
  };
  var('x', px);
  var('y', qy);
}

}  // namespace

std::string BivariatePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    append_term(out, first, it->first.first, it->first.second, it->second);
    first = false;
  }
  return out.str();
}

nlohmann::ordered_json BivariatePoly::to_json() const {
  auto arr = nlohmann::ordered_json::array();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    arr.push_back({{"x", it->first.first}, {"y", it->first.second}, {"c", it->second.str()}});
  return arr;
}

BivariatePoly BivariatePoly::from_json(const nlohmann::ordered_json& j) {
  try {
    BivariatePoly p;
    for (const auto& t : j) p.add_term(t.at("x").get<int>(), t.at("y").get<int>(), BigInt(t.at("c").get<std::string>()));
    return p;
  } catch (const nlohmann::ordered_json::exception& e) {
    throw ParseError(std::string("polynomial JSON: ") + e.what());
  } catch (const std::runtime_error& e) {
    throw ParseError(std::string("polynomial JSON coefficient: ") + e.what());
  }
}

SeriesInZ& SeriesInZ::operator+=(const SeriesInZ& o) {
  for (int m = 0; m <= std::min(order(), o.order()); ++m) (*this)[m] += o[m];
  return *this;
}

SeriesInZ& SeriesInZ::operator-=(const SeriesInZ& o) {
  for (int m = 0; m <= std::min(order(), o.order()); ++m) (*this)[m] -= o[m];
  return *this;
}

SeriesInZ operator*(const SeriesInZ& a, const SeriesInZ& b) {
  SeriesInZ out(std::min(a.order(), b.order()));
  for (int i = 0; i <= out.order(); ++i)
    for (int j = 0; i + j <= out.order(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

SeriesInZ SeriesInZ::times_z() const {
  SeriesInZ out(order());
  for (int m = 1; m <= order(); ++m) out[m] = (*this)[m - 1];
  return out;
}

SeriesInZ SeriesInZ::shift_y(const BigInt& shift) const {
  SeriesInZ out(order());
  for (int m = 0; m <= order(); ++m) out[m] = (*this)[m].shift_y(shift);
  return out;
}

bool SeriesInZ::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

}  // namespace connperm
