#include "connperm/enumpoly.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "connperm/dyck.hpp"
#include "connperm/errors.hpp"

namespace connperm {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw InvalidArgument(what);
}

template <typename T>
void cross_check(const T& a, const T& b, const std::string& what) {
  if (!(a == b)) throw InternalMismatch(what + ": independent evaluations disagree");
}

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

// Stirling triangle s[m][j], 0 <= j <= m <= n, read off the rising products.
std::vector<std::vector<BigInt>> stirling_table(int n) {
  std::vector<std::vector<BigInt>> s(idx(n) + 1);
  for (int m = 0; m <= n; ++m) {
    const auto a = stirling_poly(m);
    s[idx(m)].resize(idx(n) + 1);
    for (int j = 0; j <= m; ++j) s[idx(m)][idx(j)] = a.coeff(j, 0);
  }
  return s;
}

// Recurrence route for (L_k, L'_k) or (M_k, M'_k), k = 1..n.
// seed is L_1 = L'_1 = x or M_1 = M'_1 = y.
std::vector<PathFamily> shift_recurrence(int n, const BivariatePoly& seed) {
  std::vector<PathFamily> f(idx(n) + 1);
  f[1] = {seed, seed};
  const auto y = BivariatePoly::y();
  for (int k = 2; k <= n; ++k) {
    f[idx(k)].primitive = y * f[idx(k - 1)].all.shift_y(1);
    BivariatePoly all = f[idx(k)].primitive;
    for (int p = 1; p < k; ++p) all += f[idx(p)].primitive * f[idx(k - p)].all;
    f[idx(k)].all = std::move(all);
  }
  return f;
}

// Transfer-matrix route: sum of path weights over all Dyck paths of
// semilength n, tracking (height, last step was up). Down-step weight is
// x after an up step when peak_is_x, else y + (height after).
PathFamily path_sum(int n, bool peak_is_x) {
  const int steps = 2 * n;
  auto run = [&](bool primitive) {
    // cur[h][up]
    std::vector<std::array<BivariatePoly, 2>> cur(idx(n) + 2), next(idx(n) + 2);
    cur[0][0] = BigInt(1);
    for (int t = 0; t < steps; ++t) {
      for (auto& row : next) row = {};
      for (int h = 0; h <= n; ++h) {
        for (int up = 0; up < 2; ++up) {
          const auto& w = cur[idx(h)][idx(up)];
          if (w.is_zero()) continue;
          if (h + 1 <= n) next[idx(h + 1)][1] += w;
          if (h >= 1) {
            const int after = h - 1;
            // A primitive path touches height 0 only at its two ends.
            if (primitive && after == 0 && t + 1 != steps) continue;
            const auto weight = (peak_is_x && up) ? BivariatePoly::x()
                                                  : BivariatePoly::y() + BivariatePoly(BigInt(after));
            next[idx(after)][0] += w * weight;
          }
        }
      }
      std::swap(cur, next);
    }
    return cur[0][0];
  };
  return {run(false), run(true)};
}

BivariatePoly path_weight(std::string_view word, bool peak_is_x) {
  if (!validate_dyck(word)) throw InvalidPath("not a Dyck path: " + std::string(word));
  BivariatePoly out(BigInt(1));
  int height = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] == 'a') {
      ++height;
      continue;
    }
    --height;
    if (peak_is_x && i > 0 && word[i - 1] == 'a')
      out *= BivariatePoly::x();
    else
      out *= BivariatePoly::y() + BivariatePoly(BigInt(height));
  }
  return out;
}

}  // namespace

BigInt factorial(int n) {
  require(n >= 0, "factorial: n must be >= 0");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt double_factorial_odd(int m) {
  require(m >= 0, "double_factorial_odd: m must be >= 0");
  BigInt r = 1;
  for (int k = 2 * m - 1; k > 1; k -= 2) r *= k;
  return r;
}

BivariatePoly stirling_poly(int n) {
  require(n >= 0, "stirling_poly: n must be >= 0");
  BivariatePoly a(BigInt(1));
  for (int i = 0; i < n; ++i) a *= BivariatePoly::x() + BivariatePoly(BigInt(i));
  return a;
}

BigInt stirling_first(int n, int k) {
  require(n >= 0, "stirling_first: n must be >= 0");
  return stirling_poly(n).coeff(k, 0);
}

BigInt c_count(int n) {
  require(n >= 1, "c_count: n must be >= 1");
  std::vector<BigInt> fact(idx(n) + 1);
  fact[0] = 1;
  for (int i = 1; i <= n; ++i) fact[idx(i)] = fact[idx(i - 1)] * i;

  // c_k = k! - sum_{p<k} c_p (k-p)!
  std::vector<BigInt> by_complement(idx(n) + 1);
  // c_k = sum_{p<k} p c_p (k-1-p)!, c_1 = 1
  std::vector<BigInt> by_insertion(idx(n) + 1);
  for (int k = 1; k <= n; ++k) {
    BigInt a = fact[idx(k)];
    for (int p = 1; p < k; ++p) a -= by_complement[idx(p)] * fact[idx(k - p)];
    by_complement[idx(k)] = a;

    BigInt b = k == 1 ? BigInt(1) : BigInt(0);
    for (int p = 1; p < k; ++p) b += p * by_insertion[idx(p)] * fact[idx(k - 1 - p)];
    by_insertion[idx(k)] = b;
  }
  cross_check(by_complement[idx(n)], by_insertion[idx(n)], "c_count(" + std::to_string(n) + ")");
  return by_complement[idx(n)];
}

BigInt c_count_by_cycles(int n, int k) {
  require(n >= 1, "c_count_by_cycles: n must be >= 1");
  if (k < 1 || k > n) return 0;
  const auto s = stirling_table(n);
  using Table = std::vector<std::vector<BigInt>>;
  Table first(idx(n) + 1, std::vector<BigInt>(idx(n) + 1));
  Table second = first;
  first[1][1] = second[1][1] = 1;
  for (int m = 2; m <= n; ++m) {
    for (int j = 1; j <= m; ++j) {
      BigInt a = s[idx(m)][idx(j)];
      BigInt b = 0;
      for (int p = 1; p < m; ++p) {
        for (int i = 1; i <= std::min(j, p); ++i) {
          a -= first[idx(p)][idx(i)] * s[idx(m - p)][idx(j - i)];
          b += p * second[idx(p)][idx(i)] * s[idx(m - p - 1)][idx(j - i)];
        }
      }
      first[idx(m)][idx(j)] = a;
      second[idx(m)][idx(j)] = b;
    }
  }
  cross_check(first[idx(n)], second[idx(n)], "c_count_by_cycles(" + std::to_string(n) + ")");
  return first[idx(n)][idx(k)];
}

BivariatePoly c_poly(int n) {
  require(n >= 1, "c_poly: n must be >= 1");
  std::vector<BivariatePoly> a(idx(n) + 1);
  for (int m = 0; m <= n; ++m) a[idx(m)] = stirling_poly(m);

  std::vector<BivariatePoly> by_complement(idx(n) + 1), by_insertion(idx(n) + 1);
  by_complement[1] = by_insertion[1] = BivariatePoly::x();
  for (int m = 2; m <= n; ++m) {
    BivariatePoly c1 = a[idx(m)];
    BivariatePoly c2;
    for (int p = 1; p < m; ++p) {
      c1 -= a[idx(m - p)] * by_complement[idx(p)];
      c2 += a[idx(m - 1 - p)] * by_insertion[idx(p)] * BigInt(p);
    }
    by_complement[idx(m)] = std::move(c1);
    by_insertion[idx(m)] = std::move(c2);
  }
  cross_check(by_complement[idx(n)], by_insertion[idx(n)], "c_poly(" + std::to_string(n) + ")");
  return by_complement[idx(n)];
}

BigInt i_count(int m) {
  require(m >= 1, "i_count: m must be >= 1");
  std::vector<BigInt> i(idx(m) + 1);
  for (int k = 1; k <= m; ++k) {
    BigInt v = double_factorial_odd(k);
    for (int p = 1; p < k; ++p) v -= i[idx(p)] * double_factorial_odd(k - p);
    i[idx(k)] = v;
  }
  return i[idx(m)];
}

BivariatePoly L_of_path(std::string_view word) { return path_weight(word, true); }

BivariatePoly M_of_path(std::string_view word) { return path_weight(word, false); }

PathFamily L_family(int n) {
  require(n >= 1, "L_family: n must be >= 1");
  auto rec = shift_recurrence(n, BivariatePoly::x())[idx(n)];
  const auto direct = path_sum(n, true);
  cross_check(rec.all, direct.all, "L_" + std::to_string(n));
  cross_check(rec.primitive, direct.primitive, "L'_" + std::to_string(n));
  return rec;
}

PathFamily M_family(int m) {
  require(m >= 1, "M_family: m must be >= 1");
  auto rec = shift_recurrence(m, BivariatePoly::y())[idx(m)];
  const auto direct = path_sum(m, false);
  cross_check(rec.all, direct.all, "M_" + std::to_string(m));
  cross_check(rec.primitive, direct.primitive, "M'_" + std::to_string(m));
  return rec;
}

namespace detail {

BivariatePoly joint_perm_poly(int n, const BivariatePoly& singleton_weight) {
  require(n >= 1, "joint_perm_poly: n must be >= 1");
  const auto family = shift_recurrence(n, BivariatePoly::x());
  // Coefficients of 1 / (1 - sum_p z^p W_p), W_1 = singleton weight,
  // W_p = L'_p otherwise.
  std::vector<BivariatePoly> j(idx(n) + 1);
  j[0] = BigInt(1);
  for (int k = 1; k <= n; ++k) {
    BivariatePoly acc;
    for (int p = 1; p <= k; ++p) acc += (p == 1 ? singleton_weight : family[idx(p)].primitive) * j[idx(k - p)];
    j[idx(k)] = std::move(acc);
  }
  return j[idx(n)];
}

}  // namespace detail

BivariatePoly joint_perm_poly(int n) {
  return detail::joint_perm_poly(n, BivariatePoly::x() * BivariatePoly::y());
}

BigRational transitive_probability(int n) {
  require(n >= 1, "transitive_probability: n must be >= 1");
  return BigRational(c_count(n + 1), BigInt(n) * factorial(n));
}

SeriesInZ rooted_map_series(int order) {
  require(order >= 0, "rooted_map_series: order must be >= 0");
  const auto family = shift_recurrence(order + 1, BivariatePoly::y());
  SeriesInZ u(order);
  for (int m = 0; m <= order; ++m) u[m] = family[idx(m + 1)].primitive;
  return u;
}

SeriesInZ arques_beraud_check(int order) {
  const auto u = rooted_map_series(order);
  SeriesInZ rhs(order);
  rhs[0] = BivariatePoly::y();
  rhs += (u * u.shift_y(1)).times_z();
  SeriesInZ residual = u;
  residual -= rhs;
  return residual;
}

}  // namespace connperm
