#pragma once

// Test-side reference implementations. They deliberately avoid the library's
// own statistic code so that expected values come from an independent path.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include "connperm/perm.hpp"
#include "connperm/poly.hpp"

namespace ref {

inline constexpr std::uint32_t kSeed = 20240917u;

using Images = std::vector<int>;

inline Images images_of(const connperm::Permutation& p) { return {p.images().begin(), p.images().end()}; }

inline connperm::Permutation perm(const Images& v) { return connperm::Permutation(v); }

inline int cycles(const Images& a) {
  std::vector<bool> seen(a.size() + 1, false);
  int count = 0;
  for (int i = 1; i <= static_cast<int>(a.size()); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    ++count;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = a[static_cast<std::size_t>(j - 1)])
      seen[static_cast<std::size_t>(j)] = true;
  }
  return count;
}

inline int lr_max(const Images& a) {
  int best = 0, count = 0;
  for (int v : a)
    if (v > best) best = v, ++count;
  return count;
}

inline int rl_min(const Images& a) {
  int best = static_cast<int>(a.size()) + 1, count = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it)
    if (*it < best) best = *it, ++count;
  return count;
}

inline int fixed_points(const Images& a) {
  int count = 0;
  for (std::size_t i = 0; i < a.size(); ++i) count += a[i] == static_cast<int>(i) + 1;
  return count;
}

// A prefix 1..p is stabilized iff its maximum equals p.
inline bool indecomposable(const Images& a) {
  int mx = 0;
  for (std::size_t p = 1; p < a.size(); ++p) {
    mx = std::max(mx, a[p - 1]);
    if (mx == static_cast<int>(p)) return false;
  }
  return true;
}

inline std::vector<Images> all_perms(int n) {
  Images a(static_cast<std::size_t>(n));
  std::iota(a.begin(), a.end(), 1);
  std::vector<Images> out;
  do out.push_back(a);
  while (std::next_permutation(a.begin(), a.end()));
  return out;
}

inline Images random_perm(int n, std::mt19937& rng) {
  Images a(static_cast<std::size_t>(n));
  std::iota(a.begin(), a.end(), 1);
  std::shuffle(a.begin(), a.end(), rng);
  return a;
}

// Random permutation of 1..n fixing n.
inline Images random_rooted_relabeling(int n, std::mt19937& rng) {
  Images a(static_cast<std::size_t>(n - 1));
  std::iota(a.begin(), a.end(), 1);
  std::shuffle(a.begin(), a.end(), rng);
  a.push_back(n);
  return a;
}

// BFS over the graph with edges {b, sigma(b)} and {b, alpha(b)}.
inline bool transitive(const Images& s, const Images& a) {
  const std::size_t n = s.size();
  std::vector<bool> seen(n + 1, false);
  std::queue<int> q;
  q.push(1);
  seen[1] = true;
  std::size_t reached = 1;
  auto visit = [&](int v) {
    if (!seen[static_cast<std::size_t>(v)]) {
      seen[static_cast<std::size_t>(v)] = true;
      ++reached;
      q.push(v);
    }
  };
  std::vector<int> s_inv(n + 1), a_inv(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    s_inv[static_cast<std::size_t>(s[i])] = static_cast<int>(i) + 1;
    a_inv[static_cast<std::size_t>(a[i])] = static_cast<int>(i) + 1;
  }
  while (!q.empty()) {
    const int b = q.front();
    q.pop();
    visit(s[static_cast<std::size_t>(b - 1)]);
    visit(a[static_cast<std::size_t>(b - 1)]);
    visit(s_inv[static_cast<std::size_t>(b)]);
    visit(a_inv[static_cast<std::size_t>(b)]);
  }
  return reached == n;
}

inline std::vector<std::string> dyck_words(int n) {
  std::vector<std::string> out;
  std::string w;
  auto rec = [&](auto&& self, int up, int down) -> void {
    if (up == n && down == n) {
      out.push_back(w);
      return;
    }
    if (up < n) {
      w.push_back('a');
      self(self, up + 1, down);
      w.pop_back();
    }
    if (down < up) {
      w.push_back('b');
      self(self, up, down + 1);
      w.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

inline bool primitive_word(const std::string& w) {
  int h = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    h += w[i] == 'a' ? 1 : -1;
    if (h == 0) return false;
  }
  return true;
}

// Per-path weight as a plain coefficient table: down steps after an up step
// contribute `x` (or y when peak_is_x is false), others y + height.
inline connperm::BivariatePoly path_weight(const std::string& w, bool peak_is_x) {
  using connperm::BivariatePoly;
  BivariatePoly out(connperm::BigInt(1));
  int h = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 'a') {
      ++h;
      continue;
    }
    --h;
    if (peak_is_x && i > 0 && w[i - 1] == 'a')
      out *= BivariatePoly::x();
    else
      out *= BivariatePoly::monomial(0, 1) + BivariatePoly(connperm::BigInt(h));
  }
  return out;
}

inline connperm::BigInt fact(int n) {
  connperm::BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace ref
