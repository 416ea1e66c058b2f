#include "connperm/hypermap.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>

#include "connperm/errors.hpp"

namespace connperm {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n) + 1), rank_(parent_.size(), 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }

  // Returns true when two distinct classes were merged.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[static_cast<std::size_t>(a)] < rank_[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    if (rank_[static_cast<std::size_t>(a)] == rank_[static_cast<std::size_t>(b)]) ++rank_[static_cast<std::size_t>(a)];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

std::vector<std::vector<int>> cycles_min_first(const Permutation& p) {
  std::vector<std::vector<int>> cs;
  std::vector<char> seen(static_cast<std::size_t>(p.size()) + 1, 0);
  for (int start = 1; start <= p.size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> c;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = p(x)) {
      seen[static_cast<std::size_t>(x)] = 1;
      c.push_back(x);
    }
    cs.push_back(std::move(c));
  }
  return cs;
}

// Inserts n+1 at position `root_start` of the one-line form of alpha and
// appends alpha(root_start).
Permutation root_run_insertion(const Permutation& alpha, int root_start) {
  const int n = alpha.size();
  std::vector<int> images(alpha.images().begin(), alpha.images().end());
  images.push_back(alpha(root_start));
  images[static_cast<std::size_t>(root_start - 1)] = n + 1;
  return make_unchecked(std::move(images));
}

// Smallest element of the sigma-cycle through n, for sigma in interval form.
int root_run_start(const Permutation& sigma) {
  const int n = sigma.size();
  int len = 1;
  for (int x = sigma(n); x != n; x = sigma(x)) ++len;
  return n - len + 1;
}

}  // namespace

PermPair::PermPair(Permutation s, Permutation a) : sigma(std::move(s)), alpha(std::move(a)) {
  if (sigma.size() != alpha.size())
    throw SizeMismatch("sigma has size " + std::to_string(sigma.size()) + ", alpha has size " +
                       std::to_string(alpha.size()));
}

Hypermap::Hypermap(PermPair pair) : pair_(std::move(pair)) {
  if (!is_transitive(pair_)) throw NotTransitive("sigma and alpha do not act transitively");
}

Hypermap make_hypermap_unchecked(PermPair pair) {
  return Hypermap(std::move(pair), Hypermap::Unchecked{});
}

bool is_transitive(const PermPair& pp) {
  const int n = pp.size();
  DisjointSets sets(n);
  int components = n;
  for (int b = 1; b <= n; ++b) {
    components -= sets.unite(b, pp.sigma(b));
    components -= sets.unite(b, pp.alpha(b));
  }
  return components == 1;
}

Hypermap make_hypermap(PermPair pp) { return Hypermap(std::move(pp)); }

Hypermap psi(const Permutation& theta) {
  const int total = theta.size();
  if (total < 2) throw SizeTooSmall("psi needs a permutation of size >= 2");
  if (!is_indecomposable(theta))
    throw Decomposable(format_permutation(theta, Notation::OneLine) + " is decomposable");
  const int n = total - 1;
  const auto maxima = lr_maxima(theta);

  std::vector<int> sigma(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < maxima.size(); ++k) {
    const int first = maxima[k];
    const int last = k + 1 < maxima.size() ? maxima[k + 1] - 1 : n;
    for (int i = first; i < last; ++i) sigma[static_cast<std::size_t>(i - 1)] = i + 1;
    sigma[static_cast<std::size_t>(last - 1)] = first;
  }

  std::vector<int> alpha(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    alpha[static_cast<std::size_t>(i - 1)] = theta(i) == total ? theta(total) : theta(i);

  // Transitive by construction: each run is linked by alpha to a later run.
  return make_hypermap_unchecked(
      PermPair(make_unchecked(std::move(sigma)), make_unchecked(std::move(alpha))));
}

bool satisfies_lemma1(const PermPair& pp) {
  if (!is_transitive(pp)) return false;
  const int n = pp.size();
  std::vector<int> starts;
  for (int i = 1; i <= n;) {
    starts.push_back(i);
    int j = i;
    while (pp.sigma(j) == j + 1) ++j;
    if (pp.sigma(j) != i) return false;
    i = j + 1;
  }
  const int last_start = starts.back();
  starts.pop_back();

  const Permutation alpha_inv = inverse(pp.alpha);
  std::vector<int> minima_below;
  for (int idx : rl_minima(alpha_inv)) {
    const int value = alpha_inv(idx);
    if (value < last_start) minima_below.push_back(value);
  }
  std::sort(minima_below.begin(), minima_below.end());
  return minima_below == starts;
}

namespace detail {

RootedCanonical canonical_rooted_form(const Hypermap& h, CanonFaults faults) {
  const int n = h.size();
  const Permutation& sigma = h.sigma();
  const Permutation alpha_inv = inverse(h.alpha());

  std::deque<int> written;
  std::vector<char> is_written(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> examined(static_cast<std::size_t>(n) + 1, 0);

  auto sigma_cycle_from = [&](int start) {
    std::vector<int> c{start};
    for (int x = sigma(start); x != start; x = sigma(x)) c.push_back(x);
    return c;
  };

  // Root cycle, rotated so that n comes last.
  for (int x : sigma_cycle_from(sigma(n))) {
    written.push_back(x);
    is_written[static_cast<std::size_t>(x)] = 1;
  }

  while (static_cast<int>(written.size()) < n) {
    // The rightmost written element whose alpha-preimage is still unexamined.
    auto it = std::find_if(written.rbegin(), written.rend(),
                           [&](int x) { return !examined[static_cast<std::size_t>(x)]; });
    if (it == written.rend()) throw InternalMismatch("canonical scan stalled; input not transitive");
    const int x = *it;
    examined[static_cast<std::size_t>(x)] = 1;
    const int u = alpha_inv(x);
    if (is_written[static_cast<std::size_t>(u)]) continue;

    auto c = sigma_cycle_from(u);
    if (faults.skip_rotation) std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
    for (auto r = c.rbegin(); r != c.rend(); ++r) {
      written.push_front(*r);
      is_written[static_cast<std::size_t>(*r)] = 1;
    }
  }

  Permutation phi = make_unchecked(std::vector<int>(written.begin(), written.end()));
  PermPair conj(conjugate(h.sigma(), phi), conjugate(h.alpha(), phi));
  return {make_hypermap_unchecked(std::move(conj)), std::move(phi)};
}

Permutation psi_inverse(const Hypermap& h, CanonFaults faults) {
  const auto canon = canonical_rooted_form(h, faults);
  return root_run_insertion(canon.hypermap.alpha(), root_run_start(canon.hypermap.sigma()));
}

}  // namespace detail

RootedCanonical canonical_rooted_form(const Hypermap& h) {
  return detail::canonical_rooted_form(h, {});
}

Permutation psi_inverse(const Hypermap& h) { return detail::psi_inverse(h, {}); }

bool rooted_isomorphic(const Hypermap& h1, const Hypermap& h2) {
  if (h1.size() != h2.size())
    throw SizeMismatch("hypermaps have " + std::to_string(h1.size()) + " and " +
                       std::to_string(h2.size()) + " darts");
  return canonical_rooted_form(h1).hypermap == canonical_rooted_form(h2).hypermap;
}

Permutation phi_bijection(const Permutation& p) {
  std::vector<Permutation> images;
  for (const auto& block : blocks(p)) {
    if (block.size() == 1) {
      images.push_back(block);
      continue;
    }
    const Hypermap h = psi(block);
    // Swapping roles keeps transitivity.
    images.push_back(psi_inverse(make_hypermap_unchecked(PermPair(h.alpha(), h.sigma()))));
  }
  return concat_blocks(images);
}

std::string format_hypermap(const PermPair& pp) {
  return "sigma=" + format_cycles_min_first(pp.sigma) + ";alpha=" + format_cycles_min_first(pp.alpha);
}

PermPair parse_perm_pair(std::string_view text) {
  auto strip = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw ParseError("expected 'sigma=...;alpha=...'");
  auto lhs = strip(text.substr(0, semi));
  auto rhs = strip(text.substr(semi + 1));
  auto take = [&](std::string_view part, std::string_view key) {
    if (part.substr(0, key.size()) != key) throw ParseError("expected '" + std::string(key) + "'");
    return parse_permutation(part.substr(key.size()), Notation::Cycle);
  };
  return PermPair(take(lhs, "sigma="), take(rhs, "alpha="));
}

nlohmann::ordered_json hypermap_to_json(const PermPair& pp) {
  return {{"n", pp.size()}, {"sigma", cycles_min_first(pp.sigma)}, {"alpha", cycles_min_first(pp.alpha)}};
}

PermPair perm_pair_from_json(const nlohmann::ordered_json& j) {
  try {
    const int n = j.at("n").get<int>();
    auto read = [&](const char* key) {
      return Permutation::from_cycles(n, j.at(key).get<std::vector<std::vector<int>>>());
    };
    return PermPair(read("sigma"), read("alpha"));
  } catch (const nlohmann::ordered_json::exception& e) {
    throw ParseError(std::string("hypermap JSON: ") + e.what());
  }
}

}  // namespace connperm
