#include "connperm/maps.hpp"

#include "connperm/enumpoly.hpp"
#include "connperm/errors.hpp"

namespace connperm {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

}  // namespace

bool is_fpf_involution(const Permutation& p) {
  if (p.size() % 2 != 0) return false;
  for (int i = 1; i <= p.size(); ++i)
    if (p(i) == i || p(p(i)) != i) return false;
  return true;
}

RootedMap::RootedMap(PermPair pair) : hypermap_(std::move(pair)) {
  if (!is_fpf_involution(hypermap_.alpha())) throw NotFpf("alpha is not a fixed-point-free involution");
}

RootedMap psi_prime(const Permutation& theta) {
  if (!is_fpf_involution(theta))
    throw NotFpf(format_permutation(theta, Notation::OneLine) + " is not a fixed-point-free involution");
  if (theta.size() < 4) throw SizeTooSmall("psi_prime needs size 2m+2 >= 4");
  const Hypermap h = psi(theta);  // throws Decomposable
  const int n = h.size();         // 2m + 1
  const int j = theta(theta.size());
  if (h.alpha()(j) != j) throw InternalMismatch("psi left no fixed point at theta(2m+2)");

  auto renumber = [j](int d) { return d > j ? d - 1 : d; };
  std::vector<int> sigma(idx(n - 1)), alpha(idx(n - 1));
  for (int d = 1; d <= n; ++d) {
    if (d == j) continue;
    int s = h.sigma()(d);
    if (s == j) s = h.sigma()(j);
    sigma[idx(renumber(d) - 1)] = renumber(s);
    alpha[idx(renumber(d) - 1)] = renumber(h.alpha()(d));
  }
  return RootedMap(PermPair(Permutation(std::move(sigma)), Permutation(std::move(alpha))));
}

Permutation psi_prime_inverse(const RootedMap& map) {
  const int n = map.size();  // 2m
  const int root = n;
  const int fresh = n;       // new dart label
  const int new_root = n + 1;
  auto relabel = [&](int d) { return d == root ? new_root : d; };

  std::vector<int> sigma(idx(n + 1)), alpha(idx(n + 1));
  for (int d = 1; d < root; ++d) {
    sigma[idx(d - 1)] = relabel(map.sigma()(d));
    alpha[idx(d - 1)] = relabel(map.alpha()(d));
  }
  // The fixed dart sits right after the root in the root vertex.
  sigma[idx(new_root - 1)] = fresh;
  sigma[idx(fresh - 1)] = relabel(map.sigma()(root));
  alpha[idx(new_root - 1)] = relabel(map.alpha()(root));
  alpha[idx(fresh - 1)] = fresh;

  const Hypermap h(PermPair(Permutation(std::move(sigma)), Permutation(std::move(alpha))));
  Permutation theta = psi_inverse(h);
  if (!is_fpf_involution(theta)) throw InternalMismatch("psi_prime_inverse produced a non-involution");
  return theta;
}

RootedMap canonical_rooted_map(const RootedMap& map) { return psi_prime(psi_prime_inverse(map)); }

BigInt map_count(int m) {
  if (m < 0) throw InvalidArgument("map_count: m must be >= 0");
  return i_count(m + 1);
}

BigInt map_count_by_vertices(int m, int v) {
  if (m < 0) throw InvalidArgument("map_count_by_vertices: m must be >= 0");
  return M_family(m + 1).primitive.coeff(0, v);
}

std::string format_map(const RootedMap& map) { return format_hypermap(map.hypermap().pair()); }

nlohmann::ordered_json map_to_json(const RootedMap& map) {
  auto j = hypermap_to_json(map.hypermap().pair());
  j["is_map"] = true;
  return j;
}

RootedMap map_from_json(const nlohmann::ordered_json& j) { return RootedMap(perm_pair_from_json(j)); }

}  // namespace connperm
