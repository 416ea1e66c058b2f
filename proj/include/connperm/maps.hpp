#pragma once

#include <nlohmann/json.hpp>

#include "connperm/hypermap.hpp"
#include "connperm/poly.hpp"

namespace connperm {

/// All cycles have length 2. False for odd sizes.
bool is_fpf_involution(const Permutation& p);

/// A hypermap whose alpha is a fixed-point-free involution; alpha-cycles are
/// edges. Root is dart n.
class RootedMap {
 public:
  /// Throws NotFpf, NotTransitive.
  explicit RootedMap(PermPair pair);

  const Hypermap& hypermap() const { return hypermap_; }
  const Permutation& sigma() const { return hypermap_.sigma(); }
  const Permutation& alpha() const { return hypermap_.alpha(); }
  int size() const { return hypermap_.size(); }
  int edge_count() const { return size() / 2; }
  int vertex_count() const { return hypermap_.vertex_count(); }

  friend bool operator==(const RootedMap&, const RootedMap&) = default;
  friend auto operator<=>(const RootedMap&, const RootedMap&) = default;

 private:
  Hypermap hypermap_;
};

/// theta: indecomposable fixed-point-free involution of size 2m+2 >= 4.
/// Runs psi, then removes the dart j = theta(2m+2) that psi leaves fixed in
/// alpha, shifting darts above j down by one. Throws NotFpf, Decomposable.
RootedMap psi_prime(const Permutation& theta);

/// Inverse of psi_prime up to rooted isomorphism: inserts a fixed dart right
/// after the root in its vertex, then applies psi_inverse.
Permutation psi_prime_inverse(const RootedMap& map);

/// The psi_prime image rooted-isomorphic to `map`.
RootedMap canonical_rooted_map(const RootedMap& map);

/// Rooted maps with m >= 0 edges; map_count(0) = 1 is the single-vertex map
/// with no darts, matching the constant term y of the map series.
BigInt map_count(int m);
BigInt map_count_by_vertices(int m, int v);

std::string format_map(const RootedMap& map);
nlohmann::ordered_json map_to_json(const RootedMap& map);
RootedMap map_from_json(const nlohmann::ordered_json& j);

}  // namespace connperm
