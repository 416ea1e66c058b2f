#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "connperm/perm.hpp"

namespace connperm {

/// Two permutations of the same size with no transitivity requirement.
struct PermPair {
  Permutation sigma;
  Permutation alpha;

  PermPair(Permutation sigma, Permutation alpha);
  int size() const { return sigma.size(); }

  friend bool operator==(const PermPair&, const PermPair&) = default;
  friend auto operator<=>(const PermPair&, const PermPair&) = default;
};

/// A transitive pair: sigma-cycles are vertices, alpha-cycles hyper-edges.
/// The root is dart n.
class Hypermap {
 public:
  /// Throws NotTransitive.
  explicit Hypermap(PermPair pair);

  const Permutation& sigma() const { return pair_.sigma; }
  const Permutation& alpha() const { return pair_.alpha; }
  const PermPair& pair() const { return pair_; }
  int size() const { return pair_.size(); }
  int vertex_count() const { return cycle_count(pair_.sigma); }
  int edge_count() const { return cycle_count(pair_.alpha); }

  friend bool operator==(const Hypermap&, const Hypermap&) = default;
  friend auto operator<=>(const Hypermap&, const Hypermap&) = default;

 private:
  struct Unchecked {};
  Hypermap(PermPair pair, Unchecked) : pair_(std::move(pair)) {}
  PermPair pair_;

  friend Hypermap make_hypermap_unchecked(PermPair pair);
};

Hypermap make_hypermap_unchecked(PermPair pair);

/// Connectivity of the graph with edges {b, sigma(b)} and {b, alpha(b)},
/// decided by union-find.
bool is_transitive(const PermPair& pp);
Hypermap make_hypermap(PermPair pp);

/// The OMR map: theta in S_{n+1}, indecomposable, n >= 1. sigma is cut into
/// runs starting at the left-to-right maxima of theta; alpha is theta with
/// n+1 spliced out of its cycle. Throws Decomposable, SizeTooSmall.
Hypermap psi(const Permutation& theta);

/// True iff the pair is transitive, sigma's cycles are increasing runs of
/// consecutive integers, and the right-to-left minima of alpha^-1 (as
/// values) below the last run start are exactly the other run starts.
bool satisfies_lemma1(const PermPair& pp);

struct RootedCanonical {
  Hypermap hypermap;  // conjugate of the input by phi
  Permutation phi;    // phi(n) = n
};

/// Representative of the rooted isomorphism class that lies in the image
/// of psi, together with the relabeling phi that produces it.
RootedCanonical canonical_rooted_form(const Hypermap& h);

/// Canonicalizes h then inserts n+1 at the start position of the root run.
Permutation psi_inverse(const Hypermap& h);

/// Throws SizeMismatch.
bool rooted_isomorphic(const Hypermap& h1, const Hypermap& h2);

/// Bijection on S_n exchanging (cycles, left-to-right maxima). Acts through
/// psi with vertices and hyper-edges swapped on indecomposable input and
/// blockwise otherwise.
Permutation phi_bijection(const Permutation& p);

// Text form "sigma=<cycles>;alpha=<cycles>"; cycles written min-first.
std::string format_hypermap(const PermPair& pp);
PermPair parse_perm_pair(std::string_view text);
nlohmann::ordered_json hypermap_to_json(const PermPair& pp);
PermPair perm_pair_from_json(const nlohmann::ordered_json& j);

namespace detail {

// Fault switches for the verification harness. Production code always
// passes the defaults.
struct CanonFaults {
  bool skip_rotation = false;  // write discovered cycles from their minimum
};

RootedCanonical canonical_rooted_form(const Hypermap& h, CanonFaults faults);
Permutation psi_inverse(const Hypermap& h, CanonFaults faults);

}  // namespace detail

}  // namespace connperm
