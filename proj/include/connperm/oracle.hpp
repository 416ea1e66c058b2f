#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "connperm/perm.hpp"
#include "connperm/poly.hpp"

// Brute-force ground truth. Everything in this header is computed by direct
// enumeration and statistic evaluation, never through the recurrences or
// bijections it is used to check.

namespace connperm {

inline constexpr int kDefaultPermLimit = 8;
inline constexpr int kDefaultPairLimit = 5;

/// S_n in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> enum_permutations(int n);

/// Fixed-point-free involutions of {1..size}, size even, lexicographic order.
void for_each_fpf_involution(int size, const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> enum_fpf_involutions(int size);

enum class Stat { Cycles, LrMaxima, RlMinima, LrMinima };

struct StatKey {
  int cycles = 0;
  int lr_maxima = 0;
  int rl_minima = 0;
  int lr_minima = 0;
  bool indecomposable = false;

  int get(Stat s) const;
  friend auto operator<=>(const StatKey&, const StatKey&) = default;
};

struct DistributionTable {
  int n = 0;
  std::map<StatKey, BigInt> entries;

  BigInt total() const;
  BigInt indecomposable_total() const;
  /// sum of x^first y^second over the selected permutations.
  BivariatePoly marginal(Stat first, Stat second, bool indecomposable_only = false) const;
  /// Counts indexed by one statistic (index 0 unused).
  std::vector<BigInt> marginal(Stat stat, bool indecomposable_only = false) const;
};

/// Throws LimitExceeded when n > limit.
DistributionTable joint_distribution(int n, int limit = kDefaultPermLimit);

/// Pairs (sigma, alpha) in S_n x S_n generating a transitive group. The scan
/// is split across workers by the lexicographic rank of sigma.
BigInt count_transitive_pairs(int n, int limit = kDefaultPairLimit, unsigned workers = 0);

struct HypermapCensus {
  int n = 0;
  BigInt labeled;                  // transitive pairs
  BigInt rooted;                   // distinct canonical rooted forms
  BigInt image_form_pairs;             // transitive pairs already in psi-image form
  BivariatePoly by_edges_vertices;  // x^(alpha cycles) y^(sigma cycles) over rooted forms
};

HypermapCensus hypermap_census(int n, int limit = kDefaultPairLimit, unsigned workers = 0);

enum class Fault {
  None,
  SkipRotation,      // canonical scan writes discovered cycles from their minimum
  SingletonWeightX,  // series inversion uses weight x for fixed-point blocks
};

Fault parse_fault(const std::string& name);
std::string fault_name(Fault f);

struct VerifyOptions {
  int max_n = 7;
  int max_pair_n = kDefaultPairLimit;
  Fault fault = Fault::None;
  unsigned workers = 0;
};

struct CheckResult {
  std::string check;
  bool passed = true;
  std::optional<std::string> witness;  // smallest failing instance
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

/// Runs every cross-check up to the configured sizes. Failures are reported
/// as data with a witness, never thrown.
VerifyReport verify_suite(const VerifyOptions& options);

}  // namespace connperm
