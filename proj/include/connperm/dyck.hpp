#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "connperm/perm.hpp"

namespace connperm {

/// Labeling conventions for the down steps of a Dyck path.
///  Delta: b_0 exactly after an up step; any other b_i has
///         1 <= i <= (height before the step).
///  RV:    b_1 after an up step; every b_i has 1 <= i <= (height before).
enum class LabelScheme { Delta, RV };

inline constexpr int kUp = -1;

/// Letters are kUp for `a` and k >= 0 for `b_k`.
struct LabeledDyckPath {
  std::vector<int> letters;
  LabelScheme scheme = LabelScheme::Delta;

  friend bool operator==(const LabeledDyckPath&, const LabeledDyckPath&) = default;
};

/// Balanced a/b word with no prefix having more b's than a's.
bool validate_dyck(std::string_view word);
bool validate_labeling(const LabeledDyckPath& lp);

/// The unlabeled a/b word.
std::string underlying(const LabeledDyckPath& lp);

/// No proper nonempty prefix is a Dyck path. Throws InvalidPath.
bool is_primitive(std::string_view word);

/// Records how p is assembled by opening cycles (a^k b_0) and filling free
/// slots (b_j, j counted from the pivot).
LabeledDyckPath delta(const Permutation& p);

/// Throws InvalidLabeling, PlacementOutOfRange.
Permutation delta_inverse(const LabeledDyckPath& lp);

/// Delta <-> RV relabeling; an involution preserving the unlabeled path.
/// Throws InvalidLabeling.
LabeledDyckPath convert_label_scheme(const LabeledDyckPath& lp);

/// All Dyck words of semilength n in lexicographic order (a < b).
void for_each_dyck_path(int n, const std::function<void(const std::string&)>& visit);
std::vector<std::string> enum_dyck_paths(int n);

/// Every valid labeling of `word` under `scheme`. Throws InvalidPath.
std::vector<LabeledDyckPath> enum_labelings(std::string_view word, LabelScheme scheme);

int count_label(const LabeledDyckPath& lp, int label);

// Whitespace-separated tokens: "a a b0 b1".
std::string format_labeled(const LabeledDyckPath& lp);
LabeledDyckPath parse_labeled(std::string_view text, LabelScheme scheme = LabelScheme::Delta);
nlohmann::ordered_json labeled_to_json(const LabeledDyckPath& lp);
LabeledDyckPath labeled_from_json(const nlohmann::ordered_json& j, LabelScheme scheme = LabelScheme::Delta);

}  // namespace connperm
