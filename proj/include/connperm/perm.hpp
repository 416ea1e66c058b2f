#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace connperm {

/// A permutation of {1..n} in one-line form. All public indices and values
/// are 1-based: p(i) is the image of i.
class Permutation {
 public:
  /// Validates that `images` is a bijection of {1..n}, n >= 1.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  /// Builds from disjoint cycles over {1..n}; elements not mentioned are
  /// fixed points. Throws NotABijection on repeats or out-of-range values.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> images() const { return images_; }

  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> images, Unchecked) : images_(std::move(images)) {}

  std::vector<int> images_;

  friend Permutation make_unchecked(std::vector<int> images);
};

// Skips validation; for internal producers that build bijections by
// construction.
Permutation make_unchecked(std::vector<int> images);

enum class Notation { OneLine, Cycle };

/// Cycles partitioning {1..n}. In canonical form every cycle starts with its
/// maximum and cycles appear by increasing first element.
struct CycleForm {
  std::vector<std::vector<int>> cycles;
  bool canonical = false;

  friend bool operator==(const CycleForm&, const CycleForm&) = default;
};

Permutation parse_permutation(std::string_view text, Notation notation);
std::string format_permutation(const Permutation& p, Notation notation);

// Cycle notation with each cycle starting at its minimum, cycles ordered by
// minimum, e.g. "(1,6)(2,5)(3,7)(4)(8)(9)". Used by the hypermap text form.
std::string format_cycles_min_first(const Permutation& p);
std::string format_cycle_form(const CycleForm& form);

/// (a*b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);

CycleForm cycles(const Permutation& p);
int cycle_count(const Permutation& p);
int fixed_point_count(const Permutation& p);

/// Indices i with a_j < a_i for all j < i.
std::vector<int> lr_maxima(const Permutation& p);
/// Indices i with a_j > a_i for all j > i.
std::vector<int> rl_minima(const Permutation& p);

/// True iff no p < n has {a_1..a_p} = {1..p}. Size 1 is indecomposable.
bool is_indecomposable(const Permutation& p);

/// Maximal decomposition into indecomposable blocks, each renumbered to
/// {1..len}.
std::vector<Permutation> blocks(const Permutation& p);
Permutation concat_blocks(std::span<const Permutation> bs);

/// Reads the canonical cycle form as a sequence; exchanges cycles with
/// left-to-right maxima.
Permutation fundamental_transform(const Permutation& p);
/// Opens a cycle before each left-to-right maximum.
Permutation fundamental_transform_inverse(const Permutation& p);

/// phi^-1 * p * phi.
Permutation conjugate(const Permutation& p, const Permutation& phi);

/// Sorted cycle lengths, the conjugacy invariant.
std::vector<int> cycle_type(const Permutation& p);

}  // namespace connperm
