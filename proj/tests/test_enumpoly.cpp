#include <doctest.h>

#include "connperm/enumpoly.hpp"
#include "connperm/errors.hpp"
#include "support.hpp"

using namespace connperm;

namespace {

const BivariatePoly X = BivariatePoly::x();
const BivariatePoly Y = BivariatePoly::y();

BivariatePoly term(int px, int qy, int c) { return BivariatePoly::monomial(px, qy, c); }

// Exhaustive (cycles, lr-maxima) generating polynomial.
BivariatePoly joint_reference(int n, bool indecomposable_only) {
  BivariatePoly out;
  for (const auto& a : ref::all_perms(n))
    if (!indecomposable_only || ref::indecomposable(a)) out.add_term(ref::cycles(a), ref::lr_max(a), 1);
  return out;
}

// Sum of per-path weights over explicitly enumerated words.
std::pair<BivariatePoly, BivariatePoly> path_reference(int n, bool peak_is_x) {
  BivariatePoly all, prim;
  for (const auto& w : ref::dyck_words(n)) {
    const auto p = ref::path_weight(w, peak_is_x);
    all += p;
    if (ref::primitive_word(w)) prim += p;
  }
  return {all, prim};
}

}  // namespace

TEST_CASE("factorials") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(double_factorial_odd(0) == 1);
  CHECK(double_factorial_odd(3) == 15);
  CHECK_THROWS_AS(factorial(-1), InvalidArgument);
}

TEST_CASE("Stirling polynomials") {
  CHECK(stirling_poly(0) == BivariatePoly(1));
  CHECK(stirling_poly(1) == X);
  CHECK(stirling_poly(2) == X * X + X);
  CHECK(stirling_poly(4) == term(4, 0, 1) + term(3, 0, 6) + term(2, 0, 11) + term(1, 0, 6));
  CHECK(stirling_first(4, 2) == 11);
  for (int n = 1; n <= 7; ++n) {
    BivariatePoly ref_cycles;
    for (const auto& a : ref::all_perms(n)) ref_cycles.add_term(ref::cycles(a), 0, 1);
    CHECK(stirling_poly(n) == ref_cycles);
  }
}

TEST_CASE("indecomposable counts") {
  const int expected[] = {0, 1, 1, 3, 13, 71, 461, 3447, 29093};
  for (int n = 1; n <= 8; ++n) CHECK(c_count(n) == expected[n]);
  CHECK(c_count(5) == 1 * 1 * 6 + 2 * 1 * 2 + 3 * 3 * 1 + 4 * 13 * 1);
  CHECK(c_count(8) == ref::fact(8) - (5040 + 720 + 360 + 312 + 426 + 922 + 3447));
  CHECK_THROWS_AS(c_count(0), InvalidArgument);
  // c_n is also n! minus the decomposable ones counted by first block.
  for (int n = 2; n <= 40; ++n) {
    BigInt dec = 0;
    for (int p = 1; p < n; ++p) dec += c_count(p) * ref::fact(n - p);
    REQUIRE(c_count(n) + dec == ref::fact(n));
  }
}

TEST_CASE("indecomposable Stirling triangle") {
  const std::vector<std::vector<int>> rows{
      {1}, {2, 1}, {6, 6, 1}, {24, 34, 12, 1}, {120, 210, 110, 20, 1}, {720, 1452, 974, 270, 30, 1}};
  for (int n = 2; n <= 7; ++n) {
    const auto& row = rows[static_cast<std::size_t>(n - 2)];
    const auto oracle = joint_reference(n, true).at_y_one();
    for (int k = 1; k <= n; ++k) {
      const int expected = k <= static_cast<int>(row.size()) ? row[static_cast<std::size_t>(k - 1)] : 0;
      CHECK(c_count_by_cycles(n, k) == expected);
      CHECK(oracle.coeff(k, 0) == expected);
      CHECK(c_poly(n).coeff(k, 0) == expected);
    }
  }
  CHECK(c_count_by_cycles(5, 2) == 34);
  CHECK(c_count_by_cycles(7, 3) == 974);
  CHECK(c_count_by_cycles(5, 0) == 0);
  CHECK(c_poly(2) == X);
  CHECK(c_poly(4) == term(1, 0, 6) + term(2, 0, 6) + term(3, 0, 1));
  for (int n = 1; n <= 10; ++n) CHECK(c_poly(n).eval(1, 1) == c_count(n));
}

TEST_CASE("involution counts") {
  const int expected[] = {0, 1, 2, 10, 74};
  for (int m = 1; m <= 4; ++m) CHECK(i_count(m) == expected[m]);
}

TEST_CASE("path polynomials of single paths") {
  CHECK(L_of_path("ab") == X);
  CHECK(L_of_path("aabb") == X * Y);
  CHECK(L_of_path("abab") == X * X);
  CHECK(M_of_path("ab") == Y);
  CHECK_THROWS_AS(L_of_path("ba"), InvalidPath);
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : ref::dyck_words(n)) {
      REQUIRE(L_of_path(w) == ref::path_weight(w, true));
      REQUIRE(M_of_path(w) == ref::path_weight(w, false));
    }
}

TEST_CASE("L family printed values") {
  CHECK(L_family(1).all == X);
  CHECK(L_family(1).primitive == X);
  CHECK(L_family(2).primitive == X * Y);
  CHECK(L_family(2).all == X * Y + X * X);
  CHECK(L_family(3).primitive == term(1, 2, 1) + term(2, 1, 1) + term(1, 1, 1));
  CHECK(L_family(3).all == term(3, 0, 1) + term(1, 2, 1) + term(2, 1, 3) + term(1, 1, 1));
  CHECK(L_family(4).primitive ==
        term(1, 3, 1) + term(1, 2, 3) + term(2, 2, 3) + term(1, 1, 2) + term(2, 1, 3) + term(3, 1, 1));
  CHECK(L_family(4).all ==
        term(1, 3, 1) + term(1, 2, 3) + term(2, 2, 6) + term(1, 1, 2) + term(2, 1, 5) + term(3, 1, 6) + term(4, 0, 1));
  CHECK(L_family(3).all.to_string() == "x^3 + 3*x^2*y + x*y^2 + x*y");
}

TEST_CASE("L family agrees with explicit paths and with permutations") {
  for (int n = 1; n <= 7; ++n) {
    const auto fam = L_family(n);
    const auto [all, prim] = path_reference(n, true);
    CHECK(fam.all == all);
    CHECK(fam.primitive == prim);
    if (n >= 2) CHECK(fam.primitive == joint_reference(n, true));
    CHECK(fam.all.eval(1, 1) == ref::fact(n));
    CHECK(fam.primitive.eval(1, 1) == c_count(n));
    CHECK(fam.primitive.at_y_one() == c_poly(n));
  }
  for (int n = 2; n <= 8; ++n) CHECK(L_family(n).primitive == L_family(n).primitive.swap_xy());
  // The single fixed point weighs xy as a permutation but x as a path.
  CHECK(joint_reference(1, true) == X * Y);
}

TEST_CASE("M family") {
  CHECK(M_family(1).primitive == Y);
  CHECK(M_family(2).primitive == Y * Y + Y);
  CHECK(M_family(3).primitive == term(0, 3, 2) + term(0, 2, 5) + term(0, 1, 3));
  CHECK(M_family(4).primitive.to_string() == "5*y^4 + 22*y^3 + 32*y^2 + 15*y");
  for (int m = 1; m <= 7; ++m) {
    const auto fam = M_family(m);
    const auto [all, prim] = path_reference(m, false);
    CHECK(fam.all == all);
    CHECK(fam.primitive == prim);
    CHECK(fam.primitive.eval(1, 1) == i_count(m));
    if (m <= 6) CHECK(fam.all.eval(1, 1) == double_factorial_odd(m));
  }
}

TEST_CASE("joint permutation polynomial") {
  CHECK(joint_perm_poly(2) == term(2, 2, 1) + term(1, 1, 1));
  CHECK(joint_perm_poly(3) == term(3, 3, 1) + term(2, 2, 2) + term(1, 2, 1) + term(2, 1, 1) + term(1, 1, 1));
  for (int n = 1; n <= 7; ++n) {
    const auto j = joint_perm_poly(n);
    CHECK(j == joint_reference(n, false));
    CHECK(j == j.swap_xy());
  }
  // Weight x for singletons disagrees already on S_2.
  CHECK(detail::joint_perm_poly(2, X) == X * Y + X * X);
}

TEST_CASE("transitive probability") {
  CHECK(to_string(transitive_probability(3)) == "13/18");
  CHECK(to_string(transitive_probability(1)) == "1");
  CHECK(to_string(transitive_probability(4)) == "71/96");
}

TEST_CASE("map series functional equation") {
  const auto u = rooted_map_series(3);
  CHECK(u[0] == Y);
  CHECK(u[1] == Y * Y + Y);
  CHECK(u[2] == Y * (Y + BivariatePoly(1)) * (Y + BivariatePoly(1)) + Y * (Y + BivariatePoly(1)) +
                    (Y * Y + Y) * (Y + BivariatePoly(1)));
  CHECK(arques_beraud_check(6).is_zero());
  CHECK(arques_beraud_check(12).is_zero());
}
