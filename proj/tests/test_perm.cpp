#include <doctest.h>

#include "connperm/errors.hpp"
#include "connperm/perm.hpp"
#include "support.hpp"

using namespace connperm;

namespace {

Permutation P(const std::string& s) { return parse_permutation(s, Notation::OneLine); }
Permutation C(const std::string& s) { return parse_permutation(s, Notation::Cycle); }

}  // namespace

TEST_CASE("reference statistics agree with the library exhaustively") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& a : ref::all_perms(n)) {
      const Permutation p = ref::perm(a);
      REQUIRE(cycle_count(p) == ref::cycles(a));
      REQUIRE(static_cast<int>(lr_maxima(p).size()) == ref::lr_max(a));
      REQUIRE(static_cast<int>(rl_minima(p).size()) == ref::rl_min(a));
      REQUIRE(is_indecomposable(p) == ref::indecomposable(a));
      REQUIRE(fixed_point_count(p) == ref::fixed_points(a));
    }
  }
}

TEST_CASE("exhaustive indecomposable counts") {
  const int expected[] = {0, 1, 1, 3, 13, 71, 461, 3447, 29093};
  for (int n = 1; n <= 8; ++n) {
    int count = 0;
    for (const auto& a : ref::all_perms(n)) count += ref::indecomposable(a);
    CHECK(count == expected[n]);
  }
}

TEST_CASE("construction and parsing") {
  CHECK(P("3,1,2,5,4") == Permutation({3, 1, 2, 5, 4}));
  CHECK(C("(1,4)(2,7,5,3)(6)(8,9)") == P("4,7,2,1,3,6,5,9,8"));
  CHECK(P("1") == Permutation::identity(1));
  CHECK(P(" 2, 1 ") == P("2,1"));
  CHECK_THROWS_AS(P("1,1"), NotABijection);
  CHECK_THROWS_AS(P("1,3"), NotABijection);
  CHECK_THROWS_AS(P("1,,2"), ParseError);
  CHECK_THROWS_AS(P(""), ParseError);
  CHECK_THROWS_AS(P("0"), ParseError);
  CHECK_THROWS_AS(C("(1,3)"), NotABijection);  // 2 omitted
  CHECK_THROWS_AS(C("(1,2"), ParseError);
  CHECK_THROWS_AS(C("(1,2)(2)"), NotABijection);
  CHECK_THROWS_AS(Permutation(std::vector<int>{}), Error);
}

TEST_CASE("formatting") {
  CHECK(format_permutation(P("4,7,2,1,3,6,5,9,8"), Notation::Cycle) == "(4,1)(6)(7,5,3,2)(9,8)");
  CHECK(format_permutation(Permutation::identity(1), Notation::OneLine) == "1");
  CHECK(format_permutation(P("2,1"), Notation::OneLine) == "2,1");
  CHECK(format_permutation(Permutation::identity(3), Notation::Cycle) == "(1)(2)(3)");
  CHECK(format_permutation(P("6,5,7,4,2,10,3,8,9,1"), Notation::Cycle) == "(4)(5,2)(7,3)(8)(9)(10,1,6)");
  CHECK(format_cycles_min_first(P("6,5,7,4,2,10,3,8,9,1")) == "(1,6,10)(2,5)(3,7)(4)(8)(9)");
}

TEST_CASE("compose and inverse") {
  CHECK(compose(P("2,1"), P("2,1")).is_identity());
  CHECK(compose(P("2,3,1"), Permutation::identity(3)) == P("2,3,1"));
  CHECK(compose(P("2,3,1"), P("2,1,3")) == P("3,2,1"));
  CHECK_THROWS_AS(compose(P("2,1"), P("1,2,3")), SizeMismatch);
  CHECK(inverse(P("2,3,1")) == P("3,1,2"));
  CHECK(inverse(Permutation::identity(4)).is_identity());
  const auto a = P("4,7,2,1,3,6,5,9,8");
  CHECK(compose(a, inverse(a)).is_identity());
}

TEST_CASE("left-to-right maxima and right-to-left minima") {
  CHECK(lr_maxima(P("6,5,7,4,2,10,3,8,9,1")) == std::vector<int>{1, 3, 6});
  CHECK(lr_maxima(Permutation::identity(4)) == std::vector<int>{1, 2, 3, 4});
  CHECK(lr_maxima(P("5,1,2,3,4")) == std::vector<int>{1});
  CHECK(rl_minima(Permutation::identity(4)) == std::vector<int>{1, 2, 3, 4});
  CHECK(rl_minima(P("2,1")) == std::vector<int>{2});
  CHECK(rl_minima(P("4,6,5,7,3,8,1,9,10,2")) == std::vector<int>{7, 10});
}

TEST_CASE("indecomposability and blocks") {
  CHECK_FALSE(is_indecomposable(P("3,1,2,5,4")));
  CHECK(is_indecomposable(P("5,1,2,3,4")));
  CHECK_FALSE(is_indecomposable(Permutation::identity(2)));
  CHECK(is_indecomposable(Permutation::identity(1)));

  const auto bs = blocks(P("3,1,2,5,4"));
  REQUIRE(bs.size() == 2);
  CHECK(bs[0] == P("3,1,2"));
  CHECK(bs[1] == P("2,1"));
  CHECK(blocks(P("5,1,2,3,4")).size() == 1);
  CHECK(blocks(Permutation::identity(3)).size() == 3);
  CHECK(concat_blocks(bs) == P("3,1,2,5,4"));
  const std::vector<Permutation> ones{P("1"), P("1")};
  CHECK(concat_blocks(ones) == Permutation::identity(2));
  CHECK_THROWS_AS(concat_blocks(std::vector<Permutation>{}), EmptyInput);
}

TEST_CASE("fundamental transform") {
  CHECK(fundamental_transform(P("4,7,2,1,3,6,5,9,8")) == P("4,1,6,7,5,3,2,9,8"));
  CHECK(fundamental_transform(Permutation::identity(3)).is_identity());
  CHECK(fundamental_transform(P("2,1")) == P("2,1"));
  CHECK(fundamental_transform_inverse(P("4,1,6,7,5,3,2,9,8")) == P("4,7,2,1,3,6,5,9,8"));
  CHECK(fundamental_transform_inverse(Permutation::identity(5)).is_identity());
  CHECK(fundamental_transform_inverse(P("2,1")) == P("2,1"));
}

TEST_CASE("conjugation") {
  const auto sigma = C("(1,6)(2,5)(3,7)(4)(8)(9)");
  const auto phi = P("4,6,1,5,2,7,3,8,9");
  CHECK(conjugate(sigma, phi) == C("(1)(2,3)(4,5)(6,7)(8)(9)"));
  CHECK(conjugate(sigma, Permutation::identity(9)) == sigma);
  CHECK_THROWS_AS(conjugate(sigma, Permutation::identity(3)), SizeMismatch);
}

TEST_CASE("properties over all of S_n, n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& a : ref::all_perms(n)) {
      const Permutation p = ref::perm(a);
      const auto t = fundamental_transform(p);
      REQUIRE(ref::lr_max(ref::images_of(t)) == ref::cycles(a));
      REQUIRE(ref::indecomposable(ref::images_of(t)) == ref::indecomposable(a));
      REQUIRE(ref::indecomposable(ref::images_of(inverse(p))) == ref::indecomposable(a));
      REQUIRE(fundamental_transform_inverse(t) == p);
      REQUIRE(parse_permutation(format_permutation(p, Notation::OneLine), Notation::OneLine) == p);
      REQUIRE(parse_permutation(format_permutation(p, Notation::Cycle), Notation::Cycle) == p);
      REQUIRE(parse_permutation(format_cycles_min_first(p), Notation::Cycle) == p);
      const auto bs = blocks(p);
      for (const auto& b : bs) REQUIRE(ref::indecomposable(ref::images_of(b)));
      REQUIRE(concat_blocks(bs) == p);
    }
  }
}

TEST_CASE("random properties at larger sizes") {
  std::mt19937 rng(ref::kSeed);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 40);
    const auto a = ref::random_perm(n, rng);
    const Permutation p = ref::perm(a);
    const auto phi = ref::perm(ref::random_perm(n, rng));
    REQUIRE(cycle_type(conjugate(p, phi)) == cycle_type(p));
    REQUIRE(compose(p, inverse(p)).is_identity());
    const auto t = fundamental_transform(p);
    REQUIRE(ref::lr_max(ref::images_of(t)) == ref::cycles(a));
    REQUIRE(fundamental_transform_inverse(t) == p);
    REQUIRE(parse_permutation(format_permutation(p, Notation::Cycle), Notation::Cycle) == p);
  }
}
