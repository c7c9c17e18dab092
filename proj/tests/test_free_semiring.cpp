#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tropnorm/free_semiring.hpp"

using namespace tropnorm;

namespace {

// Delta = [0,1] presented by X <= 1, -X <= 0.
MonoidPair unit_interval_pair() {
  return MonoidPair(1, {{{1}, Rational(1)}, {{-1}, Rational(0)}});
}

TropPoly poly1(std::initializer_list<std::pair<long long, Rational>> ts) {
  std::vector<AffineMonomial> ms;
  for (const auto& [s, c] : ts) ms.push_back({{s}, c});
  return TropPoly(1, ms);
}

const TropPoly kZeroOrX = poly1({{0, Rational(0)}, {1, Rational(0)}});      // 0 v X
const TropPoly kZeroOr2X = poly1({{0, Rational(0)}, {2, Rational(0)}});     // 0 v 2X
const TropPoly kX = poly1({{1, Rational(0)}});

}  // namespace

TEST_CASE("join merges term sets per slope") {
  TropPoly j = join(kZeroOrX, poly1({{2, Rational(0)}}));
  CHECK(j == poly1({{0, Rational(0)}, {1, Rational(0)}, {2, Rational(0)}}));

  TropPoly m = join(poly1({{0, Rational(1)}}), poly1({{0, Rational(2)}}));
  CHECK(m == poly1({{0, Rational(2)}}));

  CHECK(join(kZeroOrX, TropPoly(1)) == kZeroOrX);
  CHECK_THROWS_AS(join(kZeroOrX, TropPoly(2)), std::invalid_argument);
}

TEST_CASE("plus forms all pairwise sums") {
  CHECK(plus(kZeroOrX, kZeroOrX) ==
        poly1({{0, Rational(0)}, {1, Rational(0)}, {2, Rational(0)}}));
  CHECK(plus(kZeroOr2X, kZeroOrX) ==
        poly1({{0, Rational(0)}, {1, Rational(0)}, {2, Rational(0)}, {3, Rational(0)}}));
  CHECK(plus(kZeroOrX, TropPoly(1)) == TropPoly(1));
  CHECK(plus(TropPoly(1), TropPoly(1)) == TropPoly(1));
}

TEST_CASE("scale iterates plus") {
  CHECK(scale(2, kZeroOrX) == poly1({{0, Rational(0)}, {1, Rational(0)}, {2, Rational(0)}}));
  CHECK(scale(3, kZeroOrX) ==
        poly1({{0, Rational(0)}, {1, Rational(0)}, {2, Rational(0)}, {3, Rational(0)}}));
  CHECK(scale(1, kZeroOr2X) == kZeroOr2X);
  CHECK(scale(0, kZeroOr2X) == poly1({{0, Rational(0)}}));
  CHECK(scale(2, TropPoly(1)) == TropPoly(1));
  CHECK_THROWS_AS(scale(-1, kX), std::invalid_argument);
}

TEST_CASE("coefficients merge by max on duplicate slopes") {
  TropPoly f(1, {{{1}, Rational(1, 2)}, {{1}, Rational(2)}, {{1}, Rational(-3)}});
  CHECK(f == poly1({{1, Rational(2)}}));
}

TEST_CASE("eval takes the max term") {
  CHECK(eval(kZeroOr2X, {Rational(1, 2)}) == Rational(1));
  CHECK(eval(poly1({{0, Rational(0)}, {1, Rational(0)}, {2, Rational(0)}}), {Rational(1, 2)}) ==
        Rational(1));
  CHECK(eval(TropPoly(1), {Rational(0)}) == std::nullopt);
  CHECK_THROWS_AS(eval(kX, QVector{Rational(0), Rational(0)}), std::invalid_argument);
}

TEST_CASE("eval is a semiring homomorphism on samples") {
  std::vector<QVector> samples = {{Rational(0)}, {Rational(1, 3)}, {Rational(1)}, {Rational(-2)}};
  TropPoly f = kZeroOr2X;
  TropPoly g = poly1({{1, Rational(-1, 2)}, {0, Rational(1, 4)}});
  for (const auto& p : samples) {
    CHECK(*eval(join(f, g), p) == std::max(*eval(f, p), *eval(g, p)));
    CHECK(*eval(plus(f, g), p) == *eval(f, p) + *eval(g, p));
  }
}

TEST_CASE("monoid pair construction primitivizes and validates") {
  MonoidPair p(1, {{{2}, Rational(2)}, {{-3}, Rational(0)}});
  CHECK(p.constraints()[0].F == IntVec{1});
  CHECK(p.constraints()[0].lambda == Rational(1));
  CHECK(p.constraints()[1].F == IntVec{-1});
  CHECK(p.constraints()[1].lambda == Rational(0));
  CHECK(p.polytope().checked_full_dim());

  // empty
  CHECK_THROWS_AS(MonoidPair(1, {{{1}, Rational(-1)}, {{-1}, Rational(0)}}), std::invalid_argument);
  // unbounded
  CHECK_THROWS_AS(MonoidPair(1, {{{-1}, Rational(0)}}), std::invalid_argument);
  // not full-dimensional
  CHECK_THROWS_AS(MonoidPair(2, {{{1, 0}, Rational(1)}, {{-1, 0}, Rational(0)},
                                 {{0, 1}, Rational(0)}, {{0, -1}, Rational(0)}}),
                  std::invalid_argument);
}

TEST_CASE("monoid membership on the unit interval") {
  MonoidPair pair = unit_interval_pair();

  // the constant -1 is in the R_{<=0} component
  MembershipAnswer a = monoid_member({0}, Rational(-1), pair, 16);
  REQUIRE(a.status == Tri::Yes);
  CHECK(a.witness->a == std::vector<long long>{0, 0});
  CHECK(a.witness->c == Rational(-1));
  CHECK(verify_monoid_witness({0}, Rational(-1), pair, *a.witness));

  // X - 1 <= 0 on [0,1]
  a = monoid_member({1}, Rational(-1), pair, 16);
  REQUIRE(a.status == Tri::Yes);
  CHECK(verify_monoid_witness({1}, Rational(-1), pair, *a.witness));

  // X + 1 is positive somewhere (everywhere) on [0,1]
  a = monoid_member({1}, Rational(1), pair, 16);
  REQUIRE(a.status == Tri::No);
  REQUIRE(a.farkas.has_value());
  CHECK(verify_membership_refutation({1}, Rational(1), pair, *a.farkas));

  // X itself is positive at p = 1
  a = monoid_member({1}, Rational(0), pair, 16);
  REQUIRE(a.status == Tri::No);
  CHECK(verify_membership_refutation({1}, Rational(0), pair, *a.farkas));

  // -X <= 0 on [0,1]
  a = monoid_member({-1}, Rational(0), pair, 16);
  REQUIRE(a.status == Tri::Yes);
  CHECK(verify_monoid_witness({-1}, Rational(0), pair, *a.witness));

  CHECK_THROWS_AS(monoid_member({1}, Rational(0), pair, 0), std::invalid_argument);
  CHECK_THROWS_AS(monoid_member({1, 0}, Rational(0), pair, 16), std::invalid_argument);
}

TEST_CASE("a too-small bound yields an honest Undetermined") {
  MonoidPair pair = unit_interval_pair();
  // 5X - 5 <= 0 on [0,1] needs a = (5,0); with bound 2 the search must give up
  MembershipAnswer a = monoid_member({5}, Rational(-5), pair, 2);
  CHECK(a.status == Tri::Undetermined);
  a = monoid_member({5}, Rational(-5), pair, 16);
  REQUIRE(a.status == Tri::Yes);
  CHECK(verify_monoid_witness({5}, Rational(-5), pair, *a.witness));
}

TEST_CASE("syntactic order on the unit interval") {
  MonoidPair pair = unit_interval_pair();

  CHECK(syntactic_leq(kX, kZeroOr2X, pair, 16) == Tri::Yes);
  CHECK(syntactic_leq(kZeroOr2X, kZeroOr2X, pair, 16) == Tri::Yes);
  CHECK(syntactic_leq(poly1({{2, Rational(0)}}), kX, pair, 16) == Tri::No);

  // bottom is the least element; nothing else sits below it
  CHECK(syntactic_leq(TropPoly(1), kX, pair, 16) == Tri::Yes);
  CHECK(syntactic_leq(kX, TropPoly(1), pair, 16) == Tri::No);
  CHECK(syntactic_leq(TropPoly(1), TropPoly(1), pair, 16) == Tri::Yes);

  SyntacticComparison d = syntactic_leq_detail(kX, kZeroOr2X, pair, 16);
  REQUIRE(d.verdict == Tri::Yes);
  REQUIRE(d.terms.size() == 1);
  REQUIRE(d.terms[0].matched.has_value());
  const auto& m = *d.terms[0].matched;
  const auto& w = *d.terms[0].answer.witness;
  CHECK(verify_monoid_witness(sub(d.terms[0].lhs.slope, m.slope),
                              d.terms[0].lhs.coeff - m.coeff, pair, w));
}

TEST_CASE("syntactic equality fixtures") {
  MonoidPair pair = unit_interval_pair();
  CHECK(syntactic_eq(plus(kZeroOr2X, kZeroOrX), scale(3, kZeroOrX), pair, 16) == Tri::Yes);
  CHECK(syntactic_eq(poly1({{0, Rational(0)}, {1, Rational(0)}, {2, Rational(0)}}), kZeroOr2X,
                     pair, 16) == Tri::Yes);
  CHECK(syntactic_eq(kZeroOrX, kZeroOr2X, pair, 16) == Tri::No);
}

TEST_CASE("syntactic Yes is pointwise sound on samples") {
  MonoidPair pair = unit_interval_pair();
  std::vector<std::pair<TropPoly, TropPoly>> yes_cases = {
      {kX, kZeroOr2X},
      {kZeroOrX, scale(2, kZeroOrX)},
      {poly1({{1, Rational(-1)}}), poly1({{0, Rational(0)}})},
  };
  std::vector<QVector> samples = {{Rational(0)}, {Rational(1, 4)}, {Rational(1, 2)}, {Rational(1)}};
  for (const auto& [f, g] : yes_cases) {
    REQUIRE(syntactic_leq(f, g, pair, 16) == Tri::Yes);
    for (const auto& p : samples) CHECK(*eval(f, p) <= *eval(g, p));
  }
}
