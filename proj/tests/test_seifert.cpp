#include <doctest.h>

#include <algorithm>
#include <random>

#include "tight/seifert.hpp"

using namespace tight;

namespace {

std::pair<Int, Int> pq(long p, long q) { return {Int(p), Int(q)}; }

SeifertInvariants random_space(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> den(2, 9), num(-40, 40);
  std::array<Rational, 3> r;
  for (auto& x : r) {
    long d = den(rng);
    long n = num(rng);
    while (n % d == 0) n = num(rng);
    x = Rational(n, d);
  }
  return make_invariants(r[0], r[1], r[2]);
}

}  // namespace

TEST_CASE("parsing surgery coefficients") {
  SeifertInvariants s = parse_seifert("M(-1/2,-1/2,-1/2)");
  CHECK(s.r[0] == Rational(-1, 2));
  CHECK(s.e0 == -3);

  SeifertInvariants t = parse_seifert("  2/3   1/2  3/2 ");
  CHECK(t.r[0] == Rational(2, 3));
  CHECK(t.r[2] == Rational(3, 2));
  CHECK(t.e0 == 1);

  CHECK_THROWS_AS(parse_seifert("M(0,-1/2,-1/2)"), ParseError);
  CHECK_THROWS_AS(parse_seifert("M(3,-1/2,-1/2)"), ParseError);
  CHECK_THROWS_AS(parse_seifert("M(1,1/2,1/3)"), ParseError);
  CHECK_THROWS_AS(parse_seifert("M(-1/2,-1/2)"), ParseError);
  CHECK_THROWS_AS(parse_seifert("M(-1/2,-1/2,-1/2,-1/2)"), ParseError);
  CHECK_THROWS_AS(parse_seifert("1/2 1/2"), ParseError);
  CHECK_THROWS_AS(parse_seifert("1/2 1/2 3/2 9"), ParseError);
  CHECK_THROWS_AS(parse_seifert("M(-1/2,-1/2,-1/2"), ParseError);
}

TEST_CASE("e0 floor sum") {
  CHECK(make_invariants(Rational(-1, 2), Rational(-1, 2), Rational(-7, 3)).e0 == -5);
  CHECK(make_invariants(Rational(1, 2), Rational(1, 2), Rational(5, 2)).e0 == 2);
  CHECK(make_invariants(Rational(3, 2), Rational(1, 2), Rational(-1, 2)).e0 == 0);
}

TEST_CASE("normalize examples") {
  TheoremForm a = normalize(parse_seifert("M(-1/2,-1/2,-1/2)"));
  CHECK(a.variant == Variant::ClassNeg);
  CHECK(a.e0 == -3);
  CHECK(a.pq == std::array{pq(2, 1), pq(2, 1), pq(2, 1)});

  TheoremForm b = normalize(parse_seifert("M(-1/2,-1/2,-7/3)"));
  CHECK(b.variant == Variant::ClassNeg);
  CHECK(b.e0 == -5);
  CHECK(b.pq == std::array{pq(2, 1), pq(2, 1), pq(3, 7)});

  TheoremForm c = normalize(parse_seifert("M(1/2,1/2,3/2)"));
  CHECK(c.variant == Variant::ClassPos);
  CHECK(c.e0 == 1);
  CHECK(c.pq == std::array{pq(2, 1), pq(2, 1), pq(2, 1)});

  TheoremForm d = normalize(parse_seifert("M(2/3,1/2,3/2)"));
  CHECK(d.pq == std::array{pq(3, 2), pq(2, 1), pq(2, 1)});
}

TEST_CASE("normalize rejects the unclassified band") {
  CHECK_THROWS_AS(normalize(parse_seifert("M(3/2,1/2,-1/2)")), OutOfScopeError);   // e0 = 0
  CHECK_THROWS_AS(normalize(parse_seifert("M(1/2,1/2,-1/2)")), OutOfScopeError);   // e0 = -1
  CHECK_THROWS_AS(normalize(parse_seifert("M(1/2,-1/2,-1/2)")), OutOfScopeError);  // e0 = -2
}

TEST_CASE("normalize round-trips through to_invariants") {
  std::mt19937_64 rng(21);
  int used = 0;
  for (int i = 0; i < 600; ++i) {
    SeifertInvariants s = random_space(rng);
    if (s.e0 >= -2 && s.e0 <= 0) continue;
    TheoremForm form = normalize(s);
    SeifertInvariants back = to_invariants(form);
    CHECK(back.e0 == s.e0);
    CHECK(normalize(back).pq == form.pq);
    CHECK(h1_order_from_invariants(back) == h1_order_from_invariants(s));
    ++used;
  }
  CHECK(used > 400);
}

TEST_CASE("count examples") {
  CHECK(count_tight(normalize(parse_seifert("M(-1/2,-1/2,-1/2)"))).total == 2);
  CHECK(count_tight(normalize(parse_seifert("M(-2/3,-1/2,-1/2)"))).total == 4);
  CHECK(count_tight(normalize(parse_seifert("M(-1/2,-1/2,-7/3)"))).total == 4);
  CHECK(count_tight(normalize(parse_seifert("M(1/2,1/2,3/2)"))).total == 8);
  CHECK(count_tight(normalize(parse_seifert("M(1/2,1/2,5/2)"))).total == 8);
  CHECK(count_tight(normalize(parse_seifert("M(2/3,1/2,3/2)"))).total == 8);
}

TEST_CASE("count factor labels multiply to the total") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 300; ++i) {
    SeifertInvariants s = random_space(rng);
    if (s.e0 >= -2 && s.e0 <= 0) continue;
    TightCount c = count_tight(normalize(s));
    Int prod = 1;
    for (const auto& [label, f] : c.factors) prod *= f;
    CHECK(prod == c.total);
    CHECK(c.total > 0);
  }
}

TEST_CASE("count is invariant under permuting the first two fibers") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    SeifertInvariants s = random_space(rng);
    if (s.e0 >= -2 && s.e0 <= 0) continue;
    SeifertInvariants t = make_invariants(s.r[1], s.r[0], s.r[2]);
    CHECK(count_tight(normalize(s)).total == count_tight(normalize(t)).total);
    CHECK(h1_order_from_invariants(s) == h1_order_from_invariants(t));
  }
}

TEST_CASE("count is invariant under integer shifts between fibers") {
  // (r1, r2, r3) and (r1 - k, r2, r3 + k) present the same space.
  std::mt19937_64 rng(24);
  std::uniform_int_distribution<long> shift(-3, 3);
  for (int i = 0; i < 300; ++i) {
    SeifertInvariants s = random_space(rng);
    if (s.e0 >= -2 && s.e0 <= 0) continue;
    long k = shift(rng);
    SeifertInvariants t =
        make_invariants(s.r[0] - Rational(k), s.r[1], s.r[2] + Rational(k));
    CHECK(t.e0 == s.e0);
    CHECK(normalize(t).pq == normalize(s).pq);
    CHECK(count_tight(normalize(t)).total == count_tight(normalize(s)).total);
    CHECK(h1_order_from_invariants(t) == h1_order_from_invariants(s));
  }
}

TEST_CASE("h1 order examples") {
  CHECK(h1_order_from_invariants(parse_seifert("M(-1/2,-1/2,-1/2)")) == 12);
  CHECK(h1_order_from_invariants(parse_seifert("M(-2/3,-1/2,-1/2)")) == 20);
  CHECK(h1_order_from_invariants(parse_seifert("M(1/2,1/2,3/2)")) == 20);
  CHECK(h1_order_from_invariants(parse_seifert("M(1/2,1/2,5/2)")) == 28);
}
