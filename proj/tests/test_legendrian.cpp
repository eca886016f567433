#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "tight/kirby.hpp"
#include "tight/legendrian.hpp"
#include "tight/seifert.hpp"

using namespace tight;

namespace {

SurgeryDiagram singleton(long framing) {
  return SurgeryDiagram({Rational(framing)}, IntMatrix{{Int(0)}}, "test");
}

std::vector<std::vector<Int>> collect_rots(const SurgeryDiagram& d) {
  RealizationEnumerator en(d);
  std::vector<std::vector<Int>> out;
  while (auto r = en.next()) out.push_back(r->rot);
  return out;
}

// Oracle: an unknot at tb = c + 1 comes from the tb = -1 unknot by
// l + r = -c - 2 stabilizations, with rotation r - l.
std::set<Int> stabilization_rots(long c) {
  std::set<Int> out;
  long s = -c - 2;
  for (long l = 0; l <= s; ++l) out.insert(Int(s - 2 * l));
  return out;
}

}  // namespace

TEST_CASE("single component realizations") {
  auto rots = collect_rots(singleton(-2));
  REQUIRE(rots.size() == 1);
  CHECK(rots[0] == std::vector<Int>{0});

  RealizationEnumerator en(singleton(-2));
  CHECK(en.next()->tb == std::vector<Int>{-1});

  auto r4 = collect_rots(singleton(-4));
  REQUIRE(r4.size() == 3);
  CHECK(r4[0] == std::vector<Int>{-2});
  CHECK(r4[1] == std::vector<Int>{0});
  CHECK(r4[2] == std::vector<Int>{2});
}

TEST_CASE("rotation sets match the stabilization oracle") {
  for (long c = -2; c >= -9; --c) {
    auto rots = collect_rots(singleton(c));
    std::set<Int> got;
    for (const auto& r : rots) got.insert(r[0]);
    CHECK(got == stabilization_rots(c));
    CHECK(Int(rots.size()) == count_realizations(singleton(c)));
  }
}

TEST_CASE("enumeration is lexicographic with the last component fastest") {
  SurgeryDiagram d({Rational(-3), Rational(-4)},
                   IntMatrix{{Int(0), Int(1)}, {Int(1), Int(0)}}, "test");
  auto rots = collect_rots(d);
  REQUIRE(rots.size() == 6);
  std::vector<std::vector<Int>> expected{{-1, -2}, {-1, 0}, {-1, 2},
                                         {1, -2},  {1, 0},  {1, 2}};
  CHECK(rots == expected);
  CHECK(std::is_sorted(rots.begin(), rots.end()));
}

TEST_CASE("non-realizable framings are rejected") {
  CHECK_THROWS_AS(RealizationEnumerator(singleton(-1)), ParseError);
  CHECK_THROWS_AS(RealizationEnumerator(singleton(0)), ParseError);
  CHECK_THROWS_AS(RealizationEnumerator(singleton(3)), ParseError);
  SurgeryDiagram frac({Rational(-5, 2)}, IntMatrix{{Int(0)}}, "test");
  CHECK_THROWS_AS(count_realizations(frac), ParseError);
}

TEST_CASE("count matches the enumeration on pipeline outputs") {
  for (const char* space :
       {"M(-1/2,-1/2,-1/2)", "M(-2/3,-1/2,-1/2)", "M(1/2,1/2,3/2)", "M(1/2,1/2,5/2)"}) {
    TheoremForm form = normalize(parse_seifert(space));
    PipelineTrace t = form.variant == Variant::ClassNeg ? pipeline_thm1(form)
                                                        : pipeline_thm2(form);
    auto rots = collect_rots(t.final_stage());
    CHECK(Int(rots.size()) == count_realizations(t.final_stage()));
    CHECK(Int(rots.size()) == count_tight(form).total);
  }
}

TEST_CASE("bennequin bound on every realization") {
  TheoremForm form = normalize(parse_seifert("M(-3/4,-2/3,-1/2)"));
  PipelineTrace t = pipeline_thm1(form);
  RealizationEnumerator en(t.final_stage());
  while (auto r = en.next())
    for (size_t i = 0; i < r->tb.size(); ++i) {
      Int a = r->rot[i] < 0 ? Int(-r->rot[i]) : r->rot[i];
      CHECK(r->tb[i] + a <= -1);
      CHECK((r->rot[i] - r->tb[i] - 1) % 2 == 0);
    }
}

TEST_CASE("rotation sets are conjugation symmetric") {
  TheoremForm form = normalize(parse_seifert("M(1/2,1/2,5/2)"));
  PipelineTrace t = pipeline_thm2(form);
  auto rots = collect_rots(t.final_stage());
  std::set<std::vector<Int>> all(rots.begin(), rots.end());
  for (auto r : rots) {
    for (auto& x : r) x = -x;
    CHECK(all.count(r) == 1);
  }
}

TEST_CASE("spin-c classes of single unknots") {
  CHECK(spinc_partition(singleton(-2)).size() == 1);

  auto p3 = spinc_partition(singleton(-3));
  CHECK(p3.size() == 2);
  for (const auto& [cls, mult] : p3) CHECK(mult == 1);

  // -5 has four realizations in four distinct classes mod 5.
  CHECK(spinc_partition(singleton(-5)).size() == 4);
}

TEST_CASE("spin-c partition of the smallest star") {
  TheoremForm form = normalize(parse_seifert("M(-1/2,-1/2,-1/2)"));
  auto part = spinc_partition(pipeline_thm1(form).final_stage());
  CHECK(part.size() == 2);
  Int total = 0;
  for (const auto& [cls, mult] : part) total += mult;
  CHECK(total == 2);
}

TEST_CASE("spin-c residues separate exactly the image of the linking matrix") {
  SurgeryDiagram star = pipeline_thm1(normalize(parse_seifert("M(-2/3,-1/2,-1/2)"))).final_stage();
  IntMatrix L = star.integer_matrix();
  SmithForm snf = smith_normal_form(L);
  size_t n = L.size();
  std::vector<std::vector<Int>> rots = collect_rots(star);
  for (size_t a = 0; a < rots.size(); ++a)
    for (size_t b = 0; b < rots.size(); ++b) {
      bool same = spinc_class(rots[a], snf) == spinc_class(rots[b], snf);
      // Membership of rots[a] - rots[b] in im(L), via the diagonalization:
      // x in im(L) iff d_i divides (U x)_i for every i.
      bool in_image = true;
      for (size_t i = 0; i < n; ++i) {
        Int y = 0;
        for (size_t j = 0; j < n; ++j) y += snf.U[i][j] * (rots[a][j] - rots[b][j]);
        if (snf.diagonal[i] == 0 ? y != 0 : y % snf.diagonal[i] != 0) in_image = false;
      }
      CHECK(same == in_image);
    }
}
