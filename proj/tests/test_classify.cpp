#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mulrec/classify.hpp"
#include "mulrec/graph.hpp"

using namespace mulrec;

TEST_CASE("worked verdicts") {
  {
    Classification c = classify(MoebiusParams(6, 3, 6, 2));
    CHECK(c.verdict == Verdict::Recurrent);
    REQUIRE(c.reduction.has_value());
    CHECK(c.reduction->A == c.reduction->B * (c.reduction->B - 1));
  }
  {
    Classification c = classify(MoebiusParams(4, 1, 4, 3));
    CHECK(c.verdict == Verdict::NonRecurrent);
    REQUIRE(c.nr.has_value());
    CHECK(c.nr->case_info.kind == WitnessCase::PAdicEqual);
    CHECK(c.nr->case_info.p == 2);
    CHECK(c.nr->case_info.k == 1);  // v_2(1-3)
    CHECK(c.nr->chromatic_upper_bound == 2);  // 2^1 * (2-1)
  }
  {
    Classification c = classify(MoebiusParams(4, 2, 4, 1));
    CHECK(c.verdict == Verdict::NonRecurrent);
    REQUIRE(c.nr.has_value());
    CHECK(c.nr->case_info.kind == WitnessCase::PAdicUnequal);
    CHECK(c.nr->case_info.p == 2);
    CHECK(c.nr->case_info.k == 1);  // |v_2(2) - v_2(1)|
    CHECK(c.nr->chromatic_upper_bound == 2);
  }
  CHECK(classify(MoebiusParams(3, 1, 3, 1)).verdict == Verdict::Empty);
  CHECK(classify(MoebiusParams(4, 0, 4, 0)).verdict == Verdict::Empty);
}

TEST_CASE("archimedean case carries the derived bound") {
  Classification c = classify(MoebiusParams(2, 0, 1, 0));
  CHECK(c.verdict == Verdict::NonRecurrent);
  REQUIRE(c.nr.has_value());
  CHECK(c.nr->case_info.kind == WitnessCase::Archimedean);
  CHECK(c.nr->chromatic_upper_bound == 4);
  const auto& arch = std::get<ArchimedeanSpec>(c.nr->coloring);
  CHECK(arch.alpha == Rat(3, 2));
  CHECK(arch.beta == Rat(3));
}

TEST_CASE("zero offsets make the set recurrent when nonempty") {
  // lcm(b, 0) = 0 and every a divides 0.
  CHECK(classify(MoebiusParams(6, 0, 6, 5)).verdict == Verdict::Recurrent);
  CHECK(classify(MoebiusParams(7, 3, 7, 0)).verdict == Verdict::Recurrent);
  CHECK(classify(MoebiusParams(9, 0, 9, -2)).verdict == Verdict::Recurrent);
}

TEST_CASE("smallest qualifying prime decides the case") {
  // 12 = 2^2 * 3; b = 3, d = 9: v_2(12) = 2 > 0 = max(v_2(3), v_2(9)).
  Classification c = classify(MoebiusParams(12, 3, 12, 9));
  CHECK(c.verdict == Verdict::NonRecurrent);
  REQUIRE(c.nr.has_value());
  CHECK(c.nr->case_info.p == 2);
  CHECK(c.nr->case_info.kind == WitnessCase::PAdicEqual);  // v_2(3) = v_2(9) = 0
  CHECK(c.nr->case_info.k == 1);                           // v_2(-6) = 1
}

TEST_CASE("qualifying prime requires strict excess over both valuations") {
  // v_3(45) = 2, v_3(3) = 1, v_3(9) = 2: max = 2, not exceeded; p = 3 fails.
  // v_5(45) = 1 > 0 = max(v_5(3), v_5(9)): p = 5 qualifies, case (ii).
  Classification c = classify(MoebiusParams(45, 3, 45, 9));
  CHECK(c.verdict == Verdict::NonRecurrent);
  REQUIRE(c.nr.has_value());
  CHECK(c.nr->case_info.p == 5);
  CHECK(c.nr->case_info.kind == WitnessCase::PAdicEqual);
  CHECK(c.nr->case_info.k == 0);  // v_5(-6) = 0
  CHECK(c.nr->chromatic_upper_bound == 4);  // 5^0 * (5-1)
}

TEST_CASE("verdict is invariant under common scaling") {
  const MoebiusParams cases[] = {
      {6, 3, 6, 2}, {2, 2, 2, 1}, {4, 1, 4, 3}, {4, 2, 4, 1},
      {1, 5, 1, -7}, {3, 1, 3, 1}, {2, 1, 1, 0}, {12, 3, 12, 9},
  };
  for (const auto& p : cases) {
    Verdict v = classify(p).verdict;
    for (long g : {2L, 3L, 5L}) {
      Classification scaled = classify(MoebiusParams(p.a * g, p.b * g, p.c * g, p.d * g));
      CHECK(scaled.verdict == v);
    }
  }
}

TEST_CASE("attached colorings are proper on a sample window") {
  const MoebiusParams cases[] = {
      {4, 1, 4, 3}, {4, 2, 4, 1}, {12, 3, 12, 9}, {45, 3, 45, 9}, {2, 1, 1, 0},
  };
  for (const auto& p : cases) {
    Classification c = classify(p);
    REQUIRE(c.verdict == Verdict::NonRecurrent);
    WindowGraph g = build_window(p, 1, 20000);
    ColoringCheck check = verify_coloring(g, c.nr->coloring);
    CHECK(check.violations.empty());
    CHECK(check.ambiguous_vertices == 0);
  }
}

TEST_CASE("recurrent verdicts carry verified reductions") {
  const MoebiusParams cases[] = {
      {6, 3, 6, 2}, {2, 2, 2, 1}, {1, 5, 1, -7}, {6, 0, 6, 5}, {4, 8, 4, 2}, {10, 5, 10, 2},
  };
  for (const auto& p : cases) {
    Classification c = classify(p);
    REQUIRE(c.verdict == Verdict::Recurrent);
    REQUIRE(c.reduction.has_value());
    verify_reduction_cert(*c.reduction);  // throws on failure
    CHECK(c.reduction->orig_a == p.a);
  }
}
