#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mulrec/cliques.hpp"
#include "mulrec/graph.hpp"

using namespace mulrec;

TEST_CASE("normalization strips factors and orders the offsets") {
  NormalizeResult r1 = normalize(6, 3, 2);
  CHECK(r1.a == 6);
  CHECK(r1.b == 3);
  CHECK(r1.d == 2);
  CHECK(r1.g == 1);
  CHECK_FALSE(r1.swapped);

  NormalizeResult r2 = normalize(4, 8, 2);
  CHECK(r2.a == 2);
  CHECK(r2.b == 4);
  CHECK(r2.d == 1);
  CHECK(r2.g == 2);

  NormalizeResult r3 = normalize(1, 2, 0);
  CHECK(r3.a == 1);
  CHECK(r3.b == 2);
  CHECK(r3.d == 0);

  NormalizeResult r4 = normalize(6, 0, 5);  // swap puts the larger offset first
  CHECK(r4.swapped);
  CHECK(r4.b == 5);
  CHECK(r4.d == 0);

  CHECK_THROWS_AS(normalize(3, 1, 1), std::invalid_argument);  // 3 does not divide lcm(1,1)
  CHECK_THROWS_AS(normalize(2, 5, 5), std::invalid_argument);  // b = d
}

TEST_CASE("reduction recipe worked case (1, 2, 0)") {
  ReductionCert r = reduce(1, 2, 0);
  CHECK(r.j == -1);
  CHECK(r.kBez == 1);
  CHECK(r.T == 0);
  CHECK(r.B == 2);
  CHECK(r.A == 2);
  CHECK(r.J == 2);
  CHECK(r.C == 4);
  CHECK(r.D == 2);
  // m = 1: n = 6, (6+2)/6 = 4/3 = (2+2)/(2+1)
  auto lhs = value_at(MoebiusParams(1, 2, 1, 0), 6);
  REQUIRE(lhs.has_value());
  CHECK(*lhs == Rat(4, 3));
}

TEST_CASE("reduction recipe goldens for the other worked inputs") {
  ReductionCert r1 = reduce(2, 2, 1);
  CHECK(r1.j == 0);
  CHECK(r1.kBez == 1);
  CHECK(r1.T == 0);
  CHECK(r1.B == 2);
  CHECK(r1.A == 2);
  CHECK(r1.J == 1);
  CHECK(r1.C == 1);
  CHECK(r1.D == 0);

  ReductionCert r2 = reduce(6, 3, 2);
  CHECK(r2.B == 3);
  CHECK(r2.A == 6);
  CHECK(r2.J == 1);
  CHECK(r2.C == 1);
  CHECK(r2.D == 0);

  // negative leading offset exercises the upward Bezout shift
  ReductionCert r3 = reduce(1, -1, -3);
  CHECK(r3.b * r3.j <= 0);
  CHECK(r3.a * r3.j + (r3.b - r3.d) * r3.kBez == 1);
  CHECK(r3.B >= 2);

  CHECK_THROWS_AS(reduce(2, 1, 2), std::invalid_argument);   // b <= d
  CHECK_THROWS_AS(reduce(4, 3, 1), std::invalid_argument);   // gcd(a, b-d) != 1
}

TEST_CASE("identity check runs over the full range") {
  const std::tuple<long, long, long> cases[] = {
      {1, 2, 0}, {2, 2, 1}, {6, 3, 2}, {6, 5, 0}, {10, 5, 2},
      {2, 4, 1}, {1, -1, -3}, {7, -2, -7},
  };
  for (const auto& [a, b, d] : cases) {
    ReductionCert r = reduce(a, b, d);
    verify_reduction_cert(r, 100);
    MoebiusParams orig(a, b, a, d);
    MoebiusParams red(r.A, r.B, r.A, r.B - 1);
    for (int m = 1; m <= 100; ++m) {
      auto lhs = value_at(orig, r.C * m + r.D);
      auto rhs = value_at(red, m);
      REQUIRE(lhs.has_value());
      REQUIRE(rhs.has_value());
      CHECK(*lhs == *rhs);
    }
  }
}

TEST_CASE("base pair construction") {
  CliqueCert c = construct_clique(2, 2, 0);
  REQUIRE(c.vertices.size() == 2);
  CHECK(c.vertices[0] == 3);
  CHECK(c.vertices[1] == 4);
  CHECK(c.pairs.size() == 1);
  CHECK(c.pairs[0].witness == 1);
}

TEST_CASE("three-clique construction with the factorial step") {
  CliqueCert c = construct_clique(2, 3, 0);
  REQUIRE(c.vertices.size() == 3);

  // Recompute every intermediate quantity with independent product loops.
  Int m2 = 1;
  for (long h = 1; h <= 4; ++h) m2 *= 2 * h + 1;  // H_2 = a + b = 4
  CHECK(m2 == 945);
  Int r2 = (m2 - 1) / 2;
  CHECK(r2 == 472);
  Int phi = 1;
  for (unsigned long t = 2; t <= 949; ++t) phi *= t;  // (M_2 + H_2)!
  Int n1 = 2 * phi + r2;
  CHECK(c.vertices[0] == 2 * n1 + 1);
  CHECK(c.vertices[1] == 2 * n1 + 2);
  CHECK(c.vertices[2] == 2 * n1 + 4);
  CHECK(c.vertices[0].get_str().size() == 2416);

  // Level records: the inner pair sits at offsets 1, 2 above (b-1) r_2.
  REQUIRE(c.levels.size() == 2);
  CHECK(c.levels[0].k == 2);
  CHECK(c.levels[0].offsets == std::vector<Int>{Int(1), Int(2)});
  CHECK(c.levels[1].factor_product == 945);
  CHECK(c.levels[1].residue == 472);
  CHECK(c.levels[1].factorial_step);
  CHECK(c.levels[1].step == 2 * phi);
  CHECK(c.levels[1].window_len == 2 * 2 * 2 * phi);

  // The inner pair itself: {473, 474} with witness 236.
  CliqueCert inner = construct_clique(2, 2, 472);
  CHECK(inner.vertices[0] == 473);
  CHECK(inner.vertices[1] == 474);
  CHECK(inner.pairs[0].witness == 236);

  verify_clique_cert(c);
}

TEST_CASE("construction lands past an enormous base") {
  Int base = int_pow(10, 10000);
  CliqueCert c = construct_clique(2, 3, base);
  REQUIRE(c.vertices.size() == 3);
  CHECK(c.vertices.front() > base);
  CHECK(c.vertices.back() <= base + c.levels.back().window_len);
  verify_clique_cert(c);
}

TEST_CASE("every window of length a+b contains a pair") {
  for (long base = 0; base <= 2000; ++base) {
    CliqueCert c = construct_clique(2, 2, base);
    CHECK(c.vertices.front() > base);
    CHECK(c.vertices.back() <= base + 4);
  }
  for (long base = 0; base <= 500; ++base) {
    CliqueCert c = construct_clique(3, 2, base);
    CHECK(c.vertices.front() > base);
    CHECK(c.vertices.back() <= base + 9);
  }
}

TEST_CASE("factor product is 1 mod b at every level") {
  for (long b : {2L, 3L, 4L}) {
    CliqueCert c = construct_clique(b, 3, 0);
    for (const auto& lvl : c.levels) {
      if (lvl.factor_product == 0) continue;
      CHECK((lvl.factor_product - 1) % b == 0);
    }
  }
}

TEST_CASE("level cap and bad inputs are rejected") {
  CHECK_THROWS_AS(construct_clique(2, 4, 0), resource_limit_error);
  CHECK_THROWS_AS(construct_clique(1, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(construct_clique(2, 1, 0), std::invalid_argument);
  try {
    construct_clique(2, 4, 0);
  } catch (const resource_limit_error& e) {
    std::string msg = e.what();
    CHECK(msg.find("H_4") != std::string::npos);  // symbolic size in the message
  }
}

TEST_CASE("composed construction against the original parameters") {
  CliqueCert c2 = big_clique(1, 2, 0, 2);
  CHECK(c2.vertices.size() == 2);
  CHECK(c2.params.a == 1);
  verify_clique_cert(c2);

  CliqueCert c3 = big_clique(6, 3, 2, 3);
  CHECK(c3.vertices.size() == 3);
  CHECK(c3.params.b == 3);
  verify_clique_cert(c3);
  REQUIRE(c3.reduction.has_value());
  verify_reduction_cert(*c3.reduction);
  // every pair is a member of the original family, checked pairwise
  for (const auto& pr : c3.pairs) {
    Rat ratio = pr.j_over_i ? Rat(c3.vertices[pr.j], c3.vertices[pr.i])
                            : Rat(c3.vertices[pr.i], c3.vertices[pr.j]);
    auto val = value_at(c3.params, pr.witness);
    REQUIRE(val.has_value());
    CHECK(*val == ratio);
  }

  // 4 does not divide lcm(1, 3): non-recurrent inputs are rejected
  CHECK_THROWS_AS(big_clique(4, 1, 3, 3), std::invalid_argument);
}

TEST_CASE("certificate tampering is caught") {
  CliqueCert c = big_clique(2, 2, 1, 3);
  verify_clique_cert(c);
  CliqueCert bad = c;
  bad.vertices[1] += 1;
  CHECK_THROWS_AS(verify_clique_cert(bad), verification_error);
  CliqueCert bad2 = c;
  bad2.pairs[0].witness += 1;
  CHECK_THROWS_AS(verify_clique_cert(bad2), verification_error);
}

TEST_CASE("symbolic window lengths stay readable") {
  std::string s = symbolic_window_length(6, 3, 4);
  CHECK(s.find("H_4") != std::string::npos);
  CHECK(s.find("!") != std::string::npos);
  CHECK(s.find("H_2 = a+b = 9") != std::string::npos);
}
