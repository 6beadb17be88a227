#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mulrec/classify.hpp"
#include "mulrec/multfun.hpp"

using namespace mulrec;

namespace {

bool turns_equal(const Turn& a, const Turn& b, double tol = 1e-9) {
  if (a.exact && b.exact) return a.q == b.q;
  double x = a.exact ? a.q.to_double() : a.x;
  double y = b.exact ? b.q.to_double() : b.x;
  double d = std::fabs(x - y);
  d = d - std::floor(d);
  return std::min(d, 1.0 - d) < tol;
}

}  // namespace

TEST_CASE("evaluation worked cases") {
  CmfEvaluator root(RootCharSpec{2, 1});
  Turn t12 = root.eval(Int(12));
  CHECK(t12.exact);
  CHECK(t12.q == Rat(0));  // v_2(12) = 2 half-turns

  CmfEvaluator dir(ModDirichletSpec{2, 1, 1});
  Turn t7 = dir.eval(Int(7));
  CHECK(t7.exact);
  CHECK(t7.q == Rat(1, 2));  // 7 = 3 mod 4, and the character sends 3 to -1

  CmfEvaluator custom(CMFSpec{CustomSpec{{{3, Rat(1, 3)}}, Rat(0)}});
  CHECK(custom.eval(Int(1)).q == Rat(0));  // empty product
  CHECK(dir.eval(Int(1)).q == Rat(0));
  CHECK(custom.eval(Int(9)).q == Rat(2, 3));
}

TEST_CASE("witness selection per case") {
  {
    Classification c = classify(MoebiusParams(4, 1, 4, 3));
    const auto& m = std::get<ModDirichletSpec>(c.nr->witness);
    CHECK(m.p == 2);
    CHECK(m.k == 1);
    CHECK(m.index == 1);
    CmfEvaluator ev(c.nr->witness);
    // gap |chi(1)/chi(3) - 1| = 2 at every n
    CHECK(turn_dist(ev.eval(Int(1)), ev.eval(Int(3))).dq == Rat(1, 2));
  }
  {
    Classification c = classify(MoebiusParams(4, 2, 4, 1));
    const auto& r = std::get<RootCharSpec>(c.nr->witness);
    CHECK(r.p == 2);
    CHECK(r.k == 1);
  }
  {
    Classification c = classify(MoebiusParams(2, 1, 1, 0));
    const auto& a = std::get<ArchCharSpec>(c.nr->witness);
    CHECK(a.pi_over_log);
    CHECK(a.ratio == Rat(2));
  }
  {
    // odd prime route with a nontrivial common power of p
    Classification c = classify(MoebiusParams(27, 3, 27, 12));
    REQUIRE(c.nr.has_value());
    CHECK(c.nr->case_info.kind == WitnessCase::PAdicEqual);
    const auto& m = std::get<ModDirichletSpec>(c.nr->witness);
    CHECK(m.p == 3);
    CmfEvaluator ev(c.nr->witness);
    // after stripping the common 3: b' = 1, d' = 4; the character separates them
    CHECK_FALSE(turns_equal(ev.eval(Int(1)), ev.eval(Int(4))));
  }
}

TEST_CASE("gap scans hit the exact constants") {
  {
    Classification c = classify(MoebiusParams(4, 1, 4, 3));
    DioReport rep = dio_scan(c.nr->witness, MoebiusParams(4, 1, 4, 3), 10000);
    CHECK(rep.exact);
    CHECK(rep.min_dist.dq == Rat(1, 2));  // gap exactly 2 everywhere
    CHECK(rep.argmin == 1);
    CHECK(rep.valid_count == 10000);
  }
  {
    Classification c = classify(MoebiusParams(4, 2, 4, 1));
    DioReport rep = dio_scan(c.nr->witness, MoebiusParams(4, 2, 4, 1), 10000);
    CHECK(rep.min_dist.dq == Rat(1, 2));
    CHECK(rep.min_dist.gap() == doctest::Approx(2.0));
  }
  {
    // recurrent family: the gap of any Archimedean character dies off
    DioReport rep = dio_scan(ArchCharSpec::plain(1.0), MoebiusParams(2, 2, 2, 1), 100000);
    CHECK_FALSE(rep.exact);
    CHECK(rep.min_dist.gap() < 1e-4);
  }
}

TEST_CASE("root character gap is constant over the whole scan") {
  CmfEvaluator ev(CMFSpec{RootCharSpec{2, 1}});
  for (long n = 1; n <= 1000; ++n) {
    TurnDist d = turn_dist(ev.eval(Int(4 * n + 2)), ev.eval(Int(4 * n + 1)));
    CHECK(d.dq == Rat(1, 2));
  }
}

TEST_CASE("modified character gap equals the offset separation at every n") {
  // For each case-(ii) family the witness gap is |chi(b')/chi(d') - 1| at
  // every single n, where b', d' are the offsets with the shared p-power
  // stripped. Checked against the scan and point-by-point.
  const std::tuple<long, long, long, long> families[] = {
      {4, 1, 4, 3}, {8, 1, 8, 5}, {8, 2, 8, 6}, {9, 1, 9, 4}, {25, 1, 25, 6}, {27, 3, 27, 12},
  };
  for (const auto& [a, b, c, d] : families) {
    MoebiusParams p(a, b, c, d);
    Classification cls = classify(p);
    REQUIRE(cls.verdict == Verdict::NonRecurrent);
    REQUIRE(cls.nr->case_info.kind == WitnessCase::PAdicEqual);
    CmfEvaluator ev(cls.nr->witness);
    const auto& spec = std::get<ModDirichletSpec>(cls.nr->witness);
    long long s = vp(Int(spec.p), Int(b)).value();
    Int pe = int_pow(Int(spec.p), static_cast<unsigned long>(s));
    Rat expected = turn_dist(ev.eval(Int(b) / pe), ev.eval(Int(d) / pe)).dq;
    CHECK_FALSE(expected == Rat(0));
    for (long n = 1; n <= 300; ++n) {
      TurnDist g = turn_dist(ev.eval(Int(a * n + b)), ev.eval(Int(c * n + d)));
      CHECK(g.dq == expected);
    }
    DioReport rep = dio_scan(cls.nr->witness, p, 3000);
    CHECK(rep.min_dist.dq == expected);
    CHECK(rep.tail_min_dist.dq == expected);
  }
}

TEST_CASE("archimedean character on a constant-ratio family") {
  // (2, 0, 1, 0): every value is 2, so the gap is |2^{it} - 1| for all n.
  CmfEvaluator ev(CMFSpec{ArchCharSpec::plain(1.0)});
  double expected = 2.0 * std::fabs(std::sin(0.5 * std::log(2.0)));
  for (long n = 1; n <= 300; ++n) {
    TurnDist d = turn_dist(ev.eval(Int(2 * n)), ev.eval(Int(n)));
    CHECK(d.gap() == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("complete multiplicativity across all variants") {
  std::vector<CMFSpec> specs = {
      ArchCharSpec::plain(0.7),
      ArchCharSpec::pi_log(Rat(3, 2)),
      ModDirichletSpec{3, 1, 2},
      ModDirichletSpec{2, 2, 3},
      RootCharSpec{5, 2},
      CustomSpec{{{2, Rat(1, 4)}, {5, Rat(2, 7)}}, Rat(1, 3)},
  };
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> dist(1, 1000);
  for (const auto& spec : specs) {
    CmfEvaluator ev(spec);
    for (int trial = 0; trial < 1000; ++trial) {
      long m = dist(rng), n = dist(rng);
      Turn lhs = ev.eval(Int(m) * Int(n));
      Turn rhs = turn_add(ev.eval(Int(m)), ev.eval(Int(n)));
      CHECK(turns_equal(lhs, rhs, 2e-9));
    }
  }
}

TEST_CASE("modified character is periodic away from p") {
  ModDirichletSpec spec{3, 1, 1};  // modulus 9
  CmfEvaluator ev(CMFSpec{spec});
  for (long n = 1; n <= 2000; ++n) {
    if (n % 3 == 0) continue;
    CHECK(ev.eval(Int(n)).q == ev.eval(Int(n + 9)).q);
  }
}

TEST_CASE("density scans") {
  {
    AsetReport rep = aset_scan({CustomSpec{{}, Rat(0)}}, 0.1, MoebiusParams(2, 2, 2, 1), 10000);
    CHECK(rep.count == 10000);  // the constant function keeps every n
    CHECK(rep.density == doctest::Approx(1.0));
  }
  {
    AsetReport rep = aset_scan({ArchCharSpec::plain(1.0)}, 0.1, MoebiusParams(2, 2, 2, 1), 100000);
    CHECK(rep.density >= 0.9);
    for (auto c : rep.block_counts) CHECK(c > 0);
    CHECK(rep.symbolic_lower_bound.find("H_") != std::string::npos);
    CHECK(rep.symbolic_lower_bound.find("!") != std::string::npos);
  }
  {
    Classification c = classify(MoebiusParams(4, 1, 4, 3));
    AsetReport rep = aset_scan({c.nr->witness}, 0.1, MoebiusParams(4, 1, 4, 3), 10000);
    CHECK(rep.count == 0);  // the gap is exactly 2 at every n
    CHECK(rep.symbolic_lower_bound.empty());  // no bound claim for non-recurrent input
  }
}

TEST_CASE("scan argument overflow is refused") {
  CHECK_THROWS_AS(dio_scan(RootCharSpec{2, 1},
                           MoebiusParams(Int("9000000000000000000"), 1,
                                         Int("9000000000000000000"), 3),
                           10),
                  resource_limit_error);
}

TEST_CASE("cell counts from the gap threshold") {
  CHECK(pigeonhole_cells(2.1) == 1);
  CHECK(pigeonhole_cells(0.5) == 13);   // 2 sin(pi/13) = 0.4786...
  CHECK(pigeonhole_cells(0.1) == 63);
  CHECK(2.0 * std::sin(M_PI / 13) < 0.5);
  CHECK(2.0 * std::sin(M_PI / 12) >= 0.5);
  CHECK_THROWS_AS(pigeonhole_cells(0.0), std::invalid_argument);
}

TEST_CASE("pigeonhole pairs in windows") {
  MoebiusParams rec(2, 2, 2, 1);
  {
    // single color: the first edge of the window qualifies
    PigeonholeReport rep =
        pigeonhole_pairs({CustomSpec{{}, Rat(0)}}, 0.1, rec, {{1, 30}});
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].found);
    CHECK(rep.entries[0].x == 4);
    CHECK(rep.entries[0].y == 3);
    CHECK(rep.entries[0].witness == 1);
  }
  {
    // eps > 2: one cell suffices and a 2-clique forces the pair
    PigeonholeReport rep =
        pigeonhole_pairs({CustomSpec{{}, Rat(0)}}, 2.1, rec, {{1, 4}, {101, 104}, {9997, 10000}});
    CHECK(rep.cell_count == 1);
    for (const auto& e : rep.entries) {
      CHECK(e.found);
      CHECK(e.full_pigeonhole);
      CHECK(e.needed == 2);
      auto v = value_at(rec, e.witness);
      REQUIRE(v.has_value());
      CHECK(*v == Rat(Int(e.x), Int(e.y)));
    }
  }
  {
    // the required 14-clique is unavailable in [1, 100]; the direct scan still
    // finds a same-colored adjacent pair because this witness occupies 2 cells
    PigeonholeReport rep = pigeonhole_pairs({RootCharSpec{3, 1}}, 0.5, rec, {{1, 100}});
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.cell_count == 13);
    CHECK(rep.entries[0].found);
    CHECK_FALSE(rep.entries[0].full_pigeonhole);
    CHECK_FALSE(rep.entries[0].note.empty());
  }
  CHECK_THROWS_AS(pigeonhole_pairs({CustomSpec{{}, Rat(0)}}, 0.1, MoebiusParams(4, 1, 4, 3), {{1, 30}}),
                  std::invalid_argument);
}
