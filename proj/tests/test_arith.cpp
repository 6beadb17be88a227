#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mulrec/arith.hpp"

using namespace mulrec;

namespace {

// Repeated-division oracle for valuations.
long long vp_oracle(long long p, long long n) {
  long long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// Naive trial-division oracle, independent of the library loop structure.
std::vector<std::pair<std::uint64_t, int>> factor_oracle(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  return out;
}

}  // namespace

TEST_CASE("vp on integers and rationals") {
  CHECK(vp(Int(2), Rat(12, 1)) == ExtVal::of(2));
  CHECK(vp(Int(3), Rat(0, 1)).is_infinite());
  CHECK(vp(Int(2), Rat(944, 1)) == ExtVal::of(vp_oracle(2, 944)));
  CHECK(vp_oracle(2, 944) == 4);  // 944 = 16 * 59
  CHECK(vp(Int(2), Rat(9, 8)) == ExtVal::of(-3));
  CHECK(vp(Int(3), Int(-18)) == ExtVal::of(2));  // sign carried separately
  CHECK_THROWS_AS(vp(Int(4), Int(12)), std::invalid_argument);
  CHECK_THROWS_AS(vp(Int(1), Int(12)), std::invalid_argument);
}

TEST_CASE("vp additivity on random rationals") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(1, 50000);
  const Int primes[] = {2, 3, 5, 7};
  for (int trial = 0; trial < 400; ++trial) {
    Rat x(dist(rng), dist(rng));
    Rat y(dist(rng), dist(rng));
    for (const Int& p : primes) {
      ExtVal lhs = vp(p, x * y);
      CHECK(lhs == ExtVal::of(vp(p, x).value() + vp(p, y).value()));
    }
  }
}

TEST_CASE("ExtVal ordering treats infinity as largest") {
  CHECK(ExtVal::of(100) < ExtVal::infinite());
  CHECK(ExtVal::infinite() > ExtVal::of(-5));
  CHECK(ExtVal::infinite() == ExtVal::infinite());
  CHECK(ExtVal::of(3) < ExtVal::of(4));
  CHECK_FALSE(ExtVal::infinite() < ExtVal::infinite());
}

TEST_CASE("lcm0 conventions") {
  CHECK(lcm0(3, 2) == 6);
  CHECK(lcm0(6, 0) == 0);
  CHECK(lcm0(-4, 6) == 12);
  CHECK(lcm0(0, 0) == 0);
  SUBCASE("divisible by both arguments when nonzero") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> dist(-300, 300);
    for (int trial = 0; trial < 300; ++trial) {
      Int b = dist(rng), d = dist(rng);
      if (b == 0 || d == 0) continue;
      Int l = lcm0(b, d);
      CHECK(l % abs(b) == 0);
      CHECK(l % abs(d) == 0);
    }
  }
}

TEST_CASE("divides with the zero convention") {
  CHECK(divides(Int(7), Int(0)));
  CHECK(divides(Int(3), Int(-9)));
  CHECK_FALSE(divides(Int(4), Int(6)));
  CHECK_THROWS_AS(divides(Int(0), Int(3)), std::invalid_argument);
}

TEST_CASE("factorize examples against the oracle") {
  auto f945 = factorize(std::uint64_t{945});
  REQUIRE(f945.size() == 3);
  CHECK(f945[0].p == 3);
  CHECK(f945[0].e == 3);
  CHECK(f945[1].p == 5);
  CHECK(f945[1].e == 1);
  CHECK(f945[2].p == 7);
  CHECK(f945[2].e == 1);

  CHECK(factorize(std::uint64_t{1}).empty());

  auto f474 = factorize(std::uint64_t{474});
  auto oracle = factor_oracle(474);
  REQUIRE(f474.size() == oracle.size());
  for (std::size_t i = 0; i < f474.size(); ++i) {
    CHECK(f474[i].p == oracle[i].first);
    CHECK(f474[i].e == oracle[i].second);
  }

  CHECK_THROWS_AS(factorize(std::uint64_t{0}), std::invalid_argument);
}

TEST_CASE("factorize recomposes and primes ascend") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> dist(1, 2'000'000);
  for (int trial = 0; trial < 500; ++trial) {
    std::uint64_t n = dist(rng);
    auto fac = factorize(n);
    Int prod = 1;
    std::uint64_t last = 1;
    for (const auto& pp : fac) {
      CHECK(pp.p > last);
      last = pp.p;
      CHECK(is_prime(Int(static_cast<unsigned long>(pp.p))));
      prod *= int_pow(Int(static_cast<unsigned long>(pp.p)), static_cast<unsigned long>(pp.e));
    }
    CHECK(prod == Int(static_cast<unsigned long>(n)));
  }
}

TEST_CASE("sieve factorization agrees with trial division") {
  FactorSieve sieve(100000);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint64_t> dist(1, 100000);
  for (int trial = 0; trial < 500; ++trial) {
    std::uint64_t n = dist(rng);
    auto a = sieve.factor(n);
    auto b = factorize(n);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].p == b[i].p);
      CHECK(a[i].e == b[i].e);
    }
  }
  CHECK_THROWS_AS(sieve.factor(100001), resource_limit_error);
  CHECK_THROWS_AS(FactorSieve(std::uint64_t{1} << 40), resource_limit_error);
}

TEST_CASE("factorial values and the size cap") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);

  // Product oracle plus digit count via the log10 sum.
  Int oracle = 1;
  double digits = 0;
  for (unsigned long k = 1; k <= 949; ++k) {
    oracle *= static_cast<unsigned long>(k);
    digits += std::log10(static_cast<double>(k));
  }
  Int f = factorial(949);
  CHECK(f == oracle);
  CHECK(f.get_str().size() == static_cast<std::size_t>(digits) + 1);
  CHECK(f.get_str().size() == 2416);

  CHECK_THROWS_AS(factorial(10001), resource_limit_error);
  CHECK(factorial(10, 10) == 3628800);  // at the cap is allowed
}

TEST_CASE("Rat normalization and structural equality") {
  CHECK(Rat(6, 8) == Rat(3, 4));
  CHECK(Rat(-6, 8) == Rat(-3, 4));
  CHECK(Rat(3, -4) == Rat(-3, 4));
  CHECK(Rat(3, -4).den() == 4);
  CHECK(Rat(0, 5) == Rat(0));
  CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);

  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> dist(1, 10000);
  for (int trial = 0; trial < 300; ++trial) {
    long u = dist(rng), v = dist(rng), g = dist(rng) % 50 + 1;
    Rat plain(u, v);
    Rat scaled(Int(u) * g, Int(v) * g);
    CHECK(plain == scaled);
    CHECK(plain.num() == scaled.num());
    CHECK(plain.den() == scaled.den());
    Int gg;
    mpz_gcd(gg.get_mpz_t(), plain.num().get_mpz_t(), plain.den().get_mpz_t());
    CHECK(gg == 1);
  }
}

TEST_CASE("Rat arithmetic and ordering") {
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(9, 8) - Rat(1) == Rat(1, 8));
  CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
  CHECK(Rat(3, 2).inverse() == Rat(2, 3));
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1, 2) < Rat(1, 3));
  CHECK(Rat(7, 3).floor() == 2);
  CHECK(Rat(-7, 3).floor() == -3);
  CHECK_THROWS_AS(Rat(0).inverse(), std::invalid_argument);
}
