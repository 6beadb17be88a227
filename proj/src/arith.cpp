#include "mulrec/arith.hpp"

namespace mulrec {

Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int cdiv(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

bool is_prime(const Int& p) {
  if (p < 2) return false;
  return mpz_probab_prime_p(p.get_mpz_t(), 32) != 0;
}

ExtVal vp(const Int& p, const Int& x) {
  if (!is_prime(p)) throw std::invalid_argument("vp: modulus must be prime");
  if (x == 0) return ExtVal::infinite();
  Int ax = abs(x);
  Int stripped;
  mp_bitcnt_t count = mpz_remove(stripped.get_mpz_t(), ax.get_mpz_t(), p.get_mpz_t());
  return ExtVal::of(static_cast<long long>(count));
}

ExtVal vp(const Int& p, const Rat& x) {
  if (x.is_zero()) {
    if (!is_prime(p)) throw std::invalid_argument("vp: modulus must be prime");
    return ExtVal::infinite();
  }
  return ExtVal::of(vp(p, x.num()).value() - vp(p, x.den()).value());
}

Int lcm0(const Int& b, const Int& d) {
  Int r;
  mpz_lcm(r.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t());
  return r;  // GMP: non-negative, zero if either argument is zero
}

bool divides(const Int& a, const Int& x) {
  if (a < 1) throw std::invalid_argument("divides: a must be >= 1");
  return mpz_divisible_p(x.get_mpz_t(), a.get_mpz_t()) != 0;
}

Int factorial(unsigned long n, unsigned long cap) {
  if (n > cap) {
    throw resource_limit_error("factorial: " + std::to_string(n) +
                               " exceeds cap " + std::to_string(cap));
  }
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
  std::vector<PrimePower> out;
  auto strip = [&](std::uint64_t p) {
    if (n % p != 0) return;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  };
  strip(2);
  strip(3);
  for (std::uint64_t i = 5; i <= n / i;) {
    strip(i);
    i += 2;
    if (i > n / i) break;
    strip(i);
    i += 4;
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<PrimePower> factorize(const Int& n) {
  if (n <= 0) throw std::invalid_argument("factorize: n must be >= 1");
  if (!n.fits_ulong_p()) {
    throw resource_limit_error("factorize: operand exceeds the 64-bit trial-division range");
  }
  return factorize(static_cast<std::uint64_t>(n.get_ui()));
}

FactorSieve::FactorSieve(std::uint64_t bound, std::int64_t cap) : bound_(bound) {
  if (bound_ < 1) throw std::invalid_argument("FactorSieve: bound must be >= 1");
  if (static_cast<std::int64_t>(bound_) > cap) {
    throw resource_limit_error("FactorSieve: bound " + std::to_string(bound_) +
                               " exceeds cap " + std::to_string(cap));
  }
  spf_.assign(bound_ + 1, 0);
  for (std::uint64_t i = 2; i <= bound_; ++i) {
    if (spf_[i] != 0) continue;
    for (std::uint64_t j = i; j <= bound_; j += i) {
      if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
    }
  }
}

std::uint32_t FactorSieve::spf(std::uint64_t n) const {
  if (n < 2 || n > bound_) throw std::invalid_argument("FactorSieve::spf: out of range");
  return spf_[n];
}

std::vector<PrimePower> FactorSieve::factor(std::uint64_t n) const {
  if (n == 0) throw std::invalid_argument("FactorSieve::factor: n must be >= 1");
  if (n > bound_) {
    throw resource_limit_error("FactorSieve::factor: " + std::to_string(n) +
                               " exceeds sieve bound " + std::to_string(bound_));
  }
  std::vector<PrimePower> out;
  while (n > 1) {
    std::uint64_t p = spf_[n];
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  return out;
}

}  // namespace mulrec
