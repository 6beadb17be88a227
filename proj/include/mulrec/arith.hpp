#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mulrec/config.hpp"

namespace mulrec {

using Int = mpz_class;

// A configured cap was exceeded (factorial size, window size, sieve bound, ...).
struct resource_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal consistency or certificate check failed.
struct verification_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Value of a p-adic valuation: an integer, or +infinity (exactly for 0).
class ExtVal {
 public:
  static ExtVal infinite() { return ExtVal(true, 0); }
  static ExtVal of(long long v) { return ExtVal(false, v); }

  bool is_infinite() const { return infinite_; }
  long long value() const {
    if (infinite_) throw std::logic_error("ExtVal: value() of infinity");
    return v_;
  }

  friend bool operator==(const ExtVal& a, const ExtVal& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.v_ == b.v_);
  }
  friend bool operator!=(const ExtVal& a, const ExtVal& b) { return !(a == b); }
  friend bool operator<(const ExtVal& a, const ExtVal& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator<=(const ExtVal& a, const ExtVal& b) { return a < b || a == b; }
  friend bool operator>(const ExtVal& a, const ExtVal& b) { return b < a; }
  friend bool operator>=(const ExtVal& a, const ExtVal& b) { return b <= a; }

  std::string str() const { return infinite_ ? "inf" : std::to_string(v_); }

 private:
  ExtVal(bool inf, long long v) : infinite_(inf), v_(v) {}
  bool infinite_;
  long long v_;
};

// Reduced rational: gcd(|num|, den) = 1, den >= 1. Equality is structural.
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(const Int& n) : q_(n) {}        // NOLINT: implicit by design
  Rat(long n) : q_(n) {}              // NOLINT
  Rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  Rat(long num, long den) : Rat(Int(num), Int(den)) {}

  Int num() const { return q_.get_num(); }
  Int den() const { return q_.get_den(); }

  int sgn() const { return mpq_sgn(q_.get_mpq_t()); }
  bool is_one() const { return q_ == 1; }
  bool is_zero() const { return sgn() == 0; }

  Rat inverse() const {
    if (is_zero()) throw std::invalid_argument("Rat: inverse of zero");
    return Rat(den(), num());
  }

  Int floor() const {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return q;
  }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ + b.q_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ - b.q_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ * b.q_)); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::invalid_argument("Rat: division by zero");
    return Rat(mpq_class(a.q_ / b.q_));
  }
  Rat operator-() const { return Rat(mpq_class(-q_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) < 0; }
  friend bool operator<=(const Rat& a, const Rat& b) { return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) <= 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

  double to_double() const { return q_.get_d(); }
  std::string str() const { return num().get_str() + "/" + den().get_str(); }

 private:
  explicit Rat(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

// Floor and ceiling division for exact integers, b != 0.
Int fdiv(const Int& a, const Int& b);
Int cdiv(const Int& a, const Int& b);

bool is_prime(const Int& p);

// v_p of an integer; infinity exactly for 0. Sign is ignored.
ExtVal vp(const Int& p, const Int& x);
// v_p of a rational: v_p(num) - v_p(den); infinity exactly for 0.
ExtVal vp(const Int& p, const Rat& x);

// lcm(|b|, |d|) with lcm(x, 0) = 0.
Int lcm0(const Int& b, const Int& d);

// a | x with a >= 1 (a | 0 holds for every a).
bool divides(const Int& a, const Int& x);

// Exact n!, guarded by a cap.
Int factorial(unsigned long n, unsigned long cap = default_config().factorial_cap);

// base^e for e >= 0.
Int int_pow(const Int& base, unsigned long e);

struct PrimePower {
  std::uint64_t p;
  int e;
};

// Trial-division factorization; primes strictly increasing; n = prod p^e.
std::vector<PrimePower> factorize(std::uint64_t n);
// Big-integer front end; rejects n = 0, caps at the 64-bit range.
std::vector<PrimePower> factorize(const Int& n);

// Smallest-prime-factor sieve for bulk factorization of a scan range.
class FactorSieve {
 public:
  explicit FactorSieve(std::uint64_t bound,
                       std::int64_t cap = default_config().sieve_cap);
  std::uint64_t bound() const { return bound_; }
  std::vector<PrimePower> factor(std::uint64_t n) const;
  std::uint32_t spf(std::uint64_t n) const;

 private:
  std::uint64_t bound_;
  std::vector<std::uint32_t> spf_;
};

}  // namespace mulrec
