#pragma once

#include <mpfr.h>

#include <utility>

#include "mulrec/arith.hpp"

namespace mulrec {

// Minimal RAII wrapper over mpfr_t with per-value precision.
// All arithmetic rounds to nearest and produces results at the left operand's
// precision unless noted.
class BigFloat {
 public:
  explicit BigFloat(long prec = 128) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  long prec() const { return mpfr_get_prec(v_); }

  static BigFloat from_long(long x, long prec) {
    BigFloat r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
  }
  static BigFloat from_double(double x, long prec) {
    BigFloat r(prec);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
  }
  static BigFloat from_int(const Int& x, long prec) {
    BigFloat r(prec);
    mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN);
    return r;
  }
  static BigFloat log_int(const Int& n, long prec) {
    BigFloat r = from_int(n, prec);
    mpfr_log(r.v_, r.v_, MPFR_RNDN);
    return r;
  }
  // ln(num) - ln(den), exact rational input.
  static BigFloat log_rat(const Rat& q, long prec) {
    BigFloat a = log_int(q.num(), prec);
    BigFloat b = log_int(q.den(), prec);
    mpfr_sub(a.v_, a.v_, b.v_, MPFR_RNDN);
    return a;
  }
  static BigFloat pi(long prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  BigFloat add(const BigFloat& o) const { return binop(o, mpfr_add); }
  BigFloat sub(const BigFloat& o) const { return binop(o, mpfr_sub); }
  BigFloat mul(const BigFloat& o) const { return binop(o, mpfr_mul); }
  BigFloat div(const BigFloat& o) const { return binop(o, mpfr_div); }
  BigFloat mul_long(long x) const {
    BigFloat r(*this);
    mpfr_mul_si(r.v_, r.v_, x, MPFR_RNDN);
    return r;
  }
  BigFloat div_long(long x) const {
    BigFloat r(*this);
    mpfr_div_si(r.v_, r.v_, x, MPFR_RNDN);
    return r;
  }
  BigFloat mul_2exp(long e) const {
    BigFloat r(*this);
    mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
  }
  BigFloat neg() const {
    BigFloat r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
  }
  BigFloat abs() const {
    BigFloat r(*this);
    mpfr_abs(r.v_, r.v_, MPFR_RNDN);
    return r;
  }
  BigFloat sin() const {
    BigFloat r(*this);
    mpfr_sin(r.v_, r.v_, MPFR_RNDN);
    return r;
  }

  Int floor_int() const {
    BigFloat f(*this);
    mpfr_floor(f.v_, f.v_);
    Int z;
    mpfr_get_z(z.get_mpz_t(), f.v_, MPFR_RNDZ);
    return z;
  }
  // x - floor(x), in [0, 1).
  BigFloat frac() const {
    BigFloat fl = *this;
    mpfr_floor(fl.v_, fl.v_);
    BigFloat r(*this);
    mpfr_sub(r.v_, r.v_, fl.v_, MPFR_RNDN);
    return r;
  }

  int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
  int cmp_long(long x) const { return mpfr_cmp_si(v_, x); }
  int cmp_double(double x) const { return mpfr_cmp_d(v_, x); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  using BinFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  BigFloat binop(const BigFloat& o, BinFn fn) const {
    BigFloat r(prec());
    fn(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
  }
  mpfr_t v_;
};

}  // namespace mulrec
