#include "mulrec/ratio_sets.hpp"

namespace mulrec {

namespace {
inline void require(bool ok, const char* msg) {
  if (!ok) throw verification_error(msg);
}
}  // namespace

std::optional<Rat> value_at(const MoebiusParams& params, const Int& n) {
  if (n < 1) throw std::invalid_argument("value_at: n must be >= 1");
  Int num = params.a * n + params.b;
  Int den = params.c * n + params.d;
  if (den == 0) return std::nullopt;
  Rat r(num, den);
  if (r.sgn() <= 0) return std::nullopt;
  if (r.is_one()) return std::nullopt;
  return r;
}

std::optional<Int> member(const MoebiusParams& params, const Rat& r) {
  if (r.sgn() <= 0) throw std::invalid_argument("member: r must be positive");
  const Int u = r.num();
  const Int v = r.den();
  // v (a n + b) = u (c n + d)  <=>  n (v a - u c) = u d - v b
  Int coef = v * params.a - u * params.c;
  Int rhs = u * params.d - v * params.b;
  if (coef != 0) {
    if (!mpz_divisible_p(rhs.get_mpz_t(), coef.get_mpz_t())) return std::nullopt;
    Int n = rhs / coef;
    if (n < 1) return std::nullopt;
    auto val = value_at(params, n);
    if (val && *val == r) return n;
    return std::nullopt;
  }
  if (rhs != 0) return std::nullopt;
  // Proportional rows: every n with a nonzero denominator yields r.
  for (Int n = 1; n <= 2; ++n) {
    auto val = value_at(params, n);
    if (val && *val == r) return n;
  }
  return std::nullopt;
}

bool is_empty(const MoebiusParams& params) {
  return params.a == params.c && params.b == params.d;
}

namespace {

Rat fold(const Rat& r) { return r > Rat(1) ? r : r.inverse(); }  // max(r, 1/r)

}  // namespace

RangeBounds range_bounds(const MoebiusParams& params) {
  if (params.a == params.c) throw std::invalid_argument("range_bounds: requires a != c");

  // Past n1 the value is positive, never 1, and monotone toward a/c.
  Int n1 = 1;
  if (params.b < 0) n1 = std::max(n1, Int(fdiv(-params.b, params.a) + 1));
  if (params.d < 0) n1 = std::max(n1, Int(fdiv(-params.d, params.c) + 1));
  {
    Int diff = params.a - params.c;
    Int rhs = params.d - params.b;
    n1 = std::max(n1, Int(fdiv(rhs, diff) + 1));
  }
  if (n1 > 1'000'000) throw resource_limit_error("range_bounds: exceptional range too large");

  bool have = false;
  Rat m(0), M(0);
  bool m_attained = true;
  for (Int n = 1; n <= n1; ++n) {
    auto val = value_at(params, n);
    if (!val) continue;
    Rat v = fold(*val);
    if (!have) {
      m = M = v;
      have = true;
    } else {
      if (v < m) m = v;
      if (v > M) M = v;
    }
  }
  require(have, "range_bounds: no attained values");

  Rat limit = fold(Rat(params.a, params.c));
  Int det = params.a * params.d - params.b * params.c;
  if (det != 0) {
    Rat vend = fold(*value_at(params, n1));
    if (vend < limit) {
      // tail increases toward the limit; the sup is the (unattained) limit
      if (limit > M) M = limit;
    } else {
      require(vend > limit, "range_bounds: tail endpoint equals the limit");
      // tail decreases toward the limit; the inf is the (unattained) limit
      if (limit < m) {
        m = limit;
        m_attained = false;
      }
    }
  }

  Rat alpha = m_attained ? (Rat(1) + m) / Rat(2) : m;
  Rat beta = Rat(3, 2) * M;
  require(Rat(1) < alpha && alpha < beta, "range_bounds: derived bounds out of order");
  return RangeBounds{alpha, beta};
}

bool in_S(const Rat& r, const RangeBounds& bounds) {
  if (r.sgn() <= 0) throw std::invalid_argument("in_S: r must be positive");
  Rat binv = bounds.beta.inverse();
  Rat ainv = bounds.alpha.inverse();
  return (r > binv && r < ainv) || (r > bounds.alpha && r < bounds.beta);
}

bool in_T(const Rat& r, const Int& p, long k) {
  if (r.sgn() <= 0) throw std::invalid_argument("in_T: r must be positive");
  if (vp(p, r) != ExtVal::of(0)) return false;
  return vp(p, r - Rat(1)) <= ExtVal::of(k);
}

bool in_Tprime(const Rat& r, const Int& p, long k) {
  if (r.sgn() <= 0) throw std::invalid_argument("in_Tprime: r must be positive");
  if (k < 1) throw std::invalid_argument("in_Tprime: k must be >= 1");
  ExtVal v = vp(p, r);
  if (v.is_infinite()) return false;
  long long av = v.value() < 0 ? -v.value() : v.value();
  return av == k;
}

}  // namespace mulrec
