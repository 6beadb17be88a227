#pragma once

#include <optional>

#include "mulrec/arith.hpp"

namespace mulrec {

// Coefficients of n -> (a n + b) / (c n + d); the ratio set is the image of
// n >= 1 intersected with the positive rationals other than 1.
struct MoebiusParams {
  Int a, b, c, d;
  MoebiusParams(Int a_, Int b_, Int c_, Int d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (a < 1 || c < 1) throw std::invalid_argument("MoebiusParams: a and c must be >= 1");
  }
  std::string str() const {
    return "(" + a.get_str() + "," + b.get_str() + "," + c.get_str() + "," + d.get_str() + ")";
  }
};

// Enclosing bounds for a != c: every member r satisfies max(r, 1/r) in (alpha, beta).
struct RangeBounds {
  Rat alpha, beta;
};

// The reduced value (a n + b)/(c n + d), or absent if it falls outside the set
// (zero denominator, non-positive value, or value 1).
std::optional<Rat> value_at(const MoebiusParams& params, const Int& n);

// Least witness n >= 1 with value_at(params, n) == r, if r belongs to the set.
std::optional<Int> member(const MoebiusParams& params, const Rat& r);

bool is_empty(const MoebiusParams& params);

// Derives (alpha, beta) for a != c from exact enumeration of the exceptional
// range plus the monotone tail with limit a/c.
RangeBounds range_bounds(const MoebiusParams& params);

// Membership tests for the three enclosing families.
bool in_S(const Rat& r, const RangeBounds& bounds);
bool in_T(const Rat& r, const Int& p, long k);
bool in_Tprime(const Rat& r, const Int& p, long k);

}  // namespace mulrec
