#include "mulrec/cliques.hpp"

#include <algorithm>

namespace mulrec {

namespace {

inline void require(bool ok, const char* msg) {
  if (!ok) throw verification_error(msg);
}

Int gcd(const Int& x, const Int& y) {
  Int r;
  mpz_gcd(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return r;
}

void require_divides_lcm(const Int& a, const Int& b, const Int& d) {
  Int l = lcm0(b, d);
  if (!divides(a, l)) {
    throw std::invalid_argument("clique construction requires a | lcm(b, d)");
  }
}

}  // namespace

NormalizeResult normalize(const Int& a, const Int& b, const Int& d) {
  if (a < 1) throw std::invalid_argument("normalize: a must be >= 1");
  if (b == d) throw std::invalid_argument("normalize: requires b != d");
  require_divides_lcm(a, b, d);

  Int bb = b, dd = d;
  bool swapped = false;
  if (bb < dd) {
    std::swap(bb, dd);
    swapped = true;
  }
  Int g = gcd(a, gcd(abs(bb), abs(dd)));
  NormalizeResult res{a / g, bb / g, dd / g, g, swapped};
  if (gcd(res.a, res.b - res.d) != 1) {
    throw verification_error("normalize: gcd(a, b-d) != 1 after stripping");
  }
  return res;
}

ReductionCert reduce(const Int& a, const Int& b, const Int& d) {
  if (!(b > d)) throw std::invalid_argument("reduce: requires b > d");
  Int e = b - d;
  if (gcd(a, e) != 1) throw std::invalid_argument("reduce: requires gcd(a, b-d) = 1");
  if (!divides(a, Int(b * d))) throw std::invalid_argument("reduce: requires a | b d");

  // Bezout pair a*j + e*kBez = 1, then shift j within its class mod e until
  // b*j <= 0, taking the first hit in the direction that can reach it.
  Int g, j, kBez;
  mpz_gcdext(g.get_mpz_t(), j.get_mpz_t(), kBez.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t());
  require(g == 1, "reduce: extended gcd is not 1");
  if (b > 0 && j > 0) {
    Int s = cdiv(j, e);
    j -= s * e;
    kBez += s * a;
  } else if (b < 0 && j < 0) {
    Int s = cdiv(-j, e);
    j += s * e;
    kBez -= s * a;
  }
  if (!(a * j + e * kBez == 1 && b * j <= 0)) {
    throw verification_error("reduce: Bezout shift failed");
  }

  Int bk = b * kBez;
  Int T = bk >= 2 ? Int(0) : cdiv(Int(2 - bk), a);
  Int B = a * T + bk;
  require(B >= 2, "reduce: B below 2");
  Int A = B * (B - 1);
  if (!divides(a, A)) throw verification_error("reduce: a does not divide B(B-1)");
  Int J = A / a;
  Int C = e * J;
  Int D = e * T - b * j;
  require(C >= 1 && D >= 0, "reduce: affine map out of range");

  ReductionCert cert{a, b, d, a, b, d, Int(1), false, j, kBez, T, A, B, J, C, D};
  verify_reduction_cert(cert);
  return cert;
}

void verify_reduction_cert(const ReductionCert& cert, int upto) {
  if (cert.A != cert.B * (cert.B - 1) || cert.B < 2) {
    throw verification_error("reduction cert: A != B(B-1) or B < 2");
  }
  if (cert.g < 1 || cert.orig_a != cert.a * cert.g ||
      cert.orig_b != (cert.swapped ? cert.d : cert.b) * cert.g ||
      cert.orig_d != (cert.swapped ? cert.b : cert.d) * cert.g) {
    throw verification_error("reduction cert: normalization does not match the input");
  }
  if (cert.a * cert.j + (cert.b - cert.d) * cert.kBez != 1 || cert.b * cert.j > 0) {
    throw verification_error("reduction cert: Bezout relation violated");
  }
  if (cert.J * cert.a != cert.A) throw verification_error("reduction cert: J*a != A");
  MoebiusParams orig(cert.a, cert.b, cert.a, cert.d);
  MoebiusParams red(cert.A, cert.B, cert.A, cert.B - 1);
  for (int m = 1; m <= upto; ++m) {
    Int n = cert.C * m + cert.D;
    auto lhs = value_at(orig, n);
    auto rhs = value_at(red, Int(m));
    if (!lhs || !rhs || !(*lhs == *rhs)) {
      throw verification_error("reduction cert: embedding identity fails at m=" +
                               std::to_string(m));
    }
  }
}

namespace {

// The step modulus Phi must be divisible by every pair gcd (at most H) and by
// every b*h + 1 for 0 <= h <= H. The factorial (M + H)! is the construction's
// default; when it is over cap, the exact lcm of those requirements is used.
Int step_modulus(const Int& b, const Int& H, const Int& M, const RunConfig& cfg,
                 bool* factorial_used) {
  Int total = M + H;
  if (total.fits_ulong_p() && total.get_ui() <= cfg.factorial_cap) {
    *factorial_used = true;
    return factorial(total.get_ui(), cfg.factorial_cap);
  }
  *factorial_used = false;
  if (!H.fits_ulong_p() || H.get_ui() > 1'000'000) {
    throw resource_limit_error("clique construction: window length too large for lcm step");
  }
  unsigned long h_max = H.get_ui();
  Int phi = 1;
  for (unsigned long x = 2; x <= h_max; ++x) {
    Int l;
    mpz_lcm_ui(l.get_mpz_t(), phi.get_mpz_t(), x);
    phi = l;
  }
  for (unsigned long h = 1; h <= h_max; ++h) {
    Int f = b * static_cast<long>(h) + 1;
    Int l;
    mpz_lcm(l.get_mpz_t(), phi.get_mpz_t(), f.get_mpz_t());
    phi = l;
  }
  return phi;
}

struct BuildResult {
  std::vector<Int> vertices;
  Int window_len;
  std::vector<BuildLevel> levels;
};

BuildResult build_level(const Int& b, int k, const Int& base, const RunConfig& cfg) {
  Int a = b * (b - 1);
  if (k == 2) {
    Int H2 = a + b;
    // least n with a*n + (b-1) > base
    Int n = std::max(Int(1), Int(fdiv(base - (b - 1), a) + 1));
    Int lo = a * n + (b - 1);
    Int hi = a * n + b;
    require(lo > base && hi <= base + H2, "clique builder: base pair misplaced");
    BuildLevel lvl{2, H2, Int(0), Int(0), Int(0), false, Int(0), {lo - base, hi - base}};
    return {{lo, hi}, H2, {lvl}};
  }

  // Level data for the induction step k-1 -> k.
  BuildResult inner_probe = build_level(b, k - 1, Int(0), cfg);  // for H_{k-1} only
  Int H = inner_probe.window_len;
  if (!H.fits_ulong_p() || H.get_ui() > 1'000'000) {
    throw resource_limit_error("clique construction: H_" + std::to_string(k - 1) +
                               " too large; symbolic size: " +
                               symbolic_window_length(a, b, k - 1));
  }
  Int M = 1;
  for (unsigned long h = 1; h <= H.get_ui(); ++h) M *= b * static_cast<long>(h) + 1;
  require((M - 1) % b == 0, "clique builder: b does not divide M - 1");
  Int r = (M - 1) / b;

  // Inner (k-1)-clique in the window based at (b-1)*r; offsets in [1, H].
  BuildResult inner = build_level(b, k - 1, Int((b - 1) * r), cfg);
  std::vector<Int> offsets;
  for (const Int& v : inner.vertices) {
    Int h = v - (b - 1) * r;
    require(h >= 1 && h <= H, "clique builder: inner offset out of window");
    offsets.push_back(h);
  }

  bool factorial_used = false;
  Int phi = step_modulus(b, H, M, cfg, &factorial_used);
  Int step = b * phi;

  // least ell >= 1 with a*(step*ell + r) + (b-1) > base
  Int ell = std::max(Int(1), Int(fdiv(base - (b - 1) - a * r, a * step) + 1));
  Int n_ell = step * ell + r;

  std::vector<Int> verts;
  verts.push_back(a * n_ell + (b - 1));
  for (const Int& h : offsets) verts.push_back(a * n_ell + b * h);
  std::sort(verts.begin(), verts.end());

  Int next_H = factorial_used ? Int(2 * a * b * phi) : Int(a * b * phi + a * r + b * H);
  require(verts.front() > base && verts.back() <= base + next_H,
          "clique builder: placement outside the guaranteed window");

  BuildLevel lvl{k, next_H, M, r, step, factorial_used, ell, {}};
  for (const Int& v : verts) lvl.offsets.push_back(v - base);
  std::vector<BuildLevel> levels = inner.levels;
  levels.push_back(lvl);
  return {verts, next_H, levels};
}

}  // namespace

CliqueCert make_clique_cert(const MoebiusParams& params, std::vector<Int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  CliqueCert cert{params, std::move(vertices), {}, Int(0), {}, std::nullopt};
  for (std::size_t i = 0; i < cert.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < cert.vertices.size(); ++j) {
      Rat over(cert.vertices[j], cert.vertices[i]);
      if (auto w = member(params, over)) {
        cert.pairs.push_back({i, j, *w, true});
        continue;
      }
      if (auto w = member(params, over.inverse())) {
        cert.pairs.push_back({i, j, *w, false});
        continue;
      }
      throw verification_error("clique cert: vertices " + cert.vertices[i].get_str() +
                               " and " + cert.vertices[j].get_str() + " are not adjacent");
    }
  }
  return cert;
}

void verify_clique_cert(const CliqueCert& cert) {
  const auto& vs = cert.vertices;
  if (vs.empty()) throw verification_error("clique cert: no vertices");
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    if (!(vs[i] < vs[i + 1])) throw verification_error("clique cert: vertices not increasing");
  }
  std::size_t expect = vs.size() * (vs.size() - 1) / 2;
  if (cert.pairs.size() != expect) throw verification_error("clique cert: pair list incomplete");
  std::vector<bool> seen(expect, false);
  for (const auto& pr : cert.pairs) {
    if (pr.i >= pr.j || pr.j >= vs.size()) throw verification_error("clique cert: bad pair index");
    std::size_t slot = pr.j * (pr.j - 1) / 2 + pr.i;
    if (seen[slot]) throw verification_error("clique cert: duplicate pair");
    seen[slot] = true;
    Rat expected = pr.j_over_i ? Rat(vs[pr.j], vs[pr.i]) : Rat(vs[pr.i], vs[pr.j]);
    auto val = value_at(cert.params, pr.witness);
    if (!val || !(*val == expected)) {
      throw verification_error("clique cert: witness fails for pair (" +
                               std::to_string(pr.i) + "," + std::to_string(pr.j) + ")");
    }
  }
  if (!vs.empty() && !(vs.front() > cert.base)) {
    throw verification_error("clique cert: vertices do not exceed the requested base");
  }
}

CliqueCert construct_clique(const Int& b, int k, const Int& base, const RunConfig& cfg) {
  if (b < 2) throw std::invalid_argument("construct_clique: b must be >= 2");
  if (k < 2) throw std::invalid_argument("construct_clique: k must be >= 2");
  if (base < 0) throw std::invalid_argument("construct_clique: base must be >= 0");
  if (k > cfg.clique_level_cap) {
    Int a = b * (b - 1);
    throw resource_limit_error("construct_clique: level " + std::to_string(k) +
                               " exceeds cap " + std::to_string(cfg.clique_level_cap) +
                               "; window length " + symbolic_window_length(a, b, k));
  }
  Int a = b * (b - 1);
  BuildResult built = build_level(b, k, base, cfg);
  MoebiusParams params(a, b, a, b - 1);
  CliqueCert cert = make_clique_cert(params, built.vertices);
  cert.base = base;
  cert.levels = std::move(built.levels);
  verify_clique_cert(cert);
  return cert;
}

CliqueCert big_clique(const Int& a, const Int& b, const Int& d, int k, const RunConfig& cfg,
                      const Int& base) {
  NormalizeResult norm = normalize(a, b, d);
  ReductionCert red = reduce(norm.a, norm.b, norm.d);
  red.orig_a = a;
  red.orig_b = b;
  red.orig_d = d;
  red.g = norm.g;
  red.swapped = norm.swapped;
  CliqueCert inner = construct_clique(red.B, k, base, cfg);
  // The embedded set is contained in the original one, so the same vertex set
  // is a clique there; re-derive every witness against the original parameters.
  MoebiusParams orig(a, b, a, d);
  CliqueCert cert = make_clique_cert(orig, inner.vertices);
  cert.base = inner.base;
  cert.levels = inner.levels;
  cert.reduction = red;
  verify_clique_cert(cert);
  return cert;
}

std::string symbolic_window_length(const Int& a, const Int& b, long level) {
  if (level <= 2) return "H_2 = a+b = " + Int(a + b).get_str();
  std::string s = "H_" + std::to_string(level) + " = 2*a*b*(M_" + std::to_string(level - 1) +
                  " + H_" + std::to_string(level - 1) + ")! with M_j = prod_{h=1..H_j}(" +
                  b.get_str() + "*h+1), ";
  return s + symbolic_window_length(a, b, level - 1) + ", a=" + a.get_str() +
         ", b=" + b.get_str();
}

}  // namespace mulrec
