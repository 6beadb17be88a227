#include "mulrec/reference.hpp"

#include <algorithm>
#include <numeric>

namespace mulrec {
namespace ref {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

struct P64 {
  i64 a, b, c, d;
};

P64 p64_of(const MoebiusParams& p) {
  if (!p.a.fits_slong_p() || !p.b.fits_slong_p() || !p.c.fits_slong_p() ||
      !p.d.fits_slong_p()) {
    throw resource_limit_error("reference: parameters exceed the machine-word range");
  }
  return {p.a.get_si(), p.b.get_si(), p.c.get_si(), p.d.get_si()};
}

// Solves (a n + b)/(c n + d) = u/v for reduced u/v > 0, u != v.
std::optional<i64> member64(const P64& p, i64 u, i64 v) {
  i128 coef = (i128)v * p.a - (i128)u * p.c;
  i128 rhs = (i128)u * p.d - (i128)v * p.b;
  auto check = [&](i64 n) -> bool {
    if (n < 1) return false;
    i128 P = (i128)p.a * n + p.b;
    i128 Q = (i128)p.c * n + p.d;
    if (P == 0 || Q == 0) return false;
    if ((P < 0) != (Q < 0)) return false;
    return P * v == Q * u;
  };
  if (coef != 0) {
    if (rhs % coef != 0) return std::nullopt;
    i128 n = rhs / coef;
    if (n < 1 || n > (i128)1 << 62) return std::nullopt;
    if (check(static_cast<i64>(n))) return static_cast<i64>(n);
    return std::nullopt;
  }
  if (rhs != 0) return std::nullopt;
  for (i64 n = 1; n <= 2; ++n) {
    if (check(n)) return n;
  }
  return std::nullopt;
}

}  // namespace

WindowGraph build_window_allpairs(const MoebiusParams& params, std::int64_t lo,
                                  std::int64_t hi) {
  if (lo < 1 || lo > hi) throw std::invalid_argument("build_window_allpairs: bad window");
  if (hi - lo > 5000) throw resource_limit_error("build_window_allpairs: window too large");
  P64 p = p64_of(params);
  std::vector<WindowEdge> edges;
  for (i64 u = lo; u <= hi; ++u) {
    for (i64 v = u + 1; v <= hi; ++v) {
      i64 g = std::gcd(u, v);
      i64 ru = u / g, rv = v / g;
      if (ru == rv) continue;
      auto w1 = member64(p, rv, ru);  // v/u
      auto w2 = member64(p, ru, rv);  // u/v
      if (w1 && w2) {
        if (*w1 <= *w2) {
          edges.push_back({u, v, *w1, true});
        } else {
          edges.push_back({u, v, *w2, false});
        }
      } else if (w1) {
        edges.push_back({u, v, *w1, true});
      } else if (w2) {
        edges.push_back({u, v, *w2, false});
      }
    }
  }
  return WindowGraph(params, lo, hi, std::move(edges));
}

ColoringCheck verify_coloring_serial(const WindowGraph& g, const ColoringSpec& spec,
                                     const RunConfig& cfg) {
  ColoringCheck check;
  std::vector<i64> seen;
  for (const auto& e : g.edges()) {
    ColorValue cu = color(spec, Int(static_cast<long>(e.u)), cfg);
    ColorValue cv = color(spec, Int(static_cast<long>(e.v)), cfg);
    if (cu.ambiguous || cv.ambiguous) {
      check.ambiguous_edges.push_back(e);
      if (cu.ambiguous) seen.push_back(e.u);
      if (cv.ambiguous) seen.push_back(e.v);
    } else if (cu.color == cv.color) {
      check.violations.push_back(e);
    }
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  check.ambiguous_vertices = static_cast<std::int64_t>(seen.size());
  return check;
}

DioReport dio_scan_serial(const CMFSpec& spec, const MoebiusParams& params, std::int64_t N,
                          const RunConfig& cfg, std::int64_t lo) {
  if (N < 1 || lo < 1 || lo > N) throw std::invalid_argument("dio_scan_serial: bad range");
  P64 p = p64_of(params);
  CmfEvaluator ev(spec, cfg);
  DioReport rep;
  rep.witness = describe(spec);
  rep.lo = lo;
  rep.N = N;
  rep.exact = ev.exact();
  bool any = false, tail_any = false;
  i64 tail_lo = std::max(lo, N / 2);
  for (i64 n = lo; n <= N; ++n) {
    i64 x = p.a * n + p.b;
    i64 y = p.c * n + p.d;
    if (x < 1 || y < 1) continue;
    TurnDist d = turn_dist(ev.eval(x), ev.eval(y));
    ++rep.valid_count;
    if (!any || dist_less(d, rep.min_dist)) {
      any = true;
      rep.min_dist = d;
      rep.argmin = n;
    }
    if (n >= tail_lo && (!tail_any || dist_less(d, rep.tail_min_dist))) {
      tail_any = true;
      rep.tail_min_dist = d;
      rep.tail_argmin = n;
    }
  }
  if (!any) throw std::invalid_argument("dio_scan_serial: no valid n in range");
  return rep;
}

AsetReport aset_scan_serial(const std::vector<CMFSpec>& specs, double eps,
                            const MoebiusParams& params, std::int64_t N,
                            const RunConfig& cfg) {
  if (specs.empty()) throw std::invalid_argument("aset_scan_serial: needs functions");
  P64 p = p64_of(params);
  std::vector<CmfEvaluator> evs;
  for (const auto& s : specs) evs.emplace_back(s, cfg);
  AsetReport rep;
  for (const auto& s : specs) rep.witnesses.push_back(describe(s));
  rep.eps = eps;
  rep.N = N;
  rep.cell_count = pigeonhole_cells(eps);
  for (i64 n = 1; n <= N; ++n) {
    i64 x = p.a * n + p.b;
    i64 y = p.c * n + p.d;
    if (x < 1 || y < 1) continue;
    bool all = true;
    for (const auto& ev : evs) {
      if (turn_dist(ev.eval(x), ev.eval(y)).gap() >= eps) {
        all = false;
        break;
      }
    }
    if (all) {
      std::size_t blk = static_cast<std::size_t>((n - 1) * 10 / N);
      if (blk > 9) blk = 9;
      rep.block_counts[blk] += 1;
      rep.count += 1;
    }
  }
  rep.density = static_cast<double>(rep.count) / static_cast<double>(N);
  return rep;
}

std::size_t omega_exhaustive(const WindowGraph& g, std::size_t cap) {
  std::vector<i64> verts;
  for (const auto& e : g.edges()) {
    verts.push_back(e.u);
    verts.push_back(e.v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  if (verts.empty()) return 1;

  auto is_adj = [&](i64 u, i64 v) {
    const auto& nb = g.neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  };
  std::size_t best = 1;
  std::vector<i64> cur;
  // Depth-first extension over ascending vertices; no pivoting or ordering
  // tricks, by design.
  auto extend = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() > best) best = cur.size();
    if (cur.size() >= cap) return;
    for (std::size_t i = start; i < verts.size(); ++i) {
      bool ok = true;
      for (i64 u : cur) {
        if (!is_adj(u, verts[i])) {
          ok = false;
          break;
        }
      }
      if (ok) {
        cur.push_back(verts[i]);
        self(self, i + 1);
        cur.pop_back();
      }
    }
  };
  extend(extend, 0);
  return best;
}

}  // namespace ref
}  // namespace mulrec
