#include "mulrec/graph.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>

namespace mulrec {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

struct ParamsI64 {
  i64 a, b, c, d;
};

ParamsI64 to_i64(const MoebiusParams& p) {
  if (!p.a.fits_slong_p() || !p.b.fits_slong_p() || !p.c.fits_slong_p() ||
      !p.d.fits_slong_p()) {
    throw resource_limit_error("window engine: parameters exceed the machine-word range");
  }
  return {p.a.get_si(), p.b.get_si(), p.c.get_si(), p.d.get_si()};
}

i64 igcd(i64 x, i64 y) { return std::gcd(x < 0 ? -x : x, y < 0 ? -y : y); }

bool edge_less(const WindowEdge& x, const WindowEdge& y) {
  if (x.u != y.u) return x.u < y.u;
  if (x.v != y.v) return x.v < y.v;
  if (x.witness != y.witness) return x.witness < y.witness;
  return x.v_over_u && !y.v_over_u;
}

// Emits the in-window part of the family {g*num, g*den} for the reduced value
// num/den attained at witness n.
void emit_family(i64 num, i64 den, i64 witness, i64 lo, i64 hi,
                 std::vector<WindowEdge>& out) {
  i64 small = std::min(num, den);
  i64 large = std::max(num, den);
  if (large > hi) return;
  i64 g_lo = std::max<i64>(1, (lo + small - 1) / small);
  i64 g_hi = hi / large;
  for (i64 g = g_lo; g <= g_hi; ++g) {
    out.push_back({g * small, g * large, witness, num > den});
  }
}

}  // namespace

std::optional<PairWitness> adjacent(const MoebiusParams& params, const Int& m, const Int& n) {
  if (m < 1 || n < 1) throw std::invalid_argument("adjacent: vertices must be >= 1");
  if (m == n) return std::nullopt;
  if (auto w = member(params, Rat(m, n))) return PairWitness{*w, true};
  if (auto w = member(params, Rat(n, m))) return PairWitness{*w, false};
  return std::nullopt;
}

WindowGraph::WindowGraph(MoebiusParams params, std::int64_t lo, std::int64_t hi,
                         std::vector<WindowEdge> edges)
    : params_(std::move(params)), lo_(lo), hi_(hi), edges_(std::move(edges)) {}

void WindowGraph::ensure_adjacency() const {
  if (adj_built_) return;
  adj_.assign(static_cast<std::size_t>(width()), {});
  for (const auto& e : edges_) {
    adj_[static_cast<std::size_t>(e.u - lo_)].push_back(e.v);
    adj_[static_cast<std::size_t>(e.v - lo_)].push_back(e.u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  adj_built_ = true;
}

const std::vector<std::int64_t>& WindowGraph::neighbors(std::int64_t vertex) const {
  ensure_adjacency();
  return adj_[static_cast<std::size_t>(vertex - lo_)];
}

WindowGraph build_window(const MoebiusParams& params, std::int64_t lo, std::int64_t hi,
                         const RunConfig& cfg) {
  if (lo < 1 || lo > hi) throw std::invalid_argument("build_window: requires 1 <= lo <= hi");
  if (hi - lo + 1 > cfg.window_cap) {
    throw resource_limit_error("build_window: window exceeds cap");
  }
  ParamsI64 p = to_i64(params);
  std::vector<WindowEdge> edges;

  i128 det = (i128)p.c * p.b - (i128)p.a * p.d;
  if (det == 0) {
    // Constant value a/c; a single edge family.
    i64 g0 = igcd(p.a, p.c);
    i64 num = p.a / g0, den = p.c / g0;
    if (num != den) {
      i64 witness = (p.c + p.d != 0) ? 1 : 2;
      emit_family(num, den, witness, lo, hi, edges);
    }
  } else {
    i64 gamma = det < 0 ? static_cast<i64>(-det) : static_cast<i64>(det);
    i64 mb = std::max(p.b < 0 ? -p.b : p.b, p.d < 0 ? -p.d : p.d);
    i128 stop128 = ((i128)gamma * hi + mb) / std::min(p.a, p.c) + 2;
    if (stop128 > cfg.enum_cap) {
      throw resource_limit_error("build_window: witness enumeration exceeds cap");
    }
    i64 n_stop = static_cast<i64>(stop128);
    i128 peak = (i128)std::max(p.a, p.c) * n_stop + mb;
    if (peak > std::numeric_limits<i64>::max()) {
      throw resource_limit_error("build_window: coefficient range overflows the engine");
    }

    int workers = cfg.workers > 0 ? cfg.workers : omp_get_max_threads();
    i64 chunk = std::max<i64>(1024, n_stop / (workers * 16) + 1);
    i64 nchunks = (n_stop + chunk - 1) / chunk;
    std::vector<std::vector<WindowEdge>> parts(static_cast<std::size_t>(nchunks));

#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (i64 ci = 0; ci < nchunks; ++ci) {
      auto& local = parts[static_cast<std::size_t>(ci)];
      i64 n_lo = ci * chunk + 1;
      i64 n_hi = std::min(n_stop, (ci + 1) * chunk);
      for (i64 n = n_lo; n <= n_hi; ++n) {
        i64 P = p.a * n + p.b;
        i64 Q = p.c * n + p.d;
        if (P == 0 || Q == 0) continue;
        if ((P < 0) != (Q < 0)) continue;
        i64 ap = P < 0 ? -P : P;
        i64 aq = Q < 0 ? -Q : Q;
        i64 g = igcd(ap, aq);
        i64 num = ap / g, den = aq / g;
        if (num == den) continue;  // value 1 is excluded
        emit_family(num, den, n, lo, hi, local);
      }
    }
    std::size_t total = 0;
    for (const auto& part : parts) total += part.size();
    edges.reserve(total);
    for (auto& part : parts) edges.insert(edges.end(), part.begin(), part.end());
  }

  std::sort(edges.begin(), edges.end(), edge_less);
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](const WindowEdge& x, const WindowEdge& y) {
                            return x.u == y.u && x.v == y.v;
                          }),
              edges.end());
  return WindowGraph(params, lo, hi, std::move(edges));
}

namespace {

// Branch-and-bound maximal clique expansion with greedy pivoting.
// Vertex sets are kept sorted; candidate iteration is ascending, so the
// produced cliques are deterministic.
class CliqueSearcher {
 public:
  CliqueSearcher(const WindowGraph& g, std::size_t size_limit)
      : g_(g), limit_(size_limit) {}

  CliqueSearchResult run() {
    std::vector<i64> verts;
    for (const auto& e : g_.edges()) {
      verts.push_back(e.u);
      verts.push_back(e.v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.empty()) {
      // No edges: maximum cliques are single vertices; report the least one.
      return {1, {{g_.lo()}}};
    }
    // Every maximal clique is enumerated exactly once, rooted at its least
    // vertex; the candidate sets never exceed one neighborhood.
    for (i64 v : verts) {
      const auto& nb = g_.neighbors(v);
      auto split = std::lower_bound(nb.begin(), nb.end(), v);
      std::vector<i64> X(nb.begin(), split);
      std::vector<i64> P(split, nb.end());
      std::vector<i64> R{v};
      if (expand(R, std::move(P), std::move(X))) break;
    }
    CliqueSearchResult res;
    res.omega = best_;
    res.cliques = std::move(found_);
    std::sort(res.cliques.begin(), res.cliques.end());
    return res;
  }

 private:
  bool expand(std::vector<i64>& R, std::vector<i64> P, std::vector<i64> X) {
    if (limit_ > 0 && R.size() >= limit_) {
      std::vector<i64> sorted = R;
      std::sort(sorted.begin(), sorted.end());
      found_.clear();
      found_.push_back(std::move(sorted));
      best_ = R.size();
      return true;
    }
    if (P.empty() && X.empty()) {
      if (limit_ > 0) return false;
      if (R.size() > best_) {
        best_ = R.size();
        found_.clear();
      }
      if (R.size() == best_) {
        std::vector<i64> sorted = R;
        std::sort(sorted.begin(), sorted.end());
        found_.push_back(std::move(sorted));
      }
      return false;
    }
    std::size_t target = limit_ > 0 ? limit_ : best_;
    if (R.size() + P.size() < target) return false;

    i64 pivot = choose_pivot(P, X);
    std::vector<i64> candidates = subtract(P, g_.neighbors(pivot));
    for (i64 v : candidates) {
      R.push_back(v);
      bool done = expand(R, intersect(P, g_.neighbors(v)), intersect(X, g_.neighbors(v)));
      R.pop_back();
      if (done) return true;
      P.erase(std::lower_bound(P.begin(), P.end(), v));
      X.insert(std::lower_bound(X.begin(), X.end(), v), v);
    }
    return false;
  }

  i64 choose_pivot(const std::vector<i64>& P, const std::vector<i64>& X) const {
    i64 pivot = 0;
    std::size_t best = 0;
    bool first = true;
    auto consider = [&](i64 u) {
      std::size_t c = count_common(P, g_.neighbors(u));
      if (first || c > best) {
        pivot = u;
        best = c;
        first = false;
      }
    };
    for (i64 u : P) consider(u);
    for (i64 u : X) consider(u);
    return pivot;
  }

  // Candidate sets can hold the whole window while neighbor lists stay short;
  // always walk the smaller side and binary-search the larger.
  static std::size_t count_common(const std::vector<i64>& a, const std::vector<i64>& b) {
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& large = a.size() <= b.size() ? b : a;
    std::size_t n = 0;
    for (i64 v : small) {
      if (std::binary_search(large.begin(), large.end(), v)) ++n;
    }
    return n;
  }

  static std::vector<i64> intersect(const std::vector<i64>& a, const std::vector<i64>& b) {
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& large = a.size() <= b.size() ? b : a;
    std::vector<i64> out;
    out.reserve(small.size());
    for (i64 v : small) {
      if (std::binary_search(large.begin(), large.end(), v)) out.push_back(v);
    }
    return out;
  }

  static std::vector<i64> subtract(const std::vector<i64>& a, const std::vector<i64>& b) {
    std::vector<i64> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

  const WindowGraph& g_;
  std::size_t limit_;
  std::size_t best_ = 1;
  std::vector<std::vector<i64>> found_;
};

}  // namespace

CliqueSearchResult max_cliques(const WindowGraph& g, std::size_t size_limit) {
  return CliqueSearcher(g, size_limit).run();
}

namespace {

// Vertices of the (k-1)-core: anything of lower degree cannot sit in a
// k-clique, and removals cascade.
std::vector<i64> core_vertices(const WindowGraph& g, std::size_t k) {
  std::vector<i64> verts;
  for (const auto& e : g.edges()) {
    verts.push_back(e.u);
    verts.push_back(e.v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<std::size_t> degree(verts.size());
  std::vector<char> alive(verts.size(), 1);
  auto index_of = [&](i64 v) {
    return static_cast<std::size_t>(
        std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  std::vector<std::size_t> queue;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    degree[i] = g.neighbors(verts[i]).size();
    if (degree[i] + 1 < k) queue.push_back(i);
  }
  while (!queue.empty()) {
    std::size_t i = queue.back();
    queue.pop_back();
    if (!alive[i]) continue;
    alive[i] = 0;
    for (i64 nb : g.neighbors(verts[i])) {
      std::size_t ni = index_of(nb);
      if (alive[ni] && degree[ni]-- + 1 == k) queue.push_back(ni);
    }
  }
  std::vector<i64> core;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (alive[i]) core.push_back(verts[i]);
  }
  return core;
}

}  // namespace

std::optional<std::vector<std::int64_t>> find_clique_of_size(const WindowGraph& g,
                                                             std::size_t size) {
  if (size <= 1) return std::vector<std::int64_t>{g.lo()};
  std::vector<i64> core = core_vertices(g, size);
  if (core.size() < size) return std::nullopt;
  std::vector<WindowEdge> kept;
  for (const auto& e : g.edges()) {
    if (std::binary_search(core.begin(), core.end(), e.u) &&
        std::binary_search(core.begin(), core.end(), e.v)) {
      kept.push_back(e);
    }
  }
  WindowGraph sub(g.params(), g.lo(), g.hi(), std::move(kept));
  CliqueSearchResult res = CliqueSearcher(sub, size).run();
  if (res.omega >= size && !res.cliques.empty()) {
    auto c = res.cliques.front();
    c.resize(size);
    return c;
  }
  return std::nullopt;
}

ColoringCheck verify_coloring(const WindowGraph& g, const ColoringSpec& spec,
                              const RunConfig& cfg) {
  ColoringCheck check;
  std::vector<i64> verts;
  verts.reserve(g.edges().size() * 2);
  for (const auto& e : g.edges()) {
    verts.push_back(e.u);
    verts.push_back(e.v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

  std::vector<long long> colors(verts.size(), 0);
  std::vector<char> ambiguous(verts.size(), 0);
  ColorEngine engine(spec, cfg);  // validates the spec before the parallel region
  int workers = cfg.workers > 0 ? cfg.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 512) num_threads(workers)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(verts.size()); ++i) {
    ColorValue cv = engine(Int(static_cast<long>(verts[i])));
    colors[i] = cv.color;
    ambiguous[i] = cv.ambiguous ? 1 : 0;
  }

  auto index_of = [&](i64 v) {
    return static_cast<std::size_t>(
        std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  for (const auto& e : g.edges()) {
    std::size_t iu = index_of(e.u);
    std::size_t iv = index_of(e.v);
    if (ambiguous[iu] || ambiguous[iv]) {
      check.ambiguous_edges.push_back(e);
    } else if (colors[iu] == colors[iv]) {
      check.violations.push_back(e);
    }
  }
  check.ambiguous_vertices =
      std::count(ambiguous.begin(), ambiguous.end(), static_cast<char>(1));
  check.colored_vertices = static_cast<std::int64_t>(verts.size());
  return check;
}

std::size_t omega_window(const MoebiusParams& params, std::int64_t lo, std::int64_t hi,
                         const RunConfig& cfg) {
  WindowGraph g = build_window(params, lo, hi, cfg);
  return max_cliques(g).omega;
}

std::size_t greedy_chi_upper(const WindowGraph& g) {
  std::size_t max_color = 1;
  std::vector<int> vertex_color(static_cast<std::size_t>(g.width()), 0);
  for (i64 v = g.lo(); v <= g.hi(); ++v) {
    std::vector<char> used(max_color + 2, 0);
    for (i64 nb : g.neighbors(v)) {
      if (nb < v) {
        int c = vertex_color[static_cast<std::size_t>(nb - g.lo())];
        if (c > 0 && static_cast<std::size_t>(c) <= max_color + 1) used[c] = 1;
      }
    }
    int c = 1;
    while (used[c]) ++c;
    vertex_color[static_cast<std::size_t>(v - g.lo())] = c;
    max_color = std::max(max_color, static_cast<std::size_t>(c));
  }
  return max_color;
}

void export_edges(const WindowGraph& g, std::ostream& out) {
  for (const auto& e : g.edges()) {
    out << e.u << ' ' << e.v << ' ' << e.witness << '\n';
  }
}

}  // namespace mulrec
