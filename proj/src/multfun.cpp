#include "mulrec/multfun.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "mulrec/bigfloat.hpp"
#include "mulrec/classify.hpp"

namespace mulrec {

namespace {

inline void require(bool ok, const char* msg) {
  if (!ok) throw verification_error(msg);
}

Rat mod1(const Rat& q) { return q - Rat(q.floor()); }

}  // namespace

Turn Turn::make_exact(const Rat& v) { return Turn{true, mod1(v), 0.0}; }

Turn Turn::make_real(double v) {
  double f = v - std::floor(v);
  if (f >= 1.0) f = 0.0;
  return Turn{false, Rat(0), f};
}

Turn turn_add(const Turn& s, const Turn& t) {
  if (s.exact && t.exact) return Turn::make_exact(s.q + t.q);
  double a = s.exact ? s.q.to_double() : s.x;
  double b = t.exact ? t.q.to_double() : t.x;
  return Turn::make_real(a + b);
}

Turn turn_scale(const Turn& s, long long e) {
  if (s.exact) return Turn::make_exact(s.q * Rat(Int(static_cast<long>(e))));
  return Turn::make_real(s.x * static_cast<double>(e));
}

double TurnDist::gap() const {
  double d = exact ? dq.to_double() : dx;
  return 2.0 * std::sin(M_PI * d);
}

TurnDist turn_dist(const Turn& s, const Turn& t) {
  if (s.exact && t.exact) {
    Rat d = mod1(s.q - t.q);
    if (d > Rat(1, 2)) d = Rat(1) - d;
    return TurnDist{true, d, 0.0};
  }
  double a = s.exact ? s.q.to_double() : s.x;
  double b = t.exact ? t.q.to_double() : t.x;
  double d = std::fabs(a - b);
  d = d - std::floor(d);
  if (d > 0.5) d = 1.0 - d;
  return TurnDist{false, Rat(0), d};
}

bool dist_less(const TurnDist& a, const TurnDist& b) {
  if (a.exact && b.exact) return a.dq < b.dq;
  double x = a.exact ? a.dq.to_double() : a.dx;
  double y = b.exact ? b.dq.to_double() : b.dx;
  return x < y;
}

std::string describe(const CMFSpec& spec) {
  if (const auto* a = std::get_if<ArchCharSpec>(&spec)) {
    if (a->pi_over_log) return "archchar t=pi/log(" + a->ratio.str() + ")";
    return "archchar t=" + std::to_string(a->t_plain);
  }
  if (const auto* m = std::get_if<ModDirichletSpec>(&spec)) {
    return "moddirichlet p=" + std::to_string(m->p) + " k=" + std::to_string(m->k) +
           " index=" + std::to_string(m->index);
  }
  if (const auto* r = std::get_if<RootCharSpec>(&spec)) {
    return "rootchar p=" + std::to_string(r->p) + " k=" + std::to_string(r->k);
  }
  const auto& c = std::get<CustomSpec>(spec);
  std::string s = "custom default=" + c.default_turn.str();
  for (const auto& [p, t] : c.assignments) s += " " + std::to_string(p) + "->" + t.str();
  return s;
}

// Group structure of the units modulo p^{k+1} in fixed coordinates:
// a generator power table for odd p, the {+-1} x <5> decomposition for 2^m
// with m >= 3, and the sign character modulo 4.
struct CmfEvaluator::Tables {
  std::int64_t modulus = 0;
  std::int64_t phi = 0;
  std::int64_t cyc = 0;  // order of the cyclic coordinate
  std::vector<std::int32_t> dlog;
  std::vector<std::int8_t> sign;
};

namespace {

std::int64_t pow_mod(std::int64_t base, std::int64_t e, std::int64_t mod) {
  std::int64_t r = 1;
  __int128 b = ((base % mod) + mod) % mod;
  while (e > 0) {
    if (e & 1) r = static_cast<std::int64_t>((__int128)r * b % mod);
    b = (__int128)b * b % mod;
    e >>= 1;
  }
  return r;
}

std::int64_t primitive_root_mod_p(std::int64_t p) {
  if (p == 2) return 1;
  auto fac = factorize(static_cast<std::uint64_t>(p - 1));
  for (std::int64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (const auto& pp : fac) {
      if (pow_mod(g, (p - 1) / static_cast<std::int64_t>(pp.p), p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("primitive_root_mod_p: none found");
}

std::shared_ptr<const CmfEvaluator::Tables> build_dirichlet_tables(std::int64_t p, long k) {
  auto t = std::make_shared<CmfEvaluator::Tables>();
  if (p < 2) throw std::invalid_argument("moddirichlet: p must be prime");
  Int modulus = int_pow(Int(static_cast<long>(p)), static_cast<unsigned long>(k + 1));
  if (!modulus.fits_slong_p() || modulus.get_si() > (1 << 26)) {
    throw resource_limit_error("moddirichlet: modulus too large for character tables");
  }
  std::int64_t M = modulus.get_si();
  t->modulus = M;
  if (p == 2) {
    if (M == 2) {
      t->phi = 1;
      t->cyc = 1;
      return t;
    }
    t->cyc = M / 4;  // order of <5>; 1 when M = 4
    t->phi = M / 2;
    t->dlog.assign(static_cast<std::size_t>(M), -1);
    t->sign.assign(static_cast<std::size_t>(M), 0);
    std::int64_t cur = 1;
    for (std::int64_t x = 0; x < t->cyc; ++x) {
      t->dlog[static_cast<std::size_t>(cur)] = static_cast<std::int32_t>(x);
      t->sign[static_cast<std::size_t>(cur)] = 0;
      std::int64_t nc = M - cur;
      t->dlog[static_cast<std::size_t>(nc)] = static_cast<std::int32_t>(x);
      t->sign[static_cast<std::size_t>(nc)] = 1;
      cur = static_cast<std::int64_t>((__int128)cur * 5 % M);
    }
    return t;
  }
  t->phi = (M / p) * (p - 1);
  t->cyc = t->phi;
  std::int64_t g = primitive_root_mod_p(p);
  if (k >= 1 && pow_mod(g, p - 1, p * p) == 1) g += p;
  t->dlog.assign(static_cast<std::size_t>(M), -1);
  std::int64_t cur = 1;
  for (std::int64_t x = 0; x < t->phi; ++x) {
    t->dlog[static_cast<std::size_t>(cur)] = static_cast<std::int32_t>(x);
    cur = static_cast<std::int64_t>((__int128)cur * g % M);
  }
  return t;
}

}  // namespace

CmfEvaluator::CmfEvaluator(CMFSpec spec, const RunConfig& cfg,
                           std::shared_ptr<const FactorSieve> sieve)
    : spec_(std::move(spec)), cfg_(cfg), sieve_(std::move(sieve)) {
  exact_ = !std::holds_alternative<ArchCharSpec>(spec_);
  if (const auto* m = std::get_if<ModDirichletSpec>(&spec_)) {
    if (m->k < 0) throw std::invalid_argument("moddirichlet: k must be >= 0");
    tables_ = build_dirichlet_tables(m->p, m->k);
    if (m->index < 0 || m->index >= tables_->phi) {
      throw std::invalid_argument("moddirichlet: character index out of range");
    }
  }
  if (const auto* r = std::get_if<RootCharSpec>(&spec_)) {
    if (r->k < 1) throw std::invalid_argument("rootchar: k must be >= 1");
  }
}

Turn CmfEvaluator::eval(const Int& n) const {
  if (n < 1) throw std::invalid_argument("eval: n must be >= 1");
  if (const auto* a = std::get_if<ArchCharSpec>(&spec_)) {
    long prec = cfg_.precision_bits;
    BigFloat turn(prec);
    if (a->pi_over_log) {
      // {t log n / (2 pi)} with t = pi / log(ratio)
      turn = BigFloat::log_int(n, prec).div(BigFloat::log_rat(a->ratio, prec).mul_long(2));
    } else {
      BigFloat two_pi = BigFloat::pi(prec).mul_long(2);
      turn = BigFloat::log_int(n, prec).mul(BigFloat::from_double(a->t_plain, prec)).div(two_pi);
    }
    return Turn::make_real(turn.frac().to_double());
  }
  if (const auto* m = std::get_if<ModDirichletSpec>(&spec_)) {
    Int p(static_cast<long>(m->p));
    Int stripped = n;
    while (mpz_divisible_p(stripped.get_mpz_t(), p.get_mpz_t())) stripped /= p;
    std::int64_t res = Int(stripped % tables_->modulus).get_si();
    if (tables_->modulus == 2) return Turn::make_exact(Rat(0));
    if (m->p == 2) {
      std::int32_t x = tables_->dlog[static_cast<std::size_t>(res)];
      std::int8_t s = tables_->sign[static_cast<std::size_t>(res)];
      require(x >= 0, "moddirichlet: residue not a unit");
      long eps = m->index / tables_->cyc;  // 0 or 1
      long e = m->index % tables_->cyc;
      Rat t = Rat(eps * s, 2) + Rat(Int(e) * x, Int(tables_->cyc));
      return Turn::make_exact(t);
    }
    std::int32_t x = tables_->dlog[static_cast<std::size_t>(res)];
    require(x >= 0, "moddirichlet: residue not a unit");
    return Turn::make_exact(Rat(Int(m->index) * x, Int(tables_->phi)));
  }
  if (const auto* r = std::get_if<RootCharSpec>(&spec_)) {
    Int p(static_cast<long>(r->p));
    Int m = n;
    long long v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      m /= p;
      ++v;
    }
    return Turn::make_exact(Rat(Int(static_cast<long>(v)), Int(2 * r->k)));
  }
  const auto& c = std::get<CustomSpec>(spec_);
  std::vector<PrimePower> fac;
  if (sieve_ && n.fits_ulong_p() && n.get_ui() <= sieve_->bound()) {
    fac = sieve_->factor(n.get_ui());
  } else {
    fac = factorize(n);
  }
  Rat total(0);
  for (const auto& pp : fac) {
    Rat t = c.default_turn;
    for (const auto& [prime, turn] : c.assignments) {
      if (prime == static_cast<std::int64_t>(pp.p)) {
        t = turn;
        break;
      }
    }
    total = total + t * Rat(pp.e);
  }
  return Turn::make_exact(total);
}

Turn CmfEvaluator::eval(std::int64_t n) const { return eval(Int(static_cast<long>(n))); }

Turn eval(const CMFSpec& spec, const Int& n, const RunConfig& cfg) {
  return CmfEvaluator(spec, cfg).eval(n);
}

CMFSpec witness_for(const MoebiusParams& params, const CaseInfo& info, const RunConfig& cfg) {
  switch (info.kind) {
    case WitnessCase::Archimedean: {
      require(params.a != params.c, "witness_for: Archimedean case requires a != c");
      return ArchCharSpec::pi_log(Rat(params.a, params.c));
    }
    case WitnessCase::PAdicEqual: {
      if (!info.p.fits_slong_p()) throw resource_limit_error("witness_for: prime too large");
      std::int64_t p = info.p.get_si();
      long long s = vp(info.p, params.b).value();
      require(s == vp(info.p, params.d).value(), "witness_for: valuations differ");
      Int pe = int_pow(info.p, static_cast<unsigned long>(s));
      Int b1 = params.b / pe;
      Int d1 = params.d / pe;
      long k = static_cast<long>(vp(info.p, Int(b1 - d1)).value());
      // First character separating b' from d' in the fixed enumeration.
      for (long idx = 1;; ++idx) {
        ModDirichletSpec cand{p, k, idx};
        CmfEvaluator ev(cand, cfg);
        Int modulus = int_pow(info.p, static_cast<unsigned long>(k + 1));
        Int rb = ((b1 % modulus) + modulus) % modulus;
        Int rd = ((d1 % modulus) + modulus) % modulus;
        Turn tb = ev.eval(rb);
        Turn td = ev.eval(rd);
        if (!(tb.q == td.q)) return cand;
        Int phi = modulus / info.p * (info.p - 1);
        require(Int(idx) < phi - 1, "witness_for: no separating character");
      }
    }
    case WitnessCase::PAdicUnequal: {
      if (!info.p.fits_slong_p()) throw resource_limit_error("witness_for: prime too large");
      return RootCharSpec{info.p.get_si(), info.k};
    }
  }
  throw std::logic_error("witness_for: unreachable");
}

namespace {

struct ParamsI64 {
  std::int64_t a, b, c, d;
};

ParamsI64 scan_params(const MoebiusParams& p, std::int64_t N) {
  if (!p.a.fits_slong_p() || !p.b.fits_slong_p() || !p.c.fits_slong_p() ||
      !p.d.fits_slong_p()) {
    throw resource_limit_error("scan: parameters exceed the machine-word range");
  }
  ParamsI64 out{p.a.get_si(), p.b.get_si(), p.c.get_si(), p.d.get_si()};
  __int128 peak = (__int128)std::max(out.a, out.c) * N +
                  std::max(out.b < 0 ? -out.b : out.b, out.d < 0 ? -out.d : out.d);
  if (peak > std::numeric_limits<std::int64_t>::max()) {
    throw resource_limit_error("scan: argument range overflows the engine");
  }
  return out;
}

std::shared_ptr<const FactorSieve> sieve_for(const CMFSpec& spec, const ParamsI64& p,
                                             std::int64_t N, const RunConfig& cfg) {
  if (!std::holds_alternative<CustomSpec>(spec)) return nullptr;
  std::int64_t hi = std::max(p.a * N + p.b, p.c * N + p.d);
  if (hi < 2) hi = 2;
  return std::make_shared<const FactorSieve>(static_cast<std::uint64_t>(hi), cfg.sieve_cap);
}

}  // namespace

DioReport dio_scan(const CMFSpec& spec, const MoebiusParams& params, std::int64_t N,
                   const RunConfig& cfg, std::int64_t lo) {
  if (N < 1 || lo < 1 || lo > N) throw std::invalid_argument("dio_scan: bad range");
  ParamsI64 p = scan_params(params, N);
  CmfEvaluator ev(spec, cfg, sieve_for(spec, p, N, cfg));

  struct Block {
    bool any = false;
    TurnDist min;
    std::int64_t argmin = 0;
    std::int64_t count = 0;
  };
  int workers = cfg.workers > 0 ? cfg.workers : omp_get_max_threads();
  std::int64_t nblocks = std::min<std::int64_t>(N - lo + 1, std::max(workers * 8, 16));
  std::int64_t span = (N - lo + 1 + nblocks - 1) / nblocks;
  std::int64_t tail_lo = std::max(lo, N / 2);

  std::vector<Block> blocks(static_cast<std::size_t>(nblocks));
  std::vector<Block> tail_blocks(static_cast<std::size_t>(nblocks));

#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (std::int64_t bi = 0; bi < nblocks; ++bi) {
    std::int64_t b_lo = lo + bi * span;
    std::int64_t b_hi = std::min(N, b_lo + span - 1);
    Block blk, tailblk;
    for (std::int64_t n = b_lo; n <= b_hi; ++n) {
      std::int64_t x = p.a * n + p.b;
      std::int64_t y = p.c * n + p.d;
      if (x < 1 || y < 1) continue;
      TurnDist d = turn_dist(ev.eval(x), ev.eval(y));
      ++blk.count;
      if (!blk.any || dist_less(d, blk.min)) {
        blk.any = true;
        blk.min = d;
        blk.argmin = n;
      }
      if (n >= tail_lo && (!tailblk.any || dist_less(d, tailblk.min))) {
        tailblk.any = true;
        tailblk.min = d;
        tailblk.argmin = n;
      }
    }
    blocks[static_cast<std::size_t>(bi)] = blk;
    tail_blocks[static_cast<std::size_t>(bi)] = tailblk;
  }

  DioReport rep;
  rep.witness = describe(spec);
  rep.lo = lo;
  rep.N = N;
  rep.exact = ev.exact();
  bool any = false, tail_any = false;
  for (std::int64_t bi = 0; bi < nblocks; ++bi) {
    const Block& blk = blocks[static_cast<std::size_t>(bi)];
    rep.valid_count += blk.count;
    if (blk.any && (!any || dist_less(blk.min, rep.min_dist))) {
      any = true;
      rep.min_dist = blk.min;
      rep.argmin = blk.argmin;
    }
    const Block& tb = tail_blocks[static_cast<std::size_t>(bi)];
    if (tb.any && (!tail_any || dist_less(tb.min, rep.tail_min_dist))) {
      tail_any = true;
      rep.tail_min_dist = tb.min;
      rep.tail_argmin = tb.argmin;
    }
  }
  if (!any) throw std::invalid_argument("dio_scan: no valid n in range");
  return rep;
}

long pigeonhole_cells(double eps) {
  if (eps <= 0) throw std::invalid_argument("pigeonhole_cells: eps must be positive");
  if (eps > 2.0) return 1;
  for (long k = 2;; ++k) {
    if (2.0 * std::sin(M_PI / static_cast<double>(k)) < eps) return k;
    if (k > 100'000'000) throw resource_limit_error("pigeonhole_cells: eps too small");
  }
}

AsetReport aset_scan(const std::vector<CMFSpec>& specs, double eps,
                     const MoebiusParams& params, std::int64_t N, const RunConfig& cfg) {
  if (specs.empty()) throw std::invalid_argument("aset_scan: needs at least one function");
  if (N < 10) throw std::invalid_argument("aset_scan: N too small");
  ParamsI64 p = scan_params(params, N);
  std::vector<CmfEvaluator> evs;
  evs.reserve(specs.size());
  for (const auto& s : specs) evs.emplace_back(s, cfg, sieve_for(s, p, N, cfg));

  AsetReport rep;
  for (const auto& s : specs) rep.witnesses.push_back(describe(s));
  rep.eps = eps;
  rep.N = N;
  rep.cell_count = pigeonhole_cells(eps);

  int workers = cfg.workers > 0 ? cfg.workers : omp_get_max_threads();
  for (int blk = 0; blk < 10; ++blk) {
    std::int64_t b_lo = blk * N / 10 + 1;
    std::int64_t b_hi = (blk + 1) * N / 10;
    std::int64_t count = 0;
#pragma omp parallel for schedule(static) reduction(+ : count) num_threads(workers)
    for (std::int64_t n = b_lo; n <= b_hi; ++n) {
      std::int64_t x = p.a * n + p.b;
      std::int64_t y = p.c * n + p.d;
      if (x < 1 || y < 1) continue;
      bool all = true;
      for (const auto& ev : evs) {
        if (turn_dist(ev.eval(x), ev.eval(y)).gap() >= eps) {
          all = false;
          break;
        }
      }
      if (all) ++count;
    }
    rep.block_counts[static_cast<std::size_t>(blk)] = count;
    rep.count += count;
  }
  rep.density = static_cast<double>(rep.count) / static_cast<double>(N);

  // The provable lower bound involves clique-guarantee window lengths whose
  // values are factorial towers; report it symbolically.
  Classification cls = classify(params);
  if (cls.verdict == Verdict::Recurrent && cls.reduction) {
    const ReductionCert& red = *cls.reduction;
    double r = static_cast<double>(specs.size());
    std::string s_str;
    if (r * std::log10(static_cast<double>(rep.cell_count)) < 15) {
      Int cells(static_cast<long>(rep.cell_count));
      Int s = int_pow(cells, static_cast<unsigned long>(specs.size())) + 1;
      s_str = s.get_str();
    } else {
      s_str = std::to_string(rep.cell_count) + "^" + std::to_string(specs.size()) + "+1";
    }
    rep.symbolic_lower_bound =
        "density >= 1/(C*H_s^2) with C=" + red.C.get_str() + ", s=" + s_str +
        ", H_2=A+B=" + Int(red.A + red.B).get_str() +
        ", H_{j+1}=2*A*B*(M_j+H_j)!, M_j=prod_{h=1..H_j}(B*h+1), A=" + red.A.get_str() +
        ", B=" + red.B.get_str();
  }
  return rep;
}

PigeonholeReport pigeonhole_pairs(const std::vector<CMFSpec>& specs, double eps,
                                  const MoebiusParams& params,
                                  const std::vector<std::pair<std::int64_t, std::int64_t>>& windows,
                                  const RunConfig& cfg) {
  if (specs.empty()) throw std::invalid_argument("pigeonhole_pairs: needs functions");
  Classification cls = classify(params);
  if (cls.verdict != Verdict::Recurrent) {
    throw std::invalid_argument("pigeonhole_pairs: requires recurrent parameters");
  }
  PigeonholeReport rep;
  rep.cell_count = pigeonhole_cells(eps);

  double digits = static_cast<double>(specs.size()) *
                  std::log10(static_cast<double>(rep.cell_count));
  std::size_t needed = 0;
  bool needed_overflow = digits >= 9;
  if (!needed_overflow) {
    needed = 1;
    for (std::size_t i = 0; i < specs.size(); ++i) {
      needed *= static_cast<std::size_t>(rep.cell_count);
    }
    needed += 1;
  }

  for (const auto& [lo, hi] : windows) {
    PigeonholeEntry entry;
    entry.lo = lo;
    entry.hi = hi;
    entry.needed = needed_overflow ? 0 : needed;
    WindowGraph g = build_window(params, lo, hi, cfg);

    ParamsI64 pw = scan_params(params, hi);
    std::vector<CmfEvaluator> evs;
    std::int64_t arg_hi = std::max(pw.a * hi + pw.b, pw.c * hi + pw.d);
    for (const auto& s : specs) {
      std::shared_ptr<const FactorSieve> sieve;
      if (std::holds_alternative<CustomSpec>(s)) {
        sieve = std::make_shared<const FactorSieve>(
            static_cast<std::uint64_t>(std::max<std::int64_t>(arg_hi, hi)), cfg.sieve_cap);
      }
      evs.emplace_back(s, cfg, sieve);
    }
    auto cells_of = [&](std::int64_t v) {
      std::vector<long> cells;
      for (const auto& ev : evs) {
        Turn t = ev.eval(v);
        long c;
        if (t.exact) {
          c = static_cast<long>(Int((t.q * Rat(rep.cell_count)).floor()).get_si());
        } else {
          c = static_cast<long>(std::floor(t.x * static_cast<double>(rep.cell_count)));
        }
        if (c >= rep.cell_count) c = rep.cell_count - 1;
        cells.push_back(c + 1);
      }
      return cells;
    };

    std::optional<std::vector<std::int64_t>> clique;
    if (!needed_overflow && needed <= static_cast<std::size_t>(hi - lo + 1)) {
      clique = find_clique_of_size(g, needed);
    }
    if (clique) {
      entry.clique_size = clique->size();
      std::vector<std::vector<long>> colors;
      for (std::int64_t v : *clique) colors.push_back(cells_of(v));
      for (std::size_t i = 0; i < clique->size() && !entry.found; ++i) {
        for (std::size_t j = i + 1; j < clique->size(); ++j) {
          if (colors[i] == colors[j]) {
            auto w = adjacent(params, Int(static_cast<long>((*clique)[j])),
                              Int(static_cast<long>((*clique)[i])));
            require(w.has_value(), "pigeonhole: clique pair not adjacent");
            entry.found = true;
            entry.full_pigeonhole = true;
            if (w->first_over_second) {
              entry.x = (*clique)[j];
              entry.y = (*clique)[i];
            } else {
              entry.x = (*clique)[i];
              entry.y = (*clique)[j];
            }
            entry.witness = w->n;
            break;
          }
        }
      }
      require(entry.found, "pigeonhole: clique of required size had no repeated color");
    } else {
      // The required clique is out of reach here; scan the window's edges for
      // a same-colored adjacent pair anyway.
      CliqueSearchResult mc = max_cliques(g);
      entry.clique_size = mc.omega;
      for (const auto& e : g.edges()) {
        if (cells_of(e.u) == cells_of(e.v)) {
          entry.found = true;
          entry.full_pigeonhole = false;
          if (e.v_over_u) {
            entry.x = e.v;
            entry.y = e.u;
          } else {
            entry.x = e.u;
            entry.y = e.v;
          }
          entry.witness = Int(static_cast<long>(e.witness));
          break;
        }
      }
      entry.note = entry.found
                       ? "clique of required size unavailable in this window; pair found by direct scan"
                       : "no same-colored adjacent pair found in this window";
    }
    rep.entries.push_back(std::move(entry));
  }
  return rep;
}

}  // namespace mulrec
