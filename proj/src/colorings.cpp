#include "mulrec/colorings.hpp"

#include <algorithm>
#include <optional>

#include "mulrec/bigfloat.hpp"

namespace mulrec {

namespace {

// One placement attempt at a fixed precision. Succeeds when the fractional
// part of log n / log(alpha beta) sits clearly inside a cell: more than 2^-32
// (in turn units) away from both boundaries.
std::optional<long long> try_place(const Rat& prod, long k, const Int& n, long prec) {
  BigFloat x = BigFloat::log_int(n, prec).div(BigFloat::log_rat(prod, prec));
  BigFloat pos = x.frac().mul_long(k);  // in [0, k)
  Int cell = pos.floor_int();
  if (cell < 0 || cell >= k) return std::nullopt;  // rounding artifact: escalate
  long long j = cell.get_si();
  BigFloat d_lo = pos.sub(BigFloat::from_long(static_cast<long>(j), prec));
  BigFloat d_hi = BigFloat::from_long(1, prec).sub(d_lo);
  BigFloat thr = BigFloat::from_long(k, prec).mul_2exp(-32);
  if (d_lo.cmp(thr) > 0 && d_hi.cmp(thr) > 0) return j + 1;
  return std::nullopt;
}

// Exact boundary test: frac(log n / log P) lies on a cell boundary iff
// n^k is an integer power of P, which requires P integral (or n = 1).
std::optional<long long> exact_boundary(const Rat& prod, long k, const Int& n) {
  if (prod.den() != 1) return std::nullopt;
  Int target = int_pow(n, static_cast<unsigned long>(k));
  Int pw = 1;
  unsigned long e = 0;
  while (pw < target) {
    pw *= prod.num();
    ++e;
  }
  if (pw != target) return std::nullopt;
  // log n / log P = e/k exactly; the cell is left-closed at the boundary.
  return static_cast<long long>(e % static_cast<unsigned long>(k)) + 1;
}

// Working precision never drops below 128 bits, so the 2^-32 safety margin
// dwarfs the evaluation error.
long base_precision(const RunConfig& cfg) { return std::max(cfg.precision_bits, 128L); }

ColorValue arch_color(const ArchimedeanSpec& s, const Int& n, const RunConfig& cfg) {
  if (n == 1) return {1, false};  // {t log 1} = 0 exactly
  Rat prod = s.alpha * s.beta;
  long base = base_precision(cfg);
  if (auto c = try_place(prod, s.k, n, base)) return {*c, false};
  if (auto c = exact_boundary(prod, s.k, n)) return {*c, false};
  for (long prec = base * 2; prec <= cfg.precision_max_bits; prec *= 2) {
    if (auto c = try_place(prod, s.k, n, prec)) return {*c, false};
  }
  return {0, true};
}

long long padic_color(const PAdicSpec& s, const Int& n) {
  Int modulus = int_pow(s.p, static_cast<unsigned long>(s.k + 1));
  if (!modulus.fits_slong_p()) {
    throw resource_limit_error("padic coloring: modulus exceeds the machine-word range");
  }
  Int m = n;
  while (mpz_divisible_p(m.get_mpz_t(), s.p.get_mpz_t())) m /= s.p;
  Int r = m % modulus;
  return r.get_si();
}

long long parity_color(const ParitySpec& s, const Int& n) {
  Int m = n;
  long long v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), s.p.get_mpz_t())) {
    m /= s.p;
    ++v;
  }
  return (v / s.k) % 2;
}

}  // namespace

ColorValue color(const ColoringSpec& spec, const Int& n, const RunConfig& cfg) {
  if (n < 1) throw std::invalid_argument("color: n must be >= 1");
  if (const auto* a = std::get_if<ArchimedeanSpec>(&spec)) return arch_color(*a, n, cfg);
  if (const auto* p = std::get_if<PAdicSpec>(&spec)) return {padic_color(*p, n), false};
  return {parity_color(std::get<ParitySpec>(spec), n), false};
}

struct ColorEngine::Impl {
  ColoringSpec spec;
  RunConfig cfg;
  // archimedean constants at the base precision
  Rat prod{0};
  BigFloat ln_prod;
  long cells = 0;
  // residue coloring constants
  Int modulus;

  Impl(ColoringSpec s, const RunConfig& c) : spec(std::move(s)), cfg(c), ln_prod(8) {
    if (const auto* a = std::get_if<ArchimedeanSpec>(&spec)) {
      prod = a->alpha * a->beta;
      cells = a->k;
      ln_prod = BigFloat::log_rat(prod, base_precision(cfg));
    } else if (const auto* p = std::get_if<PAdicSpec>(&spec)) {
      modulus = int_pow(p->p, static_cast<unsigned long>(p->k + 1));
      if (!modulus.fits_slong_p()) {
        throw resource_limit_error("padic coloring: modulus exceeds the machine-word range");
      }
    }
  }
};

ColorEngine::ColorEngine(ColoringSpec spec, const RunConfig& cfg)
    : impl_(std::make_unique<Impl>(std::move(spec), cfg)) {}

ColorEngine::~ColorEngine() = default;

ColorValue ColorEngine::operator()(const Int& n) const {
  if (n < 1) throw std::invalid_argument("color: n must be >= 1");
  const Impl& im = *impl_;
  if (std::holds_alternative<ArchimedeanSpec>(im.spec)) {
    if (n == 1) return {1, false};
    // fast path at the base precision with the cached log
    long prec = base_precision(im.cfg);
    BigFloat x = BigFloat::log_int(n, prec).div(im.ln_prod);
    BigFloat pos = x.frac().mul_long(im.cells);
    Int cell = pos.floor_int();
    if (cell >= 0 && cell < im.cells) {
      long long j = cell.get_si();
      BigFloat d_lo = pos.sub(BigFloat::from_long(static_cast<long>(j), prec));
      BigFloat d_hi = BigFloat::from_long(1, prec).sub(d_lo);
      BigFloat thr = BigFloat::from_long(im.cells, prec).mul_2exp(-32);
      if (d_lo.cmp(thr) > 0 && d_hi.cmp(thr) > 0) return {j + 1, false};
    }
    return color(im.spec, n, im.cfg);  // boundary handling and escalation
  }
  if (const auto* p = std::get_if<PAdicSpec>(&im.spec)) {
    Int m = n;
    while (mpz_divisible_p(m.get_mpz_t(), p->p.get_mpz_t())) m /= p->p;
    Int r = m % im.modulus;
    return {r.get_si(), false};
  }
  return {parity_color(std::get<ParitySpec>(im.spec), n), false};
}

long archimedean_cell_count(const Rat& alpha, const Rat& beta) {
  if (!(Rat(1) < alpha && alpha < beta)) {
    throw std::invalid_argument("archimedean_cell_count: requires 1 < alpha < beta");
  }
  Rat target = alpha * beta;
  Rat pw = alpha;
  long k = 1;
  while (pw < target) {
    pw = pw * alpha;
    ++k;
  }
  return k;
}

ColoringSpec derive_spec(const CaseInfo& info, const MoebiusParams& params) {
  switch (info.kind) {
    case WitnessCase::Archimedean: {
      RangeBounds rb = range_bounds(params);
      long k = archimedean_cell_count(rb.alpha, rb.beta);
      return ArchimedeanSpec{rb.alpha, rb.beta, k};
    }
    case WitnessCase::PAdicEqual: {
      long k = static_cast<long>(vp(info.p, Int(params.b - params.d)).value());
      return PAdicSpec{info.p, k};
    }
    case WitnessCase::PAdicUnequal: {
      long long db = vp(info.p, params.b).value();
      long long dd = vp(info.p, params.d).value();
      long k = static_cast<long>(db > dd ? db - dd : dd - db);
      return ParitySpec{info.p, k};
    }
  }
  throw std::logic_error("derive_spec: unreachable");
}

Int color_count(const ColoringSpec& spec) {
  if (const auto* a = std::get_if<ArchimedeanSpec>(&spec)) return Int(a->k);
  if (const auto* p = std::get_if<PAdicSpec>(&spec)) {
    return int_pow(p->p, static_cast<unsigned long>(p->k)) * (p->p - 1);
  }
  return Int(2);
}

std::string describe(const ColoringSpec& spec) {
  if (const auto* a = std::get_if<ArchimedeanSpec>(&spec)) {
    return "archimedean alpha=" + a->alpha.str() + " beta=" + a->beta.str() +
           " k=" + std::to_string(a->k);
  }
  if (const auto* p = std::get_if<PAdicSpec>(&spec)) {
    return "padic p=" + p->p.get_str() + " k=" + std::to_string(p->k);
  }
  const auto& q = std::get<ParitySpec>(spec);
  return "parity p=" + q.p.get_str() + " k=" + std::to_string(q.k);
}

}  // namespace mulrec
