#pragma once

#include <array>
#include <memory>
#include <variant>
#include <vector>

#include "mulrec/colorings.hpp"
#include "mulrec/graph.hpp"
#include "mulrec/ratio_sets.hpp"

namespace mulrec {

// Angle as a fraction of a full circle. Exact turns support exact arithmetic
// with roots of unity; real turns carry a rounded high-precision value.
struct Turn {
  bool exact;
  Rat q;     // in [0, 1) when exact
  double x;  // in [0, 1) when real

  static Turn make_exact(const Rat& v);
  static Turn make_real(double v);
};

Turn turn_add(const Turn& s, const Turn& t);
Turn turn_scale(const Turn& s, long long e);

// Distance to the nearest integer of the turn difference, in [0, 1/2].
struct TurnDist {
  bool exact = true;
  Rat dq;
  double dx = 0.0;
  double gap() const;  // |e^{2 pi i s} - e^{2 pi i t}| = 2 sin(pi d)
};

TurnDist turn_dist(const Turn& s, const Turn& t);
bool dist_less(const TurnDist& a, const TurnDist& b);

// f(n) = n^{it}; t is either a plain value or pi / log(ratio).
struct ArchCharSpec {
  bool pi_over_log;
  double t_plain;
  Rat ratio;
  static ArchCharSpec plain(double t) { return {false, t, Rat(1)}; }
  static ArchCharSpec pi_log(const Rat& ratio) { return {true, 0.0, ratio}; }
};

// Character of the units modulo p^{k+1}, re-defined to take value 1 at p.
// index enumerates the character group in a fixed coordinate order.
struct ModDirichletSpec {
  std::int64_t p;
  long k;
  long index;
};

// f(p) is the primitive 2k-th root of unity e^{i pi / k}; f(q) = 1 otherwise.
struct RootCharSpec {
  std::int64_t p;
  long k;
};

// Arbitrary turns on finitely many primes, a default elsewhere.
struct CustomSpec {
  std::vector<std::pair<std::int64_t, Rat>> assignments;  // prime -> turn
  Rat default_turn = Rat(0);
};

using CMFSpec = std::variant<ArchCharSpec, ModDirichletSpec, RootCharSpec, CustomSpec>;

std::string describe(const CMFSpec& spec);

// Evaluation context: prebuilt character tables and an optional factor sieve
// for bulk evaluation. Read-only after construction.
class CmfEvaluator {
 public:
  CmfEvaluator(CMFSpec spec, const RunConfig& cfg = default_config(),
               std::shared_ptr<const FactorSieve> sieve = nullptr);
  Turn eval(const Int& n) const;
  Turn eval(std::int64_t n) const;
  bool exact() const { return exact_; }
  const CMFSpec& spec() const { return spec_; }

  struct Tables;  // character-group coordinates; exposed for the builder

 private:
  CMFSpec spec_;
  RunConfig cfg_;
  std::shared_ptr<const FactorSieve> sieve_;
  std::shared_ptr<const Tables> tables_;
  bool exact_;
};

Turn eval(const CMFSpec& spec, const Int& n, const RunConfig& cfg = default_config());

// Witness construction for a non-recurrent case. The Archimedean route uses
// t = pi / log(a/c); the p-adic routes pick the first separating character
// or the 2k-th-root character.
CMFSpec witness_for(const MoebiusParams& params, const CaseInfo& info,
                    const RunConfig& cfg = default_config());

struct DioReport {
  std::string witness;
  std::int64_t lo = 1, N = 0;
  std::int64_t valid_count = 0;
  bool exact = false;
  TurnDist min_dist;
  std::int64_t argmin = 0;
  TurnDist tail_min_dist;  // over [max(lo, N/2), N]
  std::int64_t tail_argmin = 0;
};

// Minimum of |f(a n + b) - f(c n + d)| over valid n in [lo, N], plus the tail
// minimum for liminf evidence. OpenMP over blocks, merged in block order.
DioReport dio_scan(const CMFSpec& spec, const MoebiusParams& params, std::int64_t N,
                   const RunConfig& cfg = default_config(), std::int64_t lo = 1);

struct AsetReport {
  std::vector<std::string> witnesses;
  double eps = 0;
  std::int64_t N = 0;
  std::int64_t count = 0;
  double density = 0;
  std::array<std::int64_t, 10> block_counts{};
  long cell_count = 0;              // k derived from eps
  std::string symbolic_lower_bound;  // factorial expression; not evaluated
};

AsetReport aset_scan(const std::vector<CMFSpec>& specs, double eps,
                     const MoebiusParams& params, std::int64_t N,
                     const RunConfig& cfg = default_config());

// Smallest usable cell count: 1 when eps > 2, else least k >= 2 with
// 2 sin(pi/k) < eps.
long pigeonhole_cells(double eps);

struct PigeonholeEntry {
  std::int64_t lo = 0, hi = 0;
  bool found = false;            // a same-colored adjacent pair was produced
  bool full_pigeonhole = false;  // a clique of the required size forced it
  std::int64_t x = 0, y = 0;     // x/y = (a n + b)/(c n + d)
  Int witness;
  std::size_t clique_size = 0;
  std::size_t needed = 0;
  std::string note;
};

struct PigeonholeReport {
  long cell_count = 0;
  std::vector<PigeonholeEntry> entries;
};

// For each window: find a clique of size k^r + 1, color vertices by the
// r-tuple of turn cells, and return a same-colored adjacent pair. When the
// clique is unavailable at this scale, the window's edges are scanned for a
// same-colored pair anyway and the shortfall is reported.
PigeonholeReport pigeonhole_pairs(const std::vector<CMFSpec>& specs, double eps,
                                  const MoebiusParams& params,
                                  const std::vector<std::pair<std::int64_t, std::int64_t>>& windows,
                                  const RunConfig& cfg = default_config());

}  // namespace mulrec
