#pragma once

#include <memory>
#include <variant>

#include "mulrec/ratio_sets.hpp"

namespace mulrec {

// Which chromatic-bound route applies to a non-recurrent parameter set.
enum class WitnessCase { Archimedean, PAdicEqual, PAdicUnequal };

struct CaseInfo {
  WitnessCase kind;
  Int p;   // meaningful for the p-adic cases
  long k;  // v_p(b-d) (equal case) or |v_p(b)-v_p(d)| (unequal case)
};

// Level-set coloring of n -> n^{it} with t = 1/log(alpha beta), k cells.
struct ArchimedeanSpec {
  Rat alpha, beta;
  long k;
};

// Colors are the units modulo p^{k+1}; the color of n is the residue of n
// with all factors of p stripped.
struct PAdicSpec {
  Int p;
  long k;
};

// Two colors: floor(v_p(n)/k) mod 2.
struct ParitySpec {
  Int p;
  long k;
};

using ColoringSpec = std::variant<ArchimedeanSpec, PAdicSpec, ParitySpec>;

// Archimedean colors are 1..k; p-adic colors are unit residues; parity is 0/1.
// ambiguous is set only when the Archimedean fractional part cannot be placed
// at the configured precision ceiling (never a silent mis-color).
struct ColorValue {
  long long color;
  bool ambiguous;
};

ColorValue color(const ColoringSpec& spec, const Int& n,
                 const RunConfig& cfg = default_config());

// Per-spec evaluation context caching the derived constants (the logarithm of
// alpha*beta, the residue modulus). Read-only after construction; safe to
// share across threads.
class ColorEngine {
 public:
  ColorEngine(ColoringSpec spec, const RunConfig& cfg = default_config());
  ~ColorEngine();
  ColorEngine(const ColorEngine&) = delete;
  ColorEngine& operator=(const ColorEngine&) = delete;
  ColorValue operator()(const Int& n) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Smallest k with alpha^k >= alpha*beta, computed exactly.
long archimedean_cell_count(const Rat& alpha, const Rat& beta);

// Coloring recipe for a non-recurrent case.
ColoringSpec derive_spec(const CaseInfo& info, const MoebiusParams& params);

// Number of colors the spec can use (p^k (p-1) for p-adic, 2 for parity, k cells).
Int color_count(const ColoringSpec& spec);

std::string describe(const ColoringSpec& spec);

}  // namespace mulrec
