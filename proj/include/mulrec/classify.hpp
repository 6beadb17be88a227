#pragma once

#include <optional>

#include "mulrec/cliques.hpp"
#include "mulrec/colorings.hpp"
#include "mulrec/multfun.hpp"
#include "mulrec/ratio_sets.hpp"

namespace mulrec {

enum class Verdict { Empty, Recurrent, NonRecurrent };

// Negative-case certificate bundle: the applicable case, a proper coloring
// with its color-count bound, and a unit-modulus completely multiplicative
// witness whose gap stays away from zero.
struct NonRecurrentInfo {
  CaseInfo case_info;
  ColoringSpec coloring;
  CMFSpec witness;
  Int chromatic_upper_bound;
};

struct Classification {
  Verdict verdict;
  std::optional<ReductionCert> reduction;  // present iff Recurrent
  std::optional<NonRecurrentInfo> nr;      // present iff NonRecurrent
};

// Decision procedure: Empty iff (a,b) = (c,d); Recurrent iff a = c and
// a | lcm0(b,d); otherwise the certificate case is picked by the smallest
// prime p with v_p(a) > max(v_p(b), v_p(d)) (or the Archimedean route when
// a != c).
Classification classify(const MoebiusParams& params,
                        const RunConfig& cfg = default_config());

std::string verdict_name(Verdict v);
std::string case_name(WitnessCase c);

}  // namespace mulrec
