#pragma once

#include <optional>
#include <vector>

#include "mulrec/ratio_sets.hpp"

namespace mulrec {

// Result of stripping common factors and ordering b > d; the underlying graph
// is unchanged by both steps.
struct NormalizeResult {
  Int a, b, d;   // normalized: b > d, gcd(a, b-d) = 1, a | lcm0(b, d)
  Int g;         // common factor removed
  bool swapped;  // b and d were exchanged
};

// Affine embedding certificate: with A = B(B-1) and n = C m + D, the value of
// (a n + b)/(a n + d) equals (A m + B)/(A m + (B-1)) for every m >= 1.
struct ReductionCert {
  Int orig_a, orig_b, orig_d;  // as given, before normalization
  Int a, b, d;                 // normalized parameters the recipe ran on
  Int g;
  bool swapped;
  Int j, kBez;  // a*j + (b-d)*kBez = 1 with b*j <= 0
  Int T;        // least T >= 0 with B = a*T + b*kBez >= 2
  Int A, B, J;  // A = B(B-1) = J*a
  Int C, D;     // n = C*m + D
};

// One level of the recursive clique construction for (a, b, a, b-1), a = b(b-1).
struct BuildLevel {
  int k;               // clique size produced at this level
  Int window_len;      // H: every window of this length contains a k-clique
  Int factor_product;  // M = prod_{h=1..H_prev}(b h + 1); 0 at the base level
  Int residue;         // r = (M - 1)/b; 0 at the base level
  Int step;            // n-index spacing b*Phi; 0 at the base level
  bool factorial_step = false;  // Phi was (M + H_prev)!; otherwise an exact lcm
  Int ell;             // placement index chosen; 0 at the base level
  std::vector<Int> offsets;  // vertex offsets within the window
};

struct CliquePair {
  std::size_t i, j;  // i < j
  Int witness;
  bool j_over_i;  // vertices[j]/vertices[i] is the set member (else the reverse)
};

// Self-contained clique certificate: vertices plus one exact witness per pair.
struct CliqueCert {
  MoebiusParams params;
  std::vector<Int> vertices;  // strictly increasing
  std::vector<CliquePair> pairs;
  Int base;  // all vertices exceed base
  std::vector<BuildLevel> levels;
  std::optional<ReductionCert> reduction;
};

NormalizeResult normalize(const Int& a, const Int& b, const Int& d);

// Runs the deterministic reduction recipe on normalized parameters and checks
// the embedding identity for m = 1..100 before returning.
ReductionCert reduce(const Int& a, const Int& b, const Int& d);

// k pairwise-adjacent vertices of the (b(b-1), b, b(b-1), b-1) graph inside
// (base, base + H_k].
CliqueCert construct_clique(const Int& b, int k, const Int& base,
                            const RunConfig& cfg = default_config());

// normalize -> reduce -> construct, re-verified against the original
// parameters (a, b, a, d). All vertices exceed base.
CliqueCert big_clique(const Int& a, const Int& b, const Int& d, int k,
                      const RunConfig& cfg = default_config(), const Int& base = Int(0));

// Exact pairwise re-verification; throws verification_error on any failure.
void verify_clique_cert(const CliqueCert& cert);
void verify_reduction_cert(const ReductionCert& cert, int upto = 100);

// Builds the pair list for a vertex set by solving each ratio exactly.
CliqueCert make_clique_cert(const MoebiusParams& params, std::vector<Int> vertices);

// Human-readable recurrence for the window length at a given level, for
// reports where the value itself is not computable.
std::string symbolic_window_length(const Int& a, const Int& b, long level);

}  // namespace mulrec
