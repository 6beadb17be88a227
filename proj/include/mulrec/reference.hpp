#pragma once

#include "mulrec/graph.hpp"
#include "mulrec/multfun.hpp"

namespace mulrec {
namespace ref {

// Straight-line serial implementations kept as oracles for the parallel
// kernels. They share no code with the kernel paths beyond the domain types.

// All-pairs membership test over the window.
WindowGraph build_window_allpairs(const MoebiusParams& params, std::int64_t lo,
                                  std::int64_t hi);

// Single pass over edges, one color evaluation per endpoint visit.
ColoringCheck verify_coloring_serial(const WindowGraph& g, const ColoringSpec& spec,
                                     const RunConfig& cfg = default_config());

DioReport dio_scan_serial(const CMFSpec& spec, const MoebiusParams& params,
                          std::int64_t N, const RunConfig& cfg = default_config(),
                          std::int64_t lo = 1);

AsetReport aset_scan_serial(const std::vector<CMFSpec>& specs, double eps,
                            const MoebiusParams& params, std::int64_t N,
                            const RunConfig& cfg = default_config());

// Exhaustive clique number by subset extension; only for small windows.
std::size_t omega_exhaustive(const WindowGraph& g, std::size_t cap = 8);

}  // namespace ref
}  // namespace mulrec
