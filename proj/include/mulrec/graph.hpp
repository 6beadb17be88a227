#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "mulrec/cliques.hpp"
#include "mulrec/colorings.hpp"
#include "mulrec/ratio_sets.hpp"

namespace mulrec {

// Orientation and witness proving two integers adjacent: first/second is the
// set member when first_over_second, else second/first.
struct PairWitness {
  Int n;
  bool first_over_second;
};

std::optional<PairWitness> adjacent(const MoebiusParams& params, const Int& m, const Int& n);

struct WindowEdge {
  std::int64_t u, v;  // u < v
  std::int64_t witness;
  bool v_over_u;  // v/u is the set member (else u/v)

  friend bool operator==(const WindowEdge& x, const WindowEdge& y) {
    return x.u == y.u && x.v == y.v && x.witness == y.witness && x.v_over_u == y.v_over_u;
  }
};

// Arithmetic graph restricted to the vertex window [lo, hi]; edges sorted by
// (u, v). Adjacency lists are built on demand for clique operations.
class WindowGraph {
 public:
  WindowGraph(MoebiusParams params, std::int64_t lo, std::int64_t hi,
              std::vector<WindowEdge> edges);

  const MoebiusParams& params() const { return params_; }
  std::int64_t lo() const { return lo_; }
  std::int64_t hi() const { return hi_; }
  std::int64_t width() const { return hi_ - lo_ + 1; }
  const std::vector<WindowEdge>& edges() const { return edges_; }

  // Sorted neighbor list of an absolute vertex id.
  const std::vector<std::int64_t>& neighbors(std::int64_t vertex) const;

 private:
  void ensure_adjacency() const;
  MoebiusParams params_;
  std::int64_t lo_, hi_;
  std::vector<WindowEdge> edges_;
  mutable std::vector<std::vector<std::int64_t>> adj_;
  mutable bool adj_built_ = false;
};

// Witness-enumeration construction: every edge family {g*den, g*num} of each
// attained reduced value is intersected with the window. OpenMP across the
// witness range.
WindowGraph build_window(const MoebiusParams& params, std::int64_t lo, std::int64_t hi,
                         const RunConfig& cfg = default_config());

struct CliqueSearchResult {
  std::size_t omega = 0;
  std::vector<std::vector<std::int64_t>> cliques;  // each ascending; list lexicographic
};

// Exact maximum cliques via branch-and-bound with pivoting. size_limit > 0
// stops at the first clique of at least that size.
CliqueSearchResult max_cliques(const WindowGraph& g, std::size_t size_limit = 0);

// First clique of exactly the requested size, if one exists.
std::optional<std::vector<std::int64_t>> find_clique_of_size(const WindowGraph& g,
                                                             std::size_t size);

struct ColoringCheck {
  std::vector<WindowEdge> violations;       // same color on both endpoints
  std::vector<WindowEdge> ambiguous_edges;  // an endpoint could not be colored
  std::int64_t ambiguous_vertices = 0;
  std::int64_t colored_vertices = 0;
};

// Checks every edge of the window; colors are computed once per incident
// vertex (OpenMP across vertices).
ColoringCheck verify_coloring(const WindowGraph& g, const ColoringSpec& spec,
                              const RunConfig& cfg = default_config());

std::size_t omega_window(const MoebiusParams& params, std::int64_t lo, std::int64_t hi,
                         const RunConfig& cfg = default_config());

std::size_t greedy_chi_upper(const WindowGraph& g);

// One "m n witness" triple per line.
void export_edges(const WindowGraph& g, std::ostream& out);

}  // namespace mulrec
