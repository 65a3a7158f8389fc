#pragma once

// Interval-set data model, its symbolic encoding as characteristic functions
// over vertex labels, the label-ordered adjacency matrix, and small explicit
// algorithms used as cross-checks.

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <utility>
#include <vector>

#include "igbdd/obdd.hpp"

namespace igbdd {

/// A family of N open intervals with integer endpoints, sorted by left
/// endpoint. Labels are positions in this order.
struct IntervalSet {
  std::vector<std::pair<long long, long long>> intervals;  // (a_i, b_i)
  bool unit = false;  // realizable with unit lengths: no containment

  std::size_t size() const { return intervals.size(); }

  /// Throws DomainError unless: every a_i < b_i, all 2N endpoints are
  /// pairwise distinct, left endpoints ascend, and for unit families the
  /// right endpoints ascend as well (no interval contains another).
  void validate() const;
};

/// chi_E over two n-bit label vectors (x = vector 0, y = vector 1) and chi_V
/// over x, in a dedicated two-vector store.
struct SymbolicGraph {
  std::shared_ptr<Store> store;
  NodeRef chi_E = kFalse;
  NodeRef chi_V = kFalse;
  unsigned n = 0;            // bits per label
  std::size_t vertices = 0;  // N
};

/// For each label i, the largest label whose interval starts before b_i;
/// the neighbors of i among later labels are exactly i+1 .. reach[i].
std::vector<std::size_t> neighbor_reach(const IntervalSet& iv);

/// chi_E(x,y) over the given argument vectors of an arbitrary structured
/// store: 1 iff the intervals of labels |x| and |y| intersect and |x| != |y|.
/// Built from one neighbor-range predicate per label, OR-accumulated over
/// aligned label blocks, plus the mirrored direction.
NodeRef encode_edges(Store& s, const IntervalSet& iv, unsigned x_vec, unsigned y_vec);

/// chi_V(x) = (|x| < N) over the given argument vector.
NodeRef encode_vertices(Store& s, const IntervalSet& iv, unsigned x_vec);

/// Packages both characteristic functions in a fresh two-vector store with
/// max(1, ceil(log2 N)) bits per vector.
SymbolicGraph encode(const IntervalSet& iv);

/// Full 2^n x 2^n adjacency matrix in label significance order.
struct PiMatrix {
  unsigned n = 0;
  std::vector<std::vector<bool>> a;  // a[row][col]
};

/// Evaluates chi_E everywhere. Refuses n beyond the cap (matrices get big).
PiMatrix extract_pi_matrix(const SymbolicGraph& g, unsigned cap = 12);

/// Number of distinct 2^(n-k) x 2^(n-k) blocks when the matrix is cut into
/// 2^k x 2^k aligned tiles.
std::uint64_t count_distinct_blocks(const PiMatrix& m, unsigned k);

/// Maximum matching of a unit family: pairs consecutive labels per connected
/// component by a left-to-right scan. Throws unless iv.unit.
std::vector<std::pair<unsigned, unsigned>> explicit_max_matching(const IntervalSet& iv);

struct GreedyColoring {
  std::vector<std::uint64_t> color;  // per label
  std::uint64_t colors_used = 0;     // equals the maximum point overlap
};

/// Sequential coloring in label order, reusing the most recently freed color
/// first. Optimal on interval families.
GreedyColoring explicit_greedy_coloring(const IntervalSet& iv);

/// Text format: optional '#' comment lines, a header "N unit|general", then
/// N lines "a b" in ascending a order.
IntervalSet read_intervals(std::istream& in);
void write_intervals(std::ostream& out, const IntervalSet& iv);

}  // namespace igbdd
