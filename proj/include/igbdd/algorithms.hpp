#pragma once

// Symbolic graph algorithms over characteristic functions: transitive
// closure by iterative squaring, rank enumeration for strict orders,
// maximum matching on unit interval graphs, and optimal coloring for unit
// and general interval graphs. Every operation runs in a store created by
// make_relation_store() and reports its cost through the store's counters.

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "igbdd/intervals.hpp"
#include "igbdd/obdd.hpp"

namespace igbdd {

// Fixed argument-vector layout of the relation store. Relations live over
// (kX, kY); rank relations over (kX, kL); everything else is scratch space
// for quantified intermediates. One shared layout keeps synthesis sizes
// stable across the algorithms.
namespace slots {
inline constexpr unsigned kX = 0;
inline constexpr unsigned kY = 1;
inline constexpr unsigned kZ = 2;
inline constexpr unsigned kW = 3;
inline constexpr unsigned kL = 4;
inline constexpr unsigned kL1 = 5;
inline constexpr unsigned kL2 = 6;
inline constexpr unsigned kZ2 = 7;
inline constexpr unsigned kCount = 8;
}  // namespace slots

/// Store with slots::kCount argument vectors of n bits each under the
/// interleaved decreasing-significance order.
std::shared_ptr<Store> make_relation_store(unsigned n);

/// Reflexive-transitive closure of a relation over (kX, kY), computed by
/// n+1 squaring rounds; O(n^2) functional operations.
NodeRef transitive_closure(Store& s, NodeRef relation);

/// Ranks of the elements of a strict order, as a relation over (kX, kL).
struct RankRelation {
  NodeRef eo = kFalse;  // eo(x, l) = 1 iff x has rank |l|
};

/// Ranks the elements of a strict total order `order` over (kX, kY):
/// eo(x, l) = 1 iff exactly |l| elements precede x. The element set is the
/// support of the order (every label related to some other label). Built by
/// doubling chain lengths, O(n^2) operations. Throws DomainError when the
/// order is not strict and total on its elements (some element would
/// receive zero or two ranks).
RankRelation enumerate_order(Store& s, NodeRef order);

/// Same with an explicit element set over kX. `order` may be a strict weak
/// order: elements never related in either direction share a rank, and
/// ranks stay dense. Labels outside the element set may participate in
/// chains but are dropped from the result.
RankRelation enumerate_order(Store& s, NodeRef order, NodeRef element_set);

/// Maximum matching of a unit interval graph chi_E over (kX, kY) with
/// vertex labels 0..vertex_count-1. Returns the symmetric matching
/// relation; matched pairs are consecutive labels. The number of
/// syntheses, negations and quantifier blocks is independent of the
/// instance; only the per-bit quantifier cost grows with n.
NodeRef maximum_matching_unit(Store& s, NodeRef chi_e, std::uint64_t vertex_count);

/// Optimal proper coloring of a unit interval graph, as a relation over
/// (kX, kL) assigning exactly one color to every vertex. Colors are dense
/// and classes are ordered by their smallest member. O(n^2) operations.
NodeRef coloring_unit(Store& s, NodeRef chi_e, std::uint64_t vertex_count);

/// Right-endpoint order of an interval graph labeled by left endpoints:
/// eo(x, y) = 1 iff some representation compatible with the labels closes
/// x's interval no later than y's. Computed from maximal reaches: x
/// precedes y when x's furthest neighbor label is smaller, with ties
/// broken by label. Intervals without later neighbors reach their own
/// label. `strict` drops the diagonal.
NodeRef right_endpoint_order(Store& s, NodeRef chi_e, std::uint64_t vertex_count,
                             bool strict = false);

/// Optimal proper coloring of a general interval graph; same result shape
/// as coloring_unit. Uses right-endpoint ranks instead of labels when
/// counting endpoints between two intervals.
NodeRef coloring_general(Store& s, NodeRef chi_e, std::uint64_t vertex_count);

enum class ColoringMode { Unit, General };

/// The chain-successor relation linking each interval to the next interval
/// that continues its color class: a partial matching over (kX, kY), at
/// most one successor and one predecessor per interval.
NodeRef related_intervals(Store& s, NodeRef chi_e, std::uint64_t vertex_count,
                          ColoringMode mode);

/// Walks a relation that fixes `vec` to one constant and returns that
/// value. Throws DomainError unless f is satisfiable by exactly one value
/// of the vector and depends on nothing else.
std::uint64_t unique_vector_value(const Store& s, NodeRef f, unsigned vec);

/// One full matching run on an interval family: encodes chi_E into a fresh
/// relation store, runs the implicit algorithm, and decodes the matched
/// pairs. Encoding and algorithm costs are reported separately.
struct MatchingRun {
  std::shared_ptr<Store> store;
  NodeRef chi_e = kFalse;
  NodeRef chi_m = kFalse;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;  // (i, j), i < j
  OpCounts encode_ops;
  OpCounts algorithm_ops;
};
MatchingRun run_maximum_matching(const IntervalSet& iv);

/// One full coloring run; assignment[i] is the color of label i.
struct ColoringRun {
  std::shared_ptr<Store> store;
  NodeRef chi_e = kFalse;
  NodeRef color = kFalse;
  std::vector<std::uint64_t> assignment;
  std::uint64_t colors_used = 0;
  OpCounts encode_ops;
  OpCounts algorithm_ops;
};
ColoringRun run_coloring(const IntervalSet& iv, ColoringMode mode);

}  // namespace igbdd
