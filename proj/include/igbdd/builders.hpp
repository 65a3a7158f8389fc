#pragma once

// Direct constructions of arithmetic predicates over the argument vectors of
// a structured store. All builders return reduced OBDDs of linear size in the
// bit width (the weighted builders are linear with a constant depending on
// the weight magnitudes) and never go through generic synthesis.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "igbdd/obdd.hpp"

namespace igbdd {

enum class Cmp { Eq, Ne, Lt, Le, Gt, Ge };

/// |a| == |b| over two argument vectors. 3 inner nodes per significance.
NodeRef eq_vectors(Store& s, unsigned a, unsigned b);

/// |a| > |b|. At most 3 inner nodes per significance.
NodeRef gt_vectors(Store& s, unsigned a, unsigned b);

NodeRef ge_vectors(Store& s, unsigned a, unsigned b);  // !(b > a) ... |a| >= |b|
NodeRef lt_vectors(Store& s, unsigned a, unsigned b);
NodeRef le_vectors(Store& s, unsigned a, unsigned b);

/// |vec| cmp c for a constant c (c may exceed the vector range).
NodeRef compare_const(Store& s, unsigned vec, Cmp cmp, std::uint64_t c);

/// Characteristic function of the single value |vec| == value.
NodeRef const_vector(Store& s, unsigned vec, std::uint64_t value);

/// sum_j weights[j] * |v_j| >= threshold, one weight per argument vector
/// (zero weights contribute nothing and leave the vector out of the support).
/// Built as a deterministic threshold automaton processing significances from
/// the most significant group down; with S = sum_j |weights[j]| the
/// construction keeps at most 6 * (S + 1) states per level before reduction.
///
/// If `pre_reduction_width` is non-null it receives the automaton's live
/// state count per level (empty when the result short-circuits to a sink
/// before the automaton is built).
NodeRef weighted_ge(Store& s, std::span<const long long> weights, long long threshold,
                    std::vector<std::size_t>* pre_reduction_width = nullptr);

/// sum_j weights[j] * |v_j| == threshold, as the conjunction of the two
/// opposite threshold automata.
NodeRef weighted_eq(Store& s, std::span<const long long> weights, long long threshold);

}  // namespace igbdd
