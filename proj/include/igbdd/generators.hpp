#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "igbdd/intervals.hpp"

namespace igbdd {

/// Name of the pseudo-random generator behind every seeded draw, recorded in
/// output headers so published seeds stay reproducible.
inline constexpr const char* kRngName = "mt19937_64";

/// Uniform random balanced nonnegative string of `count` bracket pairs.
/// Sequential choice with exact integer ballot-count ratios; every balanced
/// string of length 2*count has the same probability.
std::string random_balanced_string(std::size_t count, std::uint64_t seed);

/// Reads a balanced string as a unit family: the i-th '[' opens interval i
/// and the i-th ']' closes it (first opened, first closed), with endpoints at
/// the character positions. Labels i < j intersect exactly when the i-th ']'
/// falls after the j-th '['. Throws DomainError on malformed strings.
IntervalSet string_to_unit_intervals(std::string_view s);

/// `count` intervals over 2*count distinct endpoints drawn uniformly without
/// replacement from {0, .., span-1}, paired at random and relabeled by left
/// endpoint. Requires span >= 2*count.
IntervalSet random_general_intervals(std::size_t count, long long span, std::uint64_t seed);

/// Near-worst-case family: below the diagonal, column j of the label-order
/// adjacency matrix carries a run of `column_runs[j]` ones. Runs are drawn
/// uniformly from {count/2 - j, .., count-1 - j} for the first half of the
/// columns and are forced to count-1-j for the rest, which pins every cell
/// outside the lower-left quarter.
struct WorstCaseSpec {
  std::size_t count = 0;                 // number of intervals, a power of two
  std::vector<std::size_t> column_runs;  // ones below the diagonal, per column
};

WorstCaseSpec random_worst_case_spec(std::size_t count, std::uint64_t seed);

/// Realizes the drawn runs as intervals: a_i = i * stride and b_i lands in
/// the gap behind the furthest reached label. Each gap holds one distinct
/// slot per interval, keeping all endpoints pairwise distinct.
IntervalSet worst_case_instance(const WorstCaseSpec& spec);

/// Convenience wrapper: draw the runs for `count` from `seed`, then realize.
IntervalSet worst_case_instance(std::size_t count, std::uint64_t seed);

}  // namespace igbdd
