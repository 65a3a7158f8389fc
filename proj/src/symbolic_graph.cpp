#include <algorithm>

#include "igbdd/algorithms.hpp"

namespace igbdd {
namespace {

unsigned label_bits(const IntervalSet& iv) {
  return std::max(1u, bits_for_count(iv.size()));
}

}  // namespace

std::uint64_t unique_vector_value(const Store& s, NodeRef f, unsigned vec) {
  if (f == kFalse) throw DomainError("unique_vector_value: relation is empty");
  const unsigned n = s.bits_per_vector();
  std::uint64_t value = 0;
  unsigned tested = 0;
  NodeRef cur = f;
  while (!s.is_const(cur)) {
    const unsigned bit = s.bit_at_level(s.node_level(cur));
    if (bit / n != vec)
      throw DomainError("unique_vector_value: relation depends on another vector");
    const NodeRef lo = s.node_lo(cur);
    const NodeRef hi = s.node_hi(cur);
    if (lo != kFalse && hi != kFalse)
      throw DomainError("unique_vector_value: more than one value satisfies the relation");
    if (hi != kFalse) value |= std::uint64_t{1} << (bit % n);
    cur = hi != kFalse ? hi : lo;
    ++tested;
  }
  // a skipped significance would admit both settings of that bit
  if (cur != kTrue || tested != n)
    throw DomainError("unique_vector_value: more than one value satisfies the relation");
  return value;
}

MatchingRun run_maximum_matching(const IntervalSet& iv) {
  iv.validate();
  if (!iv.unit) throw DomainError("run_maximum_matching: unit interval family required");
  MatchingRun run;
  run.store = make_relation_store(label_bits(iv));
  Store& s = *run.store;
  const std::uint64_t count = iv.size();
  const OpCounts start = s.counts();
  run.chi_e = encode_edges(s, iv, slots::kX, slots::kY);
  run.encode_ops = s.counts().since(start);
  const OpCounts mid = s.counts();
  run.chi_m = maximum_matching_unit(s, run.chi_e, count);
  run.algorithm_ops = s.counts().since(mid);
  // decoding is reporting, not algorithm work
  CountScope quiet(s);
  for (std::uint64_t i = 0; i < count; ++i) {
    NodeRef row = s.restrict_vector(run.chi_m, slots::kX, i);
    if (row == kFalse) continue;
    const std::uint64_t j = unique_vector_value(s, row, slots::kY);
    if (i < j) run.pairs.emplace_back(i, j);
  }
  return run;
}

ColoringRun run_coloring(const IntervalSet& iv, ColoringMode mode) {
  iv.validate();
  if (mode == ColoringMode::Unit && !iv.unit)
    throw DomainError("run_coloring: unit mode requires a unit interval family");
  ColoringRun run;
  run.store = make_relation_store(label_bits(iv));
  Store& s = *run.store;
  const std::uint64_t count = iv.size();
  const OpCounts start = s.counts();
  run.chi_e = encode_edges(s, iv, slots::kX, slots::kY);
  run.encode_ops = s.counts().since(start);
  const OpCounts mid = s.counts();
  run.color = mode == ColoringMode::Unit ? coloring_unit(s, run.chi_e, count)
                                         : coloring_general(s, run.chi_e, count);
  run.algorithm_ops = s.counts().since(mid);
  CountScope quiet(s);
  run.assignment.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    NodeRef row = s.restrict_vector(run.color, slots::kX, i);
    run.assignment.push_back(unique_vector_value(s, row, slots::kL));
  }
  for (std::uint64_t c : run.assignment)
    run.colors_used = std::max(run.colors_used, c + 1);
  return run;
}

}  // namespace igbdd
