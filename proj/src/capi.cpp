#include "igbdd.h"

#include <algorithm>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "igbdd/algorithms.hpp"
#include "igbdd/generators.hpp"
#include "igbdd/intervals.hpp"
#include "igbdd/obdd.hpp"

struct igbdd_intervals {
  igbdd::IntervalSet iv;
};

struct igbdd_run {
  std::string algorithm;
  std::uint64_t vertex_count = 0;
  std::uint32_t bits = 0;
  std::uint64_t chi_e_size = 0;
  std::uint64_t result_size = 0;
  std::uint64_t peak_nodes = 0;
  igbdd::OpCounts encode_ops;
  igbdd::OpCounts algorithm_ops;
  std::vector<std::uint64_t> levels;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  std::vector<std::uint64_t> colors;
  std::uint64_t colors_used = 0;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
igbdd_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const igbdd::DomainError& e) {
    g_last_error = e.what();
    return IGBDD_ERROR_DOMAIN;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return IGBDD_ERROR_NOMEM;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return IGBDD_ERROR_INTERNAL;
  }
}

igbdd_status fail_domain(const char* message) {
  g_last_error = message;
  return IGBDD_ERROR_DOMAIN;
}

igbdd_op_counts to_c(const igbdd::OpCounts& c) {
  return {c.syntheses,         c.negations,         c.quantifier_blocks,
          c.quantifier_bit_ops, c.argument_reorders, c.peak_store_nodes};
}

// Inner-node widths of the edge relation at the levels of the two label
// vectors, top down. Equals the profile the two-vector encoding would give,
// whichever store the relation lives in.
std::vector<std::uint64_t> pair_levels(const igbdd::Store& s, igbdd::NodeRef chi_e) {
  const igbdd::LevelProfile p = s.level_profile(chi_e);
  const unsigned bits = s.bits_per_vector();
  std::vector<std::uint64_t> out;
  for (unsigned level = 0; level < s.bit_count(); ++level) {
    const unsigned vec = s.bit_at_level(level) / bits;
    if (vec == igbdd::slots::kX || vec == igbdd::slots::kY)
      out.push_back(p.per_level[level]);
  }
  return out;
}

std::uint64_t chi_e_nodes(const igbdd::Store& s, igbdd::NodeRef chi_e) {
  return s.level_profile(chi_e).size();
}

}  // namespace

extern "C" {

const char* igbdd_version(void) { return "0.1.0"; }

const char* igbdd_rng_name(void) { return igbdd::kRngName; }

const char* igbdd_last_error(void) { return g_last_error.c_str(); }

igbdd_status igbdd_intervals_create(const int64_t* lefts, const int64_t* rights,
                                    size_t count, int unit, igbdd_intervals** out) {
  if (!out || (count > 0 && (!lefts || !rights))) return fail_domain("null argument");
  return guarded([&] {
    auto handle = std::make_unique<igbdd_intervals>();
    handle->iv.unit = unit != 0;
    for (size_t i = 0; i < count; ++i) handle->iv.intervals.push_back({lefts[i], rights[i]});
    handle->iv.validate();
    *out = handle.release();
    return IGBDD_OK;
  });
}

igbdd_status igbdd_intervals_random_unit(size_t count, uint64_t seed,
                                         igbdd_intervals** out) {
  if (!out) return fail_domain("null argument");
  return guarded([&] {
    auto handle = std::make_unique<igbdd_intervals>();
    handle->iv = igbdd::string_to_unit_intervals(igbdd::random_balanced_string(count, seed));
    *out = handle.release();
    return IGBDD_OK;
  });
}

igbdd_status igbdd_intervals_random_general(size_t count, int64_t span, uint64_t seed,
                                            igbdd_intervals** out) {
  if (!out) return fail_domain("null argument");
  return guarded([&] {
    auto handle = std::make_unique<igbdd_intervals>();
    handle->iv = igbdd::random_general_intervals(count, span, seed);
    *out = handle.release();
    return IGBDD_OK;
  });
}

igbdd_status igbdd_intervals_worst_case(size_t count, uint64_t seed,
                                        igbdd_intervals** out) {
  if (!out) return fail_domain("null argument");
  return guarded([&] {
    auto handle = std::make_unique<igbdd_intervals>();
    handle->iv = igbdd::worst_case_instance(count, seed);
    *out = handle.release();
    return IGBDD_OK;
  });
}

igbdd_status igbdd_intervals_from_text(const char* text, igbdd_intervals** out) {
  if (!text || !out) return fail_domain("null argument");
  return guarded([&] {
    std::istringstream in((std::string(text)));
    auto handle = std::make_unique<igbdd_intervals>();
    handle->iv = igbdd::read_intervals(in);
    *out = handle.release();
    return IGBDD_OK;
  });
}

igbdd_status igbdd_intervals_to_text(const igbdd_intervals* iv, char** out_text) {
  if (!iv || !out_text) return fail_domain("null argument");
  return guarded([&] {
    std::ostringstream outs;
    igbdd::write_intervals(outs, iv->iv);
    const std::string s = outs.str();
    char* buffer = static_cast<char*>(::operator new(s.size() + 1));
    std::memcpy(buffer, s.c_str(), s.size() + 1);
    *out_text = buffer;
    return IGBDD_OK;
  });
}

igbdd_status igbdd_intervals_size(const igbdd_intervals* iv, size_t* out) {
  if (!iv || !out) return fail_domain("null argument");
  *out = iv->iv.size();
  return IGBDD_OK;
}

igbdd_status igbdd_intervals_is_unit(const igbdd_intervals* iv, int* out) {
  if (!iv || !out) return fail_domain("null argument");
  *out = iv->iv.unit ? 1 : 0;
  return IGBDD_OK;
}

igbdd_status igbdd_intervals_at(const igbdd_intervals* iv, size_t index,
                                int64_t* left, int64_t* right) {
  if (!iv || !left || !right) return fail_domain("null argument");
  if (index >= iv->iv.size()) return fail_domain("interval index out of range");
  *left = iv->iv.intervals[index].first;
  *right = iv->iv.intervals[index].second;
  return IGBDD_OK;
}

void igbdd_intervals_free(igbdd_intervals* iv) { delete iv; }

void igbdd_text_free(char* text) { ::operator delete(text); }

igbdd_status igbdd_encode_stats(const igbdd_intervals* iv, igbdd_run** out) {
  if (!iv || !out) return fail_domain("null argument");
  return guarded([&] {
    igbdd::SymbolicGraph g = igbdd::encode(iv->iv);
    auto run = std::make_unique<igbdd_run>();
    run->algorithm = "encode";
    run->vertex_count = g.vertices;
    run->bits = g.n;
    run->chi_e_size = chi_e_nodes(*g.store, g.chi_E);
    run->result_size = run->chi_e_size;
    run->encode_ops = g.store->counts();
    run->peak_nodes = g.store->peak_node_count();
    run->levels = pair_levels(*g.store, g.chi_E);
    *out = run.release();
    return IGBDD_OK;
  });
}

igbdd_status igbdd_match(const igbdd_intervals* iv, igbdd_run** out) {
  if (!iv || !out) return fail_domain("null argument");
  return guarded([&] {
    igbdd::MatchingRun m = igbdd::run_maximum_matching(iv->iv);
    auto run = std::make_unique<igbdd_run>();
    run->algorithm = "match";
    run->vertex_count = iv->iv.size();
    run->bits = m.store->bits_per_vector();
    run->chi_e_size = chi_e_nodes(*m.store, m.chi_e);
    run->result_size = m.pairs.size();
    run->encode_ops = m.encode_ops;
    run->algorithm_ops = m.algorithm_ops;
    run->peak_nodes = std::max(m.encode_ops.peak_store_nodes, m.algorithm_ops.peak_store_nodes);
    run->levels = pair_levels(*m.store, m.chi_e);
    run->pairs = m.pairs;
    *out = run.release();
    return IGBDD_OK;
  });
}

igbdd_status igbdd_color(const igbdd_intervals* iv, int general_mode, igbdd_run** out) {
  if (!iv || !out) return fail_domain("null argument");
  return guarded([&] {
    const auto mode = general_mode ? igbdd::ColoringMode::General : igbdd::ColoringMode::Unit;
    igbdd::ColoringRun c = igbdd::run_coloring(iv->iv, mode);
    auto run = std::make_unique<igbdd_run>();
    run->algorithm = general_mode ? "color-general" : "color-unit";
    run->vertex_count = iv->iv.size();
    run->bits = c.store->bits_per_vector();
    run->chi_e_size = chi_e_nodes(*c.store, c.chi_e);
    run->result_size = c.colors_used;
    run->encode_ops = c.encode_ops;
    run->algorithm_ops = c.algorithm_ops;
    run->peak_nodes = std::max(c.encode_ops.peak_store_nodes, c.algorithm_ops.peak_store_nodes);
    run->levels = pair_levels(*c.store, c.chi_e);
    run->colors = c.assignment;
    run->colors_used = c.colors_used;
    *out = run.release();
    return IGBDD_OK;
  });
}

void igbdd_run_free(igbdd_run* run) { delete run; }

const char* igbdd_run_algorithm(const igbdd_run* run) {
  return run ? run->algorithm.c_str() : "";
}

igbdd_status igbdd_run_vertex_count(const igbdd_run* run, uint64_t* out) {
  if (!run || !out) return fail_domain("null argument");
  *out = run->vertex_count;
  return IGBDD_OK;
}

igbdd_status igbdd_run_bits(const igbdd_run* run, uint32_t* out) {
  if (!run || !out) return fail_domain("null argument");
  *out = run->bits;
  return IGBDD_OK;
}

igbdd_status igbdd_run_chi_e_size(const igbdd_run* run, uint64_t* out) {
  if (!run || !out) return fail_domain("null argument");
  *out = run->chi_e_size;
  return IGBDD_OK;
}

igbdd_status igbdd_run_result_size(const igbdd_run* run, uint64_t* out) {
  if (!run || !out) return fail_domain("null argument");
  *out = run->result_size;
  return IGBDD_OK;
}

igbdd_status igbdd_run_peak_nodes(const igbdd_run* run, uint64_t* out) {
  if (!run || !out) return fail_domain("null argument");
  *out = run->peak_nodes;
  return IGBDD_OK;
}

igbdd_status igbdd_run_encode_ops(const igbdd_run* run, igbdd_op_counts* out) {
  if (!run || !out) return fail_domain("null argument");
  *out = to_c(run->encode_ops);
  return IGBDD_OK;
}

igbdd_status igbdd_run_algorithm_ops(const igbdd_run* run, igbdd_op_counts* out) {
  if (!run || !out) return fail_domain("null argument");
  *out = to_c(run->algorithm_ops);
  return IGBDD_OK;
}

igbdd_status igbdd_run_level_profile(const igbdd_run* run, uint64_t* buffer,
                                     size_t capacity, size_t* needed) {
  if (!run || (!buffer && capacity > 0)) return fail_domain("null argument");
  if (needed) *needed = run->levels.size();
  const size_t take = std::min(capacity, run->levels.size());
  for (size_t i = 0; i < take; ++i) buffer[i] = run->levels[i];
  return IGBDD_OK;
}

igbdd_status igbdd_run_pair_count(const igbdd_run* run, size_t* out) {
  if (!run || !out) return fail_domain("null argument");
  *out = run->pairs.size();
  return IGBDD_OK;
}

igbdd_status igbdd_run_pair_at(const igbdd_run* run, size_t index,
                               uint64_t* a, uint64_t* b) {
  if (!run || !a || !b) return fail_domain("null argument");
  if (index >= run->pairs.size()) return fail_domain("pair index out of range");
  *a = run->pairs[index].first;
  *b = run->pairs[index].second;
  return IGBDD_OK;
}

igbdd_status igbdd_run_colors_used(const igbdd_run* run, uint64_t* out) {
  if (!run || !out) return fail_domain("null argument");
  *out = run->colors_used;
  return IGBDD_OK;
}

igbdd_status igbdd_run_color_at(const igbdd_run* run, size_t vertex, uint64_t* out) {
  if (!run || !out) return fail_domain("null argument");
  if (vertex >= run->colors.size()) return fail_domain("vertex index out of range");
  *out = run->colors[vertex];
  return IGBDD_OK;
}

igbdd_status igbdd_oracle_matching_size(const igbdd_intervals* iv, uint64_t* out) {
  if (!iv || !out) return fail_domain("null argument");
  return guarded([&] {
    *out = igbdd::explicit_max_matching(iv->iv).size();
    return IGBDD_OK;
  });
}

igbdd_status igbdd_oracle_color_count(const igbdd_intervals* iv, uint64_t* out) {
  if (!iv || !out) return fail_domain("null argument");
  return guarded([&] {
    *out = igbdd::explicit_greedy_coloring(iv->iv).colors_used;
    return IGBDD_OK;
  });
}

igbdd_status igbdd_check_coloring(const igbdd_intervals* iv, const igbdd_run* run,
                                  int* ok) {
  if (!iv || !run || !ok) return fail_domain("null argument");
  return guarded([&] {
    *ok = 0;
    const auto& intervals = iv->iv.intervals;
    if (run->colors.size() != intervals.size()) return IGBDD_OK;
    std::vector<bool> seen(run->colors_used, false);
    // bucket the intervals per color; inside a class, members sorted by left
    // endpoint must not touch
    std::vector<std::vector<std::size_t>> classes(run->colors_used);
    for (std::size_t v = 0; v < intervals.size(); ++v) {
      if (run->colors[v] >= run->colors_used) return IGBDD_OK;
      seen[run->colors[v]] = true;
      classes[run->colors[v]].push_back(v);  // already in left-endpoint order
    }
    for (bool s : seen)
      if (!s) return IGBDD_OK;
    for (const auto& members : classes)
      for (std::size_t k = 1; k < members.size(); ++k)
        if (intervals[members[k]].first <= intervals[members[k - 1]].second) return IGBDD_OK;
    *ok = 1;
    return IGBDD_OK;
  });
}

}  // extern "C"
