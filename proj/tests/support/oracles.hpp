#pragma once

// Brute-force reference implementations used by the tests. Everything here
// works on explicit representations (truth tables, adjacency matrices,
// endpoint arrays) so that the symbolic results can be checked independently.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "igbdd/obdd.hpp"

namespace oracles {

/// Truth table over `bits` flat bits; entry index is the assignment read as an
/// integer with flat bit b contributing 2^b.
struct TruthTable {
  unsigned bits = 0;
  std::vector<bool> val;

  explicit TruthTable(unsigned b) : bits(b), val(std::size_t(1) << b, false) {}

  static TruthTable constant(unsigned bits, bool v) {
    TruthTable t(bits);
    std::fill(t.val.begin(), t.val.end(), v);
    return t;
  }
  static TruthTable var(unsigned bits, unsigned bit) {
    TruthTable t(bits);
    for (std::size_t a = 0; a < t.val.size(); ++a) t.val[a] = (a >> bit) & 1;
    return t;
  }
};

inline TruthTable table_apply(igbdd::BoolOp op, const TruthTable& f, const TruthTable& g) {
  TruthTable r(f.bits);
  auto mask = static_cast<unsigned>(op);
  for (std::size_t a = 0; a < r.val.size(); ++a)
    r.val[a] = (mask >> ((f.val[a] ? 2u : 0u) | (g.val[a] ? 1u : 0u))) & 1u;
  return r;
}

inline TruthTable table_negate(const TruthTable& f) {
  TruthTable r(f.bits);
  for (std::size_t a = 0; a < r.val.size(); ++a) r.val[a] = !f.val[a];
  return r;
}

inline TruthTable table_restrict(const TruthTable& f, unsigned bit, bool value) {
  TruthTable r(f.bits);
  std::size_t m = std::size_t(1) << bit;
  for (std::size_t a = 0; a < r.val.size(); ++a)
    r.val[a] = f.val[value ? (a | m) : (a & ~m)];
  return r;
}

inline TruthTable table_quantify(const TruthTable& f, const std::vector<unsigned>& bits,
                                 igbdd::Quant q) {
  TruthTable r = f;
  for (unsigned b : bits) {
    TruthTable lo = table_restrict(r, b, false), hi = table_restrict(r, b, true);
    r = table_apply(q == igbdd::Quant::Exists ? igbdd::BoolOp::Or : igbdd::BoolOp::And, lo, hi);
  }
  return r;
}

/// h(v_0,...,v_{k-1}) = f(v_rho[0],...,v_rho[k-1]) over k vectors of n bits.
inline TruthTable table_reorder(const TruthTable& f, const std::vector<unsigned>& rho, unsigned n) {
  TruthTable r(f.bits);
  unsigned k = static_cast<unsigned>(rho.size());
  for (std::size_t a = 0; a < r.val.size(); ++a) {
    std::size_t b = 0;
    for (unsigned p = 0; p < k; ++p) {
      std::size_t vp = (a >> (rho[p] * n)) & ((std::size_t(1) << n) - 1);
      b |= vp << (p * n);
    }
    r.val[a] = f.val[b];
  }
  return r;
}

/// Builds the table's function in the store with explicit Shannon expansion.
inline igbdd::NodeRef build_from_table(igbdd::Store& s, const TruthTable& t) {
  // rec(level, assignment of bits tested above level)
  std::function<igbdd::NodeRef(std::uint32_t, std::size_t)> rec =
      [&](std::uint32_t level, std::size_t fixed) -> igbdd::NodeRef {
    if (level == s.bit_count()) return s.constant(t.val[fixed]);
    unsigned bit = s.bit_at_level(level);
    igbdd::NodeRef lo = rec(level + 1, fixed);
    igbdd::NodeRef hi = rec(level + 1, fixed | (std::size_t(1) << bit));
    return s.mk(level, lo, hi);
  };
  return rec(0, 0);
}

/// Number of distinct subfunctions of `t` that essentially depend on `bit`,
/// where the subfunctions are obtained by fixing every bit tested strictly
/// above bit's level in the given order. By the canonical-form theorem this
/// equals the node count of the reduced OBDD at that level.
inline std::uint64_t subfunctions_at_level(const TruthTable& t, const igbdd::VarOrder& order,
                                           std::uint32_t level) {
  unsigned bits = t.bits;
  std::vector<unsigned> above(order.perm.begin(), order.perm.begin() + level);
  unsigned target = order.perm[level];
  // Subfunction signature: the full truth table restricted to the fixed bits,
  // collected as a vector<bool> over the remaining bits in flat order.
  std::set<std::vector<bool>> seen;
  std::vector<unsigned> rest;
  for (unsigned b = 0; b < bits; ++b)
    if (std::find(above.begin(), above.end(), b) == above.end()) rest.push_back(b);
  std::size_t rest_count = std::size_t(1) << rest.size();
  for (std::size_t fa = 0; fa < (std::size_t(1) << above.size()); ++fa) {
    std::size_t base = 0;
    for (std::size_t i = 0; i < above.size(); ++i)
      if ((fa >> i) & 1) base |= std::size_t(1) << above[i];
    std::vector<bool> sig(rest_count);
    bool depends = false;
    for (std::size_t ra = 0; ra < rest_count; ++ra) {
      std::size_t a = base;
      for (std::size_t i = 0; i < rest.size(); ++i)
        if ((ra >> i) & 1) a |= std::size_t(1) << rest[i];
      sig[ra] = t.val[a];
    }
    // essential dependence on `target`
    std::size_t ti = std::find(rest.begin(), rest.end(), target) - rest.begin();
    for (std::size_t ra = 0; ra < rest_count && !depends; ++ra)
      if (sig[ra] != sig[ra ^ (std::size_t(1) << ti)]) depends = true;
    if (depends) seen.insert(std::move(sig));
  }
  return seen.size();
}

/// Reflexive-transitive closure of an explicit relation (Warshall).
inline std::vector<std::vector<bool>> warshall(std::vector<std::vector<bool>> r) {
  std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
  return r;
}

/// Maximum matching size of an interval graph given by sorted endpoint pairs,
/// via the left-to-right pairing scan over the connected components: a
/// component with c vertices contributes floor(c / 2).
inline std::uint64_t interval_matching_size(const std::vector<std::pair<long long, long long>>& iv) {
  std::size_t n = iv.size();
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return iv[a] < iv[b]; });
  std::uint64_t total = 0;
  std::size_t comp = 0;
  long long reach = 0;
  bool open = false;
  for (std::size_t t = 0; t < n; ++t) {
    const auto& [a, b] = iv[idx[t]];
    if (!open || a > reach) {
      total += comp / 2;
      comp = 1;
      reach = b;
      open = true;
    } else {
      ++comp;
      reach = std::max(reach, b);
    }
  }
  total += comp / 2;
  return total;
}

/// Chromatic number of an interval graph = maximum number of pairwise
/// overlapping intervals (sweep over endpoints; open intervals).
inline unsigned interval_chromatic_number(const std::vector<std::pair<long long, long long>>& iv) {
  std::vector<std::pair<long long, int>> ev;
  for (auto [a, b] : iv) {
    ev.push_back({a, +1});
    ev.push_back({b, -1});
  }
  std::sort(ev.begin(), ev.end());  // close before open at equal coordinate
  int cur = 0, best = 0;
  for (auto [c, d] : ev) {
    cur += d;
    best = std::max(best, cur);
  }
  return static_cast<unsigned>(best);
}

/// Explicit adjacency of an interval family: vertices i != j are adjacent iff
/// their open intervals overlap.
inline std::vector<std::vector<bool>> interval_adjacency(
    const std::vector<std::pair<long long, long long>>& iv) {
  std::size_t n = iv.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && iv[i].first < iv[j].second && iv[j].first < iv[i].second)
        adj[i][j] = true;
  return adj;
}

/// Checks that `m` (as a set of unordered pairs) is a matching in `adj` and
/// that it is maximal and maximum on interval graphs is checked separately.
inline bool is_matching(const std::vector<std::vector<bool>>& adj,
                        const std::set<std::pair<unsigned, unsigned>>& m) {
  std::set<unsigned> used;
  for (auto [u, v] : m) {
    if (u == v || !adj[u][v]) return false;
    if (!used.insert(u).second || !used.insert(v).second) return false;
  }
  return true;
}

/// Checks a proper coloring.
inline bool is_proper_coloring(const std::vector<std::vector<bool>>& adj,
                               const std::map<unsigned, std::uint64_t>& color) {
  std::size_t n = adj.size();
  for (unsigned i = 0; i < n; ++i) {
    if (!color.count(i)) return false;
    for (unsigned j = i + 1; j < n; ++j)
      if (adj[i][j] && color.at(i) == color.at(j)) return false;
  }
  return true;
}

/// Ranks of values in a strict weak order given by "less" comparisons:
/// rank(x) = number of distinct equivalence classes strictly below x.
template <class Less>
std::vector<std::uint64_t> weak_order_ranks(std::size_t n, Less less) {
  std::vector<std::uint64_t> rank(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    std::set<std::size_t> below;  // representatives of classes strictly below x
    for (std::size_t y = 0; y < n; ++y)
      if (less(y, x)) {
        bool fresh = true;
        for (auto r : below)
          if (!less(r, y) && !less(y, r)) fresh = false;
        if (fresh) below.insert(y);
      }
    rank[x] = below.size();
  }
  return rank;
}

}  // namespace oracles
