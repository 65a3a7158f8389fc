#include "igbdd/intervals.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>

#include "igbdd/builders.hpp"

namespace igbdd {

void IntervalSet::validate() const {
  std::set<long long> endpoints;
  long long prev_a = 0, prev_b = 0;
  bool first = true;
  for (auto [a, b] : intervals) {
    if (a >= b) throw DomainError("interval with a >= b");
    if (!endpoints.insert(a).second || !endpoints.insert(b).second)
      throw DomainError("endpoints are not pairwise distinct");
    if (!first) {
      if (a <= prev_a) throw DomainError("intervals not sorted by left endpoint");
      if (unit && b <= prev_b) throw DomainError("unit family has containment");
    }
    prev_a = a;
    prev_b = b;
    first = false;
  }
}

std::vector<std::size_t> neighbor_reach(const IntervalSet& iv) {
  std::size_t n = iv.size();
  std::vector<long long> lefts(n);
  for (std::size_t i = 0; i < n; ++i) lefts[i] = iv.intervals[i].first;
  std::vector<std::size_t> reach(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = std::lower_bound(lefts.begin(), lefts.end(), iv.intervals[i].second);
    reach[i] = static_cast<std::size_t>(it - lefts.begin()) - 1;  // a_i < b_i, so >= i
  }
  return reach;
}

namespace {

// Builds the staircase relation other <= reach[self] directly as a reduced
// graph, one node at a time through mk(). A call covers an aligned block of
// labels and a fixed high part of the value; blocks whose reach lies entirely
// below or above the remaining value range collapse to a sink, so on families
// with slowly varying reach only O(N) calls survive. No intermediate
// functions are synthesized.
class StaircaseBuilder {
 public:
  StaircaseBuilder(Store& s, unsigned self_vec, unsigned other_vec,
                   const std::vector<long long>& reach)
      : s_(s), self_(self_vec), other_(other_vec), bits_(s.bits_per_vector()) {
    if (bits_ > 28) throw DomainError("encode_edges: label vectors beyond 28 bits");
    // aligned minimum/maximum of the (padded) reach values per block size
    const std::size_t full = std::size_t(1) << bits_;
    mn_.assign(bits_ + 1, {});
    mx_.assign(bits_ + 1, {});
    mn_[0].assign(full, -1);
    mx_[0].assign(full, -1);
    for (std::size_t i = 0; i < reach.size(); ++i) mn_[0][i] = mx_[0][i] = reach[i];
    for (unsigned k = 1; k <= bits_; ++k) {
      mn_[k].resize(full >> k);
      mx_[k].resize(full >> k);
      for (std::size_t b = 0; b < (full >> k); ++b) {
        mn_[k][b] = std::min(mn_[k - 1][2 * b], mn_[k - 1][2 * b + 1]);
        mx_[k][b] = std::max(mx_[k - 1][2 * b], mx_[k - 1][2 * b + 1]);
      }
    }
  }

  NodeRef build() { return block(bits_, 0, 0); }

 private:
  // Relation over the k lowest bits of both vectors, for labels in
  // [base, base + 2^k) and values offset by t: value <= reach[label] - t.
  NodeRef block(unsigned k, std::size_t base, long long t) {
    if (mx_[k][base >> k] < t) return kFalse;
    if (mn_[k][base >> k] >= t + (1LL << k) - 1) return kTrue;
    // one clamp always fires at k == 0, so two bits remain to branch on
    const std::uint64_t key = (std::uint64_t(k) << 58) | (std::uint64_t(base) << 29) |
                              static_cast<std::uint64_t>(t);
    auto hit = memo_.find(key);
    if (hit != memo_.end()) return hit->second;
    const std::size_t half = std::size_t(1) << (k - 1);
    NodeRef low_low = block(k - 1, base, t);
    NodeRef low_high = block(k - 1, base, t + static_cast<long long>(half));
    NodeRef high_low = block(k - 1, base + half, t);
    NodeRef high_high = block(k - 1, base + half, t + static_cast<long long>(half));
    const unsigned sig = k - 1;
    const std::uint32_t self_level = s_.level_of_bit(self_ * bits_ + sig);
    const std::uint32_t other_level = s_.level_of_bit(other_ * bits_ + sig);
    NodeRef out;
    if (self_level < other_level) {
      out = make(self_level, make(other_level, low_low, low_high),
                 make(other_level, high_low, high_high));
    } else {
      out = make(other_level, make(self_level, low_low, high_low),
                 make(self_level, low_high, high_high));
    }
    memo_.emplace(key, out);
    return out;
  }

  NodeRef make(std::uint32_t level, NodeRef lo, NodeRef hi) {
    return lo == hi ? lo : s_.mk(level, lo, hi);
  }

  Store& s_;
  unsigned self_, other_, bits_;
  std::vector<std::vector<long long>> mn_, mx_;
  std::unordered_map<std::uint64_t, NodeRef> memo_;
};

}  // namespace

NodeRef encode_edges(Store& s, const IntervalSet& iv, unsigned x_vec, unsigned y_vec) {
  iv.validate();
  std::size_t n_labels = iv.size();
  unsigned n = s.bits_per_vector();
  if (n < 64 && n_labels > (std::size_t(1) << n))
    throw DomainError("encode_edges: store too narrow for the label range");
  std::vector<std::size_t> reach = neighbor_reach(iv);
  std::vector<long long> bound(reach.begin(), reach.end());

  // adjacency of i < j is j <= reach[i]; the strict masks cut the diagonal
  // (reach[i] >= i always) and orient the two staircases
  NodeRef forward = s.apply(BoolOp::And, StaircaseBuilder(s, x_vec, y_vec, bound).build(),
                            lt_vectors(s, x_vec, y_vec));
  NodeRef backward = s.apply(BoolOp::And, StaircaseBuilder(s, y_vec, x_vec, bound).build(),
                             lt_vectors(s, y_vec, x_vec));
  return s.apply(BoolOp::Or, forward, backward);
}

NodeRef encode_vertices(Store& s, const IntervalSet& iv, unsigned x_vec) {
  return compare_const(s, x_vec, Cmp::Lt, iv.size());
}

SymbolicGraph encode(const IntervalSet& iv) {
  iv.validate();
  SymbolicGraph g;
  g.vertices = iv.size();
  g.n = std::max(1u, bits_for_count(iv.size()));
  g.store = std::make_shared<Store>(2, g.n);
  g.chi_E = encode_edges(*g.store, iv, 0, 1);
  g.chi_V = encode_vertices(*g.store, iv, 0);
  return g;
}

PiMatrix extract_pi_matrix(const SymbolicGraph& g, unsigned cap) {
  if (g.n > cap) throw DomainError("extract_pi_matrix: label width beyond the cap");
  PiMatrix m;
  m.n = g.n;
  std::size_t dim = std::size_t(1) << g.n;
  m.a.assign(dim, std::vector<bool>(dim, false));
  std::vector<unsigned> bits(2 * g.n);
  for (unsigned b = 0; b < 2 * g.n; ++b) bits[b] = b;
  g.store->foreach_sat(g.chi_E, bits, [&](std::span<const std::uint8_t> asg) {
    std::size_t row = 0, col = 0;
    for (unsigned i = 0; i < g.n; ++i) {
      row |= std::size_t(asg[i]) << i;
      col |= std::size_t(asg[g.n + i]) << i;
    }
    m.a[row][col] = true;
  });
  return m;
}

std::uint64_t count_distinct_blocks(const PiMatrix& m, unsigned k) {
  if (k > m.n) throw DomainError("count_distinct_blocks: level beyond n");
  std::size_t tiles = std::size_t(1) << k;
  std::size_t side = (std::size_t(1) << m.n) / tiles;
  std::set<std::vector<bool>> distinct;
  for (std::size_t bi = 0; bi < tiles; ++bi)
    for (std::size_t bj = 0; bj < tiles; ++bj) {
      std::vector<bool> flat;
      flat.reserve(side * side);
      for (std::size_t r = 0; r < side; ++r)
        for (std::size_t c = 0; c < side; ++c) flat.push_back(m.a[bi * side + r][bj * side + c]);
      distinct.insert(std::move(flat));
    }
  return distinct.size();
}

std::vector<std::pair<unsigned, unsigned>> explicit_max_matching(const IntervalSet& iv) {
  if (!iv.unit) throw DomainError("explicit_max_matching expects a unit family");
  iv.validate();
  std::vector<std::pair<unsigned, unsigned>> m;
  std::size_t comp_start = 0;
  long long reach = 0;
  auto flush = [&](std::size_t end) {  // component is labels [comp_start, end)
    for (std::size_t i = comp_start; i + 1 < end; i += 2)
      m.emplace_back(static_cast<unsigned>(i), static_cast<unsigned>(i + 1));
  };
  for (std::size_t i = 0; i < iv.size(); ++i) {
    auto [a, b] = iv.intervals[i];
    if (i == comp_start) {
      reach = b;
      continue;
    }
    if (a > reach) {
      flush(i);
      comp_start = i;
      reach = b;
    } else {
      reach = std::max(reach, b);
    }
  }
  flush(iv.size());
  return m;
}

GreedyColoring explicit_greedy_coloring(const IntervalSet& iv) {
  iv.validate();
  // Events on the line; endpoints are distinct, so a plain sort suffices.
  // +1 opens interval i, -1 closes it.
  std::vector<std::pair<long long, long long>> events;
  for (std::size_t i = 0; i < iv.size(); ++i) {
    events.push_back({iv.intervals[i].first, static_cast<long long>(i) + 1});
    events.push_back({iv.intervals[i].second, -static_cast<long long>(i) - 1});
  }
  std::sort(events.begin(), events.end());
  GreedyColoring out;
  out.color.assign(iv.size(), 0);
  std::vector<std::uint64_t> free_stack;
  for (auto [coord, what] : events) {
    if (what > 0) {
      std::size_t i = static_cast<std::size_t>(what - 1);
      if (free_stack.empty()) {
        out.color[i] = out.colors_used++;
      } else {
        out.color[i] = free_stack.back();
        free_stack.pop_back();
      }
    } else {
      std::size_t i = static_cast<std::size_t>(-what - 1);
      free_stack.push_back(out.color[i]);
    }
  }
  return out;
}

IntervalSet read_intervals(std::istream& in) {
  std::string line;
  auto next_content_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      std::size_t pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };
  std::string header;
  if (!next_content_line(header)) throw DomainError("interval list: missing header");
  std::istringstream hs(header);
  std::size_t n = 0;
  std::string kind;
  if (!(hs >> n >> kind) || (kind != "unit" && kind != "general"))
    throw DomainError("interval list: header must be \"N unit|general\"");
  IntervalSet iv;
  iv.unit = kind == "unit";
  iv.intervals.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string row;
    if (!next_content_line(row)) throw DomainError("interval list: fewer rows than the header says");
    std::istringstream rs(row);
    long long a, b;
    if (!(rs >> a >> b)) throw DomainError("interval list: malformed row");
    iv.intervals.emplace_back(a, b);
  }
  iv.validate();
  return iv;
}

void write_intervals(std::ostream& out, const IntervalSet& iv) {
  out << iv.size() << ' ' << (iv.unit ? "unit" : "general") << '\n';
  for (auto [a, b] : iv.intervals) out << a << ' ' << b << '\n';
}

}  // namespace igbdd
