#include "igbdd/obdd.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

namespace igbdd {

namespace {

constexpr std::uint32_t kEmptySlot = 0xffffffffu;
constexpr std::uint32_t kEmptyTag = 0xffffffffu;
constexpr std::uint32_t kNegateTag = 16;
constexpr std::uint32_t kRestrictTagBase = 32;

inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

inline std::uint64_t hash_triple(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  return mix64((static_cast<std::uint64_t>(b) << 32) | c) ^ mix64(a * 0x9e3779b97f4a7c15ULL + 1);
}

inline bool op_bit(std::uint8_t op, bool a, bool b) {
  return (op >> ((a ? 2 : 0) | (b ? 1 : 0))) & 1;
}

}  // namespace

VarOrder VarOrder::identity(unsigned bit_count) {
  VarOrder o;
  o.perm.resize(bit_count);
  std::iota(o.perm.begin(), o.perm.end(), 0u);
  return o;
}

VarOrder VarOrder::interleaved(unsigned vectors, unsigned bits) {
  VarOrder o;
  o.perm.reserve(static_cast<std::size_t>(vectors) * bits);
  for (unsigned sig = bits; sig-- > 0;)
    for (unsigned v = 0; v < vectors; ++v) o.perm.push_back(v * bits + sig);
  return o;
}

std::vector<std::uint32_t> VarOrder::positions() const {
  std::vector<std::uint32_t> pos(perm.size());
  for (std::uint32_t p = 0; p < perm.size(); ++p) pos[perm[p]] = p;
  return pos;
}

void VarOrder::validate() const {
  std::vector<bool> seen(perm.size(), false);
  for (auto b : perm) {
    if (b >= perm.size() || seen[b]) throw DomainError("VarOrder is not a permutation");
    seen[b] = true;
  }
}

OpCounts OpCounts::since(const OpCounts& earlier) const {
  OpCounts d;
  d.syntheses = syntheses - earlier.syntheses;
  d.negations = negations - earlier.negations;
  d.quantifier_blocks = quantifier_blocks - earlier.quantifier_blocks;
  d.quantifier_bit_ops = quantifier_bit_ops - earlier.quantifier_bit_ops;
  d.argument_reorders = argument_reorders - earlier.argument_reorders;
  d.peak_store_nodes = peak_store_nodes;
  return d;
}

unsigned bits_for_count(std::uint64_t count) {
  unsigned n = 0;
  while ((1ULL << n) < count) ++n;
  return n;
}

Store::Store(unsigned vectors, unsigned bits)
    : bit_count_(vectors * bits),
      vectors_(vectors),
      bits_(bits),
      order_(VarOrder::interleaved(vectors, bits)),
      pos_(order_.positions()) {
  if (vectors == 0) throw DomainError("store needs at least one vector");
  nodes_.push_back({bit_count_, kFalse, kFalse});
  nodes_.push_back({bit_count_, kTrue, kTrue});
  unique_.assign(1u << 12, kEmptySlot);
  unique_mask_ = unique_.size() - 1;
  cache_.assign(1u << 12, CacheEntry{kEmptyTag, 0, 0, 0});
  cache_mask_ = cache_.size() - 1;
  peak_nodes_ = nodes_.size();
  counts_.peak_store_nodes = peak_nodes_;
}

Store::Store(VarOrder order) : bit_count_(order.bit_count()), order_(std::move(order)) {
  order_.validate();
  pos_ = order_.positions();
  nodes_.push_back({bit_count_, kFalse, kFalse});
  nodes_.push_back({bit_count_, kTrue, kTrue});
  unique_.assign(1u << 12, kEmptySlot);
  unique_mask_ = unique_.size() - 1;
  cache_.assign(1u << 12, CacheEntry{kEmptyTag, 0, 0, 0});
  cache_mask_ = cache_.size() - 1;
  peak_nodes_ = nodes_.size();
  counts_.peak_store_nodes = peak_nodes_;
}

unsigned Store::flat_bit(unsigned vec, unsigned significance) const {
  require_structured("flat_bit");
  if (vec >= vectors_ || significance >= bits_) throw DomainError("bit index out of range");
  return vec * bits_ + significance;
}

std::vector<unsigned> Store::vector_bits(unsigned vec) const {
  require_structured("vector_bits");
  if (vec >= vectors_) throw DomainError("vector index out of range");
  std::vector<unsigned> bits(bits_);
  std::iota(bits.begin(), bits.end(), vec * bits_);
  return bits;
}

void Store::require_structured(const char* what) const {
  if (vectors_ == 0) throw DomainError(std::string(what) + " requires a vector-structured store");
}

std::size_t Store::unique_lookup_slot(std::uint32_t level, NodeRef lo, NodeRef hi) const {
  std::size_t idx = hash_triple(level, lo, hi) & unique_mask_;
  for (;;) {
    std::uint32_t ref = unique_[idx];
    if (ref == kEmptySlot) return idx;
    const Node& n = nodes_[ref];
    if (n.level == level && n.lo == lo && n.hi == hi) return idx;
    idx = (idx + 1) & unique_mask_;
  }
}

void Store::grow_unique() {
  std::vector<std::uint32_t> old;
  old.swap(unique_);
  unique_.assign(old.size() * 2, kEmptySlot);
  unique_mask_ = unique_.size() - 1;
  for (std::uint32_t ref : old) {
    if (ref == kEmptySlot) continue;
    const Node& n = nodes_[ref];
    unique_[unique_lookup_slot(n.level, n.lo, n.hi)] = ref;
  }
}

NodeRef Store::mk(std::uint32_t level, NodeRef lo, NodeRef hi) {
  if (lo == hi) return lo;
  if (level >= bit_count_ || nodes_[lo].level <= level || nodes_[hi].level <= level)
    throw DomainError("mk: level must lie strictly above both children");
  std::size_t idx = unique_lookup_slot(level, lo, hi);
  if (unique_[idx] != kEmptySlot) return unique_[idx];
  NodeRef ref = static_cast<NodeRef>(nodes_.size());
  nodes_.push_back({level, lo, hi});
  unique_[idx] = ref;
  if (nodes_.size() > peak_nodes_) {
    peak_nodes_ = nodes_.size();
    counts_.peak_store_nodes = peak_nodes_;
  }
  if ((nodes_.size() - 2) * 3 > unique_.size() * 2) grow_unique();
  return ref;
}

NodeRef Store::var(unsigned bit) {
  if (bit >= bit_count_) throw DomainError("var: bit out of range");
  return mk(pos_[bit], kFalse, kTrue);
}

bool Store::cache_get(std::uint32_t tag, NodeRef a, NodeRef b, NodeRef& out) const {
  std::size_t idx = hash_triple(tag, a, b) & cache_mask_;
  for (;;) {
    const CacheEntry& e = cache_[idx];
    if (e.tag == kEmptyTag) return false;
    if (e.tag == tag && e.a == a && e.b == b) {
      out = e.result;
      return true;
    }
    idx = (idx + 1) & cache_mask_;
  }
}

void Store::cache_put(std::uint32_t tag, NodeRef a, NodeRef b, NodeRef result) {
  if ((cache_used_ + 1) * 3 > cache_.size() * 2) {
    std::vector<CacheEntry> old;
    old.swap(cache_);
    cache_.assign(old.size() * 2, CacheEntry{kEmptyTag, 0, 0, 0});
    cache_mask_ = cache_.size() - 1;
    for (const CacheEntry& e : old) {
      if (e.tag == kEmptyTag) continue;
      std::size_t idx = hash_triple(e.tag, e.a, e.b) & cache_mask_;
      while (cache_[idx].tag != kEmptyTag) idx = (idx + 1) & cache_mask_;
      cache_[idx] = e;
    }
  }
  std::size_t idx = hash_triple(tag, a, b) & cache_mask_;
  for (;;) {
    CacheEntry& e = cache_[idx];
    if (e.tag == kEmptyTag) {
      e = CacheEntry{tag, a, b, result};
      ++cache_used_;
      return;
    }
    if (e.tag == tag && e.a == a && e.b == b) return;
    idx = (idx + 1) & cache_mask_;
  }
}

void Store::clear_caches() {
  std::fill(cache_.begin(), cache_.end(), CacheEntry{kEmptyTag, 0, 0, 0});
  cache_used_ = 0;
}

NodeRef Store::apply(BoolOp op, NodeRef f, NodeRef g) {
  if (f >= nodes_.size() || g >= nodes_.size()) throw DomainError("apply: unknown node");
  if (counting_) ++counts_.syntheses;
  return apply_rec(static_cast<std::uint8_t>(op), f, g);
}

NodeRef Store::apply_rec(std::uint8_t op, NodeRef f, NodeRef g) {
  if (is_const(f) && is_const(g)) return constant(op_bit(op, f == kTrue, g == kTrue));
  if (is_const(f)) {
    bool t0 = op_bit(op, f == kTrue, false), t1 = op_bit(op, f == kTrue, true);
    if (t0 == t1) return constant(t0);
    return t0 ? negate_rec(g) : g;
  }
  if (is_const(g)) {
    bool t0 = op_bit(op, false, g == kTrue), t1 = op_bit(op, true, g == kTrue);
    if (t0 == t1) return constant(t0);
    return t0 ? negate_rec(f) : f;
  }
  if (f == g) {
    bool t0 = op_bit(op, false, false), t1 = op_bit(op, true, true);
    if (t0 == t1) return constant(t0);
    return t0 ? negate_rec(f) : f;
  }
  NodeRef hit;
  if (cache_get(op, f, g, hit)) return hit;
  const Node nf = nodes_[f], ng = nodes_[g];
  std::uint32_t level = std::min(nf.level, ng.level);
  NodeRef f0 = nf.level == level ? nf.lo : f;
  NodeRef f1 = nf.level == level ? nf.hi : f;
  NodeRef g0 = ng.level == level ? ng.lo : g;
  NodeRef g1 = ng.level == level ? ng.hi : g;
  NodeRef res = mk(level, apply_rec(op, f0, g0), apply_rec(op, f1, g1));
  cache_put(op, f, g, res);
  return res;
}

NodeRef Store::negate(NodeRef f) {
  if (f >= nodes_.size()) throw DomainError("negate: unknown node");
  if (counting_) ++counts_.negations;
  return negate_rec(f);
}

NodeRef Store::negate_rec(NodeRef f) {
  if (is_const(f)) return f == kTrue ? kFalse : kTrue;
  NodeRef hit;
  if (cache_get(kNegateTag, f, 0, hit)) return hit;
  const Node n = nodes_[f];
  NodeRef res = mk(n.level, negate_rec(n.lo), negate_rec(n.hi));
  cache_put(kNegateTag, f, 0, res);
  return res;
}

NodeRef Store::restrict_bit(NodeRef f, unsigned bit, bool value) {
  if (f >= nodes_.size()) throw DomainError("restrict: unknown node");
  if (bit >= bit_count_) throw DomainError("restrict: bit out of range");
  return restrict_rec(f, pos_[bit], value);
}

NodeRef Store::restrict_rec(NodeRef f, std::uint32_t level, bool value) {
  if (is_const(f) || nodes_[f].level > level) return f;
  const Node n = nodes_[f];
  if (n.level == level) return value ? n.hi : n.lo;
  std::uint32_t tag = kRestrictTagBase + 2 * level + (value ? 1 : 0);
  NodeRef hit;
  if (cache_get(tag, f, 0, hit)) return hit;
  NodeRef res = mk(n.level, restrict_rec(n.lo, level, value), restrict_rec(n.hi, level, value));
  cache_put(tag, f, 0, res);
  return res;
}

NodeRef Store::restrict_vector(NodeRef f, unsigned vec, std::uint64_t value) {
  require_structured("restrict_vector");
  if (bits_ < 64 && value >= (1ULL << bits_)) throw DomainError("restrict_vector: value out of range");
  for (unsigned sig = 0; sig < bits_; ++sig)
    f = restrict_bit(f, flat_bit(vec, sig), (value >> sig) & 1);
  return f;
}

NodeRef Store::quantify(NodeRef f, std::span<const unsigned> bits, Quant q) {
  if (counting_) {
    ++counts_.quantifier_blocks;
    counts_.quantifier_bit_ops += bits.size();
  }
  return quantify_nocount(f, bits, q);
}

NodeRef Store::quantify_nocount(NodeRef f, std::span<const unsigned> bits, Quant q) {
  CountScope guard(*this);
  std::vector<std::uint32_t> levels;
  levels.reserve(bits.size());
  for (unsigned b : bits) {
    if (b >= bit_count_) throw DomainError("quantify: bit out of range");
    levels.push_back(pos_[b]);
  }
  std::sort(levels.begin(), levels.end());  // nearest the root first
  std::uint8_t op = static_cast<std::uint8_t>(q == Quant::Exists ? BoolOp::Or : BoolOp::And);
  for (std::uint32_t lvl : levels)
    f = apply_rec(op, restrict_rec(f, lvl, false), restrict_rec(f, lvl, true));
  return f;
}

NodeRef Store::quantify_vector(NodeRef f, unsigned vec, Quant q) {
  auto bits = vector_bits(vec);
  return quantify(f, bits, q);
}

NodeRef Store::eq_vectors_raw(unsigned a, unsigned b) {
  NodeRef acc = kTrue;
  for (unsigned sig = 0; sig < bits_; ++sig) {
    NodeRef xa = var(flat_bit(a, sig)), xb = var(flat_bit(b, sig));
    NodeRef same = apply_rec(static_cast<std::uint8_t>(BoolOp::Xnor), xa, xb);
    acc = apply_rec(static_cast<std::uint8_t>(BoolOp::And), acc, same);
  }
  return acc;
}

NodeRef Store::move_vector(NodeRef f, unsigned from, unsigned to) {
  require_structured("move_vector");
  if (from >= vectors_ || to >= vectors_) throw DomainError("move_vector: vector out of range");
  if (counting_) ++counts_.argument_reorders;
  return move_vector_nocount(f, from, to);
}

NodeRef Store::move_vector_nocount(NodeRef f, unsigned from, unsigned to) {
  if (from == to || !depends_on_vector(f, from)) return f;
  if (depends_on_vector(f, to))
    throw DomainError("move_vector: target vector already in the support");
  CountScope guard(*this);
  NodeRef g = apply_rec(static_cast<std::uint8_t>(BoolOp::And), f, eq_vectors_raw(from, to));
  auto bits = vector_bits(from);
  return quantify_nocount(g, bits, Quant::Exists);
}

NodeRef Store::swap_vectors(NodeRef f, unsigned a, unsigned b) {
  require_structured("swap_vectors");
  if (a >= vectors_ || b >= vectors_) throw DomainError("swap_vectors: vector out of range");
  std::vector<unsigned> rho(vectors_);
  std::iota(rho.begin(), rho.end(), 0u);
  std::swap(rho[a], rho[b]);
  return reorder_args(f, rho);
}

NodeRef Store::swap_adjacent_levels(NodeRef f, std::uint32_t level) {
  // Exchanges the meaning of the bits tested at `level` and `level + 1`.
  NodeRef a = mk(level, kFalse, kTrue);
  NodeRef b = mk(level + 1, kFalse, kTrue);
  NodeRef na = negate_rec(a), nb = negate_rec(b);
  NodeRef f00 = restrict_rec(restrict_rec(f, level, false), level + 1, false);
  NodeRef f01 = restrict_rec(restrict_rec(f, level, false), level + 1, true);
  NodeRef f10 = restrict_rec(restrict_rec(f, level, true), level + 1, false);
  NodeRef f11 = restrict_rec(restrict_rec(f, level, true), level + 1, true);
  auto aand = [&](NodeRef x, NodeRef y) { return apply_rec(static_cast<std::uint8_t>(BoolOp::And), x, y); };
  auto oor = [&](NodeRef x, NodeRef y) { return apply_rec(static_cast<std::uint8_t>(BoolOp::Or), x, y); };
  NodeRef r = oor(aand(na, aand(nb, f00)), aand(na, aand(b, f10)));
  r = oor(r, aand(a, aand(nb, f01)));
  r = oor(r, aand(a, aand(b, f11)));
  return r;
}

NodeRef Store::reorder_by_level_swaps(NodeRef f, std::span<const unsigned> rho, unsigned k, unsigned n) {
  // target[l]: level at which the bit currently tested at l has to end up.
  std::vector<std::uint32_t> target(bit_count_);
  auto level_of = [&](unsigned vec, unsigned sig) { return pos_[vec * n + sig]; };
  for (unsigned p = 0; p < k; ++p)
    for (unsigned sig = 0; sig < n; ++sig) target[level_of(p, sig)] = level_of(rho[p], sig);
  for (bool moved = true; moved;) {
    moved = false;
    for (std::uint32_t l = 0; l + 1 < bit_count_; ++l) {
      if (target[l] > target[l + 1]) {
        f = swap_adjacent_levels(f, l);
        std::swap(target[l], target[l + 1]);
        moved = true;
      }
    }
  }
  return f;
}

NodeRef Store::reorder_args(NodeRef f, std::span<const unsigned> rho) {
  unsigned k = static_cast<unsigned>(rho.size());
  if (k == 0 || bit_count_ % k != 0) throw DomainError("reorder_args: k must divide the bit count");
  if (vectors_ != 0 && k != vectors_)
    throw DomainError("reorder_args: permutation size differs from the store's vector count");
  unsigned n = bit_count_ / k;
  std::vector<bool> seen(k, false);
  for (unsigned v : rho) {
    if (v >= k || seen[v]) throw DomainError("reorder_args: not a permutation");
    seen[v] = true;
  }
  if (counting_) ++counts_.argument_reorders;
  CountScope guard(*this);

  // Work on a temporarily structured view when the store is unstructured.
  unsigned saved_vectors = vectors_, saved_bits = bits_;
  if (vectors_ == 0) {
    vectors_ = k;
    bits_ = n;
  }
  struct Restore {
    Store& s;
    unsigned v, b;
    ~Restore() {
      s.vectors_ = v;
      s.bits_ = b;
    }
  } restore{*this, saved_vectors, saved_bits};

  // Renaming vector p to rho[p], cycle by cycle. A cycle is processed with
  // chained moves when some involved or spare vector is absent from the
  // support; otherwise fall back to adjacent level swaps.
  std::vector<bool> done(k, false);
  for (unsigned start = 0; start < k; ++start) {
    if (done[start] || rho[start] == start) {
      done[start] = true;
      continue;
    }
    std::vector<unsigned> cycle;
    for (unsigned v = start; !done[v]; v = rho[v]) {
      done[v] = true;
      cycle.push_back(v);
    }
    // cycle[i] gets renamed to cycle[(i + 1) % t]
    unsigned t = static_cast<unsigned>(cycle.size());
    int pivot = -1;
    for (unsigned i = 0; i < t; ++i)
      if (!depends_on_vector(f, cycle[i])) {
        pivot = static_cast<int>(i);
        break;
      }
    if (pivot >= 0) {
      // cycle[pivot] -> cycle[pivot+1] is vacuous; unwind the rest backwards.
      for (unsigned step = 0; step + 1 < t; ++step) {
        unsigned i = (static_cast<unsigned>(pivot) + t - 1 - step) % t;
        f = move_vector_nocount(f, cycle[i], cycle[(i + 1) % t]);
      }
      continue;
    }
    int spare = -1;
    for (unsigned v = 0; v < k; ++v)
      if (!depends_on_vector(f, v) && std::find(cycle.begin(), cycle.end(), v) == cycle.end()) {
        spare = static_cast<int>(v);
        break;
      }
    if (spare >= 0) {
      f = move_vector_nocount(f, cycle[t - 1], static_cast<unsigned>(spare));
      for (unsigned step = 0; step + 1 < t; ++step) {
        unsigned i = t - 2 - step;
        f = move_vector_nocount(f, cycle[i], cycle[i + 1]);
      }
      f = move_vector_nocount(f, static_cast<unsigned>(spare), cycle[0]);
      continue;
    }
    // No free vector anywhere: repair the order with local level exchanges.
    std::vector<unsigned> partial(k);
    std::iota(partial.begin(), partial.end(), 0u);
    for (unsigned i = 0; i < t; ++i) partial[cycle[i]] = cycle[(i + 1) % t];
    f = reorder_by_level_swaps(f, partial, k, n);
  }
  return f;
}

bool Store::evaluate(NodeRef f, std::span<const std::uint8_t> assignment) const {
  if (assignment.size() != bit_count_) throw DomainError("evaluate: assignment size mismatch");
  while (!is_const(f)) {
    const Node& n = nodes_[f];
    f = assignment[order_.perm[n.level]] ? n.hi : n.lo;
  }
  return f == kTrue;
}

LevelProfile Store::level_profile(NodeRef f) const {
  LevelProfile p;
  p.per_level.assign(bit_count_, 0);
  std::unordered_set<NodeRef> seen;
  std::vector<NodeRef> stack{f};
  bool sink0 = false, sink1 = false;
  while (!stack.empty()) {
    NodeRef r = stack.back();
    stack.pop_back();
    if (r == kFalse) {
      sink0 = true;
      continue;
    }
    if (r == kTrue) {
      sink1 = true;
      continue;
    }
    if (!seen.insert(r).second) continue;
    const Node& n = nodes_[r];
    ++p.per_level[n.level];
    stack.push_back(n.lo);
    stack.push_back(n.hi);
  }
  for (auto c : p.per_level) {
    p.inner_nodes += c;
    p.width = std::max(p.width, c);
  }
  p.sink_nodes = (sink0 ? 1 : 0) + (sink1 ? 1 : 0);
  return p;
}

std::vector<unsigned> Store::support(NodeRef f) const {
  std::vector<bool> level_seen(bit_count_, false);
  std::unordered_set<NodeRef> seen;
  std::vector<NodeRef> stack{f};
  while (!stack.empty()) {
    NodeRef r = stack.back();
    stack.pop_back();
    if (is_const(r) || !seen.insert(r).second) continue;
    const Node& n = nodes_[r];
    level_seen[n.level] = true;
    stack.push_back(n.lo);
    stack.push_back(n.hi);
  }
  std::vector<unsigned> bits;
  for (std::uint32_t l = 0; l < bit_count_; ++l)
    if (level_seen[l]) bits.push_back(order_.perm[l]);
  std::sort(bits.begin(), bits.end());
  return bits;
}

bool Store::depends_on(NodeRef f, unsigned bit) const {
  if (bit >= bit_count_) throw DomainError("depends_on: bit out of range");
  std::uint32_t lvl = pos_[bit];
  std::unordered_set<NodeRef> seen;
  std::vector<NodeRef> stack{f};
  while (!stack.empty()) {
    NodeRef r = stack.back();
    stack.pop_back();
    if (is_const(r) || !seen.insert(r).second) continue;
    const Node& n = nodes_[r];
    if (n.level == lvl) return true;
    if (n.level > lvl) continue;
    stack.push_back(n.lo);
    stack.push_back(n.hi);
  }
  return false;
}

bool Store::depends_on_vector(NodeRef f, unsigned vec) const {
  require_structured("depends_on_vector");
  std::vector<bool> is_target(bit_count_, false);
  for (unsigned sig = 0; sig < bits_; ++sig) is_target[pos_[vec * bits_ + sig]] = true;
  std::unordered_set<NodeRef> seen;
  std::vector<NodeRef> stack{f};
  while (!stack.empty()) {
    NodeRef r = stack.back();
    stack.pop_back();
    if (is_const(r) || !seen.insert(r).second) continue;
    const Node& n = nodes_[r];
    if (is_target[n.level]) return true;
    stack.push_back(n.lo);
    stack.push_back(n.hi);
  }
  return false;
}

std::uint64_t Store::sat_count(NodeRef f, std::span<const unsigned> bits) const {
  if (bits.size() > 63) throw DomainError("sat_count: more than 63 bits");
  std::vector<std::uint32_t> levels;
  levels.reserve(bits.size());
  for (unsigned b : bits) {
    if (b >= bit_count_) throw DomainError("sat_count: bit out of range");
    levels.push_back(pos_[b]);
  }
  std::sort(levels.begin(), levels.end());
  if (std::adjacent_find(levels.begin(), levels.end()) != levels.end())
    throw DomainError("sat_count: duplicate bit");
  std::unordered_map<std::uint64_t, std::uint64_t> memo;
  std::function<std::uint64_t(NodeRef, std::size_t)> rec = [&](NodeRef r, std::size_t i) -> std::uint64_t {
    if (i == levels.size()) {
      if (!is_const(r)) throw DomainError("sat_count: support not covered by the given bits");
      return r == kTrue ? 1 : 0;
    }
    std::uint64_t key = (static_cast<std::uint64_t>(r) << 16) | i;
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::uint64_t res;
    std::uint32_t lvl = is_const(r) ? bit_count_ : nodes_[r].level;
    if (lvl > levels[i]) {
      res = 2 * rec(r, i + 1);
    } else if (lvl == levels[i]) {
      res = rec(nodes_[r].lo, i + 1) + rec(nodes_[r].hi, i + 1);
    } else {
      throw DomainError("sat_count: support not covered by the given bits");
    }
    memo.emplace(key, res);
    return res;
  };
  return rec(f, 0);
}

void Store::foreach_sat(NodeRef f, std::span<const unsigned> bits,
                        const std::function<void(std::span<const std::uint8_t>)>& fn) const {
  struct Slot {
    std::uint32_t level;
    std::size_t out;
  };
  std::vector<Slot> slots;
  slots.reserve(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] >= bit_count_) throw DomainError("foreach_sat: bit out of range");
    slots.push_back({pos_[bits[i]], i});
  }
  std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) { return a.level < b.level; });
  std::vector<std::uint8_t> buf(bits.size(), 0);
  std::function<void(NodeRef, std::size_t)> rec = [&](NodeRef r, std::size_t i) {
    if (r == kFalse) return;
    if (i == slots.size()) {
      if (!is_const(r)) throw DomainError("foreach_sat: support not covered by the given bits");
      fn(buf);
      return;
    }
    std::uint32_t lvl = is_const(r) ? bit_count_ : nodes_[r].level;
    if (lvl < slots[i].level) throw DomainError("foreach_sat: support not covered by the given bits");
    for (int v = 0; v <= 1; ++v) {
      buf[slots[i].out] = static_cast<std::uint8_t>(v);
      rec(lvl == slots[i].level ? (v ? nodes_[r].hi : nodes_[r].lo) : r, i + 1);
    }
  };
  rec(f, 0);
}

std::string Store::bit_name(unsigned bit) const {
  if (vectors_ != 0)
    return "v" + std::to_string(bit / bits_) + "[" + std::to_string(bit % bits_) + "]";
  return "b" + std::to_string(bit);
}

void Store::write_dot(std::ostream& os, NodeRef f, const std::string& name) const {
  os << "digraph \"" << name << "\" {\n";
  os << "  rankdir=TB;\n";
  std::unordered_set<NodeRef> seen;
  std::vector<NodeRef> stack{f};
  bool sink0 = false, sink1 = false;
  while (!stack.empty()) {
    NodeRef r = stack.back();
    stack.pop_back();
    if (r == kFalse) {
      sink0 = true;
      continue;
    }
    if (r == kTrue) {
      sink1 = true;
      continue;
    }
    if (!seen.insert(r).second) continue;
    const Node& n = nodes_[r];
    os << "  n" << r << " [label=\"" << bit_name(order_.perm[n.level]) << "\"];\n";
    os << "  n" << r << " -> n" << n.lo << " [style=dashed];\n";
    os << "  n" << r << " -> n" << n.hi << ";\n";
    stack.push_back(n.lo);
    stack.push_back(n.hi);
  }
  if (sink0) os << "  n0 [shape=box,label=\"0\"];\n";
  if (sink1) os << "  n1 [shape=box,label=\"1\"];\n";
  if (is_const(f)) os << "  // function is the constant " << (f == kTrue ? "1" : "0") << "\n";
  os << "}\n";
}

}  // namespace igbdd
