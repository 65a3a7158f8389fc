#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace igbdd {

/// Index of a node inside a Store. Nodes are canonical: two equal functions
/// built in the same store always receive the same NodeRef.
using NodeRef = std::uint32_t;

inline constexpr NodeRef kFalse = 0;
inline constexpr NodeRef kTrue = 1;

/// Thrown when a documented precondition of an operation is violated.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binary Boolean operator encoded as a 2x2 truth table:
/// bit (2*a + b) of the mask is op(a, b).
enum class BoolOp : std::uint8_t {
  And = 0b1000,
  Or = 0b1110,
  Xor = 0b0110,
  Xnor = 0b1001,
  Nand = 0b0111,
  Nor = 0b0001,
  Diff = 0b0100,     // a and not b
  Implies = 0b1011,  // not a or b
};

enum class Quant { Exists, Forall };

/// Variable order: perm[pos] is the flat bit index tested at depth pos
/// (position 0 is nearest the root).
struct VarOrder {
  std::vector<std::uint32_t> perm;

  static VarOrder identity(unsigned bit_count);

  /// Interleaved order with decreasing significance over `vectors` argument
  /// vectors of `bits` bits each: bit (vector 0, significance bits-1) first,
  /// then the same significance of the remaining vectors, down to
  /// significance 0. Flat bit index of (vector j, significance i) is j*bits+i;
  /// significance 0 is the least significant bit of a vector's value.
  static VarOrder interleaved(unsigned vectors, unsigned bits);

  unsigned bit_count() const { return static_cast<unsigned>(perm.size()); }
  std::vector<std::uint32_t> positions() const;  // inverse permutation
  void validate() const;
};

/// Per-level statistics of the subgraph reachable from one node.
struct LevelProfile {
  std::vector<std::uint64_t> per_level;  // inner nodes testing each level
  std::uint64_t inner_nodes = 0;
  unsigned sink_nodes = 0;  // reachable constants (0, 1 or 2)
  std::uint64_t width = 0;  // max over per_level
  std::uint64_t size() const { return inner_nodes + sink_nodes; }
};

/// Operation counters. Synthesis, negation, quantification and argument
/// reordering are counted at the granularity the caller invokes them;
/// the internal plumbing of a composite operation is not double counted.
struct OpCounts {
  std::uint64_t syntheses = 0;
  std::uint64_t negations = 0;
  std::uint64_t quantifier_blocks = 0;
  std::uint64_t quantifier_bit_ops = 0;
  std::uint64_t argument_reorders = 0;
  std::uint64_t peak_store_nodes = 0;

  /// Difference of the event counters; peak is taken from `*this`.
  OpCounts since(const OpCounts& earlier) const;
};

/// A store of reduced ordered BDD nodes sharing one variable order.
///
/// The store is append only: nodes are never freed individually, reclamation
/// happens by destroying the whole store between runs. The operation cache is
/// unbounded and can be dropped explicitly with clear_caches().
class Store {
 public:
  /// Store over `vectors` argument vectors of `bits` bits each, under the
  /// interleaved order with decreasing significance.
  Store(unsigned vectors, unsigned bits);

  /// Store over `order.bit_count()` bits under an arbitrary order, without
  /// argument-vector structure.
  explicit Store(VarOrder order);

  Store(const Store&) = delete;
  Store& operator=(const Store&) = delete;

  unsigned bit_count() const { return bit_count_; }
  unsigned vector_count() const { return vectors_; }  // 0 when unstructured
  unsigned bits_per_vector() const { return bits_; }
  const VarOrder& order() const { return order_; }
  std::uint32_t level_of_bit(unsigned bit) const { return pos_[bit]; }
  unsigned bit_at_level(std::uint32_t level) const { return order_.perm[level]; }
  unsigned flat_bit(unsigned vec, unsigned significance) const;
  std::vector<unsigned> vector_bits(unsigned vec) const;

  NodeRef constant(bool v) const { return v ? kTrue : kFalse; }
  bool is_const(NodeRef f) const { return f <= kTrue; }
  std::uint32_t node_level(NodeRef f) const { return nodes_[f].level; }
  NodeRef node_lo(NodeRef f) const { return nodes_[f].lo; }
  NodeRef node_hi(NodeRef f) const { return nodes_[f].hi; }

  /// Canonicalizing constructor: collapses redundant tests and hash-conses.
  /// Children must live strictly below `level`.
  NodeRef mk(std::uint32_t level, NodeRef lo, NodeRef hi);

  /// Single-variable function of one flat bit.
  NodeRef var(unsigned bit);

  NodeRef apply(BoolOp op, NodeRef f, NodeRef g);
  NodeRef negate(NodeRef f);
  NodeRef restrict_bit(NodeRef f, unsigned bit, bool value);
  NodeRef restrict_vector(NodeRef f, unsigned vec, std::uint64_t value);

  /// Quantifies the given bits one at a time, nearest to the root first.
  NodeRef quantify(NodeRef f, std::span<const unsigned> bits, Quant q);
  NodeRef quantify_vector(NodeRef f, unsigned vec, Quant q);

  /// Argument reordering: for rho a permutation of k = rho.size() vectors
  /// (k * bits_per_vector == bit_count), returns h with
  ///   h(v_0, ..., v_{k-1}) = f(v_{rho[0]}, ..., v_{rho[k-1]}).
  NodeRef reorder_args(NodeRef f, std::span<const unsigned> rho);
  NodeRef swap_vectors(NodeRef f, unsigned a, unsigned b);

  /// Renames argument vector `from` to `to`; f must not depend on `to`.
  NodeRef move_vector(NodeRef f, unsigned from, unsigned to);

  /// assignment[bit] holds the value of the flat bit index.
  bool evaluate(NodeRef f, std::span<const std::uint8_t> assignment) const;

  LevelProfile level_profile(NodeRef f) const;
  std::vector<unsigned> support(NodeRef f) const;  // flat bits, ascending
  bool depends_on(NodeRef f, unsigned bit) const;
  bool depends_on_vector(NodeRef f, unsigned vec) const;

  /// Number of satisfying assignments over the given bits; the support of f
  /// must be contained in them and bits.size() must be at most 63.
  std::uint64_t sat_count(NodeRef f, std::span<const unsigned> bits) const;

  /// Invokes fn for every satisfying assignment over `bits` (which must cover
  /// the support of f); values arrive in the same order as `bits`.
  void foreach_sat(NodeRef f, std::span<const unsigned> bits,
                   const std::function<void(std::span<const std::uint8_t>)>& fn) const;

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t peak_node_count() const { return peak_nodes_; }
  void clear_caches();

  const OpCounts& counts() const { return counts_; }

  /// Writes the subgraph reachable from f in DOT format. Dashed edges lead to
  /// the low child, solid edges to the high child.
  void write_dot(std::ostream& os, NodeRef f, const std::string& name = "f") const;

  /// Human-readable variable name for a flat bit.
  std::string bit_name(unsigned bit) const;

 private:
  struct Node {
    std::uint32_t level;
    NodeRef lo, hi;
  };
  struct CacheEntry {
    std::uint32_t tag;
    NodeRef a, b, result;
  };
  friend class CountScope;

  NodeRef apply_rec(std::uint8_t op, NodeRef f, NodeRef g);
  NodeRef negate_rec(NodeRef f);
  NodeRef restrict_rec(NodeRef f, std::uint32_t level, bool value);
  NodeRef quantify_nocount(NodeRef f, std::span<const unsigned> bits, Quant q);
  NodeRef move_vector_nocount(NodeRef f, unsigned from, unsigned to);
  NodeRef eq_vectors_raw(unsigned a, unsigned b);
  NodeRef swap_adjacent_levels(NodeRef f, std::uint32_t level);
  NodeRef reorder_by_level_swaps(NodeRef f, std::span<const unsigned> rho, unsigned k, unsigned n);
  void require_structured(const char* what) const;

  void grow_unique();
  std::size_t unique_lookup_slot(std::uint32_t level, NodeRef lo, NodeRef hi) const;
  bool cache_get(std::uint32_t tag, NodeRef a, NodeRef b, NodeRef& out) const;
  void cache_put(std::uint32_t tag, NodeRef a, NodeRef b, NodeRef result);

  unsigned bit_count_ = 0;
  unsigned vectors_ = 0;
  unsigned bits_ = 0;
  VarOrder order_;
  std::vector<std::uint32_t> pos_;  // bit -> level

  std::vector<Node> nodes_;
  std::vector<std::uint32_t> unique_;  // open addressing into nodes_
  std::size_t unique_mask_ = 0;

  std::vector<CacheEntry> cache_;
  std::size_t cache_mask_ = 0;
  std::size_t cache_used_ = 0;

  std::size_t peak_nodes_ = 0;
  OpCounts counts_;
  bool counting_ = true;
};

/// Temporarily disables operation counting, for internal phases of composite
/// operations.
class CountScope {
 public:
  explicit CountScope(Store& s) : store_(s), prev_(s.counting_) { s.counting_ = false; }
  ~CountScope() { store_.counting_ = prev_; }
  CountScope(const CountScope&) = delete;

 private:
  Store& store_;
  bool prev_;
};

/// Smallest n with 2^n >= count (0 for count <= 1).
unsigned bits_for_count(std::uint64_t count);

}  // namespace igbdd
