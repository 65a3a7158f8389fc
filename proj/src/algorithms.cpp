#include "igbdd/algorithms.hpp"

#include <initializer_list>
#include <vector>

#include "igbdd/builders.hpp"

namespace igbdd {
namespace {

constexpr unsigned X = slots::kX;
constexpr unsigned Y = slots::kY;
constexpr unsigned Z = slots::kZ;
constexpr unsigned W = slots::kW;
constexpr unsigned L = slots::kL;
constexpr unsigned L1 = slots::kL1;
constexpr unsigned L2 = slots::kL2;
constexpr unsigned Z2 = slots::kZ2;

void require_relation_store(const Store& s) {
  if (s.vector_count() != slots::kCount)
    throw DomainError("relation algorithms need the shared 8-vector store layout");
}

std::vector<long long> zero_weights(const Store& s) {
  return std::vector<long long>(s.vector_count(), 0);
}

std::vector<unsigned> joined_bits(const Store& s, std::initializer_list<unsigned> vecs) {
  std::vector<unsigned> bits;
  for (unsigned v : vecs) {
    const std::vector<unsigned> part = s.vector_bits(v);
    bits.insert(bits.end(), part.begin(), part.end());
  }
  return bits;
}

/// Vertex pairs that could share a color: distinct, non-adjacent vertices.
NodeRef complement_edges(Store& s, NodeRef chi_e, std::uint64_t vertex_count) {
  NodeRef in_x = compare_const(s, X, Cmp::Lt, vertex_count);
  NodeRef in_y = compare_const(s, Y, Cmp::Lt, vertex_count);
  NodeRef distinct = s.negate(eq_vectors(s, X, Y));
  return s.apply(BoolOp::And, s.apply(BoolOp::And, in_x, in_y),
                 s.apply(BoolOp::And, s.negate(chi_e), distinct));
}

/// RE(x,y,l) for unit families: among the labels z in [x, y) whose interval
/// closes before y opens, take the largest; l is its distance from x. With
/// labels sorted by both endpoints this counts the right endpoints falling
/// between x's right and y's left endpoint (z = x stands for count zero).
NodeRef right_endpoint_count_unit(Store& s, NodeRef co_edge) {
  NodeRef range = s.apply(BoolOp::And, le_vectors(s, X, Z), lt_vectors(s, Z, Y));
  NodeRef h1 = s.apply(BoolOp::And, range, s.move_vector(co_edge, X, Z));
  NodeRef rival = s.move_vector(h1, Z, Z2);
  NodeRef beaten =
      s.quantify_vector(s.apply(BoolOp::And, rival, gt_vectors(s, Z2, Z)), Z2, Quant::Exists);
  std::vector<long long> w = zero_weights(s);
  w[Z] = 1;
  w[X] = -1;
  w[L] = -1;
  NodeRef dist = weighted_eq(s, w, 0);
  NodeRef body = s.apply(BoolOp::And, s.apply(BoolOp::And, h1, s.negate(beaten)), dist);
  return s.apply(BoolOp::And, le_vectors(s, X, Y), s.quantify_vector(body, Z, Quant::Exists));
}

/// RE(x,y,l) for general families: the candidate set is ordered by the
/// right-endpoint order instead of by label, and l is a difference of
/// right-endpoint ranks.
NodeRef right_endpoint_count_general(Store& s, NodeRef chi_e, NodeRef co_edge,
                                     std::uint64_t vertex_count) {
  NodeRef eo = right_endpoint_order(s, chi_e, vertex_count, /*strict=*/true);
  RankRelation ranks = enumerate_order(s, eo, compare_const(s, X, Cmp::Lt, vertex_count));
  NodeRef closes_before_y = s.move_vector(eo, X, Z);                       // eo(z, y)
  NodeRef closes_before_x = s.move_vector(s.move_vector(eo, X, Z), Y, X);  // eo(z, x)
  NodeRef h1 = s.apply(BoolOp::And, s.apply(BoolOp::And, s.negate(closes_before_x), closes_before_y),
                       s.move_vector(co_edge, X, Z));
  NodeRef rival = s.move_vector(h1, Z, Z2);
  NodeRef later = s.move_vector(s.move_vector(eo, X, Z), Y, Z2);  // eo(z, z')
  NodeRef beaten = s.quantify_vector(s.apply(BoolOp::And, rival, later), Z2, Quant::Exists);
  NodeRef rank_x = s.move_vector(ranks.eo, L, L1);
  NodeRef rank_z = s.move_vector(s.move_vector(ranks.eo, X, Z), L, L2);
  std::vector<long long> w = zero_weights(s);
  w[L2] = 1;
  w[L1] = -1;
  w[L] = -1;
  NodeRef dist = weighted_eq(s, w, 0);
  NodeRef body = s.apply(BoolOp::And, s.apply(BoolOp::And, h1, s.negate(beaten)),
                         s.apply(BoolOp::And, s.apply(BoolOp::And, rank_x, rank_z), dist));
  NodeRef counted = s.quantify(body, joined_bits(s, {Z, L1, L2}), Quant::Exists);
  return s.apply(BoolOp::And, lt_vectors(s, X, Y), counted);
}

/// LE(x,y,l): among the labels z in (x, y] whose interval opens after x
/// closes, take the smallest; l is its distance to y. This counts the left
/// endpoints between x's right and y's left endpoint, inclusive, and needs
/// no modification for general families because labels sort left endpoints.
NodeRef left_endpoint_count(Store& s, NodeRef co_edge) {
  NodeRef range = s.apply(BoolOp::And, lt_vectors(s, X, Z), le_vectors(s, Z, Y));
  NodeRef h2 = s.apply(BoolOp::And, range, s.move_vector(co_edge, Y, Z));
  NodeRef rival = s.move_vector(h2, Z, Z2);
  NodeRef beaten =
      s.quantify_vector(s.apply(BoolOp::And, rival, lt_vectors(s, Z2, Z)), Z2, Quant::Exists);
  std::vector<long long> w = zero_weights(s);
  w[Y] = 1;
  w[Z] = -1;
  w[L] = -1;
  NodeRef dist = weighted_eq(s, w, 0);
  NodeRef body = s.apply(BoolOp::And, s.apply(BoolOp::And, h2, s.negate(beaten)), dist);
  return s.apply(BoolOp::And, le_vectors(s, X, Y), s.quantify_vector(body, Z, Quant::Exists));
}

/// RELATED(x,y): y is the nearest label after x whose endpoint counts agree,
/// meaning y's interval can continue x's color class.
NodeRef related_from_counts(Store& s, NodeRef re, NodeRef le) {
  NodeRef re_near = s.move_vector(s.move_vector(re, Y, Z), L, L1);
  NodeRef le_near = s.move_vector(s.move_vector(le, Y, Z), L, L1);
  NodeRef closer = s.apply(BoolOp::And, s.apply(BoolOp::And, lt_vectors(s, Z, Y), re_near), le_near);
  NodeRef blocked = s.quantify(closer, joined_bits(s, {Z, L1}), Quant::Exists);
  NodeRef agree = s.apply(BoolOp::And, re, le);
  NodeRef best = s.apply(BoolOp::And, agree, s.negate(blocked));
  return s.quantify_vector(best, L, Quant::Exists);
}

/// Chains the successor relation into color classes, orders the classes by
/// their smallest member and ranks every vertex by its class.
NodeRef color_from_related(Store& s, NodeRef related, std::uint64_t vertex_count) {
  NodeRef same = transitive_closure(s, s.apply(BoolOp::Or, related, eq_vectors(s, X, Y)));
  NodeRef preceded =
      s.quantify_vector(s.apply(BoolOp::And, same, lt_vectors(s, X, Y)), X, Quant::Exists);
  NodeRef leads = s.negate(preceded);  // class minima, over kY
  NodeRef rep_x = s.apply(BoolOp::And, s.move_vector(s.move_vector(same, X, Z), Y, X),
                          s.move_vector(leads, Y, Z));  // same(z, x) for minimal z
  NodeRef rep_y = s.apply(BoolOp::And, s.move_vector(same, X, Z2),
                          s.move_vector(leads, Y, Z2));  // same(z', y) for minimal z'
  NodeRef ordered = s.apply(BoolOp::And, s.apply(BoolOp::And, rep_x, rep_y), lt_vectors(s, Z, Z2));
  NodeRef class_order = s.quantify(ordered, joined_bits(s, {Z, Z2}), Quant::Exists);
  return enumerate_order(s, class_order, compare_const(s, X, Cmp::Lt, vertex_count)).eo;
}

}  // namespace

std::shared_ptr<Store> make_relation_store(unsigned n) {
  return std::make_shared<Store>(slots::kCount, n);
}

NodeRef transitive_closure(Store& s, NodeRef relation) {
  require_relation_store(s);
  const unsigned n = s.bits_per_vector();
  NodeRef closed = s.apply(BoolOp::Or, relation, eq_vectors(s, X, Y));
  for (unsigned round = 0; round <= n; ++round) {
    NodeRef head = s.move_vector(closed, Y, Z);  // closed(x, z)
    NodeRef tail = s.move_vector(closed, X, Z);  // closed(z, y)
    closed = s.quantify_vector(s.apply(BoolOp::And, head, tail), Z, Quant::Exists);
  }
  return closed;
}

RankRelation enumerate_order(Store& s, NodeRef order) {
  require_relation_store(s);
  NodeRef rows = s.quantify_vector(order, Y, Quant::Exists);
  NodeRef cols = s.quantify_vector(order, X, Quant::Exists);
  NodeRef elements = s.apply(BoolOp::Or, rows, s.move_vector(cols, Y, X));
  return enumerate_order(s, order, elements);
}

RankRelation enumerate_order(Store& s, NodeRef order, NodeRef element_set) {
  require_relation_store(s);
  const unsigned n = s.bits_per_vector();
  // direct successors: related pairs with nothing strictly between
  NodeRef hop_out = s.move_vector(order, Y, Z);
  NodeRef hop_in = s.move_vector(order, X, Z);
  NodeRef via = s.quantify_vector(s.apply(BoolOp::And, hop_out, hop_in), Z, Quant::Exists);
  NodeRef direct = s.apply(BoolOp::And, order, s.negate(via));
  // chain distances over (kX, kY, kL), doubling the horizon each round
  NodeRef eo =
      s.apply(BoolOp::Or, s.apply(BoolOp::And, const_vector(s, L, 0), eq_vectors(s, X, Y)),
              s.apply(BoolOp::And, const_vector(s, L, 1), direct));
  for (unsigned i = 1; i <= n; ++i) {
    const std::uint64_t half = std::uint64_t{1} << (i - 1);
    NodeRef keep = s.apply(BoolOp::And, compare_const(s, L, Cmp::Le, half), eo);
    NodeRef head = s.move_vector(s.restrict_vector(eo, L, half), Y, Z);  // half steps to z
    NodeRef tail = s.move_vector(s.move_vector(eo, X, Z), L, L1);        // l1 steps onward
    std::vector<long long> w = zero_weights(s);
    w[L] = 1;
    w[L1] = -1;
    NodeRef add = weighted_eq(s, w, static_cast<long long>(half));  // |l| - |l1| = half
    NodeRef glued = s.apply(BoolOp::And, s.apply(BoolOp::And, head, tail), add);
    NodeRef longer = s.quantify(glued, joined_bits(s, {Z, L1}), Quant::Exists);
    NodeRef in_range = s.apply(BoolOp::And, compare_const(s, L, Cmp::Gt, half),
                               compare_const(s, L, Cmp::Le, half * 2));
    eo = s.apply(BoolOp::Or, keep, s.apply(BoolOp::And, in_range, longer));
  }
  // anchor chains at the minimal elements; x's rank is its chain distance
  NodeRef chains = s.move_vector(s.move_vector(eo, X, Z), Y, X);  // eo(z, x, l)
  NodeRef preceded = s.quantify_vector(order, X, Quant::Exists);  // over kY
  NodeRef minimal = s.move_vector(s.negate(preceded), Y, Z);
  NodeRef ranks = s.quantify_vector(s.apply(BoolOp::And, chains, minimal), Z, Quant::Exists);
  ranks = s.apply(BoolOp::And, ranks, element_set);
  // a usable order ranks every element exactly once
  NodeRef again = s.move_vector(ranks, L, L1);
  NodeRef twice =
      s.apply(BoolOp::And, s.apply(BoolOp::And, ranks, again), s.negate(eq_vectors(s, L, L1)));
  if (twice != kFalse)
    throw DomainError("enumerate_order: an element received two ranks (order not total)");
  NodeRef unranked =
      s.apply(BoolOp::And, element_set, s.negate(s.quantify_vector(ranks, L, Quant::Exists)));
  if (unranked != kFalse)
    throw DomainError("enumerate_order: an element received no rank (order not total)");
  return RankRelation{ranks};
}

NodeRef maximum_matching_unit(Store& s, NodeRef chi_e, std::uint64_t vertex_count) {
  require_relation_store(s);
  // successor steps along the path decomposition: edges to the next label
  std::vector<long long> w = zero_weights(s);
  w[Y] = 1;
  w[X] = -1;
  NodeRef step = s.apply(BoolOp::And, chi_e, weighted_eq(s, w, 1));
  // path starts: vertices no step enters
  NodeRef entered = s.quantify_vector(step, X, Quant::Exists);  // over kY
  NodeRef first = s.apply(BoolOp::And, s.negate(entered), compare_const(s, Y, Cmp::Lt, vertex_count));
  first = s.move_vector(first, Y, Z);
  // vertices with an outgoing step
  NodeRef continues = s.move_vector(s.quantify_vector(step, Y, Quant::Exists), X, Z);
  // x reaches y along its path iff every label strictly between continues
  NodeRef between = s.apply(BoolOp::And, le_vectors(s, X, Z), lt_vectors(s, Z, Y));
  NodeRef gap_ok = s.apply(BoolOp::Or, s.negate(between), continues);
  NodeRef reach =
      s.apply(BoolOp::And, le_vectors(s, X, Y), s.quantify_vector(gap_ok, Z, Quant::Forall));
  reach = s.apply(BoolOp::And, reach, compare_const(s, X, Cmp::Lt, vertex_count));
  reach = s.apply(BoolOp::And, reach, compare_const(s, Y, Cmp::Lt, vertex_count));
  // keep the steps leaving vertices an even distance from their path start
  NodeRef from_first = s.move_vector(s.move_vector(reach, X, Z), Y, X);  // reach(z, x)
  std::vector<long long> parity = zero_weights(s);
  parity[X] = 1;
  parity[Z] = -1;
  parity[W] = -2;
  NodeRef even = weighted_eq(s, parity, 0);  // |x| - |z| = 2|w|
  NodeRef body = s.apply(BoolOp::And, s.apply(BoolOp::And, first, from_first), even);
  NodeRef keep = s.quantify(body, joined_bits(s, {Z, W}), Quant::Exists);
  NodeRef matched = s.apply(BoolOp::And, step, keep);
  return s.apply(BoolOp::Or, matched, s.swap_vectors(matched, X, Y));
}

NodeRef coloring_unit(Store& s, NodeRef chi_e, std::uint64_t vertex_count) {
  return color_from_related(s, related_intervals(s, chi_e, vertex_count, ColoringMode::Unit),
                            vertex_count);
}

NodeRef coloring_general(Store& s, NodeRef chi_e, std::uint64_t vertex_count) {
  return color_from_related(s, related_intervals(s, chi_e, vertex_count, ColoringMode::General),
                            vertex_count);
}

NodeRef right_endpoint_order(Store& s, NodeRef chi_e, std::uint64_t vertex_count, bool strict) {
  require_relation_store(s);
  // let every vertex reach at least its own label so intervals without
  // later neighbors still take part in the comparison
  NodeRef self = s.apply(BoolOp::And, eq_vectors(s, X, Y), compare_const(s, X, Cmp::Lt, vertex_count));
  NodeRef touch = s.apply(BoolOp::Or, chi_e, self);
  // candidate reach pairs (x', y') for (x, y), with x'@kZ and y'@kZ2
  NodeRef reach_x = s.apply(BoolOp::And, le_vectors(s, X, Z), s.move_vector(touch, Y, Z));
  NodeRef touch_y = s.move_vector(s.move_vector(touch, Y, Z2), X, Y);
  NodeRef reach_y = s.apply(BoolOp::And, le_vectors(s, Y, Z2), touch_y);
  NodeRef pairs = s.apply(BoolOp::And, reach_x, reach_y);
  // drop pairs beaten in either coordinate, keeping the maximal reaches
  NodeRef rivals = s.move_vector(s.move_vector(pairs, Z, W), Z2, L);
  NodeRef further = s.apply(BoolOp::Or, gt_vectors(s, W, Z), gt_vectors(s, L, Z2));
  NodeRef dominated =
      s.quantify(s.apply(BoolOp::And, rivals, further), joined_bits(s, {W, L}), Quant::Exists);
  // x closes first when it reaches less far, with ties broken by label
  NodeRef prefer = s.apply(BoolOp::Or, lt_vectors(s, Z, Z2),
                           s.apply(BoolOp::And, eq_vectors(s, Z, Z2), lt_vectors(s, X, Y)));
  NodeRef body = s.apply(BoolOp::And, s.apply(BoolOp::And, pairs, prefer), s.negate(dominated));
  NodeRef eo = s.quantify(body, joined_bits(s, {Z, Z2}), Quant::Exists);
  if (!strict) eo = s.apply(BoolOp::Or, eo, self);
  return eo;
}

NodeRef related_intervals(Store& s, NodeRef chi_e, std::uint64_t vertex_count, ColoringMode mode) {
  require_relation_store(s);
  NodeRef co_edge = complement_edges(s, chi_e, vertex_count);
  NodeRef re = mode == ColoringMode::Unit
                   ? right_endpoint_count_unit(s, co_edge)
                   : right_endpoint_count_general(s, chi_e, co_edge, vertex_count);
  NodeRef le = left_endpoint_count(s, co_edge);
  return related_from_counts(s, re, le);
}

}  // namespace igbdd
