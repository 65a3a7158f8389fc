#include "igbdd/builders.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace igbdd {

namespace {

void check_two_vectors(const Store& s, unsigned a, unsigned b) {
  if (s.vector_count() == 0) throw DomainError("builder requires a vector-structured store");
  if (a >= s.vector_count() || b >= s.vector_count() || a == b)
    throw DomainError("builder needs two distinct argument vectors");
}

long long floor_div(long long num, long long den) {
  long long q = num / den, r = num % den;
  return (r != 0 && (r < 0) != (den < 0)) ? q - 1 : q;
}

}  // namespace

NodeRef eq_vectors(Store& s, unsigned a, unsigned b) {
  check_two_vectors(s, a, b);
  NodeRef cont = kTrue;
  for (unsigned sig = 0; sig < s.bits_per_vector(); ++sig) {
    std::uint32_t la = s.level_of_bit(s.flat_bit(a, sig));
    std::uint32_t lb = s.level_of_bit(s.flat_bit(b, sig));
    std::uint32_t first = std::min(la, lb), second = std::max(la, lb);
    cont = s.mk(first, s.mk(second, cont, kFalse), s.mk(second, kFalse, cont));
  }
  return cont;
}

NodeRef gt_vectors(Store& s, unsigned a, unsigned b) {
  check_two_vectors(s, a, b);
  NodeRef cont = kFalse;  // values equal on every significance: not greater
  for (unsigned sig = 0; sig < s.bits_per_vector(); ++sig) {
    std::uint32_t la = s.level_of_bit(s.flat_bit(a, sig));
    std::uint32_t lb = s.level_of_bit(s.flat_bit(b, sig));
    if (la < lb) {
      // a's bit is examined first
      NodeRef a0 = s.mk(lb, cont, kFalse);
      NodeRef a1 = s.mk(lb, kTrue, cont);
      cont = s.mk(la, a0, a1);
    } else {
      NodeRef b0 = s.mk(la, cont, kTrue);
      NodeRef b1 = s.mk(la, kFalse, cont);
      cont = s.mk(lb, b0, b1);
    }
  }
  return cont;
}

NodeRef ge_vectors(Store& s, unsigned a, unsigned b) { return s.negate(gt_vectors(s, b, a)); }
NodeRef lt_vectors(Store& s, unsigned a, unsigned b) { return gt_vectors(s, b, a); }
NodeRef le_vectors(Store& s, unsigned a, unsigned b) { return s.negate(gt_vectors(s, a, b)); }

NodeRef compare_const(Store& s, unsigned vec, Cmp cmp, std::uint64_t c) {
  if (s.vector_count() == 0) throw DomainError("builder requires a vector-structured store");
  if (vec >= s.vector_count()) throw DomainError("vector index out of range");
  unsigned n = s.bits_per_vector();
  std::uint64_t limit = n >= 64 ? ~0ULL : (1ULL << n) - 1;  // largest representable value

  auto build_eq = [&](std::uint64_t v) -> NodeRef {
    if (v > limit) return kFalse;
    NodeRef cont = kTrue;
    for (unsigned sig = 0; sig < n; ++sig) {
      std::uint32_t l = s.level_of_bit(s.flat_bit(vec, sig));
      cont = (v >> sig) & 1 ? s.mk(l, kFalse, cont) : s.mk(l, cont, kFalse);
    }
    return cont;
  };
  auto build_gt = [&](std::uint64_t v) -> NodeRef {
    if (v >= limit) return kFalse;
    NodeRef cont = kFalse;
    for (unsigned sig = 0; sig < n; ++sig) {
      std::uint32_t l = s.level_of_bit(s.flat_bit(vec, sig));
      cont = (v >> sig) & 1 ? s.mk(l, kFalse, cont) : s.mk(l, cont, kTrue);
    }
    return cont;
  };

  switch (cmp) {
    case Cmp::Eq:
      return build_eq(c);
    case Cmp::Ne:
      return s.negate(build_eq(c));
    case Cmp::Gt:
      return build_gt(c);
    case Cmp::Le:
      return s.negate(build_gt(c));
    case Cmp::Ge:
      return c == 0 ? kTrue : build_gt(c - 1);
    case Cmp::Lt:
      return c == 0 ? kFalse : s.negate(build_gt(c - 1));
  }
  throw DomainError("unknown comparison");
}

NodeRef const_vector(Store& s, unsigned vec, std::uint64_t value) {
  return compare_const(s, vec, Cmp::Eq, value);
}

NodeRef weighted_ge(Store& s, std::span<const long long> weights, long long threshold,
                    std::vector<std::size_t>* pre_reduction_width) {
  if (pre_reduction_width) pre_reduction_width->clear();
  unsigned k = s.vector_count(), n = s.bits_per_vector();
  if (k == 0) throw DomainError("builder requires a vector-structured store");
  if (weights.size() != k) throw DomainError("weighted_ge: one weight per argument vector");
  if (n > 48) throw DomainError("weighted_ge: bit width too large for exact accumulation");

  long long S = 0, pos = 0, neg = 0;
  for (long long w : weights) {
    S += std::llabs(w);
    if (w > 0) pos += w;
    if (w < 0) neg -= w;
  }
  long long top = (1LL << n) - 1;
  if (threshold <= -neg * top) return kTrue;  // below the minimum possible sum
  if (threshold > pos * top) return kFalse;   // above the maximum possible sum

  // -threshold = Tn * 2^n + r with r in [0, 2^n); the r bits are folded into
  // the running sum one group at a time, Tn is compared against at the end.
  long long Tn = floor_div(-threshold, 1LL << n);
  long long r = -threshold - (Tn << n);

  // The automaton state before consuming level l is the exact integer value
  // of all weighted bits and r bits of the groups processed so far (the
  // current group's contributions included up to vector l % k). At the end of
  // each significance group states far enough from the decision boundary are
  // resolved to sinks, which keeps every level at 6(S+1) states or fewer.
  unsigned total_levels = k * n;
  auto vec_at = [&](std::uint32_t level) { return level % k; };
  auto sig_at = [&](std::uint32_t level) { return n - 1 - level / k; };

  // Transition from (level, state) on bit value b. Returns either a sink in
  // `sink` or the successor state in `next`.
  auto step = [&](std::uint32_t level, long long state, bool b, bool& is_sink, NodeRef& sink,
                  long long& next) {
    long long w = weights[vec_at(level)];
    long long v = state + (b ? w : 0);
    if (level + 1 == total_levels) {
      is_sink = true;
      sink = v >= -(Tn << n) ? kTrue : kFalse;
      return;
    }
    if (vec_at(level) == k - 1) {
      unsigned i = sig_at(level);  // boundary after this significance group
      long long X = -Tn * (1LL << (n - i));
      if (v >= X + S) {
        is_sink = true;
        sink = kTrue;
        return;
      }
      if (v <= X - (S + 1)) {
        is_sink = true;
        sink = kFalse;
        return;
      }
      is_sink = false;
      next = 2 * v + ((r >> (i - 1)) & 1);
      return;
    }
    is_sink = false;
    next = v;
  };

  // Forward reachability over (level, state).
  std::vector<std::set<long long>> live(total_levels);
  long long init = (r >> (n - 1)) & 1;
  live[0].insert(init);
  for (std::uint32_t l = 0; l + 1 < total_levels; ++l)
    for (long long st : live[l])
      for (int b = 0; b <= 1; ++b) {
        bool is_sink;
        NodeRef sink;
        long long nx;
        step(l, st, b, is_sink, sink, nx);
        if (!is_sink) live[l + 1].insert(nx);
      }

  // Live states at each level fit in an interval that interval arithmetic
  // over the same transition rules pins down: interior steps widen it by the
  // consumed weight, boundary steps clamp survivors to (X - (S+1), X + S)
  // and then double them and append the next r bit.
  {
    long long lo = init, hi = init;
    for (std::uint32_t l = 0; l < total_levels; ++l) {
      long long count = hi < lo ? 0 : hi - lo + 1;
      assert(static_cast<long long>(live[l].size()) <= count);
      (void)count;
      long long w = weights[vec_at(l)];
      lo += std::min(0LL, w);
      hi += std::max(0LL, w);
      if (vec_at(l) == k - 1 && l + 1 < total_levels) {
        unsigned i = sig_at(l);
        long long X = -Tn * (1LL << (n - i));
        lo = 2 * std::max(lo, X - S);
        hi = 2 * std::min(hi, X + S - 1) + 1;
      }
    }
  }
  if (pre_reduction_width) {
    pre_reduction_width->reserve(total_levels);
    for (const auto& states : live) pre_reduction_width->push_back(states.size());
  }

  // Backward construction; mk merges states with identical futures.
  std::map<long long, NodeRef> below;
  for (std::uint32_t l = total_levels; l-- > 0;) {
    std::map<long long, NodeRef> cur;
    for (long long st : live[l]) {
      NodeRef child[2];
      for (int b = 0; b <= 1; ++b) {
        bool is_sink;
        NodeRef sink;
        long long nx;
        step(l, st, b, is_sink, sink, nx);
        child[b] = is_sink ? sink : below.at(nx);
      }
      cur.emplace(st, s.mk(l, child[0], child[1]));
    }
    below = std::move(cur);
  }
  return below.at(init);
}

NodeRef weighted_eq(Store& s, std::span<const long long> weights, long long threshold) {
  std::vector<long long> flipped(weights.begin(), weights.end());
  for (long long& w : flipped) w = -w;
  NodeRef ge = weighted_ge(s, weights, threshold);
  NodeRef le = weighted_ge(s, flipped, -threshold);
  return s.apply(BoolOp::And, ge, le);
}

}  // namespace igbdd
