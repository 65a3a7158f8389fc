#include "igbdd/generators.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "igbdd/obdd.hpp"

namespace igbdd {

namespace {

// Uniform draw from {0, .., bound-1}. Rejection keeps it exact, and rolling
// our own (instead of std::uniform_int_distribution) keeps seeded runs
// byte-identical across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = -bound % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

template <typename T>
void shuffle_portable(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[uniform_below(rng, i)]);
}

}  // namespace

std::string random_balanced_string(std::size_t count, std::uint64_t seed) {
  if (count == 0) throw DomainError("balanced string needs at least one pair");
  std::mt19937_64 rng(seed);
  std::string s;
  s.reserve(2 * count);
  std::uint64_t height = 0;
  for (std::uint64_t rest = 2 * count; rest > 0; --rest) {
    // Of the completions counted by the ballot numbers, opening here keeps
    // the fraction (h+2)(r-h) / (2r(h+1)); at height 0 that is 1 and once
    // only closers fit it is 0, so no invalid prefix can appear.
    const std::uint64_t num = (height + 2) * (rest - height);
    const std::uint64_t den = 2 * rest * (height + 1);
    if (uniform_below(rng, den) < num) {
      s.push_back('[');
      ++height;
    } else {
      s.push_back(']');
      --height;
    }
  }
  return s;
}

IntervalSet string_to_unit_intervals(std::string_view s) {
  if (s.empty() || s.size() % 2 != 0)
    throw DomainError("balanced string must have positive even length");
  IntervalSet iv;
  iv.unit = true;
  iv.intervals.resize(s.size() / 2);
  std::size_t opened = 0, closed = 0;
  for (std::size_t p = 0; p < s.size(); ++p) {
    switch (s[p]) {
      case '[':
        if (opened == iv.intervals.size()) throw DomainError("string opens too many intervals");
        iv.intervals[opened++].first = static_cast<long long>(p);
        break;
      case ']':
        if (closed == opened) throw DomainError("string closes an unopened interval");
        iv.intervals[closed++].second = static_cast<long long>(p);
        break;
      default:
        throw DomainError("balanced string may only contain '[' and ']'");
    }
  }
  if (closed != opened) throw DomainError("string leaves intervals open");
  return iv;
}

IntervalSet random_general_intervals(std::size_t count, long long span, std::uint64_t seed) {
  if (count == 0) throw DomainError("need at least one interval");
  const long long wanted = 2 * static_cast<long long>(count);
  if (span < wanted) throw DomainError("span too small for distinct endpoints");
  std::mt19937_64 rng(seed);
  // Floyd's subset sampling: uniform without replacement, one draw per point.
  std::set<long long> chosen;
  for (long long j = span - wanted; j < span; ++j) {
    const long long t = static_cast<long long>(uniform_below(rng, static_cast<std::uint64_t>(j) + 1));
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<long long> points(chosen.begin(), chosen.end());
  shuffle_portable(points, rng);
  IntervalSet iv;
  for (std::size_t i = 0; i < count; ++i) {
    const long long a = points[2 * i], b = points[2 * i + 1];
    iv.intervals.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(iv.intervals.begin(), iv.intervals.end());
  return iv;
}

WorstCaseSpec random_worst_case_spec(std::size_t count, std::uint64_t seed) {
  if (count == 0 || (count & (count - 1)) != 0)
    throw DomainError("worst-case family needs a power-of-two count");
  WorstCaseSpec spec;
  spec.count = count;
  spec.column_runs.resize(count);
  std::mt19937_64 rng(seed);
  const std::size_t half = count / 2;
  for (std::size_t j = 0; j < count; ++j)
    spec.column_runs[j] =
        j < half ? half - j + uniform_below(rng, half) : count - 1 - j;
  return spec;
}

IntervalSet worst_case_instance(const WorstCaseSpec& spec) {
  const std::size_t count = spec.count;
  if (count == 0 || spec.column_runs.size() != count)
    throw DomainError("worst-case spec needs one run per column");
  const long long stride = static_cast<long long>(count) + 2;
  IntervalSet iv;
  std::vector<long long> placed(count, 0);  // right endpoints taken per gap
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t reach = i + spec.column_runs[i];
    if (reach >= count) throw DomainError("column run leaves the matrix");
    iv.intervals.push_back({static_cast<long long>(i) * stride,
                            static_cast<long long>(reach) * stride + ++placed[reach]});
  }
  return iv;
}

IntervalSet worst_case_instance(std::size_t count, std::uint64_t seed) {
  return worst_case_instance(random_worst_case_spec(count, seed));
}

}  // namespace igbdd
