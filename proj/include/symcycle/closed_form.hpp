#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symcycle/decomposition.hpp"
#include "symcycle/errors.hpp"
#include "symcycle/matrix.hpp"

namespace symcycle {

struct Interval {
  int lo = 0, hi = 0;  // 1-based, inclusive

  friend bool operator==(const Interval&, const Interval&) = default;
};

/**
 * A nonempty subset of [1,t] written as separated intervals: consecutive
 * intervals satisfy hi_k + 2 <= lo_(k+1), so each interval is a maximal
 * run. This is the normal form the closed-form evaluation works on.
 */
class IntervalSet {
 public:
  IntervalSet(std::vector<Interval> intervals, int t)
      : intervals_(std::move(intervals)), t_(t) {
    if (intervals_.empty()) throw DomainError("interval set must be nonempty");
    int prev_hi = -1;
    for (const Interval& iv : intervals_) {
      if (iv.lo < 1 || iv.hi > t_ || iv.lo > iv.hi)
        throw DomainError("interval outside [1,t] or reversed");
      if (prev_hi >= 0 && iv.lo < prev_hi + 2)
        throw DomainError("intervals must be separated by a gap of at least one element");
      prev_hi = iv.hi;
    }
  }

  int t() const { return t_; }
  const std::vector<Interval>& intervals() const { return intervals_; }
  int rho() const { return static_cast<int>(intervals_.size()); }

  bool contains_first() const { return intervals_.front().lo == 1; }
  bool contains_last() const { return intervals_.back().hi == t_; }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (const Interval& iv : intervals_)
      for (int e = iv.lo; e <= iv.hi; ++e) out.push_back(e);
    return out;
  }

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> intervals_;
  int t_;
};

/**
 * Decomposes a nonempty subset of [1,t] into its maximal runs of
 * consecutive elements; maximality makes the gaps at least 2 automatically.
 * Duplicates are tolerated; empty input is a DomainError.
 */
inline IntervalSet canonical_intervals(std::vector<int> a, int t) {
  if (t < 1) throw DomainError("ground-set size must be positive");
  if (a.empty()) throw DomainError("the negative part must be nonempty");
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  if (a.front() < 1 || a.back() > t) throw DomainError("subset element outside [1,t]");

  std::vector<Interval> runs;
  Interval cur{a[0], a[0]};
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] == cur.hi + 1) {
      cur.hi = a[i];
    } else {
      runs.push_back(cur);
      cur = {a[i], a[i]};
    }
  }
  runs.push_back(cur);
  return IntervalSet(std::move(runs), t);
}

/// The four closed-form branches, keyed by which of {1, t} the set contains.
enum class CoeffCase { kFirstOnly, kFirstAndLast, kNeither, kLastOnly };

inline CoeffCase closed_form_case(const IntervalSet& a) {
  const bool first = a.contains_first(), last = a.contains_last();
  if (first && last) return CoeffCase::kFirstAndLast;
  if (first) return CoeffCase::kFirstOnly;
  if (last) return CoeffCase::kLastOnly;
  return CoeffCase::kNeither;
}

inline const char* to_label(CoeffCase c) {
  switch (c) {
    case CoeffCase::kFirstOnly: return "i";
    case CoeffCase::kFirstAndLast: return "ii";
    case CoeffCase::kNeither: return "iii";
    case CoeffCase::kLastOnly: return "iv";
  }
  return "?";
}

/**
 * Computation-free evaluation of the subtope-basis coordinates of the tope
 * with negative part A, with respect to the distinguished cycle: a signed
 * sum of at most 2 rho(A) + 1 rows of P(t), generated lazily from the
 * entry formula. Equals xbar_of_tope(tope_from_negative_part(A,t),
 * distinguished_cycle(t)) exactly, at O(rho t) cost instead of a solve.
 */
inline CoeffVector closed_form_xbar(const IntervalSet& a) {
  const int t = a.t();
  if (t % 2 != 0) throw SingularError("closed form needs even t (P(t) undefined otherwise)");

  CoeffVector acc(static_cast<std::size_t>(t), 0);
  auto add_row = [&](int i, int sgn) {
    for (int j = 1; j <= t; ++j)
      acc[static_cast<std::size_t>(j - 1)] += sgn * p_entry(i, j);
  };

  const auto& ivs = a.intervals();
  const int rho = a.rho();
  switch (closed_form_case(a)) {
    case CoeffCase::kFirstOnly:
      for (int k = 0; k < rho; ++k) add_row(ivs[static_cast<std::size_t>(k)].hi + 1, +1);
      for (int l = 1; l < rho; ++l) add_row(ivs[static_cast<std::size_t>(l)].lo, -1);
      break;
    case CoeffCase::kFirstAndLast:
    case CoeffCase::kLastOnly:
      for (int k = 0; k < rho - 1; ++k) add_row(ivs[static_cast<std::size_t>(k)].hi + 1, +1);
      for (int l = 0; l < rho; ++l) add_row(ivs[static_cast<std::size_t>(l)].lo, -1);
      break;
    case CoeffCase::kNeither:
      add_row(1, +1);
      for (int k = 0; k < rho; ++k) add_row(ivs[static_cast<std::size_t>(k)].hi + 1, +1);
      for (int l = 0; l < rho; ++l) add_row(ivs[static_cast<std::size_t>(l)].lo, -1);
      break;
  }
  return acc;
}

namespace detail {

inline int pm(int n) { return (n % 2 == 0) ? 1 : -1; }

/// Component e of row hi+1 of P(t), by the two-case parity formula.
inline int upper_term(int e, int hi) { return hi < e ? pm(e + hi + 1) : pm(e + hi); }

/// Component e of row lo of P(t), by the two-case parity formula.
inline int lower_term(int e, int lo) { return lo <= e ? pm(e + lo) : pm(e + lo + 1); }

}  // namespace detail

/**
 * Single component e of closed_form_xbar, evaluated directly from the
 * per-case parity sums without touching any P(t) row.
 */
inline std::int64_t componentwise_xbar(const IntervalSet& a, int e) {
  const int t = a.t();
  if (t % 2 != 0) throw SingularError("closed form needs even t (P(t) undefined otherwise)");
  if (e < 1 || e > t) throw DomainError("component index outside [1,t]");

  const auto& ivs = a.intervals();
  const int rho = a.rho();
  std::int64_t acc = 0;
  switch (closed_form_case(a)) {
    case CoeffCase::kFirstOnly:
      for (int k = 0; k < rho; ++k) acc += detail::upper_term(e, ivs[static_cast<std::size_t>(k)].hi);
      for (int l = 1; l < rho; ++l) acc -= detail::lower_term(e, ivs[static_cast<std::size_t>(l)].lo);
      break;
    case CoeffCase::kFirstAndLast:
    case CoeffCase::kLastOnly:
      for (int k = 0; k < rho - 1; ++k) acc += detail::upper_term(e, ivs[static_cast<std::size_t>(k)].hi);
      for (int l = 0; l < rho; ++l) acc -= detail::lower_term(e, ivs[static_cast<std::size_t>(l)].lo);
      break;
    case CoeffCase::kNeither:
      acc += detail::pm(e + 1);
      for (int k = 0; k < rho; ++k) acc += detail::upper_term(e, ivs[static_cast<std::size_t>(k)].hi);
      for (int l = 0; l < rho; ++l) acc -= detail::lower_term(e, ivs[static_cast<std::size_t>(l)].lo);
      break;
  }
  return acc;
}

/**
 * Coordinates of the tope with a single negated element s: row P(t)^2 for
 * s = 1, P(t)^1 - P(t)^s + P(t)^(s+1) for interior s, -P(t)^t for s = t.
 */
inline CoeffVector singleton_xbar(int s, int t) {
  if (s < 1 || s > t) throw DomainError("element outside [1,t]");
  if (t % 2 != 0) throw SingularError("closed form needs even t (P(t) undefined otherwise)");

  CoeffVector acc(static_cast<std::size_t>(t), 0);
  auto add_row = [&](int i, int sgn) {
    for (int j = 1; j <= t; ++j)
      acc[static_cast<std::size_t>(j - 1)] += sgn * p_entry(i, j);
  };
  if (s == 1) {
    add_row(2, +1);
  } else if (s == t) {
    add_row(t, -1);
  } else {
    add_row(1, +1);
    add_row(s, -1);
    add_row(s + 1, +1);
  }
  return acc;
}

/**
 * Parses the CLI interval syntax: comma-separated items "a" or "a-b",
 * where each endpoint is a 1-based integer or the literal 't'; e.g.
 * "2-3,5" or the whole-set shorthand "1-t". Overlaps are tolerated and
 * canonicalized away.
 */
inline IntervalSet parse_interval_spec(std::string_view spec, int t) {
  auto parse_endpoint = [&](std::string_view token) -> int {
    if (token == "t") return t;
    if (token.empty()) throw ParseError("empty interval endpoint");
    int value = 0;
    for (char c : token) {
      if (c < '0' || c > '9') throw ParseError("interval endpoint must be a number or 't'");
      value = value * 10 + (c - '0');
      if (value > t) throw ParseError("interval endpoint exceeds t");
    }
    return value;
  };

  std::vector<int> elements;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const std::size_t comma = std::min(spec.find(',', pos), spec.size());
    std::string_view item = spec.substr(pos, comma - pos);
    if (item.empty()) throw ParseError("empty item in interval list");
    const std::size_t dash = item.find('-');
    int lo, hi;
    if (dash == std::string_view::npos) {
      lo = hi = parse_endpoint(item);
    } else {
      lo = parse_endpoint(item.substr(0, dash));
      hi = parse_endpoint(item.substr(dash + 1));
    }
    if (lo < 1 || hi > t || lo > hi) throw ParseError("interval outside [1,t] or reversed");
    for (int e = lo; e <= hi; ++e) elements.push_back(e);
    if (comma == spec.size()) break;
    pos = comma + 1;
  }
  return canonical_intervals(std::move(elements), t);
}

}  // namespace symcycle
