#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symcycle/errors.hpp"

namespace symcycle {

/// One sign component: +1, -1 or 0.
using Sign = std::int8_t;

/**
 * A length-t row vector over {+1,-1,0}.
 *
 * Ground-set elements are 1-based throughout the library: sign(1) is the
 * first component. Raw 0-based access is available via entries().
 */
class SignVector {
 public:
  explicit SignVector(std::vector<Sign> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw DomainError("sign vector must have positive length");
    for (Sign s : entries_)
      if (s != 1 && s != -1 && s != 0)
        throw DomainError("sign vector entries must be +1, -1 or 0");
  }

  /// Parses the text encoding: one character per entry, '+', '-' or '0'.
  static SignVector parse(std::string_view text) {
    return SignVector(parse_signs(text));
  }

  int t() const { return static_cast<int>(entries_.size()); }

  /// Component at ground-set element e, 1 <= e <= t.
  int sign(int e) const {
    if (e < 1 || e > t()) throw DomainError("ground-set element out of range");
    return entries_[static_cast<std::size_t>(e - 1)];
  }

  const std::vector<Sign>& entries() const { return entries_; }

  int zero_count() const {
    int n = 0;
    for (Sign s : entries_) n += (s == 0);
    return n;
  }

  friend bool operator==(const SignVector&, const SignVector&) = default;

 protected:
  static std::vector<Sign> parse_signs(std::string_view text) {
    if (text.empty()) throw ParseError("empty sign vector");
    std::vector<Sign> out;
    out.reserve(text.size());
    for (char c : text) {
      switch (c) {
        case '+': out.push_back(1); break;
        case '-': out.push_back(-1); break;
        case '0': out.push_back(0); break;
        default:
          throw ParseError(std::string("invalid sign character '") + c +
                           "' (expected '+', '-' or '0')");
      }
    }
    return out;
  }

 private:
  std::vector<Sign> entries_;
};

/** A maximal covector of the discrete hypercube {+1,-1}^t: no zero entries. */
class Tope : public SignVector {
 public:
  explicit Tope(std::vector<Sign> entries) : SignVector(std::move(entries)) {
    if (zero_count() != 0) throw DomainError("a tope has no zero entries");
  }
  explicit Tope(SignVector v) : SignVector(std::move(v)) {
    if (zero_count() != 0) throw DomainError("a tope has no zero entries");
  }
  static Tope parse(std::string_view text) { return Tope(parse_signs(text)); }
};

/** A covector with exactly one zero entry: the label of a tope-graph edge. */
class Subtope : public SignVector {
 public:
  explicit Subtope(std::vector<Sign> entries) : SignVector(std::move(entries)) {
    if (zero_count() != 1) throw DomainError("a subtope has exactly one zero entry");
  }
  explicit Subtope(SignVector v) : SignVector(std::move(v)) {
    if (zero_count() != 1) throw DomainError("a subtope has exactly one zero entry");
  }
  static Subtope parse(std::string_view text) { return Subtope(parse_signs(text)); }

  /// The unique ground-set element e with sign(e) == 0 (1-based).
  int zero_coordinate() const {
    for (int e = 1; e <= t(); ++e)
      if (sign(e) == 0) return e;
    return 0;  // unreachable: the constructor guarantees one zero
  }
};

/**
 * Relabeling of a tope or subtope over {0, 1, 1/2}: component e carries
 * (1 - v(e)) / 2, so topes land in {0,1}^t and subtopes carry exactly one
 * half. Entries are stored exactly as doubled integers in {0,1,2}; the
 * scale factor is fixed at 2.
 */
class HalfLabeling {
 public:
  explicit HalfLabeling(std::vector<Sign> doubled) : doubled_(std::move(doubled)) {
    for (Sign s : doubled_)
      if (s != 0 && s != 1 && s != 2)
        throw DomainError("doubled labeling entries must be 0, 1 or 2");
  }

  static constexpr int scale = 2;

  int t() const { return static_cast<int>(doubled_.size()); }

  /// Twice the labeling value at element e (1-based): 0, 1 or 2.
  int doubled(int e) const {
    if (e < 1 || e > t()) throw DomainError("ground-set element out of range");
    return doubled_[static_cast<std::size_t>(e - 1)];
  }

  const std::vector<Sign>& doubled_entries() const { return doubled_; }

  friend bool operator==(const HalfLabeling&, const HalfLabeling&) = default;

 private:
  std::vector<Sign> doubled_;
};

/**
 * The tope whose negative part is the given set: entry e is -1 iff e is in
 * `negative`. Elements are 1-based; duplicates are tolerated.
 */
inline Tope tope_from_negative_part(const std::vector<int>& negative, int t) {
  if (t < 1) throw DomainError("ground-set size must be positive");
  std::vector<Sign> entries(static_cast<std::size_t>(t), Sign{1});
  for (int e : negative) {
    if (e < 1 || e > t) throw DomainError("negative-part element outside [1,t]");
    entries[static_cast<std::size_t>(e - 1)] = -1;
  }
  return Tope(std::move(entries));
}

/// The all-plus tope of {+1,-1}^t.
inline Tope positive_tope(int t) { return tope_from_negative_part({}, t); }

/// Number of coordinates where the two vectors differ.
inline int hamming_distance(const SignVector& a, const SignVector& b) {
  if (a.t() != b.t()) throw DomainError("hamming_distance: length mismatch");
  int d = 0;
  for (int i = 0; i < a.t(); ++i) d += (a.entries()[i] != b.entries()[i]);
  return d;
}

/**
 * The midpoint (1/2)(a + b) of two adjacent topes, i.e. their meet in the
 * big face lattice: a subtope whose single zero sits at the disagreeing
 * coordinate. Throws NotAdjacentError unless the Hamming distance is 1.
 */
inline Subtope meet_midpoint(const Tope& a, const Tope& b) {
  if (hamming_distance(a, b) != 1)
    throw NotAdjacentError("meet_midpoint: topes are not at Hamming distance 1");
  std::vector<Sign> mid(a.entries().size());
  for (std::size_t i = 0; i < mid.size(); ++i)
    mid[i] = static_cast<Sign>((a.entries()[i] + b.entries()[i]) / 2);
  return Subtope(std::move(mid));
}

inline SignVector negate(const SignVector& v) {
  std::vector<Sign> out(v.entries().size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<Sign>(-v.entries()[i]);
  return SignVector(std::move(out));
}

inline Tope negate(const Tope& v) { return Tope(negate(static_cast<const SignVector&>(v))); }

inline Subtope negate(const Subtope& v) {
  return Subtope(negate(static_cast<const SignVector&>(v)));
}

/// The set {e : v(e) != 0}, ascending and 1-based.
inline std::vector<int> support(const SignVector& v) {
  std::vector<int> out;
  for (int e = 1; e <= v.t(); ++e)
    if (v.sign(e) != 0) out.push_back(e);
  return out;
}

/// The {0,1,1/2} relabeling (1/2)(1 - v(e)) in the doubled representation.
inline HalfLabeling to_binary_labeling(const SignVector& v) {
  std::vector<Sign> doubled(v.entries().size());
  for (std::size_t i = 0; i < doubled.size(); ++i)
    doubled[i] = static_cast<Sign>(1 - v.entries()[i]);
  return HalfLabeling(std::move(doubled));
}

/// Text encoding: '+', '-' and '0', one character per entry.
inline std::string to_string(const SignVector& v) {
  std::string s;
  s.reserve(v.entries().size());
  for (Sign e : v.entries()) s += (e > 0 ? '+' : (e < 0 ? '-' : '0'));
  return s;
}

}  // namespace symcycle
