#pragma once

#include <set>
#include <utility>
#include <vector>

#include "symcycle/errors.hpp"
#include "symcycle/sign_vector.hpp"

namespace symcycle {

/**
 * A symmetric 2t-cycle in the tope graph of {+1,-1}^t: consecutive
 * vertices (cyclically) are Hamming-adjacent, opposite vertices are
 * antipodal (D^(k+t) = -D^k), and all 2t vertices are distinct.
 *
 * Vertex indices are 0-based and run over [0, 2t).
 */
class SymmetricCycle {
 public:
  /**
   * Validates a vertex sequence and builds the cycle. Accepts either the
   * first t vertices (the antipodal half is generated) or all 2t. Throws
   * NotACycleError on duplicates or a broken edge, NotSymmetricError when
   * the antipodal pairing fails, DomainError on a bad vertex count.
   */
  static SymmetricCycle from_vertices(std::vector<Tope> vertices) {
    if (vertices.empty()) throw DomainError("cycle needs at least one vertex");
    const int t = vertices[0].t();
    for (const Tope& v : vertices)
      if (v.t() != t) throw DomainError("cycle vertices must share one length");

    const int n = static_cast<int>(vertices.size());
    if (n == t) {
      vertices.reserve(static_cast<std::size_t>(2 * t));
      for (int k = 0; k < t; ++k) vertices.push_back(negate(vertices[static_cast<std::size_t>(k)]));
    } else if (n != 2 * t) {
      throw DomainError("expected t or 2t vertices for a symmetric cycle");
    }

    std::set<std::vector<Sign>> seen;
    for (const Tope& v : vertices)
      if (!seen.insert(v.entries()).second)
        throw NotACycleError("cycle vertices are not distinct");

    for (int k = 0; k < t; ++k)
      if (!(vertices[static_cast<std::size_t>(k + t)] ==
            negate(vertices[static_cast<std::size_t>(k)])))
        throw NotSymmetricError("antipodal pairing D^(k+t) = -D^k violated");

    for (int k = 0; k < 2 * t; ++k) {
      const Tope& cur = vertices[static_cast<std::size_t>(k)];
      const Tope& nxt = vertices[static_cast<std::size_t>((k + 1) % (2 * t))];
      if (hamming_distance(cur, nxt) != 1)
        throw NotACycleError("consecutive cycle vertices are not adjacent");
    }

    return SymmetricCycle(std::move(vertices));
  }

  int t() const { return static_cast<int>(vertices_.size()) / 2; }

  /// Vertex D^k, 0 <= k < 2t.
  const Tope& vertex(int k) const {
    if (k < 0 || k >= 2 * t()) throw DomainError("cycle vertex index out of range");
    return vertices_[static_cast<std::size_t>(k)];
  }

  const std::vector<Tope>& vertices() const { return vertices_; }

  friend bool operator==(const SymmetricCycle&, const SymmetricCycle&) = default;

 private:
  explicit SymmetricCycle(std::vector<Tope> vertices) : vertices_(std::move(vertices)) {}
  std::vector<Tope> vertices_;
};

/// Validating constructor as a free function; see SymmetricCycle::from_vertices.
inline SymmetricCycle validate_cycle(std::vector<Tope> vertices) {
  return SymmetricCycle::from_vertices(std::move(vertices));
}

/**
 * The distinguished symmetric cycle R of {+1,-1}^t: R^0 is the all-plus
 * tope and R^s negates the prefix [1,s], 1 <= s <= t-1; the second half
 * is antipodal. Defined for every t >= 2 (even and odd alike).
 */
inline SymmetricCycle distinguished_cycle(int t) {
  if (t < 2) throw DomainError("distinguished cycle needs t >= 2");
  std::vector<Tope> half;
  half.reserve(static_cast<std::size_t>(t));
  std::vector<Sign> entries(static_cast<std::size_t>(t), Sign{1});
  half.emplace_back(entries);
  for (int s = 1; s < t; ++s) {
    entries[static_cast<std::size_t>(s - 1)] = -1;
    half.emplace_back(entries);
  }
  return SymmetricCycle::from_vertices(std::move(half));
}

/**
 * The 2t subtopes labeling the edges of a symmetric cycle, in edge order:
 * S^k is the meet of D^k and D^(k+1 mod 2t). Indices are 0-based and the
 * antipodal pairing S^(k+t) = -S^k holds.
 */
class SubtopeSequence {
 public:
  explicit SubtopeSequence(const SymmetricCycle& cycle) : t_(cycle.t()) {
    const int n = 2 * t_;
    subtopes_.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
      subtopes_.push_back(meet_midpoint(cycle.vertex(k), cycle.vertex((k + 1) % n)));
  }

  int t() const { return t_; }

  /// Subtope S^k, 0 <= k < 2t.
  const Subtope& at(int k) const {
    if (k < 0 || k >= 2 * t_) throw DomainError("subtope index out of range");
    return subtopes_[static_cast<std::size_t>(k)];
  }

  const std::vector<Subtope>& subtopes() const { return subtopes_; }

  friend bool operator==(const SubtopeSequence&, const SubtopeSequence&) = default;

 private:
  int t_;
  std::vector<Subtope> subtopes_;
};

inline SubtopeSequence subtope_sequence(const SymmetricCycle& cycle) {
  return SubtopeSequence(cycle);
}

}  // namespace symcycle
