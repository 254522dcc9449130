#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <utility>
#include <vector>

#include "symcycle/cycle.hpp"
#include "symcycle/errors.hpp"
#include "symcycle/exact_linalg.hpp"
#include "symcycle/matrix.hpp"
#include "symcycle/sign_vector.hpp"

namespace symcycle {

/**
 * The unique ternary row vector x with odd support such that the
 * decomposed tope equals x M(D). Components are 1-based via at().
 */
struct TernaryCoords {
  std::vector<Sign> x;

  int t() const { return static_cast<int>(x.size()); }
  int at(int i) const {
    if (i < 1 || i > t()) throw DomainError("coordinate index outside [1,t]");
    return x[static_cast<std::size_t>(i - 1)];
  }
  std::vector<int> support() const {
    std::vector<int> s;
    for (int i = 1; i <= t(); ++i)
      if (at(i) != 0) s.push_back(i);
    return s;
  }

  friend bool operator==(const TernaryCoords&, const TernaryCoords&) = default;
};

/// Integer coordinates over the subtope basis (S^0 ... S^(t-1)), 0-based storage.
using CoeffVector = std::vector<std::int64_t>;

struct DecompositionTerm {
  int index = 0;             // subtope index in [0, 2t)
  std::int64_t coeff = 0;    // strictly positive

  friend bool operator==(const DecompositionTerm&, const DecompositionTerm&) = default;
};

/**
 * A positive integer combination of cycle subtopes reconstructing a tope
 * or subtope. Indices are 0-based over [0, 2t), ascending, and never
 * contain an antipodal pair {k, k+t}: negative coefficients are folded
 * into the antipodal index instead.
 */
struct Decomposition {
  std::vector<DecompositionTerm> terms;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/** An inclusion-minimal, odd-cardinality set of cycle vertex indices summing
 *  to a tope. */
struct VertexDecomposition {
  std::vector<int> indices;  // 0-based over [0, 2t), ascending

  friend bool operator==(const VertexDecomposition&, const VertexDecomposition&) = default;
};

/**
 * The unique x in {-1,0,1}^t with odd support such that T = x M(D),
 * computed by exact fraction-free elimination. NotATopeError guards
 * corrupted input; it is unreachable for genuine topes of {+1,-1}^t.
 */
inline TernaryCoords tope_coords(const Tope& tope, const SymmetricCycle& cycle) {
  if (tope.t() != cycle.t()) throw DomainError("tope and cycle sizes differ");
  const IntMatrix m = matrix_M(cycle);
  std::vector<std::int64_t> rhs(tope.entries().begin(), tope.entries().end());
  const auto y = exact::solve_left(m, rhs);

  std::vector<Sign> x(static_cast<std::size_t>(cycle.t()));
  int nonzero = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (boost::multiprecision::denominator(y[i]) != 1)
      throw NotATopeError("coordinates over M(D) are not integral");
    const auto num = boost::multiprecision::numerator(y[i]);
    if (num > 1 || num < -1)
      throw NotATopeError("coordinates over M(D) are not ternary");
    x[i] = static_cast<Sign>(num.convert_to<int>());
    nonzero += (x[i] != 0);
  }
  if (nonzero % 2 == 0)
    throw NotATopeError("coordinates over M(D) have even support");
  return TernaryCoords{std::move(x)};
}

/**
 * The inclusion-minimal vertex set summing to the tope: coordinate +1 at
 * position i selects vertex i-1, coordinate -1 selects the antipode i-1+t.
 */
inline VertexDecomposition vertex_decomposition(const Tope& tope, const SymmetricCycle& cycle) {
  const TernaryCoords x = tope_coords(tope, cycle);
  const int t = cycle.t();
  VertexDecomposition dec;
  for (int i = 1; i <= t; ++i) {
    if (x.at(i) > 0) dec.indices.push_back(i - 1);
    if (x.at(i) < 0) dec.indices.push_back(i - 1 + t);
  }
  std::sort(dec.indices.begin(), dec.indices.end());
  return dec;
}

/// Sum of the selected cycle vertices, as an exact integer vector.
inline std::vector<std::int64_t> reconstruct(const VertexDecomposition& dec,
                                             const SymmetricCycle& cycle) {
  const int t = cycle.t();
  std::vector<std::int64_t> acc(static_cast<std::size_t>(t), 0);
  for (int k : dec.indices) {
    if (k < 0 || k >= 2 * t) throw DomainError("vertex index outside [0,2t)");
    const auto& v = cycle.vertex(k).entries();
    for (int j = 0; j < t; ++j) acc[static_cast<std::size_t>(j)] += v[static_cast<std::size_t>(j)];
  }
  return acc;
}

/**
 * Coordinates of a tope over the subtope basis: xbar = x P(t), where x are
 * the ternary coordinates over M(D). Entries are all odd. Requires even t.
 */
inline CoeffVector xbar_of_tope(const Tope& tope, const SymmetricCycle& cycle) {
  const int t = cycle.t();
  if (t % 2 != 0)
    throw SingularError("subtope-basis coordinates need even t (W(D) is singular)");
  const TernaryCoords x = tope_coords(tope, cycle);
  CoeffVector xbar(static_cast<std::size_t>(t), 0);
  for (int i = 1; i <= t; ++i) {
    const int xi = x.at(i);
    if (xi == 0) continue;
    for (int j = 1; j <= t; ++j)
      xbar[static_cast<std::size_t>(j - 1)] += static_cast<std::int64_t>(xi) * p_entry(i, j);
  }
  return xbar;
}

namespace detail {

/// Folds an integer coordinate vector over (S^0..S^(t-1)) into positive
/// terms over all 2t subtopes; zero entries drop out.
inline Decomposition fold_coeffs(const CoeffVector& xbar) {
  const int t = static_cast<int>(xbar.size());
  Decomposition dec;
  for (int i = 1; i <= t; ++i) {
    const std::int64_t c = xbar[static_cast<std::size_t>(i - 1)];
    if (c == 0) continue;
    dec.terms.push_back(c > 0 ? DecompositionTerm{i - 1, c}
                              : DecompositionTerm{i - 1 + t, -c});
  }
  std::sort(dec.terms.begin(), dec.terms.end(),
            [](const DecompositionTerm& a, const DecompositionTerm& b) {
              return a.index < b.index;
            });
  return dec;
}

}  // namespace detail

/**
 * The unique decomposition of a tope over the cycle subtopes: exactly t
 * terms with odd coefficients in [1, t-1]. Requires even t.
 */
inline Decomposition tope_decomposition(const Tope& tope, const SymmetricCycle& cycle) {
  return detail::fold_coeffs(xbar_of_tope(tope, cycle));
}

/** The two topes whose midpoint is the given subtope (zero set to +1, then -1). */
inline std::pair<Tope, Tope> subtope_to_tope_pair(const Subtope& s) {
  const int z = s.zero_coordinate();
  std::vector<Sign> plus(s.entries()), minus(s.entries());
  plus[static_cast<std::size_t>(z - 1)] = 1;
  minus[static_cast<std::size_t>(z - 1)] = -1;
  return {Tope(std::move(plus)), Tope(std::move(minus))};
}

/**
 * Coordinates of a subtope over the subtope basis: the average of the
 * coordinate vectors of its two endpoint topes, which is integral because
 * both are entrywise odd. Requires even t.
 */
inline CoeffVector xbar_of_subtope(const Subtope& s, const SymmetricCycle& cycle) {
  const int t = cycle.t();
  if (t % 2 != 0)
    throw SingularError("subtope-basis coordinates need even t (W(D) is singular)");
  if (s.t() != t) throw DomainError("subtope and cycle sizes differ");
  const auto [plus, minus] = subtope_to_tope_pair(s);
  const CoeffVector a = xbar_of_tope(plus, cycle);
  const CoeffVector b = xbar_of_tope(minus, cycle);
  CoeffVector xbar(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int64_t sum = a[i] + b[i];
    // odd + odd is even, so the midpoint is integral
    xbar[i] = sum / 2;
  }
  return xbar;
}

/**
 * The unique inclusion-minimal decomposition of a subtope over the cycle
 * subtopes: at most t terms with coefficients in [1, t-1]. Requires even t.
 */
inline Decomposition subtope_decomposition(const Subtope& s, const SymmetricCycle& cycle) {
  return detail::fold_coeffs(xbar_of_subtope(s, cycle));
}

/// Sum of the weighted subtopes, as an exact integer vector.
inline std::vector<std::int64_t> reconstruct(const Decomposition& dec,
                                             const SubtopeSequence& seq) {
  const int t = seq.t();
  std::vector<std::int64_t> acc(static_cast<std::size_t>(t), 0);
  for (const auto& term : dec.terms) {
    if (term.index < 0 || term.index >= 2 * t)
      throw DomainError("subtope index outside [0,2t)");
    const auto& s = seq.at(term.index).entries();
    for (int j = 0; j < t; ++j)
      acc[static_cast<std::size_t>(j)] += term.coeff * s[static_cast<std::size_t>(j)];
  }
  return acc;
}

/**
 * The ternary matrix X with P(t) = X M(D): row i holds the coordinates of
 * the i-th row of P(t), viewed as a hypercube vertex, over M(D). Each row
 * has odd support; M(D) W(D)^(-1) = X M(D) for every symmetric cycle.
 */
inline IntMatrix matrix_X(const SymmetricCycle& cycle) {
  const int t = cycle.t();
  if (t % 2 != 0) throw SingularError("matrix_X needs even t (P(t) undefined otherwise)");
  IntMatrix x(t, t);
  for (int i = 1; i <= t; ++i) {
    const auto row = p_row(i, t);
    std::vector<Sign> entries(row.begin(), row.end());
    const TernaryCoords coords = tope_coords(Tope(std::move(entries)), cycle);
    for (int j = 0; j < t; ++j) x.at(i - 1, j) = coords.x[static_cast<std::size_t>(j)];
  }
  return x;
}

}  // namespace symcycle
