#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "symcycle/cycle.hpp"
#include "symcycle/errors.hpp"

namespace symcycle {

/** Dense integer matrix with exact 64-bit entries, 0-based indexing. */
class IntMatrix {
 public:
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
    if (rows < 1 || cols < 1) throw DomainError("matrix dimensions must be positive");
  }

  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    if (rows.empty()) throw DomainError("matrix needs at least one row");
    IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
      if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m.cols())
        throw DomainError("matrix rows must share one length");
      for (int j = 0; j < m.cols(); ++j)
        m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
  }

  static IntMatrix scaled_identity(int n, std::int64_t lambda) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = lambda;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::int64_t at(int i, int j) const { return a_[index(i, j)]; }
  std::int64_t& at(int i, int j) { return a_[index(i, j)]; }

  std::vector<std::int64_t> row(int i) const {
    std::vector<std::int64_t> out(static_cast<std::size_t>(cols_));
    for (int j = 0; j < cols_; ++j) out[static_cast<std::size_t>(j)] = at(i, j);
    return out;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw DomainError("matrix index out of range");
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j);
  }

  int rows_, cols_;
  std::vector<std::int64_t> a_;
};

/// Exact product; entries here are tiny, so plain 64-bit arithmetic suffices.
inline IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matmul: inner dimensions differ");
  IntMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const std::int64_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

inline IntMatrix scale(const IntMatrix& a, std::int64_t lambda) {
  IntMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = lambda * a.at(i, j);
  return c;
}

/** The t x t matrix whose rows are the cycle vertices D^0 ... D^(t-1). */
inline IntMatrix matrix_M(const SymmetricCycle& cycle) {
  const int t = cycle.t();
  IntMatrix m(t, t);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) m.at(i, j) = cycle.vertex(i).entries()[static_cast<std::size_t>(j)];
  return m;
}

/** The t x t matrix whose rows are the edge subtopes S^0 ... S^(t-1). */
inline IntMatrix matrix_W(const SymmetricCycle& cycle) {
  const int t = cycle.t();
  const SubtopeSequence seq(cycle);
  IntMatrix w(t, t);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) w.at(i, j) = seq.at(i).entries()[static_cast<std::size_t>(j)];
  return w;
}

/**
 * The banded matrix N(t) with rows (..,1,1,..) on the two central
 * diagonals and (-1,0,...,0,1) as last row, so that 2 W = N(t) M for
 * every symmetric cycle. Nonsingular iff t is even.
 */
inline IntMatrix matrix_N(int t) {
  if (t < 2) throw DomainError("matrix_N needs t >= 2");
  IntMatrix n(t, t);
  for (int i = 0; i < t - 1; ++i) {
    n.at(i, i) = 1;
    n.at(i, i + 1) = 1;
  }
  n.at(t - 1, 0) = -1;
  n.at(t - 1, t - 1) = 1;
  return n;
}

/**
 * Entry (i,j) of the Toeplitz matrix P(t) = 2 N(t)^(-1), 1-based:
 * (-1)^(i+j) on and above the diagonal, (-1)^(i+j+1) below it.
 * The value does not depend on t.
 */
inline int p_entry(int i, int j) {
  if (i < 1 || j < 1) throw DomainError("p_entry indices are 1-based");
  const int parity = (i <= j) ? (i + j) : (i + j + 1);
  return (parity % 2 == 0) ? 1 : -1;
}

/// Row i of P(t) (1-based), generated from the entry formula.
inline std::vector<std::int64_t> p_row(int i, int t) {
  if (t < 2) throw DomainError("p_row needs t >= 2");
  if (t % 2 != 0) throw SingularError("P(t) exists only for even t (N(t) is singular)");
  if (i < 1 || i > t) throw DomainError("p_row index outside [1,t]");
  std::vector<std::int64_t> out(static_cast<std::size_t>(t));
  for (int j = 1; j <= t; ++j) out[static_cast<std::size_t>(j - 1)] = p_entry(i, j);
  return out;
}

/** The full matrix P(t) = 2 N(t)^(-1); rejects odd t with SingularError. */
inline IntMatrix matrix_P(int t) {
  if (t < 2) throw DomainError("matrix_P needs t >= 2");
  if (t % 2 != 0) throw SingularError("P(t) exists only for even t (N(t) is singular)");
  IntMatrix p(t, t);
  for (int i = 1; i <= t; ++i)
    for (int j = 1; j <= t; ++j) p.at(i - 1, j - 1) = p_entry(i, j);
  return p;
}

}  // namespace symcycle
