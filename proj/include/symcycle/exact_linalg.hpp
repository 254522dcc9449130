#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "symcycle/errors.hpp"
#include "symcycle/matrix.hpp"

namespace symcycle::exact {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/**
 * Largest dimension at which fraction-free elimination provably fits in
 * int64 for sign matrices: every intermediate entry is a minor of the
 * input, the two-term update multiplies minors of order at most n-1, and
 * the Hadamard bound gives 15^15 < 2^63 at n = 16. Larger systems (and
 * any overflow detected by the checked arithmetic) use wide integers.
 */
inline constexpr int kNativeSafeDim = 16;

namespace detail {

template <class Int>
struct Arith;

template <>
struct Arith<std::int64_t> {
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 multiply overflow");
    return r;
  }
  static std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 subtract overflow");
    return r;
  }
  static std::int64_t div_exact(std::int64_t a, std::int64_t b) {
    if (a % b != 0) throw Error("fraction-free elimination: inexact division");
    return a / b;
  }
};

template <>
struct Arith<BigInt> {
  static BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
  static BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
  static BigInt div_exact(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) throw Error("fraction-free elimination: inexact division");
    return q;
  }
};

template <class Int>
struct Echelon {
  std::vector<Int> m;          // row-major, rows x cols
  int rows = 0, cols = 0;
  int sign = 1;                // parity of row swaps
  std::vector<int> pivot_cols; // pivot column per pivot row, ascending

  const Int& at(int i, int j) const {
    return m[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
             static_cast<std::size_t>(j)];
  }
};

/**
 * Bareiss (division-controlled) row reduction. Every division is exact by
 * construction and is verified; nothing is ever rounded. Columns at or
 * beyond `pivot_limit` are carried along (the augmented part) but never
 * pivoted on.
 */
template <class Int>
Echelon<Int> fraction_free_echelon(std::vector<Int> m, int rows, int cols, int pivot_limit) {
  Echelon<Int> e;
  e.rows = rows;
  e.cols = cols;
  auto at = [&](int i, int j) -> Int& {
    return m[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
             static_cast<std::size_t>(j)];
  };

  Int prev{1};
  int r = 0;
  for (int c = 0; c < pivot_limit && r < rows; ++c) {
    int p = r;
    while (p < rows && at(p, c) == 0) ++p;
    if (p == rows) continue;  // rank-deficient column
    if (p != r) {
      for (int j = 0; j < cols; ++j) std::swap(at(p, j), at(r, j));
      e.sign = -e.sign;
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j)
        at(i, j) = Arith<Int>::div_exact(
            Arith<Int>::sub(Arith<Int>::mul(at(r, c), at(i, j)),
                            Arith<Int>::mul(at(i, c), at(r, j))),
            prev);
      at(i, c) = 0;
    }
    prev = at(r, c);
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.m = std::move(m);
  return e;
}

template <class Int>
std::vector<Int> to_flat(const IntMatrix& a) {
  std::vector<Int> m;
  m.reserve(static_cast<std::size_t>(a.rows()) * static_cast<std::size_t>(a.cols()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.emplace_back(a.at(i, j));
  return m;
}

template <class Int>
Int det_impl(const IntMatrix& a) {
  const int n = a.rows();
  auto e = fraction_free_echelon<Int>(to_flat<Int>(a), n, n, n);
  if (static_cast<int>(e.pivot_cols.size()) < n) return Int{0};
  Int d = e.at(n - 1, n - 1);
  return e.sign < 0 ? Int{-d} : d;
}

template <class Int>
int rank_impl(const IntMatrix& a) {
  auto e = fraction_free_echelon<Int>(to_flat<Int>(a), a.rows(), a.cols(), a.cols());
  return static_cast<int>(e.pivot_cols.size());
}

/** Solves y A = b: eliminates the augmented transpose, then back-substitutes
 *  over exact rationals. */
template <class Int>
std::vector<BigRational> solve_left_impl(const IntMatrix& a, std::span<const std::int64_t> b) {
  const int n = a.rows();
  std::vector<Int> aug(static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      aug[static_cast<std::size_t>(i) * static_cast<std::size_t>(n + 1) +
          static_cast<std::size_t>(j)] = Int{a.at(j, i)};  // transpose
    aug[static_cast<std::size_t>(i) * static_cast<std::size_t>(n + 1) +
        static_cast<std::size_t>(n)] = Int{b[static_cast<std::size_t>(i)]};
  }
  auto e = fraction_free_echelon<Int>(std::move(aug), n, n + 1, n);
  if (static_cast<int>(e.pivot_cols.size()) < n)
    throw SingularError("solve_left: basis matrix is singular");

  std::vector<BigRational> y(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    BigRational acc(BigInt(e.at(i, n)));
    for (int j = i + 1; j < n; ++j)
      acc -= BigRational(BigInt(e.at(i, j))) * y[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = acc / BigRational(BigInt(e.at(i, i)));
  }
  return y;
}

}  // namespace detail

/** Exact determinant; int64 fast path with automatic wide-integer fallback. */
inline BigInt determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("determinant needs a square matrix");
  if (a.rows() <= kNativeSafeDim) {
    try {
      return BigInt(detail::det_impl<std::int64_t>(a));
    } catch (const OverflowError&) {
      // fall through to wide integers
    }
  }
  return detail::det_impl<BigInt>(a);
}

/** Exact rank over the integers (equivalently, over the rationals). */
inline int rank(const IntMatrix& a) {
  if (std::max(a.rows(), a.cols()) <= kNativeSafeDim) {
    try {
      return detail::rank_impl<std::int64_t>(a);
    } catch (const OverflowError&) {
    }
  }
  return detail::rank_impl<BigInt>(a);
}

/**
 * Exact solution of y A = b over the rationals; throws SingularError when
 * no unique solution exists. A must be square and match the length of b.
 */
inline std::vector<BigRational> solve_left(const IntMatrix& a, std::span<const std::int64_t> b) {
  if (a.rows() != a.cols()) throw DomainError("solve_left needs a square matrix");
  if (static_cast<int>(b.size()) != a.cols()) throw DomainError("solve_left: length mismatch");
  if (a.rows() <= kNativeSafeDim) {
    try {
      return detail::solve_left_impl<std::int64_t>(a, b);
    } catch (const OverflowError&) {
    }
  }
  return detail::solve_left_impl<BigInt>(a, b);
}

}  // namespace symcycle::exact
