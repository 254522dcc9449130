#pragma once

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symcycle/closed_form.hpp"
#include "symcycle/cycle.hpp"
#include "symcycle/decomposition.hpp"
#include "symcycle/errors.hpp"
#include "symcycle/exact_linalg.hpp"
#include "symcycle/matrix.hpp"
#include "symcycle/sign_vector.hpp"

namespace symcycle {

/// Default cap on brute-force enumeration (3^t candidates per target);
/// overridable through the SYMCYCLE_ENUM_CAP environment variable.
inline int default_enum_cap() {
  if (const char* env = std::getenv("SYMCYCLE_ENUM_CAP")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 10;
}

namespace detail {

/// Steps a ternary odometer over {-1,0,1}^t; returns false once exhausted.
inline bool next_ternary(std::vector<Sign>& digits) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] < 1) {
      ++digits[i];
      return true;
    }
    digits[i] = -1;
  }
  return false;
}

inline std::string format_vector(std::span<const std::int64_t> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

}  // namespace detail

/// Printable form of ternary coordinates, e.g. "(1,-1,1,-1,1,0)".
inline std::string coords_string(const TernaryCoords& x) {
  std::vector<std::int64_t> wide(x.x.begin(), x.x.end());
  return detail::format_vector(wide);
}

/// Printable form of a coefficient vector, e.g. "(-3,1,1,-3,5,-5)".
inline std::string coeff_string(const CoeffVector& xbar) {
  return detail::format_vector(xbar);
}

/**
 * Independent derivation of tope coordinates by exhaustion: enumerates all
 * 3^t ternary vectors, keeps those with odd support, and returns the one
 * whose combination of cycle vertices reproduces the tope. Zero or several
 * matches signal a broken invariant upstream (OracleContradictionError).
 */
inline TernaryCoords brute_force_tope_coords(const Tope& tope, const SymmetricCycle& cycle,
                                             int enum_cap = default_enum_cap()) {
  const int t = cycle.t();
  if (tope.t() != t) throw DomainError("tope and cycle sizes differ");
  if (t > enum_cap)
    throw DomainError("brute-force enumeration capped at t <= " + std::to_string(enum_cap));

  const IntMatrix m = matrix_M(cycle);
  std::vector<Sign> digits(static_cast<std::size_t>(t), -1);
  std::vector<Sign> match;
  int matches = 0;
  bool more = true;
  while (more) {
    int nonzero = 0;
    for (Sign d : digits) nonzero += (d != 0);
    if (nonzero % 2 == 1) {
      bool ok = true;
      for (int j = 0; j < t && ok; ++j) {
        std::int64_t acc = 0;
        for (int i = 0; i < t; ++i)
          acc += static_cast<std::int64_t>(digits[static_cast<std::size_t>(i)]) * m.at(i, j);
        ok = (acc == tope.entries()[static_cast<std::size_t>(j)]);
      }
      if (ok) {
        if (++matches > 1)
          throw OracleContradictionError("enumeration found several ternary solutions");
        match = digits;
      }
    }
    more = detail::next_ternary(digits);
  }
  if (matches == 0)
    throw OracleContradictionError("enumeration found no ternary odd-support solution");
  return TernaryCoords{std::move(match)};
}

/// Number of odd-support vectors seen by the ternary enumerator; a sanity
/// check against the closed count computed independently by the caller.
inline std::int64_t odd_support_count_by_enumeration(int t) {
  std::vector<Sign> digits(static_cast<std::size_t>(t), -1);
  std::int64_t count = 0;
  bool more = true;
  while (more) {
    int nonzero = 0;
    for (Sign d : digits) nonzero += (d != 0);
    count += (nonzero % 2 == 1);
    more = detail::next_ternary(digits);
  }
  return count;
}

/**
 * Exact rational solution of y basis = target, cross-checked by
 * substituting the solution back; the check failing means the solver
 * itself is broken (OracleContradictionError).
 */
inline std::vector<exact::BigRational> exact_solve(std::span<const std::int64_t> target,
                                                   const IntMatrix& basis) {
  auto y = exact::solve_left(basis, target);
  for (int j = 0; j < basis.cols(); ++j) {
    exact::BigRational acc = 0;
    for (int i = 0; i < basis.rows(); ++i)
      acc += y[static_cast<std::size_t>(i)] * exact::BigRational(basis.at(i, j));
    if (acc != exact::BigRational(target[static_cast<std::size_t>(j)]))
      throw OracleContradictionError("exact_solve: substitution check failed");
  }
  return y;
}

/**
 * Random symmetric cycle via a seeded random Hamming walk from a random
 * start tope, completed by antipodality; self-intersecting walks are
 * rejected and retried. Intended for small t (rejection probability grows
 * steeply with t).
 */
inline SymmetricCycle random_symmetric_cycle(int t, std::uint64_t seed) {
  if (t < 2) throw DomainError("random cycle needs t >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> coord(0, t - 1);
  for (int attempt = 0; attempt < 1000000; ++attempt) {
    std::vector<Sign> cur(static_cast<std::size_t>(t));
    for (auto& s : cur) s = coin(rng) ? Sign{1} : Sign{-1};
    std::vector<Tope> walk;
    walk.reserve(static_cast<std::size_t>(t));
    walk.emplace_back(cur);
    for (int step = 1; step < t; ++step) {
      const int c = coord(rng);
      cur[static_cast<std::size_t>(c)] = static_cast<Sign>(-cur[static_cast<std::size_t>(c)]);
      walk.emplace_back(cur);
    }
    try {
      return SymmetricCycle::from_vertices(std::move(walk));
    } catch (const NotACycleError&) {
    } catch (const NotSymmetricError&) {
    }
  }
  throw Error("random cycle sampling did not converge; t too large for rejection sampling");
}

enum class Scope : unsigned {
  kRank = 1u << 0,
  kMatrices = 1u << 1,
  kTopes = 1u << 2,
  kSubtopes = 1u << 3,
  kClosedForm = 1u << 4,
};

inline constexpr Scope operator|(Scope a, Scope b) {
  return static_cast<Scope>(static_cast<unsigned>(a) | static_cast<unsigned>(b));
}

inline constexpr bool has_scope(Scope set, Scope flag) {
  return (static_cast<unsigned>(set) & static_cast<unsigned>(flag)) != 0;
}

inline constexpr Scope kAllScopes =
    Scope::kRank | Scope::kMatrices | Scope::kTopes | Scope::kSubtopes | Scope::kClosedForm;

inline Scope scope_from_name(std::string_view name) {
  if (name == "all") return kAllScopes;
  if (name == "rank") return Scope::kRank;
  if (name == "matrices") return Scope::kMatrices;
  if (name == "topes") return Scope::kTopes;
  if (name == "subtopes") return Scope::kSubtopes;
  if (name == "closedform") return Scope::kClosedForm;
  throw ParseError("unknown scope '" + std::string(name) + "'");
}

struct VerificationFailure {
  std::string scope;
  std::string target;
  std::string expected;
  std::string actual;

  friend bool operator==(const VerificationFailure&, const VerificationFailure&) = default;
};

/**
 * Outcome of a verification run. Failures are data, not exceptions: the
 * report is marked pass exactly when the failure list is empty, and every
 * failure carries enough context (together with the cycle recorded here)
 * to replay it as a regression test.
 */
struct VerificationReport {
  int t = 0;
  std::string cycle_descriptor;
  std::vector<std::string> cycle_vertices;  // all 2t, text-encoded
  long long elapsed_ms = 0;
  std::vector<std::pair<std::string, std::int64_t>> checked;
  std::vector<std::string> notices;
  std::vector<VerificationFailure> failures;

  bool pass() const { return failures.empty(); }
};

namespace detail {

inline std::vector<std::int64_t> row_times_matrix(const CoeffVector& y, const IntMatrix& a) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(a.cols()), 0);
  for (int i = 0; i < a.rows(); ++i) {
    const std::int64_t yi = y[static_cast<std::size_t>(i)];
    if (yi == 0) continue;
    for (int j = 0; j < a.cols(); ++j) out[static_cast<std::size_t>(j)] += yi * a.at(i, j);
  }
  return out;
}

inline std::vector<std::int64_t> signs_to_wide(const std::vector<Sign>& v) {
  return std::vector<std::int64_t>(v.begin(), v.end());
}

inline bool rational_equals_int(const exact::BigRational& q, std::int64_t v) {
  return boost::multiprecision::denominator(q) == 1 &&
         boost::multiprecision::numerator(q) == v;
}

/// Antipodal image of a decomposition: every index shifted by t mod 2t.
inline Decomposition antipode_decomposition(const Decomposition& dec, int t) {
  Decomposition out;
  for (const auto& term : dec.terms)
    out.terms.push_back({(term.index + t) % (2 * t), term.coeff});
  std::sort(out.terms.begin(), out.terms.end(),
            [](const DecompositionTerm& a, const DecompositionTerm& b) {
              return a.index < b.index;
            });
  return out;
}

}  // namespace detail

/**
 * Runs the invariant battery against one cycle: rank dichotomy, matrix
 * identities, exhaustive tope and subtope decompositions with oracle
 * agreement, and closed-form equivalence (distinguished cycle only).
 * Exhaustive scopes are skipped with a notice above t = 8 or for odd t;
 * failures are collected, never thrown.
 */
inline VerificationReport verify_suite(const SymmetricCycle& cycle, std::string descriptor,
                                       Scope scopes = kAllScopes,
                                       int enum_cap = default_enum_cap()) {
  const auto start = std::chrono::steady_clock::now();
  const int t = cycle.t();
  const bool even = (t % 2 == 0);

  VerificationReport report;
  report.t = t;
  report.cycle_descriptor = std::move(descriptor);
  for (const Tope& v : cycle.vertices()) report.cycle_vertices.push_back(to_string(v));

  auto fail = [&](std::string scope, std::string target, std::string expected,
                  std::string actual) {
    report.failures.push_back(
        {std::move(scope), std::move(target), std::move(expected), std::move(actual)});
  };

  const IntMatrix m = matrix_M(cycle);
  const IntMatrix w = matrix_W(cycle);
  const IntMatrix n = matrix_N(t);
  const SubtopeSequence seq(cycle);

  if (has_scope(scopes, Scope::kRank)) {
    std::int64_t count = 0;
    const int expected_rank = even ? t : t - 1;
    if (exact::rank(n) != expected_rank)
      fail("rank", "N(" + std::to_string(t) + ")", std::to_string(expected_rank),
           std::to_string(exact::rank(n)));
    ++count;
    if (exact::rank(w) != expected_rank)
      fail("rank", "W(D)", std::to_string(expected_rank), std::to_string(exact::rank(w)));
    ++count;
    if (exact::determinant(m) == 0) fail("rank", "M(D)", "nonzero determinant", "0");
    ++count;
    report.checked.emplace_back("rank", count);
  }

  if (has_scope(scopes, Scope::kMatrices)) {
    std::int64_t count = 0;
    if (!(scale(w, 2) == matmul(n, m))) fail("matrices", "2W = N M", "equal", "different");
    ++count;
    if (even) {
      const IntMatrix p = matrix_P(t);
      if (!(matmul(n, p) == IntMatrix::scaled_identity(t, 2)))
        fail("matrices", "N P = 2I", "equal", "different");
      ++count;
      if (!(matmul(p, w) == m)) fail("matrices", "M = P W", "equal", "different");
      ++count;
      const IntMatrix x = matrix_X(cycle);
      if (!(matmul(x, m) == p)) fail("matrices", "P = X M", "equal", "different");
      ++count;
      // M W^(-1) row by row over exact rationals
      bool mw_ok = true;
      for (int i = 0; i < t && mw_ok; ++i) {
        const auto z = exact_solve(m.row(i), w);
        for (int j = 0; j < t && mw_ok; ++j)
          mw_ok = detail::rational_equals_int(z[static_cast<std::size_t>(j)], p.at(i, j));
      }
      if (!mw_ok) fail("matrices", "P = M W^(-1)", "equal", "different");
      ++count;
    } else {
      report.notices.push_back("matrices: P-dependent identities skipped (t odd)");
    }
    report.checked.emplace_back("matrices", count);
  }

  const bool exhaustive_ok = (t <= 8);
  if (!exhaustive_ok && (has_scope(scopes, Scope::kTopes) || has_scope(scopes, Scope::kSubtopes) ||
                         has_scope(scopes, Scope::kClosedForm)))
    report.notices.push_back("exhaustive scopes skipped (t > 8)");

  if (has_scope(scopes, Scope::kTopes)) {
    if (!even) {
      report.notices.push_back("topes: skipped (t odd, W(D) singular)");
    } else if (exhaustive_ok) {
      const bool use_enum = (t <= enum_cap);
      if (!use_enum)
        report.notices.push_back("topes: enumeration oracle skipped (t > enumeration cap)");
      std::int64_t count = 0;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
        std::vector<Sign> entries(static_cast<std::size_t>(t));
        for (int e = 0; e < t; ++e)
          entries[static_cast<std::size_t>(e)] = (mask >> e) & 1 ? Sign{-1} : Sign{1};
        const Tope tope(std::move(entries));
        const std::string label = to_string(tope);
        try {
          const TernaryCoords x = tope_coords(tope, cycle);
          if (detail::row_times_matrix(CoeffVector(x.x.begin(), x.x.end()), m) !=
              detail::signs_to_wide(tope.entries()))
            fail("topes", label, "x M = T", "mismatch");
          if (use_enum) {
            const TernaryCoords bx = brute_force_tope_coords(tope, cycle, enum_cap);
            if (!(bx == x)) fail("topes", label, coords_string(bx), coords_string(x));
          }
          const CoeffVector xbar = xbar_of_tope(tope, cycle);
          for (std::int64_t c : xbar) {
            if (c % 2 == 0) fail("topes", label, "odd coefficients", coeff_string(xbar));
            if (std::abs(c) > t - 1) fail("topes", label, "|coeff| <= t-1", coeff_string(xbar));
          }
          if (detail::row_times_matrix(xbar, w) != detail::signs_to_wide(tope.entries()))
            fail("topes", label, "xbar W = T", "mismatch");
          const auto y = exact_solve(detail::signs_to_wide(tope.entries()), w);
          for (int j = 0; j < t; ++j)
            if (!detail::rational_equals_int(y[static_cast<std::size_t>(j)],
                                             xbar[static_cast<std::size_t>(j)]))
              fail("topes", label, "xbar = T W^(-1)", "solver disagrees");
          const Decomposition dec = tope_decomposition(tope, cycle);
          if (static_cast<int>(dec.terms.size()) != t)
            fail("topes", label, std::to_string(t) + " terms",
                 std::to_string(dec.terms.size()) + " terms");
          for (const auto& term : dec.terms)
            if (term.coeff < 1 || term.coeff > t - 1 || term.coeff % 2 == 0)
              fail("topes", label, "odd coefficient in [1,t-1]", std::to_string(term.coeff));
          if (reconstruct(dec, seq) != detail::signs_to_wide(tope.entries()))
            fail("topes", label, "reconstruction = T", "mismatch");
          const Decomposition anti = tope_decomposition(negate(tope), cycle);
          if (!(anti == detail::antipode_decomposition(dec, t)))
            fail("topes", label, "antipodal decomposition shift", "mismatch");
        } catch (const Error& err) {
          fail("topes", label, "no exception", err.what());
        }
        ++count;
      }
      report.checked.emplace_back("topes", count);
    }
  }

  if (has_scope(scopes, Scope::kSubtopes)) {
    if (!even) {
      report.notices.push_back("subtopes: skipped (t odd, W(D) singular)");
    } else if (exhaustive_ok) {
      std::int64_t count = 0;
      for (int z = 1; z <= t; ++z) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (t - 1)); ++mask) {
          std::vector<Sign> entries(static_cast<std::size_t>(t));
          int bit = 0;
          for (int e = 1; e <= t; ++e) {
            if (e == z) {
              entries[static_cast<std::size_t>(e - 1)] = 0;
            } else {
              entries[static_cast<std::size_t>(e - 1)] = (mask >> bit) & 1 ? Sign{-1} : Sign{1};
              ++bit;
            }
          }
          const Subtope s(std::move(entries));
          const std::string label = to_string(s);
          try {
            const CoeffVector xbar = xbar_of_subtope(s, cycle);
            for (std::int64_t c : xbar)
              if (std::abs(c) > t - 1) fail("subtopes", label, "|coeff| <= t-1", coeff_string(xbar));
            if (detail::row_times_matrix(xbar, w) != detail::signs_to_wide(s.entries()))
              fail("subtopes", label, "xbar W = S", "mismatch");
            const auto y = exact_solve(detail::signs_to_wide(s.entries()), w);
            for (int j = 0; j < t; ++j)
              if (!detail::rational_equals_int(y[static_cast<std::size_t>(j)],
                                               xbar[static_cast<std::size_t>(j)]))
                fail("subtopes", label, "xbar = S W^(-1)", "solver disagrees");
            const Decomposition dec = subtope_decomposition(s, cycle);
            for (const auto& term : dec.terms)
              if (term.coeff < 1 || term.coeff > t - 1)
                fail("subtopes", label, "coefficient in [1,t-1]", std::to_string(term.coeff));
            if (reconstruct(dec, seq) != detail::signs_to_wide(s.entries()))
              fail("subtopes", label, "reconstruction = S", "mismatch");
            const Decomposition anti = subtope_decomposition(negate(s), cycle);
            if (!(anti == detail::antipode_decomposition(dec, t)))
              fail("subtopes", label, "antipodal decomposition shift", "mismatch");
          } catch (const Error& err) {
            fail("subtopes", label, "no exception", err.what());
          }
          ++count;
        }
      }
      report.checked.emplace_back("subtopes", count);
    }
  }

  if (has_scope(scopes, Scope::kClosedForm)) {
    if (!even) {
      report.notices.push_back("closed-form: skipped (t odd)");
    } else if (exhaustive_ok) {
      if (!(cycle == distinguished_cycle(t))) {
        report.notices.push_back("closed-form: skipped (needs the distinguished cycle)");
      } else {
        std::int64_t count = 0;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << t); ++mask) {
          std::vector<int> a;
          for (int e = 1; e <= t; ++e)
            if ((mask >> (e - 1)) & 1) a.push_back(e);
          const IntervalSet ivs = canonical_intervals(a, t);
          const std::string label = "A=" + detail::format_vector(
                                               std::vector<std::int64_t>(a.begin(), a.end()));
          const CoeffVector closed = closed_form_xbar(ivs);
          const CoeffVector solved = xbar_of_tope(tope_from_negative_part(a, t), cycle);
          if (closed != solved)
            fail("closed-form", label, coeff_string(solved), coeff_string(closed));
          for (int e = 1; e <= t; ++e)
            if (componentwise_xbar(ivs, e) != closed[static_cast<std::size_t>(e - 1)])
              fail("closed-form", label + " component " + std::to_string(e),
                   std::to_string(closed[static_cast<std::size_t>(e - 1)]),
                   std::to_string(componentwise_xbar(ivs, e)));
          ++count;
        }
        // singleton specialization against the general path
        for (int s = 1; s <= t; ++s) {
          const CoeffVector y = singleton_xbar(s, t);
          const CoeffVector solved = xbar_of_tope(tope_from_negative_part({s}, t), cycle);
          if (y != solved)
            fail("closed-form", "singleton s=" + std::to_string(s), coeff_string(solved),
                 coeff_string(y));
          ++count;
        }
        report.checked.emplace_back("closed-form", count);
      }
    }
  }

  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace symcycle
