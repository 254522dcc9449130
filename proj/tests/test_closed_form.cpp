#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <random>

#include "symcycle/closed_form.hpp"
#include "symcycle/decomposition.hpp"

using namespace symcycle;

namespace {

std::vector<int> mask_to_set(std::uint64_t mask, int t) {
  std::vector<int> a;
  for (int e = 1; e <= t; ++e)
    if ((mask >> (e - 1)) & 1) a.push_back(e);
  return a;
}

/// Independent route: exact solve over the distinguished cycle.
CoeffVector solve_path(const std::vector<int>& a, int t) {
  return xbar_of_tope(tope_from_negative_part(a, t), distinguished_cycle(t));
}

CoeffVector row_combination(int t, const std::vector<std::pair<int, int>>& rows) {
  CoeffVector acc(static_cast<std::size_t>(t), 0);
  for (const auto& [i, sgn] : rows)
    for (int j = 1; j <= t; ++j) acc[static_cast<std::size_t>(j - 1)] += sgn * p_entry(i, j);
  return acc;
}

}  // namespace

TEST_CASE("canonical_intervals") {
  const IntervalSet a = canonical_intervals({2, 3, 5}, 6);
  CHECK(a.intervals() == std::vector<Interval>{{2, 3}, {5, 5}});
  CHECK(a.rho() == 2);

  CHECK(canonical_intervals({1, 2, 3, 4, 5, 6}, 6).intervals() ==
        std::vector<Interval>{{1, 6}});
  CHECK(canonical_intervals({1, 3, 5}, 6).intervals() ==
        std::vector<Interval>{{1, 1}, {3, 3}, {5, 5}});
  CHECK(canonical_intervals({5, 3, 2}, 6).intervals() ==
        std::vector<Interval>{{2, 3}, {5, 5}});

  CHECK_THROWS_AS(canonical_intervals({}, 6), DomainError);
  CHECK_THROWS_AS(canonical_intervals({7}, 6), DomainError);
  CHECK_THROWS_AS(canonical_intervals({0}, 6), DomainError);
}

TEST_CASE("IntervalSet validates separation") {
  CHECK_NOTHROW(IntervalSet({{1, 2}, {4, 6}}, 6));
  CHECK_THROWS_AS(IntervalSet({{1, 2}, {3, 4}}, 6), DomainError);  // adjacent runs
  CHECK_THROWS_AS(IntervalSet({{2, 1}}, 6), DomainError);
  CHECK_THROWS_AS(IntervalSet({{0, 1}}, 6), DomainError);
  CHECK_THROWS_AS(IntervalSet({}, 6), DomainError);
}

TEST_CASE("closed form: prefix, full set and suffix specializations") {
  const int t = 6;
  for (int j = 1; j < t; ++j) {
    std::vector<int> prefix;
    for (int e = 1; e <= j; ++e) prefix.push_back(e);
    CHECK(closed_form_xbar(canonical_intervals(prefix, t)) == p_row(j + 1, t));
  }

  CHECK(closed_form_xbar(canonical_intervals({1, 2, 3, 4, 5, 6}, t)) ==
        row_combination(t, {{1, -1}}));  // the all-minus tope gives -P^1

  for (int i = 2; i <= t; ++i) {
    std::vector<int> suffix;
    for (int e = i; e <= t; ++e) suffix.push_back(e);
    CHECK(closed_form_xbar(canonical_intervals(suffix, t)) == row_combination(t, {{i, -1}}));
  }

  for (int i = 2; i < t; ++i)
    for (int j = i; j < t; ++j) {
      std::vector<int> interior;
      for (int e = i; e <= j; ++e) interior.push_back(e);
      CHECK(closed_form_xbar(canonical_intervals(interior, t)) ==
            row_combination(t, {{1, 1}, {i, -1}, {j + 1, 1}}));
    }
}

TEST_CASE("closed form equals the solve path for every nonempty subset") {
  for (int t : {4, 6, 8}) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << t); ++mask) {
      const std::vector<int> a = mask_to_set(mask, t);
      const CoeffVector closed = closed_form_xbar(canonical_intervals(a, t));
      CHECK(closed == solve_path(a, t));
      for (std::int64_t c : closed) {
        CHECK(c % 2 != 0);
        CHECK(std::abs(c) <= t - 1);
      }
    }
  }
}

TEST_CASE("closed form worked values") {
  CHECK(closed_form_xbar(canonical_intervals({2, 3, 5}, 6)) ==
        CoeffVector{3, -5, 5, -3, 1, 1});
  CHECK(closed_form_xbar(canonical_intervals({2, 3, 5}, 6)) == solve_path({2, 3, 5}, 6));
  CHECK_THROWS_AS(closed_form_xbar(IntervalSet({{1, 1}}, 5)), SingularError);
}

TEST_CASE("case dispatch partitions the nonempty subsets") {
  const int t = 8;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << t); ++mask) {
    const IntervalSet a = canonical_intervals(mask_to_set(mask, t), t);
    const bool first = (mask & 1) != 0;
    const bool last = (mask >> (t - 1)) & 1;
    const CoeffCase expected = first && last ? CoeffCase::kFirstAndLast
                               : first       ? CoeffCase::kFirstOnly
                               : last        ? CoeffCase::kLastOnly
                                             : CoeffCase::kNeither;
    CHECK(closed_form_case(a) == expected);
  }
  CHECK(std::string(to_label(CoeffCase::kFirstOnly)) == "i");
  CHECK(std::string(to_label(CoeffCase::kFirstAndLast)) == "ii");
  CHECK(std::string(to_label(CoeffCase::kNeither)) == "iii");
  CHECK(std::string(to_label(CoeffCase::kLastOnly)) == "iv");
}

TEST_CASE("singleton_xbar") {
  CHECK(singleton_xbar(1, 6) == CoeffVector{1, 1, -1, 1, -1, 1});   // P(6)^2
  CHECK(singleton_xbar(6, 6) == CoeffVector{-1, 1, -1, 1, -1, -1}); // -P(6)^6
  CHECK(singleton_xbar(3, 6) == CoeffVector{3, -3, 1, 1, -1, 1});   // P^1 - P^3 + P^4

  for (int t : {4, 6, 8})
    for (int s = 1; s <= t; ++s) CHECK(singleton_xbar(s, t) == solve_path({s}, t));

  CHECK_THROWS_AS(singleton_xbar(0, 6), DomainError);
  CHECK_THROWS_AS(singleton_xbar(7, 6), DomainError);
  CHECK_THROWS_AS(singleton_xbar(1, 5), SingularError);
}

TEST_CASE("componentwise_xbar") {
  // row P(6)^3 has -1 in its first component
  CHECK(componentwise_xbar(canonical_intervals({1, 2}, 6), 1) == -1);
  // P^1 - P^2 + P^4 has first component 1 - 1 + 1 = 1 (solve path agrees)
  CHECK(componentwise_xbar(canonical_intervals({2, 3}, 6), 1) == 1);
  CHECK(solve_path({2, 3}, 6)[0] == 1);

  CHECK_THROWS_AS(componentwise_xbar(canonical_intervals({1}, 6), 0), DomainError);
  CHECK_THROWS_AS(componentwise_xbar(canonical_intervals({1}, 6), 7), DomainError);
}

TEST_CASE("componentwise evaluation reproduces the row-sum path") {
  std::mt19937 rng(99);
  int done = 0;
  while (done < 200) {
    const int t = std::vector<int>{4, 6, 8, 10}[rng() % 4];
    std::uint64_t mask = rng() & ((std::uint64_t{1} << t) - 1);
    if (mask == 0) continue;
    const IntervalSet a = canonical_intervals(mask_to_set(mask, t), t);
    const CoeffVector closed = closed_form_xbar(a);
    for (int e = 1; e <= t; ++e)
      CHECK(componentwise_xbar(a, e) == closed[static_cast<std::size_t>(e - 1)]);
    ++done;
  }
}

TEST_CASE("interval spec parsing") {
  CHECK(parse_interval_spec("2-3,5", 6).intervals() == std::vector<Interval>{{2, 3}, {5, 5}});
  CHECK(parse_interval_spec("1-t", 6).intervals() == std::vector<Interval>{{1, 6}});
  CHECK(parse_interval_spec("5", 6).intervals() == std::vector<Interval>{{5, 5}});
  CHECK(parse_interval_spec("1,2,3", 6).intervals() == std::vector<Interval>{{1, 3}});
  CHECK(parse_interval_spec("t", 6).intervals() == std::vector<Interval>{{6, 6}});

  CHECK_THROWS_AS(parse_interval_spec("", 6), ParseError);
  CHECK_THROWS_AS(parse_interval_spec("2-", 6), ParseError);
  CHECK_THROWS_AS(parse_interval_spec("3-2", 6), ParseError);
  CHECK_THROWS_AS(parse_interval_spec("7", 6), ParseError);
  CHECK_THROWS_AS(parse_interval_spec("1,,2", 6), ParseError);
  CHECK_THROWS_AS(parse_interval_spec("x", 6), ParseError);
}
