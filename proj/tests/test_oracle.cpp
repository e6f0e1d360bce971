#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "fwcodec/error.hpp"
#include "fwcodec/oracle.hpp"
#include "helpers.hpp"

using namespace fwc;
using testing::lv;

TEST_SUITE("oracle") {

TEST_CASE("complete monotone trees") {
  CHECK(enumerate_monotone_vectors(4, 3, KraftMode::Equality) == LengthList{{1, 2, 3, 3}, {2, 2, 2, 2}});
  CHECK(enumerate_monotone_vectors(5, 4, KraftMode::Equality) ==
        LengthList{{1, 2, 3, 4, 4}, {1, 3, 3, 3, 3}, {2, 2, 2, 3, 3}});
  CHECK(enumerate_monotone_vectors(6, 5, KraftMode::Equality).size() == 5);
  CHECK(enumerate_monotone_vectors(1, 0, KraftMode::Equality) == LengthList{{0}});
  // A depth cap drops the deep trees.
  CHECK(enumerate_monotone_vectors(5, 3, KraftMode::Equality) == LengthList{{1, 3, 3, 3, 3}, {2, 2, 2, 3, 3}});
}

TEST_CASE("count_codes") {
  const std::uint64_t expect[] = {1, 1, 1, 2, 3, 5, 9, 16, 28, 50};
  for (std::size_t n = 1; n <= 10; ++n) CHECK(count_codes(n) == expect[n - 1]);
  CHECK_THROWS_AS(count_codes(0), Error);
  CHECK_THROWS_AS(count_codes(65), Error);
}

TEST_CASE("enumeration agrees with the counting recursion") {
  for (std::size_t n = 1; n <= 12; ++n) {
    auto all = enumerate_monotone_vectors(n, static_cast<int>(n) - 1, KraftMode::Equality);
    CHECK(all.size() == count_codes(n));
    for (const auto& v : all) {
      CHECK(std::is_sorted(v.begin(), v.end()));
      CHECK(v.back() <= static_cast<int>(n) - 1);
      if (n >= 2) CHECK(v[n - 2] == v[n - 1]);
      double kraft = 0.0;
      for (int l : v) kraft += std::ldexp(1.0, -l);
      CHECK(kraft == 1.0);
    }
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  }
}

TEST_CASE("growth of Z_n") {
  for (std::size_t n = 1; n <= 20; ++n) {
    for (std::size_t a = 0; n + a <= 20; ++a) CHECK(count_codes(n + a) >= count_codes(a + 1) * count_codes(n));
    if (n >= 4) CHECK(static_cast<double>(count_codes(n)) >= 0.5 * std::pow(2.0, n / 3.0));
  }
}

TEST_CASE("kraft-at-most enumeration") {
  auto v = enumerate_monotone_vectors(2, 2, KraftMode::AtMost);
  CHECK(v == LengthList{{1, 1}, {1, 2}, {2, 2}});
  CHECK_THROWS_AS(enumerate_monotone_vectors(2, 0, KraftMode::AtMost), Error);
}

TEST_CASE("explosion guard") {
  CHECK_THROWS_AS(enumerate_monotone_vectors(12, 11, KraftMode::Equality, 10), Error);
  CHECK_THROWS_AS(enumerate_monotone_vectors(30, 30, KraftMode::AtMost, 1000), Error);
  CHECK_THROWS_AS(brute_force_optimal_pair({zipf(9, 1.0), zipf(3, 1.0)}, 4), Error);
  CHECK_THROWS_AS(brute_force_optimal_shared(zipf(3, 1.0), 9), Error);
}

TEST_CASE("brute-force pair optimum") {
  auto best = brute_force_optimal_pair(testing::small_entry(), 4);
  CHECK(std::abs(best.p_success - 0.972) < 1e-9);
  EntryDistribution single{ElementDistribution({"a"}, {1.0}), ElementDistribution({"b"}, {1.0})};
  for (int L = 1; L <= 4; ++L) CHECK(brute_force_optimal_pair(single, L).p_success == doctest::Approx(1.0));
}

TEST_CASE("brute-force shared optimum") {
  ElementDistribution two({"a", "b"}, {0.9, 0.1});
  auto r = brute_force_optimal_shared(two, 2);
  CHECK(r.p_success == doctest::Approx(1.0));
  CHECK(r.lengths == lv({1, 1}));
  ElementDistribution one({"a"}, {1.0});
  CHECK(brute_force_optimal_shared(one, 2).p_success == doctest::Approx(1.0));
  CHECK_THROWS_AS(brute_force_optimal_shared(one, 1), Error);
}

}  // TEST_SUITE
