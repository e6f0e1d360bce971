#include <doctest.h>

#include <chrono>
#include <cmath>
#include <random>

#include "fwcodec/huffman.hpp"
#include "fwcodec/opt_pair.hpp"
#include "fwcodec/oracle.hpp"
#include "helpers.hpp"

using namespace fwc;
using testing::lv;

TEST_SUITE("baseline_huffman") {

TEST_CASE("known codes") {
  CHECK(huffman(testing::small_first()).lengths == lv({1, 2, 3, 4, 4}));
  CHECK(huffman(testing::small_second()).lengths == lv({1, 2, 2}));
  CHECK(huffman(zipf(4, 0.0)).lengths == lv({2, 2, 2, 2}));
  CHECK(huffman(ElementDistribution({"a"}, {1.0})).lengths == lv({0}));
  auto h = huffman(testing::small_first());
  CHECK(h.expected_length == doctest::Approx(0.4 + 0.6 + 0.48 + 0.32 + 0.24));
  CHECK(check_prefix(h.code));
  CHECK(h.code.lengths() == h.lengths);
}

TEST_CASE("pair success") {
  CHECK(std::abs(huffman_pair_success(testing::small_entry(), 4) - 0.78) < 1e-9);
  CHECK(huffman_pair_success(testing::small_entry(), 6) == doctest::Approx(1.0));
  CHECK(huffman_pair_success({zipf(128, 0.8), zipf(128, 2.0)}, 2) == 0.0);
}

TEST_CASE("huffman minimizes expected length") {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(2, 8)(rng);
    auto d = random_distribution(n, rng);
    double best = 1e9;
    for (const auto& v : enumerate_monotone_vectors(n, static_cast<int>(n) - 1, KraftMode::AtMost)) {
      double e = 0.0;
      for (std::size_t i = 0; i < n; ++i) e += d.prob(i) * v[i];
      best = std::min(best, e);
    }
    CHECK(huffman(d).expected_length == doctest::Approx(best).epsilon(1e-12));
  }
}

TEST_CASE("optimal schemes dominate huffman") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 60; ++t) {
    std::size_t n1 = std::uniform_int_distribution<std::size_t>(1, 30)(rng);
    std::size_t n2 = std::uniform_int_distribution<std::size_t>(1, 30)(rng);
    int L = std::uniform_int_distribution<int>(1, 12)(rng);
    EntryDistribution d{random_distribution(n1, rng), random_distribution(n2, rng)};
    CHECK(huffman_pair_success(d, L) <= optimal_pair_scheme(d, L).p_success + 1e-9);
  }
  for (int L = 1; L <= 14; ++L) {
    EntryDistribution z{zipf(128, 0.8), zipf(128, 2.0)};
    CHECK(huffman_pair_success(z, L) <= optimal_pair_scheme(z, L).p_success);
  }
}

}  // TEST_SUITE
