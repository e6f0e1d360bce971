#ifndef FWCODEC_ORACLE_HPP_
#define FWCODEC_ORACLE_HPP_

// Exhaustive ground truth for small instances: monotone length-vector
// enumeration, the exact count Z_n of monotone complete codes, and brute-force
// optima used to check the dynamic programs.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fwcodec/codebook.hpp"
#include "fwcodec/distribution.hpp"

namespace fwc {

inline constexpr std::uint64_t kDefaultExplosionCap = 10'000'000;

enum class KraftMode {
  Equality,  // sum 2^-l == 1 (complete code trees)
  AtMost,    // sum 2^-l <= 1
};

using LengthList = std::vector<std::vector<int>>;

// All non-decreasing vectors of exactly n lengths, each <= max_len, in
// lexicographic order. Equality mode builds trees from two monotone subtrees;
// n = 1 yields the single vector (0). AtMost mode uses lengths in [1, max_len].
LengthList enumerate_monotone_vectors(std::size_t n, int max_len, KraftMode mode,
                                      std::uint64_t cap = kDefaultExplosionCap);

// Z_n, the number of monotone complete length vectors on n elements. n <= 64.
std::uint64_t count_codes(std::size_t n);

struct OraclePair {
  LengthVector first;
  LengthVector second;
  double p_success = 0.0;
};

// Maximum success over every monotone prefix-feasible first-field vector and
// every monotone padding-invariant-feasible second-field vector. n1, n2, L <= 8.
OraclePair brute_force_optimal_pair(const EntryDistribution& dist, int width,
                                    std::uint64_t cap = kDefaultExplosionCap);

struct OracleShared {
  LengthVector lengths;
  double p_success = 0.0;
};

// Maximum shared-code success over monotone prefix-feasible vectors with lengths
// in [1, L - 1] on any leading subset of elements. n, L <= 8.
OracleShared brute_force_optimal_shared(const ElementDistribution& dist, int width,
                                        std::uint64_t cap = kDefaultExplosionCap);

}  // namespace fwc

#endif  // FWCODEC_ORACLE_HPP_
