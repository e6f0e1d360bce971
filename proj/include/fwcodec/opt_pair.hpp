#ifndef FWCODEC_OPT_PAIR_HPP_
#define FWCODEC_OPT_PAIR_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "fwcodec/codebook.hpp"
#include "fwcodec/codec.hpp"
#include "fwcodec/distribution.hpp"

namespace fwc {

// Marks an infeasible dynamic-programming cell (budget overdrawn).
inline constexpr double kInfeasible = -std::numeric_limits<double>::infinity();

// gain[l] = mass of second-field elements that fit next to a first-field
// codeword of length l, for l in [0, width].
struct SecondFieldGain {
  std::vector<double> gain;
  double operator()(int length) const { return gain[static_cast<std::size_t>(length)]; }
};

SecondFieldGain second_field_gain(const LengthVector& second_lengths,
                                  const ElementDistribution& second, int width);

// Full F(k, N) table with the per-cell choice, kept only on request.
class DpTableF {
public:
  DpTableF(std::size_t elements, int width);

  std::size_t elements() const { return elements_; }
  int width() const { return width_; }
  std::uint64_t budget() const { return budget_; }

  // F(k, N); kInfeasible for N < 0.
  double value(std::size_t k, std::int64_t budget_units) const;
  // Length picked for element k at budget N; nullopt when k is left without a codeword.
  CodeLength choice(std::size_t k, std::uint64_t budget_units) const;
  // Q(k, N): lengths of elements 1..k in the solution attaining F(k, N).
  LengthVector lengths(std::size_t k, std::uint64_t budget_units) const;

  void set(std::size_t k, std::uint64_t budget_units, double value, CodeLength choice);

private:
  std::size_t index(std::size_t k, std::uint64_t n) const {
    return k * static_cast<std::size_t>(budget_ + 1) + static_cast<std::size_t>(n);
  }

  std::size_t elements_;
  int width_;
  std::uint64_t budget_;
  std::vector<double> values_;
  std::vector<std::uint8_t> choices_;
};

struct ConditionalPrefixResult {
  LengthVector lengths;  // monotone first-field lengths
  double p_success = 0.0;
  std::optional<DpTableF> table;
};

// Best prefix code for the first field given fixed second-field lengths.
ConditionalPrefixResult optimal_conditional_prefix(const EntryDistribution& dist, int width,
                                                   const LengthVector& second_lengths,
                                                   bool keep_table = false);

struct PairSolution {
  EntryScheme scheme;
  LengthVector first_lengths;
  LengthVector second_lengths;
  double p_success;
};

// Optimal two-code scheme: universal second code plus the conditional prefix
// code for the first field, or two fixed-length codes when they already fit.
PairSolution optimal_pair_scheme(const EntryDistribution& dist, int width);

// Sum_i p1_i * Sum_{j <= 2^(L - l1_i)} p2_j for monotone first lengths.
double universal_bound(const LengthVector& first_lengths, const EntryDistribution& dist, int width);

}  // namespace fwc

#endif  // FWCODEC_OPT_PAIR_HPP_
