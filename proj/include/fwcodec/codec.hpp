#ifndef FWCODEC_CODEC_HPP_
#define FWCODEC_CODEC_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>

#include "fwcodec/codebook.hpp"
#include "fwcodec/distribution.hpp"

namespace fwc {

// How the decoder recovers the second field from the bits after the first codeword.
enum class ResidualRule {
  StripTrailingZeros,  // second code padding-invariant
  PrefixScan,          // second code declared prefix
};

// Exactly `width` bits, padding included.
struct EncodedWord {
  std::string bits;
  friend bool operator==(const EncodedWord&, const EncodedWord&) = default;
};

// First code prefix, second code padding-invariant or prefix, memory width L.
class EntryScheme {
public:
  EntryScheme(Codebook first, Codebook second, int width);

  const Codebook& first() const { return first_; }
  const Codebook& second() const { return second_; }
  int width() const { return width_; }
  ResidualRule residual_rule() const { return rule_; }

  // nullopt is the failure symbol: an element lacks a codeword or the pair
  // needs more than `width` bits.
  std::optional<EncodedWord> encode(std::size_t first_index, std::size_t second_index) const;

  // Inverse of encode on its image. Throws NoPrefixMatch / UnknownResidual otherwise.
  std::pair<std::size_t, std::size_t> decode(std::string_view word) const;
  std::pair<std::size_t, std::size_t> decode(const EncodedWord& word) const {
    return decode(word.bits);
  }

private:
  std::size_t decode_second(std::string_view residual) const;

  Codebook first_;
  Codebook second_;
  int width_;
  ResidualRule rule_;
  std::unordered_map<std::string, std::size_t> first_lookup_;
  std::unordered_map<std::string, std::size_t> second_lookup_;
};

// Probability mass of the entries whose two codewords fit in `width` bits.
double success_probability(const LengthVector& first_lengths, const LengthVector& second_lengths,
                           const EntryDistribution& dist, int width);

}  // namespace fwc

#endif  // FWCODEC_CODEC_HPP_
