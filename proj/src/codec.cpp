#include "fwcodec/codec.hpp"

#include "fwcodec/error.hpp"

namespace fwc {

EntryScheme::EntryScheme(Codebook first, Codebook second, int width)
    : first_(std::move(first)), second_(std::move(second)), width_(width) {
  if (width_ < 1) throw Error(ErrorCode::WidthTooSmall, "width must be positive");
  if (width_ > kMaxWidth) throw Error(ErrorCode::WidthTooLarge, "width exceeds 62");
  if (!check_prefix(first_)) {
    throw Error(ErrorCode::InvalidDocument, "first-field code is not a prefix code");
  }
  for (std::size_t i = 0; i < first_.size(); ++i) {
    const auto& w = first_.word(i);
    if (w && static_cast<int>(w->size()) > width_) {
      throw Error(ErrorCode::LengthExceedsWidth, "first-field codeword longer than width");
    }
    if (w) first_lookup_.emplace(w->str(), i);
  }
  // A prefix code is always padding-invariant too; a code declared prefix is
  // decoded by prefix scan, anything else by stripping.
  if (second_.kind() == CodeKind::Prefix) {
    rule_ = ResidualRule::PrefixScan;
    for (std::size_t i = 0; i < second_.size(); ++i) {
      if (const auto& w = second_.word(i)) second_lookup_.emplace(w->str(), i);
    }
  } else if (check_padding_invariant(second_)) {
    rule_ = ResidualRule::StripTrailingZeros;
    for (std::size_t i = 0; i < second_.size(); ++i) {
      if (const auto& w = second_.word(i)) second_lookup_.emplace(std::string(w->stripped()), i);
    }
  } else {
    throw Error(ErrorCode::InvalidDocument, "second-field code is not padding-invariant");
  }
}

std::optional<EncodedWord> EntryScheme::encode(std::size_t first_index,
                                               std::size_t second_index) const {
  if (first_index >= first_.size() || second_index >= second_.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "element index outside the scheme");
  }
  const auto& a = first_.word(first_index);
  const auto& b = second_.word(second_index);
  if (!a || !b) return std::nullopt;
  std::size_t used = a->size() + b->size();
  if (used > static_cast<std::size_t>(width_)) return std::nullopt;

  EncodedWord out;
  out.bits.reserve(static_cast<std::size_t>(width_));
  out.bits += a->str();
  out.bits += b->str();
  out.bits.append(static_cast<std::size_t>(width_) - used, '0');
  return out;
}

std::pair<std::size_t, std::size_t> EntryScheme::decode(std::string_view word) const {
  if (word.size() != static_cast<std::size_t>(width_) ||
      word.find_first_not_of("01") != std::string_view::npos) {
    throw Error(ErrorCode::InvalidDocument,
                "word must be a 0/1 string of length " + std::to_string(width_));
  }
  // A prefix code admits at most one match among the prefixes of `word`.
  for (std::size_t len = 0; len <= word.size(); ++len) {
    auto it = first_lookup_.find(std::string(word.substr(0, len)));
    if (it != first_lookup_.end()) {
      return {it->second, decode_second(word.substr(len))};
    }
  }
  throw Error(ErrorCode::NoPrefixMatch, "no first-field codeword starts '" + std::string(word) + "'");
}

std::size_t EntryScheme::decode_second(std::string_view residual) const {
  if (rule_ == ResidualRule::StripTrailingZeros) {
    auto last_one = residual.find_last_of('1');
    std::string key(last_one == std::string_view::npos ? std::string_view{}
                                                       : residual.substr(0, last_one + 1));
    auto it = second_lookup_.find(key);
    if (it != second_lookup_.end() && second_.word(it->second)->size() <= residual.size()) {
      return it->second;
    }
  } else {
    for (std::size_t len = 0; len <= residual.size(); ++len) {
      auto it = second_lookup_.find(std::string(residual.substr(0, len)));
      if (it == second_lookup_.end()) continue;
      if (residual.find('1', len) == std::string_view::npos) return it->second;
      break;
    }
  }
  throw Error(ErrorCode::UnknownResidual,
              "residual '" + std::string(residual) + "' matches no second-field codeword");
}

double success_probability(const LengthVector& first_lengths, const LengthVector& second_lengths,
                           const EntryDistribution& dist, int width) {
  if (first_lengths.size() != dist.first.size() || second_lengths.size() != dist.second.size()) {
    throw Error(ErrorCode::DimensionMismatch, "length vectors do not match the distribution");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < first_lengths.size(); ++i) {
    if (!first_lengths[i]) continue;
    double row = 0.0;
    for (std::size_t j = 0; j < second_lengths.size(); ++j) {
      if (second_lengths[j] && *first_lengths[i] + *second_lengths[j] <= width) {
        row += dist.second.prob(j);
      }
    }
    total += dist.first.prob(i) * row;
  }
  return total;
}

}  // namespace fwc
