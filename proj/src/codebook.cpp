#include "fwcodec/codebook.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "fwcodec/error.hpp"

namespace fwc {

Codeword::Codeword(std::string_view bits) : bits_(bits) {
  if (bits_.find_first_not_of("01") != std::string::npos) {
    throw Error(ErrorCode::InvalidDocument, "codeword '" + bits_ + "' is not a 0/1 string");
  }
}

Codeword Codeword::from_value(std::uint64_t value, int width) {
  std::string bits(static_cast<std::size_t>(width), '0');
  for (int b = 0; b < width; ++b) {
    if ((value >> b) & 1U) bits[static_cast<std::size_t>(width - 1 - b)] = '1';
  }
  Codeword w;
  w.bits_ = std::move(bits);
  return w;
}

std::string_view Codeword::stripped() const {
  auto last_one = bits_.find_last_of('1');
  if (last_one == std::string::npos) return {};
  return std::string_view(bits_).substr(0, last_one + 1);
}

bool is_monotone(const LengthVector& lengths) {
  bool seen_unassigned = false;
  int previous = 0;
  for (const auto& len : lengths) {
    if (!len) {
      seen_unassigned = true;
      continue;
    }
    if (seen_unassigned || *len < previous) return false;
    previous = *len;
  }
  return true;
}

std::uint64_t kraft_weight(const LengthVector& lengths, int width) {
  if (width < 0 || width > kMaxWidth) {
    throw Error(ErrorCode::WidthTooLarge, "width " + std::to_string(width) + " exceeds 62");
  }
  std::uint64_t total = 0;
  for (const auto& len : lengths) {
    if (!len) continue;
    if (*len < 0 || *len > width) {
      throw Error(ErrorCode::LengthExceedsWidth,
                  "length " + std::to_string(*len) + " exceeds width " + std::to_string(width));
    }
    std::uint64_t w = std::uint64_t{1} << (width - *len);
    if (__builtin_add_overflow(total, w, &total)) {
      throw Error(ErrorCode::Overflow, "kraft weight overflows 64 bits");
    }
  }
  return total;
}

std::string_view to_string(CodeKind kind) {
  switch (kind) {
    case CodeKind::Prefix: return "prefix";
    case CodeKind::PaddingInvariant: return "padding-invariant";
    case CodeKind::Unchecked: return "unchecked";
  }
  return "unchecked";
}

CodeKind code_kind_from_string(std::string_view name) {
  if (name == "prefix") return CodeKind::Prefix;
  if (name == "padding-invariant") return CodeKind::PaddingInvariant;
  if (name == "unchecked") return CodeKind::Unchecked;
  throw Error(ErrorCode::InvalidDocument, "unknown code kind '" + std::string(name) + "'");
}

Codebook::Codebook(std::vector<std::optional<Codeword>> words, CodeKind kind)
    : words_(std::move(words)), kind_(kind) {
  if (kind_ == CodeKind::Prefix && !check_prefix(words_)) {
    throw Error(ErrorCode::InvalidDocument, "codewords do not form a prefix code");
  }
  if (kind_ == CodeKind::PaddingInvariant && !check_padding_invariant(words_)) {
    throw Error(ErrorCode::InvalidDocument, "codewords are not padding-invariant");
  }
}

LengthVector Codebook::lengths() const {
  LengthVector out;
  out.reserve(words_.size());
  for (const auto& w : words_) {
    out.push_back(w ? CodeLength(static_cast<int>(w->size())) : std::nullopt);
  }
  return out;
}

bool check_prefix(const std::vector<std::optional<Codeword>>& words) {
  std::vector<const std::string*> sorted;
  for (const auto& w : words) {
    if (w) sorted.push_back(&w->str());
  }
  std::sort(sorted.begin(), sorted.end(),
            [](const std::string* a, const std::string* b) { return *a < *b; });
  // In lexicographic order a prefix sorts directly before some word it starts.
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    const std::string& a = *sorted[i - 1];
    const std::string& b = *sorted[i];
    if (b.compare(0, a.size(), a) == 0) return false;
  }
  return true;
}

bool check_prefix(const Codebook& code) { return check_prefix(code.words()); }

bool check_padding_invariant(const std::vector<std::optional<Codeword>>& words) {
  std::unordered_set<std::string_view> seen;
  for (const auto& w : words) {
    if (w && !seen.insert(w->stripped()).second) return false;
  }
  return true;
}

bool check_padding_invariant(const Codebook& code) { return check_padding_invariant(code.words()); }

Codebook canonical_prefix_from_lengths(const LengthVector& lengths) {
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (lengths[i]) {
      if (*lengths[i] < 0) {
        throw Error(ErrorCode::KraftViolation, "negative codeword length");
      }
      order.push_back(i);
    }
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return *lengths[a] < *lengths[b]; });

  // Arbitrary-width counter so Huffman depths beyond 64 bits still work.
  std::string next;
  bool exhausted = false;
  std::vector<std::optional<Codeword>> words(lengths.size());
  for (std::size_t i : order) {
    if (exhausted) {
      throw Error(ErrorCode::KraftViolation, "lengths exceed the Kraft budget");
    }
    next.resize(static_cast<std::size_t>(*lengths[i]), '0');
    words[i] = Codeword(next);
    std::size_t pos = next.size();
    while (pos > 0 && next[pos - 1] == '1') next[--pos] = '0';
    if (pos == 0) {
      exhausted = true;
    } else {
      next[pos - 1] = '1';
    }
  }
  return Codebook(std::move(words), CodeKind::Prefix);
}

LengthVector universal_second_lengths(std::size_t n) {
  LengthVector out(n);
  for (std::size_t j = 0; j < n; ++j) {
    int len = 0;
    for (std::size_t v = j; v != 0; v >>= 1) ++len;
    out[j] = len;
  }
  return out;
}

Codebook universal_second_code(std::size_t n) {
  std::vector<std::optional<Codeword>> words(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::string bits;
    for (std::size_t v = j; v != 0; v >>= 1) bits.push_back((v & 1U) ? '1' : '0');
    words[j] = Codeword(bits);
  }
  return Codebook(std::move(words), CodeKind::PaddingInvariant);
}

int ceil_log2(std::size_t n) {
  int w = 0;
  while ((std::size_t{1} << w) < n) ++w;
  return w;
}

}  // namespace fwc
