#ifndef FWCODEC_CODEBOOK_HPP_
#define FWCODEC_CODEBOOK_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fwc {

// Widest memory word for which 2^(L - l) weights stay in native 64-bit integers.
inline constexpr int kMaxWidth = 62;

// Binary codeword, leftmost bit first. The empty codeword is valid.
class Codeword {
public:
  Codeword() = default;
  explicit Codeword(std::string_view bits);

  // `width` low-order bits of `value`, most significant first.
  static Codeword from_value(std::uint64_t value, int width);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  const std::string& str() const { return bits_; }

  // Drops every trailing zero bit.
  std::string_view stripped() const;

  bool is_prefix_of(std::string_view bits) const {
    return bits.substr(0, bits_.size()) == bits_;
  }

  friend bool operator==(const Codeword&, const Codeword&) = default;
  friend auto operator<=>(const Codeword&, const Codeword&) = default;

private:
  std::string bits_;
};

// Codeword length of one element; nullopt means no codeword (length "infinity").
using CodeLength = std::optional<int>;
using LengthVector = std::vector<CodeLength>;

// Assigned lengths non-decreasing, unassigned only at the tail.
bool is_monotone(const LengthVector& lengths);

// Sum of 2^(L - l) over assigned lengths, exact.
std::uint64_t kraft_weight(const LengthVector& lengths, int width);

enum class CodeKind { Prefix, PaddingInvariant, Unchecked };

std::string_view to_string(CodeKind kind);
CodeKind code_kind_from_string(std::string_view name);

// Per-element optional codewords, index-aligned with an ElementDistribution.
class Codebook {
public:
  Codebook() = default;
  // Throws KraftViolation / InvalidDocument when `kind` does not hold for `words`.
  Codebook(std::vector<std::optional<Codeword>> words, CodeKind kind);

  std::size_t size() const { return words_.size(); }
  CodeKind kind() const { return kind_; }
  const std::optional<Codeword>& word(std::size_t i) const { return words_[i]; }
  const std::vector<std::optional<Codeword>>& words() const { return words_; }

  LengthVector lengths() const;

private:
  std::vector<std::optional<Codeword>> words_;
  CodeKind kind_ = CodeKind::Unchecked;
};

// No assigned codeword is a prefix of another.
bool check_prefix(const Codebook& code);
bool check_prefix(const std::vector<std::optional<Codeword>>& words);

// Codewords stay pairwise distinct after dropping trailing zeros.
bool check_padding_invariant(const Codebook& code);
bool check_padding_invariant(const std::vector<std::optional<Codeword>>& words);

// Canonical prefix code: codewords handed out in increasing numeric order,
// shorter lengths first, ties by element index. Unassigned stays unassigned.
Codebook canonical_prefix_from_lengths(const LengthVector& lengths);

// Element 1 gets the empty codeword, element j >= 2 the shortest binary form
// of j - 1 written least-significant bit first.
Codebook universal_second_code(std::size_t n);

// Lengths of universal_second_code(n) without materializing codewords.
LengthVector universal_second_lengths(std::size_t n);

// Smallest w with 2^w >= n.
int ceil_log2(std::size_t n);

}  // namespace fwc

#endif  // FWCODEC_CODEBOOK_HPP_
