#pragma once

#include <random>
#include <string>
#include <vector>

#include "fwcodec/codebook.hpp"
#include "fwcodec/distribution.hpp"

namespace testing {

inline fwc::ElementDistribution small_first() {
  return fwc::ElementDistribution({"a", "b", "c", "d", "e"}, {0.4, 0.3, 0.16, 0.08, 0.06});
}

inline fwc::ElementDistribution small_second() {
  return fwc::ElementDistribution({"x", "y", "z"}, {0.5, 0.3, 0.2});
}

inline fwc::EntryDistribution small_entry() { return {small_first(), small_second()}; }

inline fwc::ElementDistribution heavy_tail() {
  std::vector<double> p{0.4, 0.4, 0.08};
  p.resize(15, 0.01);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < p.size(); ++i) labels.push_back("s" + std::to_string(i + 1));
  return fwc::ElementDistribution(labels, p);
}

inline fwc::LengthVector lv(std::initializer_list<int> lengths) {
  fwc::LengthVector out;
  for (int l : lengths) out.push_back(l < 0 ? fwc::CodeLength{} : fwc::CodeLength{l});
  return out;
}

inline fwc::Codeword cw(const char* bits) { return fwc::Codeword(bits); }

// Codebook from bit strings; "-" leaves the element unassigned.
inline fwc::Codebook book(std::initializer_list<const char*> bits, fwc::CodeKind kind) {
  std::vector<std::optional<fwc::Codeword>> words;
  for (const char* b : bits) {
    if (std::string(b) == "-") {
      words.emplace_back();
    } else {
      words.emplace_back(fwc::Codeword(b));
    }
  }
  return fwc::Codebook(std::move(words), kind);
}

}  // namespace testing

#include <set>

#include "fwcodec/codec.hpp"

namespace testing {

// Random monotone-free length vector with Kraft sum <= 1 at `max_len`; some
// elements may stay unassigned.
inline fwc::LengthVector random_prefix_lengths(std::size_t n, int max_len, std::mt19937_64& rng) {
  fwc::LengthVector out(n);
  std::uint64_t budget = std::uint64_t{1} << max_len;
  std::uniform_int_distribution<int> len(0, max_len);
  std::bernoulli_distribution skip(0.15);
  for (auto& l : out) {
    if (skip(rng)) continue;
    int pick = len(rng);
    std::uint64_t w = std::uint64_t{1} << (max_len - pick);
    if (w > budget) continue;
    budget -= w;
    l = pick;
  }
  return out;
}

// Random padding-invariant code: distinct stripped words, each padded with a
// random number of zeros.
inline fwc::Codebook random_padding_invariant(std::size_t n, int max_len, std::mt19937_64& rng) {
  std::set<std::string> stripped;
  std::vector<std::optional<fwc::Codeword>> words(n);
  std::uniform_int_distribution<int> len(0, max_len);
  std::bernoulli_distribution coin(0.5), skip(0.1);
  for (auto& w : words) {
    if (skip(rng)) continue;
    for (int attempt = 0; attempt < 20; ++attempt) {
      int l = len(rng);
      std::string bits;
      for (int b = 0; b < l; ++b) bits += coin(rng) ? '1' : '0';
      auto last = bits.find_last_of('1');
      std::string key = last == std::string::npos ? "" : bits.substr(0, last + 1);
      if (stripped.insert(key).second) {
        w = fwc::Codeword(bits);
        break;
      }
    }
  }
  return fwc::Codebook(std::move(words), fwc::CodeKind::PaddingInvariant);
}

inline fwc::EntryScheme random_scheme(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size(1, 12);
  std::uniform_int_distribution<int> width(1, 12);
  std::size_t n1 = size(rng), n2 = size(rng);
  int L = width(rng);
  fwc::Codebook first = fwc::canonical_prefix_from_lengths(random_prefix_lengths(n1, L, rng));
  fwc::Codebook second;
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: second = fwc::universal_second_code(n2); break;
    case 1: second = fwc::canonical_prefix_from_lengths(random_prefix_lengths(n2, L, rng)); break;
    default: second = random_padding_invariant(n2, L, rng); break;
  }
  return fwc::EntryScheme(std::move(first), std::move(second), L);
}

}  // namespace testing
