#include "fwcodec/oracle.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "fwcodec/error.hpp"

namespace fwc {

namespace {

void guard(std::uint64_t produced, std::uint64_t cap) {
  if (produced > cap) {
    throw Error(ErrorCode::ExplosionGuard,
                "enumeration exceeds " + std::to_string(cap) + " vectors");
  }
}

// Non-decreasing vectors of `count` lengths in [lo, hi] with sum 2^-l <= 1.
// Budget is counted in units of 2^-hi.
void kraft_vectors(std::size_t count, int lo, int hi, std::uint64_t cap, LengthList& out) {
  std::vector<int> current;
  current.reserve(count);
  auto recurse = [&](auto&& self, int min_len, std::uint64_t budget) -> void {
    if (current.size() == count) {
      out.push_back(current);
      guard(out.size(), cap);
      return;
    }
    for (int len = min_len; len <= hi; ++len) {
      const std::uint64_t w = std::uint64_t{1} << (hi - len);
      // Every later element needs at least one unit.
      if (w + (count - current.size() - 1) > budget) continue;
      current.push_back(len);
      self(self, len, budget - w);
      current.pop_back();
    }
  };
  recurse(recurse, lo, std::uint64_t{1} << hi);
}

// Non-decreasing vectors of `count` lengths in [0, hi] whose trailing-zero-stripped
// codewords can be distinct: at most 2^b elements of length <= b for every b.
void padding_invariant_vectors(std::size_t count, int hi, std::uint64_t cap, LengthList& out) {
  std::vector<int> current;
  current.reserve(count);
  auto recurse = [&](auto&& self, int min_len) -> void {
    if (current.size() == count) {
      out.push_back(current);
      guard(out.size(), cap);
      return;
    }
    for (int len = min_len; len <= hi; ++len) {
      if (current.size() + 1 > (std::uint64_t{1} << len)) continue;
      current.push_back(len);
      self(self, len);
      current.pop_back();
    }
  };
  recurse(recurse, 0);
}

LengthVector to_length_vector(const std::vector<int>& assigned, std::size_t n) {
  LengthVector out(n);
  for (std::size_t i = 0; i < assigned.size(); ++i) out[i] = assigned[i];
  return out;
}

}  // namespace

LengthList enumerate_monotone_vectors(std::size_t n, int max_len, KraftMode mode,
                                      std::uint64_t cap) {
  if (n == 0) throw Error(ErrorCode::EmptyInput, "need at least one element");
  LengthList result;
  if (mode == KraftMode::AtMost) {
    if (max_len < 1) throw Error(ErrorCode::WidthTooSmall, "max_len must be positive");
    if (max_len > kMaxWidth) throw Error(ErrorCode::WidthTooLarge, "max_len exceeds 62");
    kraft_vectors(n, 1, max_len, cap, result);
    return result;
  }

  if (max_len < 0) throw Error(ErrorCode::WidthTooSmall, "max_len must be nonnegative");
  if (n > 64 || count_codes(n) > cap) {
    throw Error(ErrorCode::ExplosionGuard, "Z_" + std::to_string(n) + " exceeds the cap");
  }
  // trees[k]: monotone complete trees with k leaves, as leaf depths left to right.
  std::vector<LengthList> trees(n + 1);
  trees[1] = {{0}};
  for (std::size_t k = 2; k <= n; ++k) {
    for (std::size_t left = 1; left < k; ++left) {
      for (const auto& a : trees[left]) {
        for (const auto& b : trees[k - left]) {
          // The right subtree may not start shallower than the left one ends.
          if (a.back() > b.front()) continue;
          std::vector<int> joined;
          joined.reserve(k);
          for (int d : a) joined.push_back(d + 1);
          for (int d : b) joined.push_back(d + 1);
          trees[k].push_back(std::move(joined));
        }
      }
    }
  }
  for (auto& v : trees[n]) {
    if (v.back() <= max_len) result.push_back(std::move(v));
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::uint64_t count_codes(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::EmptyInput, "need at least one element");
  if (n > 64) throw Error(ErrorCode::Overflow, "count_codes supports n <= 64");
  if (n == 1) return 1;

  // A(i, l, x): non-decreasing vectors of i lengths, each in [l, n-1], with
  // sum 2^-len equal to x. x is held in units of 2^-(n-1).
  const int deepest = static_cast<int>(n) - 1;
  auto unit = [&](int len) { return std::uint64_t{1} << (deepest - len); };
  std::map<std::tuple<std::size_t, int, std::uint64_t>, std::uint64_t> memo;

  auto a = [&](auto&& self, std::size_t i, int l, std::uint64_t x) -> std::uint64_t {
    if (x == 0 || l > deepest) return 0;
    // Each length contributes between one unit and unit(l).
    if (x < i || x / i > unit(l) || (x / i == unit(l) && x % i != 0)) return 0;
    if (i == 1) return (x & (x - 1)) == 0 ? 1 : 0;
    auto key = std::make_tuple(i, l, x);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (int r = l; r <= deepest; ++r) {
      if (unit(r) >= x) continue;
      if (__builtin_add_overflow(total, self(self, i - 1, r, x - unit(r)), &total)) {
        throw Error(ErrorCode::Overflow, "Z_n exceeds 64 bits");
      }
    }
    memo.emplace(key, total);
    return total;
  };

  const std::uint64_t whole = std::uint64_t{1} << deepest;
  std::uint64_t z = 0;
  for (int r = 1; r <= deepest; ++r) {
    if (__builtin_add_overflow(z, a(a, n - 1, r, whole - unit(r)), &z)) {
      throw Error(ErrorCode::Overflow, "Z_n exceeds 64 bits");
    }
  }
  return z;
}

OraclePair brute_force_optimal_pair(const EntryDistribution& dist, int width, std::uint64_t cap) {
  const std::size_t n1 = dist.first.size();
  const std::size_t n2 = dist.second.size();
  if (width < 1) throw Error(ErrorCode::WidthTooSmall, "width must be positive");
  if (n1 > 8 || n2 > 8 || width > 8) {
    throw Error(ErrorCode::ExplosionGuard, "pair oracle limited to n1, n2, L <= 8");
  }

  // First field: prefix codes on the leading n' elements. A single element may
  // take the empty codeword.
  LengthList firsts{{}};
  for (std::size_t count = 1; count <= n1; ++count) kraft_vectors(count, 0, width, cap, firsts);
  LengthList seconds{{}};
  for (std::size_t count = 1; count <= n2; ++count) {
    padding_invariant_vectors(count, width, cap, seconds);
  }
  guard(firsts.size() + seconds.size(), cap);

  OraclePair best;
  best.p_success = -1.0;
  std::vector<double> fits(static_cast<std::size_t>(width) + 1);
  for (const auto& second : seconds) {
    // fits[t]: mass of second-field elements with codeword length <= t.
    std::fill(fits.begin(), fits.end(), 0.0);
    for (std::size_t j = 0; j < second.size(); ++j) {
      for (int t = second[j]; t <= width; ++t) fits[static_cast<std::size_t>(t)] += dist.second.prob(j);
    }
    for (const auto& first : firsts) {
      double total = 0.0;
      for (std::size_t i = 0; i < first.size(); ++i) {
        total += dist.first.prob(i) * fits[static_cast<std::size_t>(width - first[i])];
      }
      if (total > best.p_success) {
        best.p_success = total;
        best.first = to_length_vector(first, n1);
        best.second = to_length_vector(second, n2);
      }
    }
  }
  return best;
}

OracleShared brute_force_optimal_shared(const ElementDistribution& dist, int width,
                                        std::uint64_t cap) {
  const std::size_t n = dist.size();
  if (width < 2) throw Error(ErrorCode::WidthTooSmall, "shared oracle needs width >= 2");
  if (n > 8 || width > 8) {
    throw Error(ErrorCode::ExplosionGuard, "shared oracle limited to n, L <= 8");
  }
  LengthList codes{{}};
  for (std::size_t count = 1; count <= n; ++count) kraft_vectors(count, 1, width - 1, cap, codes);

  OracleShared best;
  best.p_success = -1.0;
  for (const auto& code : codes) {
    double total = 0.0;
    for (std::size_t i = 0; i < code.size(); ++i) {
      for (std::size_t j = 0; j < code.size(); ++j) {
        if (code[i] + code[j] <= width) total += dist.prob(i) * dist.prob(j);
      }
    }
    if (total > best.p_success) {
      best.p_success = total;
      best.lengths = to_length_vector(code, n);
    }
  }
  return best;
}

}  // namespace fwc
