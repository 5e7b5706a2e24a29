#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace purecomplex {

/// A subset of {1..q} packed into bits: bit i-1 set <=> element i present.
/// Used both for facet-membership patterns of a vertex and for vertex sets
/// during enumeration.
using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// 0-based positions of the set bits, ascending.
inline std::vector<int> mask_bits(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

/// Value of the pattern read as the binary word a1 a2 ... aq, a1 most
/// significant.  Orders patterns the way their printed form suggests.
inline std::uint64_t pattern_word(Mask m, int q) {
  std::uint64_t w = 0;
  for (int i = 0; i < q; ++i)
    if (m >> i & 1) w |= std::uint64_t{1} << (q - 1 - i);
  return w;
}

inline std::string pattern_string(Mask m, int q) {
  std::string s(static_cast<std::size_t>(q), '0');
  for (int i = 0; i < q; ++i)
    if (m >> i & 1) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

inline Mask pattern_from_string(const std::string& s, int q) {
  if (static_cast<int>(s.size()) != q)
    throw std::invalid_argument("pattern \"" + s + "\": expected exactly " +
                                std::to_string(q) + " binary digits");
  Mask m = 0;
  for (int i = 0; i < q; ++i) {
    char c = s[static_cast<std::size_t>(i)];
    if (c == '1')
      m |= Mask{1} << i;
    else if (c != '0')
      throw std::invalid_argument("pattern \"" + s + "\": digits must be 0 or 1");
  }
  return m;
}

/// Advances idx to the lexicographically next k-subset of {0..n-1}; idx must
/// hold an ascending subset.  Returns false once idx was the last subset.
inline bool next_k_subset(std::vector<int>& idx, int n) {
  int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[static_cast<std::size_t>(i)] < n - k + i) {
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

inline std::vector<int> first_k_subset(int k) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  return idx;
}

}  // namespace purecomplex
