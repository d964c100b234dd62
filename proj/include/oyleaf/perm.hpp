#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "oyleaf/errors.hpp"

namespace oyleaf {

/// One-line word on {1..n}. Canonical encoding: comma-separated values,
/// e.g. "3,1,2".
struct Permutation {
  std::vector<int> word;

  std::size_t size() const { return word.size(); }
  bool operator==(const Permutation& o) const { return word == o.word; }
};

inline void validate_perm(const std::vector<int>& word) {
  std::vector<bool> seen(word.size(), false);
  for (std::size_t i = 0; i < word.size(); ++i) {
    int v = word[i];
    if (v < 1 || v > static_cast<int>(word.size()) || seen[v - 1])
      throw parse_error("not a permutation of 1..n: entry " + std::to_string(v),
                        i);
    seen[v - 1] = true;
  }
}

inline Permutation make_perm(std::vector<int> word) {
  validate_perm(word);
  return Permutation{std::move(word)};
}

inline std::string render_perm(const Permutation& p) {
  std::string out;
  for (std::size_t i = 0; i < p.word.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(p.word[i]);
  }
  return out;
}

inline Permutation parse_perm(const std::string& text) {
  std::vector<int> word;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw parse_error("expected digit", i);
    int v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      v = 10 * v + (text[i++] - '0');
    word.push_back(v);
    if (i < text.size()) {
      if (text[i] != ',') throw parse_error("expected ','", i);
      ++i;
      if (i == text.size()) throw parse_error("trailing ','", i - 1);
    }
  }
  return make_perm(std::move(word));
}

enum class Pattern { p321, p132 };

/// True iff some i<j<k has the pattern's relative order.
inline bool contains_pattern(const Permutation& p, Pattern pat) {
  const auto& w = p.word;
  const std::size_t n = w.size();
  if (pat == Pattern::p321) {
    // Decreasing subsequence of length 3: best_mid is the largest value so
    // far that has a larger value before it; any later smaller value
    // completes a 321.
    int best_mid = std::numeric_limits<int>::min();
    int max_seen = std::numeric_limits<int>::min();
    for (std::size_t k = 0; k < n; ++k) {
      if (w[k] < best_mid) return true;
      if (w[k] < max_seen) best_mid = std::max(best_mid, w[k]);
      max_seen = std::max(max_seen, w[k]);
    }
    return false;
  }
  // 132: pi_i < pi_k < pi_j with i<j<k. For each j, the best "1" is the
  // minimum prefix value; then look for a later value strictly between.
  int prefix_min = std::numeric_limits<int>::max();
  for (std::size_t j = 0; j < n; ++j) {
    if (prefix_min < w[j]) {
      for (std::size_t k = j + 1; k < n; ++k)
        if (prefix_min < w[k] && w[k] < w[j]) return true;
    }
    prefix_min = std::min(prefix_min, w[j]);
  }
  return false;
}

inline void for_each_permutation(
    std::size_t n, const std::function<void(const Permutation&)>& fn) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  Permutation p;
  do {
    p.word = w;
    fn(p);
  } while (std::next_permutation(w.begin(), w.end()));
}

/// Pattern avoiders of S_n in lexicographic (numeric one-line) order.
inline void for_each_avoider(Pattern pat, std::size_t n,
                             const std::function<void(const Permutation&)>& fn) {
  for_each_permutation(n, [&](const Permutation& p) {
    if (!contains_pattern(p, pat)) fn(p);
  });
}

}  // namespace oyleaf
