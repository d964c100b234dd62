#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "oyleaf/errors.hpp"
#include "oyleaf/path.hpp"
#include "oyleaf/perm.hpp"
#include "oyleaf/tree.hpp"

namespace oyleaf {

/// An old leaf is a leaf that is the leftmost child of its parent; every
/// other leaf is young. The critical leaf is the last old leaf in standard
/// left-to-right preorder; its index below is the 0-based preorder index
/// of that vertex (root = 0), absent for the empty tree.
struct TreeStats {
  std::size_t edges = 0;
  std::size_t leaves = 0;
  std::size_t old_leaves = 0;
  std::size_t young_leaves = 0;
  std::optional<std::size_t> critical_leaf_preorder_index;
};

namespace detail {
inline void tree_stats_rec(const PlaneTree& t, bool leftmost, TreeStats& st,
                           std::size_t& preorder) {
  std::size_t my_index = preorder++;
  if (t.children.empty()) {
    ++st.leaves;
    if (leftmost) {
      ++st.old_leaves;
      st.critical_leaf_preorder_index = my_index;
    } else {
      ++st.young_leaves;
    }
    return;
  }
  st.edges += t.children.size();
  for (std::size_t i = 0; i < t.children.size(); ++i)
    tree_stats_rec(t.children[i], i == 0, st, preorder);
}
}  // namespace detail

inline TreeStats tree_stats(const PlaneTree& t) {
  TreeStats st;
  std::size_t preorder = 1;
  if (t.children.empty()) return st;  // empty tree: no leaves by convention
  st.edges = t.children.size();
  for (std::size_t i = 0; i < t.children.size(); ++i)
    detail::tree_stats_rec(t.children[i], i == 0, st, preorder);
  return st;
}

/// Overlapping occurrences of w as a contiguous factor of p.
inline std::size_t factor_count(const LatticePath& p, const std::string& w) {
  if (w.empty() || w.size() > p.steps.size()) return 0;
  std::size_t count = 0;
  for (std::size_t i = 0; i + w.size() <= p.steps.size(); ++i)
    if (p.steps.compare(i, w.size(), w) == 0) ++count;
  return count;
}

/// Number of UD factors of a Dyck path whose apex height is even.
inline std::size_t peaks_at_even_height(const LatticePath& p) {
  if (p.kind != PathKind::Dyck) throw domain_error("expected a Dyck path");
  std::size_t count = 0;
  long height = 0;
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    height += height_change(p.steps[i]);
    if (i + 1 < p.steps.size() && p.steps[i] == 'U' && p.steps[i + 1] == 'D' &&
        height % 2 == 0)
      ++count;
  }
  return count;
}

/// Maximal runs of >= 2 D's in p with one D appended.
inline std::size_t drops(const LatticePath& p) {
  if (p.kind != PathKind::Dyck) throw domain_error("expected a Dyck path");
  std::string s = p.steps + "D";
  std::size_t count = 0, run = 0;
  for (char c : s) {
    if (c == 'D') {
      ++run;
    } else {
      if (run >= 2) ++count;
      run = 0;
    }
  }
  if (run >= 2) ++count;
  return count;
}

/// Occurrences of DDD in p with one D appended (overlapping).
inline std::size_t triple_falls(const LatticePath& p) {
  if (p.kind != PathKind::Dyck) throw domain_error("expected a Dyck path");
  LatticePath q{PathKind::Motzkin, p.steps + "D"};  // kind irrelevant here
  return factor_count(q, "DDD");
}

struct PermStats {
  std::size_t weak_excedances = 0;        // positions i with pi_i >= i
  std::size_t consec_weak_exc_pairs = 0;  // i<n with i, i+1 both weak exc
  std::size_t weak_exc_not_followed = 0;  // weak exc not followed by one
  std::size_t consec_deficiency_pairs = 0;
  bool last_is_deficiency = false;  // pi_n < n
  std::size_t double_descents_prepended = 0;  // of (n+1)pi
  std::size_t double_ascents_appended = 0;    // of pi(n+1)
  std::size_t ascending_runs_appended = 0;    // of pi(n+1), runs of >= 2
  std::size_t left_to_right_minima = 0;
};

inline PermStats perm_stats(const Permutation& p) {
  const auto& w = p.word;
  const std::size_t n = w.size();
  PermStats st;
  auto weak = [&](std::size_t i) {
    return w[i] >= static_cast<int>(i) + 1;
  };  // 1-based position
  for (std::size_t i = 0; i < n; ++i) {
    if (weak(i)) {
      ++st.weak_excedances;
      if (i + 1 == n || !weak(i + 1)) ++st.weak_exc_not_followed;
    }
    if (i + 1 < n) {
      if (weak(i) && weak(i + 1)) ++st.consec_weak_exc_pairs;
      if (!weak(i) && !weak(i + 1)) ++st.consec_deficiency_pairs;
    }
  }
  if (n > 0) st.last_is_deficiency = !weak(n - 1);

  std::vector<int> pre(w);  // (n+1) pi
  pre.insert(pre.begin(), static_cast<int>(n) + 1);
  std::vector<int> app(w);  // pi (n+1)
  app.push_back(static_cast<int>(n) + 1);

  for (std::size_t i = 0; i + 2 < pre.size(); ++i)
    if (pre[i] > pre[i + 1] && pre[i + 1] > pre[i + 2])
      ++st.double_descents_prepended;
  for (std::size_t i = 0; i + 2 < app.size(); ++i)
    if (app[i] < app[i + 1] && app[i + 1] < app[i + 2])
      ++st.double_ascents_appended;

  // Ascending runs of pi(n+1): maximal increasing blocks of length >= 2.
  std::size_t run = 1;
  for (std::size_t i = 1; i < app.size(); ++i) {
    if (app[i - 1] < app[i]) {
      ++run;
    } else {
      if (run >= 2) ++st.ascending_runs_appended;
      run = 1;
    }
  }
  if (run >= 2) ++st.ascending_runs_appended;

  int min_seen = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < n; ++i) {
    if (w[i] < min_seen) {
      ++st.left_to_right_minima;
      min_seen = w[i];
    }
  }
  return st;
}

}  // namespace oyleaf
