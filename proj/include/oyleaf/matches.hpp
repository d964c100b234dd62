#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "oyleaf/errors.hpp"
#include "oyleaf/tree.hpp"

namespace oyleaf {

// Labels live in {1..n+1} (unmarked) and {n+2..2n} (marked, the starred
// labels). A label is marked iff its numeric part exceeds n+1; marked
// labels compare by numeric part.

struct LabeledTree {
  int label = 0;
  std::vector<LabeledTree> children;

  bool operator==(const LabeledTree& o) const {
    return label == o.label && children == o.children;
  }
};

inline std::string render_labeled(const LabeledTree& t) {
  std::string out = "(" + std::to_string(t.label);
  for (const LabeledTree& c : t.children) out += render_labeled(c);
  out.push_back(')');
  return out;
}

/// Forgets the labels.
inline PlaneTree shape_of(const LabeledTree& t) {
  PlaneTree out;
  out.children.reserve(t.children.size());
  for (const LabeledTree& c : t.children) out.children.push_back(shape_of(c));
  return out;
}

/// A match is a rooted two-vertex tree.
struct Match {
  int root_label = 0;
  int leaf_label = 0;
};

struct MatchSet {
  std::size_t n = 0;
  std::vector<Match> matches;  // exactly n, labels 1..n+1 and n+2..2n once each
};

inline bool is_marked(const MatchSet& f, int label) {
  return label > static_cast<int>(f.n) + 1;
}

/// The merging algorithm. Repeatedly: take the tree with the smallest root
/// among trees containing no marked vertex, and the tree containing the
/// smallest marked vertex j*; if j* is that tree's root, identify the two
/// roots, keeping the unmarked one and placing the absorbed subtrees to the
/// right; otherwise j* is a leaf and the unmarked tree is substituted for
/// it. Ends with a single labeled plane tree on {1..n+1}.
inline LabeledTree merge(const MatchSet& f) {
  if (f.n < 1 || f.matches.size() != f.n)
    throw domain_error("merge: invalid match set");
  std::vector<LabeledTree> forest;
  for (const Match& m : f.matches) {
    LabeledTree t;
    t.label = m.root_label;
    t.children.push_back(LabeledTree{m.leaf_label, {}});
    forest.push_back(std::move(t));
  }
  auto contains_marked = [&](const LabeledTree& t) {
    std::function<bool(const LabeledTree&)> rec = [&](const LabeledTree& v) {
      if (is_marked(f, v.label)) return true;
      return std::any_of(v.children.begin(), v.children.end(), rec);
    };
    return rec(t);
  };
  auto smallest_marked = [&](const LabeledTree& t) {
    int best = 0;
    std::function<void(const LabeledTree&)> rec = [&](const LabeledTree& v) {
      if (is_marked(f, v.label) && (best == 0 || v.label < best)) best = v.label;
      for (const LabeledTree& c : v.children) rec(c);
    };
    rec(t);
    return best;  // 0 if none
  };

  while (forest.size() > 1) {
    // (1) smallest unmarked-only root
    std::size_t ti = forest.size();
    for (std::size_t k = 0; k < forest.size(); ++k)
      if (!contains_marked(forest[k]) &&
          (ti == forest.size() || forest[k].label < forest[ti].label))
        ti = k;
    if (ti == forest.size())
      throw domain_error("merge: no tree free of marked vertices");
    // (2) tree with the smallest marked vertex
    std::size_t si = forest.size();
    int sj = 0;
    for (std::size_t k = 0; k < forest.size(); ++k) {
      int m = smallest_marked(forest[k]);
      if (m != 0 && (sj == 0 || m < sj)) {
        sj = m;
        si = k;
      }
    }
    if (si == forest.size())
      throw domain_error("merge: no marked vertex left but forest not merged");

    LabeledTree t = std::move(forest[ti]);
    LabeledTree star = std::move(forest[si]);
    std::vector<std::size_t> dead{ti, si};
    std::sort(dead.rbegin(), dead.rend());
    for (std::size_t d : dead) forest.erase(forest.begin() + d);

    if (star.label == sj) {
      // horizontal merge: keep t's root, absorbed subtrees go to the right
      for (LabeledTree& c : star.children) t.children.push_back(std::move(c));
      forest.push_back(std::move(t));
    } else {
      // vertical merge: substitute t for the marked leaf j*
      std::function<bool(LabeledTree&)> subst = [&](LabeledTree& v) {
        for (LabeledTree& c : v.children) {
          if (c.label == sj && c.children.empty()) {
            c = t;
            return true;
          }
          if (subst(c)) return true;
        }
        return false;
      };
      if (!subst(star)) throw domain_error("merge: marked vertex not a leaf");
      forest.push_back(std::move(star));
    }
  }
  return forest.front();
}

/// Every valid match set on {1..n+1} and {n+2..2n}, (2n)!/n! of them.
inline void enumerate_match_sets(
    std::size_t n, const std::function<void(const MatchSet&)>& fn) {
  if (n < 1 || n > 5)
    throw domain_error("enumerate_match_sets: supported range is 1 <= n <= 5");
  std::vector<int> labels(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) labels[i] = static_cast<int>(i) + 1;
  MatchSet f;
  f.n = n;
  std::vector<bool> used(2 * n + 1, false);
  std::function<void()> rec = [&]() {
    if (f.matches.size() == n) {
      fn(f);
      return;
    }
    int a = 0;
    for (int v : labels)
      if (!used[v]) {
        a = v;
        break;
      }
    used[a] = true;
    for (int b : labels) {
      if (used[b]) continue;
      used[b] = true;
      f.matches.push_back(Match{a, b});
      rec();
      f.matches.pop_back();
      f.matches.push_back(Match{b, a});
      rec();
      f.matches.pop_back();
      used[b] = false;
    }
    used[a] = false;
  };
  rec();
}

}  // namespace oyleaf
