#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "oyleaf/errors.hpp"
#include "oyleaf/path.hpp"
#include "oyleaf/perm.hpp"
#include "oyleaf/stats.hpp"
#include "oyleaf/tree.hpp"

namespace oyleaf {

// ---------------------------------------------------------------------------
// pre: right-to-left preorder edge walk, U going down, D coming back up.
// Equivalently the standard parenthesis word of the mirrored tree.
// ---------------------------------------------------------------------------

inline LatticePath pre(const PlaneTree& t) {
  if (t.children.empty()) throw domain_error("empty tree has no path image");
  std::string steps;
  steps.reserve(2 * edge_count(t));
  std::function<void(const PlaneTree&)> walk = [&](const PlaneTree& node) {
    for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) {
      steps.push_back('U');
      walk(*it);
      steps.push_back('D');
    }
  };
  walk(t);
  return LatticePath{PathKind::Dyck, std::move(steps)};
}

inline PlaneTree pre_inv(const LatticePath& p) {
  if (p.kind != PathKind::Dyck) throw domain_error("expected a Dyck path");
  validate_path(PathKind::Dyck, p.steps);
  PlaneTree t;
  std::vector<PlaneTree*> stack{&t};
  for (char c : p.steps) {
    if (c == 'U') {
      stack.back()->children.emplace_back();
      stack.push_back(&stack.back()->children.back());
    } else {
      stack.pop_back();
    }
  }
  return mirror(t);
}

// ---------------------------------------------------------------------------
// dgr: left-to-right preorder; a node with r children emits r U's and one D,
// except the last leaf in preorder which emits nothing.
// ---------------------------------------------------------------------------

inline LatticePath dgr(const PlaneTree& t) {
  if (t.children.empty()) throw domain_error("empty tree has no path image");
  std::string steps;
  std::function<void(const PlaneTree&)> walk = [&](const PlaneTree& node) {
    steps.append(node.children.size(), 'U');
    steps.push_back('D');
    for (const PlaneTree& c : node.children) walk(c);
  };
  walk(t);
  steps.pop_back();  // the last preorder node is a leaf emitting nothing
  return LatticePath{PathKind::Dyck, std::move(steps)};
}

inline PlaneTree dgr_inv(const LatticePath& p) {
  if (p.kind != PathKind::Dyck) throw domain_error("expected a Dyck path");
  validate_path(PathKind::Dyck, p.steps);
  if (p.steps.empty()) throw domain_error("empty path has no tree preimage");
  // Blocks "U^r D" describe the preorder nodes; the last leaf contributes
  // no block and remains as the single unfilled child slot at the end.
  std::vector<std::size_t> degrees;
  for (std::size_t i = 0; i < p.steps.size();) {
    std::size_t r = 0;
    while (i < p.steps.size() && p.steps[i] == 'U') ++r, ++i;
    if (i == p.steps.size()) throw domain_error("not a dgr image");
    ++i;  // the D closing the block
    degrees.push_back(r);
  }
  struct Slot {
    PlaneTree* node;
    std::size_t next = 0;
  };
  PlaneTree root;
  std::vector<Slot> stack;
  for (std::size_t b = 0; b < degrees.size(); ++b) {
    PlaneTree* node;
    if (b == 0) {
      node = &root;
    } else {
      if (stack.empty()) throw domain_error("not a dgr image");
      Slot& top = stack.back();
      node = &top.node->children[top.next++];
      if (top.next == top.node->children.size()) stack.pop_back();
    }
    if (degrees[b] > 0) {
      node->children.resize(degrees[b]);
      stack.push_back(Slot{node, 0});
    }
  }
  if (stack.size() != 1 ||
      stack.back().node->children.size() - stack.back().next != 1)
    throw domain_error("not a dgr image");
  return root;
}

// ---------------------------------------------------------------------------
// contract / expand: left-to-right rewrite UDU -> RU, and R -> UD back.
// ---------------------------------------------------------------------------

inline LatticePath contract_udu(const LatticePath& p) {
  if (p.kind != PathKind::Dyck) throw domain_error("expected a Dyck path");
  validate_path(PathKind::Dyck, p.steps);
  if (p.steps.size() < 2) throw domain_error("path too short to contract");
  std::string out;
  std::size_t i = 0;
  while (i < p.steps.size()) {
    if (i + 2 < p.steps.size() && p.steps.compare(i, 3, "UDU") == 0) {
      out.push_back('R');
      i += 2;  // the trailing U is re-examined as the next position
    } else {
      out.push_back(p.steps[i]);
      ++i;
    }
  }
  validate_path(PathKind::Contracted, out);
  return LatticePath{PathKind::Contracted, std::move(out)};
}

inline LatticePath expand_udu(const LatticePath& p) {
  if (p.kind != PathKind::Contracted)
    throw domain_error("expected a contracted path");
  validate_path(PathKind::Contracted, p.steps);
  std::string out;
  for (char c : p.steps) {
    if (c == 'R')
      out += "UD";
    else
      out.push_back(c);
  }
  return LatticePath{PathKind::Dyck, std::move(out)};
}

// ---------------------------------------------------------------------------
// Callan's step: contracted path of length 2n - (peaks contracted) down to a
// 2-Motzkin path of length n-1. Mark every U followed by D, every D followed
// by D, and the final D; turn each unmarked U whose matching D is marked
// into B; delete the marked steps. R steps pass through.
// ---------------------------------------------------------------------------

inline LatticePath callan_reduce(const LatticePath& p) {
  if (p.kind != PathKind::Contracted)
    throw domain_error("expected a contracted path");
  validate_path(PathKind::Contracted, p.steps);
  const std::string& s = p.steps;
  const std::size_t len = s.size();
  std::vector<bool> marked(len, false);
  for (std::size_t i = 0; i < len; ++i) {
    if (s[i] == 'U' && i + 1 < len && s[i + 1] == 'D') marked[i] = true;
    if (s[i] == 'D' && i + 1 < len && s[i + 1] == 'D') marked[i] = true;
    if (s[i] == 'D' && i + 1 == len) marked[i] = true;
  }
  // Matching D of a U: first later step returning to the U's starting
  // height. R steps are transparent (height change 0).
  std::vector<std::size_t> match(len, len);
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < len; ++i) {
    if (s[i] == 'U') open.push_back(i);
    if (s[i] == 'D') {
      match[open.back()] = i;
      open.pop_back();
    }
  }
  std::string out;
  for (std::size_t i = 0; i < len; ++i) {
    if (marked[i]) continue;
    if (s[i] == 'U' && marked[match[i]])
      out.push_back('B');
    else
      out.push_back(s[i]);
  }
  validate_path(PathKind::Colored2, out);
  return LatticePath{PathKind::Colored2, std::move(out)};
}

inline LatticePath callan_expand(const LatticePath& q) {
  if (q.kind != PathKind::Colored2)
    throw domain_error("expected a 2-Motzkin path");
  validate_path(PathKind::Colored2, q.steps);
  // Each D of q is the surviving last step of a maximal D-run of the
  // contracted path; the run reinstates its peak U and closes the B-opens
  // stacked above the D's matching U. The leftover opens at the end form
  // the terminal (fully deleted) peak-and-run group.
  std::string out;
  std::vector<char> stack;  // 'U' or 'B' opens
  for (char c : q.steps) {
    switch (c) {
      case 'R':
        out.push_back('R');
        break;
      case 'U':
      case 'B':
        out.push_back('U');
        stack.push_back(c);
        break;
      case 'D': {
        std::size_t closed = 0;
        while (!stack.empty() && stack.back() == 'B') {
          stack.pop_back();
          ++closed;
        }
        assert(!stack.empty() && stack.back() == 'U');
        stack.pop_back();
        ++closed;
        out.push_back('U');                  // the deleted peak
        out.append(closed + 1, 'D');         // run of length closed+1
        break;
      }
    }
  }
  out.push_back('U');
  out.append(stack.size() + 1, 'D');
  stack.clear();
  validate_path(PathKind::Contracted, out);
  return LatticePath{PathKind::Contracted, std::move(out)};
}

// ---------------------------------------------------------------------------
// phi = callan_reduce . contract_udu . pre, with inverse.
// ---------------------------------------------------------------------------

inline LatticePath phi(const PlaneTree& t) {
  return callan_reduce(contract_udu(pre(t)));
}

inline PlaneTree phi_inv(const LatticePath& q) {
  return pre_inv(expand_udu(callan_expand(q)));
}

// ---------------------------------------------------------------------------
// psi: recursive encoding along the rightmost-descent path. With
// u_0 = root, u_i the rightmost child of u_{i-1}, and T_i the tree u_{i-1}
// keeps after removing the branch to u_i: for i < k a trivial T_i gives B
// and a nontrivial one gives U psi(T_i) D; for i = k a trivial T_k gives
// nothing and a nontrivial one gives R psi(T_k).
// ---------------------------------------------------------------------------

inline std::string psi_word(const PlaneTree& t) {
  if (t.children.empty()) return "";
  PlaneTree rest = t;  // T_i: drop the rightmost child
  const PlaneTree& down = t.children.back();
  rest.children.pop_back();
  std::string out;
  if (down.children.empty()) {
    // i = k: last edge of the descent path
    if (!rest.children.empty()) out = "R" + psi_word(rest);
  } else {
    if (rest.children.empty())
      out = "B";
    else
      out = "U" + psi_word(rest) + "D";
    out += psi_word(down);
  }
  return out;
}

inline LatticePath psi(const PlaneTree& t) {
  if (t.children.empty()) throw domain_error("empty tree has no path image");
  std::string w = psi_word(t);
  validate_path(PathKind::Colored2, w);
  return LatticePath{PathKind::Colored2, std::move(w)};
}

namespace detail {
// Parses Q_1 ... Q_k from s[pos..] and rebuilds the tree bottom-up.
inline PlaneTree psi_inv_word(const std::string& s, std::size_t pos,
                              std::size_t end) {
  std::vector<PlaneTree> segments;  // the T_i, in order
  bool explicit_last = false;
  while (pos < end) {
    char c = s[pos];
    if (c == 'B') {
      segments.emplace_back();  // single vertex
      ++pos;
    } else if (c == 'U') {
      long h = 0;
      std::size_t j = pos;
      do {
        h += height_change(s[j]);
        ++j;
      } while (h != 0);
      segments.push_back(psi_inv_word(s, pos + 1, j - 1));
      pos = j;
    } else if (c == 'R') {
      segments.push_back(psi_inv_word(s, pos + 1, end));
      pos = end;
      explicit_last = true;
    } else {
      throw domain_error("not a psi image");
    }
  }
  if (!explicit_last) segments.emplace_back();  // trivial T_k
  // Rebuild: the subtree rooted at u_{i-1} is T_i with the subtree rooted
  // at u_i attached as new rightmost child; u_k is a leaf.
  PlaneTree below;  // subtree rooted at u_i, initially the leaf u_k
  for (std::size_t i = segments.size(); i-- > 0;) {
    PlaneTree node = std::move(segments[i]);
    node.children.push_back(std::move(below));
    below = std::move(node);
  }
  return below;
}
}  // namespace detail

inline PlaneTree psi_inv(const LatticePath& q) {
  if (q.kind != PathKind::Colored2)
    throw domain_error("expected a 2-Motzkin path");
  validate_path(PathKind::Colored2, q.steps);
  return detail::psi_inv_word(q.steps, 0, q.steps.size());
}

// Alternative description of psi: label the vertices in left-to-right
// preorder (internal non-leftmost child -> U, internal leftmost child -> B,
// young leaf -> R, old leaf -> D except the last old leaf and the root,
// which stay unlabeled), then read the labels visiting each node's children
// right to left before recursing into the children left to right.
inline LatticePath psi_by_labels(const PlaneTree& t) {
  if (t.children.empty()) throw domain_error("empty tree has no path image");
  std::vector<char> labels;  // per preorder index, 0 = unlabeled
  std::vector<std::size_t> index_of;
  std::size_t last_old = 0;
  std::size_t counter = 0;
  std::function<void(const PlaneTree&, bool, bool)> assign =
      [&](const PlaneTree& node, bool leftmost, bool is_root) {
        std::size_t idx = counter++;
        char lab = 0;
        if (!is_root) {
          if (node.children.empty())
            lab = leftmost ? 'D' : 'R';
          else
            lab = leftmost ? 'B' : 'U';
          if (lab == 'D') last_old = idx;
        }
        labels.push_back(lab);
        for (std::size_t i = 0; i < node.children.size(); ++i)
          assign(node.children[i], i == 0, false);
      };
  assign(t, false, true);
  labels[last_old] = 0;  // the last old leaf stays unlabeled

  // Re-walk in the same preorder to know each subtree's index range.
  std::string out;
  counter = 0;
  std::function<void(const PlaneTree&)> read = [&](const PlaneTree& node) {
    ++counter;  // the node itself; its label was read by its parent pass
    std::vector<std::size_t> child_index(node.children.size());
    std::size_t probe = counter;
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      child_index[i] = probe;
      probe += node_count(node.children[i]);
    }
    for (std::size_t i = node.children.size(); i-- > 0;)
      if (labels[child_index[i]]) out.push_back(labels[child_index[i]]);
    for (const PlaneTree& c : node.children) read(c);
  };
  read(t);
  validate_path(PathKind::Colored2, out);
  return LatticePath{PathKind::Colored2, std::move(out)};
}

// ---------------------------------------------------------------------------
// inflate / deflate: U->UU, D->DD, R->UD, B->DU, wrapped in U ... D.
// ---------------------------------------------------------------------------

inline LatticePath inflate(const LatticePath& q) {
  if (q.kind != PathKind::Colored2)
    throw domain_error("expected a 2-Motzkin path");
  validate_path(PathKind::Colored2, q.steps);
  std::string out = "U";
  for (char c : q.steps) {
    switch (c) {
      case 'U': out += "UU"; break;
      case 'D': out += "DD"; break;
      case 'R': out += "UD"; break;
      case 'B': out += "DU"; break;
    }
  }
  out.push_back('D');
  return LatticePath{PathKind::Dyck, std::move(out)};
}

inline LatticePath deflate(const LatticePath& p) {
  if (p.kind != PathKind::Dyck) throw domain_error("expected a Dyck path");
  validate_path(PathKind::Dyck, p.steps);
  if (p.steps.empty()) throw domain_error("cannot deflate the empty path");
  std::string out;
  for (std::size_t i = 1; i + 1 < p.steps.size(); i += 2) {
    char a = p.steps[i], b = p.steps[i + 1];
    if (a == 'U' && b == 'U') out.push_back('U');
    else if (a == 'D' && b == 'D') out.push_back('D');
    else if (a == 'U' && b == 'D') out.push_back('R');
    else out.push_back('B');
  }
  validate_path(PathKind::Colored2, out);
  return LatticePath{PathKind::Colored2, std::move(out)};
}

// ---------------------------------------------------------------------------
// Krattenthaler-style maps between avoider classes and Dyck paths.
// ---------------------------------------------------------------------------

/// 321-avoiders -> Dyck paths, driven by the weak excedances.
inline LatticePath krat_uc(const Permutation& p) {
  if (p.size() == 0) throw domain_error("empty permutation");
  if (contains_pattern(p, Pattern::p321))
    throw domain_error("permutation contains 321");
  const auto& w = p.word;
  const int n = static_cast<int>(w.size());
  std::vector<int> pos, val;  // weak excedances, left to right
  for (int i = 1; i <= n; ++i)
    if (w[i - 1] >= i) {
      pos.push_back(i);
      val.push_back(w[i - 1]);
    }
  std::string out(val[0], 'U');
  for (std::size_t j = 1; j < pos.size(); ++j) {
    out.append(pos[j] - pos[j - 1], 'D');
    out.append(val[j] - val[j - 1], 'U');
  }
  out.append(n + 1 - pos.back(), 'D');
  validate_path(PathKind::Dyck, out);
  return LatticePath{PathKind::Dyck, std::move(out)};
}

namespace detail {
// Splits a Dyck path into alternating runs U^{a_1} D^{b_1} ... U^{a_k} D^{b_k}.
inline void run_lengths(const std::string& s, std::vector<int>& ups,
                        std::vector<int>& downs) {
  std::size_t i = 0;
  while (i < s.size()) {
    int a = 0, b = 0;
    while (i < s.size() && s[i] == 'U') ++a, ++i;
    while (i < s.size() && s[i] == 'D') ++b, ++i;
    ups.push_back(a);
    downs.push_back(b);
  }
}
}  // namespace detail

inline Permutation krat_uc_inv(const LatticePath& p) {
  if (p.kind != PathKind::Dyck) throw domain_error("expected a Dyck path");
  validate_path(PathKind::Dyck, p.steps);
  if (p.steps.empty()) throw domain_error("empty path");
  std::vector<int> ups, downs;
  detail::run_lengths(p.steps, ups, downs);
  const int n = static_cast<int>(p.steps.size() / 2);
  std::vector<int> word(n, 0);
  int position = 1, value = 0;
  std::vector<bool> used(n + 1, false);
  for (std::size_t j = 0; j < ups.size(); ++j) {
    if (j > 0) position += downs[j - 1];
    value += ups[j];
    word[position - 1] = value;
    used[value] = true;
  }
  // Remaining positions take the unused values in increasing order; this is
  // the unique 321-avoiding completion.
  int next = 1;
  for (int i = 0; i < n; ++i) {
    if (word[i]) continue;
    while (used[next]) ++next;
    word[i] = next;
    used[next] = true;
  }
  Permutation out = make_perm(std::move(word));
  assert(!contains_pattern(out, Pattern::p321));
  return out;
}

/// 132-avoiders -> Dyck paths, driven by the left-to-right minima.
inline LatticePath krat(const Permutation& p) {
  if (p.size() == 0) throw domain_error("empty permutation");
  if (contains_pattern(p, Pattern::p132))
    throw domain_error("permutation contains 132");
  const auto& w = p.word;
  const int n = static_cast<int>(w.size());
  std::vector<int> pos, val;  // left-to-right minima
  int min_seen = n + 1;
  for (int i = 1; i <= n; ++i)
    if (w[i - 1] < min_seen) {
      min_seen = w[i - 1];
      pos.push_back(i);
      val.push_back(w[i - 1]);
    }
  std::string out(n + 1 - val[0], 'U');
  for (std::size_t j = 1; j < pos.size(); ++j) {
    out.append(pos[j] - pos[j - 1], 'D');
    out.append(val[j - 1] - val[j], 'U');
  }
  out.append(n + 1 - pos.back(), 'D');
  validate_path(PathKind::Dyck, out);
  return LatticePath{PathKind::Dyck, std::move(out)};
}

inline Permutation krat_inv(const LatticePath& p) {
  if (p.kind != PathKind::Dyck) throw domain_error("expected a Dyck path");
  validate_path(PathKind::Dyck, p.steps);
  if (p.steps.empty()) throw domain_error("empty path");
  std::vector<int> ups, downs;
  detail::run_lengths(p.steps, ups, downs);
  const int n = static_cast<int>(p.steps.size() / 2);
  std::vector<int> pos, val;
  int position = 1, value = n + 1 - ups[0];
  pos.push_back(position);
  val.push_back(value);
  for (std::size_t j = 1; j < ups.size(); ++j) {
    position += downs[j - 1];
    value -= ups[j];
    pos.push_back(position);
    val.push_back(value);
  }
  std::vector<int> word(n, 0);
  std::vector<bool> used(n + 2, false);
  for (std::size_t j = 0; j < pos.size(); ++j) {
    word[pos[j] - 1] = val[j];
    used[val[j]] = true;
  }
  // Block after the j-th minimum takes the smallest unused values greater
  // than that minimum, in increasing order; anything else creates a 132.
  for (std::size_t j = 0; j < pos.size(); ++j) {
    int block_end = (j + 1 < pos.size()) ? pos[j + 1] - 1 : n;
    for (int i = pos[j] + 1; i <= block_end; ++i) {
      int v = val[j] + 1;
      while (v <= n && used[v]) ++v;
      if (v > n) throw domain_error("not a krat image");
      word[i - 1] = v;
      used[v] = true;
    }
  }
  Permutation out = make_perm(std::move(word));
  assert(!contains_pattern(out, Pattern::p132));
  return out;
}

// ---------------------------------------------------------------------------
// Composite tree -> permutation maps.
// ---------------------------------------------------------------------------

inline Permutation alpha(const PlaneTree& t) { return krat_uc_inv(pre(t)); }
inline PlaneTree alpha_inv(const Permutation& p) { return pre_inv(krat_uc(p)); }

inline Permutation beta(const PlaneTree& t) { return krat_inv(pre(t)); }
inline PlaneTree beta_inv(const Permutation& p) { return pre_inv(krat(p)); }

inline Permutation gamma_map(const PlaneTree& t) { return krat_uc_inv(dgr(t)); }
inline PlaneTree gamma_inv(const Permutation& p) { return dgr_inv(krat_uc(p)); }

inline Permutation delta_map(const PlaneTree& t) { return krat_inv(dgr(t)); }
inline PlaneTree delta_inv(const Permutation& p) { return dgr_inv(krat(p)); }

}  // namespace oyleaf
