#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "oyleaf/errors.hpp"

namespace oyleaf {

/// Rooted tree with ordered children. Size is measured in edges; the
/// single-node tree has 0 edges. Canonical encoding: a node is "(" followed
/// by its children's encodings followed by ")".
struct PlaneTree {
  std::vector<PlaneTree> children;

  bool operator==(const PlaneTree& o) const { return children == o.children; }
  bool operator!=(const PlaneTree& o) const { return !(*this == o); }
};

inline std::size_t edge_count(const PlaneTree& t) {
  std::size_t n = 0;
  for (const PlaneTree& c : t.children) n += 1 + edge_count(c);
  return n;
}

inline std::size_t node_count(const PlaneTree& t) { return edge_count(t) + 1; }

inline void render_tree_into(const PlaneTree& t, std::string& out) {
  out.push_back('(');
  for (const PlaneTree& c : t.children) render_tree_into(c, out);
  out.push_back(')');
}

inline std::string render_tree(const PlaneTree& t) {
  std::string out;
  out.reserve(2 * node_count(t));
  render_tree_into(t, out);
  return out;
}

inline PlaneTree parse_tree(const std::string& text) {
  std::size_t pos = 0;
  std::function<PlaneTree()> node = [&]() -> PlaneTree {
    if (pos >= text.size() || text[pos] != '(')
      throw parse_error("expected '('", pos);
    ++pos;
    PlaneTree t;
    while (pos < text.size() && text[pos] == '(') t.children.push_back(node());
    if (pos >= text.size() || text[pos] != ')')
      throw parse_error("expected ')'", pos);
    ++pos;
    return t;
  };
  PlaneTree t = node();
  if (pos != text.size()) throw parse_error("trailing input", pos);
  return t;
}

/// Tree with children reversed at every node.
inline PlaneTree mirror(const PlaneTree& t) {
  PlaneTree m;
  m.children.reserve(t.children.size());
  for (auto it = t.children.rbegin(); it != t.children.rend(); ++it)
    m.children.push_back(mirror(*it));
  return m;
}

/// Calls fn with the canonical encoding of every tree with n edges, in
/// lexicographic order of the encoding ('(' < ')').
inline void for_each_tree(std::size_t n,
                          const std::function<void(const std::string&)>& fn) {
  // Inner word: balanced parenthesis word of n pairs; the outer root pair
  // is constant, so lex order on the whole encoding equals lex order here.
  std::string buf(2 * n + 2, ' ');
  buf.front() = '(';
  buf.back() = ')';
  std::function<void(std::size_t, std::size_t, std::size_t)> rec =
      [&](std::size_t pos, std::size_t open, std::size_t height) {
        if (pos == 2 * n + 1) {
          fn(buf);
          return;
        }
        if (open < n) {
          buf[pos] = '(';
          rec(pos + 1, open + 1, height + 1);
        }
        if (height > 0) {
          buf[pos] = ')';
          rec(pos + 1, open, height - 1);
        }
      };
  rec(1, 0, 0);
}

inline std::vector<PlaneTree> all_trees(std::size_t n) {
  std::vector<PlaneTree> out;
  for_each_tree(n, [&](const std::string& s) { out.push_back(parse_tree(s)); });
  return out;
}

}  // namespace oyleaf
