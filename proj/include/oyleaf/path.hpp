#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

#include "oyleaf/errors.hpp"

namespace oyleaf {

/// Path flavors. Height changes: U=+1, D=-1, everything else 0.
/// Contracted is the UDU-free intermediate of phi: letters U/D/R with no
/// UDU factor, no RD factor, and not ending in R.
enum class PathKind { Dyck, Motzkin, Contracted, Colored2, Colored3 };

inline std::string_view alphabet_of(PathKind kind) {
  switch (kind) {
    case PathKind::Dyck: return "UD";
    case PathKind::Motzkin: return "UDH";
    case PathKind::Contracted: return "UDR";
    case PathKind::Colored2: return "UDRB";
    case PathKind::Colored3: return "UDRBG";
  }
  return "";
}

inline std::string_view kind_name(PathKind kind) {
  switch (kind) {
    case PathKind::Dyck: return "dyck";
    case PathKind::Motzkin: return "motzkin";
    case PathKind::Contracted: return "contracted";
    case PathKind::Colored2: return "2motzkin";
    case PathKind::Colored3: return "3motzkin";
  }
  return "";
}

inline int height_change(char c) { return c == 'U' ? 1 : c == 'D' ? -1 : 0; }

struct LatticePath {
  PathKind kind;
  std::string steps;

  bool operator==(const LatticePath& o) const {
    return kind == o.kind && steps == o.steps;
  }
};

inline void validate_path(PathKind kind, const std::string& steps) {
  std::string_view alpha = alphabet_of(kind);
  long height = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (alpha.find(steps[i]) == std::string_view::npos)
      throw parse_error(std::string("letter '") + steps[i] +
                            "' not in alphabet for kind " +
                            std::string(kind_name(kind)),
                        i);
    height += height_change(steps[i]);
    if (height < 0) throw parse_error("prefix height negative", i + 1);
  }
  if (height != 0)
    throw parse_error("final height " + std::to_string(height) + ", expected 0",
                      steps.size());
  if (kind == PathKind::Contracted) {
    for (std::size_t i = 0; i + 2 < steps.size(); ++i)
      if (steps.compare(i, 3, "UDU") == 0)
        throw parse_error("contracted path contains factor UDU", i);
    for (std::size_t i = 0; i + 1 < steps.size(); ++i)
      if (steps.compare(i, 2, "RD") == 0)
        throw parse_error("contracted path contains factor RD", i);
    if (!steps.empty() && steps.back() == 'R')
      throw parse_error("contracted path ends in R", steps.size() - 1);
  }
}

inline LatticePath parse_path(const std::string& text, PathKind kind) {
  validate_path(kind, text);
  return LatticePath{kind, text};
}

inline std::string render_path(const LatticePath& p) { return p.steps; }

/// Calls fn with every path of the given kind and length exactly once, in
/// lexicographic order of the step string (plain ASCII order, so B < D < G
/// < R < U).
inline void for_each_path(PathKind kind, std::size_t len,
                          const std::function<void(const std::string&)>& fn) {
  std::string alpha(alphabet_of(kind));
  std::sort(alpha.begin(), alpha.end());
  std::string buf(len, ' ');
  std::function<void(std::size_t, long)> rec = [&](std::size_t pos,
                                                   long height) {
    if (pos == len) {
      fn(buf);
      return;
    }
    for (char c : alpha) {
      long h = height + height_change(c);
      if (h < 0 || h > static_cast<long>(len - pos - 1)) continue;
      buf[pos] = c;
      rec(pos + 1, h);
    }
  };
  rec(0, 0);
}

}  // namespace oyleaf
