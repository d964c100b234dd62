#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <utility>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "oyleaf/bijections.hpp"
#include "oyleaf/counting.hpp"
#include "oyleaf/identities.hpp"
#include "oyleaf/matches.hpp"
#include "oyleaf/stats.hpp"

namespace oyleaf {

struct RunReport {
  struct Line {
    std::size_t n;
    std::string status;  // PASS, FAIL, INFO
    std::string detail;
  };
  std::string suite;
  std::vector<Line> lines;
  double wall_seconds = 0;

  std::size_t failures() const {
    std::size_t f = 0;
    for (const Line& l : lines)
      if (l.status == "FAIL") ++f;
    return f;
  }
  void pass(std::size_t n, std::string detail = "") {
    lines.push_back({n, "PASS", std::move(detail)});
  }
  void fail(std::size_t n, std::string detail) {
    lines.push_back({n, "FAIL", std::move(detail)});
  }
  void info(std::size_t n, std::string detail) {
    lines.push_back({n, "INFO", std::move(detail)});
  }
  void check(std::size_t n, bool ok, const std::string& detail) {
    if (ok)
      pass(n, detail);
    else
      fail(n, detail);
  }

  void print(std::ostream& os) const {
    for (const Line& l : lines)
      os << suite << " n=" << l.n << " " << l.status
         << (l.detail.empty() ? "" : " " + l.detail) << "\n";
    os << suite << " summary: " << lines.size() - failures() << "/"
       << lines.size() << " ok, " << failures() << " failed ("
       << wall_seconds << "s)\n";
  }
};

namespace suites {

/// Round trips and bijectivity of phi and psi, plus agreement of psi's two
/// descriptions (the label description up to min(n_max, 10)).
inline RunReport roundtrip(std::size_t n_max) {
  RunReport rep{"roundtrip"};
  for (std::size_t n = 1; n <= n_max; ++n) {
    bool ok = true;
    std::string why;
    std::set<std::string> phi_images, psi_images;
    std::size_t count = 0;
    for_each_tree(n, [&](const std::string& enc) {
      ++count;
      PlaneTree t = parse_tree(enc);
      LatticePath f = phi(t), g = psi(t);
      if (f.steps.size() != n - 1 || g.steps.size() != n - 1) {
        ok = false;
        why = "image length != n-1 for " + enc;
        return;
      }
      if (!(phi_inv(f) == t)) {
        ok = false;
        why = "phi round trip failed for " + enc;
      }
      if (!(psi_inv(g) == t)) {
        ok = false;
        why = "psi round trip failed for " + enc;
      }
      if (n <= 10 && !(psi_by_labels(t) == g)) {
        ok = false;
        why = "psi label description disagrees for " + enc;
      }
      phi_images.insert(f.steps);
      psi_images.insert(g.steps);
    });
    BigInt cn = catalan(n);
    if (ok && (BigInt(phi_images.size()) != cn ||
               BigInt(psi_images.size()) != cn)) {
      ok = false;
      why = "images not pairwise distinct";
    }
    rep.check(n, ok, ok ? std::to_string(count) + " trees" : why);
  }
  return rep;
}

/// Proposition-5.1-style statistic transfer for both maps, and the joint
/// (old, young) histogram against the closed form.
inline RunReport stats(std::size_t n_max) {
  RunReport rep{"stats"};
  for (std::size_t n = 1; n <= n_max; ++n) {
    bool ok = true;
    std::string why;
    std::map<std::pair<std::size_t, std::size_t>, BigInt> histogram;
    for_each_tree(n, [&](const std::string& enc) {
      PlaneTree t = parse_tree(enc);
      TreeStats st = tree_stats(t);
      ++histogram[{st.old_leaves, st.young_leaves}];
      for (const LatticePath& img : {phi(t), psi(t)}) {
        std::size_t us = std::count(img.steps.begin(), img.steps.end(), 'U');
        std::size_t rs = std::count(img.steps.begin(), img.steps.end(), 'R');
        if (st.old_leaves != 1 + us || st.young_leaves != rs) {
          ok = false;
          why = "old/young vs U/R mismatch for " + enc;
        }
      }
    });
    for (auto& [profile, cnt] : histogram)
      if (cnt != count_old_young(n, static_cast<long>(profile.first),
                                 static_cast<long>(profile.second))) {
        ok = false;
        why = "histogram mismatch at (" + std::to_string(profile.first) + "," +
              std::to_string(profile.second) + ")";
      }
    // and no nonzero closed-form cell missing from the histogram
    BigInt total = 0;
    for (auto& [profile, cnt] : histogram) total += cnt;
    if (total != catalan(n)) {
      ok = false;
      why = "histogram does not cover T_n";
    }
    rep.check(n, ok, why);
  }
  return rep;
}

/// Young leaves over T_n vs peaks at even height over D_n vs DUD factors
/// over D_n, as distributions.
inline RunReport equidist(std::size_t n_max) {
  RunReport rep{"equidist"};
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::map<std::size_t, std::size_t> young, peaks, duds;
    for_each_tree(n, [&](const std::string& enc) {
      PlaneTree t = parse_tree(enc);
      ++young[tree_stats(t).young_leaves];
      ++peaks[peaks_at_even_height(inflate(phi(t)))];
    });
    for_each_path(PathKind::Dyck, 2 * n, [&](const std::string& steps) {
      LatticePath p{PathKind::Dyck, steps};
      ++duds[factor_count(p, "DUD")];
    });
    bool ok = young == peaks && young == duds;
    rep.check(n, ok, ok ? "" : "distribution mismatch");
  }
  return rep;
}

/// Generating function: series coefficients vs enumeration, and closed
/// form vs degree-30 truncation at fixed sample points.
inline RunReport gf(std::size_t n_max) {
  RunReport rep{"gf"};
  std::vector<MultiPoly> series = gf_series(std::max<std::size_t>(n_max, 30));
  for (std::size_t n = 1; n <= n_max; ++n) {
    MultiPoly fromTrees;
    for_each_tree(n, [&](const std::string& enc) {
      TreeStats st = tree_stats(parse_tree(enc));
      fromTrees += MultiPoly::var(Var::t, static_cast<unsigned>(st.old_leaves)) *
                   MultiPoly::var(Var::s, static_cast<unsigned>(st.young_leaves));
    });
    rep.check(n, fromTrees == series[n], "[z^n] vs enumeration");
  }
  for (auto [tv, sv] : {std::pair{1.0, 1.0}, {2.0, 1.0}, {1.0, 2.0}, {2.0, 3.0}}) {
    for (double zv : {0.02, 0.05, 0.1}) {
      double truncated = 0, zp = 1;
      for (std::size_t k = 0; k <= 30; ++k, zp *= zv) {
        double coeff = 0;
        for (const auto& [m, c] : series[k].terms())
          coeff += c.get_d() *
                   std::pow(tv, m[static_cast<std::size_t>(Var::t)]) *
                   std::pow(sv, m[static_cast<std::size_t>(Var::s)]);
        truncated += coeff * zp;
      }
      double closed = gf_closed_eval(tv, sv, zv);
      double err = std::abs(closed - truncated);
      char buf[128];
      std::snprintf(buf, sizeof buf, "t=%g s=%g z=%g |closed-series30|=%.3g",
                    tv, sv, zv, err);
      rep.check(0, err <= 1e-9, buf);
    }
  }
  return rep;
}

inline RunReport cok1(std::size_t n_max) {
  RunReport rep{"cok1"};
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto [lhs, rhs] = coker1_sides(n);
    rep.check(n, lhs == rhs, lhs.get_str());
  }
  return rep;
}

inline RunReport cok2(std::size_t n_max) {
  RunReport rep{"cok2"};
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto [lhs, rhs] = coker2_sides(n);
    rep.check(n, lhs == rhs, "");
  }
  return rep;
}

inline RunReport cok1ref(std::size_t n_max,
                         RefVariant variant = RefVariant::corrected) {
  RunReport rep{variant == RefVariant::corrected ? "cok1ref" : "cok1ref-printed"};
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto [lhs, rhs] = cok1ref_sides(n, variant);
    if (variant == RefVariant::printed) {
      // reported, never failing: the printed middle binomial deviates
      if (lhs == rhs)
        rep.info(n, "printed form agrees");
      else
        rep.info(n, "printed form mismatch: lhs-rhs = " +
                        (lhs - rhs).to_string());
      continue;
    }
    bool ok = lhs == rhs;
    std::string why = ok ? "" : "closed forms differ";
    if (ok && n <= kDefaultEnumCap) {
      RatPoly oracle = to_rational(weighted_tree_sum(n, WeightScheme::A));
      if (oracle != lhs) {
        ok = false;
        why = "weighted enumeration disagrees";
      }
    }
    rep.check(n, ok, why);
  }
  return rep;
}

inline RunReport cok2ref(std::size_t n_max) {
  RunReport rep{"cok2ref"};
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto [lhs, rhs] = cok2ref_sides(n);
    bool ok = lhs == rhs;
    std::string why = ok ? "" : "closed forms differ";
    if (ok && n <= kDefaultEnumCap) {
      MultiPoly oracle = weighted_tree_sum(n, WeightScheme::B);
      if (oracle != lhs) {
        ok = false;
        why = "weighted enumeration disagrees";
      }
    }
    rep.check(n, ok, why);
  }
  return rep;
}

/// The merging algorithm: bijectivity onto labeled plane trees, statistic
/// transfer, and the labeled-count formula.
inline RunReport matches(std::size_t n_max) {
  RunReport rep{"matches"};
  for (std::size_t n = 1; n <= std::min<std::size_t>(n_max, 5); ++n) {
    bool ok = true;
    std::string why;
    std::set<std::string> images;
    std::size_t total = 0;
    std::map<std::pair<std::size_t, std::size_t>, BigInt> labeled_hist;
    enumerate_match_sets(n, [&](const MatchSet& f) {
      ++total;
      std::size_t unmarked_matches = 0, marked_root = 0;
      for (const Match& m : f.matches) {
        bool rm = is_marked(f, m.root_label), lm = is_marked(f, m.leaf_label);
        if (!rm && !lm) ++unmarked_matches;
        if (rm && !lm) ++marked_root;
      }
      LabeledTree t = merge(f);
      if (edge_count(shape_of(t)) != n) {
        ok = false;
        why = "merged tree has wrong size";
      }
      TreeStats st = tree_stats(shape_of(t));
      if (st.old_leaves != unmarked_matches || st.young_leaves != marked_root) {
        ok = false;
        why = "statistic transfer failed";
      }
      ++labeled_hist[{st.old_leaves, st.young_leaves}];
      images.insert(render_labeled(t));
    });
    // (2n)!/n! inputs, all distinct images
    BigInt expected = 1;
    for (std::size_t v = n + 1; v <= 2 * n; ++v) expected *= v;
    if (BigInt(total) != expected || BigInt(images.size()) != expected) {
      ok = false;
      why = "merge not injective or input count off";
    }
    BigInt fact = 1;
    for (std::size_t v = 2; v <= n + 1; ++v) fact *= v;
    for (auto& [profile, cnt] : labeled_hist)
      if (cnt != fact * count_old_young(n, static_cast<long>(profile.first),
                                        static_cast<long>(profile.second))) {
        ok = false;
        why = "labeled count formula failed";
      }
    rep.check(n, ok, ok ? std::to_string(total) + " match sets" : why);
  }
  return rep;
}

}  // namespace suites

}  // namespace oyleaf
