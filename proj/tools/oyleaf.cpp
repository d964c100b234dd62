// Command-line front end: enumeration, statistics, bijections, exact
// counting, and the verification suites, all over a line-per-object
// stdin/stdout protocol.

#include <chrono>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oyleaf/bijections.hpp"
#include "oyleaf/counting.hpp"
#include "oyleaf/identities.hpp"
#include "oyleaf/matches.hpp"
#include "oyleaf/stats.hpp"
#include "oyleaf/verify.hpp"

using namespace oyleaf;

namespace {

constexpr std::size_t kPathObjectCap = 14;
constexpr std::size_t kPermObjectCap = 9;
constexpr std::size_t kTableCap = 12;

int cmd_enumerate(const std::string& object, std::size_t n,
                  std::optional<long> old_filter,
                  std::optional<long> young_filter, const std::string& format) {
  auto emit = [&](const std::string& value) {
    if (format == "json")
      std::cout << "{\"value\":\"" << value << "\"}\n";
    else
      std::cout << value << "\n";
  };
  auto tree_filtered = [&](const std::string& enc) {
    if (!old_filter && !young_filter) return true;
    TreeStats st = tree_stats(parse_tree(enc));
    if (old_filter && static_cast<long>(st.old_leaves) != *old_filter)
      return false;
    if (young_filter && static_cast<long>(st.young_leaves) != *young_filter)
      return false;
    return true;
  };
  if ((old_filter || young_filter) && object != "tree") {
    std::cerr << "error: --old/--young filters apply to trees only\n";
    return 2;
  }
  if (object == "tree") {
    if (n > kPathObjectCap) {
      std::cerr << "error: n exceeds cap " << kPathObjectCap << "\n";
      return 2;
    }
    for_each_tree(n, [&](const std::string& enc) {
      if (tree_filtered(enc)) emit(enc);
    });
    return 0;
  }
  std::map<std::string, std::pair<PathKind, std::size_t>> path_kinds = {
      {"dyck", {PathKind::Dyck, 2 * n}},
      {"motzkin", {PathKind::Motzkin, n}},
      {"2motzkin", {PathKind::Colored2, n}},
      {"3motzkin", {PathKind::Colored3, n}},
  };
  if (auto it = path_kinds.find(object); it != path_kinds.end()) {
    if (n > kPathObjectCap) {
      std::cerr << "error: n exceeds cap " << kPathObjectCap << "\n";
      return 2;
    }
    for_each_path(it->second.first, it->second.second, emit);
    return 0;
  }
  if (object == "av321" || object == "av132") {
    if (n > kPermObjectCap) {
      std::cerr << "error: n exceeds cap " << kPermObjectCap << "\n";
      return 2;
    }
    Pattern pat = object == "av321" ? Pattern::p321 : Pattern::p132;
    for_each_avoider(pat, n,
                     [&](const Permutation& p) { emit(render_perm(p)); });
    return 0;
  }
  std::cerr << "error: unknown object '" << object << "'\n";
  return 2;
}

struct MapSpec {
  std::string domain, codomain;  // "tree", "perm", or a path kind name
  std::function<std::string(const std::string&)> forward, inverse;
};

std::map<std::string, MapSpec> map_table() {
  auto T = [](const std::string& s) { return parse_tree(s); };
  auto P = [](PathKind k) {
    return [k](const std::string& s) { return parse_path(s, k); };
  };
  auto pD = P(PathKind::Dyck), pC = P(PathKind::Contracted),
       p2 = P(PathKind::Colored2);
  std::map<std::string, MapSpec> m;
  m["pre"] = {"tree", "dyck", [=](const std::string& s) { return pre(T(s)).steps; },
              [=](const std::string& s) { return render_tree(pre_inv(pD(s))); }};
  m["dgr"] = {"tree", "dyck", [=](const std::string& s) { return dgr(T(s)).steps; },
              [=](const std::string& s) { return render_tree(dgr_inv(pD(s))); }};
  m["contract"] = {"dyck", "contracted",
                   [=](const std::string& s) { return contract_udu(pD(s)).steps; },
                   [=](const std::string& s) { return expand_udu(pC(s)).steps; }};
  m["callan"] = {"contracted", "2motzkin",
                 [=](const std::string& s) { return callan_reduce(pC(s)).steps; },
                 [=](const std::string& s) { return callan_expand(p2(s)).steps; }};
  m["phi"] = {"tree", "2motzkin",
              [=](const std::string& s) { return phi(T(s)).steps; },
              [=](const std::string& s) { return render_tree(phi_inv(p2(s))); }};
  m["psi"] = {"tree", "2motzkin",
              [=](const std::string& s) { return psi(T(s)).steps; },
              [=](const std::string& s) { return render_tree(psi_inv(p2(s))); }};
  m["inflate"] = {"2motzkin", "dyck",
                  [=](const std::string& s) { return inflate(p2(s)).steps; },
                  [=](const std::string& s) { return deflate(pD(s)).steps; }};
  m["krat-uc"] = {"perm", "dyck",
                  [=](const std::string& s) { return krat_uc(parse_perm(s)).steps; },
                  [=](const std::string& s) { return render_perm(krat_uc_inv(pD(s))); }};
  m["krat"] = {"perm", "dyck",
               [=](const std::string& s) { return krat(parse_perm(s)).steps; },
               [=](const std::string& s) { return render_perm(krat_inv(pD(s))); }};
  m["alpha"] = {"tree", "perm",
                [=](const std::string& s) { return render_perm(alpha(T(s))); },
                [=](const std::string& s) { return render_tree(alpha_inv(parse_perm(s))); }};
  m["beta"] = {"tree", "perm",
               [=](const std::string& s) { return render_perm(beta(T(s))); },
               [=](const std::string& s) { return render_tree(beta_inv(parse_perm(s))); }};
  m["gamma"] = {"tree", "perm",
                [=](const std::string& s) { return render_perm(gamma_map(T(s))); },
                [=](const std::string& s) { return render_tree(gamma_inv(parse_perm(s))); }};
  m["delta"] = {"tree", "perm",
                [=](const std::string& s) { return render_perm(delta_map(T(s))); },
                [=](const std::string& s) { return render_tree(delta_inv(parse_perm(s))); }};
  return m;
}

int cmd_map(const std::string& bijection, bool inverse) {
  auto table = map_table();
  auto it = table.find(bijection);
  if (it == table.end()) {
    std::cerr << "error: unknown bijection '" << bijection << "'\n";
    return 2;
  }
  const auto& fn = inverse ? it->second.inverse : it->second.forward;
  std::string line;
  std::size_t lineno = 0;
  bool had_error = false;
  while (std::getline(std::cin, line)) {
    ++lineno;
    try {
      std::cout << fn(line) << "\n";
    } catch (const std::exception& e) {
      std::cerr << "line " << lineno << ": " << e.what() << "\n";
      had_error = true;
    }
  }
  return had_error ? 1 : 0;
}

int cmd_stats(const std::string& object) {
  std::string line;
  std::size_t lineno = 0;
  bool had_error = false;
  while (std::getline(std::cin, line)) {
    ++lineno;
    try {
      if (object == "tree") {
        TreeStats st = tree_stats(parse_tree(line));
        std::cout << "edges=" << st.edges << " leaves=" << st.leaves
                  << " old=" << st.old_leaves << " young=" << st.young_leaves;
        if (st.critical_leaf_preorder_index)
          std::cout << " critical=" << *st.critical_leaf_preorder_index;
        std::cout << "\n";
      } else if (object == "dyck") {
        LatticePath p = parse_path(line, PathKind::Dyck);
        std::cout << "peaks_even=" << peaks_at_even_height(p)
                  << " drops=" << drops(p)
                  << " triple_falls=" << triple_falls(p)
                  << " dud=" << factor_count(p, "DUD")
                  << " udu=" << factor_count(p, "UDU") << "\n";
      } else if (object == "perm") {
        PermStats st = perm_stats(parse_perm(line));
        std::cout << "weak_exc=" << st.weak_excedances
                  << " consec_weak_exc_pairs=" << st.consec_weak_exc_pairs
                  << " weak_exc_not_followed=" << st.weak_exc_not_followed
                  << " consec_def_pairs=" << st.consec_deficiency_pairs
                  << " last_is_def=" << (st.last_is_deficiency ? 1 : 0)
                  << " double_desc_prep=" << st.double_descents_prepended
                  << " double_asc_app=" << st.double_ascents_appended
                  << " asc_runs_app=" << st.ascending_runs_appended
                  << " lr_minima=" << st.left_to_right_minima << "\n";
      } else {
        std::cerr << "error: unknown object '" << object << "'\n";
        return 2;
      }
    } catch (const std::exception& e) {
      std::cerr << "line " << lineno << ": " << e.what() << "\n";
      had_error = true;
    }
  }
  return had_error ? 1 : 0;
}

int cmd_count(const std::string& formula, std::size_t n, std::optional<long> i,
              std::optional<long> j, std::optional<long> k) {
  try {
    BigInt out;
    if (formula == "catalan") {
      out = catalan(n);
    } else if (formula == "motzkin") {
      out = motzkin(n);
    } else if (formula == "narayana") {
      if (!k) throw domain_error("narayana needs --k");
      out = narayana(n, static_cast<std::size_t>(*k));
    } else if (formula == "old-young") {
      if (!i || !j) throw domain_error("old-young needs --i and --j");
      out = count_old_young(n, *i, *j);
    } else if (formula == "old") {
      if (!k) throw domain_error("old needs --k");
      out = count_old(n, static_cast<std::size_t>(*k));
    } else if (formula == "young") {
      if (!k) throw domain_error("young needs --k");
      out = count_young(n, static_cast<std::size_t>(*k));
    } else {
      std::cerr << "error: unknown formula '" << formula << "'\n";
      return 2;
    }
    std::cout << out.get_str() << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_table(std::size_t n, const std::string& format) {
  if (n < 1 || n > kTableCap) {
    std::cerr << "error: n must be in 1.." << kTableCap << "\n";
    return 2;
  }
  std::map<std::pair<std::size_t, std::size_t>, BigInt> hist;
  for_each_tree(n, [&](const std::string& enc) {
    TreeStats st = tree_stats(parse_tree(enc));
    ++hist[{st.old_leaves, st.young_leaves}];
  });
  bool agree = true;
  if (format == "json") std::cout << "{\"n\":" << n << ",\"cells\":[";
  bool first = true;
  for (const auto& [profile, cnt] : hist) {
    BigInt formula = count_old_young(n, static_cast<long>(profile.first),
                                     static_cast<long>(profile.second));
    if (formula != cnt) agree = false;
    if (format == "json") {
      if (!first) std::cout << ",";
      std::cout << "{\"old\":" << profile.first << ",\"young\":"
                << profile.second << ",\"enumerated\":" << cnt.get_str()
                << ",\"formula\":" << formula.get_str() << "}";
    } else {
      std::cout << profile.first << "," << profile.second << ","
                << cnt.get_str() << "," << formula.get_str() << "\n";
    }
    first = false;
  }
  if (format == "json") std::cout << "]}\n";
  if (!agree) {
    std::cerr << "error: enumeration and closed form disagree\n";
    return 1;
  }
  return 0;
}

int cmd_verify(const std::string& suite, std::size_t n_max,
               const std::string& variant) {
  RefVariant var =
      variant == "printed" ? RefVariant::printed : RefVariant::corrected;
  std::vector<RunReport> reports;
  auto timed = [&](RunReport (*fn)(std::size_t), std::size_t nm) {
    auto t0 = std::chrono::steady_clock::now();
    RunReport r = fn(nm);
    r.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    reports.push_back(std::move(r));
  };
  bool all = suite == "all";
  bool known = all;
  if (all || suite == "roundtrip") timed(suites::roundtrip, n_max), known = true;
  if (all || suite == "stats") timed(suites::stats, n_max), known = true;
  if (all || suite == "equidist")
    timed(suites::equidist, std::min<std::size_t>(n_max, 10)), known = true;
  if (all || suite == "gf")
    timed(suites::gf, std::min<std::size_t>(n_max, 12)), known = true;
  if (all || suite == "cok1") timed(suites::cok1, n_max), known = true;
  if (all || suite == "cok2") timed(suites::cok2, n_max), known = true;
  if (all || suite == "cok1ref") {
    auto t0 = std::chrono::steady_clock::now();
    RunReport r = suites::cok1ref(n_max, var);
    r.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    reports.push_back(std::move(r));
    known = true;
  }
  if (all || suite == "cok2ref") timed(suites::cok2ref, n_max), known = true;
  if (all || suite == "matches")
    timed(suites::matches, std::min<std::size_t>(n_max, 4)), known = true;
  if (!known) {
    std::cerr << "error: unknown suite '" << suite << "'\n";
    return 2;
  }
  std::size_t failures = 0;
  for (const RunReport& r : reports) {
    r.print(std::cout);
    failures += r.failures();
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"plane trees, 2-Motzkin paths, and refined Narayana counting"};
  app.require_subcommand(1);

  auto* enumerate = app.add_subcommand("enumerate", "list objects, one per line");
  std::string enum_object = "tree";
  std::size_t enum_n = 0;
  std::optional<long> enum_old, enum_young;
  std::string enum_format = "compact";
  enumerate->add_option("--object", enum_object,
                        "tree|dyck|motzkin|2motzkin|3motzkin|av321|av132");
  enumerate->add_option("--n", enum_n, "size parameter")->required();
  enumerate->add_option("--old", enum_old, "filter trees by old-leaf count");
  enumerate->add_option("--young", enum_young, "filter trees by young-leaf count");
  enumerate->add_option("--format", enum_format, "compact|json");

  auto* mapcmd = app.add_subcommand("map", "apply a bijection to stdin lines");
  std::string map_name;
  bool map_inverse = false;
  mapcmd->add_option("--bijection", map_name,
                     "pre|dgr|contract|callan|phi|psi|inflate|krat-uc|krat|"
                     "alpha|beta|gamma|delta")
      ->required();
  mapcmd->add_flag("--inverse", map_inverse, "apply the inverse direction");

  auto* statscmd = app.add_subcommand("stats", "statistics of stdin objects");
  std::string stats_object = "tree";
  statscmd->add_option("--object", stats_object, "tree|dyck|perm");

  auto* countcmd = app.add_subcommand("count", "closed-form counts");
  std::string count_formula;
  std::size_t count_n = 0;
  std::optional<long> count_i, count_j, count_k;
  countcmd->add_option("--formula", count_formula,
                       "catalan|motzkin|narayana|old-young|old|young")
      ->required();
  countcmd->add_option("--n", count_n)->required();
  countcmd->add_option("--i", count_i);
  countcmd->add_option("--j", count_j);
  countcmd->add_option("--k", count_k);

  auto* tablecmd = app.add_subcommand("table", "joint (old,young) table");
  std::size_t table_n = 0;
  std::string table_format = "csv";
  tablecmd->add_option("--n", table_n)->required();
  tablecmd->add_option("--format", table_format, "csv|json");

  auto* verifycmd = app.add_subcommand("verify", "run a verification suite");
  std::string verify_suite;
  std::size_t verify_n_max = 8;
  std::string verify_variant = "corrected";
  verifycmd
      ->add_option("--suite", verify_suite,
                   "roundtrip|stats|equidist|gf|cok1|cok2|cok1ref|cok2ref|"
                   "matches|all")
      ->required();
  verifycmd->add_option("--n-max", verify_n_max);
  verifycmd->add_option("--variant", verify_variant, "corrected|printed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (enumerate->parsed())
      return cmd_enumerate(enum_object, enum_n, enum_old, enum_young,
                           enum_format);
    if (mapcmd->parsed()) return cmd_map(map_name, map_inverse);
    if (statscmd->parsed()) return cmd_stats(stats_object);
    if (countcmd->parsed())
      return cmd_count(count_formula, count_n, count_i, count_j, count_k);
    if (tablecmd->parsed()) return cmd_table(table_n, table_format);
    if (verifycmd->parsed())
      return cmd_verify(verify_suite, verify_n_max, verify_variant);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
