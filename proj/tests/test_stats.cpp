#include "doctest.h"
#include "oyleaf/bijections.hpp"
#include "oyleaf/stats.hpp"
#include "oyleaf/tree.hpp"

using namespace oyleaf;

namespace {
const char* kFigTree = "((()()())(((())))()((()())))";
}

TEST_CASE("tree statistics on the running example") {
  TreeStats st = tree_stats(parse_tree(kFigTree));
  CHECK(st.edges == 13);
  CHECK(st.leaves == 7);
  CHECK(st.old_leaves == 3);
  CHECK(st.young_leaves == 4);
  CHECK(st.critical_leaf_preorder_index == 12);
}

TEST_CASE("tree statistics on tiny trees") {
  // single edge: the unique leaf is old (leftmost child) and critical
  TreeStats one = tree_stats(parse_tree("(())"));
  CHECK(one.leaves == 1);
  CHECK(one.old_leaves == 1);
  CHECK(one.young_leaves == 0);
  CHECK(one.critical_leaf_preorder_index == 1);
  // two children of the root: first old, second young
  TreeStats cherry = tree_stats(parse_tree("(()())"));
  CHECK(cherry.old_leaves == 1);
  CHECK(cherry.young_leaves == 1);
  // path of length 2: the deep leaf is old
  TreeStats path2 = tree_stats(parse_tree("((()))"));
  CHECK(path2.old_leaves == 1);
  CHECK(path2.young_leaves == 0);
  CHECK(path2.critical_leaf_preorder_index == 2);
}

TEST_CASE("old + young = leaves, exactly one critical leaf") {
  for (std::size_t n = 1; n <= 8; ++n)
    for_each_tree(n, [&](const std::string& s) {
      TreeStats st = tree_stats(parse_tree(s));
      CHECK(st.old_leaves + st.young_leaves == st.leaves);
      CHECK(st.old_leaves >= 1);  // the leftmost leaf of the deepest
                                  // leftmost chain is always old
      CHECK(st.critical_leaf_preorder_index >= 1);
      CHECK(st.critical_leaf_preorder_index <= 2 * n);
    });
}

TEST_CASE("path statistics on the running example") {
  LatticePath d = parse_path("UUUUDUUUDDDDUDUDUDDDUDUUDD", PathKind::Dyck);
  CHECK(drops(d) == 3);
  CHECK(triple_falls(d) == 4);
  CHECK(factor_count(d, "DUD") == 4);
  CHECK(factor_count(d, "UDU") == 4);
  CHECK(peaks_at_even_height(d) == 3);
}

TEST_CASE("drops and triple falls act on the path with one D appended") {
  // UD -> UDD: one maximal D-run of length 2 (a drop), no DDD
  LatticePath ud = parse_path("UD", PathKind::Dyck);
  CHECK(drops(ud) == 1);
  CHECK(triple_falls(ud) == 0);
  // UUDD -> UUDDD: one drop, one DDD
  LatticePath uudd = parse_path("UUDD", PathKind::Dyck);
  CHECK(drops(uudd) == 1);
  CHECK(triple_falls(uudd) == 1);
  // UDUD -> UDUDD: the lone first D is not a drop; the final DD is
  LatticePath udud = parse_path("UDUD", PathKind::Dyck);
  CHECK(drops(udud) == 1);
  CHECK(triple_falls(udud) == 0);
}

TEST_CASE("factor_count counts overlapping occurrences") {
  LatticePath p = parse_path("UUUUDDDD", PathKind::Dyck);
  CHECK(factor_count(p, "UU") == 3);
  CHECK(factor_count(p, "UD") == 1);
  CHECK(factor_count(p, "X") == 0);
}

TEST_CASE("permutation statistics on the displayed permutations") {
  PermStats a = perm_stats(parse_perm("3,4,1,2,5,9,6,7,8,11,12,13,10"));
  CHECK(a.consec_weak_exc_pairs == 4);
  CHECK(a.weak_exc_not_followed == 3);
  CHECK(a.weak_excedances == 7);

  PermStats b = perm_stats(parse_perm("11,10,12,13,9,5,6,7,8,3,2,1,4"));
  CHECK(b.double_descents_prepended == 4);
  CHECK(b.ascending_runs_appended == 3);
  CHECK(b.left_to_right_minima == 7);
}

TEST_CASE("permutation statistics on tiny permutations") {
  PermStats s21 = perm_stats(parse_perm("2,1"));
  CHECK(s21.weak_excedances == 1);
  CHECK(s21.consec_deficiency_pairs == 0);
  CHECK(s21.last_is_deficiency);
  CHECK(s21.double_ascents_appended == 0);

  PermStats s12 = perm_stats(parse_perm("1,2"));
  CHECK(s12.weak_excedances == 2);
  CHECK(s12.consec_weak_exc_pairs == 1);
  CHECK(s12.weak_exc_not_followed == 1);
  // 1,2,3 appended: one double ascent at position 2, one run of length 3
  CHECK(s12.double_ascents_appended == 1);
  CHECK(s12.ascending_runs_appended == 1);
}

TEST_CASE("weak excedances and deficiencies partition positions") {
  for_each_permutation(6, [&](const Permutation& p) {
    PermStats st = perm_stats(p);
    std::size_t deficiencies = 0;
    for (std::size_t i = 0; i < p.word.size(); ++i)
      if (p.word[i] < static_cast<int>(i) + 1) ++deficiencies;
    CHECK(st.weak_excedances + deficiencies == p.word.size());
    CHECK(st.last_is_deficiency ==
          (p.word.back() < static_cast<int>(p.word.size())));
  });
}
