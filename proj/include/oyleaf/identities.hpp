#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

#include "oyleaf/counting.hpp"
#include "oyleaf/errors.hpp"
#include "oyleaf/path.hpp"
#include "oyleaf/poly.hpp"
#include "oyleaf/stats.hpp"
#include "oyleaf/tree.hpp"

namespace oyleaf {

inline constexpr std::size_t kDefaultEnumCap = 12;

/// Vertex weight schemes for the refined Coker identities.
///  A: non-critical old leaf -> x, young leaf -> y, everything else -> 1.
///  B: non-critical old leaf and its parent -> x, young leaf -> y,
///     critical leaf and its parent -> 1, everything else -> z.
enum class WeightScheme { A, B };

/// Product of vertex weights of t under the scheme. Asserts the scheme-B
/// precondition that two old leaves never share a parent.
inline MultiPoly tree_weight(const PlaneTree& t, WeightScheme scheme) {
  const MultiPoly x = MultiPoly::var(Var::x), y = MultiPoly::var(Var::y),
                  z = MultiPoly::var(Var::z);
  TreeStats st = tree_stats(t);
  MultiPoly w = MultiPoly::one();
  std::size_t preorder = 0;
  std::function<void(const PlaneTree&, bool)> walk = [&](const PlaneTree& node,
                                                         bool leftmost) {
    std::size_t idx = preorder++;
    bool is_leaf = node.children.empty() && idx != 0;
    bool is_old = is_leaf && leftmost;
    bool is_critical = is_old && st.critical_leaf_preorder_index &&
                       idx == *st.critical_leaf_preorder_index;
    bool parent_of_old = false, parent_of_critical = false;
    if (!node.children.empty() && node.children[0].children.empty() &&
        !(node.children.empty() && idx == 0)) {
      // the leftmost child is a leaf, hence an old leaf (unless it is the
      // whole tree, excluded above)
      parent_of_old = true;
      parent_of_critical = st.critical_leaf_preorder_index &&
                           idx + 1 == *st.critical_leaf_preorder_index;
    }
    if (scheme == WeightScheme::A) {
      if (is_old && !is_critical)
        w *= x;
      else if (is_leaf && !is_old)
        w *= y;
    } else {
      if (is_critical || parent_of_critical) {
        // weight 1
      } else if (is_old || parent_of_old) {
        w *= x;
      } else if (is_leaf) {
        w *= y;
      } else {
        w *= z;
      }
    }
    for (std::size_t i = 0; i < node.children.size(); ++i)
      walk(node.children[i], i == 0);
  };
  walk(t, false);
  return w;
}

/// Sum of tree weights over all plane trees with n edges.
inline MultiPoly weighted_tree_sum(std::size_t n, WeightScheme scheme,
                                   std::size_t cap = kDefaultEnumCap) {
  if (n < 1) throw domain_error("weighted_tree_sum: need n >= 1");
  if (n > cap)
    throw domain_error("weighted_tree_sum: n exceeds enumeration cap " +
                       std::to_string(cap));
  MultiPoly sum;
  for_each_tree(n, [&](const std::string& enc) {
    sum += tree_weight(parse_tree(enc), scheme);
  });
  return sum;
}

/// Sum over all colored Motzkin paths of the given length of the product
/// of per-step weights.
inline MultiPoly weighted_path_sum(std::size_t len, int color_count,
                                   const std::map<char, MultiPoly>& weights) {
  if (color_count != 2 && color_count != 3)
    throw domain_error("weighted_path_sum: color count must be 2 or 3");
  PathKind kind = color_count == 2 ? PathKind::Colored2 : PathKind::Colored3;
  for (char c : alphabet_of(kind))
    if (!weights.count(c))
      throw domain_error(std::string("weighted_path_sum: missing weight for ") +
                         c);
  MultiPoly sum;
  for_each_path(kind, len, [&](const std::string& steps) {
    MultiPoly w = MultiPoly::one();
    for (char c : steps) w *= weights.at(c);
    sum += w;
  });
  return sum;
}

/// Coker's first identity:
///   sum_{k=1}^n N(n,k) 4^{n-k}
///     = sum_{k=0}^{floor((n-1)/2)} C_k C(n-1,2k) 4^k 5^{n-2k-1}.
inline std::pair<BigInt, BigInt> coker1_sides(std::size_t n) {
  if (n < 1) throw domain_error("coker1_sides: need n >= 1");
  BigInt lhs = 0, rhs = 0;
  BigInt pow4 = 1;  // 4^{n-k}, built backwards
  for (std::size_t k = n; k >= 1; --k) {
    lhs += narayana(n, k) * pow4;
    pow4 *= 4;
  }
  for (std::size_t k = 0; 2 * k + 1 <= n; ++k) {
    BigInt p4, p5;
    mpz_ui_pow_ui(p4.get_mpz_t(), 4, k);
    mpz_ui_pow_ui(p5.get_mpz_t(), 5, n - 2 * k - 1);
    rhs += catalan(k) * binomial(static_cast<long>(n) - 1, 2 * static_cast<long>(k)) *
           p4 * p5;
  }
  return {lhs, rhs};
}

/// Coker's second identity, both sides expanded in x:
///   sum_{k=1}^n N(n,k) x^{2k} (1+x)^{2n-2k}
///     = x^2 sum_{k=0}^{n-1} C_{k+1} C(n-1,k) x^k (1+x)^k.
inline std::pair<MultiPoly, MultiPoly> coker2_sides(std::size_t n) {
  if (n < 1) throw domain_error("coker2_sides: need n >= 1");
  const MultiPoly x = MultiPoly::var(Var::x);
  const MultiPoly onePx = MultiPoly::one() + x;
  MultiPoly lhs, rhs;
  for (std::size_t k = 1; k <= n; ++k)
    lhs += MultiPoly::constant(narayana(n, k)) *
           MultiPoly::var(Var::x, static_cast<unsigned>(2 * k)) *
           onePx.pow(static_cast<unsigned>(2 * n - 2 * k));
  for (std::size_t k = 0; k < n; ++k)
    rhs += MultiPoly::constant(catalan(k + 1) *
                               binomial(static_cast<long>(n) - 1,
                                        static_cast<long>(k))) *
           MultiPoly::var(Var::x, static_cast<unsigned>(k)) * onePx.pow(k);
  rhs *= MultiPoly::var(Var::x, 2);
  return {lhs, rhs};
}

/// Which middle binomial the refined LHS uses: the corrected C(n-i,j)
/// matching the tree counts, or C(n-1,j) as printed. The printed form is
/// not always integral, so both sides come back with rational coefficients.
enum class RefVariant { corrected, printed };

namespace detail {
// LHS summand coefficient of x-type monomials in the refined identities:
// (1/n) C(n,i) * mid * C(n-i-j,i-1), with mid depending on the variant.
inline Rational ref_lhs_coeff(std::size_t n, long i, long j,
                              RefVariant variant) {
  const long ln = static_cast<long>(n);
  BigInt mid = variant == RefVariant::corrected ? binomial(ln - i, j)
                                                : binomial(ln - 1, j);
  BigInt num = binomial(ln, i) * mid * binomial(ln - i - j, i - 1);
  Rational out(num, ln);
  out.canonicalize();
  return out;
}
}  // namespace detail

/// Refined first Coker identity (both sides as exact polynomials in x,y):
///   sum_{i,j} (1/n) C(n,i) mid C(n-i-j,i-1) x^{i-1} y^j
///     = sum_k C_k C(n-1,2k) x^k (1+y)^{n-2k-1}.
inline std::pair<RatPoly, RatPoly> cok1ref_sides(
    std::size_t n, RefVariant variant = RefVariant::corrected) {
  if (n < 1) throw domain_error("cok1ref_sides: need n >= 1");
  const long ln = static_cast<long>(n);
  RatPoly lhs;
  for (long i = 1; i <= ln; ++i)
    for (long j = 0; j <= ln - 2 * i + 1; ++j) {
      Rational c = detail::ref_lhs_coeff(n, i, j, variant);
      if (c == 0) continue;
      lhs += RatPoly::constant(c) *
             RatPoly::var(Var::x, static_cast<unsigned>(i - 1)) *
             RatPoly::var(Var::y, static_cast<unsigned>(j));
    }
  const RatPoly onePy = RatPoly::one() + RatPoly::var(Var::y);
  RatPoly rhs;
  for (long k = 0; 2 * k + 1 <= ln; ++k)
    rhs += RatPoly::constant(Rational(catalan(k) * binomial(ln - 1, 2 * k))) *
           RatPoly::var(Var::x, static_cast<unsigned>(k)) *
           onePy.pow(static_cast<unsigned>(ln - 2 * k - 1));
  return {lhs, rhs};
}

/// Refined second Coker identity (both sides as exact polynomials in x,y,z):
///   sum_{i,j} N'(n,i,j) x^{2(i-1)} y^j z^{n-2i-j+1}
///     = sum_k C_{k+1} C(n-1,k) x^k (y+z-2x)^{n-1-k},
/// with the corrected middle binomial on the left.
inline std::pair<MultiPoly, MultiPoly> cok2ref_sides(std::size_t n) {
  if (n < 1) throw domain_error("cok2ref_sides: need n >= 1");
  const long ln = static_cast<long>(n);
  MultiPoly lhs;
  for (long i = 1; 2 * i <= ln + 1; ++i)
    for (long j = 0; j <= ln - 2 * i + 1; ++j) {
      BigInt c = count_old_young(n, i, j);
      if (c == 0) continue;
      lhs += MultiPoly::constant(c) *
             MultiPoly::var(Var::x, static_cast<unsigned>(2 * (i - 1))) *
             MultiPoly::var(Var::y, static_cast<unsigned>(j)) *
             MultiPoly::var(Var::z, static_cast<unsigned>(ln - 2 * i - j + 1));
    }
  const MultiPoly g = MultiPoly::var(Var::y) + MultiPoly::var(Var::z) -
                      MultiPoly::constant(2) * MultiPoly::var(Var::x);
  MultiPoly rhs;
  for (long k = 0; k < ln; ++k)
    rhs += MultiPoly::constant(catalan(k + 1) * binomial(ln - 1, k)) *
           MultiPoly::var(Var::x, static_cast<unsigned>(k)) *
           g.pow(static_cast<unsigned>(ln - 1 - k));
  return {lhs, rhs};
}

}  // namespace oyleaf
