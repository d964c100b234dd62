#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <vector>

#include "oyleaf/bigint.hpp"
#include "oyleaf/errors.hpp"
#include "oyleaf/poly.hpp"

namespace oyleaf {

/// Binomial coefficient with C(a,b) = 0 for b < 0 or b > a, which makes
/// every closed form below total.
inline BigInt binomial(long a, long b) {
  if (b < 0 || b > a || a < 0) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return out;
}

inline BigInt catalan(std::size_t n) {
  BigInt c = binomial(2 * static_cast<long>(n), static_cast<long>(n));
  BigInt out = c / (n + 1);
  assert(out * (n + 1) == c);
  return out;
}

/// M_n = sum_k C(n,2k) C_k.
inline BigInt motzkin(std::size_t n) {
  BigInt out = 0;
  for (std::size_t k = 0; 2 * k <= n; ++k)
    out += binomial(static_cast<long>(n), 2 * static_cast<long>(k)) *
           catalan(k);
  return out;
}

/// (1/n) C(n,k) C(n,k-1), defined for 1 <= k <= n.
inline BigInt narayana(std::size_t n, std::size_t k) {
  if (n < 1 || k < 1 || k > n) throw domain_error("narayana: need 1 <= k <= n");
  BigInt num = binomial(static_cast<long>(n), static_cast<long>(k)) *
               binomial(static_cast<long>(n), static_cast<long>(k) - 1);
  BigInt out = num / static_cast<long>(n);
  assert(out * static_cast<long>(n) == num);
  return out;
}

/// Number of plane trees with n edges, i old leaves, j young leaves:
/// (1/n) C(n,i) C(n-i,j) C(n-i-j,i-1). Out-of-range profiles give 0.
inline BigInt count_old_young(std::size_t n, long i, long j) {
  if (n < 1) throw domain_error("count_old_young: need n >= 1");
  const long ln = static_cast<long>(n);
  BigInt num = binomial(ln, i) * binomial(ln - i, j) *
               binomial(ln - i - j, i - 1);
  if (num == 0) return 0;
  BigInt out = num / ln;
  assert(out * ln == num);
  return out;
}

/// Trees with n edges and k old leaves: (2^{n-2k+1}/k) C(n-1,2k-2) C(2k-2,k-1).
inline BigInt count_old(std::size_t n, std::size_t k) {
  if (n < 1 || k < 1) throw domain_error("count_old: need n >= 1, k >= 1");
  const long ln = static_cast<long>(n), lk = static_cast<long>(k);
  BigInt b = binomial(ln - 1, 2 * lk - 2) * binomial(2 * lk - 2, lk - 1);
  if (b == 0) return 0;
  // 2k - 2 <= n - 1 here, so the power of two is non-negative.
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(ln - 2 * lk + 1));
  BigInt num = p * b;
  BigInt out = num / lk;
  assert(out * lk == num);
  return out;
}

/// Trees with n edges and k young leaves: C(n-1,k) M_{n-k-1}.
inline BigInt count_young(std::size_t n, std::size_t k) {
  if (n < 1) throw domain_error("count_young: need n >= 1");
  if (k + 1 > n) return 0;
  return binomial(static_cast<long>(n) - 1, static_cast<long>(k)) *
         motzkin(n - k - 1);
}

/// Coefficients [z^n] of G(t,s,z), n = 0..N, as polynomials in t and s,
/// computed by fixed-point iteration of
///   G = 1 + z(G-1+t) / (1 - z(G-1+s))
/// in the truncated power series ring. Each round fixes one more order, so
/// N+1 rounds suffice; stabilization is asserted.
inline std::vector<MultiPoly> gf_series(std::size_t N) {
  using Series = std::vector<MultiPoly>;  // index = power of z
  const MultiPoly t = MultiPoly::var(Var::t), s = MultiPoly::var(Var::s);
  Series G(N + 1);
  G[0] = MultiPoly::one();
  bool converged = false;
  for (std::size_t round = 0; round <= N + 1 && !converged; ++round) {
    // One application of the map fixes one more z-order, so earlier rounds
    // only need a short truncation.
    const std::size_t cap = std::min(N, round + 1);
    Series A = G;  // G - 1 + t
    A[0] += t - MultiPoly::one();
    Series B = G;  // G - 1 + s
    B[0] += s - MultiPoly::one();
    // Q = z A / (1 - z B) satisfies Q = z A + z B Q; extract orders 1..cap.
    Series Q(N + 1);
    for (std::size_t k = 1; k <= cap; ++k) {
      Q[k] = A[k - 1];
      for (std::size_t m = 1; m < k; ++m)
        if (!B[m - 1].is_zero() && !Q[k - m].is_zero())
          Q[k] += B[m - 1] * Q[k - m];
    }
    Series next = G;
    next[0] = MultiPoly::one();
    for (std::size_t k = 1; k <= cap; ++k) next[k] = std::move(Q[k]);
    converged = next == G;
    G = std::move(next);
  }
  if (!converged) throw domain_error("gf_series failed to converge");
  return G;
}

/// Floating-point evaluation of the closed form of G(t,s,z).
inline double gf_closed_eval(double t, double s, double z) {
  if (z == 0.0) return 1.0;  // limit value
  double radicand =
      1 - 2 * (1 + s) * z + (1 - 4 * t + 2 * s + s * s) * z * z;
  if (radicand < 0) throw domain_error("gf_closed_eval: negative radicand");
  return (1 + z - s * z - std::sqrt(radicand)) / (2 * z);
}

}  // namespace oyleaf
