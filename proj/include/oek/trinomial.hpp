#ifndef OEK_TRINOMIAL_HPP
#define OEK_TRINOMIAL_HPP

#include <cmath>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "oek/errors.hpp"

namespace oek {

// 113-bit significand. The largest root of K^{n+1} - 2K^n + 1 sits about
// 2^-n below 2, so for n past ~13 a double cannot hold it closely enough to
// make the residual small; compute in quad and round.
using QuadReal = boost::multiprecision::cpp_bin_float_quad;

// K^{n+1} - 2K^n + 1, evaluated as K^n (K - 2) + 1 (K - 2 is exact near 2).
template <typename Scalar>
Scalar trinomial_residual(int n, const Scalar& k) {
  using std::pow;
  return pow(k, n) * (k - Scalar(2)) + Scalar(1);
}

// Greatest positive root K1 of K^{n+1} - 2K^n + 1 = 0, in [1, 2).
// n = 1 is the double root 1. For n >= 2 the root is bracketed by
// [1 + 1e-9, 2] (negative just above 1, +1 at 2): bisection, then Newton.
template <typename Scalar>
Scalar trinomial_root(int n, const Scalar& tol = Scalar(1e-13)) {
  using std::abs;
  if (n < 1) throw DomainError("trinomial_root requires n >= 1");
  if (n == 1) return Scalar(1);

  Scalar lo = Scalar(1) + Scalar(1e-9);
  Scalar hi = Scalar(2);
  for (int it = 0; it < 400; ++it) {
    const Scalar mid = (lo + hi) / 2;
    if (mid <= lo || mid >= hi) break;
    if (trinomial_residual(n, mid) < Scalar(0))
      lo = mid;
    else
      hi = mid;
    if (hi - lo < tol * Scalar(1e-6)) break;
  }

  Scalar k = (lo + hi) / 2;
  for (int it = 0; it < 50; ++it) {
    using std::pow;
    const Scalar f = trinomial_residual(n, k);
    if (abs(f) <= tol * Scalar(1e-3)) break;
    const Scalar df = pow(k, n - 1) * (Scalar(n + 1) * k - Scalar(2 * n));
    if (df == Scalar(0)) break;
    const Scalar next = k - f / df;
    if (!(next > lo && next < hi) || next == k) break;
    k = next;
  }

  // Best of the candidates seen at the final bracket.
  Scalar best = k;
  for (const Scalar& c : {lo, hi})
    if (abs(trinomial_residual(n, c)) < abs(trinomial_residual(n, best))) best = c;
  return best;
}

// Double-precision K1: correctly rounded from the quad computation.
inline double trinomial_root(int n) {
  return static_cast<double>(trinomial_root<QuadReal>(n, QuadReal(1e-13)));
}

}  // namespace oek

#endif  // OEK_TRINOMIAL_HPP
