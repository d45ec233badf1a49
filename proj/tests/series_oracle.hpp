#pragma once

// Independent reference solvers for the tests: Taylor/Frobenius series of the
// radial equations about the origin, summed in extended precision. They share
// no code with the library and are only usable for modest radii.

#include <cmath>
#include <functional>

namespace series {

using quad = __float128;

inline quad qabs(quad x) { return x < 0 ? -x : x; }

/// u = r psi for the Schrodinger radial equation u'' = (l(l+1)/r^2 - 2/r - 2E) u.
/// Returns (u(R), u'(R)) up to a common positive factor.
struct UDU {
  quad u;
  quad du;
};
inline UDU schrodinger_at(quad E, int l, quad R) {
  // u = sum c_k r^(k+l+1); c_k [(k+l+1)(k+l) - l(l+1)] = -2 c_{k-1} - 2E c_{k-2}
  quad cm2 = 0, cm1 = 1;
  quad rk = 1;  // R^k
  quad u = cm1, du = (l + 1) * cm1;
  for (int k = 1; k < 4000; ++k) {
    const quad denom = quad(k) * (k + 2 * l + 1);
    const quad ck = (-2 * cm1 - 2 * E * cm2) / denom;
    rk *= R;
    const quad term = ck * rk;
    u += term;
    du += (k + l + 1) * term;
    cm2 = cm1;
    cm1 = ck;
    if (k > 20 && qabs(term) < 1e-40Q * qabs(u) && qabs(ck * rk * R) < 1e-40Q * qabs(u)) break;
  }
  // common factor R^(l+1) dropped from u, R^l from du
  return {u * R, du};
}

/// gamma u + u' - u/r = 0 with u = r psi, i.e. gamma psi + psi' = 0; Dirichlet
/// when dirichlet is set.
inline quad schrodinger_bc(quad E, int l, quad R, double gamma, bool dirichlet) {
  UDU s = schrodinger_at(E, l, R);
  if (dirichlet) return s.u;
  return quad(gamma) * s.u + s.du - s.u / R;
}

/// Dirac upper/lower components (r psi_A, r psi_B) at R for the radial system
/// used by the library (kappa = -k, s = sqrt(k^2 - alpha^2)).
struct AB {
  long double a;
  long double b;
};
inline AB dirac_at(long double E, int k, long double alpha, long double R) {
  const long double kappa = -k;
  const long double s = std::sqrt(static_cast<long double>(k) * k - alpha * alpha);
  long double p = alpha, q = s - kappa;  // null vector at order 0
  long double a = p, b = q, rk = 1;
  for (int n = 1; n < 4000; ++n) {
    const long double r0 = (E + 1) / alpha * q;
    const long double r1 = -(E - 1) / alpha * p;
    // [(s+n-kappa) -alpha; alpha (s+n+kappa)] (pn, qn) = (r0, r1)
    const long double m00 = s + n - kappa, m01 = -alpha, m10 = alpha, m11 = s + n + kappa;
    const long double det = m00 * m11 - m01 * m10;
    const long double pn = (r0 * m11 - m01 * r1) / det;
    const long double qn = (m00 * r1 - m10 * r0) / det;
    rk *= R;
    a += pn * rk;
    b += qn * rk;
    p = pn;
    q = qn;
    if (n > 20 && std::fabs(pn * rk) + std::fabs(qn * rk) < 1e-24L * (std::fabs(a) + std::fabs(b))) break;
  }
  return {a, b};
}

/// Bisection of a bracketed sign change in extended precision.
template <class T>
T bisect(const std::function<T(T)>& f, T lo, T hi, int iters = 200) {
  T flo = f(lo);
  for (int i = 0; i < iters; ++i) {
    T mid = (lo + hi) / 2;
    T fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

/// n-th sign change of f on a uniform grid over [lo, hi], refined; NaN if absent.
template <class T>
double nth_root(const std::function<T(T)>& f, T lo, T hi, int n, int grid = 4000) {
  T a = lo, fa = f(a);
  int seen = 0;
  for (int i = 1; i <= grid; ++i) {
    T b = lo + (hi - lo) * i / grid, fb = f(b);
    if ((fa < 0) != (fb < 0)) {
      if (seen == n) return static_cast<double>(bisect<T>(f, a, b));
      ++seen;
    }
    a = b;
    fa = fb;
  }
  return NAN;
}

}  // namespace series
