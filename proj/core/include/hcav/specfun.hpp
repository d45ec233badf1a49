#pragma once

#include <complex>
#include <stdexcept>

namespace hcav::specfun {

using Complex = std::complex<double>;

/// Raised when an argument sits on a pole of Gamma or of the Kummer
/// denominator parameter (b = 0, -1, -2, ...).
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a series does not reach its tolerance within the term cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct KummerOptions {
  double max_abs_z = 400.0;
  int max_terms = 5000;
  double rel_tol = 1e-17;
};

/// Log-gamma continued from the positive real axis, branch cut along the
/// negative real axis. Real arguments give ln|Gamma(x)| + i*pi*m, so the sign
/// of Gamma(x) is cos(imag).
Complex log_gamma(Complex z);

/// ln|Gamma(x)| and sign(Gamma(x)) for real x. Throws PoleError at x = 0, -1, ...
struct SignedLog {
  double log_abs;
  int sign;
};
SignedLog log_gamma_real(double x);

/// 1 / Gamma(x) for real x; exactly 0 at the poles.
double reciprocal_gamma(double x);

/// Kummer's confluent hypergeometric function M(a, b, z) = 1F1(a; b; z).
///
/// Power series with Neumaier-compensated summation. For Re z < 0 and a not a
/// non-positive integer the Kummer transformation M(a,b,z) = e^z M(b-a,b,-z)
/// is applied first so the summed terms do not alternate.
Complex kummer_m(Complex a, Complex b, Complex z, const KummerOptions& opts = {});
double kummer_m(double a, double b, double z, const KummerOptions& opts = {});

/// Generalized Laguerre function L^order_degree(x) for real degree:
///   Gamma(degree+order+1) / (Gamma(degree+1) Gamma(order+1)) * M(-degree, order+1, x).
/// order must exceed -1. A negative integer degree yields 0 for integer order
/// and is rejected for non-integer order.
double laguerre_general(double degree, double order, double x);

/// Associated Laguerre polynomial of integer degree by the three-term recurrence.
double laguerre_int(int k, double order, double x);

}  // namespace hcav::specfun
