#include "hcav/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace hcav::specfun {
namespace {

bool is_nonpositive_integer(double x) { return x <= 0.0 && std::floor(x) == x; }

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && is_nonpositive_integer(z.real());
}

void require_finite(Complex z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::invalid_argument(std::string(what) + ": non-finite argument");
  }
}

// B_{2k} / (2k (2k-1)) for the Stirling tail.
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,        -1.0 / 360.0, 1.0 / 1260.0,  -1.0 / 1680.0,
    1.0 / 1188.0,      -691.0 / 360360.0, 1.0 / 156.0, -3617.0 / 122400.0,
};

constexpr double kStirlingShift = 15.0;

Complex stirling(Complex w) {
  const double half_log_two_pi = 0.5 * std::log(2.0 * std::numbers::pi);
  Complex inv = 1.0 / w;
  Complex inv2 = inv * inv;
  Complex tail = 0.0;
  Complex p = inv;
  for (double c : kStirling) {
    tail += c * p;
    p *= inv2;
  }
  return (w - 0.5) * std::log(w) - w + half_log_two_pi + tail;
}

// Neumaier compensated accumulator for one real component.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x)) {
      carry += (sum - t) + x;
    } else {
      carry += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + carry; }
};

Complex kummer_series(Complex a, Complex b, Complex z, const KummerOptions& opts) {
  CompensatedSum re;
  CompensatedSum im;
  re.add(1.0);
  Complex term = 1.0;
  const bool terminating = is_nonpositive_integer(a);
  for (int k = 0; k < opts.max_terms; ++k) {
    Complex ak = a + static_cast<double>(k);
    if (terminating && ak == Complex(0.0, 0.0)) {
      return {re.value(), im.value()};
    }
    Complex ratio = ak / (b + static_cast<double>(k)) * z / static_cast<double>(k + 1);
    term *= ratio;
    re.add(term.real());
    im.add(term.imag());
    double mag = std::abs(term);
    double total = std::abs(Complex(re.value(), im.value()));
    if (mag == 0.0) {
      return {re.value(), im.value()};
    }
    // The remaining tail is dominated geometrically once the next ratio drops
    // below one half.
    double next_ratio = std::abs((ak + 1.0) / (b + static_cast<double>(k + 1)) * z) /
                        static_cast<double>(k + 2);
    if (next_ratio < 0.5 && (mag <= opts.rel_tol * total || mag < 1e-300)) {
      return {re.value(), im.value()};
    }
  }
  throw ConvergenceError("kummer_m: series did not converge within " +
                         std::to_string(opts.max_terms) + " terms");
}

}  // namespace

Complex log_gamma(Complex z) {
  require_finite(z, "log_gamma");
  if (is_nonpositive_integer(z)) {
    throw PoleError("log_gamma: pole at non-positive integer");
  }
  if (z.imag() == 0.0 && (z.real() == 1.0 || z.real() == 2.0)) {
    return 0.0;
  }
  Complex shift_sum = 0.0;
  Complex w = z;
  while (w.real() < kStirlingShift) {
    shift_sum += std::log(w);
    w += 1.0;
  }
  return stirling(w) - shift_sum;
}

SignedLog log_gamma_real(double x) {
  Complex lg = log_gamma(Complex(x, 0.0));
  int sign = 1;
  if (x < 0.0) {
    auto fl = static_cast<long long>(std::floor(x));
    sign = (fl % 2 != 0) ? -1 : 1;
  }
  return {lg.real(), sign};
}

double reciprocal_gamma(double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("reciprocal_gamma: non-finite argument");
  }
  if (is_nonpositive_integer(x)) {
    return 0.0;
  }
  auto lg = log_gamma_real(x);
  return lg.sign * std::exp(-lg.log_abs);
}

Complex kummer_m(Complex a, Complex b, Complex z, const KummerOptions& opts) {
  require_finite(a, "kummer_m");
  require_finite(b, "kummer_m");
  require_finite(z, "kummer_m");
  if (is_nonpositive_integer(b)) {
    throw PoleError("kummer_m: b is a non-positive integer");
  }
  if (std::abs(z) > opts.max_abs_z) {
    throw std::domain_error("kummer_m: |z| exceeds the supported bound");
  }
  if (z == Complex(0.0, 0.0)) {
    return 1.0;
  }
  if (z.real() < 0.0 && !is_nonpositive_integer(a)) {
    return std::exp(z) * kummer_series(b - a, b, -z, opts);
  }
  return kummer_series(a, b, z, opts);
}

double kummer_m(double a, double b, double z, const KummerOptions& opts) {
  return kummer_m(Complex(a, 0.0), Complex(b, 0.0), Complex(z, 0.0), opts).real();
}

double laguerre_general(double degree, double order, double x) {
  if (!std::isfinite(degree) || !std::isfinite(order) || !std::isfinite(x)) {
    throw std::invalid_argument("laguerre_general: non-finite argument");
  }
  if (!(order > -1.0)) {
    throw std::invalid_argument("laguerre_general: order must exceed -1");
  }
  if (degree < 0.0 && std::floor(degree) == degree) {
    if (std::floor(order) != order) {
      throw PoleError("laguerre_general: negative integer degree with non-integer order");
    }
    if (is_nonpositive_integer(degree + order + 1.0)) {
      throw PoleError("laguerre_general: indeterminate Gamma ratio");
    }
    return 0.0;
  }
  if (is_nonpositive_integer(degree + order + 1.0)) {
    throw PoleError("laguerre_general: Gamma(degree+order+1) pole");
  }
  auto num = log_gamma_real(degree + order + 1.0);
  auto den_a = log_gamma_real(degree + 1.0);
  auto den_b = log_gamma_real(order + 1.0);
  double coeff = num.sign * den_a.sign * den_b.sign *
                 std::exp(num.log_abs - den_a.log_abs - den_b.log_abs);
  return coeff * kummer_m(-degree, order + 1.0, x);
}

double laguerre_int(int k, double order, double x) {
  if (k < 0) {
    throw std::invalid_argument("laguerre_int: degree must be non-negative");
  }
  if (!std::isfinite(order) || !std::isfinite(x)) {
    throw std::invalid_argument("laguerre_int: non-finite argument");
  }
  double prev = 1.0;
  if (k == 0) {
    return prev;
  }
  double cur = 1.0 + order - x;
  for (int m = 1; m < k; ++m) {
    double next = ((2.0 * m + 1.0 + order - x) * cur - (m + order) * prev) / (m + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace hcav::specfun
