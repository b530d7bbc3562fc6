#include "besselsum/special.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>

#include "besselsum/numeric.hpp"

namespace besselsum::special {
namespace {

#if defined(__SIZEOF_FLOAT128__)
using Wide = __float128;
constexpr double kWideEps = 1.0e-33;
#else
using Wide = long double;
constexpr double kWideEps = std::numeric_limits<long double>::epsilon();
#endif

Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

std::atomic<double> g_switch_j{30.0};
std::atomic<double> g_switch_i{30.0};

struct WideComplex {
  Wide re = 0;
  Wide im = 0;

  WideComplex operator*(const WideComplex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  WideComplex operator*(Wide s) const { return {re * s, im * s}; }
  WideComplex& operator+=(const WideComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  double abs() const {
    const double a = static_cast<double>(re);
    const double b = static_cast<double>(im);
    return std::hypot(a, b);
  }
};

constexpr int kMaxSeriesTerms = 2000;
constexpr double kSeriesCutoff = 1e-32;

void require_order(double nu, const char* op) {
  if (!(nu >= 0.0) || !std::isfinite(nu)) {
    throw DomainError(std::string(op) + ": order must be finite and >= 0");
  }
}

}  // namespace

EvalResult<double> gamma_real(double x) {
  if (!(x > 0.0)) throw DomainError("gamma_real: argument must be positive");
  const double value = std::tgamma(x);
  if (!std::isfinite(value)) throw OverflowError("gamma_real: result overflows binary64");
  // glibc tgamma is accurate to a few ulp on the positive axis.
  return {value, 8.0 * kEps * value};
}

double hankel_coefficient(double nu, int m) {
  if (m < 0) throw DomainError("hankel_coefficient: m must be non-negative");
  const double mu = 4.0 * nu * nu;
  double c = 1.0;
  for (int j = 1; j <= m; ++j) {
    const double odd = 2.0 * j - 1.0;
    c *= (mu - odd * odd) / (4.0 * j);
  }
  return c;
}

EvalResult<double> bessel_j_series(double nu, double x) {
  require_order(nu, "bessel_j_series");
  if (!(x >= 0.0)) throw DomainError("bessel_j_series: argument must be >= 0");
  if (x == 0.0) return {nu == 0.0 ? 1.0 : 0.0, 0.0};

  const double half = 0.5 * x;
  const Wide q2 = static_cast<Wide>(half) * static_cast<Wide>(half);
  Wide term = 1;
  Wide sum = 1;
  Wide abs_sum = 1;
  double ratio = 0.0;
  int m = 0;
  for (; m < kMaxSeriesTerms; ++m) {
    const Wide denom = static_cast<Wide>(m + 1) * static_cast<Wide>(nu + m + 1);
    ratio = static_cast<double>(q2 / denom);
    const Wide next = -term * q2 / denom;
    if (ratio < 0.5 && static_cast<double>(wide_abs(next)) < kSeriesCutoff * static_cast<double>(abs_sum)) {
      term = next;
      break;
    }
    term = next;
    sum += term;
    abs_sum += wide_abs(term);
  }
  // Remaining terms shrink at least geometrically with the current ratio.
  const double tail = static_cast<double>(wide_abs(term)) / (1.0 - std::min(ratio, 0.5));
  const double log_prefactor = nu * std::log(half) - std::lgamma(nu + 1.0);
  const double prefactor = std::exp(log_prefactor);
  const double value = prefactor * static_cast<double>(sum);
  const double rounding = static_cast<double>(abs_sum) * kWideEps * (m + 2);
  const double bound = prefactor * (tail + rounding) + 4.0 * kEps * std::abs(value);
  return {value, bound};
}

EvalResult<double> bessel_j_asymptotic(double nu, double x) {
  require_order(nu, "bessel_j_asymptotic");
  if (!(x > 0.0)) throw DomainError("bessel_j_asymptotic: argument must be positive");
  const double mu = 4.0 * nu * nu;
  // a_k = prod_{j<=k} (mu - (2j-1)^2) / (k! (8x)^k); P takes even k with sign
  // (-1)^{k/2}, Q odd k with sign (-1)^{(k-1)/2}.
  double p = 1.0;
  double q = 0.0;
  double a = 1.0;
  double omitted = 0.0;
  bool terminated = false;
  const int min_terms = static_cast<int>(nu) + 2;
  for (int k = 1; k < 400; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = a * (mu - odd * odd) / (8.0 * k * x);
    if (next == 0.0) {
      terminated = true;
      break;
    }
    if (k > min_terms && std::abs(next) >= std::abs(a)) {
      omitted = std::abs(next);
      break;
    }
    a = next;
    const int phase = k % 4;
    const double signed_term = (phase == 0 || phase == 1) ? a : -a;
    if (k % 2 == 0) {
      p += signed_term;
    } else {
      q += signed_term;
    }
    if (std::abs(a) < 1e-18 * std::max(std::abs(p), 1e-300)) {
      const double odd_next = 2.0 * k + 1.0;
      omitted = std::abs(a * (mu - odd_next * odd_next) / (8.0 * (k + 1) * x));
      break;
    }
  }
  if (terminated) omitted = 0.0;
  // cos(x - c pi) and sin(x - c pi) with c = nu/2 + 1/4, expanded so the
  // phase carries no rounding beyond that of x itself.
  const double c = 0.5 * nu + 0.25;
  const double cx = std::cos(x);
  const double sx = std::sin(x);
  const double cc = std::cos(c * kPi);
  const double sc = std::sin(c * kPi);
  const double cos_w = cx * cc + sx * sc;
  const double sin_w = sx * cc - cx * sc;
  const double amplitude = std::sqrt(2.0 / (kPi * x));
  const double value = amplitude * (p * cos_w - q * sin_w);
  // The first omitted term bounds each of the P and Q remainders.
  const double bound =
      amplitude * (2.0 * omitted + 8.0 * kEps * (std::abs(p) + std::abs(q))) + 4.0 * kEps * std::abs(value);
  return {value, bound};
}

SwitchPoints default_switch_points() {
  return {g_switch_j.load(std::memory_order_relaxed), g_switch_i.load(std::memory_order_relaxed)};
}

void set_default_switch_points(const SwitchPoints& switches) {
  if (!(switches.bessel_j > 0.0) || !(switches.bessel_i > 0.0)) {
    throw DomainError("switch points must be positive");
  }
  g_switch_j.store(switches.bessel_j, std::memory_order_relaxed);
  g_switch_i.store(switches.bessel_i, std::memory_order_relaxed);
}

EvalResult<double> bessel_j(double nu, double x, const SwitchPoints& switches) {
  require_order(nu, "bessel_j");
  if (!(x >= 0.0)) throw DomainError("bessel_j: argument must be >= 0");
  if (x <= switches.bessel_j) return bessel_j_series(nu, x);
  auto asymptotic = bessel_j_asymptotic(nu, x);
  // High orders need larger arguments before the Hankel expansion is sharp;
  // the extended-precision series stays accurate a little past the switch.
  if (asymptotic.abs_error_bound > 1e-15 && x < 2.0 * switches.bessel_j) {
    auto series = bessel_j_series(nu, x);
    if (series.abs_error_bound < asymptotic.abs_error_bound) return series;
  }
  return asymptotic;
}

EvalResult<Complex> bessel_i_scaled_series(double nu, Complex w) {
  require_order(nu, "bessel_i_scaled_series");
  if (w.real() < 0.0) throw DomainError("bessel_i_scaled: requires Re w >= 0");
  if (w == Complex(0.0)) return {Complex(nu == 0.0 ? 1.0 : 0.0), 0.0};

  const Complex half = 0.5 * w;
  const Complex half_sq = half * half;
  const WideComplex q2{static_cast<Wide>(half_sq.real()), static_cast<Wide>(half_sq.imag())};
  const double q2_abs = std::abs(half_sq);
  WideComplex term{1, 0};
  WideComplex sum{1, 0};
  double abs_sum = 1.0;
  double ratio = 0.0;
  int m = 0;
  for (; m < kMaxSeriesTerms; ++m) {
    const Wide denom = static_cast<Wide>(m + 1) * static_cast<Wide>(nu + m + 1);
    ratio = q2_abs / static_cast<double>(denom);
    const WideComplex next = (term * q2) * (static_cast<Wide>(1) / denom);
    const double next_abs = next.abs();
    term = next;
    if (ratio < 0.5 && next_abs < kSeriesCutoff * abs_sum) break;
    sum += term;
    abs_sum += next_abs;
  }
  const double tail = term.abs() / (1.0 - std::min(ratio, 0.5));
  // (w/2)^nu e^{-Re w} / Gamma(nu + 1), principal branch.
  const Complex log_prefactor = nu * std::log(half) - w.real() - std::lgamma(nu + 1.0);
  const Complex prefactor = nu == 0.0 ? Complex(std::exp(-w.real())) : std::exp(log_prefactor);
  const Complex value = prefactor * Complex(static_cast<double>(sum.re), static_cast<double>(sum.im));
  const double rounding = abs_sum * kWideEps * (m + 2);
  const double bound = std::abs(prefactor) * (tail + rounding) + 4.0 * kEps * std::abs(value);
  return {value, bound};
}

EvalResult<Complex> bessel_i_scaled_asymptotic(double nu, Complex w) {
  require_order(nu, "bessel_i_scaled_asymptotic");
  if (!(w.real() > 0.0)) throw DomainError("bessel_i_scaled_asymptotic: requires Re w > 0");
  const double mu = 4.0 * nu * nu;
  // b_m = (-1)^m (nu, m) / (2w)^m, built by its ratio.
  Complex b(1.0);
  Complex sum(1.0);
  double omitted = 0.0;
  bool terminated = false;
  const int min_terms = static_cast<int>(nu) + 2;
  for (int m = 1; m < 400; ++m) {
    const double odd = 2.0 * m - 1.0;
    const Complex next = -b * (mu - odd * odd) / (8.0 * m * w);
    if (next == Complex(0.0)) {
      terminated = true;
      break;
    }
    if (m > min_terms && std::abs(next) >= std::abs(b)) {
      omitted = std::abs(next);
      break;
    }
    b = next;
    sum += b;
    if (std::abs(b) < 1e-18 * std::abs(sum)) {
      const double odd_next = 2.0 * m + 1.0;
      omitted = std::abs(b * (mu - odd_next * odd_next) / (8.0 * (m + 1) * w));
      break;
    }
  }
  if (terminated) omitted = 0.0;
  const Complex prefactor = std::polar(1.0, w.imag()) / std::sqrt(2.0 * kPi * w);
  const Complex value = prefactor * sum;
  const double pref_abs = std::abs(prefactor);
  // The e^{-w} companion contributes at most e^{-2 Re w} relative to the
  // leading factor (times the magnitude of its own expansion, <= 2 here).
  const double companion = 2.0 * std::exp(-2.0 * w.real());
  const double bound = pref_abs * (omitted + companion + 8.0 * kEps * std::abs(sum)) + 4.0 * kEps * std::abs(value);
  return {value, bound};
}

EvalResult<Complex> bessel_i_scaled(double nu, Complex w, const SwitchPoints& switches) {
  require_order(nu, "bessel_i_scaled");
  if (w.real() < 0.0) throw DomainError("bessel_i_scaled: requires Re w >= 0");
  if (std::abs(w) <= switches.bessel_i) return bessel_i_scaled_series(nu, w);
  auto asymptotic = bessel_i_scaled_asymptotic(nu, w);
  if (asymptotic.abs_error_bound > 1e-15 && std::abs(w) < 2.0 * switches.bessel_i) {
    auto series = bessel_i_scaled_series(nu, w);
    if (series.abs_error_bound < asymptotic.abs_error_bound) return series;
  }
  return asymptotic;
}

double bessel_j_envelope(double nu, double y) {
  require_order(nu, "bessel_j_envelope");
  if (!(y >= 0.0)) throw DomainError("bessel_j_envelope: argument must be >= 0");
  const double mu = (2.0 * nu + 1.0) * (2.0 * nu + 3.0);
  const double threshold = 0.5 * std::sqrt(mu + std::pow(mu, 2.0 / 3.0));
  if (y <= threshold) return 1.0;
  const double y4 = 4.0 * y * y;
  const double numer = 4.0 * (y4 - (2.0 * nu + 1.0) * (2.0 * nu + 5.0));
  const double denom = kPi * (std::pow(y4 - mu, 1.5) - mu);
  if (!(denom > 0.0) || !(numer > 0.0)) return 1.0;
  return std::min(1.0, std::sqrt(numer / denom) * (1.0 + 1e-12));
}

double bessel_j_envelope_constant(double nu, double y_min) {
  if (!(y_min > 0.0)) throw DomainError("bessel_j_envelope_constant: y_min must be positive");
  // Krasikov's bound times sqrt(pi y/2) tends to 1; scan a geometric grid.
  double kappa = 1.0;
  for (double y = y_min; y < 1e7 * y_min; y *= 1.05) {
    kappa = std::max(kappa, bessel_j_envelope(nu, y) * std::sqrt(0.5 * kPi * y));
  }
  return kappa * (1.0 + 1e-6);
}

}  // namespace besselsum::special
