#include "besselsum/identities.hpp"

#include <cmath>
#include <string>

#include "besselsum/arith.hpp"
#include "besselsum/numeric.hpp"
#include "besselsum/special.hpp"

namespace besselsum::identities {

using summation::ExponentialMajorant;
using summation::LatticeMajorant;
using summation::Term;
using summation::TruncatedSum;

namespace {

void require_positive_tol(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw DomainError("tol must be a positive finite number");
}

void require_right_half_plane(Complex t, const char* name) {
  if (!(t.real() > 0.0) || !std::isfinite(t.imag())) {
    throw DomainError(std::string(name) + " must have positive real part");
  }
}

std::vector<double> rk_values(int k, std::size_t n_max) {
  const arith::ArithmeticSequence seq = arith::rk_table(k, std::max<std::size_t>(n_max, 1));
  std::vector<double> out(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) out[n - 1] = seq[n].real();
  return out;
}

Term make_term(Complex factor, double base, double base_error) {
  const Complex value = factor * base;
  return {value, std::abs(factor) * base_error + 4.0 * kEps * std::abs(value)};
}

Term make_term(Complex factor, Complex base, double base_error) {
  const Complex value = factor * base;
  return {value, std::abs(factor) * base_error + 4.0 * kEps * std::abs(value)};
}

/// e^{-a c (u + z)} I_nu(2 a c sqrt(u z)), computed as
/// e^{-a Re c (sqrt u - sqrt z)^2} e^{-i a Im c (u + z)} * scaled I.
EvalResult<Complex> combined_i(double nu, double a, Complex c, double u, double z) {
  const double gap = std::sqrt(u) - std::sqrt(z);
  const double modulus = std::exp(-a * c.real() * gap * gap);
  const Complex phase = std::polar(1.0, -a * c.imag() * (u + z));
  const auto scaled = special::bessel_i_scaled(nu, 2.0 * a * c * std::sqrt(u * z));
  return {modulus * phase * scaled.value, modulus * scaled.abs_error_bound};
}

/// Constant C with |e^{-a c (u + z)} I_nu(2 a c sqrt(u z))| <= C e^{-(a Re c / 2) u}.
double combined_i_constant(double a, Complex c, double z) {
  const double re = c.real();
  return std::exp(2.0 * a * std::norm(c) * z / re - a * re * z);
}

Side side_from(const TruncatedSum& sum, Complex offset, Complex scale = 1.0) {
  Side side;
  side.value = scale * (offset + sum.value);
  side.error = std::abs(scale) * (sum.total_error() + 8.0 * kEps * std::abs(offset));
  side.terms = sum.terms_used;
  side.magnitude = std::abs(scale) * (std::abs(offset) + sum.magnitude);
  return side;
}

ParamList with_t(ParamList params, const char* name, Complex t) {
  params.emplace_back(std::string(name) + "_re", t.real());
  params.emplace_back(std::string(name) + "_im", t.imag());
  return params;
}

}  // namespace

IdentityReport popov(int k, double z, Complex t, double tol) {
  if (k < 2) throw DomainError("popov needs k >= 2");
  if (!(z >= 0.0) || !std::isfinite(z)) throw DomainError("popov needs z >= 0");
  require_right_half_plane(t, "t");
  require_positive_tol(tol);

  const double nu = 0.5 * k - 1.0;
  const double gamma_half_k = special::gamma_real(0.5 * k).value;
  const double lead = std::pow(kPi, nu) * std::pow(z, nu / 2.0) / gamma_half_k;
  const double coefficient_bound = std::pow(3.0, k);
  const double growth = 0.5 * k - nu / 2.0;

  const ExponentialMajorant lhs_major{kPi * t.real(), coefficient_bound, growth};
  const Complex c = 1.0 / t;
  const double c_abs = std::abs(c);
  const ExponentialMajorant rhs_major{kPi * c.real() / 2.0,
                                      coefficient_bound * combined_i_constant(kPi, c, z), growth};
  const double rhs_tol = tol / c_abs;
  const std::size_t n_max = std::max(summation::exponential_truncation(lhs_major, tol),
                                     summation::exponential_truncation(rhs_major, rhs_tol));
  const std::vector<double> r = rk_values(k, n_max);

  const TruncatedSum lhs_sum = summation::sum_exponential(
      [&](std::int64_t n) {
        const double dn = static_cast<double>(n);
        if (r[n - 1] == 0.0) return Term{};
        const auto j = special::bessel_j(nu, 2.0 * kPi * std::sqrt(dn * z));
        const Complex factor = r[n - 1] * std::pow(dn, -nu / 2.0) * std::exp(-kPi * dn * t);
        return make_term(factor, j.value, j.abs_error_bound);
      },
      lhs_major, tol);

  const TruncatedSum rhs_sum = summation::sum_exponential(
      [&](std::int64_t n) {
        const double dn = static_cast<double>(n);
        if (r[n - 1] == 0.0) return Term{};
        const auto i = combined_i(nu, kPi, c, dn, z);
        return make_term(r[n - 1] * std::pow(dn, -nu / 2.0), i.value, i.abs_error_bound);
      },
      rhs_major, rhs_tol);
  const Complex rhs_lead = std::exp(-kPi * z * c) * lead * std::pow(c, nu);

  ParamList params{{"k", static_cast<std::int64_t>(k)}, {"z", z}};
  params = with_t(std::move(params), "t", t);
  params.emplace_back("tol", tol);
  return make_report("popov", std::move(params), side_from(lhs_sum, lead), side_from(rhs_sum, rhs_lead, c));
}

IdentityReport theta(int k, Complex y, double tol) {
  if (k < 1) throw DomainError("theta needs k >= 1");
  require_right_half_plane(y, "y");
  require_positive_tol(tol);

  const Complex inv = 1.0 / y;
  const Complex scale = std::pow(y, -0.5 * k);
  const double coefficient_bound = std::pow(3.0, k);
  const ExponentialMajorant lhs_major{kPi * y.real(), coefficient_bound, 0.5 * k};
  const ExponentialMajorant rhs_major{kPi * inv.real(), coefficient_bound, 0.5 * k};
  const double rhs_tol = tol / std::abs(scale);
  const std::size_t n_max = std::max(summation::exponential_truncation(lhs_major, tol),
                                     summation::exponential_truncation(rhs_major, rhs_tol));
  const std::vector<double> r = rk_values(k, n_max);

  auto series = [&](Complex argument, const ExponentialMajorant& major, double series_tol) {
    return summation::sum_exponential(
        [&](std::int64_t n) {
          if (r[n - 1] == 0.0) return Term{};
          return make_term(std::exp(-kPi * static_cast<double>(n) * argument), r[n - 1], 0.0);
        },
        major, series_tol);
  };
  const TruncatedSum lhs_sum = series(y, lhs_major, tol);
  const TruncatedSum rhs_sum = series(inv, rhs_major, rhs_tol);

  ParamList params{{"k", static_cast<std::int64_t>(k)}};
  params = with_t(std::move(params), "y", y);
  params.emplace_back("tol", tol);
  return make_report("theta", std::move(params), side_from(lhs_sum, 1.0),
                     side_from(rhs_sum, 1.0, scale));
}

IdentityReport cn(const summation::FunctionalEquationInstance& instance, double q, double x, double tol,
                  ParamList extra_params, double snap) {
  if (!(q >= 0.0) || !std::isfinite(q)) throw DomainError("cn needs q >= 0");
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("cn needs x > 0");
  require_positive_tol(tol);

  const TruncatedSum d = summation::D_q(instance, q, x, tol, snap);
  const Complex a = summation::A_q(instance, q, x, snap);
  const Complex closed = instance.q_closed(q, x);

  Side lhs{a, 0.0, 0, std::abs(a)};
  Side rhs = side_from(d, closed);
  rhs.error += 8.0 * kEps * std::abs(closed);

  ParamList params{{"instance", instance.name}, {"q", q}, {"x", x}};
  for (auto& p : extra_params) params.push_back(std::move(p));
  params.emplace_back("tol", tol);
  return make_report("cn", std::move(params), lhs, rhs,
                     d.tail_kind == summation::TailKind::Certified);
}

namespace {

/// int_0^x u^{nu/2} J_nu(2 pi sqrt(n u)) e^{-pi s u} du.
EvalResult<double> voronoi_term_integral(double nu, double s, double x, double n) {
  const double rho = s * std::sqrt(x / n);
  const double y = 2.0 * kPi * std::sqrt(n * x);
  if (rho > 0.25) {
    double j_error = 0.0;
    const double freq = 2.0 * kPi * std::sqrt(n);
    auto integrand = [&](double v) {
      const auto j = special::bessel_j(nu, freq * v);
      const double scale = 2.0 * std::pow(v, nu + 1.0) * std::exp(-kPi * s * v * v);
      j_error = std::max(j_error, scale * j.abs_error_bound);
      return scale * j.value;
    };
    const double v_max = std::sqrt(x);
    const auto rough = summation::gauss_kronrod_15(integrand, 0.0, v_max);
    const auto result =
        summation::quadrature(integrand, 0.0, v_max, 1e-12 * (1.0 + std::abs(rough.kronrod)));
    return {result.value, result.abs_error_bound + j_error * v_max};
  }

  // Repeated integration by parts:
  //   e^{-pi s x} x^{nu/2} / (pi s) * sum_{j>=1} rho^j J_{nu+j}(y).
  const auto first = special::bessel_j(nu + 1.0, y);
  const auto second = special::bessel_j(nu + 2.0, y);
  double previous = first.value;
  double previous_error = first.abs_error_bound;
  double current = second.value;
  double current_error = second.abs_error_bound;
  double sum = rho * previous + rho * rho * current;
  double abs_sum = std::abs(rho * previous) + std::abs(rho * rho * current);
  double error = rho * previous_error + rho * rho * current_error;
  double rho_power = rho * rho;
  double remaining = 0.0;
  const double log_half_y = std::log(y / 2.0);
  for (int j = 2; j < 2000; ++j) {
    // Bound on sum_{i > j} rho^i |J_{nu+i}(y)|.
    remaining = rho_power * rho / (1.0 - rho);
    const double order_next = nu + j + 1.0;
    const double ratio = rho * y / (2.0 * (order_next + 1.0));
    if (ratio < 1.0) {
      const double power_bound =
          rho_power * rho * std::exp(order_next * log_half_y - std::lgamma(order_next + 1.0));
      remaining = std::min(remaining, power_bound / (1.0 - ratio));
    }
    if (remaining <= 1e-18 * abs_sum) break;
    const double order = nu + j;
    double next;
    double next_error;
    if (order_next < y) {
      const double factor = 2.0 * order / y;
      next = factor * current - previous;
      next_error = factor * current_error + previous_error +
                   2.0 * kEps * (factor * std::abs(current) + std::abs(previous));
    } else {
      const auto direct = special::bessel_j_series(order_next, y);
      next = direct.value;
      next_error = direct.abs_error_bound;
    }
    previous = current;
    previous_error = current_error;
    current = next;
    current_error = next_error;
    rho_power *= rho;
    sum += rho_power * current;
    abs_sum += std::abs(rho_power * current);
    error += rho_power * current_error;
  }
  const double prefactor = std::exp(-kPi * s * x) * std::pow(x, nu / 2.0) / (kPi * s);
  return {prefactor * sum, prefactor * (error + remaining + 4.0 * kEps * abs_sum)};
}

}  // namespace

IdentityReport voronoi(int k, double s, double x, double tol) {
  if (k < 2) throw DomainError("voronoi needs k >= 2");
  if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("voronoi needs s > 0");
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("voronoi needs x > 0");
  if (std::abs(x - std::round(x)) <= summation::kDefaultSnap * x) {
    throw DomainError("voronoi needs a non-integer x");
  }
  require_positive_tol(tol);
  const double nu = 0.5 * k - 1.0;
  const double half_k = 0.5 * k;

  // Left side: finite sum.
  const auto n_left = static_cast<std::size_t>(std::floor(x));
  Complex left = 0.0;
  double left_magnitude = 0.0;
  if (n_left > 0) {
    const std::vector<double> r = rk_values(k, n_left);
    for (std::size_t n = 1; n <= n_left; ++n) {
      const double term = r[n - 1] * std::exp(-kPi * static_cast<double>(n) * s);
      left += term;
      left_magnitude += std::abs(term);
    }
  }
  Side lhs{left, 4.0 * kEps * left_magnitude, n_left, left_magnitude};

  // Main term: pi^{k/2}/Gamma(k/2) * 2 int_0^{sqrt x} v^{k-1} e^{-pi s v^2} dv.
  const double main_scale = std::pow(kPi, half_k) / special::gamma_real(half_k).value;
  const auto main_integral = summation::quadrature(
      [&](double v) { return 2.0 * std::pow(v, k - 1.0) * std::exp(-kPi * s * v * v); }, 0.0,
      std::sqrt(x), 0.1 * tol / main_scale);
  const double main_term = main_scale * main_integral.value;

  // Bessel series: pi sum_n r_k(n) n^{-nu/2} int_0^x u^{nu/2} J_nu(2 pi sqrt(n u)) e^{-pi s u} du.
  std::vector<double> r_cache;
  auto batch = [&](std::size_t first, std::size_t last, std::vector<Term>& out) {
    if (r_cache.size() < last) r_cache = rk_values(k, last);
    for (std::size_t n = first; n <= last; ++n) {
      if (r_cache[n - 1] == 0.0) {
        out.push_back({});
        continue;
      }
      const double dn = static_cast<double>(n);
      const auto integral = voronoi_term_integral(nu, s, x, dn);
      out.push_back(make_term(kPi * r_cache[n - 1] * std::pow(dn, -nu / 2.0), integral.value,
                              integral.abs_error_bound));
    }
  };
  const TruncatedSum series = summation::smoothed_sum(batch, tol);

  Side rhs = side_from(series, -1.0 + main_term);
  rhs.error += main_scale * main_integral.abs_error_bound;

  ParamList params{{"k", static_cast<std::int64_t>(k)}, {"s", s}, {"x", x}, {"tol", tol}};
  return make_report("voronoi", std::move(params), lhs, rhs,
                     series.tail_kind == summation::TailKind::Certified);
}

IdentityReport odd_char(const characters::DirichletCharacter& chi, double z, Complex t, double tol) {
  if (!chi.is_odd() || !chi.is_primitive()) throw DomainError("odd-char needs an odd primitive character");
  if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("odd-char needs z > 0");
  require_right_half_plane(t, "t");
  require_positive_tol(tol);

  const std::int64_t modulus = chi.modulus();
  const double qd = static_cast<double>(modulus);
  const Complex tau = characters::gauss_sum(chi);
  const Complex l0 = characters::L_zero(chi);
  const Complex l1 = characters::L_one(chi);
  const Complex c = 1.0 / t;

  const ExponentialMajorant lhs_major{kPi * t.real(), 1.0, 1.0};
  const Complex series_scale = Complex(0.0, -2.0) * tau * c / qd;
  const ExponentialMajorant rhs_major{2.0 * kPi * c.real() / qd, combined_i_constant(4.0 * kPi, c, z), 1.0};
  const double rhs_tol = tol / std::abs(series_scale);
  const std::size_t n_max = std::max(summation::exponential_truncation(lhs_major, tol),
                                     summation::exponential_truncation(rhs_major, rhs_tol));
  const auto d = arith::d_chi_table(chi, n_max);
  const auto d_bar = arith::d_chi_table(chi.conjugate(), n_max);

  const TruncatedSum lhs_sum = summation::sum_exponential(
      [&](std::int64_t n) {
        const double dn = static_cast<double>(n);
        const auto j = special::bessel_j(0.0, 4.0 * kPi * std::sqrt(dn * z));
        return make_term(d[static_cast<std::size_t>(n)] * std::exp(-kPi * dn * t), j.value,
                         j.abs_error_bound);
      },
      lhs_major, tol);
  const TruncatedSum rhs_sum = summation::sum_exponential(
      [&](std::int64_t n) {
        const auto i = combined_i(0.0, 4.0 * kPi, c, static_cast<double>(n) / qd, z);
        return make_term(d_bar[static_cast<std::size_t>(n)], i.value, i.abs_error_bound);
      },
      rhs_major, rhs_tol);

  const Complex constant = -0.5 * l0 + l1 * c / kPi * std::exp(-4.0 * kPi * z * c);
  Side rhs = side_from(rhs_sum, 0.0, series_scale);
  rhs.value += constant;
  rhs.error += 8.0 * kEps * std::abs(constant);
  rhs.magnitude += std::abs(constant);

  ParamList params{{"q", modulus}, {"chi", static_cast<std::int64_t>(chi.index())}, {"z", z}};
  params = with_t(std::move(params), "t", t);
  params.emplace_back("tol", tol);
  return make_report("odd-char", std::move(params), side_from(lhs_sum, 0.0), rhs);
}

namespace {

void require_open_unit(const Rational& theta) {
  if (!(theta.num > 0 && theta.num < theta.den)) throw DomainError("theta must lie in (0, 1)");
}

/// Majorant shared by the J_0 divisor-sum series.
ExponentialMajorant divisor_series_majorant(Complex t, double constant) {
  return {kPi * t.real(), constant, 1.0};
}

Term divisor_series_term(double coefficient, std::int64_t n, double z, Complex t) {
  const double dn = static_cast<double>(n);
  if (coefficient == 0.0) return {};
  const auto j = special::bessel_j(0.0, 4.0 * kPi * std::sqrt(dn * z));
  return make_term(coefficient * std::exp(-kPi * dn * t), j.value, j.abs_error_bound);
}

/// sum_{m>=1, r>=0} [K(m (r + theta)) - K(m (r + 1 - theta))] with
/// K(u) = e^{-4 pi c (u + z)} I_0(8 pi c sqrt(u z)).
TruncatedSum sine_lattice(const Rational& theta, double z, Complex c, double tol) {
  const double den = static_cast<double>(theta.den);
  const double num = static_cast<double>(theta.num);
  const LatticeMajorant major{2.0 * kPi * c.real(),
                              std::min(num, den - num) / den,
                              2.0 * combined_i_constant(4.0 * kPi, c, z)};
  return summation::sum_double_exponential(
      [&](std::int64_t m, std::int64_t r) {
        const double dm = static_cast<double>(m);
        const double dr = static_cast<double>(r);
        const double u1 = dm * (dr * den + num) / den;
        const double u2 = dm * (dr * den + den - num) / den;
        const auto k1 = combined_i(0.0, 4.0 * kPi, c, u1, z);
        const auto k2 = combined_i(0.0, 4.0 * kPi, c, u2, z);
        const Complex value = k1.value - k2.value;
        return Term{value, k1.abs_error_bound + k2.abs_error_bound + 4.0 * kEps * std::abs(value)};
      },
      major, tol);
}

}  // namespace

IdentityReport sine(const Rational& theta_value, double z, Complex t, double tol) {
  require_open_unit(theta_value);
  if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("sine needs z > 0");
  require_right_half_plane(t, "t");
  require_positive_tol(tol);

  const ExponentialMajorant lhs_major = divisor_series_majorant(t, 1.0);
  const TruncatedSum lhs_sum = summation::sum_exponential(
      [&](std::int64_t n) {
        return divisor_series_term(arith::sine_divisor_sum(n, theta_value), n, z, t);
      },
      lhs_major, tol);

  const Complex c = 1.0 / t;
  const double cot = cot_pi_fraction(theta_value.num, theta_value.den);
  const double half_minus_theta = static_cast<double>(theta_value.den - 2 * theta_value.num) /
                                  (2.0 * static_cast<double>(theta_value.den));
  const Complex damping = c * std::exp(-4.0 * kPi * z * c);
  const Complex constant = -0.25 * cot + damping * half_minus_theta;
  const TruncatedSum lattice = sine_lattice(theta_value, z, c, tol / std::abs(c));

  Side rhs = side_from(lattice, 0.0, c);
  rhs.value += constant;
  rhs.error += 8.0 * kEps * std::abs(constant);
  rhs.magnitude += std::abs(constant);

  ParamList params{{"theta", theta_value.str()}, {"z", z}};
  params = with_t(std::move(params), "t", t);
  params.emplace_back("tol", tol);
  return make_report("sine", std::move(params), side_from(lhs_sum, 0.0), rhs);
}

std::vector<IdentityReport> character_reduction(std::int64_t q, std::int64_t a, double z, Complex t,
                                                double tol) {
  if (!characters::is_prime(q) || q < 3) throw DomainError("reduction needs an odd prime modulus");
  if (a <= 0 || a >= q) throw DomainError("reduction needs 0 < a < q");
  if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("reduction needs z > 0");
  require_right_half_plane(t, "t");
  require_positive_tol(tol);

  const Rational theta_value = Rational::make(a, q);
  const double qd = static_cast<double>(q);
  const auto odd = characters::odd_characters(q);
  const double phi = static_cast<double>(characters::euler_phi(q));
  const Complex c = 1.0 / t;

  std::vector<Complex> weight;
  std::vector<Complex> tau;
  for (const auto& chi : odd) {
    const Complex tau_bar = characters::gauss_sum(chi.conjugate());
    weight.push_back(chi(a) * tau_bar / Complex(0.0, phi));
    tau.push_back(characters::gauss_sum(chi));
  }

  auto base_params = [&](const char* part) {
    ParamList params{{"q", q}, {"a", a}, {"z", z}};
    params = with_t(std::move(params), "t", t);
    params.emplace_back("tol", tol);
    params.emplace_back("part", std::string(part));
    return params;
  };
  std::vector<IdentityReport> reports;

  // Character-averaged left sides against the sine divisor left side, on a
  // shared truncation point.
  {
    double weight_mass = 0.0;
    for (const Complex& w : weight) weight_mass += std::abs(w);
    const ExponentialMajorant major = divisor_series_majorant(t, std::max(1.0, weight_mass));
    const std::size_t n_max = summation::exponential_truncation(major, tol);
    std::vector<Complex> averaged(n_max + 1, 0.0);
    for (std::size_t j = 0; j < odd.size(); ++j) {
      const auto table = arith::d_chi_table(odd[j], n_max);
      for (std::size_t n = 1; n <= n_max; ++n) averaged[n] += weight[j] * table[n];
    }
    const TruncatedSum averaged_sum = summation::sum_exponential(
        [&](std::int64_t n) {
          const double dn = static_cast<double>(n);
          const auto j = special::bessel_j(0.0, 4.0 * kPi * std::sqrt(dn * z));
          return make_term(averaged[static_cast<std::size_t>(n)] * std::exp(-kPi * dn * t), j.value,
                           j.abs_error_bound);
        },
        major, tol);
    const TruncatedSum sine_sum = summation::sum_exponential(
        [&](std::int64_t n) {
          return divisor_series_term(arith::sine_divisor_sum(n, theta_value), n, z, t);
        },
        major, tol);
    reports.push_back(make_report("reduction", base_params("lhs"), side_from(averaged_sum, 0.0),
                                  side_from(sine_sum, 0.0)));
  }

  // Constant and linear terms.
  {
    Complex l0_average = 0.0;
    Complex l1_average = 0.0;
    double l0_magnitude = 0.0;
    double l1_magnitude = 0.0;
    for (std::size_t j = 0; j < odd.size(); ++j) {
      const Complex l0 = weight[j] * characters::L_zero(odd[j]);
      const Complex l1 = weight[j] * characters::L_one(odd[j]);
      l0_average += l0;
      l1_average += l1;
      l0_magnitude += std::abs(l0);
      l1_magnitude += std::abs(l1);
    }
    const double half_cot = 0.5 * cot_pi_fraction(a, q);
    const double linear = kPi * static_cast<double>(q - 2 * a) / (2.0 * qd);
    reports.push_back(make_report("reduction", base_params("l0"), {l0_average, 0.0, odd.size(), l0_magnitude},
                                  {half_cot, 0.0, 1, std::abs(half_cot)}));
    reports.push_back(make_report("reduction", base_params("l1"), {l1_average, 0.0, odd.size(), l1_magnitude},
                                  {linear, 0.0, 1, std::abs(linear)}));
  }

  // Averaged I_0 series against its (m, r) rearrangement.
  {
    const ExponentialMajorant major{2.0 * kPi * c.real() / qd, combined_i_constant(4.0 * kPi, c, z), 1.0};
    const std::size_t n_max = summation::exponential_truncation(major, tol);
    std::vector<Complex> coefficient(n_max + 1, 0.0);
    for (std::size_t j = 0; j < odd.size(); ++j) {
      const auto table = arith::d_chi_table(odd[j].conjugate(), n_max);
      const Complex scale = weight[j] * Complex(0.0, -2.0) * tau[j] / qd;
      for (std::size_t n = 1; n <= n_max; ++n) coefficient[n] += scale * table[n];
    }
    const TruncatedSum averaged = summation::sum_exponential(
        [&](std::int64_t n) {
          const auto i = combined_i(0.0, 4.0 * kPi, c, static_cast<double>(n) / qd, z);
          return make_term(coefficient[static_cast<std::size_t>(n)], i.value, i.abs_error_bound);
        },
        major, tol);
    const TruncatedSum lattice = sine_lattice(theta_value, z, c, tol);
    reports.push_back(make_report("reduction", base_params("iseries"), side_from(averaged, 0.0),
                                  side_from(lattice, 0.0)));
  }
  return reports;
}

}  // namespace besselsum::identities
