#include "besselsum/summation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include "besselsum/arith.hpp"
#include "besselsum/numeric.hpp"

namespace besselsum::summation {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Neumaier-compensated complex accumulator.
class Accumulator {
 public:
  void add(Complex v) {
    add_part(re_, re_c_, v.real());
    add_part(im_, im_c_, v.imag());
    magnitude_ += std::abs(v);
  }
  Complex value() const { return {re_ + re_c_, im_ + im_c_}; }
  double magnitude() const { return magnitude_; }

 private:
  static void add_part(double& sum, double& comp, double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }

  double re_ = 0.0, re_c_ = 0.0, im_ = 0.0, im_c_ = 0.0, magnitude_ = 0.0;
};

}  // namespace

double upper_incomplete_gamma_bound(double s, double x) {
  if (!(s > 0.0) || !(x > 0.0)) throw DomainError("incomplete gamma bound needs s > 0, x > 0");
  const double log_lead = (s - 1.0) * std::log(x) - x;
  if (s <= 1.0) return std::exp(log_lead);
  if (x <= s - 1.0) return kInf;
  return std::exp(log_lead) / (1.0 - (s - 1.0) / x);
}

double exponential_tail_bound(const ExponentialMajorant& majorant, std::size_t n) {
  const double alpha = majorant.decay;
  const double g = majorant.growth;
  if (!(alpha > 0.0)) throw DomainError("exponential sum needs positive decay");
  if (n == 0) n = 1;
  const double dn = static_cast<double>(n);
  // m^g e^{-alpha m} is decreasing on [n, inf) once alpha n >= g.
  if (g > 0.0 && alpha * dn <= g) return kInf;
  const double gamma_tail = upper_incomplete_gamma_bound(g + 1.0, alpha * dn);
  return majorant.constant * gamma_tail * std::exp(-(g + 1.0) * std::log(alpha));
}

std::size_t exponential_truncation(const ExponentialMajorant& majorant, double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  constexpr std::size_t kCap = std::size_t{1} << 31;
  std::size_t hi = 1;
  while (!(exponential_tail_bound(majorant, hi) <= tol)) {
    if (hi >= kCap) throw BudgetExceeded("exponential truncation point out of range", 0.0, kInf);
    hi *= 2;
  }
  std::size_t lo = hi / 2;
  if (lo == 0) return hi;
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (exponential_tail_bound(majorant, mid) <= tol) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

TruncatedSum sum_exponential(const TermFn& term, const ExponentialMajorant& majorant, double tol) {
  const std::size_t n_max = exponential_truncation(majorant, tol);
  Accumulator acc;
  double eval_error = 0.0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const Term t = term(static_cast<std::int64_t>(n));
    acc.add(t.value);
    eval_error += t.error;
  }
  TruncatedSum out;
  out.value = acc.value();
  out.tail_bound = exponential_tail_bound(majorant, n_max);
  out.terms_used = n_max;
  out.eval_error = eval_error;
  out.magnitude = acc.magnitude();
  return out;
}

double lattice_tail_bound(const LatticeMajorant& majorant, double cutoff) {
  const double alpha = majorant.decay;
  const double theta0 = majorant.offset;
  if (!(theta0 > 0.0)) throw DomainError("lattice sum needs a positive offset");
  if (!(alpha > 0.0)) throw DomainError("lattice sum needs positive decay");
  const auto m_full = static_cast<std::int64_t>(std::floor(cutoff / theta0));
  double total = 0.0;
  for (std::int64_t m = 1; m <= m_full; ++m) {
    const double dm = static_cast<double>(m);
    const double r_min = std::max(0.0, std::floor(cutoff / dm - theta0) + 1.0);
    total += std::exp(-alpha * dm * (r_min + theta0)) / -std::expm1(-alpha * dm);
  }
  // Columns m > cutoff / theta0 lie entirely outside the region.
  total += std::exp(-alpha * theta0 * static_cast<double>(m_full + 1)) /
           (-std::expm1(-alpha * theta0) * -std::expm1(-alpha));
  return majorant.constant * total;
}

TruncatedSum sum_double_exponential(const LatticeTermFn& term, const LatticeMajorant& majorant,
                                    double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  double cutoff = 1.0 / majorant.decay;
  while (!(lattice_tail_bound(majorant, cutoff) <= tol)) {
    cutoff *= 1.25;
    if (cutoff > 1e9) throw BudgetExceeded("lattice truncation out of range", 0.0, kInf);
  }
  Accumulator acc;
  double eval_error = 0.0;
  std::size_t count = 0;
  const auto m_max = static_cast<std::int64_t>(std::floor(cutoff / majorant.offset));
  for (std::int64_t m = 1; m <= m_max; ++m) {
    const double dm = static_cast<double>(m);
    for (std::int64_t r = 0; dm * (static_cast<double>(r) + majorant.offset) <= cutoff; ++r) {
      const Term t = term(m, r);
      acc.add(t.value);
      eval_error += t.error;
      ++count;
    }
  }
  TruncatedSum out;
  out.value = acc.value();
  out.tail_bound = lattice_tail_bound(majorant, cutoff);
  out.terms_used = count;
  out.eval_error = eval_error;
  out.magnitude = acc.magnitude();
  return out;
}

// ---------------------------------------------------------------------------

namespace {

constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double abs_sum = std::abs(fc) * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    kronrod += kWgk[j] * (f1 + f2);
    abs_sum += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  const double value = kronrod * half;
  const double error = std::abs((kronrod - gauss) * half) + 50.0 * kEps * abs_sum * std::abs(half);
  return {a, b, value, error};
}

}  // namespace

PanelEstimate gauss_kronrod_15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  return {kronrod * half, gauss * half};
}

EvalResult<double> quadrature(const std::function<double(double)>& f, double a, double b, double tol,
                              const QuadratureOptions& options) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("quadrature needs finite a < b");
  }
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  std::priority_queue<Panel> panels;
  const Panel first = evaluate_panel(f, a, b);
  panels.push(first);
  double value = first.value;
  double error = first.error;
  std::size_t subdivisions = 0;
  while (error > tol) {
    if (subdivisions >= options.max_subdivisions) {
      throw BudgetExceeded("quadrature subdivision budget exhausted", value, error);
    }
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = evaluate_panel(f, worst.a, mid);
    const Panel right = evaluate_panel(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++subdivisions;
  }
  // Recompute from the panels to drop the drift of the running updates.
  value = 0.0;
  error = 0.0;
  while (!panels.empty()) {
    value += panels.top().value;
    error += panels.top().error;
    panels.pop();
  }
  return {value, error};
}

// ---------------------------------------------------------------------------

double smoothing_window(double rho) {
  if (rho <= 0.25) return 1.0;
  if (rho >= 1.0) return 0.0;
  const double s = (rho - 0.25) / 0.75;
  const double a = std::exp(-1.0 / (1.0 - s));
  const double b = std::exp(-1.0 / s);
  return a / (a + b);
}

TruncatedSum smoothed_sum(const TermBatchFn& terms, double tol, const SmoothingOptions& options) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  std::vector<Term> cache;
  std::size_t level_terms = std::max<std::size_t>(options.initial_terms, 16);
  Complex previous{};
  double previous_change = kInf;
  int level = 0;
  while (true) {
    if (level_terms > options.max_terms) {
      throw BudgetExceeded("smoothed truncation did not settle within the term budget", previous.real(),
                           previous_change);
    }
    if (cache.size() < level_terms) terms(cache.size() + 1, level_terms, cache);
    Accumulator acc;
    double eval_error = 0.0;
    const double scale = static_cast<double>(level_terms);
    for (std::size_t n = 1; n <= level_terms; ++n) {
      const double w = smoothing_window(std::sqrt(static_cast<double>(n) / scale));
      if (w == 0.0) continue;
      acc.add(w * cache[n - 1].value);
      eval_error += w * cache[n - 1].error;
    }
    const Complex current = acc.value();
    if (level > 0) {
      const double change = std::abs(current - previous);
      if (level > 1 && change <= tol && change <= previous_change) {
        TruncatedSum out;
        out.value = current;
        out.tail_bound = change;
        out.terms_used = level_terms;
        out.eval_error = eval_error;
        out.magnitude = acc.magnitude();
        out.tail_kind = TailKind::Estimated;
        return out;
      }
      previous_change = change;
    }
    previous = current;
    level_terms *= 4;
    ++level;
  }
}

// ---------------------------------------------------------------------------

FunctionalEquationInstance rk_instance(int k) {
  if (k < 1) throw DomainError("r_k instance needs k >= 1");
  FunctionalEquationInstance inst;
  inst.name = "r" + std::to_string(k);
  inst.lambda = [](std::int64_t n) { return kPi * static_cast<double>(n); };
  inst.mu = inst.lambda;
  inst.a_table = [k](std::size_t n_max) {
    const arith::ArithmeticSequence seq = arith::rk_table(k, n_max);
    std::vector<Complex> out(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) out[n - 1] = seq[n];
    return out;
  };
  inst.b_table = inst.a_table;
  const double half_k = 0.5 * k;
  inst.r = half_k;
  inst.q_closed = [half_k](double q, double x) {
    return Complex(-std::pow(x, q) / std::tgamma(q + 1.0) +
                   std::pow(x, half_k + q) / std::tgamma(half_k + q + 1.0));
  };
  inst.q0_derivative = [half_k](double x) {
    return Complex(std::pow(x, half_k - 1.0) / std::tgamma(half_k));
  };
  inst.phi_at_zero = -1.0;
  inst.beta = half_k + kGuardEpsilon;
  inst.growth_constant = std::pow(3.0, k);
  inst.growth_exponent = half_k;
  inst.b_tail_moment = [k, half_k](double n, double p) {
    if (!(p > half_k)) return kInf;
    const double h = std::sqrt(static_cast<double>(k)) / 2.0;
    const double ball = arith::rk_summatory_bound(k, 1.0) / std::pow(1.0 + h, k);
    return p * ball * std::pow(1.0 + h / std::sqrt(n), k) * std::pow(n, half_k - p) / (p - half_k);
  };
  return inst;
}

FunctionalEquationInstance dchi_instance(const characters::DirichletCharacter& chi) {
  if (!chi.is_odd() || !chi.is_primitive()) {
    throw DomainError("d_chi instance needs an odd primitive character");
  }
  const double q = static_cast<double>(chi.modulus());
  const double sqrt_q = std::sqrt(q);
  FunctionalEquationInstance inst;
  inst.name = "dchi" + std::to_string(chi.modulus()) + "_" + std::to_string(chi.index());
  inst.lambda = [sqrt_q](std::int64_t n) { return 2.0 * kPi * static_cast<double>(n) / sqrt_q; };
  inst.mu = inst.lambda;
  inst.a_table = [chi](std::size_t n_max) {
    const auto seq = arith::d_chi_table(chi, n_max);
    return std::vector<Complex>(seq.complex_values().begin(), seq.complex_values().end());
  };
  const Complex b_scale = Complex(0.0, -1.0) * characters::gauss_sum(chi) / sqrt_q;
  const characters::DirichletCharacter chi_bar = chi.conjugate();
  inst.b_table = [chi_bar, b_scale](std::size_t n_max) {
    const auto seq = arith::d_chi_table(chi_bar, n_max);
    std::vector<Complex> out(seq.complex_values().begin(), seq.complex_values().end());
    for (Complex& v : out) v *= b_scale;
    return out;
  };
  inst.r = 1.0;
  const Complex l0 = characters::L_zero(chi);
  const Complex l1 = characters::L_one(chi);
  inst.q_closed = [l0, l1, sqrt_q](double qq, double x) {
    return -0.5 * l0 * std::pow(x, qq) / std::tgamma(qq + 1.0) +
           (sqrt_q / (2.0 * kPi)) * l1 * std::pow(x, 1.0 + qq) / std::tgamma(qq + 2.0);
  };
  inst.q0_derivative = [l1, sqrt_q](double) { return (sqrt_q / (2.0 * kPi)) * l1; };
  inst.phi_at_zero = -0.5 * l0;
  inst.beta = 1.0 + kGuardEpsilon;
  inst.growth_constant = 1.0;
  inst.growth_exponent = 1.0;
  // |b(n)| <= d(n) and sum_{n <= u} d(n) <= u (1 + ln u).
  inst.b_tail_moment = [](double n, double p) {
    if (!(p > 1.0)) return kInf;
    const double pm1 = p - 1.0;
    return p * std::pow(n, -pm1) * ((1.0 + std::log(n)) / pm1 + 1.0 / (pm1 * pm1));
  };
  return inst;
}

namespace {

/// Largest n with lambda_n <= x (lambda increasing).
std::size_t count_below(const FunctionalEquationInstance& inst, double x) {
  std::size_t hi = 1;
  while (inst.lambda(static_cast<std::int64_t>(hi)) <= x) hi *= 2;
  std::size_t lo = hi / 2;
  if (lo == 0) return 0;
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (inst.lambda(static_cast<std::int64_t>(mid)) <= x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

/// Index n with |lambda_n - x| <= snap * x, or 0.
std::size_t jump_at(const FunctionalEquationInstance& inst, double x, double snap) {
  const double slack = snap * x;
  const std::size_t below = count_below(inst, x + slack);
  if (below == 0) return 0;
  return std::abs(inst.lambda(static_cast<std::int64_t>(below)) - x) <= slack ? below : 0;
}

}  // namespace

Complex A_q(const FunctionalEquationInstance& instance, double q, double x, double snap) {
  if (!(x > 0.0)) throw DomainError("A_q needs x > 0");
  if (!(q >= 0.0)) throw DomainError("A_q needs q >= 0");
  const std::size_t jump = q == 0.0 ? jump_at(instance, x, snap) : 0;
  const std::size_t count = jump != 0 ? jump : count_below(instance, x);
  if (count == 0) return 0.0;
  const std::vector<Complex> a = instance.a_table(count);
  Accumulator acc;
  for (std::size_t n = 1; n <= count; ++n) {
    if (q == 0.0) {
      acc.add(n == jump ? 0.5 * a[n - 1] : a[n - 1]);
    } else {
      const double gap = std::max(0.0, x - instance.lambda(static_cast<std::int64_t>(n)));
      acc.add(a[n - 1] * std::pow(gap, q));
    }
  }
  return acc.value() / std::tgamma(q + 1.0);
}

double convergence_threshold(const FunctionalEquationInstance& instance) {
  return 2.0 * instance.beta - instance.r - 1.5;
}

TruncatedSum D_q(const FunctionalEquationInstance& instance, double q, double x, double tol,
                 double snap, const SmoothingOptions& smoothing) {
  if (!(x > 0.0)) throw DomainError("D_q needs x > 0");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  if (q < convergence_threshold(instance)) {
    throw ConvergenceError("Bessel series for " + instance.name + " at q=" + std::to_string(q) +
                           " violates the convergence guard q >= " +
                           std::to_string(convergence_threshold(instance)));
  }
  if (q == 0.0 && jump_at(instance, x, snap) != 0) {
    throw ConvergenceError("Bessel series at q=0 is only boundedly convergent at a jump point");
  }
  const double order = instance.r + q;
  const double x_power = std::pow(x, order / 2.0);

  auto make_terms = [&](const std::vector<Complex>& b, std::size_t first, std::size_t last,
                        std::vector<Term>& out) {
    for (std::size_t n = first; n <= last; ++n) {
      const double mu = instance.mu(static_cast<std::int64_t>(n));
      const auto j = special::bessel_j(order, 2.0 * std::sqrt(mu * x));
      const Complex factor = b[n - 1] * (x_power * std::pow(mu, -order / 2.0));
      const Complex value = factor * j.value;
      out.push_back({value, std::abs(factor) * j.abs_error_bound + 4.0 * kEps * std::abs(value)});
    }
  };

  // Certified path: |J| <= kappa sqrt(2/(pi y)) with partial summation over
  // a bound on sum |b(n)|.
  const double mu1 = instance.mu(1);
  const double p = order / 2.0 + 0.25;
  constexpr std::size_t kCertifiedCap = 200000;
  for (std::size_t n_cut = 64; n_cut <= kCertifiedCap; n_cut *= 2) {
    const double dn = static_cast<double>(n_cut);
    const double moment = instance.b_tail_moment(dn, p);
    if (!std::isfinite(moment)) break;
    const double y_min = 2.0 * std::sqrt(instance.mu(static_cast<std::int64_t>(n_cut + 1)) * x);
    const double kappa = special::bessel_j_envelope_constant(order, y_min);
    // |term_n| <= |b(n)| * kappa x^{order/2 - 1/4} pi^{-1/2} mu_n^{-p}, mu_n = mu1 n.
    const double envelope =
        kappa * std::pow(x, order / 2.0 - 0.25) / std::sqrt(kPi) * std::pow(mu1, -p);
    const double tail = envelope * moment;
    if (tail <= 0.5 * tol) {
      const std::vector<Complex> b = instance.b_table(n_cut);
      std::vector<Term> terms;
      terms.reserve(n_cut);
      make_terms(b, 1, n_cut, terms);
      Accumulator acc;
      double eval_error = 0.0;
      for (const Term& t : terms) {
        acc.add(t.value);
        eval_error += t.error;
      }
      TruncatedSum out;
      out.value = acc.value();
      out.tail_bound = tail;
      out.terms_used = n_cut;
      out.eval_error = eval_error;
      out.magnitude = acc.magnitude();
      return out;
    }
  }

  std::vector<Complex> b_cache;
  auto batch = [&](std::size_t first, std::size_t last, std::vector<Term>& out) {
    if (b_cache.size() < last) b_cache = instance.b_table(last);
    make_terms(b_cache, first, last, out);
  };
  return smoothed_sum(batch, tol, smoothing);
}

// ---------------------------------------------------------------------------

std::string to_string(IntegralCase c) {
  switch (c) {
    case IntegralCase::SingleBessel: return "single-bessel";
    case IntegralCase::BesselPair: return "bessel-pair";
    case IntegralCase::SingleBesselModular: return "single-bessel-mod";
    case IntegralCase::BesselPairModular: return "bessel-pair-mod";
  }
  return "unknown";
}

IntegralCase parse_integral_case(const std::string& name) {
  for (IntegralCase c : {IntegralCase::SingleBessel, IntegralCase::BesselPair,
                         IntegralCase::SingleBesselModular, IntegralCase::BesselPairModular}) {
    if (to_string(c) == name) return c;
  }
  throw DomainError("unknown integral case '" + name + "'");
}

IdentityReport verify_integral_closed_form(IntegralCase which, const IntegralParams& params) {
  const double z = params.z;
  const double t = params.t;
  const double tol = params.tol;
  if (!(z > 0.0) || !(t > 0.0)) throw DomainError("integral checks need z > 0 and real t > 0");
  const bool modular = which == IntegralCase::SingleBesselModular || which == IntegralCase::BesselPairModular;
  const bool pair = which == IntegralCase::BesselPair || which == IntegralCase::BesselPairModular;
  if (!modular && (params.k < 2 || params.k > 8)) throw DomainError("k must be in 2..8");
  if (modular && params.modulus < 1) throw DomainError("modulus must be positive");
  if (pair && params.n < 1) throw DomainError("n must be >= 1");

  const double nu = modular ? 0.0 : 0.5 * params.k - 1.0;
  const double qd = static_cast<double>(params.modulus);
  const double nd = static_cast<double>(params.n);
  // Integrand in u: weight(u) * J(c sqrt(z u)) [* J(c sqrt(n u))] * e^{-decay u}.
  const double c = modular ? 4.0 * kPi / std::sqrt(qd) : 2.0 * kPi;
  const double decay = modular ? kPi * t / qd : kPi * t;
  const double weight_power = (!modular && !pair) ? nu / 2.0 : 0.0;

  // Remainder beyond U: |J| <= 1, so it is at most
  // int_U^inf u^{weight_power} e^{-decay u} du = Gamma(s, decay U) / decay^s.
  const double s = weight_power + 1.0;
  double upper = std::max(1.0, 2.0 * s / decay);
  double remainder = 0.0;
  while (true) {
    remainder = upper_incomplete_gamma_bound(s, decay * upper) / std::pow(decay, s);
    if (remainder <= 0.05 * tol) break;
    upper *= 1.25;
  }

  double j_error = 0.0;
  auto integrand = [&](double v) {
    const double u = v * v;
    const auto jz = special::bessel_j(nu, c * std::sqrt(z) * v);
    double value = jz.value;
    double err = jz.abs_error_bound;
    if (pair) {
      const auto jn = special::bessel_j(nu, c * std::sqrt(nd) * v);
      err = std::abs(jn.value) * err + std::abs(value) * jn.abs_error_bound;
      value *= jn.value;
    }
    const double scale = 2.0 * v * std::pow(u, weight_power) * std::exp(-decay * u);
    j_error = std::max(j_error, err * scale);
    return value * scale;
  };
  const double v_max = std::sqrt(upper);
  const auto quad = quadrature(integrand, 0.0, v_max, 0.5 * tol);
  Side lhs{quad.value, quad.abs_error_bound + remainder + j_error * v_max, 0, std::abs(quad.value)};

  double closed = 0.0;
  double closed_error = 0.0;
  switch (which) {
    case IntegralCase::SingleBessel:
      closed = std::pow(z, nu / 2.0) * std::exp(-kPi * z / t) / (kPi * std::pow(t, 0.5 * params.k));
      closed_error = 8.0 * kEps * std::abs(closed);
      break;
    case IntegralCase::SingleBesselModular:
      closed = qd / (kPi * t) * std::exp(-4.0 * kPi * z / t);
      closed_error = 8.0 * kEps * std::abs(closed);
      break;
    case IntegralCase::BesselPair:
    case IntegralCase::BesselPairModular: {
      const double gap = std::sqrt(nd) - std::sqrt(z);
      const double lead = modular ? qd / (kPi * t) : 1.0 / (kPi * t);
      const double expo = modular ? -4.0 * kPi * gap * gap / t : -kPi * gap * gap / t;
      const double arg = modular ? 8.0 * kPi * std::sqrt(nd * z) / t : 2.0 * kPi * std::sqrt(nd * z) / t;
      const auto scaled = special::bessel_i_scaled(nu, arg);
      const double prefactor = lead * std::exp(expo);
      closed = prefactor * scaled.value.real();
      closed_error = prefactor * scaled.abs_error_bound + 8.0 * kEps * std::abs(closed);
      break;
    }
  }
  Side rhs{closed, closed_error, 1, std::abs(closed)};

  ParamList plist{{"case", to_string(which)}};
  if (modular) {
    plist.emplace_back("q", params.modulus);
  } else {
    plist.emplace_back("k", static_cast<std::int64_t>(params.k));
  }
  if (pair) plist.emplace_back("n", params.n);
  plist.emplace_back("z", z);
  plist.emplace_back("t", t);
  plist.emplace_back("tol", tol);
  return make_report("integrals", std::move(plist), lhs, rhs);
}

}  // namespace besselsum::summation
