#include "besselsum/characters.hpp"

#include <cmath>
#include <string>

#include "besselsum/numeric.hpp"

namespace besselsum::characters {

DirichletCharacter::DirichletCharacter(std::int64_t modulus, std::vector<Complex> values,
                                       bool is_primitive, int index)
    : modulus_(modulus), values_(std::move(values)), is_primitive_(is_primitive), index_(index) {
  if (modulus_ < 1 || static_cast<std::int64_t>(values_.size()) != modulus_) {
    throw DomainError("character table size must equal the modulus");
  }
  if (modulus_ > 1 && std::abs(values_[1] - Complex(1.0)) > 1e-12) {
    throw DomainError("character must satisfy chi(1) = 1");
  }
  is_odd_ = modulus_ > 2 && std::abs(values_[modulus_ - 1] + Complex(1.0)) < 1e-12;
}

bool DirichletCharacter::is_principal() const {
  for (std::int64_t n = 1; n < modulus_; ++n) {
    if (values_[n] != Complex(0.0) && values_[n] != Complex(1.0)) return false;
  }
  return true;
}

Complex DirichletCharacter::operator()(std::int64_t n) const {
  std::int64_t r = n % modulus_;
  if (r < 0) r += modulus_;
  return values_[static_cast<std::size_t>(r)];
}

DirichletCharacter DirichletCharacter::conjugate() const {
  std::vector<Complex> conj(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) conj[i] = std::conj(values_[i]);
  int conj_index = index_;
  if (modulus_ > 2 && is_prime(modulus_)) {
    conj_index = static_cast<int>((modulus_ - 1 - index_) % (modulus_ - 1));
  }
  return DirichletCharacter(modulus_, std::move(conj), is_primitive_, conj_index);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::int64_t euler_phi(std::int64_t n) {
  if (n < 1) throw DomainError("euler_phi: argument must be positive");
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::int64_t primitive_root(std::int64_t q) {
  if (!is_prime(q)) throw DomainError("primitive_root: modulus must be prime");
  if (q == 2) return 1;
  for (std::int64_t g = 2; g < q; ++g) {
    // Exact order check: g^t != 1 for 0 < t < q-1.
    std::int64_t power = 1;
    std::int64_t order = 0;
    do {
      power = power * g % q;
      ++order;
    } while (power != 1);
    if (order == q - 1) return g;
  }
  throw DomainError("primitive_root: none found");
}

std::vector<DirichletCharacter> enumerate_characters(std::int64_t q) {
  if (!is_prime(q)) {
    throw DomainError("enumerate_characters: modulus " + std::to_string(q) + " is not prime");
  }
  const std::int64_t order = q - 1;
  const std::int64_t g = primitive_root(q);
  // Discrete logarithm table: log[g^t mod q] = t.
  std::vector<std::int64_t> dlog(static_cast<std::size_t>(q), -1);
  std::int64_t power = 1;
  for (std::int64_t t = 0; t < order; ++t) {
    dlog[static_cast<std::size_t>(power)] = t;
    power = power * g % q;
  }
  std::vector<DirichletCharacter> result;
  result.reserve(static_cast<std::size_t>(order));
  for (std::int64_t j = 0; j < order; ++j) {
    std::vector<Complex> values(static_cast<std::size_t>(q), Complex(0.0));
    for (std::int64_t n = 1; n < q; ++n) {
      values[static_cast<std::size_t>(n)] =
          root_of_unity(j * dlog[static_cast<std::size_t>(n)] % order, order);
    }
    result.emplace_back(q, std::move(values), /*is_primitive=*/j != 0, static_cast<int>(j));
  }
  return result;
}

std::vector<DirichletCharacter> odd_characters(std::int64_t q) {
  std::vector<DirichletCharacter> odd;
  for (auto& chi : enumerate_characters(q)) {
    if (chi.is_odd()) odd.push_back(std::move(chi));
  }
  return odd;
}

DirichletCharacter odd_character_mod4() {
  return DirichletCharacter(4, {0.0, 1.0, 0.0, -1.0}, /*is_primitive=*/true, 1);
}

Complex gauss_sum(const DirichletCharacter& chi) {
  const std::int64_t q = chi.modulus();
  Complex sum(0.0);
  for (std::int64_t h = 1; h < q; ++h) sum += chi(h) * root_of_unity(h, q);
  return sum;
}

namespace {

void require_odd_primitive(const DirichletCharacter& chi, const char* op) {
  if (!chi.is_odd() || !chi.is_primitive()) {
    throw DomainError(std::string(op) + ": character must be odd and primitive");
  }
}

}  // namespace

Complex L_zero(const DirichletCharacter& chi) {
  require_odd_primitive(chi, "L_zero");
  const std::int64_t q = chi.modulus();
  const DirichletCharacter conj = chi.conjugate();
  Complex sum(0.0);
  for (std::int64_t h = 1; h < q; ++h) {
    if (conj(h) == Complex(0.0)) continue;
    sum += conj(h) * cot_pi_fraction(h, q);
  }
  return Complex(0.0, 1.0) / (2.0 * gauss_sum(conj)) * sum;
}

Complex L_one(const DirichletCharacter& chi) {
  require_odd_primitive(chi, "L_one");
  const std::int64_t q = chi.modulus();
  const DirichletCharacter conj = chi.conjugate();
  Complex sum(0.0);
  for (std::int64_t h = 1; h < q; ++h) {
    sum += conj(h) * (0.5 - static_cast<double>(h) / static_cast<double>(q));
  }
  return Complex(0.0, kPi) / gauss_sum(conj) * sum;
}

Complex odd_orthogonality(std::int64_t q, std::int64_t a, std::int64_t h) {
  if (gcd(a, q) != 1 || gcd(h, q) != 1) {
    throw DomainError("odd_orthogonality: a and h must be units modulo q");
  }
  Complex sum(0.0);
  for (const auto& chi : odd_characters(q)) sum += chi(a) * std::conj(chi(h));
  return sum;
}

double sine_decomposition_check(std::int64_t q, std::int64_t a, std::int64_t n) {
  if (gcd(a, q) != 1) throw DomainError("sine_decomposition_check: a must be a unit modulo q");
  if (n < 1) throw DomainError("sine_decomposition_check: n must be positive");
  Complex sum(0.0);
  for (const auto& chi : odd_characters(q)) {
    sum += chi(a) * gauss_sum(chi.conjugate()) * chi(n);
  }
  const Complex rhs = sum / Complex(0.0, static_cast<double>(euler_phi(q)));
  return std::abs(Complex(sin_2pi_fraction(n * a % q, q)) - rhs);
}

}  // namespace besselsum::characters
