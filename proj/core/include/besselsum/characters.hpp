#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "besselsum/types.hpp"

/// Dirichlet characters to prime moduli (plus the odd character mod 4),
/// Gauss sums, and the finite formulas for L(0, chi) and L(1, chi) of odd
/// primitive characters.
namespace besselsum::characters {

class DirichletCharacter {
 public:
  /// Builds a character from its full value table (index 0..q-1). Flags are
  /// derived from the table. Throws DomainError if the table is not a
  /// character (checked on the invariants that are cheap to check).
  DirichletCharacter(std::int64_t modulus, std::vector<Complex> values, bool is_primitive,
                     int index = 0);

  std::int64_t modulus() const { return modulus_; }
  /// Position in enumerate_characters(); 0 is the principal character.
  int index() const { return index_; }
  bool is_odd() const { return is_odd_; }
  bool is_primitive() const { return is_primitive_; }
  bool is_principal() const;

  Complex operator()(std::int64_t n) const;
  std::span<const Complex> values() const { return values_; }

  DirichletCharacter conjugate() const;

 private:
  std::int64_t modulus_;
  std::vector<Complex> values_;
  bool is_odd_ = false;
  bool is_primitive_ = false;
  int index_ = 0;
};

bool is_prime(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
/// Smallest primitive root modulo the prime q.
std::int64_t primitive_root(std::int64_t q);

/// All q-1 characters modulo the prime q, chi_j(g^t) = e^{2 pi i j t/(q-1)}.
std::vector<DirichletCharacter> enumerate_characters(std::int64_t q);
/// The odd (non-principal) characters of enumerate_characters(q).
std::vector<DirichletCharacter> odd_characters(std::int64_t q);
/// The non-principal character modulo 4.
DirichletCharacter odd_character_mod4();

/// tau(chi) = sum_{h=1}^{q-1} chi(h) e^{2 pi i h/q}.
Complex gauss_sum(const DirichletCharacter& chi);

/// L(0, chi) from the finite cotangent sum. chi must be odd and primitive.
Complex L_zero(const DirichletCharacter& chi);
/// L(1, chi) from the finite sum over h of conj(chi)(h) (1/2 - h/q).
Complex L_one(const DirichletCharacter& chi);

/// sum over odd chi mod q of chi(a) conj(chi)(h).
Complex odd_orthogonality(std::int64_t q, std::int64_t a, std::int64_t h);

/// |sin(2 pi n a/q) - (1/(i phi(q))) sum_{chi odd} chi(a) tau(conj chi) chi(n)|.
double sine_decomposition_check(std::int64_t q, std::int64_t a, std::int64_t n);

}  // namespace besselsum::characters
