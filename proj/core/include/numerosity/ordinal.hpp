#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "numerosity/errors.hpp"

namespace numerosity {

struct OrdTerm;

// An ordinal below epsilon_0 in hereditary Cantor normal form.
// Terms are stored with strictly decreasing exponents; the empty list is 0.
class Ordinal {
 public:
  Ordinal() = default;

  static Ordinal natural(const mpz_class& n);
  static Ordinal omega();
  // omega^e * c; c == 0 yields 0.
  static Ordinal omega_pow(const Ordinal& e, const mpz_class& c = 1);
  // Validates the CNF invariants and throws std::invalid_argument on failure.
  static Ordinal from_terms(std::vector<OrdTerm> terms);

  const std::vector<OrdTerm>& terms() const { return terms_; }
  bool is_zero() const;
  bool is_finite() const;
  // Throws std::domain_error if the ordinal is infinite.
  mpz_class finite_value() const;
  // Coefficient of omega^0 (0 if absent).
  mpz_class finite_part() const;
  const Ordinal& leading_exponent() const;
  // Nesting depth: 0 for naturals, 1 below omega^omega, ...
  int depth() const;

  bool operator==(const Ordinal& o) const;
  bool operator!=(const Ordinal& o) const { return !(*this == o); }
  bool operator<(const Ordinal& o) const;

 private:
  std::vector<OrdTerm> terms_;
};

struct OrdTerm {
  Ordinal exponent;
  mpz_class coef;
};

Ordering ord_cmp(const Ordinal& a, const Ordinal& b);

Ordinal cantor_add(const Ordinal& a, const Ordinal& b);
Ordinal cantor_mul(const Ordinal& a, const Ordinal& b);
Ordinal natural_add(const Ordinal& a, const Ordinal& b);
Ordinal natural_mul(const Ordinal& a, const Ordinal& b);

// Cantor exponentiation, total on the representable ordinals (0^0 = 1).
Ordinal ord_exp(const Ordinal& base, const Ordinal& exp);

// Throws ZeroArgument for 0.
bool is_indecomposable(const Ordinal& t);

// Canonical text: "w^(w+1)*2 + w + 1", "w^w", "w*3", "5", "0".
std::string to_string(const Ordinal& o);

}  // namespace numerosity
