#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "numerosity/errors.hpp"
#include "numerosity/ordinal.hpp"

namespace numerosity {

enum class Gen { Alpha = 0, Beta = 1, Beth1 = 2, X2W = 3 };
inline constexpr int kGenCount = 4;

// Product of generator powers. Exponents are rational for alpha and integral
// for the others; the omega factor carries an infinite CNF exponent or 0 for
// "absent". Finite omega powers never appear here: they are expanded through
// w = alpha + 1.
struct Monomial {
  std::array<mpq_class, kGenCount> e{};
  Ordinal omega;

  static Monomial unit() { return Monomial{}; }
  static Monomial gen(Gen g, const mpq_class& k = 1);
  static Monomial omega_pow(const Ordinal& gamma);

  bool is_unit() const;
  bool alpha_only() const;
  const mpq_class& exp(Gen g) const { return e[static_cast<int>(g)]; }
  mpq_class& exp(Gen g) { return e[static_cast<int>(g)]; }

  bool operator==(const Monomial& o) const;
  bool operator!=(const Monomial& o) const { return !(*this == o); }
};

Monomial operator*(const Monomial& a, const Monomial& b);

// Lexicographic monomial order (omega, beth1, X, beta, alpha); compatible
// with multiplication. Used for canonical term order and division.
Ordering lex_cmp(const Monomial& a, const Monomial& b);

struct LexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return lex_cmp(a, b) == Ordering::Greater;
  }
};

// Terms sorted in descending lex order, no zero coefficients.
using Poly = std::map<Monomial, mpq_class, LexDesc>;

class NumExpr {
 public:
  NumExpr() : den_{{Monomial::unit(), mpq_class(1)}} {}
  NumExpr(long v);  // NOLINT(google-explicit-constructor)
  explicit NumExpr(const mpq_class& v);
  static NumExpr from_poly(Poly num, Poly den);
  static NumExpr monomial(const Monomial& m, const mpq_class& c = 1);
  static NumExpr alpha() { return monomial(Monomial::gen(Gen::Alpha)); }
  static NumExpr beta() { return monomial(Monomial::gen(Gen::Beta)); }
  static NumExpr beth1() { return monomial(Monomial::gen(Gen::Beth1)); }
  static NumExpr x2w() { return monomial(Monomial::gen(Gen::X2W)); }
  // omega = alpha + 1
  static NumExpr omega();

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.empty(); }
  bool is_polynomial() const;
  std::optional<mpq_class> as_rational() const;

 private:
  void canonicalize();
  Poly num_;
  Poly den_;
};

NumExpr nf_add(const NumExpr& a, const NumExpr& b);
NumExpr nf_sub(const NumExpr& a, const NumExpr& b);
NumExpr nf_mul(const NumExpr& a, const NumExpr& b);
NumExpr nf_div(const NumExpr& a, const NumExpr& b);
NumExpr nf_neg(const NumExpr& a);
// Supported: integer exponents; alpha-monomial base with rational exponent;
// base 2 with exponent alpha + c; omega-power base with an embedded ordinal
// exponent. Throws Unsupported otherwise.
NumExpr nf_pow(const NumExpr& base, const NumExpr& exp);
// Exact identity by cross-multiplication.
bool nf_equal(const NumExpr& a, const NumExpr& b);

inline NumExpr operator+(const NumExpr& a, const NumExpr& b) { return nf_add(a, b); }
inline NumExpr operator-(const NumExpr& a, const NumExpr& b) { return nf_sub(a, b); }
inline NumExpr operator*(const NumExpr& a, const NumExpr& b) { return nf_mul(a, b); }
inline NumExpr operator/(const NumExpr& a, const NumExpr& b) { return nf_div(a, b); }
inline NumExpr operator-(const NumExpr& a) { return nf_neg(a); }

NumExpr embed(const Ordinal& o);
// Inverse of embed on its image.
std::optional<Ordinal> unembed(const NumExpr& x);

// A declared strict order between monomials. With alpha_schema set the left
// side stands for every power alpha^q ("alpha^k < m").
struct DeclaredOrder {
  Monomial lhs;
  Monomial rhs;
  bool alpha_schema = false;
};

class AxiomTable {
 public:
  bool bb_mode() const { return bb_mode_; }
  AxiomTable with_bb_mode(bool on) const;
  // Returns a new table; throws InconsistentAxiom when the built-in rules or
  // the existing declarations already decide lhs >= rhs.
  AxiomTable with_order(const DeclaredOrder& d) const;
  const std::vector<DeclaredOrder>& declared() const { return declared_; }

 private:
  bool bb_mode_ = false;
  std::vector<DeclaredOrder> declared_;
};

enum class CmpKind { Less, Equal, Greater, Unknown };

struct CmpResult {
  CmpKind kind;
  std::string reason;  // set for Unknown
  bool decided() const { return kind != CmpKind::Unknown; }
};

const char* to_string(CmpKind k);

// Magnitude comparison of two monomials (both read as positive quantities).
CmpResult mono_cmp(const Monomial& a, const Monomial& b, const AxiomTable& t);
// Sign of a polynomial: Greater (> 0), Less (< 0), Equal (zero) or Unknown.
CmpResult poly_sign(const Poly& p, const AxiomTable& t);
CmpResult nf_cmp(const NumExpr& a, const NumExpr& b, const AxiomTable& t);

struct StdPart {
  enum class Kind { Finite, PlusInfinity, MinusInfinity, Unknown } kind;
  mpq_class value;
  std::string reason;
  bool operator==(const StdPart& o) const {
    return kind == o.kind && (kind != Kind::Finite || value == o.value);
  }
};

std::string to_string(const StdPart& s);

StdPart standard_part(const NumExpr& a, const AxiomTable& t);
// Throws NonPositiveGamma unless gamma > 0 is decided.
StdPart gamma_measure(const NumExpr& numA, const NumExpr& gamma, const AxiomTable& t);

// Rewrites beth1 to beta + X (bb mode input rule).
NumExpr apply_bb(const NumExpr& x);
// Display form in bb mode: beta shown as beth1 - X.
NumExpr bb_display(const NumExpr& x);

std::string to_string(const Monomial& m);
// Reason-text form: X is written 2^w.
std::string reason_name(const Monomial& m);
std::string to_string(const Poly& p);
std::string to_string(const NumExpr& x);
// {"num":[["2","alpha^2"],["1","1"]],"den":[["1","1"]]}
std::string to_json(const NumExpr& x);

}  // namespace numerosity
