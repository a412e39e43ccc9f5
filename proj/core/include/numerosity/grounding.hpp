#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "numerosity/numexpr.hpp"

namespace numerosity {

enum class ChainKind { Nat, Rat, Real };

// n(m) = m!^(m!). Throws IndexTooLarge for m > 8 and std::invalid_argument
// for m < 1.
mpz_class chain_n(int m);

// |N+ cap lambda_m| for Nat, |Q cap (0,1] cap lambda_m| for Rat. Both equal
// n(m) from m = 2 on (the m = 1 rational grid is {-1, 0}); Real chains carry
// the formal seed size x and have no integer card.
mpz_class chain_label_card(ChainKind kind, int m);

// n^n_exp * x^x_exp * (2^n)^two_exp
struct CfMono {
  mpq_class n_exp;
  int x_exp = 0;
  int two_exp = 0;
};

// Graded order: 2^n first, then powers of n, then x.
struct CfMonoDesc {
  bool operator()(const CfMono& a, const CfMono& b) const;
};

// A closed-form counting function of the chain index, valid from m0 on.
struct CountingFn {
  std::map<CfMono, mpq_class, CfMonoDesc> terms;
  int m0 = 1;

  static CountingFn constant(const mpq_class& c);
  static CountingFn n_pow(const mpq_class& k = 1, const mpq_class& c = 1);
  static CountingFn x();
  static CountingFn two_n();
  bool is_zero() const { return terms.empty(); }
  bool has_x() const;
  bool has_two() const;
  bool operator==(const CountingFn& o) const;
};

CountingFn cf_add(const CountingFn& a, const CountingFn& b);
CountingFn cf_sub(const CountingFn& a, const CountingFn& b);
CountingFn cf_mul(const CountingFn& a, const CountingFn& b);
CountingFn cf_scale(const CountingFn& a, const mpq_class& s);

// Exact value at n = n(m). Throws NonIntegral if the value is not a
// nonnegative integer (wrong m0 or a malformed function), Unsupported when x
// occurs and IndexTooLarge when 2^n cannot be materialized (m > 3).
mpz_class cf_eval(const CountingFn& f, int m);

struct EventualCmp {
  enum class Kind { Less, Equal, Greater, Unknown } kind;
  int m0 = 0;
  std::string reason;
};

std::string to_string(const EventualCmp& r);

EventualCmp cf_compare(const CountingFn& f, const CountingFn& g);

// n -> alpha, x -> beta/alpha, 2^n -> X/2. Throws UnrecognizedBasis for
// negative powers of x or 2^n.
NumExpr lambda_limit(const CountingFn& f);

std::string to_string(const CountingFn& f);

}  // namespace numerosity
