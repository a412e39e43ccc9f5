#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "numerosity/ordinal.hpp"

namespace numerosity {

// Either a finite string over {'+','-'} or an all-plus expansion of ordinal
// length. Finite-length all-plus expansions are always stored as Finite.
class SignExpansion {
 public:
  SignExpansion() = default;
  static SignExpansion finite(std::string signs);
  static SignExpansion plus(const Ordinal& length);

  bool is_finite() const { return !ordinal_; }
  const std::string& signs() const { return signs_; }
  // Length for either representation.
  Ordinal length() const;

  bool operator==(const SignExpansion& o) const;
  bool operator!=(const SignExpansion& o) const { return !(*this == o); }

 private:
  bool ordinal_ = false;
  std::string signs_;
  Ordinal length_;
};

Ordering se_cmp(const SignExpansion& a, const SignExpansion& b);

// Dyadic rationals are plain mpq_class values with a power-of-two denominator.
bool is_dyadic(const mpq_class& q);
mpq_class se_value(const SignExpansion& a);
SignExpansion se_from_dyadic(const mpq_class& d);
Ordinal birthday(const SignExpansion& a);

struct Options {
  std::vector<SignExpansion> left, right;
};
Options options(const SignExpansion& x);

// Earliest-born number strictly between every a in A and every b in B.
// Throws NotSeparated when max A >= min B.
SignExpansion simplest(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b);

inline constexpr int kAddCap = 24;
inline constexpr int kMulCap = 16;

// Genetic operations on finite expansions; throw RecursionCapExceeded when
// the birthday sum exceeds the cap, Unsupported for ordinal expansions.
SignExpansion s_neg(const SignExpansion& x);
SignExpansion s_add(const SignExpansion& x, const SignExpansion& y, int cap = kAddCap);
SignExpansion s_mul(const SignExpansion& x, const SignExpansion& y, int cap = kMulCap);

// "()", "+-+", "plus(w^w*2 + 1)"
std::string to_string(const SignExpansion& a);
// "0", "3", "3/2^3"
std::string dyadic_to_string(const mpq_class& d);

}  // namespace numerosity
