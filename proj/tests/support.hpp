#pragma once

#include <random>
#include <string>
#include <vector>

#include "numerosity/numexpr.hpp"
#include "numerosity/ordinal.hpp"

namespace testsupport {

using numerosity::Ordinal;
using numerosity::OrdTerm;

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// CNF with at most `terms` terms, coefficients in 1..max_coef and exponents
// nested to `depth` (depth 0 gives a natural number).
inline Ordinal random_ordinal(std::mt19937_64& rng, int depth, int terms = 4, long max_coef = 5) {
  if (depth == 0) return Ordinal::natural(uniform(rng, 0, max_coef));
  std::vector<Ordinal> exps;
  int k = static_cast<int>(uniform(rng, 0, terms));
  for (int i = 0; i < k; ++i) exps.push_back(random_ordinal(rng, depth - 1, terms, max_coef));
  std::sort(exps.begin(), exps.end(), [](const Ordinal& a, const Ordinal& b) { return b < a; });
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  std::vector<OrdTerm> out;
  for (auto& e : exps) out.push_back({e, uniform(rng, 1, max_coef)});
  return Ordinal::from_terms(std::move(out));
}

// c * alpha^i * beta^j summed over a few terms, divided by alpha^k.
inline numerosity::NumExpr random_numexpr(std::mt19937_64& rng) {
  using numerosity::NumExpr;
  NumExpr x(0L);
  int terms = static_cast<int>(uniform(rng, 1, 4));
  for (int t = 0; t < terms; ++t) {
    NumExpr m(mpq_class(uniform(rng, -6, 6), uniform(rng, 1, 3)));
    m = m * numerosity::nf_pow(NumExpr::alpha(), NumExpr(uniform(rng, 0, 2)));
    m = m * numerosity::nf_pow(NumExpr::beta(), NumExpr(uniform(rng, 0, 1)));
    x = x + m;
  }
  long k = uniform(rng, -2, 2);
  return x * numerosity::nf_pow(NumExpr::alpha(), NumExpr(k));
}

inline std::string random_signs(std::mt19937_64& rng, int max_len) {
  int len = static_cast<int>(uniform(rng, 0, max_len));
  std::string s;
  for (int i = 0; i < len; ++i) s += uniform(rng, 0, 1) ? '+' : '-';
  return s;
}

// Every sign string of length <= n.
inline std::vector<std::string> all_signs(int n) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < out.size(); ++i)
    if (static_cast<int>(out[i].size()) < n) {
      out.push_back(out[i] + '-');
      out.push_back(out[i] + '+');
    }
  return out;
}

}  // namespace testsupport
