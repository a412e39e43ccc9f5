#pragma once

// Literal membership for the natural-number fragment, written from the
// definitions and evaluated over {0..n}.

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <vector>

namespace oracle {

using Pred = std::function<bool(long)>;

inline Pred nat_all() { return [](long) { return true; }; }
inline Pred nat_pos() { return [](long x) { return x >= 1; }; }
inline Pred mod(long p, long i) { return [=](long x) { return x >= 1 && x % p == i; }; }
inline Pred pow(long p) {
  return [=](long x) {
    if (x < 1) return false;
    for (long j = 1;; ++j) {
      long v = 1;
      for (long k = 0; k < p; ++k) v *= j;
      if (v == x) return true;
      if (v > x) return false;
    }
  };
}
inline Pred fin(std::vector<long> elems) {
  return [=](long x) { return std::find(elems.begin(), elems.end(), x) != elems.end(); };
}
inline Pred set_union(Pred a, Pred b) { return [=](long x) { return a(x) || b(x); }; }
inline Pred set_inter(Pred a, Pred b) { return [=](long x) { return a(x) && b(x); }; }
inline Pred set_diff(Pred a, Pred b) { return [=](long x) { return a(x) && !b(x); }; }

inline long count(const Pred& p, long n) {
  long c = 0;
  for (long x = 0; x <= n; ++x) c += p(x);
  return c;
}

// m!^(m!) for small m
inline long chain_n(int m) {
  long f = 1;
  for (int k = 2; k <= m; ++k) f *= k;
  long n = 1;
  for (long k = 0; k < f; ++k) n *= f;
  return n;
}

// sum of 2^-(b+1) as a binary fraction over 64 bits
inline mpq_class psi_bits(const std::vector<unsigned>& b) {
  mpz_class num = 0;
  for (unsigned x : b) mpz_setbit(num.get_mpz_t(), 63 - x);
  mpq_class r(num, mpz_class(1) << 64);
  r.canonicalize();
  return r;
}

}  // namespace oracle
