#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "numerosity/grounding.hpp"
#include "numerosity/numexpr.hpp"

namespace numerosity {

enum class SetKind {
  NatAll,
  NatPos,
  FinSet,
  Mod,
  Pow,
  PfinN,
  QInterval,  // (p, q]
  QPos,
  QAll,
  RInterval,  // [p, q)
  RPos,
  RAll,
  Shift,
  Union,
  Inter,
  Diff,
  Prod,
  FinMapsInto,
  UnitInterval01,
};

struct SetNode;
using SetExpr = std::shared_ptr<const SetNode>;

struct SetNode {
  SetKind kind;
  std::vector<mpq_class> elems;  // FinSet, kept sorted and unique
  long p = 0;                    // Mod modulus, Pow exponent, FinMapsInto k
  long i = 0;                    // Mod residue
  mpq_class lo, hi;              // interval bounds; lo is the Shift amount
  SetExpr l, r;                  // children (unary nodes use l)
};

// Constructors validate their arguments; Diff also demands a certified
// inclusion of the right operand in the left one.
namespace sets {
SetExpr nat_all();
SetExpr nat_pos();
SetExpr fin(std::vector<mpq_class> elems);
SetExpr mod(long p, long i);
SetExpr pow(long p);
SetExpr pfin_n();
SetExpr q_interval(mpq_class p, mpq_class q);
SetExpr q_pos();
SetExpr q_all();
SetExpr r_interval(mpq_class p, mpq_class q);
SetExpr r_pos();
SetExpr r_all();
SetExpr shift(mpq_class q, SetExpr e);
SetExpr union_(SetExpr l, SetExpr r);
SetExpr inter(SetExpr l, SetExpr r);
SetExpr diff(SetExpr l, SetExpr r);
SetExpr prod(SetExpr l, SetExpr r);
SetExpr maps(long k, SetExpr e);
SetExpr unit01();
}  // namespace sets

bool set_equal(const SetExpr& a, const SetExpr& b);

// Ground domain text: "N", "Q", "R", "P(N)", "maps", "(A x B)"; finite sets
// of naturals fit every domain and report "*".
std::string domain_of(const SetExpr& a);

enum class Tri { Yes, No, Undecided };
const char* to_string(Tri t);

Tri member(const mpq_class& x, const SetExpr& e);
Tri subset_certified(const SetExpr& a, const SetExpr& b);
bool disjoint_certified(const SetExpr& a, const SetExpr& b);
bool is_bounded(const SetExpr& a);

// Throws Uncompilable when no closed form is derivable.
CountingFn counting_fn(const SetExpr& a);
NumExpr num(const SetExpr& a);
StdPart measure(const SetExpr& a, const NumExpr& gamma, const AxiomTable& t);

// Literal |a cap {0..n(m)}| for sets of naturals (pairs for products, finite
// subsets for Pfin(N)). Throws IndexTooLarge for m > 3.
mpz_class enumerate_count(const SetExpr& a, int m);

// sum over b in B of 2^-(b+1)
mpq_class psi(const std::vector<mpz_class>& b);

std::string to_string(const SetExpr& a);

}  // namespace numerosity
