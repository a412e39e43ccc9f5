#pragma once

#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "numerosity/errors.hpp"

namespace numerosity {

// A hereditarily finite set over natural atoms, or an atom.
struct Element {
  bool atom = false;
  long value = 0;                // atom value
  std::vector<Element> members;  // sorted, unique

  static Element make_atom(long v);
  static Element make_set(std::vector<Element> members);
  static Element empty() { return make_set({}); }

  bool contains(const Element& x) const;
  bool subset_of(const Element& b) const;
  int rank() const;

  bool operator==(const Element& o) const;
  bool operator!=(const Element& o) const { return !(*this == o); }
  bool operator<(const Element& o) const;
};

// "3", "{}", "{1,2}", "{{3},{3,4}}"
std::string to_string(const Element& e);
// Throws InstanceFormatError on malformed text.
Element parse_element(const std::string& text);

enum class MembershipMode { Literal, Grulla };

using ElemSet = std::set<Element>;

// Finite pivotal tree: universe, preorder (stored closed) and a partial
// successor map.
class PivotalTree {
 public:
  int add(const Element& e);  // idempotent, returns the id
  // Records a <= b and re-closes the relation.
  void declare_le(const Element& a, const Element& b);
  void declare_succ(const Element& a, const Element& b);
  void set_mode(MembershipMode m) { mode_ = m; }

  int size() const { return static_cast<int>(elems_.size()); }
  const Element& at(int id) const { return elems_.at(static_cast<std::size_t>(id)); }
  int id(const Element& e) const;  // throws UnknownElement
  bool has(const Element& e) const { return index_.count(e) > 0; }
  bool le(int a, int b) const { return le_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0; }
  bool equiv(int a, int b) const { return le(a, b) && le(b, a); }
  const std::multimap<int, int>& succ() const { return succ_; }
  MembershipMode mode() const { return mode_; }

 private:
  std::vector<Element> elems_;
  std::map<Element, int> index_;
  std::vector<std::vector<char>> le_;
  std::multimap<int, int> succ_;
  MembershipMode mode_ = MembershipMode::Literal;
};

struct Violation {
  std::string rule;
  std::string witness;
};

struct Report {
  std::string check;
  std::vector<Violation> violations;
  std::vector<std::string> notes;  // informational witnesses on success
  bool ok() const { return violations.empty(); }
};

// {"check": ..., "status": "ok"|"violations", "witnesses": [...]}
std::string to_json(const Report& r);

Report validate_pivotal(const PivotalTree& t);

// Down-set of a (throws UnknownElement).
ElemSet label(const PivotalTree& t, const Element& a);
// Union of the labels of the members of s that lie in the universe.
ElemSet label_hat(const PivotalTree& t, const ElemSet& s);

Report validate_labeltree(const PivotalTree& t);

using ElemMap = std::map<Element, Element>;

struct ComparisonResult {
  bool ok = true;
  std::optional<ElemSet> failing_label;
};

// Checks |A cap lambda| = |phi(A) cap lambda| on every label in the cone
// above l(vertex). Throws NotABijection unless phi maps A onto B one-to-one.
ComparisonResult check_comparison_map(const PivotalTree& t, const ElemSet& a, const ElemSet& b,
                                      const ElemMap& phi, const Element& vertex);
// l(phi(a)) = l(a) for every a.
bool label_preserving(const PivotalTree& t, const ElemMap& phi);
// l(phi(a)) cap B = l(a) for every a.
bool strega_hypothesis(const PivotalTree& t, const ElemMap& phi, const ElemSet& b);

struct CountStable {
  std::size_t count;
  Element vertex;  // smallest cone vertex where the count settles
};
// Throws UnknownElement for elements outside the universe.
CountStable cone_stable_count(const PivotalTree& t, const ElemSet& a);

Report check_counting_axioms(const PivotalTree& t,
                             const std::vector<std::pair<ElemSet, ElemSet>>& pairs);

// Random subsets of the universe for axiom checks.
std::vector<std::pair<ElemSet, ElemSet>> random_pairs(const PivotalTree& t, int count,
                                                      std::mt19937_64& rng);

// Rank <= 2 universe over atoms 0..5 with the post-order successor.
PivotalTree builtin_universe();
// Same shape over atoms 0..3.
PivotalTree small_universe();

// Each instance breaks exactly one rule: LT(2), LT(3b), LT(3a).
enum class Counterexample { NonInjectiveSucc, NoIterate, MemberNotBelow };
PivotalTree counterexample(Counterexample which);

// Line format: "mode literal|grulla", "atoms 0 1 ...", "elem E", "le A B"
// ("*" for every element as B), "succ A B", "#" comments.
PivotalTree parse_instance(const std::string& text);
std::string print_instance(const PivotalTree& t);

std::string to_string(const ElemSet& s);

}  // namespace numerosity
