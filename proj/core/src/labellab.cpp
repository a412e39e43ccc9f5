#include "numerosity/labellab.hpp"

#include <algorithm>
#include <functional>
#include <nlohmann/json.hpp>

namespace numerosity {

// ---- elements ----------------------------------------------------------

Element Element::make_atom(long v) {
  Element e;
  e.atom = true;
  e.value = v;
  return e;
}

Element Element::make_set(std::vector<Element> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Element e;
  e.members = std::move(members);
  return e;
}

bool Element::contains(const Element& x) const {
  return !atom && std::binary_search(members.begin(), members.end(), x);
}

bool Element::subset_of(const Element& b) const {
  if (atom || b.atom) return false;
  return std::includes(b.members.begin(), b.members.end(), members.begin(), members.end());
}

int Element::rank() const {
  if (atom) return 0;
  int r = 0;
  for (const auto& m : members) r = std::max(r, m.rank() + 1);
  return r;
}

bool Element::operator==(const Element& o) const {
  if (atom != o.atom) return false;
  return atom ? value == o.value : members == o.members;
}

bool Element::operator<(const Element& o) const {
  if (atom != o.atom) return atom;  // atoms first
  if (atom) return value < o.value;
  return std::lexicographical_compare(members.begin(), members.end(), o.members.begin(),
                                      o.members.end());
}

std::string to_string(const Element& e) {
  if (e.atom) return std::to_string(e.value);
  std::string s = "{";
  for (std::size_t i = 0; i < e.members.size(); ++i) {
    if (i) s += ',';
    s += to_string(e.members[i]);
  }
  return s + "}";
}

std::string to_string(const ElemSet& s) {
  std::string out = "[";
  bool first = true;
  for (const auto& e : s) {
    if (!first) out += ", ";
    first = false;
    out += to_string(e);
  }
  return out + "]";
}

// ---- pivotal tree ------------------------------------------------------

int PivotalTree::add(const Element& e) {
  if (auto it = index_.find(e); it != index_.end()) return it->second;
  int id = size();
  elems_.push_back(e);
  index_.emplace(e, id);
  for (auto& row : le_) row.push_back(0);
  le_.emplace_back(elems_.size(), 0);
  le_.back().back() = 1;
  return id;
}

int PivotalTree::id(const Element& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw UnknownElement(to_string(e) + " is not in the universe");
  return it->second;
}

void PivotalTree::declare_le(const Element& a, const Element& b) {
  int x = id(a), y = id(b);
  if (le(x, y)) return;
  // Everything below a now sits below everything above b.
  std::vector<int> below, above;
  for (int i = 0; i < size(); ++i) {
    if (le(i, x)) below.push_back(i);
    if (le(y, i)) above.push_back(i);
  }
  for (int i : below)
    for (int j : above) le_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
}

void PivotalTree::declare_succ(const Element& a, const Element& b) {
  succ_.emplace(id(a), id(b));
}

// ---- reports -----------------------------------------------------------

std::string to_json(const Report& r) {
  nlohmann::json w = nlohmann::json::array();
  for (const auto& v : r.violations) w.push_back({{"rule", v.rule}, {"witness", v.witness}});
  for (const auto& n : r.notes) w.push_back({{"rule", "note"}, {"witness", n}});
  nlohmann::json j = {{"check", r.check}, {"status", r.ok() ? "ok" : "violations"}, {"witnesses", w}};
  return j.dump();
}

namespace {

std::string str(const PivotalTree& t, int i) { return to_string(t.at(i)); }

std::optional<int> empty_id(const PivotalTree& t) {
  if (!t.has(Element::empty())) return std::nullopt;
  return t.id(Element::empty());
}

std::optional<int> successor(const PivotalTree& t, int a) {
  auto it = t.succ().find(a);
  if (it == t.succ().end()) return std::nullopt;
  return it->second;
}

// a in b1 in ... in b for some chain of finite sets
bool hereditary_member(const Element& a, const Element& b) {
  if (b.atom) return false;
  for (const auto& m : b.members)
    if (m == a || hereditary_member(a, m)) return true;
  return false;
}

}  // namespace

Report validate_pivotal(const PivotalTree& t) {
  Report r{"validate_pivotal", {}, {}};
  auto add = [&](const char* rule, std::string w) { r.violations.push_back({rule, std::move(w)}); };
  const int n = t.size();
  auto e0 = empty_id(t);

  // LT(1)
  if (!e0) {
    add("LT(1)", "{} is not in the universe");
  } else {
    for (int x = 0; x < n; ++x)
      if (!t.le(*e0, x)) add("LT(1)", "{} not below " + str(t, x));
  }

  // LT(2): successor is a partial injective function on nonempty elements.
  std::map<int, std::vector<int>> preimages;
  for (int a = 0; a < n; ++a) {
    auto [lo, hi] = t.succ().equal_range(a);
    long count = std::distance(lo, hi);
    if (count > 1) add("LT(2)", str(t, a) + " has " + std::to_string(count) + " successors");
    for (auto it = lo; it != hi; ++it) {
      preimages[it->second].push_back(a);
      if (e0 && (a == *e0 || it->second == *e0))
        add("LT(2)", "successor touches {}: " + str(t, a) + " -> " + str(t, it->second));
    }
  }
  for (const auto& [b, pre] : preimages)
    if (pre.size() > 1)
      add("LT(2)", "not injective: " + str(t, pre[0]) + " and " + str(t, pre[1]) + " -> " + str(t, b));
  // The top of a finite tree is the only place a successor may be missing.
  for (int a = 0; a < n; ++a) {
    if ((e0 && a == *e0) || successor(t, a)) continue;
    for (int b = 0; b < n; ++b)
      if (!t.le(b, a)) {
        add("LT(2)", str(t, a) + " has no successor but is not maximal");
        break;
      }
  }

  // LT(3) directedness
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      bool found = false;
      for (int z = 0; z < n && !found; ++z) found = t.le(a, z) && t.le(b, z);
      if (!found) add("LT(3)", "no upper bound for " + str(t, a) + ", " + str(t, b));
    }

  // LT(3a)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      const Element& x = t.at(a);
      const Element& y = t.at(b);
      bool rel = x.subset_of(y) ||
                 (t.mode() == MembershipMode::Literal ? y.contains(x) : hereditary_member(x, y));
      if (rel && !t.le(a, b)) add("LT(3a)", str(t, a) + " related to " + str(t, b) + " but not below");
    }

  // LT(3b): iterates from a reach the class of b (m = 0 allowed).
  for (int a = 0; a < n; ++a) {
    if (e0 && a == *e0) continue;
    std::vector<int> orbit{a};
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    seen[static_cast<std::size_t>(a)] = 1;
    for (auto s = successor(t, a); s && !seen[static_cast<std::size_t>(*s)]; s = successor(t, *s)) {
      seen[static_cast<std::size_t>(*s)] = 1;
      orbit.push_back(*s);
    }
    for (int b = 0; b < n; ++b) {
      if (!t.le(a, b)) continue;
      bool hit = std::any_of(orbit.begin(), orbit.end(), [&](int o) { return t.equiv(o, b); });
      if (!hit) add("LT(3b)", str(t, a) + " below " + str(t, b) + " but no iterate matches");
    }
  }

  // LT(3c): down-sets are finite here, so the only way to get an infinite
  // descending intent is a successor cycle.
  for (int a = 0; a < n; ++a) {
    std::optional<int> s = a;
    for (int step = 0; step <= n && s; ++step) {
      s = successor(t, *s);
      if (s && *s == a) {
        add("LT(3c)", "successor cycle through " + str(t, a));
        break;
      }
    }
  }
  return r;
}

// ---- labels ------------------------------------------------------------

namespace {

std::vector<char> down_mask(const PivotalTree& t, int a) {
  std::vector<char> m(static_cast<std::size_t>(t.size()), 0);
  for (int x = 0; x < t.size(); ++x) m[static_cast<std::size_t>(x)] = t.le(x, a);
  return m;
}

ElemSet to_set(const PivotalTree& t, const std::vector<char>& m) {
  ElemSet s;
  for (int x = 0; x < t.size(); ++x)
    if (m[static_cast<std::size_t>(x)]) s.insert(t.at(x));
  return s;
}

// Distinct labels with a representative element each.
struct LabelFamily {
  std::vector<ElemSet> labels;
  std::vector<int> rep;
  std::vector<int> of_elem;  // element id -> label index
};

LabelFamily family(const PivotalTree& t) {
  LabelFamily f;
  f.of_elem.assign(static_cast<std::size_t>(t.size()), -1);
  for (int a = 0; a < t.size(); ++a) {
    ElemSet l = to_set(t, down_mask(t, a));
    auto it = std::find(f.labels.begin(), f.labels.end(), l);
    if (it == f.labels.end()) {
      f.of_elem[static_cast<std::size_t>(a)] = static_cast<int>(f.labels.size());
      f.labels.push_back(std::move(l));
      f.rep.push_back(a);
    } else {
      f.of_elem[static_cast<std::size_t>(a)] = static_cast<int>(it - f.labels.begin());
    }
  }
  return f;
}

bool includes(const ElemSet& big, const ElemSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

ElemSet intersect(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

// Smallest label containing both, if it is unique.
std::optional<ElemSet> label_join(const LabelFamily& f, const ElemSet& a, const ElemSet& b) {
  std::optional<ElemSet> best;
  for (const auto& l : f.labels) {
    if (!includes(l, a) || !includes(l, b)) continue;
    if (!best || includes(*best, l)) best = l;
  }
  if (!best) return std::nullopt;
  for (const auto& l : f.labels)
    if (includes(l, a) && includes(l, b) && !includes(l, *best)) return std::nullopt;
  return best;
}

// Least upper bound in the preorder, up to equivalence.
std::optional<int> elem_join(const PivotalTree& t, int a, int b) {
  for (int z = 0; z < t.size(); ++z) {
    if (!t.le(a, z) || !t.le(b, z)) continue;
    bool least = true;
    for (int u = 0; u < t.size() && least; ++u)
      if (t.le(a, u) && t.le(b, u) && !t.le(z, u)) least = false;
    if (least) return z;
  }
  return std::nullopt;
}

// The lower of a comparable pair, otherwise the empty set.
std::optional<int> elem_meet(const PivotalTree& t, int a, int b) {
  if (t.le(a, b)) return a;
  if (t.le(b, a)) return b;
  return empty_id(t);
}

}  // namespace

ElemSet label(const PivotalTree& t, const Element& a) { return to_set(t, down_mask(t, t.id(a))); }

ElemSet label_hat(const PivotalTree& t, const ElemSet& s) {
  ElemSet out;
  for (const auto& x : s)
    if (t.has(x)) {
      ElemSet l = label(t, x);
      out.insert(l.begin(), l.end());
    }
  return out;
}

Report validate_labeltree(const PivotalTree& t) {
  Report r{"validate_labeltree", {}, {}};
  auto add = [&](const char* rule, std::string w) { r.violations.push_back({rule, std::move(w)}); };
  const int n = t.size();
  LabelFamily f = family(t);
  const auto& L = f.labels;
  ElemSet bottom;
  if (auto e0 = empty_id(t)) bottom = label(t, t.at(*e0));

  // PP(1) and the three-way meet shape.
  for (std::size_t i = 0; i < L.size(); ++i)
    for (std::size_t j = i + 1; j < L.size(); ++j) {
      ElemSet m = intersect(L[i], L[j]);
      if (std::find(L.begin(), L.end(), m) == L.end())
        add("PP(1)", "meet of " + to_string(L[i]) + " and " + to_string(L[j]) + " is not a label");
      if (!label_join(f, L[i], L[j]))
        add("PP(1)", "no join for " + to_string(L[i]) + " and " + to_string(L[j]));
      if (m != L[i] && m != L[j] && m != bottom)
        add("v33", to_string(L[i]) + " meets " + to_string(L[j]) + " in " + to_string(m));
    }

  for (int a = 0; a < n; ++a) {
    ElemSet la = label(t, t.at(a));
    // PP(3)
    if (label_hat(t, la) != la) add("PP(3)", "label of the label of " + str(t, a) + " differs");
    for (int b = 0; b < n; ++b) {
      ElemSet lb = label(t, t.at(b));
      // PP(2), both directions since labels are down-sets
      if (t.le(a, b) != includes(lb, la))
        add("PP(2)", str(t, a) + " vs " + str(t, b) + ": order and label inclusion disagree");
      if (b <= a) continue;
      // PP(4)
      auto m = elem_meet(t, a, b);
      if (!m || label(t, t.at(*m)) != intersect(la, lb))
        add("PP(4)", "label of meet of " + str(t, a) + ", " + str(t, b));
      // PP(5)
      auto j = elem_join(t, a, b);
      auto lj = label_join(f, la, lb);
      if (!j || !lj || label(t, t.at(*j)) != *lj)
        add("PP(5)", "label of join of " + str(t, a) + ", " + str(t, b));
    }
  }

  // PP(6) and PP(7) on every pair present in the universe.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Element& x = t.at(a);
      const Element& y = t.at(b);
      Element sx = Element::make_set({x}), sy = Element::make_set({y});
      Element pair = Element::make_set({x, y});
      if (a < b && t.has(pair) && t.has(sx) && t.has(sy)) {
        auto j = label_join(f, label(t, sx), label(t, sy));
        if (!j || *j != label(t, pair)) add("PP(6)", "pair " + to_string(pair));
      }
      Element ssx = Element::make_set({sx}), ssy = Element::make_set({sy});
      Element kp = Element::make_set({sx, pair});  // Kuratowski pair (x, y)
      if (a != b && t.has(kp) && t.has(ssx) && t.has(ssy)) {
        auto j = label_join(f, label(t, ssx), label(t, ssy));
        if (!j || *j != label(t, kp)) add("PP(7)", "pair (" + str(t, a) + "," + str(t, b) + ")");
      }
    }

  // Linear extension of strict inclusion: sort by size, then check.
  std::vector<std::size_t> order(L.size());
  for (std::size_t i = 0; i < L.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return L[x].size() < L[y].size(); });
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t j = 0; j < k; ++j)
      if (L[order[k]] != L[order[j]] && includes(L[order[j]], L[order[k]]))
        add("puppa", to_string(L[order[k]]) + " inside an earlier label");

  // Disjoint slices: peel off the latest strictly smaller label each time.
  for (std::size_t p = 0; p < order.size(); ++p) {
    const ElemSet& lam = L[order[p]];
    ElemSet covered;
    std::size_t cur = p;
    bool disjoint = true;
    while (true) {
      std::optional<std::size_t> next;
      for (std::size_t q = 0; q < cur; ++q)
        if (L[order[q]] != L[order[cur]] && includes(L[order[cur]], L[order[q]])) next = q;
      ElemSet slice = L[order[cur]];
      if (next)
        for (const auto& e : L[order[*next]]) slice.erase(e);
      for (const auto& e : slice)
        if (!covered.insert(e).second) disjoint = false;
      if (!next) break;
      cur = *next;
    }
    if (!disjoint || covered != lam) add("v3", "slices of " + to_string(lam) + " do not partition it");
  }
  return r;
}

// ---- comparison maps ---------------------------------------------------

namespace {

std::size_t count_in(const ElemSet& a, const ElemSet& lam) { return intersect(a, lam).size(); }

// Labels of the cone above the label of v.
std::vector<ElemSet> cone(const PivotalTree& t, int v) {
  LabelFamily f = family(t);
  ElemSet lv = label(t, t.at(v));
  std::vector<ElemSet> out;
  for (const auto& l : f.labels)
    if (includes(l, lv)) out.push_back(l);
  return out;
}

// Smallest vertex (by label size) whose whole cone satisfies pred.
std::optional<int> find_cone(const PivotalTree& t, const std::function<bool(const ElemSet&)>& pred) {
  std::vector<int> ids(static_cast<std::size_t>(t.size()));
  for (int i = 0; i < t.size(); ++i) ids[static_cast<std::size_t>(i)] = i;
  std::vector<std::size_t> sizes(ids.size());
  for (int i : ids) sizes[static_cast<std::size_t>(i)] = label(t, t.at(i)).size();
  std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) {
    return sizes[static_cast<std::size_t>(a)] < sizes[static_cast<std::size_t>(b)];
  });
  for (int v : ids) {
    auto c = cone(t, v);
    if (std::all_of(c.begin(), c.end(), pred)) return v;
  }
  return std::nullopt;
}

}  // namespace

ComparisonResult check_comparison_map(const PivotalTree& t, const ElemSet& a, const ElemSet& b,
                                      const ElemMap& phi, const Element& vertex) {
  ElemSet image;
  for (const auto& x : a) {
    auto it = phi.find(x);
    if (it == phi.end()) throw NotABijection("no image for " + to_string(x));
    if (!b.count(it->second))
      throw NotABijection(to_string(x) + " maps outside the target: " + to_string(it->second));
    if (!image.insert(it->second).second)
      throw NotABijection("two elements map to " + to_string(it->second));
  }
  if (image != b) throw NotABijection("map is not onto the target");
  for (const auto& x : a) t.id(x);
  for (const auto& lam : cone(t, t.id(vertex)))
    if (count_in(a, lam) != count_in(image, lam)) return {false, lam};
  return {true, std::nullopt};
}

bool label_preserving(const PivotalTree& t, const ElemMap& phi) {
  for (const auto& [x, y] : phi)
    if (label(t, x) != label(t, y)) return false;
  return true;
}

bool strega_hypothesis(const PivotalTree& t, const ElemMap& phi, const ElemSet& b) {
  for (const auto& [x, y] : phi)
    if (intersect(label(t, y), b) != label(t, x)) return false;
  return true;
}

// ---- counting axioms ---------------------------------------------------

CountStable cone_stable_count(const PivotalTree& t, const ElemSet& a) {
  for (const auto& x : a) t.id(x);
  std::size_t top = a.size();
  // Directedness gives a common upper bound, so on a pivotal tree this holds.
  auto v = find_cone(t, [&](const ElemSet& lam) { return count_in(a, lam) == top; });
  if (!v) throw std::logic_error("no cone stabilizes the count");
  return {top, t.at(*v)};
}

namespace {

using PairSet = std::set<std::pair<Element, Element>>;

PairSet product(const ElemSet& a, const ElemSet& b) {
  PairSet out;
  for (const auto& x : a)
    for (const auto& y : b) out.emplace(x, y);
  return out;
}

// Pairs counted on the paired label lambda x lambda.
std::size_t count_pairs(const PairSet& p, const ElemSet& lam) {
  std::size_t c = 0;
  for (const auto& [x, y] : p) c += lam.count(x) && lam.count(y);
  return c;
}

ElemSet random_subset(const std::vector<Element>& pool, std::size_t size, std::mt19937_64& rng) {
  std::vector<Element> v = pool;
  std::shuffle(v.begin(), v.end(), rng);
  v.resize(std::min(size, v.size()));
  return ElemSet(v.begin(), v.end());
}

}  // namespace

Report check_counting_axioms(const PivotalTree& t,
                             const std::vector<std::pair<ElemSet, ElemSet>>& pairs) {
  Report r{"check_counting_axioms", {}, {}};
  std::mt19937_64 rng(20240611);
  std::vector<Element> universe;
  for (int i = 0; i < t.size(); ++i) universe.push_back(t.at(i));
  auto note = [&](std::size_t k, const char* rule, const std::optional<int>& v) {
    if (v)
      r.notes.push_back("pair " + std::to_string(k) + " " + rule + " stable at " + str(t, *v));
    else
      r.violations.push_back({rule, "pair " + std::to_string(k) + " never stabilizes"});
  };

  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& [a, b] = pairs[k];
    for (const auto& x : a) t.id(x);
    for (const auto& x : b) t.id(x);

    // Null set: strictly below every nonempty set, equal to itself.
    if (!a.empty())
      note(k, "Null", find_cone(t, [&](const ElemSet& lam) { return count_in(a, lam) > 0; }));

    // Union: replace A, B by equally sized A', B' and compare the unions.
    ElemSet ab_union;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(ab_union, ab_union.end()));
    if (ab_union.size() == a.size() + b.size()) {
      ElemSet a2 = random_subset(universe, a.size(), rng);
      std::vector<Element> rest;
      for (const auto& e : universe)
        if (!a2.count(e)) rest.push_back(e);
      ElemSet b2 = random_subset(rest, b.size(), rng);
      ElemSet u2 = a2;
      u2.insert(b2.begin(), b2.end());
      auto same = [](const ElemSet& x, const ElemSet& y) {
        return [&x, &y](const ElemSet& lam) { return count_in(x, lam) == count_in(y, lam); };
      };
      bool premise = find_cone(t, same(a, a2)).has_value() && find_cone(t, same(b, b2)).has_value();
      if (premise) note(k, "Union", find_cone(t, same(ab_union, u2)));
    }

    // Product on paired labels.
    PairSet ab = product(a, b);
    note(k, "Product", find_cone(t, [&](const ElemSet& lam) {
           return count_pairs(ab, lam) == count_in(a, lam) * count_in(b, lam);
         }));
    std::size_t stable_prod = ab.size();
    if (stable_prod != a.size() * b.size())
      r.violations.push_back({"Product", "pair " + std::to_string(k) + " stable counts disagree"});

    // Unit: {c} x B against B on the cone of c.
    if (!a.empty()) {
      const Element& c = *a.begin();
      PairSet cb = product(ElemSet{c}, b);
      bool ok = true;
      for (const auto& lam : cone(t, t.id(c)))
        ok = ok && count_pairs(cb, lam) == count_in(b, lam);
      if (ok)
        r.notes.push_back("pair " + std::to_string(k) + " Unit stable at " + to_string(c));
      else
        r.violations.push_back({"Unit", "pair " + std::to_string(k) + " above " + to_string(c)});
    }

    // Euclid on a certified proper subset of B.
    if (!b.empty()) {
      ElemSet sub = intersect(a, b);
      if (sub == b) sub.erase(sub.begin());
      note(k, "Euclid", find_cone(t, [&](const ElemSet& lam) {
             return count_in(sub, lam) < count_in(b, lam);
           }));
    }
  }
  return r;
}

std::vector<std::pair<ElemSet, ElemSet>> random_pairs(const PivotalTree& t, int count,
                                                      std::mt19937_64& rng) {
  std::vector<Element> universe;
  for (int i = 0; i < t.size(); ++i) universe.push_back(t.at(i));
  std::uniform_int_distribution<std::size_t> size(0, std::min<std::size_t>(universe.size(), 6));
  std::vector<std::pair<ElemSet, ElemSet>> out;
  for (int k = 0; k < count; ++k) {
    ElemSet a = random_subset(universe, size(rng), rng);
    // Every third pair is disjoint so the union rule gets exercised.
    std::vector<Element> pool;
    for (const auto& e : universe)
      if (k % 3 != 0 || !a.count(e)) pool.push_back(e);
    out.emplace_back(std::move(a), random_subset(pool, size(rng), rng));
  }
  return out;
}

// ---- built-in universes ------------------------------------------------

namespace {

struct Node {
  std::vector<Element> cls;  // equivalent elements, successor order
  std::vector<Node> children;
};

void post_order(const Node& n, std::vector<const Node*>& out) {
  for (const auto& c : n.children) post_order(c, out);
  out.push_back(&n);
}

PivotalTree build(const Node& root) {
  PivotalTree t;
  std::vector<const Node*> order;
  post_order(root, order);
  t.add(Element::empty());
  for (const Node* n : order)
    for (const auto& e : n->cls) t.add(e);
  for (int i = 0; i < t.size(); ++i) t.declare_le(Element::empty(), t.at(i));
  std::function<void(const Node&)> link = [&](const Node& n) {
    for (std::size_t i = 1; i < n.cls.size(); ++i) {
      t.declare_le(n.cls[0], n.cls[i]);
      t.declare_le(n.cls[i], n.cls[0]);
    }
    for (const auto& c : n.children) {
      t.declare_le(c.cls[0], n.cls[0]);
      link(c);
    }
  };
  link(root);
  std::vector<Element> seq;
  for (const Node* n : order) seq.insert(seq.end(), n->cls.begin(), n->cls.end());
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) t.declare_succ(seq[i], seq[i + 1]);
  return t;
}

Element A(long v) { return Element::make_atom(v); }
Element S(std::vector<Element> m) { return Element::make_set(std::move(m)); }

Node leaf(Element e) { return Node{{std::move(e)}, {}}; }
Node over(Element e, std::vector<Node> children) { return Node{{std::move(e)}, std::move(children)}; }

// x -> {x}
Node singleton(long x) { return over(S({A(x)}), {leaf(A(x))}); }
// x -> {x} -> {{x}}
Node double_singleton(long x) { return over(S({S({A(x)})}), {singleton(x)}); }
// {x, y} equivalent to the Kuratowski pair (x, y)
Node kuratowski(long x, long y) {
  Element pair = S({A(x), A(y)});
  Element kp = S({S({A(x)}), pair});
  return Node{{pair, kp}, {double_singleton(x), double_singleton(y)}};
}

}  // namespace

PivotalTree builtin_universe() {
  Node left = over(S({A(1), A(2), A(3), A(4)}),
                   {over(S({A(1), A(2)}), {singleton(1), singleton(2)}), kuratowski(3, 4)});
  Node right = over(S({A(0), A(5)}), {singleton(0), singleton(5)});
  return build(over(S({A(0), A(1), A(2), A(3), A(4), A(5)}), {left, right}));
}

PivotalTree small_universe() {
  return build(over(S({A(0), A(1), A(2), A(3)}),
                    {over(S({A(0), A(1)}), {singleton(0), singleton(1)}), kuratowski(2, 3)}));
}

PivotalTree counterexample(Counterexample which) {
  PivotalTree t;
  Element e = Element::empty(), one = A(1), two = A(2), pair = S({A(1), A(2)});
  for (const auto& x : {e, one, two, pair}) t.add(x);
  for (const auto& x : {one, two, pair}) t.declare_le(e, x);
  switch (which) {
    case Counterexample::NonInjectiveSucc:
      t.declare_le(one, pair);
      t.declare_le(two, pair);
      t.declare_succ(one, pair);
      t.declare_succ(two, pair);
      break;
    case Counterexample::NoIterate:
      t.declare_le(one, two);
      t.declare_le(two, pair);
      t.declare_succ(two, one);
      t.declare_succ(one, pair);
      break;
    case Counterexample::MemberNotBelow:
      t.declare_le(one, pair);
      t.declare_le(pair, two);
      t.declare_succ(one, pair);
      t.declare_succ(pair, two);
      break;
  }
  return t;
}

}  // namespace numerosity
