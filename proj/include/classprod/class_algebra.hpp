#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "classprod/group.hpp"

// Conjugacy classes, G-invariant sets and the eta statistic:
// eta(X) = number of distinct conjugacy classes whose union is X.
// Class products A*B are computed as the union of (a'*b)^G over a' in A,
// which equals the elementwise product set because AB is G-invariant; the
// naive double loop is kept as the reference path.

namespace classprod {

struct ConjugacyClass {
  ElementSet members;
  int representative;  // least member index
  int size() const { return members.size(); }
};

inline ConjugacyClass conjugacy_class(const Group& G, int a) {
  ElementSet orbit(G);
  for (int g = 0; g < G.order(); ++g) orbit.add(conjugate(G, a, g));
  ConjugacyClass cls{std::move(orbit), 0};
  cls.representative = cls.members.least();
  if (G.order() % cls.members.size() != 0)
    throw std::logic_error("class size does not divide group order");
  return cls;
}

inline std::vector<ConjugacyClass> all_classes(const Group& G) {
  std::vector<ConjugacyClass> out;
  ElementSet seen(G);
  for (int a = 0; a < G.order(); ++a) {
    if (seen.contains(a)) continue;
    ConjugacyClass cls = conjugacy_class(G, a);  // a is least in its class
    seen |= cls.members;
    out.push_back(std::move(cls));
  }
  return out;
}

// element -> index into all_classes(G)
inline std::vector<int> class_index_table(const Group& G,
                                          const std::vector<ConjugacyClass>& cs) {
  std::vector<int> id(G.order(), -1);
  for (size_t i = 0; i < cs.size(); ++i)
    cs[i].members.for_each([&](int x) { id[x] = static_cast<int>(i); });
  return id;
}

// Greedy peel: take the least remaining member, require its whole class to
// sit inside X, remove it, repeat. Ordered by representative.
inline std::vector<ConjugacyClass> decompose(const Group& G,
                                             const ElementSet& X) {
  if (X.empty()) throw EmptySet("decompose: empty set");
  std::vector<ConjugacyClass> parts;
  ElementSet rest = X;
  while (!rest.empty()) {
    int a = rest.least();
    ConjugacyClass cls = conjugacy_class(G, a);
    if (!cls.members.subset_of(X))
      throw NotInvariant("set is not a union of conjugacy classes (class of " +
                         std::to_string(a) + " sticks out)");
    rest.subtract(cls.members);
    parts.push_back(std::move(cls));
  }
  return parts;
}

inline bool is_g_invariant(const Group& G, const ElementSet& X) {
  if (X.empty()) throw EmptySet("is_g_invariant: empty set");
  ElementSet rest = X;
  while (!rest.empty()) {
    ConjugacyClass cls = conjugacy_class(G, rest.least());
    if (!cls.members.subset_of(X)) return false;
    rest.subtract(cls.members);
  }
  return true;
}

inline int eta(const Group& G, const ElementSet& X) {
  if (X.empty()) throw EmptySet("eta: empty set");
  int count = 0;
  ElementSet rest = X;
  while (!rest.empty()) {
    ConjugacyClass cls = conjugacy_class(G, rest.least());
    if (!cls.members.subset_of(X))
      throw NotInvariant("eta: set is not G-invariant (class of " +
                         std::to_string(rest.least()) + " sticks out)");
    rest.subtract(cls.members);
    ++count;
  }
  return count;
}

struct ClassProduct {
  ElementSet set;
  int eta;
};

// a^G * b^G as a union of classes: for each a' in a^G add the class of a'*b.
inline ClassProduct class_product_eta(const Group& G, int a, int b) {
  ConjugacyClass A = conjugacy_class(G, a);
  ElementSet out(G);
  int parts = 0;
  A.members.for_each([&](int x) {
    int y = G.mul(x, b);
    if (!out.contains(y)) {
      out |= conjugacy_class(G, y).members;
      ++parts;
    }
  });
  return ClassProduct{std::move(out), parts};
}

// Reference path: all |A|*|B| pairwise products.
inline ElementSet naive_class_product(const Group& G, int a, int b) {
  return product_set(conjugacy_class(G, a).members,
                     conjugacy_class(G, b).members);
}

}  // namespace classprod
