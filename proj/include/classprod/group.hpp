#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "classprod/errors.hpp"

// Core conventions, used everywhere:
//   * a group of order n lives on the element indices 0..n-1, identity = 0
//   * conjugation is a right action:  a^g = g^-1 * a * g
//   * commutators are [a,g] = a^-1 * g^-1 * a * g, so a * [a,g] = a^g holds
//     verbatim and a^G = a[a,G]
// Groups are immutable once built. ElementSet/Subgroup keep a pointer to
// their ambient Group and must not outlive it.

namespace classprod {

inline constexpr int kDefaultMaxOrder = 5000;
inline constexpr int kFullAssocCheckLimit = 512;

namespace detail {
inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}
}  // namespace detail

class Group {
 public:
  static constexpr int identity = 0;

  // `trusted` skips the O(n^3) associativity sweep; reserved for tables that
  // are associative by construction (permutation composition, direct and
  // semidirect pairings, quotients). Raw ingested tables always get `full`.
  enum class TableCheck { full, trusted };

  Group(int n, std::vector<int> table, std::string label, TableCheck check)
      : n_(n), table_(std::move(table)), label_(std::move(label)) {
    validate(check);
  }

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[a * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  const std::string& label() const { return label_; }

  int element_order(int a) const {
    int x = a, k = 1;
    while (x != identity) {
      x = mul(x, a);
      ++k;
    }
    return k;
  }

 private:
  int n_;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::string label_;

  void validate(TableCheck check) {
    if (n_ <= 0) throw NotAGroup("empty multiplication table");
    if (static_cast<long long>(n_) * n_ != static_cast<long long>(table_.size()))
      throw NotAGroup("multiplication table is not n x n");
    std::vector<int> seen(n_);
    for (int r = 0; r < n_; ++r) {  // Latin square: rows
      std::fill(seen.begin(), seen.end(), 0);
      for (int c = 0; c < n_; ++c) {
        int v = table_[r * n_ + c];
        if (v < 0 || v >= n_)
          throw NotAGroup("table entry out of range at (" + std::to_string(r) +
                          "," + std::to_string(c) + ")");
        if (seen[v]++)
          throw NotAGroup("row " + std::to_string(r) + " repeats value " +
                          std::to_string(v));
      }
    }
    for (int c = 0; c < n_; ++c) {  // Latin square: columns
      std::fill(seen.begin(), seen.end(), 0);
      for (int r = 0; r < n_; ++r) {
        int v = table_[r * n_ + c];
        if (seen[v]++)
          throw NotAGroup("column " + std::to_string(c) + " repeats value " +
                          std::to_string(v));
      }
    }
    for (int x = 0; x < n_; ++x)
      if (mul(identity, x) != x || mul(x, identity) != x)
        throw NotAGroup("index 0 is not a two-sided identity");
    inv_.assign(n_, -1);
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b)
        if (mul(a, b) == identity) {
          inv_[a] = b;
          break;
        }
      if (mul(inv_[a], a) != identity)
        throw NotAGroup("one-sided inverse at element " + std::to_string(a));
    }
    if (check == TableCheck::trusted) return;
    if (n_ <= kFullAssocCheckLimit) {
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
          for (int c = 0; c < n_; ++c)
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
              throw NotAGroup("associativity fails at (" + std::to_string(a) +
                              "," + std::to_string(b) + "," +
                              std::to_string(c) + ")");
    } else {
      // Above the full-check limit: Latin square plus a deterministic sample
      // of 10n triples.
      std::mt19937 rng(0x5eedu ^ static_cast<unsigned>(n_));
      std::uniform_int_distribution<int> pick(0, n_ - 1);
      for (int t = 0; t < 10 * n_; ++t) {
        int a = pick(rng), b = pick(rng), c = pick(rng);
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw NotAGroup("associativity fails at sampled (" +
                          std::to_string(a) + "," + std::to_string(b) + "," +
                          std::to_string(c) + ")");
      }
    }
  }
};

// Ingest a raw multiplication table. Finds the identity, relabels it to
// index 0 if necessary, and runs the full validation.
inline Group build_group(const std::vector<std::vector<int>>& rows,
                         std::string label) {
  int n = static_cast<int>(rows.size());
  if (n == 0) throw NotAGroup("empty multiplication table");
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n)
      throw NotAGroup("multiplication table is not n x n");
    for (int v : r)
      if (v < 0 || v >= n) throw NotAGroup("table entry out of range");
  }
  int e = -1;
  for (int cand = 0; cand < n && e < 0; ++cand) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = rows[cand][x] == x && rows[x][cand] == x;
    if (ok) e = cand;
  }
  if (e < 0) throw NotAGroup("no identity element");
  auto relabel = [&](int x) { return x == 0 ? e : (x == e ? 0 : x); };
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      flat[a * n + b] = relabel(rows[relabel(a)][relabel(b)]);
  return Group(n, std::move(flat), std::move(label), Group::TableCheck::full);
}

inline int conjugate(const Group& G, int a, int g) {
  return G.mul(G.mul(G.inv(g), a), g);
}

inline int commutator(const Group& G, int a, int g) {
  return G.mul(G.inv(a), conjugate(G, a, g));
}

// Subset of a fixed ambient group, stored as a bitset.
class ElementSet {
 public:
  explicit ElementSet(const Group& G)
      : ambient_(&G), bits_((G.order() + 63) / 64, 0) {}

  static ElementSet full(const Group& G) {
    ElementSet s(G);
    for (int x = 0; x < G.order(); ++x) s.add(x);
    return s;
  }
  static ElementSet of(const Group& G, std::initializer_list<int> xs) {
    ElementSet s(G);
    for (int x : xs) s.add(x);
    return s;
  }
  static ElementSet of(const Group& G, const std::vector<int>& xs) {
    ElementSet s(G);
    for (int x : xs) s.add(x);
    return s;
  }

  const Group& ambient() const { return *ambient_; }
  bool same_ambient(const ElementSet& o) const {
    return ambient_ == o.ambient_;
  }

  void add(int x) { bits_[check(x) >> 6] |= 1ull << (x & 63); }
  void remove(int x) { bits_[check(x) >> 6] &= ~(1ull << (x & 63)); }
  bool contains(int x) const {
    return (bits_[check(x) >> 6] >> (x & 63)) & 1u;
  }

  int size() const {
    int c = 0;
    for (auto w : bits_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : bits_)
      if (w) return false;
    return true;
  }
  int least() const {
    for (size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i]) return static_cast<int>(i * 64 + std::countr_zero(bits_[i]));
    return -1;
  }

  template <class F>
  void for_each(F f) const {
    for (size_t i = 0; i < bits_.size(); ++i) {
      std::uint64_t w = bits_[i];
      while (w) {
        f(static_cast<int>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for_each([&](int x) { out.push_back(x); });
    return out;
  }

  ElementSet& operator|=(const ElementSet& o) {
    require_same(o);
    for (size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    require_same(o);
    for (size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
    return *this;
  }
  ElementSet& subtract(const ElementSet& o) {
    require_same(o);
    for (size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~o.bits_[i];
    return *this;
  }

  bool operator==(const ElementSet& o) const {
    return ambient_ == o.ambient_ && bits_ == o.bits_;
  }
  bool subset_of(const ElementSet& o) const {
    require_same(o);
    for (size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & ~o.bits_[i]) return false;
    return true;
  }
  bool intersects(const ElementSet& o) const {
    require_same(o);
    for (size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & o.bits_[i]) return true;
    return false;
  }

  // Raw words, usable as a deterministic map key.
  const std::vector<std::uint64_t>& words() const { return bits_; }

 private:
  const Group* ambient_;
  std::vector<std::uint64_t> bits_;

  int check(int x) const {
    if (x < 0 || x >= ambient_->order())
      throw std::out_of_range("element index " + std::to_string(x));
    return x;
  }
  void require_same(const ElementSet& o) const {
    if (ambient_ != o.ambient_)
      throw AmbientMismatch("element sets belong to different groups");
  }
};

inline ElementSet product_set(const ElementSet& X, const ElementSet& Y) {
  if (!X.same_ambient(Y))
    throw AmbientMismatch("product_set: sets from different groups");
  if (X.empty() || Y.empty()) throw EmptySet("product_set: empty operand");
  const Group& G = X.ambient();
  ElementSet out(G);
  X.for_each([&](int x) { Y.for_each([&](int y) { out.add(G.mul(x, y)); }); });
  return out;
}

inline ElementSet inverse_set(const ElementSet& X) {
  if (X.empty()) throw EmptySet("inverse_set: empty set");
  const Group& G = X.ambient();
  ElementSet out(G);
  X.for_each([&](int x) { out.add(G.inv(x)); });
  return out;
}

// { [a,s] : s in S }
inline ElementSet commutator_set(const Group& G, int a, const ElementSet& S) {
  if (S.empty()) throw EmptySet("commutator_set: empty set");
  ElementSet out(G);
  S.for_each([&](int s) { out.add(commutator(G, a, s)); });
  return out;
}

inline ElementSet conjugate_set(const ElementSet& X, int g) {
  const Group& G = X.ambient();
  ElementSet out(G);
  X.for_each([&](int x) { out.add(conjugate(G, x, g)); });
  return out;
}

inline ElementSet left_coset(int g, const ElementSet& X) {  // { g x }
  const Group& G = X.ambient();
  ElementSet out(G);
  X.for_each([&](int x) { out.add(G.mul(g, x)); });
  return out;
}

inline ElementSet right_coset(const ElementSet& X, int g) {  // { x g }
  const Group& G = X.ambient();
  ElementSet out(G);
  X.for_each([&](int x) { out.add(G.mul(x, g)); });
  return out;
}

// Validated subgroup: contains the identity, closed under product (and hence
// inverse), order divides |G|. `unchecked_from_set` is for results that are
// subgroups by construction (closures, centralizers, cores); the test suite
// spot-checks those against the validated path.
class Subgroup {
 public:
  static Subgroup from_set(const ElementSet& s) {
    const Group& G = s.ambient();
    if (!s.contains(Group::identity))
      throw NotASubgroup("subgroup must contain the identity");
    auto elems = s.elements();
    for (int a : elems)
      for (int b : elems)
        if (!s.contains(G.mul(a, b)))
          throw NotASubgroup("set not closed under multiplication (" +
                             std::to_string(a) + "*" + std::to_string(b) + ")");
    if (G.order() % static_cast<int>(elems.size()) != 0)
      throw NotASubgroup("subgroup order does not divide group order");
    return Subgroup(s);
  }
  static Subgroup unchecked_from_set(ElementSet s) {
    return Subgroup(std::move(s));
  }
  static Subgroup trivial(const Group& G) {
    return Subgroup(ElementSet::of(G, {Group::identity}));
  }
  static Subgroup full_group(const Group& G) {
    return Subgroup(ElementSet::full(G));
  }

  const Group& ambient() const { return set_.ambient(); }
  const ElementSet& set() const { return set_; }
  int order() const { return set_.size(); }
  bool contains(int x) const { return set_.contains(x); }
  std::vector<int> elements() const { return set_.elements(); }
  bool operator==(const Subgroup& o) const { return set_ == o.set_; }

 private:
  explicit Subgroup(ElementSet s) : set_(std::move(s)) {}
  ElementSet set_;
};

// Subgroup generated by `gens` (worklist closure; inverses come for free in a
// finite group).
inline Subgroup closure(const Group& G, const std::vector<int>& gens) {
  ElementSet s(G);
  std::vector<int> elems;
  auto push = [&](int x) {
    if (!s.contains(x)) {
      s.add(x);
      elems.push_back(x);
    }
  };
  push(Group::identity);
  for (int g : gens) push(g);
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j <= i; ++j) {
      push(G.mul(elems[i], elems[j]));
      push(G.mul(elems[j], elems[i]));
    }
  return Subgroup::unchecked_from_set(std::move(s));
}

}  // namespace classprod
