#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "classprod/group.hpp"

// Subgroup-level structure: centralizers, normality, cores, derived series,
// relative derived length, quotients, the C_N construction, chief series and
// the solvable / supersolvable predicates.

namespace classprod {

// { g in domain : x^g = x for all x in X }
inline ElementSet centralizer_in(const Group& G, const ElementSet& domain,
                                 const ElementSet& X) {
  if (X.empty()) throw EmptySet("centralizer of an empty set");
  ElementSet out(G);
  domain.for_each([&](int g) {
    bool fixes = true;
    X.for_each([&](int x) {
      if (fixes && conjugate(G, x, g) != x) fixes = false;
    });
    if (fixes) out.add(g);
  });
  return out;
}

inline Subgroup centralizer_of_set(const Group& G, const ElementSet& X) {
  return Subgroup::unchecked_from_set(
      centralizer_in(G, ElementSet::full(G), X));
}

inline Subgroup center(const Group& G) {
  return centralizer_of_set(G, ElementSet::full(G));
}

inline bool is_normal_set(const Group& G, const ElementSet& H) {
  bool ok = true;
  H.for_each([&](int h) {
    if (!ok) return;
    for (int g = 0; g < G.order(); ++g)
      if (!H.contains(conjugate(G, h, g))) {
        ok = false;
        return;
      }
  });
  return ok;
}

inline bool is_normal(const Group& G, const Subgroup& H) {
  return is_normal_set(G, H.set());
}

// Smallest normal subgroup containing gens: close the full conjugate orbit.
inline Subgroup normal_closure(const Group& G, const std::vector<int>& gens) {
  ElementSet seed(G);
  seed.add(Group::identity);
  for (int x : gens)
    for (int g = 0; g < G.order(); ++g) seed.add(conjugate(G, x, g));
  Subgroup out = closure(G, seed.elements());
  if (!is_normal_set(G, out.set()))
    throw std::logic_error("normal_closure produced a non-normal subgroup");
  return out;
}

// Intersection of the conjugates of H by elements of `domain`.
inline ElementSet core_in(const Group& G, const ElementSet& domain,
                          const ElementSet& H) {
  ElementSet acc = H;
  domain.for_each([&](int g) {
    if (acc.size() == 1) return;
    acc &= conjugate_set(H, g);
  });
  return acc;
}

// core_G(H): the largest normal subgroup of G inside H.
inline Subgroup core(const Group& G, const Subgroup& H) {
  ElementSet c = core_in(G, ElementSet::full(G), H.set());
  if (!c.subset_of(H.set()) || !is_normal_set(G, c))
    throw std::logic_error("core must be a normal subgroup inside H");
  return Subgroup::unchecked_from_set(std::move(c));
}

// [H,H] as a set: subgroup generated by all commutators of members of H.
inline ElementSet derived_of_set(const Group& G, const ElementSet& H) {
  auto elems = H.elements();
  ElementSet seed(G);
  seed.add(Group::identity);
  for (int a : elems)
    for (int b : elems) seed.add(commutator(G, a, b));
  return closure(G, seed.elements()).set();
}

inline Subgroup derived_subgroup(const Group& G, const Subgroup& H) {
  return Subgroup::unchecked_from_set(derived_of_set(G, H.set()));
}

inline Subgroup derived_subgroup(const Group& G) {
  return Subgroup::unchecked_from_set(derived_of_set(G, ElementSet::full(G)));
}

// H >= [H,H] >= [[H,H],[H,H]] >= ... down to stabilization.
inline std::vector<ElementSet> derived_chain_of(const Group& G,
                                                const ElementSet& H) {
  std::vector<ElementSet> chain{H};
  for (;;) {
    ElementSet next = derived_of_set(G, chain.back());
    if (next == chain.back()) return chain;
    chain.push_back(std::move(next));
  }
}

// value = least i with the i-th derived term of H inside K when `reached`,
// otherwise the step count at which the series stabilized outside K.
struct DlResult {
  int value;
  bool reached;
};

inline DlResult relative_dl_pair(const Group& G, const ElementSet& H,
                                 const ElementSet& K) {
  ElementSet cur = H;
  int i = 0;
  for (;;) {
    if (cur.subset_of(K)) return {i, true};
    ElementSet next = derived_of_set(G, cur);
    if (next == cur) return {i, false};
    cur = std::move(next);
    ++i;
  }
}

inline DlResult derived_length(const Group& G) {
  return relative_dl_pair(G, ElementSet::full(G),
                          ElementSet::of(G, {Group::identity}));
}

inline bool is_solvable(const Group& G) { return derived_length(G).reached; }

// Least i with G^(i) inside N, i.e. the derived length of G/N.
inline DlResult relative_derived_length(const Group& G, const Subgroup& N) {
  if (!is_normal(G, N))
    throw NotNormal("relative derived length needs a normal subgroup");
  return relative_dl_pair(G, ElementSet::full(G), N.set());
}

struct SeriesReport {
  enum class Kind { derived, chief, upper_central };
  Kind kind;
  std::vector<Subgroup> terms;
  std::vector<int> factor_orders;  // |terms_{i+1}| / |terms_i| ratios
};

inline SeriesReport derived_series(const Group& G) {
  SeriesReport rep{SeriesReport::Kind::derived, {}, {}};
  for (ElementSet& t : derived_chain_of(G, ElementSet::full(G)))
    rep.terms.push_back(Subgroup::unchecked_from_set(std::move(t)));
  for (size_t i = 0; i + 1 < rep.terms.size(); ++i)
    rep.factor_orders.push_back(rep.terms[i].order() /
                                rep.terms[i + 1].order());
  return rep;
}

struct Quotient {
  Group group;
  std::vector<int> project;  // element of G -> element of group
};

// G/N on the left cosets gN, ordered by least member; the identity coset
// lands at index 0 automatically.
inline Quotient quotient(const Group& G, const Subgroup& N) {
  if (!is_normal(G, N)) throw NotNormal("quotient needs a normal subgroup");
  int n = G.order();
  std::vector<int> project(n, -1), reps;
  auto members = N.elements();
  for (int g = 0; g < n; ++g) {
    if (project[g] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(g);
    for (int m : members) project[G.mul(g, m)] = id;
  }
  int q = static_cast<int>(reps.size());
  std::vector<int> table(static_cast<size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      table[i * q + j] = project[G.mul(reps[i], reps[j])];
  Group Q(q, std::move(table), G.label() + "/N" + std::to_string(N.order()),
          Group::TableCheck::trusted);
  return Quotient{std::move(Q), std::move(project)};
}

// C_N = { g in G : [a,g] in N }. A subgroup whenever N is normal; built
// through the validating constructor since that is part of the claim.
inline Subgroup cn_subgroup(const Group& G, int a, const Subgroup& N) {
  if (!is_normal(G, N)) throw NotNormal("C_N needs a normal subgroup");
  ElementSet s(G);
  for (int g = 0; g < G.order(); ++g)
    if (N.contains(commutator(G, a, g))) s.add(g);
  return Subgroup::from_set(s);
}

// Ascending chief series {e} = N_0 < N_1 < ... < N_k = G. Each step picks,
// among normal closures of single nontrivial elements above the current term
// (computed in the quotient), the one of least order, ties broken by least
// representative. That closure is a minimal normal subgroup of the quotient.
inline SeriesReport chief_series(const Group& G) {
  SeriesReport rep{SeriesReport::Kind::chief, {Subgroup::trivial(G)}, {}};
  while (rep.terms.back().order() < G.order()) {
    Quotient q = quotient(G, rep.terms.back());
    int best = -1, best_order = 0;
    for (int x = 1; x < q.group.order(); ++x) {
      int o = normal_closure(q.group, {x}).order();
      if (best < 0 || o < best_order) {
        best = x;
        best_order = o;
      }
    }
    Subgroup minimal = normal_closure(q.group, {best});
    ElementSet lifted(G);
    for (int g = 0; g < G.order(); ++g)
      if (minimal.contains(q.project[g])) lifted.add(g);
    rep.factor_orders.push_back(minimal.order());
    rep.terms.push_back(Subgroup::unchecked_from_set(std::move(lifted)));
  }
  return rep;
}

// Supersolvable iff every chief factor has prime order.
inline bool is_supersolvable(const Group& G) {
  for (int f : chief_series(G).factor_orders)
    if (!detail::is_prime(f)) return false;
  return true;
}

// Z_0 = {e}, Z_{i+1} = { a : [a,g] in Z_i for all g }, up to stabilization.
inline SeriesReport upper_central_series(const Group& G) {
  SeriesReport rep{SeriesReport::Kind::upper_central, {Subgroup::trivial(G)}, {}};
  for (;;) {
    const ElementSet& prev = rep.terms.back().set();
    ElementSet next(G);
    for (int a = 0; a < G.order(); ++a) {
      bool in = true;
      for (int g = 0; g < G.order() && in; ++g)
        in = prev.contains(commutator(G, a, g));
      if (in) next.add(a);
    }
    if (next == prev) return rep;
    rep.factor_orders.push_back(next.size() / prev.size());
    rep.terms.push_back(Subgroup::unchecked_from_set(std::move(next)));
  }
}

inline Subgroup second_center(const Group& G) {
  SeriesReport s = upper_central_series(G);
  size_t i = std::min<size_t>(2, s.terms.size() - 1);
  return s.terms[i];
}

struct PackedSubgroup {
  Group group;
  std::vector<int> to_ambient;    // local index -> ambient index
  std::vector<int> from_ambient;  // ambient index -> local index or -1
};

// Reify a subgroup as a group in its own right, members in ascending ambient
// order (so the ambient identity stays at local index 0).
inline PackedSubgroup subgroup_as_group(const Group& G, const Subgroup& H) {
  std::vector<int> to_ambient = H.elements();
  std::vector<int> from_ambient(G.order(), -1);
  for (size_t i = 0; i < to_ambient.size(); ++i)
    from_ambient[to_ambient[i]] = static_cast<int>(i);
  int m = static_cast<int>(to_ambient.size());
  std::vector<int> table(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int p = from_ambient[G.mul(to_ambient[i], to_ambient[j])];
      if (p < 0) throw NotASubgroup("set not closed under multiplication");
      table[i * m + j] = p;
    }
  Group S(m, std::move(table), G.label() + "<" + std::to_string(m) + ">",
          Group::TableCheck::trusted);
  return PackedSubgroup{std::move(S), std::move(to_ambient),
                        std::move(from_ambient)};
}

namespace detail {
struct SetLess {
  bool operator()(const Subgroup& a, const Subgroup& b) const {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.set().words() < b.set().words();
  }
};
}  // namespace detail

// Every subgroup, by breadth-first extension: closure of H together with one
// extra element. Meant for small orders only.
inline std::vector<Subgroup> all_subgroups(const Group& G) {
  std::map<std::vector<std::uint64_t>, Subgroup> found;
  std::vector<Subgroup> queue{Subgroup::trivial(G)};
  found.emplace(queue[0].set().words(), queue[0]);
  while (!queue.empty()) {
    Subgroup h = queue.back();
    queue.pop_back();
    std::vector<int> gens = h.elements();
    gens.push_back(-1);
    for (int x = 0; x < G.order(); ++x) {
      if (h.contains(x)) continue;
      gens.back() = x;
      Subgroup k = closure(G, gens);
      if (found.emplace(k.set().words(), k).second) queue.push_back(k);
    }
  }
  std::vector<Subgroup> out;
  for (auto& [w, s] : found) out.push_back(s);
  std::sort(out.begin(), out.end(), detail::SetLess{});
  return out;
}

// Every normal subgroup, by breadth-first normal-closure extension.
inline std::vector<Subgroup> all_normal_subgroups(const Group& G) {
  std::map<std::vector<std::uint64_t>, Subgroup> found;
  std::vector<Subgroup> queue{Subgroup::trivial(G)};
  found.emplace(queue[0].set().words(), queue[0]);
  while (!queue.empty()) {
    Subgroup h = queue.back();
    queue.pop_back();
    std::vector<int> gens = h.elements();
    gens.push_back(-1);
    for (int x = 0; x < G.order(); ++x) {
      if (h.contains(x)) continue;
      gens.back() = x;
      Subgroup k = normal_closure(G, gens);
      if (found.emplace(k.set().words(), k).second) queue.push_back(k);
    }
  }
  std::vector<Subgroup> out;
  for (auto& [w, s] : found) out.push_back(s);
  std::sort(out.begin(), out.end(), detail::SetLess{});
  return out;
}

// Minimal normal subgroups = inclusion-minimal single-element normal
// closures (every minimal normal subgroup is the closure of any of its
// nontrivial members).
inline std::vector<Subgroup> minimal_normal_subgroups(const Group& G) {
  std::map<std::vector<std::uint64_t>, Subgroup> cand;
  for (int x = 1; x < G.order(); ++x) {
    Subgroup k = normal_closure(G, {x});
    cand.emplace(k.set().words(), std::move(k));
  }
  std::vector<Subgroup> out;
  for (auto& [w, s] : cand) {
    bool minimal = true;
    for (auto& [w2, s2] : cand)
      if (s2.order() < s.order() && s2.set().subset_of(s.set())) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), detail::SetLess{});
  return out;
}

}  // namespace classprod
