#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "classprod/group.hpp"

// Concrete families and product constructions. Element orderings are
// lexicographic on the natural tuple encoding with the identity first:
//   cyclic(n)          residues 0..n-1
//   dihedral(n)        (s,r) -> s*n + r, s = reflection bit, r = rotation
//   symmetric(n)       all permutations of 0..n-1 in lexicographic order
//   quaternion8        1,-1,i,-i,j,-j,k,-k
//   extraspecial_p3(p) unitriangular (a,b,c) -> (a*p + b)*p + c
//   pairings           (x,y) -> x*|Y| + y
// Permutations compose left to right: (p*q)(x) = q(p(x)).

namespace classprod {

namespace detail {
inline void check_order_cap(long long n, int max_order, const char* what) {
  if (n > max_order)
    throw OrderCapExceeded(std::string(what) + ": order " + std::to_string(n) +
                           " exceeds cap " + std::to_string(max_order));
}
}  // namespace detail

inline Group cyclic(int n, int max_order = kDefaultMaxOrder) {
  if (n < 1) throw ParameterOutOfRange("cyclic: n must be >= 1");
  detail::check_order_cap(n, max_order, "cyclic");
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i * n + j] = (i + j) % n;
  return Group(n, std::move(t), "C" + std::to_string(n),
               Group::TableCheck::trusted);
}

// Order 2n: rotations r^j at indices 0..n-1, reflections s*r^j at n..2n-1.
inline Group dihedral(int n, int max_order = kDefaultMaxOrder) {
  if (n < 1) throw ParameterOutOfRange("dihedral: n must be >= 1");
  detail::check_order_cap(2ll * n, max_order, "dihedral");
  int m = 2 * n;
  std::vector<int> t(static_cast<size_t>(m) * m);
  for (int s1 = 0; s1 < 2; ++s1)
    for (int r1 = 0; r1 < n; ++r1)
      for (int s2 = 0; s2 < 2; ++s2)
        for (int r2 = 0; r2 < n; ++r2) {
          int s = s1 ^ s2;
          int r = s2 == 0 ? (r1 + r2) % n : (r2 - r1 + n) % n;
          t[(s1 * n + r1) * m + (s2 * n + r2)] = s * n + r;
        }
  return Group(m, std::move(t), "D" + std::to_string(n),
               Group::TableCheck::trusted);
}

inline Group quaternion8(int max_order = kDefaultMaxOrder) {
  detail::check_order_cap(8, max_order, "quaternion8");
  // axes 0:1 1:i 2:j 3:k, element index = axis*2 + (sign < 0)
  static constexpr int ax[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int neg[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<int> t(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int a1 = a >> 1, s1 = a & 1, a2 = b >> 1, s2 = b & 1;
      t[a * 8 + b] = ax[a1][a2] * 2 + (s1 ^ s2 ^ neg[a1][a2]);
    }
  return Group(8, std::move(t), "Q8", Group::TableCheck::trusted);
}

inline Group direct_product(const Group& A, const Group& B,
                            int max_order = kDefaultMaxOrder) {
  long long n = static_cast<long long>(A.order()) * B.order();
  detail::check_order_cap(n, max_order, "direct_product");
  int nb = B.order(), m = static_cast<int>(n);
  std::vector<int> t(static_cast<size_t>(m) * m);
  for (int a1 = 0; a1 < A.order(); ++a1)
    for (int b1 = 0; b1 < nb; ++b1)
      for (int a2 = 0; a2 < A.order(); ++a2)
        for (int b2 = 0; b2 < nb; ++b2)
          t[(a1 * nb + b1) * m + (a2 * nb + b2)] =
              A.mul(a1, a2) * nb + B.mul(b1, b2);
  return Group(m, std::move(t), A.label() + "x" + B.label(),
               Group::TableCheck::trusted);
}

// Exponent-p Heisenberg group of order p^3: upper unitriangular 3x3 matrices
// over GF(p), (a,b,c)*(a',b',c') = (a+a', b+b', c+c'+a*b').
inline Group extraspecial_p3(int p, int max_order = kDefaultMaxOrder) {
  if (!detail::is_prime(p))
    throw NotPrime("extraspecial_p3: p = " + std::to_string(p));
  if (p == 2)
    throw ParameterOutOfRange("extraspecial_p3: p must be an odd prime");
  long long n = 1ll * p * p * p;
  detail::check_order_cap(n, max_order, "extraspecial_p3");
  int m = static_cast<int>(n);
  auto enc = [p](int a, int b, int c) { return (a * p + b) * p + c; };
  std::vector<int> t(static_cast<size_t>(m) * m);
  for (int a1 = 0; a1 < p; ++a1)
    for (int b1 = 0; b1 < p; ++b1)
      for (int c1 = 0; c1 < p; ++c1)
        for (int a2 = 0; a2 < p; ++a2)
          for (int b2 = 0; b2 < p; ++b2)
            for (int c2 = 0; c2 < p; ++c2)
              t[enc(a1, b1, c1) * m + enc(a2, b2, c2)] =
                  enc((a1 + a2) % p, (b1 + b2) % p, (c1 + c2 + a1 * b2) % p);
  return Group(m, std::move(t), "ES" + std::to_string(m),
               Group::TableCheck::trusted);
}

// (k1,m1)*(k2,m2) = (k1 * act[m1](k2), m1*m2), index (k,m) -> k*|M| + m.
// act[m] must be an automorphism of K and m -> act[m] a homomorphism for the
// left action: act[m1*m2] = act[m1] o act[m2].
inline Group semidirect_product(const Group& K, const Group& M,
                                const std::vector<std::vector<int>>& act,
                                int max_order = kDefaultMaxOrder,
                                std::string label = "") {
  int nk = K.order(), nm = M.order();
  if (static_cast<int>(act.size()) != nm)
    throw NotAnAction("semidirect_product: need one permutation per element of M");
  for (int m = 0; m < nm; ++m) {
    const auto& row = act[m];
    if (static_cast<int>(row.size()) != nk)
      throw NotAnAutomorphism("semidirect_product: action row has wrong size");
    std::vector<int> seen(nk, 0);
    for (int v : row) {
      if (v < 0 || v >= nk || seen[v]++)
        throw NotAnAutomorphism("semidirect_product: action row " +
                                std::to_string(m) + " is not a permutation");
    }
    for (int k1 = 0; k1 < nk; ++k1)
      for (int k2 = 0; k2 < nk; ++k2)
        if (row[K.mul(k1, k2)] != K.mul(row[k1], row[k2]))
          throw NotAnAutomorphism("semidirect_product: row " +
                                  std::to_string(m) +
                                  " does not preserve multiplication");
  }
  for (int m1 = 0; m1 < nm; ++m1)
    for (int m2 = 0; m2 < nm; ++m2)
      for (int k = 0; k < nk; ++k)
        if (act[M.mul(m1, m2)][k] != act[m1][act[m2][k]])
          throw NotAnAction("semidirect_product: act[m1*m2] != act[m1] o act[m2]");
  long long n = static_cast<long long>(nk) * nm;
  detail::check_order_cap(n, max_order, "semidirect_product");
  int mm = static_cast<int>(n);
  std::vector<int> t(static_cast<size_t>(mm) * mm);
  for (int k1 = 0; k1 < nk; ++k1)
    for (int m1 = 0; m1 < nm; ++m1)
      for (int k2 = 0; k2 < nk; ++k2)
        for (int m2 = 0; m2 < nm; ++m2)
          t[(k1 * nm + m1) * mm + (k2 * nm + m2)] =
              K.mul(k1, act[m1][k2]) * nm + M.mul(m1, m2);
  if (label.empty()) label = K.label() + ":" + M.label();
  return Group(mm, std::move(t), std::move(label), Group::TableCheck::trusted);
}

namespace detail {
// Multiplicative group of GF(p): values 1..p-1 ascending, index = value - 1.
inline Group units_mod(int p) {
  int n = p - 1;
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i * n + j] = (i + 1) * (j + 1) % p - 1;
  return Group(n, std::move(t), "U" + std::to_string(p),
               Group::TableCheck::trusted);
}

inline int mod_inverse(int u, int p) {
  for (int v = 1; v < p; ++v)
    if (u * v % p == 1) return v;
  throw std::logic_error("no modular inverse");
}

// Elementary abelian p^k with digit encoding, digit 0 most significant.
inline Group elementary_abelian(int p, int k, int max_order) {
  long long n = 1;
  for (int i = 0; i < k; ++i) n *= p;
  check_order_cap(n, max_order, "elementary_abelian");
  int m = static_cast<int>(n);
  std::vector<int> t(static_cast<size_t>(m) * m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      // digits added mod p, most significant first
      int xx = x, yy = y, acc = 0, pw = m / p;
      for (int i = 0; i < k; ++i) {
        acc = acc * p + (xx / pw + yy / pw) % p;
        xx %= pw;
        yy %= pw;
        pw /= p;
      }
      t[x * m + y] = acc;
    }
  return Group(m, std::move(t), "C" + std::to_string(p) + "^" + std::to_string(k),
               Group::TableCheck::trusted);
}
}  // namespace detail

// Affine group of GF(p): translations extended by the multiplicative group,
// order p(p-1). The element (t,u) (index t*(p-1) + u-1) acts on GF(p) by
// x -> u*x + t. For p = 5 this is the Frobenius group of order 20.
inline Group affine(int p, int max_order = kDefaultMaxOrder) {
  if (!detail::is_prime(p)) throw NotPrime("affine: p = " + std::to_string(p));
  Group F = cyclic(p, max_order);
  Group U = detail::units_mod(p);
  std::vector<std::vector<int>> act(U.order(), std::vector<int>(p));
  for (int ui = 0; ui < U.order(); ++ui)
    for (int tt = 0; tt < p; ++tt) act[ui][tt] = (ui + 1) * tt % p;
  return semidirect_product(F, U, act, max_order, "Aff(" + std::to_string(p) + ")");
}

// Closure of permutation generators on `degree` points, elements sorted
// lexicographically (identity first), composition left to right.
inline Group from_permutations(int degree,
                               const std::vector<std::vector<int>>& gens,
                               int max_order = kDefaultMaxOrder,
                               std::string label = "") {
  if (degree < 1) throw ParameterOutOfRange("from_permutations: degree >= 1");
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != degree)
      throw NotAPermutation("generator has wrong degree");
    std::vector<int> seen(degree, 0);
    for (int v : g)
      if (v < 0 || v >= degree || seen[v]++)
        throw NotAPermutation("generator is not a permutation of 0..degree-1");
  }
  auto compose = [degree](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(degree);
    for (int x = 0; x < degree; ++x) r[x] = q[p[x]];
    return r;
  };
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> elems;
  std::map<std::vector<int>, int> seen;
  auto push = [&](std::vector<int> p) {
    if (seen.emplace(p, 0).second) {
      elems.push_back(std::move(p));
      detail::check_order_cap(static_cast<long long>(elems.size()), max_order,
                              "from_permutations");
    }
  };
  push(id);
  for (const auto& g : gens) push(g);
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j <= i; ++j) {
      push(compose(elems[i], elems[j]));
      push(compose(elems[j], elems[i]));
    }
  std::sort(elems.begin(), elems.end());
  for (size_t i = 0; i < elems.size(); ++i) seen[elems[i]] = static_cast<int>(i);
  int n = static_cast<int>(elems.size());
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t[i * n + j] = seen[compose(elems[i], elems[j])];
  if (label.empty())
    label = "Perm(" + std::to_string(degree) + ")#" + std::to_string(n);
  return Group(n, std::move(t), std::move(label), Group::TableCheck::trusted);
}

inline Group symmetric(int n, int max_order = kDefaultMaxOrder) {
  if (n < 1 || n > 6)
    throw ParameterOutOfRange("symmetric: supported range is 1 <= n <= 6");
  std::vector<std::vector<int>> gens;
  if (n >= 2) {
    std::vector<int> swap01(n), cyc(n);
    std::iota(swap01.begin(), swap01.end(), 0);
    std::swap(swap01[0], swap01[1]);
    for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
    gens = {swap01, cyc};
  }
  return from_permutations(n, gens, max_order, "S" + std::to_string(n));
}

inline Group alternating(int n, int max_order = kDefaultMaxOrder) {
  if (n < 1 || n > 6)
    throw ParameterOutOfRange("alternating: supported range is 1 <= n <= 6");
  std::vector<std::vector<int>> gens;
  for (int i = 0; i + 2 < n; ++i) {
    std::vector<int> g(n);
    std::iota(g.begin(), g.end(), 0);
    g[i] = i + 1;
    g[i + 1] = i + 2;
    g[i + 2] = i;
    gens.push_back(std::move(g));
  }
  return from_permutations(n, gens, max_order, "A" + std::to_string(n));
}

// Wreath-type construction over GF(p): K = C_p^p (functions GF(p) -> C_p),
// M = affine(p) permuting coordinates through its action on GF(p), G = K : M.
// H is the subgroup K : F given by the translation part only (index p-1 in
// G), and `a` is the K-vector concentrated in coordinate 0. For p = 2 the
// multiplicative part is trivial and H = G.
struct WreathAffineParts {
  Group g;
  Subgroup h;
  int a;
};

inline WreathAffineParts wreath_affine(int p, int max_order = kDefaultMaxOrder) {
  if (!detail::is_prime(p))
    throw NotPrime("wreath_affine: p = " + std::to_string(p));
  long long kn = 1;
  for (int i = 0; i < p; ++i) kn *= p;
  detail::check_order_cap(kn * p * (p - 1), max_order, "wreath_affine");
  Group K = detail::elementary_abelian(p, p, max_order);
  Group M = affine(p, max_order);
  int nk = K.order(), nm = M.order();
  // coordinate permutation: (act[m] f)(x) = f(alpha_m^-1(x)), alpha_m affine
  std::vector<std::vector<int>> act(nm, std::vector<int>(nk));
  for (int m = 0; m < nm; ++m) {
    int t = m / (p - 1), u = m % (p - 1) + 1;
    int uinv = detail::mod_inverse(u, p);
    std::vector<int> digits(p);
    for (int k = 0; k < nk; ++k) {
      int kk = k;
      for (int x = p - 1; x >= 0; --x) {
        digits[x] = kk % p;
        kk /= p;
      }
      int out = 0;
      for (int x = 0; x < p; ++x)
        out = out * p + digits[uinv * ((x - t + p) % p) % p];
      act[m][k] = out;
    }
  }
  Group G = semidirect_product(K, M, act, max_order);
  ElementSet hs(G);
  for (int k = 0; k < nk; ++k)
    for (int t = 0; t < p; ++t) hs.add(k * nm + t * (p - 1));
  Subgroup H = Subgroup::from_set(hs);
  int a = (nk / p) * nm;  // vector (1,0,...,0), trivial affine part
  return WreathAffineParts{std::move(G), std::move(H), a};
}

}  // namespace classprod
