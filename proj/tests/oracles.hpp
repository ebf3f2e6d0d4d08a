#pragma once

// Brute-force reference computations used to cross-check the library.
// Nothing here calls into wedgelab's algorithms; groups are handled through
// an explicit multiplication callback or explicit permutations.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;

inline Perm compose(const Perm& x, const Perm& y) {  // apply x, then y
  Perm r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = y[x[i]];
  return r;
}

inline Perm inverse(const Perm& x) {
  Perm r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[x[i]] = static_cast<int>(i);
  return r;
}

inline Perm identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

/// All elements of the group generated by `gens`, by naive closure.
inline std::set<Perm> closure(const std::vector<Perm>& gens, int degree) {
  std::set<Perm> seen{identity(degree)};
  std::vector<Perm> frontier{identity(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        Perm y = compose(x, g);
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

/// A finite group given by a full table over 0..n-1 with identity 0.
struct Table {
  std::vector<std::vector<int>> mul;
  std::vector<int> inv;
  int n() const { return static_cast<int>(mul.size()); }

  static Table from(int n, const std::function<int(int, int)>& f) {
    Table t;
    t.mul.assign(n, std::vector<int>(n));
    t.inv.assign(n, -1);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        t.mul[a][b] = f(a, b);
        if (t.mul[a][b] == 0) t.inv[a] = b;
      }
    }
    return t;
  }

  static Table from_perms(const std::set<Perm>& elems) {
    std::vector<Perm> v(elems.begin(), elems.end());
    const Perm id = identity(static_cast<int>(v.front().size()));
    std::iter_swap(v.begin(), std::find(v.begin(), v.end(), id));
    std::map<Perm, int> idx;
    for (std::size_t i = 0; i < v.size(); ++i) idx[v[i]] = static_cast<int>(i);
    return from(static_cast<int>(v.size()), [&](int a, int b) { return idx.at(compose(v[a], v[b])); });
  }

  int comm(int x, int y) const { return mul[mul[inv[x]][inv[y]]][mul[x][y]]; }

  int order_of(int x) const {
    int k = 1;
    for (int y = x; y != 0; y = mul[y][x]) ++k;
    return k;
  }

  std::set<int> close(std::set<int> s) const {
    s.insert(0);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> v(s.begin(), s.end());
      for (int a : v) {
        for (int b : v) {
          if (s.insert(mul[a][b]).second) grew = true;
        }
      }
    }
    return s;
  }

  std::set<int> center() const {
    std::set<int> z;
    for (int x = 0; x < n(); ++x) {
      bool ok = true;
      for (int y = 0; y < n() && ok; ++y) ok = mul[x][y] == mul[y][x];
      if (ok) z.insert(x);
    }
    return z;
  }

  std::set<int> derived() const {
    std::set<int> c;
    for (int x = 0; x < n(); ++x) {
      for (int y = 0; y < n(); ++y) c.insert(comm(x, y));
    }
    return close(c);
  }

  bool is_abelian() const { return center().size() == static_cast<std::size_t>(n()); }

  /// Sorted multiset of element orders.
  std::vector<int> order_profile() const {
    std::vector<int> v;
    for (int x = 0; x < n(); ++x) v.push_back(order_of(x));
    std::sort(v.begin(), v.end());
    return v;
  }

  int exponent() const {
    int e = 1;
    for (int x = 0; x < n(); ++x) e = std::lcm(e, order_of(x));
    return e;
  }

  int num_classes() const {
    std::set<std::set<int>> classes;
    for (int x = 0; x < n(); ++x) {
      std::set<int> cls;
      for (int g = 0; g < n(); ++g) cls.insert(mul[mul[inv[g]][x]][g]);
      classes.insert(cls);
    }
    return static_cast<int>(classes.size());
  }
};

/// Permutation models of the standard families on explicit point sets.
inline std::vector<Perm> dihedral_perms(int n) {  // order 2n, acting on n-gon
  Perm r(n), s(n);
  for (int i = 0; i < n; ++i) {
    r[i] = (i + 1) % n;
    s[i] = (n - i) % n;
  }
  return {r, s};
}

inline std::vector<Perm> symmetric_perms(int n) {  // (0 1) and (0 1 ... n-1)
  Perm t = identity(n), c(n);
  if (n > 1) std::swap(t[0], t[1]);
  for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return {t, c};
}

inline std::vector<Perm> alternating_perms(int n) {  // all 3-cycles
  std::vector<Perm> g;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (a == b || b == c || a == c) continue;
        Perm p = identity(n);
        p[a] = b;
        p[b] = c;
        p[c] = a;
        g.push_back(p);
      }
    }
  }
  return g;
}

/// Regular action of Z_m x| Z_n on itself from the rule (i, j)(k, l) =
/// (i + k r^j, j + l), used for metacyclic checks independent of the library.
inline Table semidirect(int m, int n, int r) {
  std::vector<int> rp(n, 1 % m);
  for (int j = 1; j < n; ++j) rp[j] = rp[j - 1] * r % m;
  return Table::from(m * n, [&](int a, int b) {
    const int i = a % m, j = a / m, k = b % m, l = b / m;
    return (i + k * rp[j]) % m + m * ((j + l) % n);
  });
}

/// Dicyclic group of order 4n on normal forms a^i b^e with b a = a^-1 b and
/// b^2 = a^n.
inline Table dicyclic(int n) {
  const int m = 2 * n;
  return Table::from(2 * m, [&](int x, int y) {
    const int i = x % m, e = x / m, k = y % m, f = y / m;
    // a^i b^e a^k b^f = a^(i + (e ? -k : k)) b^(e+f)
    int ii = ((i + (e ? -k : k)) % m + m) % m;
    int ee = e + f;
    if (ee == 2) {
      ee = 0;
      ii = (ii + n) % m;
    }
    return ii + m * ee;
  });
}

}  // namespace oracle
