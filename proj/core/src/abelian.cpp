#include "wedgelab/abelian.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "wedgelab/errors.hpp"
#include "wedgelab/morphism.hpp"

namespace wedgelab {

namespace {

using i64 = std::int64_t;
__extension__ typedef __int128 i128;

i64 mod(i128 a, i64 n) {
  i128 r = a % n;
  return static_cast<i64>(r < 0 ? r + n : r);
}

/// g = gcd(a, b) = s*a + t*b for a, b >= 0, with (s, t) = (1, 0) when a
/// divides b so that elimination steps never undo each other.
i64 egcd(i64 a, i64 b, i64& s, i64& t) {
  if (a != 0 && b % a == 0) {
    s = 1;
    t = 0;
    return a;
  }
  i64 s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    const i64 q = a / b;
    i64 tmp = a - q * b;
    a = b;
    b = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  s = s0;
  t = t0;
  return a;
}

/// Square matrix over Z whose row lattice always contains n*Z^k, so entries
/// may be reduced modulo n.
struct ModLattice {
  std::size_t k;
  i64 n;
  std::vector<i64> a;
  i128 det;

  ModLattice(std::size_t k_, i64 n_) : k(k_), n(n_), a(k_ * k_, 0), det(1) {
    for (std::size_t i = 0; i < k; ++i) {
      at(i, i) = n;
      det *= n;
    }
  }
  i64& at(std::size_t i, std::size_t j) { return a[i * k + j]; }

  /// Adds a relation row (destroyed) to the upper-triangular lattice.
  void insert(std::vector<i64>& rel) {
    for (std::size_t c = 0; c < k; ++c) {
      if (rel[c] == 0) continue;
      const i64 x = at(c, c), b = rel[c];
      i64 sc, tc;
      const i64 gg = egcd(x, b, sc, tc);
      for (std::size_t j = c + 1; j < k; ++j) {
        const i64 hc = at(c, j), rj = rel[j];
        at(c, j) = mod(static_cast<i128>(sc) * hc + static_cast<i128>(tc) * rj, n);
        rel[j] = mod(static_cast<i128>(x / gg) * rj - static_cast<i128>(b / gg) * hc, n);
      }
      rel[c] = 0;
      if (gg != x) {
        det = det / x * gg;
        at(c, c) = gg;
      }
    }
  }
};

/// Smith normal form of a lattice containing n*Z^k: diag[t] are the
/// invariant factors (1 for trivial, n for free) and v, vinv the column
/// transforms, so that coordinates are x * v and basis row t is vinv[t].
struct SmithForm {
  std::vector<i64> v, vinv, diag;
};

SmithForm smith_form(const ModLattice& h) {
  const std::size_t k = h.k;
  const i64 n = h.n;
  ModLattice a(k, n);
  for (std::size_t i = 0; i < k * k; ++i) a.a[i] = mod(h.a[i], n);
  std::vector<i64> v(k * k, 0), vinv(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) v[i * k + i] = vinv[i * k + i] = 1;
  auto swap_cols = [&](std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (std::size_t i = 0; i < k; ++i) {
      std::swap(a.at(i, c1), a.at(i, c2));
      std::swap(v[i * k + c1], v[i * k + c2]);
      std::swap(vinv[c1 * k + i], vinv[c2 * k + i]);
    }
  };
  auto swap_rows = [&](std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t j = 0; j < k; ++j) std::swap(a.at(r1, j), a.at(r2, j));
  };
  // Rows t, i combined so that A[t][t] becomes gcd and A[i][t] becomes 0.
  auto combine_rows = [&](std::size_t t, std::size_t i) {
    const i64 x = a.at(t, t), y = a.at(i, t);
    i64 sc, tc;
    const i64 gg = egcd(x, y, sc, tc);
    for (std::size_t j = 0; j < k; ++j) {
      const i64 rt = a.at(t, j), ri = a.at(i, j);
      a.at(t, j) = mod(static_cast<i128>(sc) * rt + static_cast<i128>(tc) * ri, n);
      a.at(i, j) = mod(static_cast<i128>(x / gg) * ri - static_cast<i128>(y / gg) * rt, n);
    }
  };
  auto combine_cols = [&](std::size_t t, std::size_t j) {
    const i64 x = a.at(t, t), y = a.at(t, j);
    i64 sc, tc;
    const i64 gg = egcd(x, y, sc, tc);
    const i64 xg = x / gg, yg = y / gg;
    for (std::size_t i = 0; i < k; ++i) {
      const i64 ct = a.at(i, t), cj = a.at(i, j);
      a.at(i, t) = mod(static_cast<i128>(sc) * ct + static_cast<i128>(tc) * cj, n);
      a.at(i, j) = mod(static_cast<i128>(xg) * cj - static_cast<i128>(yg) * ct, n);
      const i64 vt = v[i * k + t], vj = v[i * k + j];
      v[i * k + t] = mod(static_cast<i128>(sc) * vt + static_cast<i128>(tc) * vj, n);
      v[i * k + j] = mod(static_cast<i128>(xg) * vj - static_cast<i128>(yg) * vt, n);
      const i64 wt = vinv[t * k + i], wj = vinv[j * k + i];
      vinv[t * k + i] = mod(static_cast<i128>(xg) * wt + static_cast<i128>(yg) * wj, n);
      vinv[j * k + i] = mod(static_cast<i128>(-tc) * wt + static_cast<i128>(sc) * wj, n);
    }
  };

  std::vector<i64> diag(k, n);
  for (std::size_t t = 0; t < k; ++t) {
    bool all_zero = false;
    for (;;) {
      std::size_t pi = k, pj = k;
      i64 best = 0;
      for (std::size_t i = t; i < k; ++i) {
        for (std::size_t j = t; j < k; ++j) {
          const i64 e = a.at(i, j);
          if (e != 0 && (best == 0 || e < best)) {
            best = e;
            pi = i;
            pj = j;
          }
        }
      }
      if (best == 0) {
        all_zero = true;
        break;
      }
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool dirty = true;
      while (dirty) {
        dirty = false;
        for (std::size_t i = t + 1; i < k; ++i) {
          if (a.at(i, t) != 0) combine_rows(t, i);
        }
        for (std::size_t j = t + 1; j < k; ++j) {
          if (a.at(t, j) != 0) {
            combine_cols(t, j);
            dirty = true;
          }
        }
        if (dirty) {
          dirty = false;
          for (std::size_t i = t + 1; i < k; ++i) dirty = dirty || a.at(i, t) != 0;
        }
      }
      // Row t is now p*e_t; p may be replaced by gcd(p, n) using n*e_t.
      const i64 p = std::gcd(a.at(t, t), n);
      a.at(t, t) = p;
      std::size_t bad = k;
      for (std::size_t i = t + 1; i < k && bad == k; ++i) {
        for (std::size_t j = t + 1; j < k; ++j) {
          if (a.at(i, j) % p != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad == k) {
        diag[t] = p;
        break;
      }
      for (std::size_t j = 0; j < k; ++j) a.at(t, j) = mod(static_cast<i128>(a.at(t, j)) + a.at(bad, j), n);
    }
    if (all_zero) break;
  }

  return SmithForm{std::move(v), std::move(vinv), std::move(diag)};
}

}  // namespace

std::uint64_t AbelianInvariants::order() const {
  std::uint64_t o = 1;
  for (auto d : factors) o *= d;
  return o;
}

std::string AbelianInvariants::describe() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) os << ',';
    os << factors[i];
  }
  os << ']';
  return os.str();
}

AbelianInvariants normalize_invariants(std::span<const std::uint64_t> cyclic_orders) {
  std::map<std::uint64_t, std::vector<std::uint64_t>> by_prime;  // prime -> prime powers
  for (std::uint64_t m : cyclic_orders) {
    for (std::uint64_t p = 2; p * p <= m; ++p) {
      if (m % p) continue;
      std::uint64_t q = 1;
      while (m % p == 0) {
        m /= p;
        q *= p;
      }
      by_prime[p].push_back(q);
    }
    if (m > 1) by_prime[m].push_back(m);
  }
  std::size_t len = 0;
  for (auto& [p, qs] : by_prime) {
    std::sort(qs.begin(), qs.end(), std::greater<>());
    len = std::max(len, qs.size());
  }
  std::vector<std::uint64_t> f(len, 1);
  for (auto& [p, qs] : by_prime) {
    for (std::size_t i = 0; i < qs.size(); ++i) f[len - 1 - i] *= qs[i];
  }
  return AbelianInvariants{f};
}

std::vector<std::int64_t> AbelianBasis::coords(Elem x) const {
  const auto it = std::lower_bound(members_.begin(), members_.end(), x);
  if (it == members_.end() || *it != x) throw Error("element is not in the abelian subgroup");
  const std::size_t idx = static_cast<std::size_t>(it - members_.begin());
  std::vector<std::int64_t> out(kept_.size());
  for (std::size_t t = 0; t < kept_.size(); ++t) {
    const std::size_t col = kept_[t];
    const i64 d = static_cast<i64>(factors_[t]);
    i128 acc = 0;
    for (std::size_t j = 0; j < k_; ++j) acc += static_cast<i128>(raw_[idx * k_ + j]) * v_[j * k_ + col];
    out[t] = mod(acc, d);
  }
  return out;
}

Elem AbelianBasis::element(std::span<const std::int64_t> c) const {
  Elem x = kIdentity;
  for (std::size_t t = 0; t < basis_.size(); ++t) x = parent_->mul(x, parent_->pow(basis_[t], c[t]));
  return x;
}

AbelianBasis abelian_basis(const Subgroup& s) {
  if (!is_abelian(s)) throw NotApplicable("subgroup is not abelian");
  const Group& g = *s.parent();
  AbelianBasis out;
  out.parent_ = s.parent();
  out.members_ = s.members();

  std::vector<Elem> gens;
  for (Elem x : s.generators()) {
    if (x != kIdentity && std::find(gens.begin(), gens.end(), x) == gens.end()) gens.push_back(x);
  }
  const std::size_t k = gens.size();
  const std::size_t size = s.order();
  const i64 n = static_cast<i64>(size);
  out.k_ = k;
  if (k == 0) return out;

  auto index_of = [&](Elem x) {
    return static_cast<std::size_t>(std::lower_bound(out.members_.begin(), out.members_.end(), x) -
                                    out.members_.begin());
  };

  // Breadth-first exponent vectors; every revisit yields a relation.
  ModLattice h(k, n);
  std::vector<i64> rel(k);
  out.raw_.assign(size * k, 0);
  std::vector<char> seen(size, 0);
  std::vector<std::size_t> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t xi = queue[head];
    const Elem x = out.members_[xi];
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t yi = index_of(g.mul(x, gens[j]));
      if (!seen[yi]) {
        seen[yi] = 1;
        queue.push_back(yi);
        for (std::size_t c = 0; c < k; ++c) out.raw_[yi * k + c] = out.raw_[xi * k + c];
        out.raw_[yi * k + j] = static_cast<std::int32_t>((out.raw_[yi * k + j] + 1) % n);
      } else if (h.det != n) {
        for (std::size_t c = 0; c < k; ++c) {
          rel[c] = mod(static_cast<i128>(out.raw_[xi * k + c]) + (c == j ? 1 : 0) - out.raw_[yi * k + c], n);
        }
        h.insert(rel);
      }
    }
  }
  if (queue.size() != size) throw Error("subgroup generators do not generate its members");

  const SmithForm sf = smith_form(h);
  const auto& v = sf.v;
  const auto& vinv = sf.vinv;
  const auto& diag = sf.diag;
  out.v_ = v;
  for (std::size_t t = 0; t < k; ++t) {
    if (diag[t] <= 1) continue;
    out.kept_.push_back(t);
    out.factors_.push_back(static_cast<std::uint64_t>(diag[t]));
    Elem b = kIdentity;
    for (std::size_t j = 0; j < k; ++j) b = g.mul(b, g.pow(gens[j], vinv[t * k + j]));
    out.basis_.push_back(b);
  }
  return out;
}

SmithQuotient smith_quotient(std::size_t k, std::int64_t n, std::vector<std::vector<std::int64_t>> rows) {
  if (n < 1) throw Error("modulus must be positive");
  SmithQuotient out;
  out.coords.assign(k, {});
  if (k == 0 || n == 1) return out;
  ModLattice h(k, n);
  for (auto& r : rows) {
    if (r.size() != k) throw Error("relation row has the wrong length");
    for (auto& x : r) x = mod(x, n);
    h.insert(r);
  }
  const SmithForm sf = smith_form(h);
  for (std::size_t t = 0; t < k; ++t) {
    if (sf.diag[t] <= 1) continue;
    out.factors.push_back(static_cast<std::uint64_t>(sf.diag[t]));
    for (std::size_t j = 0; j < k; ++j) out.coords[j].push_back(mod(sf.v[j * k + t], sf.diag[t]));
  }
  return out;
}

AbelianBasis abelian_basis(const GroupPtr& g) { return abelian_basis(whole_group(g)); }

AbelianInvariants abelian_invariants(const GroupPtr& g, std::size_t dense_cutoff) {
  const Subgroup d = derived_subgroup(g);
  if (d.is_trivial()) return abelian_basis(g).invariants();
  const auto q = quotient(g, d, dense_cutoff);
  return abelian_basis(q.group).invariants();
}

AbelianInvariants abelian_invariants(const Subgroup& s) { return abelian_basis(s).invariants(); }

}  // namespace wedgelab
