#include "wedgelab/wedge.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <random>

#include "wedgelab/errors.hpp"
#include "wedgelab/presentation.hpp"

namespace wedgelab {

std::string to_string(WedgeStrategy s) {
  switch (s) {
    case WedgeStrategy::Auto: return "auto";
    case WedgeStrategy::Abelian: return "abelian";
    case WedgeStrategy::Cover: return "cover";
    case WedgeStrategy::DirectProduct: return "product";
    case WedgeStrategy::Generic: return "generic";
    case WedgeStrategy::Hopf: return "hopf";
  }
  return "?";
}

WedgeStrategy parse_wedge_strategy(const std::string& name) {
  for (auto s : {WedgeStrategy::Auto, WedgeStrategy::Abelian, WedgeStrategy::Cover, WedgeStrategy::DirectProduct,
                 WedgeStrategy::Generic, WedgeStrategy::Hopf}) {
    if (to_string(s) == name) return s;
  }
  throw ParameterViolation("unknown wedge strategy '" + name + "'");
}

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

Morphism trivial_map(const GroupPtr& from, const GroupPtr& to) {
  return extend_to_morphism(from, to, std::vector<Elem>(from->generators().size(), kIdentity));
}

/// Coordinates of every element of G in an adapted basis of G^ab.
struct AbelianizationCoords {
  std::vector<std::uint64_t> factors;
  std::vector<std::int64_t> table;  // |G| x rank
  std::size_t rank() const { return factors.size(); }
  const std::int64_t* of(Elem x) const { return table.data() + static_cast<std::size_t>(x) * rank(); }
};

AbelianizationCoords abelianization_coords(const GroupPtr& g, std::size_t cutoff) {
  AbelianizationCoords a;
  if (is_abelian(g)) {
    const AbelianBasis b = abelian_basis(g);
    a.factors = b.factors();
    a.table.reserve(g->order() * a.rank());
    for (Elem x = 0; x < g->order(); ++x) {
      const auto c = b.coords(x);
      a.table.insert(a.table.end(), c.begin(), c.end());
    }
    return a;
  }
  const QuotientResult q = quotient(g, derived_subgroup(g), cutoff);
  const AbelianBasis b = abelian_basis(q.group);
  a.factors = b.factors();
  std::vector<std::vector<std::int64_t>> per_class(q.group->order());
  for (Elem y = 0; y < q.group->order(); ++y) per_class[y] = b.coords(y);
  a.table.reserve(g->order() * a.rank());
  for (Elem x = 0; x < g->order(); ++x) {
    const auto& c = per_class[q.projection(x)];
    a.table.insert(a.table.end(), c.begin(), c.end());
  }
  return a;
}

/// Shared layout of the alternating/bilinear part: one cyclic factor
/// gcd(d_i, e_j) per index pair with a nontrivial gcd.
struct BilinearPart {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::uint64_t> moduli;
  std::shared_ptr<AbelianGroup> group;
};

BilinearPart bilinear_part(const std::vector<std::uint64_t>& d, const std::vector<std::uint64_t>& e, bool alternating) {
  BilinearPart b;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = alternating ? i + 1 : 0; j < e.size(); ++j) {
      const std::uint64_t m = std::gcd(d[i], e[j]);
      if (m > 1) {
        b.pairs.push_back({i, j});
        b.moduli.push_back(m);
      }
    }
  }
  b.group = std::make_shared<AbelianGroup>(b.moduli);
  return b;
}

}  // namespace

// --------------------------------------------------------------- abelian

WedgeStructure wedge_abelian(const GroupPtr& g) {
  if (!is_abelian(g)) throw NotApplicable("abelian wedge needs an abelian group");
  auto coords = std::make_shared<AbelianizationCoords>(abelianization_coords(g, g->order()));
  auto part = std::make_shared<BilinearPart>(bilinear_part(coords->factors, coords->factors, true));
  WedgeStructure ws;
  ws.g = g;
  ws.w = part->group;
  ws.pair_fn = [coords, part](Elem a, Elem b) {
    const std::int64_t* x = coords->of(a);
    const std::int64_t* y = coords->of(b);
    std::vector<std::int64_t> c(part->pairs.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
      const auto [i, j] = part->pairs[k];
      c[k] = mod(x[i] * y[j] - x[j] * y[i], static_cast<std::int64_t>(part->moduli[k]));
    }
    return part->group->element(c);
  };
  ws.act_fn = [](Elem, Elem w) { return w; };
  ws.kappa = trivial_map(ws.w, g);
  ws.strategy = WedgeStrategy::Abelian;
  ws.detail = "bilinear formula on " + AbelianInvariants{coords->factors}.describe();
  return ws;
}

// ----------------------------------------------------------------- cover

namespace {

/// W = E' for a central extension E -> G, pairing by commutators of lifts.
WedgeStructure wedge_from_extension(const GroupPtr& g, const GroupPtr& e, std::shared_ptr<const std::vector<Elem>> lift,
                                    const std::function<Elem(Elem)>& proj, std::size_t dense_cutoff) {
  auto emb = std::make_shared<EmbeddedGroup>(subgroup_as_group(derived_subgroup(e), dense_cutoff));
  WedgeStructure ws;
  ws.g = g;
  ws.w = emb->group;
  ws.pair_fn = [e, lift, emb](Elem a, Elem b) { return emb->from_parent[e->comm((*lift)[a], (*lift)[b])]; };
  ws.act_fn = [e, lift, emb](Elem x, Elem w) { return emb->from_parent[e->conj(emb->to_parent[w], (*lift)[x])]; };
  std::vector<Elem> images;
  for (Elem w : ws.w->generators()) images.push_back(proj(emb->to_parent[w]));
  ws.kappa = extend_to_morphism(ws.w, g, std::move(images));
  return ws;
}

}  // namespace

std::vector<Elem> cover_lifts(const CoverData& c) {
  const std::size_t n = c.proj.target->order();
  std::vector<Elem> lift(n, kNoElem);
  std::size_t found = 0;
  for (Elem x = 0; x < c.h->order() && found < n; ++x) {
    Elem& slot = lift[c.proj(x)];
    if (slot == kNoElem) {
      slot = x;
      ++found;
    }
  }
  if (found != n) throw Error("cover projection is not surjective");
  return lift;
}

WedgeStructure wedge_from_cover(const CoverData& c, std::size_t dense_cutoff) {
  auto lift = std::make_shared<const std::vector<Elem>>(cover_lifts(c));
  const Morphism proj = c.proj;
  WedgeStructure ws = wedge_from_extension(c.proj.target, c.h, lift, [proj](Elem x) { return proj(x); }, dense_cutoff);
  ws.strategy = WedgeStrategy::Cover;
  ws.detail = c.kind;
  return ws;
}

// ------------------------------------------------------------------ hopf

namespace {

/// G x A for a finite abelian A with (g, a)(h, b) = (gh, a + b + f(g, h)),
/// id g + |G| * a. f(1, h) = f(g, 1) = 0.
class CocycleExtension final : public Group {
 public:
  CocycleExtension(GroupPtr g, std::vector<std::uint64_t> factors, std::vector<std::int32_t> f, std::size_t order)
      : Group(order, {}), g_(std::move(g)), d_(std::move(factors)), f_(std::move(f)) {
    const std::size_t n = g_->order();
    for (Elem s : g_->generators()) gens_.push_back(s);
    Elem unit = static_cast<Elem>(n);
    for (std::size_t t = 0; t < d_.size(); ++t) {
      gens_.push_back(unit);
      unit = static_cast<Elem>(unit * d_[t]);
    }
  }

  Elem mul(Elem x, Elem y) const override {
    const std::size_t n = g_->order();
    const Elem gx = x % n, gy = y % n;
    std::size_t ax = x / n, ay = y / n;
    const std::int32_t* c = f_.data() + (static_cast<std::size_t>(gx) * n + gy) * d_.size();
    std::size_t a = 0, radix = 1;
    for (std::size_t t = 0; t < d_.size(); ++t) {
      const std::size_t d = d_[t];
      a += (ax % d + ay % d + static_cast<std::size_t>(c[t])) % d * radix;
      ax /= d;
      ay /= d;
      radix *= d;
    }
    return static_cast<Elem>(g_->mul(gx, gy) + n * a);
  }

  Elem inv(Elem x) const override {
    const std::size_t n = g_->order();
    const Elem gx = x % n, gi = g_->inv(gx);
    std::size_t ax = x / n;
    const std::int32_t* c = f_.data() + (static_cast<std::size_t>(gx) * n + gi) * d_.size();
    std::size_t a = 0, radix = 1;
    for (std::size_t t = 0; t < d_.size(); ++t) {
      const std::size_t d = d_[t];
      a += (2 * d - ax % d - static_cast<std::size_t>(c[t])) % d * radix;
      ax /= d;
      radix *= d;
    }
    return static_cast<Elem>(gi + n * a);
  }

 private:
  GroupPtr g_;
  std::vector<std::uint64_t> d_;
  std::vector<std::int32_t> f_;  // |G| x |G| x rank
};

std::vector<Elem> irredundant_generators(const GroupPtr& g) {
  std::vector<Elem> gens;
  for (Elem s : g->generators()) {
    if (s != kIdentity && std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
  }
  for (std::size_t i = gens.size(); i-- > 0;) {
    std::vector<Elem> rest = gens;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (close_generators(g, rest).order() == g->order()) gens = std::move(rest);
  }
  return gens;
}

}  // namespace

namespace {

/// F/[F,R] with R/[F,R] reduced modulo exp M, or only its torsion part M
/// when `torsion_only` is set.
std::shared_ptr<const Group> hopf_extension(const GroupPtr& g, const Budgets& budgets, bool torsion_only,
                                            std::size_t* generators_used) {
  const std::size_t n = g->order();
  if (n > budgets.hopf_wedge_cap) {
    throw BudgetExceeded("Hopf wedge needs |G| <= " + std::to_string(budgets.hopf_wedge_cap));
  }
  const std::vector<Elem> x = irredundant_generators(g);
  const std::size_t r = x.size();

  // Breadth-first spanning tree of the Cayley graph; non-tree edges (v, j)
  // are the free generators v x_j t_{v x_j}^-1 of R.
  std::vector<std::int64_t> edge(n * r, -1);
  std::vector<Elem> parent(n, kNoElem);
  std::vector<std::size_t> parent_gen(n, 0);
  std::vector<Elem> order{kIdentity};
  parent[kIdentity] = kIdentity;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Elem v = order[head];
    for (std::size_t j = 0; j < r; ++j) {
      const Elem w = g->mul(v, x[j]);
      if (parent[w] == kNoElem) {
        parent[w] = v;
        parent_gen[w] = j;
        order.push_back(w);
      }
    }
  }
  std::size_t vars = 0;
  for (Elem v = 0; v < n; ++v) {
    for (std::size_t j = 0; j < r; ++j) {
      const Elem w = g->mul(v, x[j]);
      if (!(parent[w] == v && parent_gen[w] == j && w != kIdentity)) edge[v * r + j] = static_cast<std::int64_t>(vars++);
    }
  }
  auto tree_word = [&](Elem v) {
    std::vector<std::size_t> w;
    for (; v != kIdentity; v = parent[v]) w.push_back(parent_gen[v]);
    std::reverse(w.begin(), w.end());
    return w;
  };
  // Reidemeister-Schreier rewriting; returns the end vertex.
  auto forward = [&](Elem v, std::size_t j, std::vector<std::int64_t>& row, std::int64_t sign) {
    if (edge[v * r + j] >= 0) row[static_cast<std::size_t>(edge[v * r + j])] += sign;
    return g->mul(v, x[j]);
  };
  auto backward = [&](Elem v, std::size_t j, std::vector<std::int64_t>& row, std::int64_t sign) {
    const Elem u = g->mul(v, g->inv(x[j]));
    if (edge[u * r + j] >= 0) row[static_cast<std::size_t>(edge[u * r + j])] -= sign;
    return u;
  };

  // R/[F,R]: the Schreier generators modulo s^y = s for each generator y.
  std::vector<std::vector<std::int64_t>> rows;
  rows.reserve(vars * r);
  for (Elem v = 0; v < n; ++v) {
    for (std::size_t j = 0; j < r; ++j) {
      if (edge[v * r + j] < 0) continue;
      const auto tv = tree_word(v), tw = tree_word(g->mul(v, x[j]));
      for (std::size_t y = 0; y < r; ++y) {
        std::vector<std::int64_t> row(vars, 0);
        Elem p = backward(kIdentity, y, row, 1);
        for (std::size_t l : tv) p = forward(p, l, row, 1);
        p = forward(p, j, row, 1);
        for (auto it = tw.rbegin(); it != tw.rend(); ++it) p = backward(p, *it, row, 1);
        p = forward(p, y, row, 1);
        row[static_cast<std::size_t>(edge[v * r + j])] -= 1;
        rows.push_back(std::move(row));
      }
    }
  }
  // Modulo |G| the quotient is M + (Z/|G|)^r with exp M dividing |G|; the
  // last r factors are the free part.
  const SmithQuotient sq = smith_quotient(vars, static_cast<std::int64_t>(n), std::move(rows));
  if (sq.factors.size() < r) throw Error("Hopf quotient lost its free part");
  std::uint64_t e = 1;
  for (std::size_t t = 0; t + r < sq.factors.size(); ++t) e = std::lcm(e, sq.factors[t]);
  std::vector<std::uint64_t> d;
  std::vector<std::size_t> keep;
  std::uint64_t ext_order = n;
  const std::size_t kept_factors = torsion_only ? sq.factors.size() - r : sq.factors.size();
  for (std::size_t t = 0; t < kept_factors; ++t) {
    const std::uint64_t m = std::gcd(sq.factors[t], e);
    if (m <= 1) continue;
    d.push_back(m);
    keep.push_back(t);
    ext_order *= m;
    if (ext_order > budgets.structured_cap || ext_order >= kNoElem) {
      throw BudgetExceeded("Hopf extension exceeds the structured cap");
    }
  }
  const std::size_t rank = d.size();

  // f(g, h) is the rewrite of the tree word of h read from g.
  std::vector<std::int32_t> f(n * n * rank, 0);
  for (std::size_t oi = 1; oi < order.size(); ++oi) {
    const Elem h = order[oi], p = parent[h];
    const std::size_t j = parent_gen[h];
    for (Elem a = 0; a < n; ++a) {
      std::int32_t* out = f.data() + (static_cast<std::size_t>(a) * n + h) * rank;
      const std::int32_t* in = f.data() + (static_cast<std::size_t>(a) * n + p) * rank;
      const std::int64_t var = edge[g->mul(a, p) * r + j];
      for (std::size_t t = 0; t < rank; ++t) {
        std::int64_t v = in[t];
        if (var >= 0) v += sq.coords[static_cast<std::size_t>(var)][keep[t]];
        out[t] = static_cast<std::int32_t>(v % static_cast<std::int64_t>(d[t]));
      }
    }
  }
  if (generators_used) *generators_used = r;
  return std::make_shared<CocycleExtension>(g, d, std::move(f), static_cast<std::size_t>(ext_order));
}

}  // namespace

WedgeStructure wedge_hopf(const GroupPtr& g, const Budgets& budgets) {
  const std::size_t n = g->order();
  std::size_t r = 0;
  auto e_group = hopf_extension(g, budgets, false, &r);
  std::vector<Elem> ident(n);
  std::iota(ident.begin(), ident.end(), Elem{0});
  auto lift = std::make_shared<const std::vector<Elem>>(std::move(ident));
  WedgeStructure ws = wedge_from_extension(g, e_group, lift, [n](Elem y) { return static_cast<Elem>(y % n); },
                                           budgets.dense_cutoff);
  ws.strategy = WedgeStrategy::Hopf;
  ws.detail = "F/[F,R] on " + std::to_string(r) + " generators";
  return ws;
}

CoverData hopf_cover(const GroupPtr& g, const Budgets& budgets) {
  const std::size_t n = g->order();
  GroupPtr h = hopf_extension(g, budgets, true, nullptr);
  std::vector<Elem> table(h->order());
  for (Elem y = 0; y < h->order(); ++y) table[y] = static_cast<Elem>(y % n);
  Morphism proj = morphism_from_table(h, g, std::move(table));
  std::vector<Elem> m;
  for (Elem y = 0; y < h->order(); y += static_cast<Elem>(n)) m.push_back(y);
  Subgroup ms = close_generators(h, m);
  CoverData c{h, std::move(ms), std::move(proj), "Hopf (torsion of R/[F,R])"};
  if (!verify_cover(c)) throw Error("Hopf cover failed verification for " + g->describe());
  return c;
}

CoverData any_schur_cover(const GroupPtr& g, const Budgets& budgets) {
  try {
    return schur_cover(g, budgets.dense_cutoff);
  } catch (const UnsupportedFamily&) {
    if (g->order() > budgets.hopf_wedge_cap) throw;
  }
  return hopf_cover(g, budgets);
}

// --------------------------------------------------------------- generic

namespace {

WedgeStructure crossed_pairing(const GroupPtr& g, const Budgets& budgets, bool tensor) {
  const std::size_t n = g->order();
  if (n > budgets.generic_wedge_cap) {
    throw BudgetExceeded("crossed-pairing enumeration needs |G| <= " + std::to_string(budgets.generic_wedge_cap) +
                         ", got " + std::to_string(n));
  }
  const auto gd = materialize(g, budgets.dense_cutoff);
  // Symbol index for (a, b), or -1 when the symbol is trivial by definition.
  std::vector<std::int64_t> sym(n * n, -1);
  Presentation p;
  for (Elem a = 1; a < n; ++a) {
    for (Elem b = 1; b < n; ++b) {
      if (!tensor && a == b) continue;
      sym[a * n + b] = static_cast<std::int64_t>(p.generators.size());
      p.generators.push_back("w" + std::to_string(a) + "_" + std::to_string(b));
    }
  }
  auto w = [&](Elem a, Elem b) {
    const std::int64_t s = sym[a * n + b];
    return s < 0 ? Word() : Word::generator(static_cast<std::uint32_t>(s));
  };
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem k = 0; k < n; ++k) {
        // w(ab, k) = w(a^b, k^b) w(b, k)
        p.relators.push_back(w(gd->mul(a, b), k).inverse() * w(gd->conj(a, b), gd->conj(k, b)) * w(b, k));
        // w(a, bk) = w(a, k) w(a^k, b^k)
        p.relators.push_back(w(a, gd->mul(b, k)).inverse() * w(a, k) * w(gd->conj(a, k), gd->conj(b, k)));
      }
    }
  }
  if (!tensor) {
    for (Elem a = 1; a < n; ++a) {
      for (Elem b = a + 1; b < n; ++b) p.relators.push_back(w(a, b) * w(b, a));
    }
  }
  std::erase_if(p.relators, [](const Word& r) { return r.empty(); });
  if (p.generators.empty()) {
    p.generators.push_back("e");
    p.relators.push_back(Word::generator(0));
  }
  EnumerationOptions opts;
  opts.strategy = CosetStrategy::Felsch;
  opts.max_cosets = budgets.max_cosets;
  auto wg = realize(p, opts);
  wg->set_label(std::string(tensor ? "tensor" : "exterior") + " square of " + g->describe());

  auto pair_table = std::make_shared<std::vector<Elem>>(n * n, kIdentity);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const std::int64_t s = sym[a * n + b];
      if (s >= 0) (*pair_table)[a * n + b] = wg->generators()[static_cast<std::size_t>(s)];
    }
  }
  const std::size_t wn = wg->order();
  auto act_table = std::make_shared<std::vector<Elem>>(n * wn);
  for (Elem x = 0; x < n; ++x) {
    std::vector<Elem> images(p.generators.size());
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        const std::int64_t s = sym[a * n + b];
        if (s >= 0) images[static_cast<std::size_t>(s)] = (*pair_table)[gd->conj(a, x) * n + gd->conj(b, x)];
      }
    }
    const Morphism m = extend_to_morphism(wg, wg, std::move(images));
    for (Elem v = 0; v < wn; ++v) (*act_table)[x * wn + v] = m(v);
  }
  std::vector<Elem> kimages(p.generators.size());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const std::int64_t s = sym[a * n + b];
      if (s >= 0) kimages[static_cast<std::size_t>(s)] = gd->comm(a, b);
    }
  }

  WedgeStructure ws;
  ws.g = g;
  ws.w = wg;
  ws.pair_fn = [pair_table, n](Elem a, Elem b) { return (*pair_table)[a * n + b]; };
  ws.act_fn = [act_table, wn](Elem x, Elem v) { return (*act_table)[x * wn + v]; };
  ws.kappa = extend_to_morphism(wg, g, std::move(kimages));
  ws.strategy = WedgeStrategy::Generic;
  ws.detail = std::to_string(p.generators.size()) + " symbols, " + std::to_string(p.relators.size()) + " relators";
  return ws;
}

}  // namespace

WedgeStructure wedge_generic(const GroupPtr& g, const Budgets& budgets) { return crossed_pairing(g, budgets, false); }

WedgeStructure tensor_square(const GroupPtr& g, const Budgets& budgets) { return crossed_pairing(g, budgets, true); }

// ------------------------------------------------------- direct product

WedgeStructure wedge_direct_product(const GroupPtr& g, const WedgeStructure& w1, const WedgeStructure& w2,
                                    std::size_t dense_cutoff) {
  auto pg = std::dynamic_pointer_cast<const ProductGroup>(g);
  if (!pg) throw NotApplicable("direct-product wedge needs a product group");
  if (pg->left()->order() != w1.g->order() || pg->right()->order() != w2.g->order()) {
    throw NotApplicable("factor wedges do not match the product");
  }
  auto a1 = std::make_shared<AbelianizationCoords>(abelianization_coords(pg->left(), dense_cutoff));
  auto a2 = std::make_shared<AbelianizationCoords>(abelianization_coords(pg->right(), dense_cutoff));
  auto part = std::make_shared<BilinearPart>(bilinear_part(a1->factors, a2->factors, false));
  auto inner = std::make_shared<ProductGroup>(w1.w, w2.w);
  auto outer = std::make_shared<ProductGroup>(inner, part->group);
  outer->set_label("(" + g->describe() + ")^2 via factors");

  WedgeStructure ws;
  ws.g = g;
  ws.w = outer;
  ws.pair_fn = [pg, inner, outer, part, a1, a2, p1 = w1.pair_fn, p2 = w2.pair_fn](Elem x, Elem y) {
    const Elem g1 = pg->left_of(x), g2 = pg->right_of(x), h1 = pg->left_of(y), h2 = pg->right_of(y);
    std::vector<std::int64_t> c(part->pairs.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
      const auto [i, j] = part->pairs[k];
      c[k] = mod(a1->of(g1)[i] * a2->of(h2)[j] - a1->of(h1)[i] * a2->of(g2)[j], static_cast<std::int64_t>(part->moduli[k]));
    }
    return outer->pack(inner->pack(p1(g1, h1), p2(g2, h2)), part->group->element(c));
  };
  ws.act_fn = [pg, inner, outer, q1 = w1.act_fn, q2 = w2.act_fn](Elem x, Elem v) {
    const Elem in = outer->left_of(v);
    return outer->pack(inner->pack(q1(pg->left_of(x), inner->left_of(in)), q2(pg->right_of(x), inner->right_of(in))),
                       outer->right_of(v));
  };
  std::vector<Elem> images;
  for (Elem v : outer->generators()) {
    const Elem in = outer->left_of(v);
    images.push_back(pg->pack(w1.kappa(inner->left_of(in)), w2.kappa(inner->right_of(in))));
  }
  ws.kappa = extend_to_morphism(outer, g, std::move(images));
  ws.strategy = WedgeStrategy::DirectProduct;
  ws.detail = "factors [" + to_string(w1.strategy) + ", " + to_string(w2.strategy) + "] with mixed part " +
              AbelianInvariants{part->moduli}.describe();
  return ws;
}

// ------------------------------------------------------------------ auto

WedgeStructure wedge(const GroupPtr& g, const WedgeOptions& opts) {
  const std::size_t cutoff = opts.budgets.dense_cutoff;
  auto product = std::dynamic_pointer_cast<const ProductGroup>(g);
  switch (opts.strategy) {
    case WedgeStrategy::Abelian:
      return wedge_abelian(g);
    case WedgeStrategy::Cover:
      return wedge_from_cover(schur_cover(g, cutoff), cutoff);
    case WedgeStrategy::DirectProduct: {
      if (!product) throw NotApplicable("direct-product wedge needs a product group");
      WedgeOptions sub = opts;
      sub.strategy = WedgeStrategy::Auto;
      return wedge_direct_product(g, wedge(product->left(), sub), wedge(product->right(), sub), cutoff);
    }
    case WedgeStrategy::Generic:
      return wedge_generic(g, opts.budgets);
    case WedgeStrategy::Hopf:
      return wedge_hopf(g, opts.budgets);
    case WedgeStrategy::Auto:
      break;
  }
  if (is_abelian(g)) return wedge_abelian(g);
  if (g->family() || product) {
    try {
      return wedge_from_cover(schur_cover(g, cutoff), cutoff);
    } catch (const UnsupportedFamily&) {
    } catch (const BudgetExceeded&) {
    }
  }
  if (product) {
    WedgeOptions sub = opts;
    sub.strategy = WedgeStrategy::DirectProduct;
    return wedge(g, sub);
  }
  if (g->order() <= opts.budgets.generic_wedge_cap) return wedge_generic(g, opts.budgets);
  if (g->order() <= opts.budgets.hopf_wedge_cap) return wedge_hopf(g, opts.budgets);
  throw UnsupportedFamily("no wedge strategy applies to " + g->describe() + " (order " + std::to_string(g->order()) +
                          ")");
}

// ------------------------------------------------------------- derived data

Subgroup schur_multiplier(const WedgeStructure& w) { return kernel(w.kappa); }

Subgroup epicentre(const WedgeStructure& w) {
  const Group& g = *w.g;
  std::vector<Elem> members;
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem y = 0; y < g.order() && ok; ++y) ok = w.pair(x, y) == kIdentity;
    if (ok) members.push_back(x);
  }
  return close_generators(w.g, members);
}

Subgroup mflat(const WedgeStructure& w) {
  const Group& g = *w.g;
  std::vector<char> seen(w.w->order(), 0);
  SubgroupBuilder b(w.w);
  for (Elem x = 0; x < g.order(); ++x) {
    for (Elem y = x + 1; y < g.order(); ++y) {
      if (g.mul(x, y) != g.mul(y, x)) continue;
      const Elem v = w.pair(x, y);
      if (seen[v]) continue;
      seen[v] = 1;
      if (!b.contains(v)) b.add(v);
    }
  }
  return b.build();
}

namespace {

std::optional<Morphism> induced_map(const WedgeStructure& a, const WedgeStructure& b,
                                    const std::function<Elem(Elem)>& f) {
  const std::size_t n = a.g->order();
  // Distinct pairs (pair_a(x,y), pair_b(fx,fy)); conflicts surface in the closure below.
  std::set<std::pair<Elem, Elem>> uniq;
  std::vector<Elem> fx(n);
  for (Elem x = 0; x < n; ++x) fx[x] = f(x);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) uniq.emplace(a.pair(x, y), b.pair(fx[x], fx[y]));
  }
  const std::vector<std::pair<Elem, Elem>> step(uniq.begin(), uniq.end());
  // Breadth-first closure assigning m(u * s) = m(u) * m(s) for pair elements s.
  std::vector<Elem> m(a.w->order(), kNoElem);
  m[kIdentity] = kIdentity;
  std::vector<Elem> queue{kIdentity};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elem u = queue[head];
    for (const auto& [sa, sb] : step) {
      const Elem v = a.w->mul(u, sa);
      const Elem mv = b.w->mul(m[u], sb);
      if (m[v] == kNoElem) {
        m[v] = mv;
        queue.push_back(v);
      } else if (m[v] != mv) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != a.w->order()) return std::nullopt;
  Morphism out = morphism_from_table(a.w, b.w, std::move(m));
  if (!verify_morphism(out)) return std::nullopt;
  return out;
}

}  // namespace

std::optional<Morphism> induced_wedge_map(const WedgeStructure& a, const WedgeStructure& b, const Morphism& f) {
  if (f.source->order() != a.g->order() || f.target->order() != b.g->order()) return std::nullopt;
  return induced_map(a, b, [&f](Elem x) { return f(x); });
}

std::optional<Morphism> pairing_isomorphism(const WedgeStructure& a, const WedgeStructure& b) {
  if (a.g->order() != b.g->order() || a.w->order() != b.w->order()) return std::nullopt;
  auto m = induced_map(a, b, [](Elem x) { return x; });
  if (!m || !is_bijective(*m)) return std::nullopt;
  return m;
}

std::optional<WedgeLawFailure> check_wedge_laws(const WedgeStructure& w, std::size_t samples,
                                                std::size_t exhaustive_limit, bool tensor) {
  const Group& g = *w.g;
  const Group& wg = *w.w;
  const std::size_t n = g.order();
  auto check = [&](Elem x, Elem y, Elem z) -> std::optional<WedgeLawFailure> {
    if (!tensor && w.pair(x, x) != kIdentity) return WedgeLawFailure{"g^g = 1", x, x, x};
    if (w.pair(g.mul(x, y), z) != wg.mul(w.pair(g.conj(x, y), g.conj(z, y)), w.pair(y, z))) {
      return WedgeLawFailure{"(xy)^z = (x^y ^ z^y)(y^z)", x, y, z};
    }
    if (w.pair(x, g.mul(y, z)) != wg.mul(w.pair(x, z), w.pair(g.conj(x, z), g.conj(y, z)))) {
      return WedgeLawFailure{"x^(yz) = (x^z)(x^z ^ y^z)", x, y, z};
    }
    if (w.kappa(w.pair(x, y)) != g.comm(x, y)) return WedgeLawFailure{"kappa(x^y) = [x,y]", x, y, z};
    const Elem v = w.pair(y, z);
    if (w.act(x, v) != w.pair(g.conj(y, x), g.conj(z, x))) return WedgeLawFailure{"(y^z)^x = y^x ^ z^x", x, y, z};
    if (w.act(g.mul(x, y), v) != w.act(y, w.act(x, v))) return WedgeLawFailure{"act is a right action", x, y, z};
    if (g.mul(y, z) == g.mul(z, y) && w.act(x, v) != v) return WedgeLawFailure{"act fixes ker kappa", x, y, z};
    return std::nullopt;
  };
  if (n <= exhaustive_limit) {
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        for (Elem z = 0; z < n; ++z) {
          if (auto f = check(x, y, z)) return f;
        }
      }
    }
  } else {
    std::mt19937_64 rng(0xbeef + n);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
    for (std::size_t i = 0; i < samples; ++i) {
      if (auto f = check(pick(rng), pick(rng), pick(rng))) return f;
    }
  }
  // act fixes every element of ker kappa, not only commuting pairs.
  const Subgroup k = kernel(w.kappa);
  for (Elem v : k.generators()) {
    for (Elem s : g.generators()) {
      if (w.act(s, v) != v) return WedgeLawFailure{"act fixes ker kappa", s, v, v};
    }
  }
  return std::nullopt;
}

}  // namespace wedgelab
