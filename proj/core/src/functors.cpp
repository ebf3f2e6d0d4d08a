#include "wedgelab/functors.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "wedgelab/errors.hpp"

namespace wedgelab {

namespace {

using Comps = std::array<Elem, FunctorGroup::kMaxArity>;

std::shared_ptr<const EmbeddedGroup> derived_embedding(const GroupPtr& g, std::size_t cutoff) {
  return std::make_shared<const EmbeddedGroup>(subgroup_as_group(derived_subgroup(g), cutoff));
}

Elem product(const Group& g, const Elem* x, std::size_t k) {
  Elem p = kIdentity;
  for (std::size_t i = 0; i < k; ++i) p = g.mul(p, x[i]);
  return p;
}

Elem local(const EmbeddedGroup& e, Elem parent_elem) {
  const Elem v = e.from_parent[parent_elem];
  if (v == kNoElem) throw Error("tail left the derived subgroup");
  return v;
}

void require_automorphism(const Morphism& alpha) {
  if (alpha.source != alpha.target && alpha.source->order() != alpha.target->order()) {
    throw NotAI("map is not an endomorphism");
  }
  if (!verify_morphism(alpha) || !is_bijective(alpha)) throw NotAI("map is not an automorphism");
  if (!inverts_abelianization(alpha)) throw NotAI("automorphism does not invert the abelianization");
}

}  // namespace

// ------------------------------------------------------------ base class

FunctorGroup::FunctorGroup(GroupPtr g, std::size_t k, GroupPtr tail, Provenance prov, std::size_t cap)
    : Group(1, {}), g_(std::move(g)), t_(std::move(tail)), k_(k), prov_(std::move(prov)) {
  if (k_ == 0 || k_ > kMaxArity) throw ParameterViolation("functor arity out of range");
  long double size = static_cast<long double>(t_->order());
  for (std::size_t i = 0; i < k_; ++i) size *= static_cast<long double>(g_->order());
  if (size > static_cast<long double>(cap) || size >= static_cast<long double>(kNoElem)) {
    throw BudgetExceeded(prov_.functor + " of " + prov_.source + " exceeds the structured cap");
  }
  order_ = static_cast<std::size_t>(size);
  Comps c{};
  for (std::size_t i = 0; i < k_; ++i) {
    for (Elem s : g_->generators()) {
      if (s == kIdentity) continue;
      c[i] = s;
      gens_.push_back(encode({c.data(), k_}, kIdentity));
      c[i] = kIdentity;
    }
  }
  for (Elem t : t_->generators()) {
    if (t != kIdentity) gens_.push_back(encode({c.data(), k_}, t));
  }
}

Elem FunctorGroup::encode(std::span<const Elem> comps, Elem tail) const {
  std::size_t id = 0;
  for (std::size_t i = 0; i < k_; ++i) id = id * g_->order() + comps[i];
  return static_cast<Elem>(id * t_->order() + tail);
}

void FunctorGroup::decode(Elem x, Elem* comps, Elem* tail) const {
  std::size_t id = x;
  if (tail) *tail = static_cast<Elem>(id % t_->order());
  id /= t_->order();
  for (std::size_t i = k_; i-- > 0;) {
    comps[i] = static_cast<Elem>(id % g_->order());
    id /= g_->order();
  }
}

Elem FunctorGroup::component(Elem x, std::size_t i) const {
  Comps c{};
  decode(x, c.data(), nullptr);
  return c[i];
}

Elem FunctorGroup::mul(Elem a, Elem b) const {
  Comps ca{}, cb{}, out{};
  Elem ta, tb;
  decode(a, ca.data(), &ta);
  decode(b, cb.data(), &tb);
  for (std::size_t i = 0; i < k_; ++i) out[i] = g_->mul(ca[i], cb[i]);
  return encode({out.data(), k_}, combine_tail(ca.data(), ta, cb.data(), tb));
}

Elem FunctorGroup::inv(Elem a) const {
  Comps c{};
  decode(a, c.data(), nullptr);
  for (std::size_t i = 0; i < k_; ++i) c[i] = g_->inv(c[i]);
  const Elem y0 = encode({c.data(), k_}, kIdentity);
  const Elem t = tail_of(mul(a, y0));
  Comps one{};
  return mul(y0, encode({one.data(), k_}, t_->inv(t)));
}

// ------------------------------------------------------------------- K

KGroup::KGroup(GroupPtr g, std::size_t n, std::shared_ptr<const EmbeddedGroup> derived, std::size_t cap)
    : FunctorGroup(g, n - 1, derived->group, {"K", g->describe(), "", ""}, cap), d_(std::move(derived)) {}

Elem KGroup::combine_tail(const Elem* a, Elem at, const Elem* b, Elem bt) const {
  const Group& g = *g_;
  // Last tuple entries, their product, and the new normal-form tail.
  const Elem la = g.mul(g.inv(product(g, a, k_)), d_->to_parent[at]);
  const Elem lb = g.mul(g.inv(product(g, b, k_)), d_->to_parent[bt]);
  Elem p = kIdentity;
  for (std::size_t i = 0; i < k_; ++i) p = g.mul(p, g.mul(a[i], b[i]));
  return local(*d_, g.mul(p, g.mul(la, lb)));
}

std::vector<Elem> KGroup::tuple(Elem x) const {
  std::vector<Elem> t(k_ + 1);
  Elem c;
  decode(x, t.data(), &c);
  t[k_] = g_->mul(g_->inv(product(*g_, t.data(), k_)), d_->to_parent[c]);
  return t;
}

Elem KGroup::from_tuple(std::span<const Elem> t) const {
  if (t.size() != k_ + 1) throw ParameterViolation("tuple has the wrong length");
  const Elem c = d_->from_parent[product(*g_, t.data(), k_ + 1)];
  if (c == kNoElem) return kNoElem;
  return encode(t.first(k_), c);
}

// ------------------------------------------------------------ K structured

KStructuredGroup::KStructuredGroup(GroupPtr g, std::size_t n, std::shared_ptr<const EmbeddedGroup> derived, KLaw law,
                                   std::size_t cap)
    : FunctorGroup(g, n - 1, derived->group, {law == KLaw::Mu ? "K-mu" : "K-class2", g->describe(), "", ""}, cap),
      d_(std::move(derived)),
      law_(law) {}

Elem mu(const Group& g, std::span<const Elem> a, std::span<const Elem> b) {
  Elem p = kIdentity;
  for (std::size_t i = 0; i < a.size(); ++i) p = g.mul(p, g.mul(a[i], b[i]));
  const Elem pa = product(g, a.data(), a.size()), pb = product(g, b.data(), b.size());
  return g.mul(p, g.mul(g.inv(pa), g.inv(pb)));
}

Elem KStructuredGroup::combine_tail(const Elem* a, Elem at, const Elem* b, Elem bt) const {
  const Group& g = *g_;
  const Elem c = d_->to_parent[at], d = d_->to_parent[bt];
  if (law_ == KLaw::Class2) {
    Elem t = g.mul(c, d);
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t j = i; j < k_; ++j) t = g.mul(t, g.comm(a[i], b[j]));
    }
    return local(*d_, t);
  }
  const Elem m = mu(g, {a, k_}, {b, k_});
  const Elem ch = g.conj(c, g.inv(product(g, b, k_)));
  return local(*d_, g.mul(m, g.mul(ch, d)));
}

std::shared_ptr<const KGroup> k_group(const GroupPtr& g, std::size_t n, const Budgets& budgets) {
  if (n < 2) throw ParameterViolation("K(G,n) needs n >= 2");
  return std::make_shared<const KGroup>(g, n, derived_embedding(g, budgets.dense_cutoff), budgets.structured_cap);
}

std::shared_ptr<const KStructuredGroup> k_structured(const GroupPtr& g, std::size_t n, KLaw law,
                                                     const Budgets& budgets) {
  if (n < 2) throw ParameterViolation("K(G,n) needs n >= 2");
  return std::make_shared<const KStructuredGroup>(g, n, derived_embedding(g, budgets.dense_cutoff), law,
                                                  budgets.structured_cap);
}

Morphism k_structured_to_tuples(const std::shared_ptr<const KStructuredGroup>& s,
                                const std::shared_ptr<const KGroup>& k) {
  if (s->base() != k->base() || s->arity() != k->arity()) throw ParameterViolation("groups do not match");
  // Both store (g; c) with c in local ids of G'; the map is the identity on
  // normal forms and the check is that the two laws agree under it.
  std::vector<Elem> table(s->order());
  for (Elem x = 0; x < s->order(); ++x) {
    Comps c{};
    Elem t;
    s->decode(x, c.data(), &t);
    const Elem parent_tail = s->derived().to_parent[t];
    table[x] = k->encode({c.data(), k->arity()}, k->derived().from_parent[parent_tail]);
  }
  Morphism f = morphism_from_table(s, k, std::move(table));
  require_morphism(f);
  if (!is_bijective(f)) throw NotAMorphism("map is not bijective");
  return f;
}

// ------------------------------------------------------------------- tau

TauGroup::TauGroup(WedgeStructure w, std::string functor, std::size_t cap)
    : FunctorGroup(w.g, 2, w.w, {std::move(functor), w.g->describe(), to_string(w.strategy), w.detail}, cap),
      w_(std::move(w)) {}

Elem TauGroup::combine_tail(const Elem* a, Elem at, const Elem* b, Elem bt) const {
  const Group& g = *g_;
  const Group& w = *t_;
  const Elem pr = w_.pair(g.conj(a[1], b[1]), g.conj(b[0], b[1]));
  return w.mul(w.mul(pr, w_.act(g.mul(b[0], b[1]), at)), bt);
}

std::shared_ptr<const TauGroup> tau(const WedgeStructure& w, const Budgets& budgets) {
  return std::make_shared<const TauGroup>(w, "tau", budgets.structured_cap);
}

bool tau_derived_check(const TauGroup& t) {
  const GroupPtr self(std::shared_ptr<const TauGroup>{}, &t);
  const std::size_t gd = derived_subgroup(t.base()).order();
  return derived_subgroup(self).order() == gd * gd * t.tail()->order();
}

// ---------------------------------------------------------------- K tilde

KTildeAbelianGroup::KTildeAbelianGroup(WedgeStructure w, std::size_t n, std::size_t cap)
    : FunctorGroup(w.g, n - 1, w.w, {"K~", w.g->describe(), to_string(w.strategy), ""}, cap), w_(std::move(w)) {}

Elem KTildeAbelianGroup::combine_tail(const Elem* a, Elem at, const Elem* b, Elem bt) const {
  const Group& g = *g_;
  const Group& w = *t_;
  Elem t = w.mul(at, bt);
  Elem suffix = kIdentity;  // h_i ... h_{n-1}
  for (std::size_t i = k_; i-- > 0;) {
    suffix = g.mul(b[i], suffix);
    t = w.mul(t, w_.pair(a[i], suffix));
  }
  return t;
}

std::shared_ptr<const KTildeAbelianGroup> ktilde_abelian(const GroupPtr& g, std::size_t n, const Budgets& budgets) {
  if (n < 2) throw ParameterViolation("K~(G,n) needs n >= 2");
  if (!is_abelian(g)) throw NotApplicable("closed form needs an abelian group");
  return std::make_shared<const KTildeAbelianGroup>(wedge_abelian(g), n, budgets.structured_cap);
}

KTildeCoverGroup::KTildeCoverGroup(const CoverData& c, std::size_t dense_cutoff, std::size_t cap)
    : KTildeCoverGroup(c, derived_embedding(c.h, dense_cutoff), cap) {}

KTildeCoverGroup::KTildeCoverGroup(const CoverData& c, std::shared_ptr<const EmbeddedGroup> derived, std::size_t cap)
    : FunctorGroup(c.proj.target, 2, derived->group, {"K~", c.proj.target->describe(), "cover", c.kind}, cap),
      h_(c.h),
      lift_(cover_lifts(c)),
      d_(std::move(derived)) {}

Elem KTildeCoverGroup::combine_tail(const Elem* a, Elem at, const Elem* b, Elem bt) const {
  const Group& h = *h_;
  const std::array<Elem, 2> la{lift_[a[0]], lift_[a[1]]}, lb{lift_[b[0]], lift_[b[1]]};
  const Elem m = mu(h, la, lb);
  const Elem ch = h.conj(d_->to_parent[at], h.inv(h.mul(lb[0], lb[1])));
  return local(*d_, h.mul(m, h.mul(ch, d_->to_parent[bt])));
}

std::shared_ptr<const KTildeCoverGroup> ktilde_from_cover(const CoverData& c, const Budgets& budgets) {
  return std::make_shared<const KTildeCoverGroup>(c, budgets.dense_cutoff, budgets.structured_cap);
}

std::size_t ktilde_abelian_center_order(const WedgeStructure& w, std::size_t n) {
  const Subgroup z = epicentre(w);
  std::size_t u = 0;
  for (Elem x = 0; x < w.g->order(); ++x) u += z.contains(w.g->pow(x, static_cast<std::int64_t>(n)));
  std::size_t out = u * w.w->order();
  for (std::size_t i = 2; i < n; ++i) out *= z.order();
  return out;
}

// ------------------------------------------------------------------- Phi

bool inverts_abelianization(const Morphism& alpha) {
  const GroupPtr& g = alpha.source;
  const Subgroup d = derived_subgroup(g);
  for (Elem s : g->generators()) {
    if (!d.contains(g->mul(alpha(s), s))) return false;
  }
  return true;
}

std::vector<Elem> k3_in_cube(const GroupPtr& cube, const GroupPtr& g) {
  const auto* outer = dynamic_cast<const ProductGroup*>(cube.get());
  const auto* inner = outer ? dynamic_cast<const ProductGroup*>(outer->left().get()) : nullptr;
  if (!inner) throw ParameterViolation("cube must be (G x G) x G");
  const Subgroup d = derived_subgroup(g);
  std::vector<Elem> out;
  out.reserve(g->order() * g->order() * d.order());
  for (Elem a = 0; a < g->order(); ++a) {
    for (Elem b = 0; b < g->order(); ++b) {
      const Elem ab_inv = g->inv(g->mul(a, b));
      for (Elem c : d.members()) out.push_back(outer->pack(inner->pack(a, b), g->mul(ab_inv, c)));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Morphism phi_alpha(const std::shared_ptr<const TauGroup>& t, const Morphism& alpha) {
  const GroupPtr g = t->base();
  if (alpha.source->order() != g->order()) throw NotAI("automorphism is on a different group");
  require_automorphism(alpha);
  const auto pair = std::make_shared<ProductGroup>(g, g);
  const auto cube = std::make_shared<ProductGroup>(pair, g);
  const Morphism kappa = t->wedge().kappa;
  const Morphism a = tabulate(alpha);
  return morphism_from_formula(t, cube, [t, pair, cube, kappa, a, g](Elem x) {
    Elem c[2], w;
    t->decode(x, c, &w);
    const Elem third = a(g->mul(g->mul(c[0], c[1]), kappa(w)));
    return cube->pack(pair->pack(c[0], c[1]), third);
  });
}

CentralExtensionReport central_extension_check(const std::shared_ptr<const TauGroup>& t, const Morphism& alpha) {
  CentralExtensionReport r;
  const Morphism phi = tabulate(phi_alpha(t, alpha));
  r.tau_order = t->order();
  r.morphism = verify_morphism(phi);
  const Subgroup ker_kappa = schur_multiplier(t->wedge());
  r.multiplier_order = ker_kappa.order();

  const std::vector<Elem> k3 = k3_in_cube(phi.target, t->base());
  r.k3_order = k3.size();
  const Subgroup im = image(phi);
  r.image_order = im.order();
  r.image_is_k3 = im.members() == k3;

  const Subgroup ker = kernel(phi);
  r.kernel_order = ker.order();
  std::vector<Elem> expected;
  const Elem one[2] = {kIdentity, kIdentity};
  for (Elem c : ker_kappa.members()) expected.push_back(t->encode(one, c));
  std::sort(expected.begin(), expected.end());
  r.kernel_is_ker_kappa = ker.members() == expected;
  r.kernel_central = true;
  for (Elem k : ker.members()) {
    for (Elem s : t->generators()) {
      if (t->mul(k, s) != t->mul(s, k)) r.kernel_central = false;
    }
  }
  return r;
}

// ---------------------------------------------------------------- tau-flat

WedgeStructure wedge_quotient(const WedgeStructure& w, const Subgroup& n) {
  const GroupPtr& g = w.g;
  auto q = std::make_shared<QuotientResult>(quotient(w.w, n, std::max<std::size_t>(w.w->order(), 1)));
  WedgeStructure out;
  out.g = g;
  out.w = q->group;
  const WedgeStructure base = w;
  out.pair_fn = [base, q](Elem a, Elem b) { return q->projection(base.pair(a, b)); };
  out.act_fn = [base, q](Elem x, Elem v) { return q->projection(base.act(x, q->representatives[v])); };
  std::vector<Elem> images;
  for (Elem s : out.w->generators()) images.push_back(w.kappa(q->representatives[s]));
  out.kappa = extend_to_morphism(out.w, g, std::move(images));
  out.strategy = w.strategy;
  out.detail = w.detail + " mod " + std::to_string(n.order());
  return out;
}

std::shared_ptr<const TauGroup> tau_flat(const WedgeStructure& w, const Budgets& budgets) {
  return std::make_shared<const TauGroup>(wedge_quotient(w, mflat(w)), "tau-flat", budgets.structured_cap);
}

AbelianInvariants bogomolov(const WedgeStructure& w) {
  const Subgroup mf = mflat(w);
  const Subgroup ker = schur_multiplier(w);
  const QuotientResult q = quotient(w.w, mf, std::max<std::size_t>(w.w->order(), 1));
  std::vector<Elem> seeds;
  for (Elem x : ker.generators()) seeds.push_back(q.projection(x));
  return abelian_invariants(close_generators(q.group, seeds));
}

// ------------------------------------------------------- induced tau maps

InducedTauMap induced_tau_epimorphism(const std::shared_ptr<const TauGroup>& th,
                                      const std::shared_ptr<const TauGroup>& tg, const Morphism& pi) {
  const auto wmap = induced_wedge_map(th->wedge(), tg->wedge(), pi);
  if (!wmap) throw NotAMorphism("the map does not induce a map of exterior squares");
  const Morphism p = tabulate(pi);
  const Morphism wm = *wmap;
  Morphism f = morphism_from_formula(th, tg, [th, tg, p, wm](Elem x) {
    Elem c[2], w;
    th->decode(x, c, &w);
    const Elem img[2] = {p(c[0]), p(c[1])};
    return tg->encode(img, wm(w));
  });
  InducedTauMap out{tabulate(f)};
  require_morphism(out.map);
  out.surjective = image(out.map).order() == tg->order();
  const Subgroup ker = kernel(out.map);
  out.kernel_order = ker.order();

  // <M, M*>[M, H*][H, M*] from generators of M = ker pi and of H.
  const GroupPtr& h = th->base();
  const Subgroup m = kernel(p);
  auto first = [&](Elem x) {
    const Elem c[2] = {x, kIdentity};
    return th->encode(c, kIdentity);
  };
  auto second = [&](Elem x) {
    const Elem c[2] = {kIdentity, x};
    return th->encode(c, kIdentity);
  };
  std::vector<Elem> seeds;
  for (Elem x : m.generators()) {
    seeds.push_back(first(x));
    seeds.push_back(second(x));
    for (Elem s : h->generators()) {
      seeds.push_back(th->comm(first(x), second(s)));
      seeds.push_back(th->comm(first(s), second(x)));
    }
  }
  const Subgroup gen = normal_closure(GroupPtr(th), seeds);
  out.generated_order = gen.order();
  out.kernel_matches = gen.order() == ker.order() && std::all_of(gen.members().begin(), gen.members().end(),
                                                                  [&](Elem x) { return ker.contains(x); });
  return out;
}

// ------------------------------------------------------------------ epi2

namespace {

void require_cover_automorphism(const CoverData& c, const Morphism& alpha_h) {
  if (alpha_h.source->order() != c.h->order()) throw NotAI("automorphism is not on the cover");
  require_automorphism(alpha_h);
}

}  // namespace

Epi2Result epi2_isomorphism(const CoverData& c, const Morphism& alpha_h, const Budgets& budgets) {
  require_cover_automorphism(c, alpha_h);
  const Group& h = *c.h;
  for (Elem m : c.m.members()) {
    if (alpha_h(m) != h.inv(m)) throw HypothesisFailed("automorphism does not invert the Schur multiplier");
  }
  Epi2Result out;
  out.tau = tau(wedge_from_cover(c, budgets.dense_cutoff), budgets);
  out.ktilde = ktilde_from_cover(c, budgets);
  const auto& kt = out.ktilde;
  const WedgeStructure& ws = out.tau->wedge();
  // Both tails are local ids of H'; confirm they agree on every pair.
  for (Elem x = 0; x < ws.g->order(); ++x) {
    for (Elem y = 0; y < ws.g->order(); ++y) {
      if (kt->derived().from_parent[h.comm(kt->lift(x), kt->lift(y))] != ws.pair(x, y)) {
        throw Error("cover wedge and K~ use different identifications of H'");
      }
    }
  }
  const Morphism a = tabulate(alpha_h);
  const auto t = out.tau;
  const GroupPtr hp = c.h;
  Morphism f = morphism_from_formula(t, kt, [t, kt, a, hp](Elem x) {
    Elem comps[2], w;
    t->decode(x, comps, &w);
    const Elem ab = hp->mul(kt->lift(comps[0]), kt->lift(comps[1]));
    const Elem v = hp->mul(ab, a(hp->mul(ab, kt->derived().to_parent[w])));
    return kt->encode(comps, local(kt->derived(), v));
  });
  out.map = tabulate(f);
  require_morphism(out.map);
  if (!is_bijective(out.map)) throw NotAMorphism("the induced map is not bijective");
  return out;
}

// ----------------------------------------------------- K~ via tau-flat

KTildeViaTauFlat ktilde_via_tauflat(const CoverData& c, const Morphism& alpha_h, const Budgets& budgets) {
  require_cover_automorphism(c, alpha_h);
  const GroupPtr& h = c.h;
  WedgeOptions opts;
  opts.budgets = budgets;
  const WedgeStructure wh = wedge(h, opts);
  if (mflat(wh).order() != schur_multiplier(wh).order()) {
    throw HypothesisFailed("the cover has a nontrivial Bogomolov multiplier");
  }
  KTildeViaTauFlat out;
  out.tau_flat_h = tau_flat(wh, budgets);
  const auto& tf = out.tau_flat_h;

  // alpha^-1 as a table.
  const Morphism a = tabulate(alpha_h);
  std::vector<Elem> a_inv(h->order());
  for (Elem x = 0; x < h->order(); ++x) a_inv[a(x)] = x;

  // Every element of H' as a product of commutators, by breadth-first search.
  const Subgroup hd = derived_subgroup(h);
  std::map<Elem, std::pair<Elem, Elem>> comm_of;
  for (Elem x = 0; x < h->order(); ++x) {
    for (Elem y = 0; y < h->order(); ++y) comm_of.emplace(h->comm(x, y), std::make_pair(x, y));
  }
  std::vector<Elem> via(h->order(), kNoElem), prev(h->order(), kNoElem);
  std::vector<Elem> queue{kIdentity};
  via[kIdentity] = kIdentity;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elem u = queue[head];
    for (const auto& [cm, xy] : comm_of) {
      const Elem v = h->mul(u, cm);
      if (via[v] == kNoElem) {
        via[v] = cm;
        prev[v] = u;
        queue.push_back(v);
      }
    }
  }
  auto at = [&](Elem x, Elem y) {
    const Elem comps[2] = {x, y};
    return tf->encode(comps, kIdentity);
  };
  auto iota = [&](Elem m1, Elem m2) {
    Elem r = tf->mul(at(m1, kIdentity), at(kIdentity, m2));
    const Elem target = h->mul(h->mul(m1, m2), a(h->mul(m1, m2)));  // prod [h_i, k_i]
    if (!hd.contains(target)) throw Error("alpha(m1 m2) is not m2^-1 m1^-1 modulo H'");
    std::vector<std::pair<Elem, Elem>> factors;
    for (Elem v = target; v != kIdentity; v = prev[v]) factors.push_back(comm_of.at(via[v]));
    std::reverse(factors.begin(), factors.end());
    for (const auto& [x, y] : factors) r = tf->mul(r, tf->comm(at(a_inv[x], kIdentity), at(kIdentity, a_inv[y])));
    return r;
  };
  std::vector<Elem> seeds;
  for (Elem m : c.m.generators()) {
    seeds.push_back(iota(m, kIdentity));
    seeds.push_back(iota(kIdentity, m));
  }
  const Subgroup im = close_generators(tf, seeds);
  out.iota_image_order = im.order();
  out.quotient = quotient(tf, im, budgets.dense_cutoff);
  return out;
}

}  // namespace wedgelab
