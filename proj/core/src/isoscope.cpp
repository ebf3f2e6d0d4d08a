#include <functional>
#include "wedgelab/isoscope.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>

#include "wedgelab/errors.hpp"
#include "wedgelab/subgroup.hpp"

namespace wedgelab {

namespace {

std::string histogram_text(const std::map<std::uint64_t, std::uint64_t>& m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [k, v] : m) {
    os << (first ? "" : ",") << k << ':' << v;
    first = false;
  }
  os << '}';
  return os.str();
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
  a %= n;
  return a < 0 ? a + n : a;
}

}  // namespace

std::string Fingerprint::serialize() const {
  std::ostringstream os;
  os << "order=" << order << '\n'
     << "abelianization=" << abelianization.describe() << '\n'
     << "derived_order=" << derived_order << '\n'
     << "center_order=" << center_order << '\n'
     << "center=" << center.describe() << '\n'
     << "exponent=" << exponent << '\n'
     << "order_histogram=" << histogram_text(order_histogram) << '\n'
     << "class_sizes=" << histogram_text(class_sizes) << '\n'
     << "derived_length=" << derived_length << '\n'
     << "second_center_order=" << second_center_order << '\n';
  return os.str();
}

std::string Fingerprint::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : serialize()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Fingerprint fingerprint(const GroupPtr& g, const Budgets& budgets) {
  if (g->order() > budgets.fingerprint_cap) {
    throw BudgetExceeded("fingerprint needs |G| <= " + std::to_string(budgets.fingerprint_cap));
  }
  Fingerprint f;
  f.order = g->order();
  f.abelianization = abelian_invariants(g, budgets.dense_cutoff);
  f.derived_order = derived_subgroup(g).order();
  const Subgroup z = center(g);
  f.center_order = z.order();
  f.center = abelian_invariants(z);
  const OrderStats st = order_stats(g);
  f.exponent = st.exponent;
  f.order_histogram = st.order_histogram;
  f.class_sizes = st.class_sizes;
  f.derived_length = derived_length(g);
  f.second_center_order = second_center(g, z).order();
  return f;
}

std::optional<InvariantDifference> first_difference(const Fingerprint& a, const Fingerprint& b) {
  auto num = [](std::uint64_t v) { return std::to_string(v); };
  if (a.order != b.order) return InvariantDifference{"order", num(a.order), num(b.order)};
  if (a.abelianization != b.abelianization) {
    return InvariantDifference{"abelianization", a.abelianization.describe(), b.abelianization.describe()};
  }
  if (a.derived_order != b.derived_order) {
    return InvariantDifference{"derived_order", num(a.derived_order), num(b.derived_order)};
  }
  if (a.center_order != b.center_order) {
    return InvariantDifference{"center_order", num(a.center_order), num(b.center_order)};
  }
  if (a.center != b.center) return InvariantDifference{"center", a.center.describe(), b.center.describe()};
  if (a.exponent != b.exponent) return InvariantDifference{"exponent", num(a.exponent), num(b.exponent)};
  if (a.order_histogram != b.order_histogram) {
    return InvariantDifference{"order_histogram", histogram_text(a.order_histogram),
                               histogram_text(b.order_histogram)};
  }
  if (a.class_sizes != b.class_sizes) {
    return InvariantDifference{"class_sizes", histogram_text(a.class_sizes), histogram_text(b.class_sizes)};
  }
  if (a.derived_length != b.derived_length) {
    return InvariantDifference{"derived_length", std::to_string(a.derived_length), std::to_string(b.derived_length)};
  }
  if (a.second_center_order != b.second_center_order) {
    return InvariantDifference{"second_center_order", num(a.second_center_order), num(b.second_center_order)};
  }
  return std::nullopt;
}

std::optional<InvariantDifference> staged_difference(const GroupPtr& a, const GroupPtr& b,
                                                     const Budgets& budgets) {
  const std::uint64_t cap = budgets.fingerprint_cap;
  if (a->order() > cap || b->order() > cap) {
    throw BudgetExceeded("fingerprint needs |G| <= " + std::to_string(cap));
  }
  Fingerprint fa, fb;
  auto step = [&](auto&& fill) {
    fill(fa, a);
    fill(fb, b);
    return first_difference(fa, fb);
  };
  using Fill = std::function<void(Fingerprint&, const GroupPtr&)>;
  const std::vector<Fill> stages = {
      [](Fingerprint& f, const GroupPtr& g) { f.order = g->order(); },
      [&](Fingerprint& f, const GroupPtr& g) { f.abelianization = abelian_invariants(g, budgets.dense_cutoff); },
      [](Fingerprint& f, const GroupPtr& g) { f.derived_order = derived_subgroup(g).order(); },
      [](Fingerprint& f, const GroupPtr& g) {
        const Subgroup z = center(g);
        f.center_order = z.order();
        f.center = abelian_invariants(z);
      },
      [](Fingerprint& f, const GroupPtr& g) {
        const OrderStats st = order_stats(g);
        f.exponent = st.exponent;
        f.order_histogram = st.order_histogram;
        f.class_sizes = st.class_sizes;
      },
      [](Fingerprint& f, const GroupPtr& g) { f.derived_length = derived_length(g); },
      [](Fingerprint& f, const GroupPtr& g) { f.second_center_order = second_center(g, center(g)).order(); },
  };
  for (const Fill& fill : stages) {
    if (auto d = step(fill)) return d;
  }
  return std::nullopt;
}

std::int64_t det_mod(std::vector<std::vector<std::int64_t>> a, std::int64_t n) {
  const std::size_t k = a.size();
  std::int64_t det = 1 % n;
  for (auto& row : a) {
    for (auto& v : row) v = mod(v, n);
  }
  for (std::size_t c = 0; c < k; ++c) {
    // Euclidean elimination below the diagonal keeps the determinant up to sign.
    for (std::size_t r = c + 1; r < k; ++r) {
      while (a[r][c] != 0) {
        const std::int64_t q = a[c][c] / a[r][c];
        for (std::size_t j = c; j < k; ++j) a[c][j] = mod(a[c][j] - q * a[r][j], n);
        std::swap(a[c], a[r]);
        det = mod(-det, n);
      }
    }
    det = det * a[c][c] % n;
  }
  return mod(det, n);
}

std::string DerivedActionInvariant::describe() const {
  std::ostringstream os;
  os << "G'=" << derived.describe() << (homocyclic ? " homocyclic" : "") << " dets={";
  for (std::size_t i = 0; i < determinant_subgroup.size(); ++i) os << (i ? "," : "") << determinant_subgroup[i];
  os << "} action_order=" << action_order;
  return os.str();
}

DerivedActionInvariant derived_action(const GroupPtr& g) {
  const Subgroup d = derived_subgroup(g);
  if (!is_abelian(d)) throw NotApplicable("derived subgroup is not abelian");
  const AbelianBasis basis = abelian_basis(d);
  DerivedActionInvariant out;
  out.derived = basis.invariants();
  const auto& factors = basis.factors();
  out.homocyclic = !factors.empty() && std::all_of(factors.begin(), factors.end(), [&](std::uint64_t f) {
    return f == factors.front();
  });
  out.modulus = factors.empty() ? 1 : factors.back();

  for (Elem s : g->generators()) {
    std::vector<std::vector<std::int64_t>> m;
    for (Elem b : basis.basis()) m.push_back(basis.coords(g->conj(b, s)));
    out.matrices.push_back(std::move(m));
  }
  if (out.homocyclic) {
    const auto e = static_cast<std::int64_t>(out.modulus);
    std::set<std::uint64_t> sub{static_cast<std::uint64_t>(1 % e)};
    std::vector<std::uint64_t> frontier(sub.begin(), sub.end());
    std::vector<std::int64_t> dets;
    for (const auto& m : out.matrices) dets.push_back(det_mod(m, e));
    while (!frontier.empty()) {
      std::vector<std::uint64_t> next;
      for (std::uint64_t x : frontier) {
        for (std::int64_t dv : dets) {
          const std::uint64_t y = static_cast<std::uint64_t>(mod(static_cast<std::int64_t>(x) * dv, e));
          if (sub.insert(y).second) next.push_back(y);
        }
      }
      frontier = std::move(next);
    }
    out.determinant_subgroup.assign(sub.begin(), sub.end());
    out.all_in_sl = sub.size() == 1;
  }
  std::uint64_t centralizing = 0;
  for (Elem x = 0; x < g->order(); ++x) {
    bool ok = true;
    for (Elem b : basis.basis()) {
      if (g->conj(b, x) != b) {
        ok = false;
        break;
      }
    }
    centralizing += ok;
  }
  out.action_order = g->order() / centralizing;
  return out;
}

IsoVerdict are_isomorphic(const GroupPtr& a, const GroupPtr& b, const Budgets& budgets) {
  IsoVerdict v;
  if (a == b) {
    std::vector<Elem> id(a->order());
    std::iota(id.begin(), id.end(), Elem{0});
    v.answer = Answer::Yes;
    v.iso = morphism_from_table(a, b, std::move(id));
    v.certificate = "identity";
    return v;
  }
  if (a->order() != b->order()) {
    v.answer = Answer::No;
    v.witness = {"order", std::to_string(a->order()), std::to_string(b->order())};
    v.certificate = "invariant";
    return v;
  }
  try {
    if (auto diff = staged_difference(a, b, budgets)) {
      v.answer = Answer::No;
      v.witness = *diff;
      v.certificate = "invariant";
      return v;
    }
  } catch (const BudgetExceeded&) {
    v.certificate = "fingerprint budget exceeded";
    return v;
  }
  if (is_abelian(derived_subgroup(a)) && is_abelian(derived_subgroup(b))) {
    const auto da = derived_action(a), db = derived_action(b);
    if (!da.same_invariants(db)) {
      v.answer = Answer::No;
      v.witness = {"derived_action", da.describe(), db.describe()};
      v.certificate = "invariant";
      return v;
    }
  }
  if (a->order() > budgets.iso_search_cap) {
    v.certificate = "equal invariants; order above the search cap";
    return v;
  }
  const auto gens = search_generators(*a);
  AutSearchBudget sb = AutSearchBudget::from(budgets, SearchMode::FindOne);
  const auto st = for_each_isomorphism(a, b, gens, sb, {}, [&](const Morphism& f) {
    v.iso = f;
    return false;
  });
  if (v.iso) {
    if (!verify_explicit_iso(*v.iso).holds()) throw Error("isomorphism search produced an invalid map");
    v.answer = Answer::Yes;
    v.certificate = "search";
  } else if (st.complete) {
    v.answer = Answer::No;
    v.witness = {"isomorphism_search", "exhausted", "exhausted"};
    v.certificate = "exhaustive search";
  } else {
    v.certificate = "search budget exceeded";
  }
  return v;
}

ExplicitIsoReport verify_explicit_iso(const Morphism& f) {
  ExplicitIsoReport r;
  r.orders_equal = f.source->order() == f.target->order();
  if (auto fail = first_morphism_failure(f)) {
    r.failure = fail->describe();
    return r;
  }
  r.morphism = true;
  r.injective = is_injective(f);
  if (!r.injective) r.failure = "kernel is not trivial";
  return r;
}

ExplicitIsoReport verify_explicit_iso(const GroupPtr& source, const GroupPtr& target, std::span<const Elem> xs,
                                      std::span<const Elem> ys, Morphism* out) {
  ExplicitIsoReport r;
  r.orders_equal = source->order() == target->order();
  if (xs.size() != ys.size()) throw ParameterViolation("generator and image counts differ");
  std::vector<Elem> table(source->order(), kNoElem);
  std::vector<Elem> queue{kIdentity};
  table[kIdentity] = kIdentity;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elem a = queue[head];
    for (std::size_t j = 0; j < xs.size(); ++j) {
      const Elem b = source->mul(a, xs[j]);
      const Elem fb = target->mul(table[a], ys[j]);
      if (table[b] == kNoElem) {
        table[b] = fb;
        queue.push_back(b);
      } else if (table[b] != fb) {
        r.failure = "inconsistent at element " + std::to_string(a) + ", generator #" + std::to_string(j);
        return r;
      }
    }
  }
  if (queue.size() != source->order()) throw ParameterViolation("the given elements do not generate the source");
  Morphism f = morphism_from_table(source, target, std::move(table));
  r.morphism = true;
  r.injective = is_injective(f);
  if (!r.injective) r.failure = "kernel is not trivial";
  if (out) *out = std::move(f);
  return r;
}

Morphism psi_map(const std::shared_ptr<const TauGroup>& t, const std::shared_ptr<const KTildeAbelianGroup>& k) {
  const GroupPtr& g = t->base();
  if (!is_abelian(g)) throw NotApplicable("psi needs an abelian group");
  if (k->base() != g || k->arity() != 2) throw ParameterViolation("psi needs tau(G) and K~(G,3) over the same G");
  auto basis = std::make_shared<AbelianBasis>(abelian_basis(g));
  const auto carry = pairing_isomorphism(t->wedge(), k->wedge());
  if (!carry) throw ParameterViolation("the wedges of tau and K~ are not identified by their pairings");
  auto to_k = std::make_shared<Morphism>(tabulate(*carry));
  return morphism_from_formula(t, k, [t, k, basis, to_k](Elem x) {
    Elem comps[2], c;
    t->decode(x, comps, &c);
    const auto a = basis->coords(comps[0]), b = basis->coords(comps[1]);
    const auto& xs = basis->basis();
    const WedgeStructure& wk = k->wedge();
    Elem tail = (*to_k)(c);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        const std::int64_t e = a[i] * a[j] + b[i] * b[j] + a[i] * b[j] - a[j] * b[i];
        tail = wk.w->mul(tail, wk.w->pow(wk.pair(xs[i], xs[j]), e));
      }
    }
    return k->encode(comps, tail);
  });
}

GeneratorMap rank2_map(const std::shared_ptr<const TauGroup>& t, const std::shared_ptr<const KTildeAbelianGroup>& k,
                       Rank2Form form) {
  const GroupPtr& grp = t->base();
  if (!is_abelian(grp) || grp->generators().size() != 2) throw NotApplicable("rank-2 map needs C_m x C_n");
  Elem g = grp->generators()[0], h = grp->generators()[1];
  if (grp->element_order(g) < grp->element_order(h)) std::swap(g, h);
  auto at = [](const FunctorGroup& f, Elem a, Elem b, Elem c) {
    const Elem comps[2] = {a, b};
    return f.encode(comps, c);
  };
  const Elem kt = t->wedge().pair(g, h), kk = k->wedge().pair(g, h);
  GeneratorMap m;
  m.xs = {at(*t, g, 0, 0), at(*t, h, 0, 0), at(*t, 0, g, 0), at(*t, 0, h, 0), at(*t, 0, 0, kt)};
  const Elem g1 = at(*k, g, 0, 0), h1 = at(*k, h, 0, 0), g2 = at(*k, 0, g, 0), h2 = at(*k, 0, h, 0);
  if (form == Rank2Form::Paper) {
    m.ys = {k->mul(g1, k->mul(g2, g2)), h1, k->mul(g2, k->mul(g1, g1)), h2, at(*k, 0, 0, kk)};
  } else {
    const Elem h11 = k->inv(h1), h22 = k->mul(h2, h2);
    m.ys = {g1, k->mul(h11, h22), g2, k->mul(k->mul(h1, h1), k->inv(h2)), k->pow(at(*k, 0, 0, kk), 3)};
  }
  return m;
}

}  // namespace wedgelab
