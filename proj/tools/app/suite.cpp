#include "suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <tuple>
#include <sstream>

#include "wedgelab/automorphisms.hpp"
#include "wedgelab/constructors.hpp"
#include "wedgelab/errors.hpp"
#include "wedgelab/functors.hpp"
#include "wedgelab/isoscope.hpp"
#include "wedgelab/presentation.hpp"
#include "wedgelab/wedge.hpp"

namespace wedgelab::app {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

/// Collects named failures; the first few end up in the report line.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  void unknown(const std::string& what) { unknowns_.push_back(what); }
  std::size_t count() const { return count_; }

  Status status() const {
    if (!failures_.empty()) return Status::Fail;
    if (!unknowns_.empty()) return Status::Unknown;
    return Status::Pass;
  }

  std::string detail() const {
    std::ostringstream out;
    if (!failures_.empty()) {
      out << failures_.size() << " of " << count_ << " checks failed: ";
      for (std::size_t i = 0; i < failures_.size() && i < 3; ++i) out << (i ? "; " : "") << failures_[i];
      if (failures_.size() > 3) out << "; ...";
      return out.str();
    }
    out << count_ << " checks";
    for (const auto& u : unknowns_) out << "; unknown: " << u;
    for (const auto& n : notes_) out << "; " << n;
    return out.str();
  }

 private:
  std::size_t count_ = 0;
  std::vector<std::string> failures_, notes_, unknowns_;
};

std::string str(std::uint64_t v) { return std::to_string(v); }

bool valid_holder(std::int64_t n, std::int64_t m, std::int64_t r) {
  try {
    check_holder_parameters(n, m, r);
    return true;
  } catch (const ParameterViolation&) {
    return false;
  }
}

/// Invariant factor lists d_1 | d_2 | ... with product at most `max_order`.
std::vector<std::vector<std::int64_t>> abelian_types(std::int64_t max_order, bool include_cyclic) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  const std::function<void(std::int64_t)> extend = [&](std::int64_t prod) {
    if (!cur.empty() && (include_cyclic || cur.size() >= 2)) out.push_back(cur);
    const std::int64_t last = cur.empty() ? 2 : cur.back();
    for (std::int64_t d = last; prod * d <= max_order; d += cur.empty() ? 1 : last) {
      if (!cur.empty() && d % last != 0) continue;
      cur.push_back(d);
      extend(prod * d);
      cur.pop_back();
    }
  };
  extend(1);
  return out;
}

/// Centre order by testing every element against the generators.
std::size_t scan_center(const Group& g) {
  std::size_t z = 0;
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem s : g.generators()) {
      if (g.mul(x, s) != g.mul(s, x)) {
        ok = false;
        break;
      }
    }
    z += ok;
  }
  return z;
}

/// Epicentre of an abelian wedge by scanning: g with g^s = 1 for all generators s.
std::size_t scan_epicentre(const WedgeStructure& w) {
  std::size_t n = 0;
  for (Elem x = 0; x < w.g->order(); ++x) {
    bool ok = true;
    for (Elem s : w.g->generators()) ok = ok && w.pair(x, s) == kIdentity;
    n += ok;
  }
  return n;
}

bool has_element_of_order(const Group& g, std::uint64_t k) {
  for (Elem x = 0; x < g.order(); ++x) {
    if (g.element_order(x) == k) return true;
  }
  return false;
}

std::shared_ptr<const TauGroup> tau_of(const GroupPtr& g, const Budgets& b) {
  WedgeOptions o;
  o.budgets = b;
  return tau(wedge(g, o), b);
}

struct Context {
  const SuiteOptions& opts;
  bool full() const { return opts.tier == Tier::Full; }
  AutSearchBudget find_one() const { return AutSearchBudget::from(opts.budgets, SearchMode::FindOne); }
};

// 1
void order_laws(const Context& cx, Check& c) {
  const std::int64_t max = cx.full() ? 200 : 60;
  const Budgets& b = cx.opts.budgets;
  std::vector<std::string> ds;
  for (std::int64_t n = 1; n <= max; ++n) ds.push_back("cyclic:" + std::to_string(n));
  for (const auto& f : abelian_types(max, false)) {
    std::string d = "abelian:";
    for (std::size_t i = 0; i < f.size(); ++i) d += (i ? "," : "") + std::to_string(f[i]);
    ds.push_back(d);
  }
  for (std::int64_t o = 4; o <= max; o += 2) ds.push_back("dihedral:" + std::to_string(o));
  for (std::int64_t o = 8; o <= max; o += 4) ds.push_back("quaternion:" + std::to_string(o));
  for (int n : {3, 4, 5}) {
    if (std::tgamma(n + 1) <= static_cast<double>(max)) ds.push_back("sym" + std::to_string(n));
  }
  if (12 <= max) ds.push_back("alt4");
  if (60 <= max) ds.push_back("alt5");
  if (27 <= max) {
    ds.push_back("extraspecial:3,1,p");
    ds.push_back("extraspecial:3,1,p2");
  }
  for (std::int64_t m = 3; m <= max; m += 2) {
    for (std::int64_t n = 2; n * m <= max; ++n) {
      for (std::int64_t r = 2; r < m; ++r) {
        if (valid_holder(n, m, r)) ds.push_back("holder:" + str(n) + "," + str(m) + "," + str(r));
      }
    }
  }
  std::size_t skipped = 0;
  for (const auto& d : ds) {
    const auto g = group_from_descriptor(d);
    const std::uint64_t go = g->order(), gd = derived_subgroup(g).order();
    try {
      const auto k = k_group(g, 3, b);
      c.expect(k->order() == go * go * gd, d + ": |K(G,3)|");
      WedgeOptions o;
      o.budgets = b;
      const auto w = wedge(g, o);
      const std::uint64_t m = schur_multiplier(w).order();
      c.expect(w.w->order() == gd * m, d + ": |G^G| = |G'||M(G)|");
      c.expect(image(w.kappa).order() == gd, d + ": kappa onto G'");
      const auto t = tau(w, b);
      c.expect(t->order() == go * go * w.w->order(), d + ": |tau(G)|");
      c.expect(tau_derived_check(*t), d + ": |tau(G)'|");
      const auto s = k_structured(g, 3, KLaw::Mu, b);
      try {
        const Morphism f = k_structured_to_tuples(s, k);
        c.expect(is_bijective(f), d + ": K-structured to tuples");
      } catch (const NotAMorphism&) {
        c.expect(false, d + ": K-structured to tuples");
      }
    } catch (const BudgetExceeded&) {
      ++skipped;
    }
  }
  c.note(std::to_string(ds.size()) + " groups of order <= " + str(max));
  if (skipped) c.note(std::to_string(skipped) + " groups beyond the structured-group budget");
}

// 2
void multipliers(const Context&, Check& c) {
  auto both = [&](const std::string& d, std::vector<std::uint64_t> expect) {
    const auto g = group_from_descriptor(d);
    const auto by_wedge = abelian_invariants(schur_multiplier(wedge(g)));
    const auto cov = schur_cover(g);
    const auto by_cover = abelian_invariants(cov.m);
    c.expect(by_wedge.factors == expect, d + ": M by ker kappa " + by_wedge.describe());
    c.expect(by_cover.factors == expect, d + ": M of the cover " + by_cover.describe());
    c.expect(verify_cover(cov), d + ": cover axioms");
    return cov;
  };
  both("abelian:4,4", {4});
  for (int n = 2; n <= 6; ++n) both("quaternion:" + std::to_string(4 * n), {});
  const auto s4 = both("sym4", {2});
  c.expect(s4.h->order() == 48, "|H_4| = " + str(s4.h->order()));
  both("extraspecial:3,1,p", {3, 3});
}

// 3
void strategies(const Context& cx, Check& c) {
  auto generic = [&](const GroupPtr& g) {
    WedgeStructure w = wedge_generic(g, cx.opts.budgets);
    if (cx.opts.inject_wedge_fault && g->generators().size() >= 2) {
      const Elem a = g->generators().front(), b = g->generators().back();
      w.pair_fn = [orig = w.pair_fn, a, b](Elem x, Elem y) { return x == a && y == b ? kIdentity : orig(x, y); };
    }
    if (const auto f = check_wedge_laws(w)) c.expect(false, g->describe() + ": wedge law '" + f->law + "'");
    return w;
  };
  std::size_t n = 0;
  for (const auto& f : abelian_types(16, true)) {
    const auto g = abelian(f);
    const auto a = wedge_abelian(g);
    const auto gen = generic(g);
    c.expect(pairing_isomorphism(a, gen).has_value() && pairing_isomorphism(gen, a).has_value(),
             g->describe() + ": abelian vs generic pairing");
    ++n;
  }
  for (const char* d : {"sym3", "q8", "d8"}) {
    const auto g = group_from_descriptor(d);
    const auto cov = wedge_from_cover(schur_cover(g));
    const auto gen = generic(g);
    c.expect(pairing_isomorphism(cov, gen).has_value() && pairing_isomorphism(gen, cov).has_value(),
             std::string(d) + ": cover vs generic pairing");
  }
  c.note(std::to_string(n) + " abelian groups");
}

// 4
void kernel_sequence(const Context& cx, Check& c) {
  std::vector<std::string> ds = {"sym3", "sym4", "q8", "q12", "d8", "abelian:4,4", "extraspecial:3,1,p"};
  for (const auto& f : abelian_types(16, true)) {
    std::string d = "abelian:";
    for (std::size_t i = 0; i < f.size(); ++i) d += (i ? "," : "") + std::to_string(f[i]);
    ds.push_back(d);
  }
  for (const auto& d : ds) {
    const auto g = group_from_descriptor(d);
    const auto q = has_ai(g, cx.find_one());
    if (q.answer != Answer::Yes) {
      if (q.answer == Answer::Unknown) {
        c.unknown(d + ": AI search");
      } else {
        c.expect(false, d + ": no AI-automorphism found");
      }
      continue;
    }
    const auto t = tau_of(g, cx.opts.budgets);
    const auto r = central_extension_check(t, *q.witness);
    c.expect(r.morphism, d + ": Phi_alpha is a morphism");
    c.expect(r.image_is_k3, d + ": im Phi_alpha = K(G,3)");
    c.expect(r.kernel_order == r.multiplier_order && r.kernel_is_ker_kappa, d + ": ker Phi_alpha = ker kappa");
    c.expect(r.kernel_central, d + ": kernel central");
    c.expect(r.multiplier_order == schur_multiplier(t->wedge()).order(), d + ": |ker| = |M(G)|");
  }
  c.note(std::to_string(ds.size()) + " groups");
}

// 5
void holder_ai(const Context& cx, Check& c) {
  const std::int64_t max = cx.full() ? 200 : 60;
  const auto search = cx.find_one();
  std::size_t rows = 0, square_free = 0;
  for (std::int64_t m = 1; m <= max; m += 2) {
    for (std::int64_t n = 1; n * m <= max; ++n) {
      for (std::int64_t r = 0; r < m; ++r) {
        if (!valid_holder(n, m, r)) continue;
        const std::string key = "holder:" + str(n) + "," + str(m) + "," + str(r);
        const auto crit = holder_ai_criterion(n, m, r);
        const auto g = holder(n, m, r);
        const auto q = has_ai(g, search);
        ++rows;
        if (q.answer == Answer::Unknown) {
          c.unknown(key);
          continue;
        }
        c.expect(crit.has_ai == (q.answer == Answer::Yes), key + ": criterion vs search");
        if (crit.square_free) {
          ++square_free;
          std::uint64_t odd = g->order();
          while (odd % 2 == 0) odd /= 2;
          const bool cyclic_hall = has_element_of_order(*g, odd);
          c.expect(crit.cyclic_odd_hall == cyclic_hall, key + ": Hall form vs element of odd-part order");
          c.expect(cyclic_hall == (q.answer == Answer::Yes), key + ": search vs cyclic Hall 2'-subgroup");
        }
      }
    }
  }
  c.note(std::to_string(rows) + " groups, " + std::to_string(square_free) + " square-free");
}

// 6
void holder_iso(const Context& cx, Check& c) {
  const std::int64_t max = cx.full() ? 100 : 40;
  std::size_t yes = 0, no = 0;
  for (std::int64_t m = 1; m <= max; m += 2) {
    for (std::int64_t n = 1; n * m <= max; ++n) {
      for (std::int64_t r = 0; r < m; ++r) {
        if (!valid_holder(n, m, r)) continue;
        const std::string key = "holder:" + str(n) + "," + str(m) + "," + str(r);
        const auto g = holder(n, m, r);
        const auto q = has_ai(g, cx.find_one());
        if (q.answer == Answer::Unknown) {
          c.unknown(key + ": AI search");
          continue;
        }
        const auto t = tau_of(g, cx.opts.budgets);
        const auto k = k_group(g, 3, cx.opts.budgets);
        if (q.answer == Answer::Yes) {
          const CoverData cov = schur_cover(g);
          c.expect(cov.m.is_trivial(), key + ": trivial multiplier");
          try {
            const auto e = epi2_isomorphism(cov, *q.witness, cx.opts.budgets);
            c.expect(is_bijective(e.map) && e.ktilde->order() == k->order(), key + ": epi2 isomorphism");
          } catch (const Error& ex) {
            c.expect(false, key + ": epi2 " + ex.what());
          }
          ++yes;
        } else {
          const auto dt = derived_action(t), dk = derived_action(k);
          c.expect(!dt.same_invariants(dk) && !dt.all_in_sl && dk.all_in_sl, key + ": derived action separates");
          ++no;
        }
      }
    }
  }
  c.note(std::to_string(yes) + " isomorphic via epi2, " + std::to_string(no) + " separated by determinants");
}

// 7
void epi2_instances(const Context& cx, Check& c) {
  std::vector<std::string> ds;
  for (int n = 2; n <= 6; ++n) ds.push_back("quaternion:" + std::to_string(4 * n));
  for (int n = 2; n <= 8; ++n) ds.push_back("dihedral:" + std::to_string(2 * n));
  for (const char* d : {"sym4", "sym5", "alt4", "alt5", "extraspecial:3,1,p"}) ds.emplace_back(d);
  for (const auto& d : ds) {
    const CoverData cov = schur_cover(group_from_descriptor(d));
    const auto q = ai_lift_inverting_M(cov, cx.find_one());
    if (q.answer != Answer::Yes) {
      if (q.answer == Answer::Unknown) {
        c.unknown(d + ": lift search");
      } else {
        c.expect(false, d + ": no AI lift inverting M");
      }
      continue;
    }
    try {
      const auto e = epi2_isomorphism(cov, *q.witness, cx.opts.budgets);
      c.expect(is_bijective(e.map) && e.tau->order() == e.ktilde->order(), d + ": epi2 isomorphism");
    } catch (const Error& ex) {
      c.expect(false, d + ": epi2 " + ex.what());
    }
  }
  c.note(std::to_string(ds.size()) + " groups");
}

// 8
void negative_ai(const Context& cx, Check& c) {
  const auto es9 = extraspecial(3, 1, ExtraspecialExponent::PSquared);
  const auto q = has_ai(es9, AutSearchBudget::from(cx.opts.budgets, SearchMode::Exhaust));
  if (q.answer == Answer::Unknown) {
    c.unknown("order 27 exponent 9 AI search");
  } else {
    c.expect(q.answer == Answer::No, "order 27 exponent 9 has an AI-automorphism");
  }
  const auto cov = schur_cover(extraspecial(3, 2, ExtraspecialExponent::P));
  auto budget = AutSearchBudget::from(cx.opts.budgets, SearchMode::FindOne);
  if (!cx.full()) budget.millis = std::min<std::uint64_t>(budget.millis, 2000);
  const auto lift = ai_lift_inverting_M(cov, budget);
  const bool obstruction = class_two_lift_obstruction(cov);
  c.expect(lift.answer != Answer::Yes, "order 3^5 cover: found an AI lift inverting M");
  c.expect(!(lift.answer == Answer::Yes && obstruction), "search and class-2 obstruction disagree");
  c.note("order 3^5 lift search: " + to_string(lift.answer) + " after " + str(lift.nodes) + " nodes");
  c.note(std::string("class-2 obstruction: ") + (obstruction ? "no AI lift inverts M" : "not applicable"));
}

// 9
void abelian_centres(const Context& cx, Check& c) {
  const std::int64_t max = cx.full() ? 36 : 16;
  std::size_t n = 0;
  for (const auto& f : abelian_types(max, true)) {
    const auto g = abelian(f);
    const auto w = wedge_abelian(g);
    const auto t = tau(w, cx.opts.budgets);
    const auto k = ktilde_abelian(g, 3, cx.opts.budgets);
    const std::size_t ze = scan_epicentre(w);
    c.expect(ze == epicentre(w).order(), g->describe() + ": epicentre");
    c.expect(scan_center(*t) == ze * ze * w.w->order(), g->describe() + ": Z(tau) = Z^(G)^2 x G^G");
    c.expect(scan_center(*k) == ktilde_abelian_center_order(w, 3), g->describe() + ": Z(K~(G,3))");
    ++n;
  }
  c.note(std::to_string(n) + " abelian groups of order <= " + str(max));
}

// 10
void elab2(const Context&, Check& c) {
  for (const auto& f : std::vector<std::vector<std::int64_t>>{{2}, {2, 2}, {2, 2, 2}, {4, 2}, {8, 2}, {4, 2, 2}}) {
    const auto g = abelian(f);
    const auto t = tau(wedge_abelian(g));
    const auto k = ktilde_abelian(g, 3);
    const auto r = verify_explicit_iso(tabulate(psi_map(t, k)));
    c.expect(r.holds(), g->describe() + ": psi " + r.failure);
  }
  const auto g = abelian({4, 4, 4});
  const auto t = tau(wedge_abelian(g));
  const auto k = ktilde_abelian(g, 3);
  const Morphism psi = tabulate(psi_map(t, k));
  c.expect(!verify_explicit_iso(psi).morphism, "psi on C4^3 is a morphism");
  // Exhaustive comparison of the defect over all pairs of generators and a
  // stride through the group.
  const AbelianBasis basis = abelian_basis(g);
  const auto& xs = basis.basis();
  const WedgeStructure& w = k->wedge();
  std::size_t bad = 0, nonzero = 0, pairs = 0;
  for (Elem x = 0; x < t->order(); x += 997) {
    for (Elem y = 0; y < t->order(); y += 1009) {
      const Elem defect = k->mul(k->inv(psi(t->mul(x, y))), k->mul(psi(x), psi(y)));
      Elem comps[2], tail, xc[2], yc[2], ct;
      k->decode(defect, comps, &tail);
      t->decode(x, xc, &ct);
      t->decode(y, yc, &ct);
      const auto a = basis.coords(xc[0]), b = basis.coords(xc[1]), d = basis.coords(yc[0]), e = basis.coords(yc[1]);
      Elem expect = kIdentity;
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
          expect = w.w->mul(expect, w.w->pow(w.pair(xs[i], xs[j]), -2 * (b[j] * e[i] + a[j] * d[i])));
        }
      }
      bad += comps[0] != kIdentity || comps[1] != kIdentity || tail != expect;
      nonzero += tail != kIdentity;
      ++pairs;
    }
  }
  c.expect(bad == 0, "C4^3 defect differs from -2(b_j e_i + a_j d_i) on " + str(bad) + " pairs");
  c.expect(nonzero > 0, "C4^3 defect never nonzero");
  c.note(str(pairs) + " C4^3 pairs compared");
}

// 11
void rank2(const Context&, Check& c) {
  std::string paper;
  for (auto [m, n] : std::vector<std::pair<std::int64_t, std::int64_t>>{{4, 2}, {4, 4}, {8, 2}, {25, 5}}) {
    const auto g = abelian({m, n});
    const auto t = tau(wedge_abelian(g));
    const auto k = ktilde_abelian(g, 3);
    const auto sym = rank2_map(t, k, Rank2Form::Symmetric);
    const auto r = verify_explicit_iso(t, k, sym.xs, sym.ys);
    c.expect(r.holds(), "C" + str(m) + "xC" + str(n) + ": " + r.failure);
    const auto pm = rank2_map(t, k, Rank2Form::Paper);
    paper += (paper.empty() ? "" : ",") + str(m) + "x" + str(n) + "=" +
             (verify_explicit_iso(t, k, pm.xs, pm.ys).holds() ? "iso" : "not iso");
  }
  c.note("symmetric map verified; g1g2^2 form: " + paper);
  for (auto [m, n, zt, zk] : std::vector<std::tuple<std::int64_t, std::int64_t, std::size_t, std::size_t>>{
           {3, 3, 3, 27}, {9, 3, 27, 243}}) {
    const auto g = abelian({m, n});
    const std::size_t a = scan_center(*tau(wedge_abelian(g))), b = scan_center(*ktilde_abelian(g, 3));
    c.expect(a == zt && b == zk, "C" + str(m) + "xC" + str(n) + ": centres " + str(a) + " vs " + str(b));
    c.note("C" + str(m) + "xC" + str(n) + " centres " + str(a) + " vs " + str(b));
  }
}

// 12
void excf(const Context& cx, Check& c) {
  const auto a = group_from_descriptor("cyclic:3*alt4");
  const auto ta = tau_of(a, cx.opts.budgets);
  const auto fa = fingerprint(ta, cx.opts.budgets);
  c.expect(fa.center.factors == std::vector<std::uint64_t>{6}, "Z(tau(C3 x Alt4)) = " + fa.center.describe());
  c.expect(scan_center(*ta) == 6, "Z(tau(C3 x Alt4)) by scan");
  const auto zka = abelian_invariants(center(ktilde_from_cover(any_schur_cover(a, cx.opts.budgets), cx.opts.budgets)));
  c.note("Z(tau(A)) = " + fa.center.describe() + ", Z(K~(A,3)) = " + zka.describe());

  const auto b = group_from_descriptor("cyclic:3*cyclic:3*dihedral:10");
  const auto diff = staged_difference(tau_of(b, cx.opts.budgets),
                                      ktilde_from_cover(any_schur_cover(b, cx.opts.budgets), cx.opts.budgets),
                                      cx.opts.budgets);
  c.expect(diff.has_value(), "no invariant separates tau(B) and K~(B,3)");
  if (diff) c.note("B: " + diff->name + " " + diff->value_a + " vs " + diff->value_b);
}

// 13
void exai(const Context& cx, Check& c) {
  const auto closed = realize(ai_closure(holder_presentation(4, 5, 3), cx.opts.budgets.max_cosets),
                              cx.opts.budgets.max_cosets);
  c.expect(closed->order() == 4 && has_element_of_order(*closed, 4), "AI closure of C4 x| C5 realizes C4");
  for (std::int64_t n = 2; n <= 8; ++n) {
    const auto p = dihedral_presentation(n);
    const auto before = realize(p, cx.opts.budgets.max_cosets);
    const auto after = realize(ai_closure(p, cx.opts.budgets.max_cosets), cx.opts.budgets.max_cosets);
    c.expect(before->order() == after->order() && before->order() == static_cast<std::size_t>(2 * n),
             "D" + str(2 * n) + ": AI closure changes the order");
  }
}

// 14
void bogomolov_check(const Context& cx, Check& c) {
  const std::int64_t amax = cx.full() ? 36 : 16, hmax = cx.full() ? 100 : 40;
  std::size_t n = 0;
  auto one = [&](const GroupPtr& g) {
    WedgeOptions o;
    o.budgets = cx.opts.budgets;
    const auto w = wedge(g, o);
    const std::uint64_t go = g->order(), gd = derived_subgroup(g).order();
    c.expect(bogomolov(w).factors.empty(), g->describe() + ": B0 = 1");
    c.expect(tau_flat(w, cx.opts.budgets)->order() == go * go * gd, g->describe() + ": |tau-flat(G)|");
    ++n;
  };
  for (const auto& f : abelian_types(amax, true)) one(abelian(f));
  for (std::int64_t m = 3; m <= hmax; m += 2) {
    for (std::int64_t k = 2; k * m <= hmax; ++k) {
      for (std::int64_t r = 2; r < m; ++r) {
        if (valid_holder(k, m, r)) one(holder(k, m, r));
      }
    }
  }
  for (const char* d : {"sym4", "q8"}) {
    const CoverData cov = schur_cover(group_from_descriptor(d));
    const auto q = ai_lift_inverting_M(cov, cx.find_one());
    if (q.answer != Answer::Yes) {
      c.expect(false, std::string(d) + ": no AI lift inverting M");
      continue;
    }
    const auto r = ktilde_via_tauflat(cov, *q.witness, cx.opts.budgets);
    const auto kt = ktilde_from_cover(cov, cx.opts.budgets);
    const GroupPtr viaq = r.quotient.group;
    c.expect(viaq->order() == kt->order(), std::string(d) + ": orders");
    c.expect(order_stats(viaq) == order_stats(kt), std::string(d) + ": element orders and classes");
    c.expect(center(viaq).order() == center(kt).order(), std::string(d) + ": centres");
    c.expect(derived_subgroup(viaq).order() == derived_subgroup(kt).order(), std::string(d) + ": derived subgroups");
  }
  c.note(std::to_string(n) + " groups");
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

double tier_limit_millis(Tier tier) { return tier == Tier::Fast ? 60'000.0 : 1'800'000.0; }

const std::vector<CriterionInfo>& criteria() {
  static const std::vector<CriterionInfo> list = {
      {1, "orders", "order laws for K(G,3), tau(G) and tau(G)'", "DERIVED"},
      {2, "multipliers", "Schur multipliers of C4xC4, Q4n, Sym4, extraspecial 27", "PAPER"},
      {3, "strategies", "wedge strategies agree", "DERIVED"},
      {4, "kernel", "Phi_alpha onto K(G,3) with kernel M(G)", "DERIVED"},
      {5, "holder-ai", "Holder AI criterion against exhaustive search", "DERIVED"},
      {6, "holder-iso", "tau(G) = K(G,3) iff AI for Holder groups", "DERIVED"},
      {7, "epi2", "epi2 isomorphisms", "PAPER"},
      {8, "es-negative", "extraspecial groups without AI lifts", "PAPER"},
      {9, "abelian-centres", "centres of tau and K~ for abelian groups", "DERIVED"},
      {10, "elab2", "psi on abelian 2-groups and its defect on C4^3", "PAPER"},
      {11, "rank2", "rank-2 explicit isomorphism and 3-group centres", "PAPER"},
      {12, "excf", "centre of tau(C3 x Alt4) and tau(B) vs K~(B,3)", "PAPER"},
      {13, "exai", "AI closure of presentations", "PAPER"},
      {14, "bogomolov", "B0 = 1, |tau-flat| and K~ via tau-flat", "DERIVED"},
      {15, "performance", "tier time envelope", "DERIVED"},
  };
  return list;
}

std::optional<int> find_criterion(std::string_view name) {
  for (const auto& c : criteria()) {
    if (c.key == name || std::to_string(c.id) == name) return c.id;
  }
  return std::nullopt;
}

bool SuiteReport::ok(Tier tier) const {
  for (const auto& r : results) {
    if (r.status == Status::Fail) return false;
    if (r.status == Status::Unknown && tier == Tier::Full) return false;
  }
  return true;
}

SuiteReport run_suite(const SuiteOptions& opts) {
  using Fn = void (*)(const Context&, Check&);
  static const Fn fns[] = {order_laws,     multipliers, strategies, kernel_sequence, holder_ai,
                           holder_iso,     epi2_instances, negative_ai, abelian_centres, elab2,
                           rank2,          excf,        exai,       bogomolov_check};
  const Context cx{opts};
  SuiteReport report;
  const auto start = Clock::now();
  for (const auto& info : criteria()) {
    if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), info.id) == opts.only.end()) continue;
    CriterionResult res;
    res.info = info;
    const auto t0 = Clock::now();
    if (info.id == 15) {
      const double spent = elapsed_ms(start);
      const double limit = tier_limit_millis(opts.tier);
      std::ostringstream d;
      d.precision(1);
      d << std::fixed << (opts.tier == Tier::Fast ? "fast" : "full") << " tier " << spent / 1000 << " s (limit "
        << limit / 1000 << " s)";
      bool ok = spent < limit;
      if (opts.fast_tier_millis) {
        d << "; fast tier " << *opts.fast_tier_millis / 1000 << " s (limit " << tier_limit_millis(Tier::Fast) / 1000
          << " s)";
        ok = ok && *opts.fast_tier_millis < tier_limit_millis(Tier::Fast);
      }
      if (report.results.empty() && !opts.fast_tier_millis) {
        res.status = Status::Unknown;
        d << "; nothing else was run";
      } else {
        res.status = ok ? Status::Pass : Status::Fail;
      }
      res.detail = d.str();
    } else {
      Check c;
      try {
        fns[info.id - 1](cx, c);
        res.status = c.status();
        res.detail = c.detail();
      } catch (const BudgetExceeded& e) {
        res.status = Status::Unknown;
        res.detail = std::string("budget exceeded: ") + e.what();
      } catch (const std::exception& e) {
        res.status = Status::Fail;
        res.detail = std::string("error: ") + e.what();
      }
    }
    res.millis = elapsed_ms(t0);
    if (opts.on_result) opts.on_result(res);
    report.results.push_back(std::move(res));
  }
  report.millis = elapsed_ms(start);
  return report;
}

std::string format_result(const CriterionResult& r, bool timing) {
  char head[96];
  std::snprintf(head, sizeof head, "[%s] %2d %-16s", to_string(r.status).c_str(), r.info.id, r.info.key.c_str());
  std::string out = head;
  out += r.info.title + " [" + r.info.tag + "]: " + r.detail;
  if (timing) {
    char t[32];
    std::snprintf(t, sizeof t, " (%.1f s)", r.millis / 1000);
    out += t;
  }
  return out;
}

}  // namespace wedgelab::app
