#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "wedgelab/constructors.hpp"
#include "wedgelab/errors.hpp"
#include "wedgelab/functors.hpp"

using namespace wedgelab;

namespace {

Morphism automorphism(const GroupPtr& g, std::vector<Elem> images) { return extend_to_morphism(g, g, images); }

Morphism inverting_generators(const GroupPtr& g) {
  std::vector<Elem> images;
  for (Elem s : g->generators()) images.push_back(g->inv(s));
  return automorphism(g, images);
}

Morphism identity_of(const GroupPtr& g) {
  return automorphism(g, std::vector<Elem>(g->generators().begin(), g->generators().end()));
}

/// Order of the centre, counting elements that commute with every element.
std::size_t brute_center(const Group& g) {
  std::size_t z = 0;
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem y = 0; y < g.order() && ok; ++y) ok = g.mul(x, y) == g.mul(y, x);
    z += ok;
  }
  return z;
}

/// The automorphism of the order-p^5 cover with
/// (g1, g2, c, h1, h2) -> (g1^-1 c, g2^-1 c^-1, c, h1^-1, h2^-1).
Morphism es_cover_automorphism(const CoverData& c) {
  const Group& h = *c.h;
  const auto& s = h.generators();
  return automorphism(c.h, {h.mul(h.inv(s[0]), s[2]), h.mul(h.inv(s[1]), h.inv(s[2])), s[2], h.inv(s[3]),
                            h.inv(s[4])});
}

/// K(H,3) -> K~(G,3), (g; c) -> (pi g; c), for a cover with tails in H'.
Morphism cover_quotient_map(const std::shared_ptr<const KGroup>& kh, const std::shared_ptr<const KTildeCoverGroup>& kt,
                            const CoverData& c) {
  return morphism_from_formula(kh, kt, [kh, kt, c](Elem x) {
    Elem comps[2], t;
    kh->decode(x, comps, &t);
    const Elem img[2] = {c.proj(comps[0]), c.proj(comps[1])};
    return kt->encode(img, kt->derived().from_parent[kh->derived().to_parent[t]]);
  });
}

}  // namespace

TEST(KGroup, Orders) {
  EXPECT_EQ(k_group(cyclic(2), 2)->order(), 2u);
  EXPECT_EQ(k_group(symmetric(3), 3)->order(), 108u);
  EXPECT_EQ(k_group(quaternion(8), 3)->order(), 128u);
  EXPECT_EQ(k_group(symmetric(4), 4)->order(), 24u * 24 * 24 * 12);
  EXPECT_THROW(k_group(cyclic(3), 1), ParameterViolation);
}

TEST(KGroup, MatchesTupleSubgroup) {
  for (const char* d : {"sym3", "q8", "d8", "abelian:2,2"}) {
    SCOPED_TRACE(d);
    const auto g = group_from_descriptor(d);
    const oracle::Table t = support::table_of(*g);
    const std::set<int> derived = t.derived();
    for (std::size_t n : {2u, 3u}) {
      const auto k = k_group(g, n);
      // Count tuples of G^n with product in G' independently.
      std::size_t count = 0;
      std::vector<int> idx(n, 0);
      for (;;) {
        int p = 0;
        for (int v : idx) p = t.mul[p][v];
        count += derived.count(p);
        std::size_t i = 0;
        while (i < n && ++idx[i] == t.n()) idx[i++] = 0;
        if (i == n) break;
      }
      EXPECT_EQ(k->order(), count);
      // Multiplication is componentwise on the tuples.
      for (Elem x = 0; x < k->order(); ++x) {
        const auto tx = k->tuple(x);
        int p = 0;
        for (Elem v : tx) p = t.mul[p][static_cast<int>(v)];
        EXPECT_TRUE(derived.count(p));
        EXPECT_EQ(k->from_tuple(tx), x);
        for (Elem s : k->generators()) {
          const auto ts = k->tuple(s), txs = k->tuple(k->mul(x, s));
          for (std::size_t i = 0; i < n; ++i) {
            EXPECT_EQ(static_cast<int>(txs[i]), t.mul[static_cast<int>(tx[i])][static_cast<int>(ts[i])]);
          }
        }
      }
    }
  }
}

TEST(KStructured, IsomorphicToTuples) {
  for (const char* d : {"sym3", "q8", "d8", "sym4", "alt4", "holder:4,5,3"}) {
    SCOPED_TRACE(d);
    const auto g = group_from_descriptor(d);
    const auto s = k_structured(g, 3);
    const auto k = k_group(g, 3);
    const Morphism f = k_structured_to_tuples(s, k);
    EXPECT_TRUE(is_bijective(f));
  }
  const auto g = symmetric(3);
  EXPECT_NO_THROW(k_structured_to_tuples(k_structured(g, 4), k_group(g, 4)));
  const auto s = k_structured(g, 3);
  EXPECT_EQ(s->mul(kIdentity, 17), 17u);
  EXPECT_EQ(s->mul(17, kIdentity), 17u);
}

TEST(KStructured, ClassTwoFormAgrees) {
  for (const char* d : {"q8", "d8", "extraspecial:3,1,p", "abelian:2,4"}) {
    SCOPED_TRACE(d);
    const auto g = group_from_descriptor(d);
    for (std::size_t n : {3u, 4u}) {
      const auto mu_law = k_structured(g, n, KLaw::Mu);
      const auto c2_law = k_structured(g, n, KLaw::Class2);
      std::mt19937 rng(3);
      const bool exhaustive = mu_law->order() <= 1024;
      const std::size_t trials = exhaustive ? mu_law->order() * mu_law->order() : 200000;
      for (std::size_t i = 0; i < trials; ++i) {
        const Elem x = exhaustive ? static_cast<Elem>(i / mu_law->order()) : static_cast<Elem>(rng() % mu_law->order());
        const Elem y = exhaustive ? static_cast<Elem>(i % mu_law->order()) : static_cast<Elem>(rng() % mu_law->order());
        ASSERT_EQ(mu_law->mul(x, y), c2_law->mul(x, y));
      }
    }
  }
}

TEST(KStructured, MuIdentity) {
  // mu(g,h) (c^g)^h = c^(gh) mu(g,h) with c^g = c conjugated by (g1 g2)^-1.
  for (const char* d : {"sym3", "q8", "d8", "alt4", "sym4", "q12", "d12", "holder:2,7,6"}) {
    SCOPED_TRACE(d);
    const auto g = group_from_descriptor(d);
    const Group& G = *g;
    const Subgroup dg = derived_subgroup(g);
    auto act = [&](Elem c, Elem a1, Elem a2) { return G.conj(c, G.inv(G.mul(a1, a2))); };
    const std::size_t n = G.order();
    for (Elem g1 = 0; g1 < n; ++g1) {
      for (Elem g2 = 0; g2 < n; ++g2) {
        for (Elem h1 = 0; h1 < n; ++h1) {
          for (Elem h2 = 0; h2 < n; ++h2) {
            const Elem a[2] = {g1, g2}, b[2] = {h1, h2};
            const Elem m = mu(G, a, b);
            ASSERT_TRUE(dg.contains(m));
            for (Elem c : dg.generators()) {
              const Elem lhs = G.mul(m, act(act(c, g1, g2), h1, h2));
              const Elem rhs = G.mul(act(c, G.mul(g1, h1), G.mul(g2, h2)), m);
              ASSERT_EQ(lhs, rhs);
            }
          }
        }
      }
    }
  }
}

TEST(Tau, Orders) {
  EXPECT_EQ(tau(wedge(symmetric(3)))->order(), 108u);
  EXPECT_EQ(tau(wedge(abelian({4, 4})))->order(), 1024u);
  EXPECT_EQ(tau(wedge(cyclic(1)))->order(), 1u);
  for (const char* d : {"sym3", "q8", "abelian:2,2", "d8", "alt4"}) {
    SCOPED_TRACE(d);
    const auto g = group_from_descriptor(d);
    const auto t = tau(wedge(g));
    EXPECT_TRUE(check_group_axioms(*t, 20000));
    EXPECT_EQ(t->order(), g->order() * g->order() * t->wedge().w->order());
  }
}

TEST(Tau, DerivedSubgroup) {
  const auto s3 = tau(wedge(symmetric(3)));
  EXPECT_TRUE(tau_derived_check(*s3));
  EXPECT_EQ(support::table_of(*s3).derived().size(), 27u);
  const auto q8 = tau(wedge(quaternion(8)));
  EXPECT_TRUE(tau_derived_check(*q8));
  EXPECT_EQ(support::table_of(*q8).derived().size(), 8u);
  const auto ab = tau(wedge(abelian({2, 4})));
  EXPECT_TRUE(tau_derived_check(*ab));
  EXPECT_EQ(support::table_of(*ab).derived().size(), ab->tail()->order());
}

TEST(Tau, GeneratorsAreTheTwoCopiesAndTail) {
  // (a,1;1)(1,b;1) = (a,b;1) and (1,1;c)(1,1;d) = (1,1;cd).
  const auto t = tau(wedge(symmetric(3)));
  const Group& w = *t->tail();
  for (Elem a = 0; a < 6; ++a) {
    for (Elem b = 0; b < 6; ++b) {
      const Elem x[2] = {a, kIdentity}, y[2] = {kIdentity, b}, xy[2] = {a, b};
      EXPECT_EQ(t->mul(t->encode(x, 0), t->encode(y, 0)), t->encode(xy, 0));
    }
  }
  const Elem one[2] = {kIdentity, kIdentity};
  for (Elem c = 0; c < w.order(); ++c) {
    for (Elem d = 0; d < w.order(); ++d) EXPECT_EQ(t->mul(t->encode(one, c), t->encode(one, d)), t->encode(one, w.mul(c, d)));
  }
}

TEST(KTildeAbelian, OrdersAndCentres) {
  const auto k = ktilde_abelian(abelian({3, 3}), 3);
  EXPECT_EQ(k->order(), 243u);
  EXPECT_EQ(brute_center(*k), 27u);
  EXPECT_EQ(ktilde_abelian_center_order(k->wedge(), 3), 27u);
  EXPECT_EQ(brute_center(*tau(wedge(abelian({3, 3})))), 3u);

  const auto k93 = ktilde_abelian(abelian({9, 3}), 3);
  EXPECT_EQ(brute_center(*k93), 243u);
  EXPECT_EQ(ktilde_abelian_center_order(k93->wedge(), 3), 243u);
  EXPECT_EQ(brute_center(*tau(wedge(abelian({9, 3})))), 27u);

  for (const auto& f : std::vector<std::vector<std::int64_t>>{{2, 2}, {2, 4}, {4, 4}, {2, 2, 2}, {6, 6}}) {
    const auto g = abelian(f);
    SCOPED_TRACE(g->describe());
    const auto kt = ktilde_abelian(g, 3);
    EXPECT_TRUE(check_group_axioms(*kt, 20000));
    EXPECT_EQ(center(kt).order(), ktilde_abelian_center_order(kt->wedge(), 3));
  }
  const auto k4 = ktilde_abelian(abelian({2, 2}), 4);
  EXPECT_EQ(center(k4).order(), ktilde_abelian_center_order(k4->wedge(), 4));
}

TEST(KTildeAbelian, CyclicEqualsK) {
  for (std::int64_t n : {2, 5, 6}) {
    const auto g = cyclic(n);
    const auto kt = ktilde_abelian(g, 3);
    const auto k = k_group(g, 3);
    ASSERT_EQ(kt->order(), k->order());
    std::vector<Elem> id(kt->order());
    for (Elem x = 0; x < kt->order(); ++x) id[x] = x;
    EXPECT_TRUE(verify_morphism(morphism_from_table(kt, k, id)));
  }
}

TEST(KTildeCover, Orders) {
  EXPECT_EQ(ktilde_from_cover(schur_cover(symmetric(4)))->order(), 576u * 24);
  const auto q8 = ktilde_from_cover(schur_cover(quaternion(8)));
  const auto k = k_structured(quaternion(8), 3);
  ASSERT_EQ(q8->order(), k->order());
  for (Elem x = 0; x < q8->order(); ++x) {
    for (Elem y = 0; y < q8->order(); ++y) ASSERT_EQ(q8->mul(x, y), k->mul(x, y));
  }
}

TEST(KTildeCover, QuotientOfKOfCover) {
  for (const char* d : {"sym4", "alt4", "d8", "q8", "holder:4,5,3", "abelian:4,4", "abelian:2,2,2",
                        "extraspecial:3,1,p", "alt5"}) {
    SCOPED_TRACE(d);
    const auto g = group_from_descriptor(d);
    const CoverData c = schur_cover(g);
    const auto kt = ktilde_from_cover(c);
    const auto kh = k_group(c.h, 3);
    const Morphism f = cover_quotient_map(kh, kt, c);
    ASSERT_TRUE(verify_morphism(f));
    EXPECT_EQ(image(f).order(), kt->order());
    // The kernel is K(M,3) = {(m1, m2, m3) in M^3 : m1 m2 m3 = 1}.
    const Subgroup ker = kernel(f);
    EXPECT_EQ(ker.order(), c.m.order() * c.m.order());
    for (Elem x : ker.members()) {
      for (Elem v : kh->tuple(x)) EXPECT_TRUE(c.m.contains(v));
    }
    EXPECT_EQ(kt->order(), g->order() * g->order() * wedge(g).w->order());
  }
}

TEST(PhiAlpha, SmallExamples) {
  const auto s3 = symmetric(3);
  const Elem t0 = s3->generators()[0];
  std::vector<Elem> conj;
  for (Elem s : s3->generators()) conj.push_back(s3->conj(s, t0));
  const auto t = tau(wedge(s3));
  const Morphism phi = phi_alpha(t, automorphism(s3, conj));
  EXPECT_TRUE(verify_morphism(phi));
  EXPECT_EQ(image(phi).order(), 108u);
  EXPECT_TRUE(kernel(phi).is_trivial());

  const auto c44 = abelian({4, 4});
  const Morphism phi44 = phi_alpha(tau(wedge(c44)), inverting_generators(c44));
  EXPECT_EQ(kernel(phi44).order(), 4u);

  const auto c5 = cyclic(5);
  const Morphism phi5 = phi_alpha(tau(wedge(c5)), inverting_generators(c5));
  EXPECT_TRUE(is_injective(phi5));
  EXPECT_EQ(image(phi5).order(), k_group(c5, 3)->order());

  EXPECT_THROW(phi_alpha(tau(wedge(c5)), identity_of(c5)), NotAI);
}

TEST(PhiAlpha, CentralExtension) {
  struct C {
    const char* d;
    bool invert;
  };
  for (C c : {C{"sym4", false}, C{"q12", true}, C{"abelian:4,4", true}, C{"d8", false}, C{"alt4", true},
              C{"holder:2,7,6", false}}) {
    SCOPED_TRACE(c.d);
    const auto g = group_from_descriptor(c.d);
    const auto t = tau(wedge(g));
    const auto r = central_extension_check(t, c.invert ? inverting_generators(g) : identity_of(g));
    EXPECT_TRUE(r.morphism);
    EXPECT_TRUE(r.image_is_k3);
    EXPECT_TRUE(r.kernel_is_ker_kappa);
    EXPECT_TRUE(r.kernel_central);
    EXPECT_EQ(r.tau_order, r.multiplier_order * r.k3_order);
    EXPECT_TRUE(r.holds());
  }
}

TEST(TauFlat, Examples) {
  for (const auto& f : std::vector<std::vector<std::int64_t>>{{2, 2}, {4, 4}, {3, 3, 3}}) {
    const auto g = abelian(f);
    const auto w = wedge(g);
    EXPECT_EQ(tau_flat(w)->order(), g->order() * g->order());
    EXPECT_TRUE(bogomolov(w).factors.empty());
  }
  for (const char* d : {"holder:4,5,3", "holder:2,7,6", "extraspecial:3,1,p", "sym4", "q8", "alt5"}) {
    SCOPED_TRACE(d);
    const auto g = group_from_descriptor(d);
    const auto w = wedge(g);
    EXPECT_TRUE(bogomolov(w).factors.empty());
    // M-flat by brute force over commuting pairs equals ker kappa.
    std::set<Elem> flat_seeds;
    for (Elem x = 0; x < g->order(); ++x) {
      for (Elem y = 0; y < g->order(); ++y) {
        if (g->mul(x, y) == g->mul(y, x)) flat_seeds.insert(w.pair(x, y));
      }
    }
    const oracle::Table wt = support::table_of(*w.w);
    std::set<int> seeds(flat_seeds.begin(), flat_seeds.end());
    EXPECT_EQ(wt.close(seeds).size(), schur_multiplier(w).order());
    const auto tf = tau_flat(w);
    const std::size_t gd = derived_subgroup(g).order();
    EXPECT_EQ(tf->order(), g->order() * g->order() * gd);
  }
}

TEST(TauFlat, ExactSequenceThroughPhi) {
  // tau-flat of a group with B0 = 1 maps isomorphically onto K(G,3).
  for (const char* d : {"holder:2,7,6", "q12", "sym4", "abelian:2,4"}) {
    SCOPED_TRACE(d);
    const auto g = group_from_descriptor(d);
    const auto tf = tau_flat(wedge(g));
    const bool dihedral_like = std::string(d) == "holder:2,7,6" || std::string(d) == "sym4";
    const Morphism phi = tabulate(phi_alpha(tf, dihedral_like ? identity_of(g) : inverting_generators(g)));
    EXPECT_TRUE(verify_morphism(phi));
    EXPECT_TRUE(is_injective(phi));
    EXPECT_EQ(image(phi).order(), k_group(g, 3)->order());
  }
}

TEST(InducedTau, QuaternionOntoKleinFour) {
  const auto q8 = quaternion(8);
  const auto q = quotient(q8, center(q8), 100);
  const auto th = tau(wedge(q8));
  const auto tg = tau(wedge(q.group));
  const auto r = induced_tau_epimorphism(th, tg, q.projection);
  EXPECT_TRUE(r.surjective);
  EXPECT_TRUE(r.kernel_matches);
  EXPECT_EQ(r.kernel_order, th->order() / tg->order());
}

TEST(InducedTau, IdentityAndCover) {
  const auto s3 = symmetric(3);
  const auto t = tau(wedge(s3));
  const auto r = induced_tau_epimorphism(t, t, identity_of(s3));
  for (Elem x = 0; x < t->order(); ++x) EXPECT_EQ(r.map(x), x);
  EXPECT_EQ(r.kernel_order, 1u);
  EXPECT_TRUE(r.kernel_matches);

  const CoverData c = schur_cover(symmetric(4));
  const auto th = tau(wedge(c.h));
  const auto tg = tau(wedge(symmetric(4)));
  const auto rc = induced_tau_epimorphism(th, tg, c.proj);
  EXPECT_TRUE(rc.surjective);
  EXPECT_TRUE(rc.kernel_matches);
  EXPECT_EQ(rc.kernel_order * tg->order(), th->order());
}

TEST(Epi2, Quaternion12) {
  const CoverData c = schur_cover(quaternion(12));
  const auto r = epi2_isomorphism(c, inverting_generators(c.h));
  EXPECT_TRUE(is_bijective(r.map));
  EXPECT_EQ(r.tau->order(), r.ktilde->order());
}

TEST(Epi2, Symmetric4) {
  const CoverData c = schur_cover(symmetric(4));
  const auto r = epi2_isomorphism(c, inverting_generators(c.h));
  EXPECT_TRUE(verify_morphism(r.map));
  EXPECT_TRUE(is_bijective(r.map));
}

TEST(Epi2, Extraspecial27) {
  const CoverData c = schur_cover(extraspecial(3, 1, ExtraspecialExponent::P));
  const auto r = epi2_isomorphism(c, es_cover_automorphism(c));
  EXPECT_TRUE(is_bijective(r.map));
  EXPECT_EQ(r.tau->order(), 27u * 27 * 27);
  EXPECT_THROW(epi2_isomorphism(c, identity_of(c.h)), NotAI);
}

TEST(KTildeViaTauFlat, AgreesWithCoverForm) {
  struct C {
    const char* d;
    int alpha;  // 0 inverting generators, 1 the order-p^5 cover automorphism
  };
  for (C cs : {C{"q8", 0}, C{"sym4", 0}, C{"extraspecial:3,1,p", 1}}) {
    SCOPED_TRACE(cs.d);
    const CoverData c = schur_cover(group_from_descriptor(cs.d));
    const Morphism alpha = cs.alpha == 0 ? inverting_generators(c.h) : es_cover_automorphism(c);
    const auto r = ktilde_via_tauflat(c, alpha);
    const auto kt = ktilde_from_cover(c);
    EXPECT_EQ(r.iota_image_order, c.m.order() * c.m.order());
    ASSERT_EQ(r.quotient.group->order(), kt->order());
    EXPECT_EQ(order_stats(r.quotient.group), order_stats(kt));
    EXPECT_EQ(center(r.quotient.group).order(), center(kt).order());
    EXPECT_EQ(derived_subgroup(r.quotient.group).order(), derived_subgroup(kt).order());
  }
}
