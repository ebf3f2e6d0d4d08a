#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "support.hpp"
#include "wedgelab/abelian.hpp"
#include "wedgelab/constructors.hpp"
#include "wedgelab/errors.hpp"
#include "wedgelab/morphism.hpp"
#include "wedgelab/subgroup.hpp"

using namespace wedgelab;

namespace {

void expect_same_invariants(const Group& g, const oracle::Table& ref) {
  const oracle::Table t = support::table_of(g);
  ASSERT_EQ(t.n(), ref.n());
  EXPECT_EQ(t.order_profile(), ref.order_profile());
  EXPECT_EQ(t.center().size(), ref.center().size());
  EXPECT_EQ(t.derived().size(), ref.derived().size());
  EXPECT_EQ(t.num_classes(), ref.num_classes());
}

oracle::Table perm_table(const std::vector<oracle::Perm>& gens, int degree) {
  return oracle::Table::from_perms(oracle::closure(gens, degree));
}

}  // namespace

TEST(Families, AxiomsHold) {
  for (const char* d : {"c1", "c7", "abelian:4,6", "d8", "d10", "q8", "q12", "sym4", "alt4", "alt5",
                        "holder:4,5,3", "holder:2,7,6", "extraspecial:3,1,p", "extraspecial:3,1,p2",
                        "extraspecial:5,1,p", "c3*alt4"}) {
    SCOPED_TRACE(d);
    EXPECT_TRUE(check_group_axioms(*group_from_descriptor(d)));
  }
}

TEST(Families, DihedralMatchesPolygonModel) {
  for (int n : {1, 2, 3, 4, 5, 6, 9}) {
    SCOPED_TRACE(n);
    const auto g = dihedral(2 * n);
    if (n >= 3) expect_same_invariants(*g, perm_table(oracle::dihedral_perms(n), n));
    EXPECT_EQ(g->order(), static_cast<std::size_t>(2 * n));
  }
}

TEST(Families, QuaternionMatchesDicyclicModel) {
  for (int n : {1, 2, 3, 4, 5}) {
    SCOPED_TRACE(n);
    expect_same_invariants(*quaternion(4 * n), oracle::dicyclic(n));
  }
}

TEST(Families, SymmetricAndAlternatingMatchPermutationModels) {
  for (int n : {1, 2, 3, 4, 5}) {
    SCOPED_TRACE(n);
    expect_same_invariants(*symmetric(n), perm_table(oracle::symmetric_perms(n), n));
    if (n >= 3) expect_same_invariants(*alternating(n), perm_table(oracle::alternating_perms(n), n));
  }
  EXPECT_EQ(symmetric(6)->order(), 720u);
  EXPECT_EQ(alternating(6)->order(), 360u);
}

TEST(Families, HolderMatchesSemidirectModel) {
  struct P { int n, m, r; };
  for (P p : {P{4, 5, 3}, P{2, 7, 6}, P{3, 7, 2}, P{6, 7, 3}, P{2, 3, 2}, P{4, 5, 2}, P{2, 9, 8}}) {
    SCOPED_TRACE(p.n * 1000 + p.m * 10 + p.r);
    expect_same_invariants(*holder(p.n, p.m, p.r), oracle::semidirect(p.m, p.n, p.r));
  }
}

TEST(Families, HolderParameterViolations) {
  EXPECT_THROW(holder(4, 6, 5), ParameterViolation);   // m even
  EXPECT_THROW(holder(4, 5, 2 + 5), ParameterViolation);
  EXPECT_THROW(holder(3, 5, 2), ParameterViolation);   // 2^3 != 1 mod 5
  EXPECT_THROW(holder(2, 9, 4), ParameterViolation);   // 4^2 = 16 != 1 mod 9
  EXPECT_THROW(holder(3, 7, 1), ParameterViolation);   // gcd(7, 0) = 7
  EXPECT_NO_THROW(holder(4, 5, 3));
}

TEST(Families, Extraspecial) {
  for (auto [p, n, kind, exp] : {std::tuple{3, 1, ExtraspecialExponent::P, 3}, {3, 1, ExtraspecialExponent::PSquared, 9},
                                 {5, 1, ExtraspecialExponent::P, 5}, {5, 1, ExtraspecialExponent::PSquared, 25},
                                 {3, 2, ExtraspecialExponent::P, 3}, {3, 2, ExtraspecialExponent::PSquared, 9}}) {
    SCOPED_TRACE(p * 100 + n * 10 + exp);
    const auto g = extraspecial(p, n, kind);
    std::size_t want = 1;
    for (int i = 0; i < 2 * n + 1; ++i) want *= static_cast<std::size_t>(p);
    ASSERT_EQ(g->order(), want);
    const auto t = support::table_of(*g);
    EXPECT_EQ(t.center().size(), static_cast<std::size_t>(p));
    EXPECT_EQ(t.derived(), t.center());
    EXPECT_EQ(t.exponent(), exp);
  }
  EXPECT_THROW(extraspecial(2, 1, ExtraspecialExponent::P), ParameterViolation);
  EXPECT_THROW(extraspecial(9, 1, ExtraspecialExponent::P), ParameterViolation);
}

TEST(Families, AbelianNormalizes) {
  const auto g = abelian({4, 6});
  EXPECT_EQ(g->order(), 24u);
  EXPECT_EQ(abelian_invariants(g).factors, (std::vector<std::uint64_t>{2, 12}));
  EXPECT_EQ(abelian_invariants(abelian({2, 2, 3})).factors, (std::vector<std::uint64_t>{2, 6}));
  EXPECT_TRUE(support::table_of(*g).is_abelian());
}

TEST(Subgroups, CenterAndDerivedAgreeWithBruteForce) {
  for (const char* d : {"d8", "d12", "q8", "q16", "sym4", "alt4", "holder:4,5,3", "extraspecial:3,1,p", "c3*alt4",
                        "c2*d8", "alt5"}) {
    SCOPED_TRACE(d);
    const auto g = group_from_descriptor(d);
    const auto t = support::table_of(*g);
    const auto z = center(g);
    const auto dz = t.center();
    EXPECT_EQ(std::vector<Elem>(dz.begin(), dz.end()), z.members());
    const auto dd = t.derived();
    EXPECT_EQ(std::vector<Elem>(dd.begin(), dd.end()), derived_subgroup(g).members());
    EXPECT_TRUE(is_normal(derived_subgroup(g)));
  }
}

TEST(Subgroups, ElementOrdersAndClasses) {
  for (const char* d : {"d10", "q12", "sym4", "holder:6,7,3", "extraspecial:3,1,p2"}) {
    SCOPED_TRACE(d);
    const auto g = group_from_descriptor(d);
    const auto t = support::table_of(*g);
    const auto ord = element_orders(*g);
    for (int x = 0; x < t.n(); ++x) EXPECT_EQ(static_cast<int>(ord[static_cast<std::size_t>(x)]), t.order_of(x));
    const auto cls = conjugacy_classes(*g);
    EXPECT_EQ(static_cast<int>(cls.sizes.size()), t.num_classes());
  }
}

TEST(Subgroups, ClosureMatchesNaiveClosure) {
  const auto g = symmetric(5);
  const auto t = support::table_of(*g);
  for (Elem a = 1; a < 120; a += 17) {
    for (Elem b = 2; b < 120; b += 29) {
      const std::vector<Elem> seeds{a, b};
      const auto s = close_generators(g, seeds);
      const auto ref = t.close({static_cast<int>(a), static_cast<int>(b)});
      EXPECT_EQ(s.order(), ref.size());
    }
  }
}

TEST(Subgroups, DerivedLength) {
  EXPECT_EQ(derived_length(cyclic(1)), 0);
  EXPECT_EQ(derived_length(cyclic(5)), 1);
  EXPECT_EQ(derived_length(symmetric(3)), 2);
  EXPECT_EQ(derived_length(symmetric(4)), 3);
  EXPECT_EQ(derived_length(alternating(5)), -1);
}

TEST(Subgroups, SubgroupAsGroup) {
  const auto g = symmetric(4);
  const auto a4 = derived_subgroup(g);
  const auto e = subgroup_as_group(a4, 5000);
  EXPECT_EQ(e.group->order(), 12u);
  EXPECT_TRUE(check_group_axioms(*e.group));
  for (Elem x = 0; x < 12; ++x) {
    for (Elem y = 0; y < 12; ++y) EXPECT_EQ(e.to_parent[e.group->mul(x, y)], g->mul(e.to_parent[x], e.to_parent[y]));
  }
  expect_same_invariants(*e.group, perm_table(oracle::alternating_perms(4), 4));
}

TEST(Products, DirectProduct) {
  const auto g = group_from_descriptor("c3*alt4");
  EXPECT_EQ(g->order(), 36u);
  EXPECT_EQ(center(g).order(), 3u);
  EXPECT_EQ(derived_subgroup(g).order(), 4u);
  const auto h = group_from_descriptor("c2*c2*c2");
  EXPECT_EQ(h->order(), 8u);
  EXPECT_TRUE(is_abelian(h));
}

TEST(Morphisms, ExtensionChecksRelations) {
  const auto d8 = dihedral(8);
  const auto c2 = cyclic(2);
  const auto& gens = d8->generators();
  ASSERT_EQ(gens.size(), 2u);
  // a -> 1, b -> x is the sign map; a -> x, b -> x also works; neither sends b to an order-4 element.
  EXPECT_NO_THROW(extend_to_morphism(d8, c2, {0, 1}));
  EXPECT_NO_THROW(extend_to_morphism(d8, c2, {1, 1}));
  const auto c4 = cyclic(4);
  EXPECT_THROW(extend_to_morphism(d8, c4, {1, 0}), NotAMorphism);
  const auto f = extend_to_morphism(d8, c2, {1, 0});
  EXPECT_EQ(kernel(f).order(), 4u);
  EXPECT_EQ(image(f).order(), 2u);
  EXPECT_FALSE(is_injective(f));
}

TEST(Morphisms, QuotientByCenter) {
  for (const char* d : {"d8", "q8", "sym4", "extraspecial:3,1,p"}) {
    SCOPED_TRACE(d);
    const auto g = group_from_descriptor(d);
    const auto z = center(g);
    const auto q = quotient(g, z, 5000);
    EXPECT_EQ(q.group->order() * z.order(), g->order());
    EXPECT_TRUE(verify_morphism(q.projection));
    EXPECT_EQ(kernel(q.projection).members(), z.members());
  }
  EXPECT_THROW(quotient(symmetric(3), close_generators(symmetric(3), std::vector<Elem>{symmetric(3)->generators()[0]}), 5000),
               NotNormal);
}

TEST(Abelian, BasisRoundTrip) {
  for (const char* d : {"abelian:4,4", "abelian:2,6,12", "c30", "abelian:3,9,27"}) {
    SCOPED_TRACE(d);
    const auto g = group_from_descriptor(d);
    const auto b = abelian_basis(g);
    std::uint64_t prod = 1;
    for (auto f : b.factors()) prod *= f;
    EXPECT_EQ(prod, g->order());
    for (Elem x = 0; x < g->order(); ++x) EXPECT_EQ(b.element(b.coords(x)), x);
  }
}

TEST(Abelian, InvariantsOfAbelianization) {
  EXPECT_EQ(abelian_invariants(symmetric(4)).factors, (std::vector<std::uint64_t>{2}));
  EXPECT_EQ(abelian_invariants(alternating(4)).factors, (std::vector<std::uint64_t>{3}));
  EXPECT_TRUE(abelian_invariants(alternating(5)).factors.empty());
  EXPECT_EQ(abelian_invariants(dihedral(8)).factors, (std::vector<std::uint64_t>{2, 2}));
  EXPECT_EQ(abelian_invariants(holder(4, 5, 3)).factors, (std::vector<std::uint64_t>{4}));
}

TEST(Covers, MultiplierOrders) {
  struct C { const char* d; std::size_t m; };
  for (C c : {C{"c6", 1}, C{"abelian:2,2", 2}, C{"abelian:4,4", 4}, C{"abelian:2,2,2", 8}, C{"abelian:3,3,3", 27},
              C{"d6", 1}, C{"d8", 2}, C{"d12", 2}, C{"q8", 1}, C{"sym3", 1}, C{"sym4", 2}, C{"sym5", 2},
              C{"alt4", 2}, C{"alt5", 2}, C{"holder:4,5,3", 1}, C{"extraspecial:3,1,p", 9},
              C{"extraspecial:3,1,p2", 1}, C{"extraspecial:3,2,p", 243}, C{"c5*alt4", 2}, C{"c5*d8", 2}, C{"c3*d8", 2}}) {
    SCOPED_TRACE(c.d);
    const auto g = group_from_descriptor(c.d);
    const auto cov = schur_cover(g);
    EXPECT_EQ(cov.m.order(), c.m);
    EXPECT_EQ(cov.h->order(), g->order() * c.m);
    EXPECT_TRUE(verify_cover(cov));
  }
}

TEST(Covers, Unsupported) {
  EXPECT_THROW(schur_cover(group_from_descriptor("c2*d8")), UnsupportedFamily);
  EXPECT_THROW(schur_cover(group_from_descriptor("c3*alt4")), UnsupportedFamily);
  EXPECT_THROW(schur_cover(alternating(6)), UnsupportedFamily);
}

TEST(Descriptors, ParseAndReject) {
  EXPECT_EQ(group_from_descriptor("holder:4,5,3")->order(), 20u);
  EXPECT_EQ(group_from_descriptor("Sym4")->order(), 24u);
  EXPECT_EQ(group_from_descriptor("extraspecial:3,1,2")->order(), 27u);
  EXPECT_EQ(group_from_descriptor("c2 * c3")->order(), 6u);
  EXPECT_EQ(group_from_descriptor("holder:4,5,3")->describe(), "holder:4,5,3");
  EXPECT_THROW(group_from_descriptor("klein"), ParameterViolation);
  EXPECT_THROW(group_from_descriptor("holder:4,5"), ParameterViolation);
  EXPECT_THROW(group_from_descriptor("c3*"), ParameterViolation);
  EXPECT_THROW(group_from_descriptor("cyclic:x"), ParameterViolation);
}

TEST(SmithQuotient, MatchesBruteForceIndex) {
  std::mt19937 rng(7);
  for (int it = 0; it < 300; ++it) {
    const std::size_t k = 1 + rng() % 4;
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 12);
    std::vector<std::vector<std::int64_t>> rows(rng() % 5, std::vector<std::int64_t>(k));
    for (auto& r : rows) {
      for (auto& x : r) x = static_cast<std::int64_t>(rng() % 9) - 4;
    }
    const auto q = smith_quotient(k, n, rows);
    // Subgroup of (Z/n)^k spanned by the rows, by closure.
    std::set<std::vector<std::int64_t>> span{std::vector<std::int64_t>(k, 0)};
    std::vector<std::vector<std::int64_t>> frontier(span.begin(), span.end());
    while (!frontier.empty()) {
      std::vector<std::vector<std::int64_t>> next;
      for (const auto& v : frontier) {
        for (const auto& r : rows) {
          auto w = v;
          for (std::size_t j = 0; j < k; ++j) w[j] = ((w[j] + r[j]) % n + n) % n;
          if (span.insert(w).second) next.push_back(w);
        }
      }
      frontier = std::move(next);
    }
    std::uint64_t total = 1, order = 1;
    for (std::size_t j = 0; j < k; ++j) total *= static_cast<std::uint64_t>(n);
    for (auto d : q.factors) order *= d;
    EXPECT_EQ(order * span.size(), total);
    for (const auto& r : rows) {
      for (std::size_t t = 0; t < q.factors.size(); ++t) {
        std::int64_t acc = 0;
        for (std::size_t j = 0; j < k; ++j) acc += r[j] * q.coords[j][t];
        EXPECT_EQ(((acc % static_cast<std::int64_t>(q.factors[t])) + static_cast<std::int64_t>(q.factors[t])) %
                      static_cast<std::int64_t>(q.factors[t]),
                  0);
      }
    }
  }
}
