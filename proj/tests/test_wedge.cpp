#include <gtest/gtest.h>

#include "support.hpp"
#include "wedgelab/abelian.hpp"
#include "wedgelab/constructors.hpp"
#include "wedgelab/errors.hpp"
#include "wedgelab/wedge.hpp"

using namespace wedgelab;

namespace {

WedgeStructure forced(const GroupPtr& g, WedgeStrategy s) {
  WedgeOptions o;
  o.strategy = s;
  return wedge(g, o);
}

std::vector<std::uint64_t> invariants_of(const Subgroup& s) { return abelian_invariants(s).factors; }

/// Every abelian group of order at most 16, as invariant-factor lists.
std::vector<std::vector<std::int64_t>> small_abelian() {
  return {{2},       {3},    {2, 2}, {4},    {5},       {6},    {7},    {2, 2, 2}, {2, 4}, {8},
          {3, 3},    {9},    {10},   {11},   {2, 6},    {12},   {13},   {14},      {15},   {2, 2, 2, 2},
          {2, 2, 4}, {2, 8}, {4, 4}, {16}};
}

}  // namespace

TEST(WedgeAbelian, Examples) {
  EXPECT_EQ(invariants_of(whole_group(wedge_abelian(abelian({4, 4})).w)), (std::vector<std::uint64_t>{4}));
  EXPECT_EQ(wedge_abelian(cyclic(6)).w->order(), 1u);
  EXPECT_EQ(invariants_of(whole_group(wedge_abelian(abelian({4, 4, 4})).w)), (std::vector<std::uint64_t>{4, 4, 4}));
  EXPECT_THROW(wedge_abelian(symmetric(3)), NotApplicable);
}

TEST(WedgeGeneric, Examples) {
  EXPECT_EQ(wedge_generic(abelian({2, 2})).w->order(), 2u);
  const auto s3 = wedge_generic(symmetric(3));
  EXPECT_EQ(invariants_of(whole_group(s3.w)), (std::vector<std::uint64_t>{3}));
  EXPECT_TRUE(schur_multiplier(s3).is_trivial());
  EXPECT_EQ(wedge_generic(quaternion(8)).w->order(), 2u);
  EXPECT_THROW(wedge_generic(symmetric(4)), BudgetExceeded);
}

TEST(WedgeCover, Examples) {
  const auto s4 = wedge_from_cover(schur_cover(symmetric(4)));
  EXPECT_EQ(s4.w->order(), 24u);
  EXPECT_EQ(schur_multiplier(s4).order(), 2u);
  const auto q8 = wedge_from_cover(schur_cover(quaternion(8)));
  EXPECT_EQ(q8.w->order(), 2u);
  const auto es = wedge_from_cover(schur_cover(extraspecial(3, 1, ExtraspecialExponent::P)));
  EXPECT_EQ(es.w->order(), 27u);
  EXPECT_EQ(invariants_of(schur_multiplier(es)), (std::vector<std::uint64_t>{3, 3}));
}

TEST(WedgeProduct, Examples) {
  const auto g = group_from_descriptor("c3*alt4");
  const auto w = forced(g, WedgeStrategy::DirectProduct);
  EXPECT_EQ(w.w->order(), 24u);
  EXPECT_FALSE(check_wedge_laws(w, 4000));
  EXPECT_EQ(forced(group_from_descriptor("sym3*c5"), WedgeStrategy::DirectProduct).w->order(), 3u);
  const auto v4 = forced(group_from_descriptor("c2*c2"), WedgeStrategy::DirectProduct);
  EXPECT_EQ(v4.w->order(), 2u);
  EXPECT_TRUE(pairing_isomorphism(v4, wedge_abelian(v4.g)).has_value());
}

TEST(WedgeStrategies, AgreeOnSmallGroups) {
  for (const auto& f : small_abelian()) {
    const auto g = abelian(f);
    SCOPED_TRACE(g->describe());
    const auto a = wedge_abelian(g);
    const auto gen = wedge_generic(g);
    EXPECT_TRUE(pairing_isomorphism(a, gen).has_value());
    EXPECT_TRUE(pairing_isomorphism(gen, a).has_value());
    if (f.size() >= 2) {
      const auto c = forced(g, WedgeStrategy::Cover);
      EXPECT_TRUE(pairing_isomorphism(a, c).has_value());
    }
  }
  for (const char* d : {"sym3", "q8", "d8", "d12", "q12", "d16", "q16", "holder:2,7,6"}) {
    SCOPED_TRACE(d);
    const auto g = group_from_descriptor(d);
    const auto c = forced(g, WedgeStrategy::Cover);
    const auto gen = wedge_generic(g);
    EXPECT_TRUE(pairing_isomorphism(c, gen).has_value());
  }
  const auto pg = group_from_descriptor("c2*sym3");
  EXPECT_TRUE(pairing_isomorphism(forced(pg, WedgeStrategy::DirectProduct), wedge_generic(pg)).has_value());
}

TEST(WedgeLaws, HoldForEveryStrategy) {
  for (const char* d : {"abelian:2,4", "sym3", "q8", "d8", "sym4", "alt4", "alt5", "holder:4,5,3", "d12", "q12",
                        "extraspecial:3,1,p", "extraspecial:3,1,p2", "extraspecial:5,1,p", "sym5", "c3*alt4",
                        "c5*sym4", "abelian:3,3,3"}) {
    SCOPED_TRACE(d);
    const auto g = group_from_descriptor(d);
    const auto w = wedge(g);
    const auto fail = check_wedge_laws(w, 3000);
    EXPECT_FALSE(fail) << (fail ? fail->law : "");
  }
}

TEST(WedgeLaws, OrderFormula) {
  struct C { const char* d; std::size_t m; };
  for (C c : {C{"d8", 2}, C{"q12", 1}, C{"sym4", 2}, C{"alt4", 2}, C{"alt5", 2}, C{"holder:6,7,3", 1},
              C{"extraspecial:3,2,p", 243}, C{"abelian:4,4", 4}, C{"c3*alt4", 6}}) {
    SCOPED_TRACE(c.d);
    const auto g = group_from_descriptor(c.d);
    const auto w = wedge(g);
    const auto m = schur_multiplier(w);
    EXPECT_EQ(m.order(), c.m);
    EXPECT_EQ(w.w->order(), derived_subgroup(g).order() * m.order());
  }
}

TEST(Epicentre, Examples) {
  EXPECT_TRUE(epicentre(wedge(abelian({3, 3}))).is_trivial());
  EXPECT_EQ(epicentre(wedge(cyclic(6))).order(), 6u);
  EXPECT_EQ(epicentre(wedge(abelian({2, 4}))).order(), 2u);
  // Brute-force oracle: g is in the epicentre iff g^x = 1 for every x.
  const auto g = quaternion(8);
  const auto w = wedge(g);
  std::size_t count = 0;
  for (Elem x = 0; x < 8; ++x) {
    bool ok = true;
    for (Elem y = 0; y < 8; ++y) ok = ok && w.pair(x, y) == kIdentity;
    count += ok;
  }
  EXPECT_EQ(epicentre(w).order(), count);
}

TEST(MFlat, Examples) {
  const auto a = wedge(abelian({2, 4}));
  EXPECT_EQ(mflat(a).order(), a.w->order());
  EXPECT_TRUE(mflat(wedge(symmetric(3))).is_trivial());
  const auto q = wedge(quaternion(8));
  EXPECT_EQ(mflat(q).members(), schur_multiplier(q).members());
  for (const char* d : {"d8", "sym4", "extraspecial:3,1,p", "alt5"}) {
    SCOPED_TRACE(d);
    const auto w = wedge(group_from_descriptor(d));
    const auto f = mflat(w);
    const auto k = schur_multiplier(w);
    for (Elem x : f.members()) EXPECT_TRUE(k.contains(x));
  }
}

TEST(TensorSquare, Orders) {
  EXPECT_EQ(tensor_square(cyclic(2)).w->order(), 2u);
  EXPECT_EQ(tensor_square(abelian({2, 2})).w->order(), 16u);
  EXPECT_EQ(tensor_square(cyclic(6)).w->order(), 6u);
  const auto s3 = tensor_square(symmetric(3));
  EXPECT_FALSE(check_wedge_laws(s3, 1000, 24, true));
  // Brute-force oracle for abelian G: G (x) G is the bilinear tensor square.
  const auto t = tensor_square(abelian({2, 4}));
  EXPECT_EQ(t.w->order(), 2u * 2 * 2 * 4);
  // |G (x) G| = |G ^ G| * |image of the diagonal| for these groups.
  EXPECT_EQ(s3.w->order() % wedge(symmetric(3)).w->order(), 0u);
}

TEST(WedgeStrategy, Names) {
  EXPECT_EQ(parse_wedge_strategy("product"), WedgeStrategy::DirectProduct);
  EXPECT_THROW(parse_wedge_strategy("magic"), ParameterViolation);
  EXPECT_EQ(wedge(symmetric(4)).strategy, WedgeStrategy::Cover);
  EXPECT_EQ(wedge(abelian({2, 2})).strategy, WedgeStrategy::Abelian);
  EXPECT_EQ(wedge(group_from_descriptor("c3*alt4")).strategy, WedgeStrategy::DirectProduct);
}

TEST(WedgeHopf, AgreesWithOtherStrategies) {
  for (const auto& f : small_abelian()) {
    const auto g = abelian(f);
    SCOPED_TRACE(g->describe());
    EXPECT_TRUE(pairing_isomorphism(wedge_abelian(g), wedge_hopf(g)).has_value());
  }
  for (const char* d : {"sym3", "q8", "d8", "d12", "q12", "c2*sym3"}) {
    SCOPED_TRACE(d);
    const auto g = group_from_descriptor(d);
    EXPECT_TRUE(pairing_isomorphism(wedge_generic(g), wedge_hopf(g)).has_value());
  }
  for (const char* d : {"sym4", "alt4", "alt5", "holder:4,5,3", "extraspecial:3,1,p", "extraspecial:3,1,p2", "d16",
                        "q16", "c3*alt4", "c5*d8", "abelian:3,3,3"}) {
    SCOPED_TRACE(d);
    const auto g = group_from_descriptor(d);
    const auto h = wedge_hopf(g);
    EXPECT_FALSE(check_wedge_laws(h, 3000));
    EXPECT_TRUE(pairing_isomorphism(wedge(g), h).has_value());
  }
}

TEST(WedgeHopf, CoverGroups) {
  // Schur covers of these groups have trivial multiplier themselves.
  for (const char* d : {"sym4", "q8", "extraspecial:3,1,p2"}) {
    SCOPED_TRACE(d);
    const auto c = schur_cover(group_from_descriptor(d));
    const auto w = wedge_hopf(c.h);
    EXPECT_TRUE(schur_multiplier(w).is_trivial());
    EXPECT_EQ(w.w->order(), derived_subgroup(c.h).order());
  }
  const auto es = schur_cover(group_from_descriptor("extraspecial:3,1,p"));
  const auto w = wedge_hopf(es.h);
  EXPECT_FALSE(check_wedge_laws(w, 2000));
  EXPECT_EQ(w.w->order(), derived_subgroup(es.h).order() * schur_multiplier(w).order());
  EXPECT_THROW(wedge_hopf(symmetric(6)), BudgetExceeded);
}

TEST(HopfCover, MatchesFamilyCovers) {
  for (const char* d : {"sym4", "q8", "abelian:4,4", "alt5", "extraspecial:3,1,p", "d8", "holder:4,5,3",
                        "abelian:3,3,3", "alt4", "q12"}) {
    SCOPED_TRACE(d);
    const auto g = group_from_descriptor(d);
    const CoverData h = hopf_cover(g);
    const CoverData f = schur_cover(g);
    EXPECT_TRUE(verify_cover(h));
    EXPECT_EQ(h.h->order(), f.h->order());
    EXPECT_EQ(abelian_invariants(h.m), abelian_invariants(f.m));
    EXPECT_EQ(derived_subgroup(h.h).order(), derived_subgroup(f.h).order());
  }
  const auto a = group_from_descriptor("cyclic:3*alt4");
  EXPECT_THROW(schur_cover(a), UnsupportedFamily);
  const CoverData c = any_schur_cover(a);
  EXPECT_EQ(abelian_invariants(c.m).factors, (std::vector<std::uint64_t>{6}));
  EXPECT_THROW(hopf_cover(symmetric(6)), BudgetExceeded);
}
