#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "wedgelab/automorphisms.hpp"
#include "wedgelab/constructors.hpp"
#include "wedgelab/errors.hpp"
#include "wedgelab/functors.hpp"
#include "wedgelab/isoscope.hpp"
#include "wedgelab/wedge.hpp"

using namespace wedgelab;

namespace {

std::int64_t laplace_det(const std::vector<std::vector<std::int64_t>>& a) {
  const std::size_t k = a.size();
  if (k == 0) return 1;
  if (k == 1) return a[0][0];
  std::int64_t det = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t j = 0; j < k; ++j) {
        if (j != c) row.push_back(a[r][j]);
      }
      minor.push_back(row);
    }
    det += (c % 2 ? -1 : 1) * a[0][c] * laplace_det(minor);
  }
  return det;
}

std::shared_ptr<const TauGroup> tau_of(const GroupPtr& g) { return tau(wedge(g)); }

}  // namespace

TEST(Fingerprint, MatchesBruteForce) {
  for (const char* d : {"q8", "d8", "sym3", "sym4", "alt4", "holder:4,5,3", "abelian:2,4"}) {
    SCOPED_TRACE(d);
    const auto g = group_from_descriptor(d);
    const Fingerprint f = fingerprint(g);
    const oracle::Table t = support::table_of(*g);
    std::set<int> z;
    for (int x = 0; x < t.n(); ++x) {
      bool c = true;
      for (int y = 0; y < t.n() && c; ++y) c = t.mul[x][y] == t.mul[y][x];
      if (c) z.insert(x);
    }
    EXPECT_EQ(f.order, static_cast<std::uint64_t>(t.n()));
    EXPECT_EQ(f.center_order, z.size());
    EXPECT_EQ(f.derived_order, t.derived().size());
    std::map<std::uint64_t, std::uint64_t> hist;
    std::uint64_t exponent = 1;
    for (int x = 0; x < t.n(); ++x) {
      const auto o = static_cast<std::uint64_t>(t.order_of(x));
      ++hist[o];
      exponent = std::lcm(exponent, o);
    }
    EXPECT_EQ(f.order_histogram, hist);
    EXPECT_EQ(f.exponent, exponent);
    EXPECT_EQ(fingerprint(g), f);
    EXPECT_EQ(fingerprint(g).hash(), f.hash());
  }
}

TEST(Fingerprint, SeparatesQuaternionAndDihedral) {
  const Fingerprint q = fingerprint(quaternion(8)), d = fingerprint(dihedral(8));
  EXPECT_NE(q, d);
  EXPECT_NE(q.hash(), d.hash());
  const auto diff = first_difference(q, d);
  ASSERT_TRUE(diff);
  EXPECT_EQ(diff->name, "order_histogram");
}

TEST(Fingerprint, CentresFromTheCubefreeExamples) {
  const auto a = group_from_descriptor("cyclic:3*alt4");
  const Fingerprint ft = fingerprint(tau_of(a));
  EXPECT_EQ(ft.center.factors, (std::vector<std::uint64_t>{6}));
  const Fingerprint fk = fingerprint(ktilde_from_cover(any_schur_cover(a)));
  EXPECT_EQ(fk.center.factors, (std::vector<std::uint64_t>{3, 6}));
}

TEST(Fingerprint, CoverIndependenceOfKTilde) {
  for (const char* d : {"sym4", "abelian:4,4", "d8", "extraspecial:3,1,p", "alt4"}) {
    SCOPED_TRACE(d);
    const auto g = group_from_descriptor(d);
    EXPECT_EQ(fingerprint(ktilde_from_cover(schur_cover(g))), fingerprint(ktilde_from_cover(hopf_cover(g))));
  }
}

TEST(Fingerprint, Budget) {
  Budgets b;
  b.fingerprint_cap = 100;
  EXPECT_THROW(fingerprint(symmetric(5), b), BudgetExceeded);
}

TEST(DetMod, MatchesLaplace) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t k = 1 + rng() % 5;
    const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 60);
    std::vector<std::vector<std::int64_t>> a(k, std::vector<std::int64_t>(k));
    for (auto& row : a) {
      for (auto& v : row) v = static_cast<std::int64_t>(rng() % 19) - 9;
    }
    const std::int64_t expect = ((laplace_det(a) % n) + n) % n;
    EXPECT_EQ(det_mod(a, n), expect);
  }
}

TEST(DerivedAction, Holder453) {
  const auto g = holder(4, 5, 3);
  const auto t = derived_action(tau_of(g));
  EXPECT_TRUE(t.homocyclic);
  EXPECT_EQ(t.derived.factors, (std::vector<std::uint64_t>{5, 5, 5}));
  EXPECT_FALSE(t.all_in_sl);
  // r^2 = 9 = 4 mod 5 lies in the determinant subgroup.
  EXPECT_NE(std::find(t.determinant_subgroup.begin(), t.determinant_subgroup.end(), 4u), t.determinant_subgroup.end());
  const auto k = derived_action(k_group(g, 3));
  EXPECT_TRUE(k.homocyclic);
  EXPECT_TRUE(k.all_in_sl);
  EXPECT_FALSE(t.same_invariants(k));
}

TEST(DerivedAction, AbelianIsTrivial) {
  const auto a = derived_action(abelian({4, 2}));
  EXPECT_TRUE(a.derived.factors.empty());
  EXPECT_EQ(a.action_order, 1u);
  for (const auto& m : a.matrices) EXPECT_TRUE(m.empty());
  EXPECT_THROW(derived_action(symmetric(4)), NotApplicable);
}

TEST(DerivedAction, MatricesActOnCoordinates) {
  const auto g = tau_of(holder(6, 7, 6));
  const auto inv = derived_action(g);
  const Subgroup d = derived_subgroup(g);
  const AbelianBasis basis = abelian_basis(d);
  ASSERT_EQ(inv.matrices.size(), g->generators().size());
  for (std::size_t s = 0; s < inv.matrices.size(); ++s) {
    for (std::size_t j = 0; j < basis.rank(); ++j) {
      EXPECT_EQ(g->conj(basis.basis()[j], g->generators()[s]), basis.element(inv.matrices[s][j]));
    }
  }
}

TEST(AreIsomorphic, Examples) {
  const auto s3 = symmetric(3);
  const auto v = are_isomorphic(tau_of(s3), k_group(s3, 3));
  ASSERT_EQ(v.answer, Answer::Yes);
  EXPECT_TRUE(verify_explicit_iso(*v.iso).holds());

  const auto c33 = abelian({3, 3});
  const auto n = are_isomorphic(tau_of(c33), ktilde_abelian(c33, 3));
  ASSERT_EQ(n.answer, Answer::No);
  EXPECT_EQ(n.witness.name, "center_order");
  EXPECT_EQ(n.witness.value_a, "3");
  EXPECT_EQ(n.witness.value_b, "27");

  const auto self = are_isomorphic(s3, s3);
  EXPECT_EQ(self.answer, Answer::Yes);
}

TEST(AreIsomorphic, SymmetricAndReflexive) {
  std::vector<GroupPtr> gs = {quaternion(8), dihedral(8), abelian({2, 4}), abelian({2, 2, 2}), cyclic(8),
                              symmetric(3), cyclic(6), group_from_descriptor("cyclic:2*cyclic:4")};
  for (std::size_t i = 0; i < gs.size(); ++i) {
    for (std::size_t j = 0; j < gs.size(); ++j) {
      const auto ab = are_isomorphic(gs[i], gs[j]);
      const auto ba = are_isomorphic(gs[j], gs[i]);
      EXPECT_EQ(ab.answer, ba.answer) << i << " " << j;
      if (ab.answer == Answer::Yes) {
        EXPECT_TRUE(verify_explicit_iso(*ab.iso).holds());
        EXPECT_EQ(fingerprint(gs[i]), fingerprint(gs[j]));
      }
    }
  }
  EXPECT_EQ(are_isomorphic(gs[2], gs[7]).answer, Answer::Yes);
  EXPECT_EQ(are_isomorphic(gs[4], gs[2]).answer, Answer::No);
}

TEST(AreIsomorphic, UnknownAboveCap) {
  Budgets b;
  b.iso_search_cap = 10;
  const auto v = are_isomorphic(abelian({4, 4}), group_from_descriptor("cyclic:4*cyclic:4"), b);
  EXPECT_EQ(v.answer, Answer::Unknown);
}

TEST(ExplicitIso, RankTwoMap) {
  using Case = std::pair<std::int64_t, std::int64_t>;
  const auto verifies = [](Case c, Rank2Form form) {
    const auto g = abelian({c.first, c.second});
    const auto t = tau_of(g);
    const auto k = ktilde_abelian(g, 3);
    const GeneratorMap gm = rank2_map(t, k, form);
    return verify_explicit_iso(t, k, gm.xs, gm.ys).holds();
  };
  for (Case c : std::vector<Case>{{4, 2}, {4, 4}, {8, 2}, {25, 5}, {2, 2}, {5, 5}, {7, 7}, {49, 7}, {16, 4}}) {
    SCOPED_TRACE(::testing::Message() << c.first << "," << c.second);
    EXPECT_TRUE(verifies(c, Rank2Form::Symmetric));
    EXPECT_EQ(verifies(c, Rank2Form::Paper), 4 % c.second == 0);
  }
  for (Case c : std::vector<Case>{{3, 3}, {9, 3}}) {
    EXPECT_FALSE(verifies(c, Rank2Form::Symmetric));
    EXPECT_FALSE(verifies(c, Rank2Form::Paper));
  }
}

TEST(ExplicitIso, PsiOnElementaryWedges) {
  for (const auto& f : std::vector<std::vector<std::int64_t>>{{2}, {2, 2}, {2, 2, 2}, {4, 2}, {8, 2}, {4, 2, 2}}) {
    const auto g = abelian(f);
    SCOPED_TRACE(g->describe());
    const auto t = tau_of(g);
    const auto k = ktilde_abelian(g, 3);
    const auto r = verify_explicit_iso(tabulate(psi_map(t, k)));
    EXPECT_TRUE(r.holds()) << r.failure;
  }
}

TEST(ExplicitIso, PsiDefectOnC4Cubed) {
  const auto g = abelian({4, 4, 4});
  const auto t = tau_of(g);
  const auto k = ktilde_abelian(g, 3);
  const Morphism psi = psi_map(t, k);
  EXPECT_FALSE(verify_explicit_iso(psi).morphism);
  const AbelianBasis basis = abelian_basis(g);
  const auto& xs = basis.basis();
  const WedgeStructure& w = k->wedge();
  std::mt19937 rng(5);
  int nonzero = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const Elem x = static_cast<Elem>(rng() % t->order()), y = static_cast<Elem>(rng() % t->order());
    const Elem lhs = k->mul(psi(x), psi(y));
    const Elem rhs = psi(t->mul(x, y));
    const Elem defect = k->mul(k->inv(rhs), lhs);
    Elem comps[2], tail;
    k->decode(defect, comps, &tail);
    ASSERT_EQ(comps[0], kIdentity);
    ASSERT_EQ(comps[1], kIdentity);
    Elem xc[2], yc[2], ct;
    t->decode(x, xc, &ct);
    t->decode(y, yc, &ct);
    const auto a = basis.coords(xc[0]), b = basis.coords(xc[1]), d = basis.coords(yc[0]), e = basis.coords(yc[1]);
    Elem expect = kIdentity;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        expect = w.w->mul(expect, w.w->pow(w.pair(xs[i], xs[j]), -2 * (b[j] * e[i] + a[j] * d[i])));
      }
    }
    ASSERT_EQ(tail, expect);
    nonzero += tail != kIdentity;
  }
  EXPECT_GT(nonzero, 0);
}

TEST(HolderIsomorphism, TauVersusKAgreesWithAI) {
  int positive = 0, negative = 0;
  for (std::int64_t m = 3; m <= 50; m += 2) {
    for (std::int64_t n = 2; n * m <= 100; ++n) {
      for (std::int64_t r = 2; r < m; ++r) {
        try {
          check_holder_parameters(n, m, r);
        } catch (const ParameterViolation&) {
          continue;
        }
        SCOPED_TRACE(::testing::Message() << n << "," << m << "," << r);
        const auto g = holder(n, m, r);
        const auto t = tau_of(g);
        const auto k = k_group(g, 3);
        const auto ai = has_ai(g, AutSearchBudget::from(Budgets::defaults()));
        ASSERT_NE(ai.answer, Answer::Unknown);
        if (ai.answer == Answer::Yes) {
          const auto e = epi2_isomorphism(schur_cover(g), *ai.witness);
          EXPECT_TRUE(is_bijective(e.map));
          ++positive;
        } else {
          EXPECT_FALSE(derived_action(t).same_invariants(derived_action(k)));
          EXPECT_FALSE(derived_action(t).all_in_sl);
          EXPECT_TRUE(derived_action(k).all_in_sl);
          ++negative;
        }
      }
    }
  }
  EXPECT_GT(positive, 5);
  EXPECT_GT(negative, 3);
}
