#include <gtest/gtest.h>

#include "support.hpp"
#include "wedgelab/constructors.hpp"
#include "wedgelab/errors.hpp"
#include "wedgelab/presentation.hpp"
#include "wedgelab/subgroup.hpp"

using namespace wedgelab;

namespace {

std::size_t realized_order(const std::string& text, CosetStrategy s = CosetStrategy::HLT) {
  EnumerationOptions o;
  o.strategy = s;
  return realize(parse_presentation(text), o)->order();
}

}  // namespace

TEST(Words, FreeReduction) {
  const Word a = Word::generator(0), b = Word::generator(1);
  EXPECT_TRUE((a * a.inverse()).empty());
  EXPECT_EQ((a * b * b.inverse() * a).length(), 2u);
  EXPECT_EQ(a.pow(-3), a.inverse().pow(3));
  EXPECT_EQ(commutator(a, b).length(), 4u);
  EXPECT_EQ(a.conjugate_by(b), b.inverse() * a * b);
}

TEST(Parser, Syntax) {
  const auto p = parse_presentation("gens: a b; rels: a^4, b^2 = a^2, a^b = a^-1");
  ASSERT_EQ(p.num_generators(), 2u);
  ASSERT_EQ(p.relators.size(), 3u);
  EXPECT_EQ(realize(p)->order(), 8u);
  EXPECT_EQ(parse_presentation("gens: x y\nrels: [x,y], x^3, (x y)^2").relators.size(), 3u);
  EXPECT_THROW(parse_presentation("gens: a; rels: b"), ParseError);
  EXPECT_THROW(parse_presentation("gens: a a; rels: a"), ParseError);
  EXPECT_THROW(parse_presentation("gens: a; rels: a^"), ParseError);
  EXPECT_THROW(parse_presentation("gens: a; rels: (a"), ParseError);
}

TEST(ToddCoxeter, SmallGroups) {
  EXPECT_EQ(realized_order("gens: a b; rels: a^2, b^3, (a b)^2"), 6u);
  EXPECT_EQ(realized_order("gens: a b; rels: a^4, b^2 = a^2, a^b = a^-1"), 8u);
  EXPECT_EQ(realized_order("gens: a b; rels: a^2, b^3, (a b)^3"), 12u);
  EXPECT_EQ(realized_order("gens: a b; rels: a^2, b^3, (a b)^4"), 24u);
  EXPECT_EQ(realized_order("gens: a b; rels: a^2, b^3, (a b)^5"), 60u);
  EXPECT_EQ(realized_order("gens: a b; rels: a^2, b^3, (a b)^5", CosetStrategy::Felsch), 60u);
  EXPECT_EQ(realized_order("gens: a; rels: a"), 1u);
  EXPECT_EQ(realized_order("gens: a b; rels: a^3, b^3, [a,b]"), 9u);
}

TEST(ToddCoxeter, SubgroupIndex) {
  const auto p = parse_presentation("gens: a b; rels: a^2, b^3, (a b)^4");
  const std::vector<Word> h{Word::generator(1)};
  const auto t = todd_coxeter(p, h, 10000);
  ASSERT_TRUE(t.complete());
  EXPECT_EQ(t.index(), 8u);
}

TEST(ToddCoxeter, OverflowIsReported) {
  const auto p = parse_presentation("gens: a b; rels: a^2, b^3");  // infinite
  const auto t = todd_coxeter(p, {}, 2000);
  EXPECT_FALSE(t.complete());
  EXPECT_THROW(realize(p, 2000), BudgetExceeded);
}

TEST(ToddCoxeter, RealizationSatisfiesRelators) {
  for (const auto& p : {holder_presentation(4, 5, 3), dihedral_presentation(6), quaternion_presentation(3),
                        extraspecial_presentation(3, 1), symmetric_cover_presentation(4)}) {
    const auto g = realize(p);
    EXPECT_TRUE(verify_relator_images(p, *g, g->generators()));
    EXPECT_TRUE(check_group_axioms(*g));
  }
}

TEST(ToddCoxeter, FamilyOrders) {
  EXPECT_EQ(realize(holder_presentation(4, 5, 3))->order(), 20u);
  EXPECT_EQ(realize(quaternion_presentation(2))->order(), 8u);
  EXPECT_EQ(realize(symmetric_cover_presentation(4))->order(), 48u);
  EXPECT_EQ(realize(symmetric_cover_presentation(5))->order(), 240u);
  EXPECT_EQ(realize(extraspecial_cover_presentation(3))->order(), 243u);
  EXPECT_EQ(realize(extraspecial_presentation(3, 2))->order(), 243u);
}

TEST(ToddCoxeter, StrategiesAgree) {
  for (const auto& p : {symmetric_cover_presentation(4), extraspecial_cover_presentation(3), holder_presentation(6, 7, 3)}) {
    EnumerationOptions h, f;
    f.strategy = CosetStrategy::Felsch;
    const auto gh = realize(p, h), gf = realize(p, f);
    ASSERT_EQ(gh->order(), gf->order());
    const auto th = support::table_of(*gh), tf = support::table_of(*gf);
    EXPECT_EQ(th.order_profile(), tf.order_profile());
  }
}

TEST(ToddCoxeter, CosetsWithLookahead) {
  // A small coset cap forces lookahead and compaction without changing the answer.
  EnumerationOptions o;
  o.max_cosets = 200;
  EXPECT_EQ(realize(symmetric_cover_presentation(4), o)->order(), 48u);
}

TEST(Presentations, RedundantGeneratorElimination) {
  const auto p = parse_presentation("gens: a b c d; rels: c = a, d, a^5, b^2, a^b = a^-1");
  std::vector<Word> sub;
  const auto q = eliminate_redundant_generators(p, &sub);
  EXPECT_EQ(q.num_generators(), 2u);
  ASSERT_EQ(sub.size(), 4u);
  EXPECT_TRUE(sub[3].empty());
  const auto g = realize(p);
  EXPECT_EQ(g->order(), 10u);
  EXPECT_EQ(g->generators()[2], g->generators()[0]);
  EXPECT_EQ(g->generators()[3], kIdentity);
}

TEST(Presentations, AiClosureOfHolder) {
  // Adding the inverted relators to <a, b | b^4, a^5, a^b = a^3> forces a = 1.
  const auto closed = ai_closure(holder_presentation(4, 5, 3));
  EXPECT_EQ(realize(closed)->order(), 4u);
  // Abelian presentations are already closed.
  const auto ab = ai_closure(parse_presentation("gens: a b; rels: a^4, b^6, [a,b]"));
  EXPECT_EQ(realize(ab)->order(), 24u);
}

TEST(Presentations, Evaluate) {
  const auto g = symmetric(3);
  const auto p = parse_presentation("gens: s t; rels: s^2, t^2, (s t)^3");
  EXPECT_TRUE(verify_relator_images(p, *g, g->generators()));
  const std::vector<Elem> bad{g->generators()[0], g->generators()[0]};
  EXPECT_TRUE(verify_relator_images(p, *g, bad));  // (s s)^3 = 1 holds trivially
  EXPECT_EQ(evaluate(Word::generator(0, 2), *g, g->generators()), kIdentity);
}
