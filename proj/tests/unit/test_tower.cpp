#include <gtest/gtest.h>

#include "gf2_enumeration.hpp"
#include "groups_corpus.hpp"
#include "modrep/error.hpp"
#include "modrep/linalg.hpp"
#include "modrep/tower.hpp"

using namespace modrep;
using namespace modrep::testing;

namespace {

// dim U_N from the span of (rho(n) - 1) over every element of N.
std::size_t coinvariant_dim_oracle(const Module& u, const Subgroup& n) {
  std::vector<Matrix> cols;
  for (auto x : n.members()) cols.push_back(u.rho(x) - Matrix::identity(u.field(), u.dim()));
  return u.dim() - rank(hstack(cols, u.field(), u.dim()));
}

Subgroup order_subgroup(const GroupPtr& g, std::size_t order) {
  for (const auto& s : all_subgroups(g))
    if (s.order() == order) return s;
  return whole_group(g);
}

Module companion_c3(const GroupPtr& c3, const FieldPtr& f) {
  return Module::from_generators(c3, f, 2, {Matrix::from_rows(f, {{0, 1}, {1, 1}})});
}

// The 4-dimensional C2xC2-module with End/Rad = GF(4): a -> [[1,0],[1,1]],
// b -> [[1,0],[C,1]] with C the companion matrix of x^2+x+1.
Module kronecker_module(const GroupPtr& v4, const FieldPtr& f) {
  Matrix a = Matrix::identity(f, 4), b = Matrix::identity(f, 4);
  a(2, 0) = a(3, 1) = 1;
  b(2, 1) = b(3, 0) = b(3, 1) = 1;
  return Module::from_generators(v4, f, 4, {a, b});
}

GroupPtr c2_with_two_generators() { return make_group(2, {"()", "(1 2)"}); }

}  // namespace

TEST(Tower, RejectsMismatchedMaps) {
  auto c2 = cyclic(2), c4 = cyclic(4);
  auto m = QuotientMap::from_generator_images(c4, c2, c2->generator_indices());
  EXPECT_NO_THROW(Tower({c2, c4}, {m}));
  EXPECT_THROW(Tower({c4, c2}, {m}), Error);
  EXPECT_THROW(Tower({c2, c4}, {}), Error);
}

TEST(ModuleTower, Examples) {
  auto t = cyclic_tower(2, 3);
  auto f = FiniteField::make(2);
  auto triv = build_module_tower(t, trivial_module(t.level(2), f));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(triv.levels[i], trivial_module(t.level(i), f));
  for (const auto& p : triv.projections) EXPECT_TRUE(p.is_identity());

  auto reg = build_module_tower(t, regular_module(t.level(2), f));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(iso_test(reg.levels[i], regular_module(t.level(i), f)).has_value());

  auto zero = build_module_tower(t, zero_module(t.level(2), f));
  for (const auto& u : zero.levels) EXPECT_EQ(u.dim(), 0u);

  EXPECT_THROW(build_module_tower(t, trivial_module(t.level(1), f)), Error);
}

TEST(ModuleTower, DimensionsMatchOracle) {
  auto t = dihedral_tower(3, 3);
  auto f = FiniteField::make(3);
  auto top = t.level(2);
  for (const auto& h : all_subgroups(top)) {
    auto u = permutation_module(h, f);
    auto mt = build_module_tower(t, u);
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_EQ(mt.levels[i].dim(), coinvariant_dim_oracle(u, t.from_top(i).kernel()));
      if (i < 2) EXPECT_EQ(rank(mt.projections[i]), mt.levels[i].dim());
    }
  }
}

TEST(Stabilization, Examples) {
  auto f2 = FiniteField::make(2);
  auto t = cyclic_tower(2, 4);
  auto reg = stabilization_report(build_module_tower(t, regular_module(t.level(3), f2)));
  for (const auto& l : reg.levels) EXPECT_EQ(l.summand_count, 1u);
  EXPECT_EQ(reg.stabilization_level, 0u);

  auto tt = direct_sum(trivial_module(t.level(3), f2), trivial_module(t.level(3), f2));
  auto two = stabilization_report(build_module_tower(t, tt));
  for (const auto& l : two.levels) EXPECT_EQ(l.summand_count, 2u);

  auto f3 = FiniteField::make(3);
  auto d = dihedral_tower(3, 2);
  auto qt = generator_tower({c2_with_two_generators(), d.level(0), d.level(1)});
  auto rot = order_subgroup(qt.level(2), 9);
  auto perm = stabilization_report(build_module_tower(qt, permutation_module(rot, f3)));
  for (const auto& l : perm.levels) EXPECT_EQ(l.summand_count, 2u);
  EXPECT_EQ(perm.stabilization_level, 0u);
}

TEST(Stabilization, StabilizationLevelIsFirstConstantIndex) {
  // A4 over GF(2) on the tower C3 <- A4 (kernel V4): k + (2-dim simple with
  // End GF(4)) at the bottom, their projective covers on top.
  auto f2 = FiniteField::make(2);
  auto a4 = alternating4();
  auto c3 = make_group(3, {"(1 2 3)", "()"});
  auto t = generator_tower({c3, a4});
  auto r = stabilization_report(build_module_tower(t, regular_module(a4, f2)));
  EXPECT_EQ(r.levels[0].summand_count, 2u);
  EXPECT_EQ(r.levels[1].summand_count, 2u);
  EXPECT_EQ(r.levels[0].field_degrees, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(r.stabilization_level, 0u);
}

TEST(Stabilization, MonotonicityTrap) {
  auto t = cyclic_tower(2, 2);
  auto f2 = FiniteField::make(2);
  ModuleTower bad{t,
                  {regular_module(t.level(0), f2),
                   direct_sum(trivial_module(t.level(1), f2), trivial_module(t.level(1), f2))},
                  {Matrix::identity(f2, 2)},
                  {Matrix::identity(f2, 2)}};
  try {
    stabilization_report(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::MonotonicityViolated);
  }
}

TEST(LevelwiseRelProj, Examples) {
  auto f2 = FiniteField::make(2);
  auto t = cyclic_tower(2, 3);
  auto reg = build_module_tower(t, regular_module(t.level(2), f2));
  auto triv = build_module_tower(t, trivial_module(t.level(2), f2));
  std::vector<Subgroup> whole, one;
  for (const auto& g : t.levels()) {
    whole.push_back(whole_group(g));
    one.push_back(trivial_subgroup(g));
  }
  auto a = levelwise_relproj(triv, whole);
  EXPECT_TRUE(a.uniform);
  EXPECT_EQ(a.verdicts, (std::vector<bool>{true, true, true}));
  EXPECT_EQ(levelwise_relproj(reg, one).verdicts, (std::vector<bool>{true, true, true}));
  EXPECT_EQ(levelwise_relproj(triv, one).verdicts, (std::vector<bool>{false, false, false}));

  std::vector<Subgroup> bad = one;
  bad[2] = whole_group(t.level(2));
  EXPECT_THROW(levelwise_relproj(triv, bad), Error);
}

TEST(Green, Examples) {
  auto f2 = FiniteField::make(2);
  auto t = cyclic_tower(2, 2);
  auto h = image_tower(t, order_subgroup(t.level(1), 2));
  auto v = trivial_module(standalone(h.back()).group, f2);
  auto r = green_check(t, h, v, true);
  EXPECT_TRUE(r.hypotheses_hold);
  EXPECT_TRUE(r.conclusion_holds);
  EXPECT_EQ(r.summand_counts, (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(r.field_degrees, (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(r.exchange_holds, (std::vector<bool>{true, true}));

  auto d4 = dihedral(4);
  auto reflection = subgroup_generated(d4, {elem(d4, "(2 4)")});
  ASSERT_FALSE(is_normal(reflection));
  auto r2 = green_check(single_level(d4), {reflection}, trivial_module(standalone(reflection).group, f2), true);
  EXPECT_TRUE(r2.conclusion_holds);
}

TEST(Green, NegativeControl) {
  auto f3 = FiniteField::make(3);
  auto s3 = symmetric3();
  auto c3 = subgroup_generated(s3, {elem(s3, "(1 2 3)")});
  auto v = trivial_module(standalone(c3).group, f3);
  auto r = green_check(single_level(s3), {c3}, v);
  EXPECT_FALSE(r.hypotheses_hold);
  EXPECT_NE(r.hypothesis[0].reason.find("index 2"), std::string::npos);
  EXPECT_EQ(r.summand_counts[0], 2u);
  EXPECT_FALSE(r.conclusion_holds);
  try {
    green_check(single_level(s3), {c3}, v, true);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::HypothesisViolated);
  }
}

TEST(SummandsIsomorphic, Examples) {
  auto f2 = FiniteField::make(2);
  auto v4 = klein4();
  auto diag = subgroup_generated(v4, {elem(v4, "(1 4)(2 3)")});
  auto r = summands_isomorphic_check(single_level(v4), {diag}, trivial_module(standalone(diag).group, f2));
  EXPECT_EQ(r.summand_counts[0], 1u);
  EXPECT_TRUE(r.all_isomorphic[0]);

  auto f3 = FiniteField::make(3);
  auto s3 = symmetric3();
  auto c3 = subgroup_generated(s3, {elem(s3, "(1 2 3)")});
  auto neg = summands_isomorphic_check(single_level(s3), {c3}, trivial_module(standalone(c3).group, f3));
  EXPECT_FALSE(neg.hypotheses_hold);
  EXPECT_FALSE(neg.all_isomorphic[0]);
}

TEST(SummandsIsomorphic, NotAbsolutelyIndecomposableSource) {
  auto f2 = FiniteField::make(2);
  auto d4 = dihedral(4);
  Subgroup klein;
  for (const auto& s : all_subgroups(d4))
    if (s.order() == 4 && d4->element_order(s.members().back()) == 2 && d4->element_order(s.members()[1]) == 2)
      klein = s;
  ASSERT_EQ(klein.order(), 4u);
  auto v_here = kronecker_module(standalone(klein).group, f2);
  auto a = is_absolutely_indecomposable(v_here);
  EXPECT_EQ(a.field_degree, 2u);
  auto r = summands_isomorphic_check(single_level(d4), {klein}, v_here);
  EXPECT_TRUE(r.hypotheses_hold);
  EXPECT_TRUE(r.all_isomorphic[0]);
}

TEST(EndTower, Examples) {
  auto f2 = FiniteField::make(2);
  auto t = cyclic_tower(2, 3);
  auto triv = endo_tower(build_module_tower(t, trivial_module(t.level(2), f2)));
  for (const auto& l : triv.levels) {
    EXPECT_EQ(l.dim, 1u);
    EXPECT_EQ(l.radical_dim, 0u);
  }
  auto reg = endo_tower(build_module_tower(t, regular_module(t.level(2), f2)));
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(reg.levels[i].dim, std::size_t{2} << i);
    EXPECT_EQ(reg.levels[i].radical_dim, (std::size_t{2} << i) - 1);
    EXPECT_EQ(reg.levels[i].field_degree, 1u);
  }
  EXPECT_EQ(reg.radical_into_radical, (std::vector<bool>{true, true}));

  auto c3 = cyclic(3);
  auto simple = endo_tower(build_module_tower(single_level(c3), companion_c3(c3, f2)));
  EXPECT_EQ(simple.stabilized_degree, 2u);

  auto tt = direct_sum(trivial_module(t.level(2), f2), trivial_module(t.level(2), f2));
  try {
    endo_tower(build_module_tower(t, tt));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotIndecomposableAtLevel);
  }
}

TEST(LiftSplitting, CompatibleAtEveryLevel) {
  auto f2 = FiniteField::make(2);
  auto t = cyclic_tower(2, 3);
  auto g = t.level(2);
  auto u = build_module_tower(t, regular_module(g, f2));
  auto w = build_module_tower(t, direct_sum(trivial_module(g, f2), regular_module(g, f2)));
  auto s = lift_splitting(u, w);
  ASSERT_EQ(s.levels.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE((s.levels[i].back * s.levels[i].into).is_identity());
  auto tu = build_module_tower(t, trivial_module(g, f2));
  EXPECT_THROW(lift_splitting(tu, u), Error);
}

TEST(CoinvariantLaws, HoldOnTowers) {
  {
    auto f2 = FiniteField::make(2);
    auto t = cyclic_tower(2, 3);
    auto g = t.level(2);
    auto h = order_subgroup(g, 2);
    auto laws = check_coinvariant_laws(t, regular_module(g, f2), permutation_module(order_subgroup(g, 4), f2), h,
                                       trivial_module(standalone(h).group, f2));
    EXPECT_TRUE(laws.all());
  }
  {
    auto f3 = FiniteField::make(3);
    auto t = dihedral_tower(3, 2);
    auto g = t.level(1);
    auto h = order_subgroup(g, 2);
    auto sh = standalone(h);
    auto sign = Module::from_generators(sh.group, f3, 1, {Matrix::from_rows(f3, {{2}})});
    auto laws = check_coinvariant_laws(t, permutation_module(h, f3), regular_module(g, f3), h, sign);
    EXPECT_TRUE(laws.all());
  }
}

TEST(Gf2Enumeration, CountsMatchClassification) {
  // Cyclic 2-groups over GF(2): Jordan blocks of size up to the group order.
  EXPECT_EQ(gf2_representations(cyclic(2), 3).size(), 2u);  // J1^3, J1+J2
  EXPECT_EQ(gf2_representations(cyclic(4), 4).size(), 5u);  // partitions of 4
  EXPECT_EQ(gf2_indecomposables(cyclic(4), 4).size(), 4u);
  EXPECT_EQ(gf2_indecomposables(cyclic(2), 4).size(), 2u);
  // Klein four, dimension 2: k+k and one module per point of P^1(GF(2)).
  EXPECT_EQ(gf2_representations(klein4(), 2).size(), 4u);
  // C3 over GF(2): trivial, and the 2-dimensional simple module.
  EXPECT_EQ(gf2_indecomposables(cyclic(3), 4).size(), 2u);
  for (const auto& m : gf2_indecomposables(klein4(), 4)) EXPECT_TRUE(m.satisfies_axioms());
}
