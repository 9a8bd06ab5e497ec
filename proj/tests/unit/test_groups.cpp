#include <gtest/gtest.h>

#include <set>

#include "groups_corpus.hpp"
#include "modrep/error.hpp"

using namespace modrep;
using namespace modrep::testing;

namespace {

// Every subset closed under multiplication, found by brute force over
// bitmasks. Only for |G| <= 12.
std::vector<std::vector<std::size_t>> subgroups_by_subsets(const GroupPtr& g) {
  const std::size_t n = g->order();
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (!(mask & 1u)) continue;
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a)
      if (mask >> a & 1u)
        for (std::size_t b = 0; b < n && closed; ++b)
          if ((mask >> b & 1u) && !(mask >> g->mul(a, b) & 1u)) closed = false;
    if (!closed) continue;
    std::vector<std::size_t> m;
    for (std::size_t a = 0; a < n; ++a)
      if (mask >> a & 1u) m.push_back(a);
    out.push_back(m);
  }
  return out;
}

bool brute_conjugate(const GroupPtr& g, const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  for (std::size_t x = 0; x < g->order(); ++x) {
    std::set<std::size_t> c;
    for (auto e : a) c.insert(g->mul(g->mul(x, e), g->inv(x)));
    if (std::vector<std::size_t>(c.begin(), c.end()) == b) return true;
  }
  return false;
}

bool is_prime_power(std::size_t n, unsigned p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

TEST(Perm, ParseAndCompose) {
  Perm a = Perm::parse("(1 2 3)", 3);
  Perm b = Perm::parse("(1 2)", 3);
  // left action: (a*b)(x) = a(b(x))
  Perm ab = a * b;
  for (unsigned x = 0; x < 3; ++x) EXPECT_EQ(ab(x), a(b(x)));
  EXPECT_EQ(Perm::parse("()", 4), Perm::identity(4));
  EXPECT_EQ(Perm::parse("(1 3)(2 4)", 4).to_string(), "(1 3)(2 4)");
  EXPECT_EQ((a * a.inverse()), Perm::identity(3));
  EXPECT_THROW(Perm::parse("(1 5)", 4), Error);
  EXPECT_THROW(Perm::parse("(1 1)", 4), Error);
  EXPECT_THROW(Perm::parse("1 2", 4), Error);
}

TEST(Groups, CorpusOrders) {
  std::vector<std::size_t> orders = {2, 4, 8, 4, 8, 8, 6, 12, 9, 18};
  auto corpus = small_corpus();
  for (std::size_t i = 0; i < corpus.size(); ++i) EXPECT_EQ(corpus[i].group->order(), orders[i]) << corpus[i].name;
}

TEST(Groups, ClosureIsAGroup) {
  for (const auto& [name, g] : small_corpus()) {
    for (std::size_t a = 0; a < g->order(); ++a) {
      EXPECT_EQ(g->mul(a, g->inv(a)), PermGroup::identity());
      for (std::size_t b = 0; b < g->order(); ++b)
        EXPECT_EQ(g->element(g->mul(a, b)), g->element(a) * g->element(b)) << name;
    }
    for (std::size_t i = 1; i < g->order(); ++i)
      EXPECT_EQ(g->element(i), g->generators()[g->word_generator(i)] * g->element(g->word_parent(i)));
  }
}

TEST(Groups, GroupTooLarge) {
  EXPECT_THROW(PermGroup::make(8, {Perm::parse("(1 2 3 4 5 6 7 8)", 8), Perm::parse("(1 2)", 8)}, 1000), Error);
}

TEST(Groups, SubgroupGeneratedExamples) {
  auto c4 = cyclic(4);
  EXPECT_TRUE(subgroup_generated(c4, {PermGroup::identity()}).is_trivial());
  auto h = subgroup_generated(c4, {elem(c4, "(1 3)(2 4)")});
  EXPECT_EQ(h.order(), 2u);
  EXPECT_TRUE(h.contains(elem(c4, "(1 3)(2 4)")));
  auto s3 = symmetric3();
  EXPECT_TRUE(subgroup_generated(s3, s3->generator_indices()).is_whole());
  EXPECT_THROW(subgroup_generated(s3, {99}), Error);
}

TEST(Groups, AllSubgroupsMatchesBruteForce) {
  for (const auto& [name, g] : small_corpus()) {
    if (g->order() > 12) continue;
    auto brute = subgroups_by_subsets(g);
    auto got = all_subgroups(g);
    std::set<std::vector<std::size_t>> a(brute.begin(), brute.end()), b;
    for (const auto& s : got) b.insert(s.members());
    EXPECT_EQ(a, b) << name;
    for (const auto& s : got) EXPECT_EQ(g->order() % s.order(), 0u);
  }
}

TEST(Groups, DoubleCosetsPartition) {
  auto s3 = symmetric3();
  auto c3 = subgroup_generated(s3, {elem(s3, "(1 2 3)")});
  EXPECT_EQ(double_cosets(c3, c3).size(), 2u);
  EXPECT_EQ(double_cosets(whole_group(s3), whole_group(s3)), std::vector<std::size_t>{0});
  EXPECT_EQ(double_cosets(trivial_subgroup(s3), trivial_subgroup(s3)).size(), 6u);
  for (const auto& [name, g] : small_corpus()) {
    auto subs = all_subgroups(g);
    for (std::size_t i = 0; i < subs.size(); i += 2)
      for (std::size_t j = 0; j < subs.size(); j += 3) {
        const auto &k = subs[i], &h = subs[j];
        std::vector<int> owner(g->order(), -1);
        auto reps = double_cosets(k, h);
        std::size_t total = 0;
        for (std::size_t r = 0; r < reps.size(); ++r) {
          std::set<std::size_t> dc;
          for (auto x : k.members())
            for (auto y : h.members()) dc.insert(g->mul(g->mul(x, reps[r]), y));
          EXPECT_EQ(*dc.begin(), reps[r]);
          for (auto e : dc) {
            EXPECT_EQ(owner[e], -1);
            owner[e] = static_cast<int>(r);
          }
          total += dc.size();
        }
        EXPECT_EQ(total, g->order()) << name;
      }
  }
  auto other = cyclic(3);
  EXPECT_THROW(double_cosets(c3, whole_group(other)), Error);
}

TEST(Groups, SylowExamplesAndOrders) {
  auto s3 = symmetric3();
  auto p3 = sylow_p(s3, 3);
  EXPECT_EQ(p3, subgroup_generated(s3, {elem(s3, "(1 2 3)")}));
  EXPECT_EQ(sylow_p(s3, 2).order(), 2u);
  EXPECT_TRUE(sylow_p(cyclic(5), 3).is_trivial());
  for (const auto& [name, g] : small_corpus())
    for (unsigned p : {2u, 3u}) {
      std::size_t part = 1;
      while (g->order() % (part * p) == 0) part *= p;
      EXPECT_EQ(sylow_p(g, p).order(), part) << name;
    }
}

TEST(Groups, PSubgroupClassesExamples) {
  auto c4 = p_subgroups_up_to_conjugacy(cyclic(4), 2);
  ASSERT_EQ(c4.size(), 3u);
  EXPECT_EQ(c4[0].order(), 1u);
  EXPECT_EQ(c4[1].order(), 2u);
  EXPECT_EQ(c4[2].order(), 4u);
  EXPECT_EQ(p_subgroups_up_to_conjugacy(symmetric3(), 2).size(), 2u);
  EXPECT_EQ(p_subgroups_up_to_conjugacy(cyclic(9), 2).size(), 1u);
  EXPECT_THROW(p_subgroups_up_to_conjugacy(dihedral(4), 2, 2), Error);
}

TEST(Groups, PSubgroupClassesMatchBruteForce) {
  for (const auto& [name, g] : small_corpus()) {
    for (unsigned p : {2u, 3u}) {
      auto reps = p_subgroups_up_to_conjugacy(g, p);
      for (std::size_t i = 0; i < reps.size(); ++i) {
        if (i) EXPECT_TRUE(reps[i - 1] < reps[i]);
        EXPECT_EQ(canonical_conjugate(reps[i]), reps[i]);
        for (std::size_t j = i + 1; j < reps.size(); ++j)
          EXPECT_FALSE(brute_conjugate(g, reps[i].members(), reps[j].members())) << name;
      }
      if (g->order() > 12) continue;
      for (const auto& s : subgroups_by_subsets(g)) {
        if (!is_prime_power(s.size(), p)) continue;
        int hits = 0;
        for (const auto& r : reps) hits += brute_conjugate(g, s, r.members());
        EXPECT_EQ(hits, 1) << name;
      }
    }
  }
}

TEST(Groups, QuotientExamples) {
  auto c4 = cyclic(4);
  auto half = subgroup_generated(c4, {elem(c4, "(1 3)(2 4)")});
  auto q = quotient(half);
  EXPECT_EQ(q.group->order(), 2u);
  EXPECT_EQ(q.group->degree(), 2u);
  EXPECT_EQ(q.map.kernel(), half);
  auto same = quotient(trivial_subgroup(c4));
  EXPECT_EQ(same.group->order(), 4u);
  auto s3 = symmetric3();
  try {
    quotient(subgroup_generated(s3, {elem(s3, "(1 2)")}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotNormal);
  }
}

TEST(Groups, QuotientIsHomomorphismOnAllPairs) {
  for (const auto& [name, g] : small_corpus()) {
    for (const auto& n : all_subgroups(g)) {
      if (!is_normal(n)) continue;
      auto q = quotient(n);
      EXPECT_EQ(q.group->order() * n.order(), g->order()) << name;
      for (std::size_t a = 0; a < g->order(); ++a)
        for (std::size_t b = 0; b < g->order(); ++b)
          ASSERT_EQ(q.map(g->mul(a, b)), q.group->mul(q.map(a), q.map(b)));
      EXPECT_EQ(q.map.kernel(), n);
    }
  }
}

TEST(Groups, InvalidGeneratorImages) {
  auto c4 = cyclic(4);
  auto c2 = cyclic(2);
  // (1 2 3 4) -> (1 2) is fine, but C2 -> C4 sending the generator to an element of order 4 is not
  EXPECT_NO_THROW(QuotientMap::from_generator_images(c4, c2, {1}));
  EXPECT_THROW(QuotientMap::from_generator_images(c2, c4, {1}), Error);
}

TEST(Groups, NormalizerExamples) {
  auto s3 = symmetric3();
  auto t = subgroup_generated(s3, {elem(s3, "(1 2)")});
  EXPECT_EQ(normalizer(t), t);
  EXPECT_TRUE(normalizer(whole_group(s3)).is_whole());
  auto c4 = cyclic(4);
  for (const auto& h : all_subgroups(c4)) EXPECT_TRUE(normalizer(h).is_whole());
}

TEST(Groups, SubnormalAndConjugacyHelpers) {
  auto d4 = dihedral(4);
  for (const auto& h : all_subgroups(d4)) EXPECT_TRUE(is_subnormal(h));  // 2-groups are nilpotent
  auto s3 = symmetric3();
  auto t = subgroup_generated(s3, {elem(s3, "(1 2)")});
  EXPECT_FALSE(is_subnormal(t));
  auto a4 = alternating4();
  auto v = subgroup_generated(a4, {elem(a4, "(1 2)(3 4)"), elem(a4, "(1 3)(2 4)")});
  auto small = subgroup_generated(a4, {elem(a4, "(1 2)(3 4)")});
  EXPECT_TRUE(is_subnormal(small));
  EXPECT_FALSE(is_normal(small));
  auto t2 = subgroup_generated(s3, {elem(s3, "(1 3)")});
  auto x = conjugating_element(t, t2);
  ASSERT_TRUE(x);
  EXPECT_EQ(conjugate(t, *x), t2);
  EXPECT_TRUE(contained_up_to_conjugacy(t, whole_group(s3)));
  (void)v;
}

TEST(Groups, StandaloneSubgroup) {
  auto d4 = dihedral(4);
  for (const auto& h : all_subgroups(d4)) {
    auto s = standalone(h);
    EXPECT_EQ(s.group->order(), h.order());
    for (std::size_t a = 0; a < s.group->order(); ++a)
      for (std::size_t b = 0; b < s.group->order(); ++b)
        EXPECT_EQ(s.to_parent[s.group->mul(a, b)], d4->mul(s.to_parent[a], s.to_parent[b]));
  }
}

TEST(Groups, TransversalsCoverCosets) {
  auto a4 = alternating4();
  for (const auto& h : all_subgroups(a4)) {
    auto lo = left_transversal(h), hi = left_transversal_greatest(h);
    ASSERT_EQ(lo.size(), a4->order() / h.order());
    auto label = left_coset_labels(h);
    for (std::size_t i = 0; i < lo.size(); ++i) {
      EXPECT_EQ(label[lo[i]], i);
      EXPECT_EQ(label[hi[i]], i);
      EXPECT_LE(lo[i], hi[i]);
    }
  }
}
