#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace harmcov;
using namespace harmcov::testing;

TEST(Group, Builtins) {
  FiniteGroup g = s3();
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.names(), (std::vector<std::string>{"e", "σ", "τ", "σ^2", "στ", "τσ"}));
  const Element s = el(g, "σ"), t = el(g, "τ");
  EXPECT_EQ(g.element_order(s), 3);
  EXPECT_TRUE(g.is_involution(t));
  EXPECT_EQ(g.inv(s), el(g, "σ^2"));
  EXPECT_EQ(g.mul(s, t), el(g, "στ"));
  EXPECT_EQ(g.mul(t, s), el(g, "τσ"));
  // τστ = σ^-1
  EXPECT_EQ(g.conj(t, s), g.inv(s));

  EXPECT_EQ(FiniteGroup::cyclic(6).order(), 6);
  EXPECT_EQ(FiniteGroup::dihedral(4).order(), 8);
  EXPECT_EQ(FiniteGroup::symmetric(4).order(), 24);
  EXPECT_EQ(FiniteGroup().order(), 1);
  EXPECT_EQ(FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)).order(), 6);
}

TEST(Group, FromTableValidates) {
  EXPECT_NO_THROW(FiniteGroup::from_table({{0, 1}, {1, 0}}));
  EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {1, 1}}), Error);
  EXPECT_THROW(FiniteGroup::from_table({{1, 0}, {0, 1}}), Error);  // identity must be element 0
  // Latin square that is not associative.
  std::vector<std::vector<int>> t{{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  EXPECT_THROW(FiniteGroup::from_table(t), Error);
}

TEST(Group, FromPermutations) {
  EXPECT_EQ(FiniteGroup::from_permutations({}).order(), 1);
  FiniteGroup s = FiniteGroup::from_permutations({{1, 2, 0}, {1, 0, 2}});
  EXPECT_EQ(s.order(), 6);
  int involutions = 0;
  for (Element a = 0; a < 6; ++a) involutions += s.is_involution(a);
  EXPECT_EQ(involutions, 3);
  FiniteGroup z = FiniteGroup::from_permutations({{1, 2, 3, 4, 5, 0}});
  EXPECT_EQ(z.order(), 6);
  EXPECT_EQ(z.element_order(1), 6);
}

TEST(Group, GeneratedSubgroups) {
  FiniteGroup g = s3();
  EXPECT_TRUE(subgroup_generated(g, {}).is_trivial());
  Subgroup t = subgroup_generated(g, {el(g, "τ")});
  EXPECT_EQ(t.order(), 2);
  EXPECT_EQ(t.index(), 3);
  EXPECT_TRUE(subgroup_generated(g, {el(g, "σ"), el(g, "τ")}).is_whole());
  EXPECT_THROW(Subgroup(g, {0, el(g, "σ")}), Error);
  EXPECT_THROW(Subgroup(g, {el(g, "τ")}), Error);
}

TEST(Group, SubgroupCountsMatchEnumeration) {
  std::map<std::string, int> known{{"Z6", 4}, {"S3", 6}, {"D4", 10}, {"Q8", 6}, {"A4", 10}, {"Z2xZ2", 5},
                                   {"Z12", 6}, {"D6", 16}, {"Z8", 4}};
  for (const NamedGroup& ng : small_groups()) {
    const auto all = all_subgroups(ng.group);
    EXPECT_EQ(all.size(), oracle::subgroups(ng.group).size()) << ng.name;
    if (known.count(ng.name)) EXPECT_EQ(static_cast<int>(all.size()), known[ng.name]) << ng.name;
  }
}

TEST(Group, Cosets) {
  FiniteGroup g = s3();
  Subgroup t = subgroup_generated(g, {el(g, "τ")});
  auto cosets = left_cosets(t);
  ASSERT_EQ(cosets.size(), 3u);
  for (const auto& c : cosets) {
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(g.mul(c[0], el(g, "τ")), c[1]) << "coset not of the form {x, xτ}";
  }
}

TEST(Group, DoubleCosets) {
  FiniteGroup g = s3();
  EXPECT_EQ(double_cosets(Subgroup::whole(g)).size(), 1u);
  EXPECT_EQ(double_cosets(Subgroup::trivial(g)).size(), 6u);

  // <τ>\S3/<τ>: {e, τ} and one block holding σ, σ^2, στ, τσ. The blocks of
  // σ and σ^2 coincide, so the block is its own inverse.
  Subgroup t = subgroup_generated(g, {el(g, "τ")});
  std::vector<DoubleCoset> dc = double_cosets(t);
  ASSERT_EQ(dc.size(), 2u);
  EXPECT_EQ(dc[0].elements, oracle::double_coset(g, t.elements(), 0));
  EXPECT_EQ(dc[1].elements, oracle::double_coset(g, t.elements(), el(g, "σ")));
  EXPECT_EQ(dc[1].elements, oracle::double_coset(g, t.elements(), el(g, "σ^2")));
  EXPECT_EQ(dc[1].representative, el(g, "σ"));
  EXPECT_TRUE(dc[1].self_inverse);
  EXPECT_EQ(dc[1].inverse_block, 1);

  // Every group and subgroup: blocks partition G and agree with enumeration.
  for (const NamedGroup& ng : small_groups()) {
    for (const Subgroup& i : all_subgroups(ng.group)) {
      std::vector<int> seen(ng.group.order(), 0);
      for (const DoubleCoset& b : double_cosets(i)) {
        EXPECT_EQ(b.elements, oracle::double_coset(ng.group, i.elements(), b.representative));
        EXPECT_EQ(b.representative, b.elements.front());
        for (Element a : b.elements) ++seen[a];
        const auto inv_block = oracle::double_coset(ng.group, i.elements(), ng.group.inv(b.representative));
        EXPECT_EQ(b.self_inverse, inv_block == b.elements);
      }
      EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; })) << ng.name;
    }
  }
}

TEST(Group, Homomorphisms) {
  FiniteGroup z4 = FiniteGroup::cyclic(4), z2 = FiniteGroup::cyclic(2);
  GroupHom rho(z4, z2, {0, 1, 0, 1});
  EXPECT_EQ(rho.kernel().order(), 2);
  EXPECT_TRUE(rho.is_surjective());
  EXPECT_FALSE(rho.is_injective());
  EXPECT_EQ(*rho.smallest_preimage(1), 1);
  EXPECT_THROW(GroupHom(z4, z2, {0, 1, 1, 1}), Error);

  FiniteGroup g = s3();
  GroupHom id = GroupHom::identity(g);
  EXPECT_TRUE(id.kernel().is_trivial());
  EXPECT_TRUE(id.is_surjective());
  Subgroup t = subgroup_generated(g, {el(g, "τ")});
  EXPECT_EQ(id.preimage(t), t);
  EXPECT_EQ(compose(id, id), id);
}

TEST(Group, SymmetricMultisets) {
  FiniteGroup g = s3();
  const Element s = el(g, "σ"), s2 = el(g, "σ^2"), t = el(g, "τ");
  SymmetricMultiset m(g);
  m.add_unit(s2);  // named by min(σ, σ^2) = σ
  m.add_unit(t);
  EXPECT_EQ(m.units(), (std::vector<Element>{s, t}));
  EXPECT_EQ(m.size(), 3);
  EXPECT_EQ(m.multiplicity(s), 1);
  EXPECT_EQ(m.multiplicity(s2), 1);
  EXPECT_EQ(m, SymmetricMultiset::from_elements(g, {s, s2, t}));
  EXPECT_THROW(SymmetricMultiset::from_elements(g, {s}), Error);
  EXPECT_THROW(SymmetricMultiset::from_elements(g, {0}), Error);
  EXPECT_THROW(m.add_unit(0), Error);
  // Conjugating by τ swaps σ and σ^2, so the pair unit is stable.
  EXPECT_EQ(m.conjugated(t), m);
  SymmetricMultiset c = m.conjugated(s);
  EXPECT_EQ(c.multiplicity(t), 0);
  EXPECT_EQ(c.size(), 3);
}
