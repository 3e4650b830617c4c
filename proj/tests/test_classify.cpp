#include <gtest/gtest.h>

#include "support/family.hpp"
#include "zelevinsky/classify.hpp"

using namespace zelevinsky;
using zelevinsky::testing::chr;
using zelevinsky::testing::chr_ms;

namespace {
Exponent half(int h) { return Exponent::from_halves(h); }
Segment chr_half(int a2, int b2) { return Segment(character_line(), half(a2), half(b2)); }
}  // namespace

TEST(Generic, Examples) {
    EXPECT_FALSE(is_generic_St(chr_ms({{0, 1}, {2, 3}})));
    EXPECT_TRUE(is_generic_St(chr_ms({{0, 2}, {1, 1}})));
    EXPECT_TRUE(is_generic_St(chr_ms({{0, 4}})));
    EXPECT_TRUE(is_generic_St(Multisegment()));
}

TEST(Projectivity, Examples) {
    EXPECT_TRUE(is_relatively_projective(chr_ms({{0, 4}})));
    const Line r1{"rho1", 2}, r2{"rho2", 2}, r3{"rho3", 3};
    EXPECT_TRUE(is_relatively_projective(Multisegment{Segment(r1, 0), Segment(r2, 0)}));
    EXPECT_FALSE(is_relatively_projective(chr_ms({{0, 0}, {1, 1}})));
    EXPECT_FALSE(is_relatively_projective(chr_ms({{0, 1}, {1, 2}})));
    EXPECT_FALSE(is_relatively_projective(Multisegment{Segment(r1, 0), Segment(r3, 0)}));
    EXPECT_FALSE(is_relatively_projective(chr_ms({{0, 2}, {4, 4}, {6, 6}})));
    EXPECT_TRUE(is_relatively_projective(chr_ms({{0, 0}, {3, 3}})));
    EXPECT_TRUE(is_relatively_projective(chr_ms({{0, 0}, {0, 0}})));
    EXPECT_FALSE(is_relatively_projective(Multisegment()));
}

TEST(OneDimensional, Examples) {
    EXPECT_TRUE(is_one_dimensional(Multisegment{chr_half(-1, 1)}));
    EXPECT_FALSE(is_one_dimensional(Multisegment{Segment(Line{"rho", 3}, 0)}));
    EXPECT_FALSE(is_one_dimensional(chr_ms({{0, 0}, {1, 1}})));
}

TEST(HomOpposite, Examples) {
    EXPECT_TRUE(hom_opposite_nonzero(chr_ms({{-1, 1}}), Multisegment{chr_half(-1, 1)}));
    EXPECT_FALSE(hom_opposite_nonzero(chr_ms({{-1, 1}}), chr_ms({{0, 1}})));
    EXPECT_FALSE(hom_opposite_nonzero(chr_ms({{0, 1}, {2, 2}}), chr_ms({{0, 1}})));
    EXPECT_THROW(hom_opposite_nonzero(chr_ms({{-1, 1}}), chr_ms({{0, 0}})), DegreeMismatch);
}

TEST(GenericHom, Examples) {
    EXPECT_TRUE(generic_hom_necessary(chr_ms({{0, 1}, {3, 3}})));
    EXPECT_FALSE(generic_hom_necessary(chr_ms({{0, 2}})));
    EXPECT_TRUE(generic_hom_necessary(Multisegment()));
}

TEST(Components, RestrictionSpec) {
    const auto spec = restriction_components(chr_ms({{0, 1}}));
    EXPECT_EQ(spec.ambient, 1);
    EXPECT_EQ(spec.free_budget, 0);
    EXPECT_EQ(spec.mandatory, (InertialMultiset{{{"chr", 1}, 1}}));

    const Line rho{"rho", 2};
    const auto mixed = restriction_components(Multisegment{Segment(rho, 0, 1), chr(0, 1)});
    EXPECT_EQ(mixed.ambient, 5);
    EXPECT_EQ(mixed.free_budget, 2);
    EXPECT_EQ(mixed.mandatory, (InertialMultiset{{{"chr", 1}, 1}, {{"rho", 2}, 1}}));
    EXPECT_THROW(restriction_components(Multisegment()), std::invalid_argument);
}

TEST(Components, Nonvanishing) {
    ComponentSpec spec{{{{"chr", 1}, 1}}, 1, 2};
    EXPECT_TRUE(component_nonzero(spec, {{{"chr", 1}, 2}}));
    EXPECT_FALSE(component_nonzero(spec, {{{"rho", 2}, 1}}));
    ComponentSpec free{{}, 2, 2};
    EXPECT_TRUE(component_nonzero(free, {{{"rho", 2}, 1}}));
    EXPECT_TRUE(component_nonzero(free, {{{"chr", 1}, 2}}));
    EXPECT_THROW(component_nonzero(free, {{{"chr", 1}, 3}}), std::invalid_argument);
}

TEST(Asymmetry, LevelCase) {
    const auto r = asymmetry_check(chr_ms({{0, 1}}), 1);
    EXPECT_EQ(r.verdict, Verdict::LevelCase);
    ASSERT_EQ(r.naive_pairs.size(), 1u);
    EXPECT_EQ(r.naive_pairs[0].right_result, chr_ms({{0, 0}}));
    EXPECT_EQ(shift(r.naive_pairs[0].right_result, 1), chr_ms({{1, 1}}));
}

TEST(Asymmetry, SpehPrefixEliminatesTopTruncation) {
    const auto r = asymmetry_check(chr_ms({{0, 0}, {1, 1}}), 1);
    EXPECT_EQ(r.verdict, Verdict::CertifiedDisjoint);
    ASSERT_EQ(r.naive_pairs.size(), 1u);
    const auto& p = r.naive_pairs[0];
    EXPECT_EQ(p.right_result, chr_ms({{0, 0}}));
    EXPECT_EQ(p.left_result, chr_ms({{1, 1}}));
    EXPECT_TRUE(p.right.truncates(0));  // the top member [1,1]
    EXPECT_EQ(p.eliminated_by, Obstruction::SpehPrefix);
}

TEST(Asymmetry, NoNaivePairs) {
    const auto r = asymmetry_check(chr_ms({{0, 0}, {2, 2}}), 1);
    EXPECT_EQ(r.verdict, Verdict::CertifiedDisjoint);
    EXPECT_TRUE(r.naive_pairs.empty());
}

TEST(Asymmetry, CountEvidenceDirect) {
    // blocks {[1,1]} and {[0,1]}; only the second has relative length 2 and the right side leaves it whole
    const auto component = chr_ms({{0, 1}, {1, 1}});
    const auto ev = count_obstruction(component, chr_ms({{0, 1}}), chr_ms({{1, 1}, {1, 1}}), 2);
    ASSERT_TRUE(ev);
    EXPECT_EQ(ev->L, 2);
    EXPECT_EQ(ev->delta_star, chr(0, 1));
    EXPECT_EQ(ev->special_count, 0);
    EXPECT_EQ(ev->right_count, 1);
    EXPECT_EQ(ev->left_count, 0);
}

TEST(Asymmetry, CountEvidenceMirrored) {
    // the left side leaves the length-2 block whole first, so the comparison runs on the reflection
    const auto component = chr_ms({{0, 1}, {1, 1}});
    const auto ev = count_obstruction(component, chr_ms({{1, 1}, {0, 0}}), chr_ms({{0, 1}}), 2);
    ASSERT_TRUE(ev);
    EXPECT_TRUE(ev->mirrored);
    EXPECT_EQ(ev->delta_star, chr(-1, 0));
    EXPECT_EQ(ev->right_count, 1);
    EXPECT_EQ(ev->left_count, 0);
    EXPECT_EQ(ev->special_count, 0);
    // not a naive pair, so the two displays can hold together
    EXPECT_TRUE(ev->lower_bound_holds);
    EXPECT_TRUE(ev->equality_holds);
}

TEST(Asymmetry, CountEvidenceNeedsPrefixRepresentatives) {
    // {[0]} is not a bottom-prefix truncation of the block {[1],[0]}
    EXPECT_EQ(count_obstruction(chr_ms({{0, 0}, {1, 1}}), chr_ms({{0, 0}}), chr_ms({{0, 0}}), 1), std::nullopt);
}

TEST(Asymmetry, VerdictNames) {
    EXPECT_STREQ(to_string(Verdict::CertifiedDisjoint), "CertifiedDisjoint");
    EXPECT_STREQ(to_string(Verdict::LevelCase), "LevelCase");
    EXPECT_STREQ(to_string(Verdict::Undecided), "Undecided");
    EXPECT_STREQ(to_string(Obstruction::SpehPrefix), "SpehPrefix");
}
