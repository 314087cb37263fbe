#include <gtest/gtest.h>

#include "lsq/betti.hpp"
#include "lsq/extremal.hpp"

using namespace lsq;

namespace {

using Sizes = std::vector<std::size_t>;

MonomialIdeal i1() { return parse_ideal({"a", "b", "c", "d", "e", "f", "g"}, {"ab", "bcd", "aef", "cg"}); }
MonomialIdeal i2() { return parse_ideal({"a", "b", "c", "d", "e", "f"}, {"ab", "bcd", "aef", "ce"}); }
DivSet two() { return {DivRel{1, IndexSet{2, 3}}, DivRel{4, IndexSet{2, 3}}}; }

MonomialIdeal variables(unsigned q)
{
    std::vector<std::string> names;
    for (unsigned k = 1; k <= q; ++k) names.push_back("x" + std::to_string(k));
    return parse_ideal(names, names);
}

} // namespace

TEST(LcmLattice, ContainsOneAndAllLcms)
{
    LcmLattice lat(i1());
    EXPECT_TRUE(lat.bottom().is_one());
    // m1 | lcm(m2, m3) merges {2,3} with {1,2,3} and {2,3,4} with {1,2,3,4}
    EXPECT_EQ(lat.size(), 1u + 13u);
    auto sq = i1().square();
    LcmLattice l2(sq);
    for (const auto& g : sq.generators()) EXPECT_TRUE(l2.index_of(g));
    for (std::size_t a = 0; a < l2.size(); ++a)
        for (std::size_t b = 0; b < l2.size(); ++b)
            EXPECT_TRUE(l2.index_of(lcm(l2.elements()[a], l2.elements()[b])));
}

TEST(Betti, VariablesGiveKoszulNumbers)
{
    for (unsigned q = 1; q <= 6; ++q) {
        Sizes want;
        std::size_t c = q;
        for (unsigned i = 0; i < q; ++i) {
            want.push_back(c);
            c = c * (q - i - 1) / (i + 2);
        }
        EXPECT_EQ(total_betti(variables(q)), want) << q;
        EXPECT_EQ(total_betti(variables(q), Field::rational, BettiMethod::lattice_interval), want) << q;
    }
}

TEST(Betti, FirstPowers)
{
    EXPECT_EQ(total_betti(i1()), (Sizes{4, 5, 2}));
    EXPECT_EQ(total_betti(i2()), (Sizes{4, 5, 2}));
    EXPECT_EQ(total_betti(extremal_generators(4, single_relation(3))), (Sizes{4, 5, 2}));
    EXPECT_EQ(total_betti(extremal_generators(4, two())), (Sizes{4, 5, 2}));
}

TEST(Betti, Squares)
{
    for (auto field : {Field::gf2, Field::rational}) {
        EXPECT_EQ(total_betti(i1().square(), field), (Sizes{10, 17, 9, 1}));
        EXPECT_EQ(total_betti(i2().square().minimalize(), field), (Sizes{9, 14, 6}));
        EXPECT_EQ(total_betti(power_generators(4, single_relation(3), 2), field), (Sizes{10, 21, 15, 3}));
        EXPECT_EQ(total_betti(power_generators(4, two(), 2), field), (Sizes{10, 21, 14, 2}));
        EXPECT_EQ(total_betti(power_generators(3, single_relation(3), 2), field), (Sizes{6, 6, 1}));
        EXPECT_EQ(total_betti(power_generators(3, {}, 2), field), (Sizes{6, 9, 4}));
    }
}

TEST(Betti, MethodsAgree)
{
    std::vector<MonomialIdeal> ideals{i1().square(), i2().square().minimalize(),
                                      power_generators(3, single_relation(3), 2),
                                      power_generators(4, two(), 2), variables(4)};
    for (const auto& ideal : ideals) {
        auto a = graded_betti(ideal, Field::gf2, BettiMethod::lower_taylor);
        auto b = graded_betti(ideal, Field::gf2, BettiMethod::lattice_interval);
        ASSERT_EQ(a.entries.size(), b.entries.size());
        for (std::size_t k = 0; k < a.entries.size(); ++k) {
            EXPECT_EQ(a.entries[k].degree, b.entries[k].degree);
            EXPECT_EQ(a.entries[k].multidegree, b.entries[k].multidegree);
            EXPECT_EQ(a.entries[k].value, b.entries[k].value);
        }
    }
}

TEST(Betti, GradedEntriesSitOnTheLattice)
{
    auto ideal = i1().square();
    LcmLattice lat(ideal);
    auto t = graded_betti(ideal);
    for (const auto& e : t.entries) {
        EXPECT_TRUE(lat.index_of(e.multidegree));
        EXPECT_GT(e.value, 0u);
    }
    std::size_t zero = 0;
    for (const auto& e : t.entries)
        if (e.degree == 0) ++zero;
    EXPECT_EQ(zero, ideal.size());
}

TEST(Betti, AlternatingSumIsOne)
{
    for (const auto& ideal : {i1().square(), power_generators(4, single_relation(3), 2), variables(5)}) {
        long sum = 0;
        auto t = total_betti(ideal);
        for (std::size_t i = 0; i < t.size(); ++i) sum += (i % 2 ? -1 : 1) * static_cast<long>(t[i]);
        EXPECT_EQ(sum, 1);
    }
}

TEST(Betti, InputChecks)
{
    EXPECT_THROW(total_betti(i2().square()), InputError);
    auto r = make_variables({"x"});
    EXPECT_THROW(total_betti(MonomialIdeal(r, {})), InputError);
    EXPECT_THROW(total_betti(variables(16)), CapacityError);
}

TEST(ProjectiveDimension, Examples)
{
    EXPECT_EQ(projective_dimension(extremal_generators(4, single_relation(3))), 2u);
    EXPECT_EQ(projective_dimension(power_generators(4, single_relation(3), 2)), 3u);
    EXPECT_EQ(projective_dimension(i2().square().minimalize()), 2u);
    EXPECT_EQ(projective_dimension(i1().square()), 3u);
}

TEST(ProjectiveDimension, FormulaValues)
{
    EXPECT_EQ(pd_formula(3, 3), (std::pair<unsigned, unsigned>{1, 2}));
    EXPECT_EQ(pd_formula(4, 3), (std::pair<unsigned, unsigned>{2, 3}));
    EXPECT_EQ(pd_formula(4, 4), (std::pair<unsigned, unsigned>{2, 5}));
    EXPECT_EQ(pd_formula(5, 3), (std::pair<unsigned, unsigned>{3, 6}));
    EXPECT_THROW(pd_formula(4, 2), InputError);
    EXPECT_THROW(pd_formula(3, 4), InputError);
}

TEST(ProjectiveDimension, FormulaMatchesComputationSmallQ)
{
    for (unsigned q = 3; q <= 4; ++q) {
        for (unsigned s = 3; s <= q; ++s) {
            auto [p1, p2] = pd_formula(q, s);
            EXPECT_EQ(projective_dimension(extremal_generators(q, single_relation(s))), p1) << q << "," << s;
            EXPECT_EQ(projective_dimension(power_generators(q, single_relation(s), 2)), p2) << q << "," << s;
        }
    }
}
