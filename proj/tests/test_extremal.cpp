#include <gtest/gtest.h>

#include <set>

#include "lsq/divrel.hpp"
#include "lsq/extremal.hpp"

using namespace lsq;

namespace {

std::set<std::uint32_t> bits_of(const std::vector<SubsetIndex>& v)
{
    std::set<std::uint32_t> out;
    for (auto a : v) out.insert(a.bits());
    return out;
}

DivSet j_family(unsigned s, std::uint32_t j_bits)
{
    DivSet d = single_relation(s);
    for (unsigned b = s + 1; b <= 32 && (j_bits >> (b - 1)); ++b)
        if ((j_bits >> (b - 1)) & 1u) d.push_back({b, IndexSet::range(2, s)});
    return d;
}

} // namespace

TEST(QofD, SingleRelationExcludesOneAndOneFour)
{
    auto q = q_of_D(4, single_relation(3));
    EXPECT_EQ(q.size(), 13u);
    auto b = bits_of(q);
    EXPECT_FALSE(b.count(0b0001));
    EXPECT_FALSE(b.count(0b1001));
}

TEST(QofD, EmptyRelationSetGivesAllSubsets)
{
    for (unsigned q = 1; q <= 8; ++q) EXPECT_EQ(q_of_D(q, {}).size(), (1u << q) - 1);
}

TEST(QofD, TwoRelations)
{
    DivSet d{{1, IndexSet{2, 3}}, {4, IndexSet{2, 3}}};
    auto b = bits_of(q_of_D(4, d));
    EXPECT_EQ(b.size(), 12u);
    EXPECT_FALSE(b.count(0b0001));
    EXPECT_FALSE(b.count(0b1000));
    EXPECT_FALSE(b.count(0b1001));
}

TEST(QofD, CanonicalOrder)
{
    auto q = q_of_D(3, {});
    std::vector<std::string> names;
    for (auto a : q) names.push_back(a.variable_name());
    EXPECT_EQ(names, (std::vector<std::string>{"y_{1}", "y_{2}", "y_{3}", "y_{12}", "y_{13}", "y_{23}", "y_{123}"}));
    EXPECT_EQ(SubsetIndex(0b1000000001).variable_name(), "y_{1,10}");
}

TEST(QofD, RejectsBadIndices)
{
    EXPECT_THROW(q_of_D(3, single_relation(4)), InputError);
    EXPECT_THROW(q_of_D(3, {{0, IndexSet{1, 2}}}), InputError);
    EXPECT_THROW(q_of_D(0, {}), InputError);
    EXPECT_THROW(q_of_D(17, {}), CapacityError);
}

TEST(Extremal, GeneratorsOfTheMainExample)
{
    auto e = extremal_generators(4, single_relation(3));
    EXPECT_EQ(e.ring()->size(), 13u);
    EXPECT_EQ(to_string(e.generator(1)), "y_{12}y_{13}y_{123}y_{124}y_{134}y_{1234}");
    EXPECT_EQ(to_string(e.generator(2)), "y_{2}y_{12}y_{23}y_{24}y_{123}y_{124}y_{234}y_{1234}");
    EXPECT_EQ(to_string(e.generator(3)), "y_{3}y_{13}y_{23}y_{34}y_{123}y_{134}y_{234}y_{1234}");
    EXPECT_EQ(to_string(e.generator(4)), "y_{4}y_{24}y_{34}y_{124}y_{134}y_{234}y_{1234}");
    EXPECT_FALSE(e.ring()->index_of("y_{1}"));
    EXPECT_FALSE(e.ring()->index_of("y_{14}"));
    EXPECT_TRUE(relation_holds(e, {1, IndexSet{2, 3}}));
}

TEST(Extremal, ProductOfFirstTwoGenerators)
{
    auto e = extremal_generators(4, single_relation(3));
    EXPECT_EQ(to_string(product(e.generator(1), e.generator(2))),
              "y_{2}y_{12}^2y_{13}y_{23}y_{24}y_{123}^2y_{124}^2y_{134}y_{234}y_{1234}^2");
}

TEST(Extremal, TwoGeneratorCase)
{
    auto e = extremal_generators(2, {});
    EXPECT_EQ(to_string(e.generator(1)), "y_{1}y_{12}");
    EXPECT_EQ(to_string(e.generator(2)), "y_{2}y_{12}");
}

TEST(Extremal, MultisetsInLexOrder)
{
    auto ms = exponent_multisets(3, 2);
    std::vector<std::vector<unsigned>> want{{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};
    EXPECT_EQ(ms, want);
    EXPECT_EQ(exponent_multisets(4, 3).size(), 20u);
}

TEST(Extremal, PowerGenerators)
{
    auto sq = power_generators(4, single_relation(3), 2);
    EXPECT_EQ(sq.size(), 10u);
    EXPECT_TRUE(sq.is_minimal());
    auto first = power_generators(4, single_relation(3), 1);
    EXPECT_EQ(first.generators(), extremal_generators(4, single_relation(3)).generators());
    auto e3 = power_generators(3, {}, 2);
    EXPECT_EQ(e3.size(), 6u);
    // generator k of the square is eps_i eps_j for the k-th pair (i, j)
    auto base = extremal_generators(4, single_relation(3));
    EXPECT_EQ(sq.generator(6), product(base.generator(2), base.generator(3)));
    EXPECT_EQ(power_generators(3, {}, 3).size(), 10u);
}

TEST(Extremal, PowerGeneratorsRejectSmallB)
{
    EXPECT_THROW(power_generators(4, {{1, IndexSet{2}}}, 2), InputError);
    EXPECT_THROW(power_generators(4, {}, 0), InputError);
}

TEST(ExtremalProperties, GeneratorsAreSquareFreeAndDistinct)
{
    for (unsigned q = 2; q <= 7; ++q) {
        for (unsigned s = 3; s <= q; ++s) {
            for (const auto& d : {DivSet{}, single_relation(s)}) {
                auto e = extremal_generators(q, d);
                std::set<Monomial> seen;
                for (const auto& g : e.generators()) {
                    EXPECT_TRUE(g.is_square_free());
                    seen.insert(g);
                }
                EXPECT_EQ(seen.size(), q);
                for (const auto& r : d) EXPECT_TRUE(relation_holds(e, r));
            }
        }
    }
}

TEST(ExtremalProperties, OnlyMinimalRelationIsTheDefiningOne)
{
    for (unsigned q = 3; q <= 6; ++q) {
        EXPECT_TRUE(minimal_relations(extremal_generators(q, {})).empty()) << "q=" << q;
        for (unsigned s = 3; s <= q; ++s) {
            auto mins = minimal_relations(extremal_generators(q, single_relation(s)));
            EXPECT_EQ(mins, single_relation(s)) << "q=" << q << " s=" << s;
        }
    }
}

// eps_i | lcm(sigma), i not in sigma, holds iff i in J + {1} and {2..s} is inside sigma
TEST(ExtremalProperties, JFamilyDivisibilityTest)
{
    for (unsigned q = 3; q <= 6; ++q) {
        for (unsigned s = 3; s <= q; ++s) {
            for (std::uint32_t jb = 0; jb < (1u << q); ++jb) {
                if (jb & ((1u << s) - 1)) continue; // J must lie in {s+1..q}
                auto d = j_family(s, jb);
                auto e = extremal_generators(q, d);
                std::uint32_t bset = ((1u << s) - 1) & ~1u;
                for (unsigned i = 1; i <= q; ++i) {
                    for (std::uint32_t sig = 1; sig < (1u << q); ++sig) {
                        if ((sig >> (i - 1)) & 1u) continue;
                        std::vector<Monomial> ms;
                        for (unsigned k = 1; k <= q; ++k)
                            if ((sig >> (k - 1)) & 1u) ms.push_back(e.generator(k));
                        bool actual = divides(e.generator(i), lcm_of(ms, e.ring()));
                        bool in_j = i == 1 || ((jb >> (i - 1)) & 1u);
                        bool predicted = in_j && (sig & bset) == bset;
                        ASSERT_EQ(actual, predicted) << "q=" << q << " s=" << s << " J=" << jb << " i=" << i;
                    }
                }
            }
        }
    }
}
