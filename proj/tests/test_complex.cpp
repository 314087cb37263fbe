#include <gtest/gtest.h>

#include <set>

#include "lsq/complex.hpp"
#include "lsq/extremal.hpp"

using namespace lsq;

namespace {

using Sizes = std::vector<std::size_t>;

Face pf(unsigned q, std::initializer_list<std::pair<unsigned, unsigned>> ps)
{
    Face f;
    for (auto [i, j] : ps) f = f.with(pair_index(q, i, j));
    return f;
}

} // namespace

TEST(Face, BasicSetOperations)
{
    auto f = Face::of({0, 2, 5});
    EXPECT_EQ(f.size(), 3u);
    EXPECT_EQ(f.dim(), 2);
    EXPECT_TRUE(f.contains(Face::of({0, 5})));
    EXPECT_FALSE(f.contains(1u));
    EXPECT_EQ((f - Face::of({2})).vertices(), (std::vector<unsigned>{0, 5}));
    EXPECT_EQ(Face{}.dim(), -1);
}

TEST(Face, OrderIsCardinalityThenLex)
{
    std::vector<Face> fs{Face::of({1, 2}), Face::of({3}), Face::of({0, 3}), Face::of({0, 1, 2}), Face::of({0, 2})};
    std::sort(fs.begin(), fs.end(), FaceOrder{});
    std::vector<Face> want{Face::of({3}), Face::of({0, 2}), Face::of({0, 3}), Face::of({1, 2}), Face::of({0, 1, 2})};
    EXPECT_EQ(fs, want);
    EXPECT_TRUE(lex_less(Face::of({0, 1}), Face::of({0, 1, 2})));
    EXPECT_TRUE(lex_less(Face::of({0, 1, 7}), Face::of({0, 2})));
}

TEST(PairIndex, MatchesCanonicalOrder)
{
    for (unsigned q = 1; q <= 10; ++q) {
        auto vs = pair_vertices(q);
        ASSERT_EQ(vs.size(), pair_count(q));
        for (unsigned k = 0; k < vs.size(); ++k) {
            EXPECT_EQ(pair_index(q, vs[k].i, vs[k].j), k);
            EXPECT_EQ(pair_index(q, vs[k].j, vs[k].i), k);
        }
    }
}

TEST(Taylor, Shapes)
{
    EXPECT_EQ(f_vector(taylor(4)), (Sizes{1, 4, 6, 4, 1}));
    EXPECT_EQ(taylor(1).facets(), (std::vector<Face>{Face::of({0})}));
    EXPECT_EQ(faces(taylor(3), -2, EmptyFace::include).size(), 8u);
    EXPECT_EQ(faces(taylor(3)).size(), 7u);
    EXPECT_THROW(taylor(0), InputError);
}

TEST(Taylor, FVectorSumsToPowerOfTwo)
{
    for (unsigned q = 1; q <= 12; ++q) {
        auto f = f_vector(taylor(q));
        std::size_t total = 0, binom = 1;
        for (std::size_t k = 0; k < f.size(); ++k) {
            EXPECT_EQ(f[k], binom);
            binom = binom * (q - k) / (k + 1);
            total += f[k];
        }
        EXPECT_EQ(total, std::size_t{1} << q);
    }
}

TEST(L2, FourHasFiveFacets)
{
    auto c = l2(4);
    ASSERT_EQ(c.facets().size(), 5u);
    std::multiset<unsigned> sizes;
    for (auto f : c.facets()) sizes.insert(f.size());
    EXPECT_EQ(sizes, (std::multiset<unsigned>{4, 4, 4, 4, 6}));
}

TEST(L2, FVectorOfFour)
{
    EXPECT_EQ(f_vector(l2(4)), (Sizes{1, 10, 27, 32, 19, 6, 1}));
    EXPECT_EQ(faces(l2(4)).size(), 95u);
}

// brute-force count from tests/oracle/oracle.py: 6 vertices, 9 edges, 4 triangles
TEST(L2, ThreeHasNineteenFaces)
{
    EXPECT_EQ(faces(l2(3)).size(), 19u);
    EXPECT_EQ(f_vector(l2(3)), (Sizes{1, 6, 9, 4}));
}

TEST(L2, SmallCases)
{
    auto c2 = l2(2);
    EXPECT_EQ(c2.facets(), (std::vector<Face>{l2_star_facet(2, 1), l2_star_facet(2, 2)}));
    EXPECT_TRUE(is_face(c2, l2_square_free_facet(2)));
    auto c1 = l2(1);
    EXPECT_EQ(c1.facets().size(), 1u);
    EXPECT_TRUE(l2_square_free_facet(1).empty());
    EXPECT_EQ(f_vector(l2(5))[1], 15u);
}

TEST(L2, IsFace)
{
    auto c = l2(4);
    EXPECT_TRUE(is_face(c, pf(4, {{1, 2}, {1, 3}, {2, 3}})));
    EXPECT_FALSE(is_face(c, pf(4, {{1, 1}, {2, 3}})));
    EXPECT_TRUE(is_face(c, Face{}));
    EXPECT_TRUE(is_face(taylor(2), Face{}));
}

TEST(L2, Invariants)
{
    for (unsigned q = 3; q <= 8; ++q) {
        auto c = l2(q);
        auto b = l2_square_free_facet(q);
        for (unsigned i = 1; i <= q; ++i) {
            Face want;
            for (unsigned j = 1; j <= q; ++j)
                if (j != i) want = want.with(pair_index(q, i, j));
            EXPECT_EQ(l2_star_facet(q, i) & b, want);
        }
        EXPECT_EQ(c.dimension(), static_cast<int>(q * (q - 1) / 2) - 1);
        // antichain
        for (auto f : c.facets())
            for (auto g : c.facets())
                if (f != g) {
                    EXPECT_FALSE(g.contains(f));
                }
    }
}

TEST(Faces, ByDimensionAndDeterminism)
{
    auto c = l2(4);
    EXPECT_EQ(faces(c, 1).size(), 27u);
    EXPECT_EQ(faces(c, 5).size(), 1u);
    EXPECT_EQ(faces(c, -1, EmptyFace::include), (std::vector<Face>{Face{}}));
    EXPECT_EQ(faces(c), faces(c));
    auto all = faces(c);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end(), FaceOrder{}));
}

TEST(SimplicialComplex, ReducesToAntichainAndValidates)
{
    std::vector<Vertex> vs{{1, 0}, {2, 0}, {3, 0}};
    SimplicialComplex c(vs, {Face::of({0, 1}), Face::of({0}), Face::of({0, 1}), Face::of({2})});
    EXPECT_EQ(c.facets().size(), 2u);
    EXPECT_THROW(SimplicialComplex(vs, {Face::of({3})}), StructuralError);
    EXPECT_EQ(c.face_of({{1, 0}, {3, 0}}), Face::of({0, 2}));
    EXPECT_THROW(c.face_of({{4, 0}}), InputError);
    EXPECT_EQ(to_string(Vertex{1, 2}), "12");
}

TEST(LabeledComplex, LabelsAreLcms)
{
    auto ideal = parse_ideal({"a", "b", "c", "d", "e", "f", "g"}, {"ab", "bcd", "aef", "cg"});
    LabeledComplex lc(taylor(4), ideal);
    EXPECT_TRUE(lc.label(Face{}).is_one());
    EXPECT_EQ(to_string(lc.label(Face::of({0, 1}))), "abcd");
    EXPECT_EQ(lc.label(Face::of({0, 1, 2})), lc.label(Face::of({1, 2})));
    EXPECT_THROW(LabeledComplex(taylor(3), ideal), StructuralError);
}

TEST(LabeledComplex, LabelOfUnionIsLcmOfLabels)
{
    auto sq = power_generators(4, single_relation(3), 2);
    LabeledComplex lc(l2(4), sq);
    auto fs = faces(l2(4));
    for (std::size_t a = 0; a < fs.size(); a += 7) {
        for (std::size_t b = 0; b < fs.size(); b += 5) {
            EXPECT_EQ(lc.label(fs[a] | fs[b]), lcm(lc.label(fs[a]), lc.label(fs[b])));
        }
    }
}
