#include "rackhom/complex.hpp"
#include "rackhom/errors.hpp"
#include "rackhom/serialize.hpp"

#include <gtest/gtest.h>

using namespace rackhom;

namespace {

Chain chain(const Tuple& t, int c = 1) { return Chain(ChainBasisElement{0, t}, c); }

HomologyGroup group_from(const Json& j)
{
    HomologyGroup h;
    h.free_rank = j.at("free_rank").get<std::size_t>();
    for (const auto& v : j.at("torsion"))
        h.torsion.push_back(Integer(v.get<long>()));
    return h;
}

Json oracle() { return parse_json_file(std::string(RACKHOM_FIXTURE_DIR) + "/homology_oracle.json"); }

CoefficientSystem custom_xset(const FiniteShelf& s)
{
    OpTable action = action_from_json(parse_json_file(std::string(RACKHOM_FIXTURE_DIR) + "/dihedral3_xset.json"));
    return CoefficientSystem::xset(std::get<XSetAction>(validate_xset(s, action)));
}

}  // namespace

TEST(Face, Examples)
{
    auto d3 = builtin::dihedral(3);
    auto triv = CoefficientSystem::trivial();
    EXPECT_EQ(face(d3, triv, 1, 2, {0, {0, 1, 2}}).tuple, (Tuple{2, 2}));
    for (const Tuple& t : all_tuples(3, 3)) {
        Tuple tail(t.begin() + 1, t.end());
        EXPECT_EQ(face(d3, triv, 0, 1, {0, t}).tuple, tail);
        EXPECT_EQ(face(d3, triv, 1, 1, {0, t}).tuple, tail);
    }
    ChainBasisElement b{0, {0, 1, 2}};
    EXPECT_EQ(face(d3, triv, 1, 1, face(d3, triv, 0, 3, b)), face(d3, triv, 0, 2, face(d3, triv, 1, 1, b)));
}

TEST(Face, SelfCoefficientsTranslateTheCoefficient)
{
    auto d3 = builtin::dihedral(3);
    auto self = CoefficientSystem::self(d3);
    // r x1 x2 -> (r<x2) (x1<x2) on the side-1 face at position 2.
    for (int r = 0; r < 3; ++r)
        for (const Tuple& t : all_tuples(3, 2)) {
            auto f = face(d3, self, 1, 2, {r, t});
            EXPECT_EQ(f.coeff, d3.op(r, t[1]));
            EXPECT_EQ(f.tuple, (Tuple{d3.op(t[0], t[1])}));
            EXPECT_EQ(face(d3, self, 0, 2, {r, t}).coeff, r);
        }
}

TEST(Boundary, Examples)
{
    auto d3 = builtin::dihedral(3);
    auto triv = CoefficientSystem::trivial();
    for (int x = 0; x < 3; ++x)
        EXPECT_TRUE(boundary(d3, triv, ChainBasisElement{0, {x}}).empty());
    EXPECT_EQ(boundary(d3, triv, ChainBasisElement{0, {0, 1}}), chain({2}) - chain({0}));
}

TEST(Boundary, SquaresToZero)
{
    for (auto s : {builtin::dihedral(3), builtin::dihedral(4), builtin::permutation({1, 0}), builtin::trivial(2)}) {
        std::vector<CoefficientSystem> cs{CoefficientSystem::trivial(), CoefficientSystem::self(s)};
        for (const auto& c : cs)
            for (int n = 1; n <= 5; ++n) {
                IntMatrix a = boundary_matrix(s, c, n - 1), b = boundary_matrix(s, c, n);
                EXPECT_TRUE((a * b).is_zero()) << n;
            }
    }
}

TEST(Boundary, MatrixShapes)
{
    auto d3 = builtin::dihedral(3);
    auto m0 = boundary_matrix(d3, CoefficientSystem::trivial(), 0);
    EXPECT_EQ(m0.rows(), 0u);
    EXPECT_EQ(m0.cols(), 1u);
    auto m2 = boundary_matrix(d3, CoefficientSystem::self(d3), 2);
    EXPECT_EQ(m2.rows(), 9u);
    EXPECT_EQ(m2.cols(), 27u);
    ResourceLimits tight{6, 10};
    EXPECT_THROW(boundary_matrix(d3, CoefficientSystem::trivial(), 3, tight), ResourceLimitExceeded);
}

TEST(Homology, H0IsZForTrivialCoefficients)
{
    for (auto s : {builtin::dihedral(3), builtin::trivial(2), builtin::permutation({1, 0}), builtin::dihedral(5)})
        EXPECT_EQ(homology_table(s, CoefficientSystem::trivial(), 0, false)[0], (HomologyGroup{1, {}}));
}

TEST(Homology, MatchesOracleFixtures)
{
    Json j = oracle();
    std::map<std::string, FiniteShelf> shelves{{"dihedral3", builtin::dihedral(3)}, {"trivial2", builtin::trivial(2)}};
    for (const auto& [name, s] : shelves) {
        const auto& rack = j.at(name).at("rack");
        auto h = homology_table(s, CoefficientSystem::trivial(), static_cast<int>(rack.size()) - 1, false);
        for (std::size_t n = 0; n < rack.size(); ++n)
            EXPECT_EQ(h[n], group_from(rack[n])) << name << " H_" << n;
    }
}

TEST(Homology, CohomologyFollowsUniversalCoefficients)
{
    // H^n = free part of H_n plus torsion of H_{n-1}.
    Json rack = oracle().at("dihedral3").at("rack");
    auto c = homology_table(builtin::dihedral(3), CoefficientSystem::trivial(), 4, true);
    for (int n = 0; n <= 4; ++n) {
        HomologyGroup expected{group_from(rack[n]).free_rank, {}};
        if (n > 0)
            expected.torsion = group_from(rack[n - 1]).torsion;
        EXPECT_EQ(c[n], expected) << n;
    }
}

TEST(Homology, DihedralThreeFreeRankOne)
{
    auto h = homology_table(builtin::dihedral(3), CoefficientSystem::trivial(), 4, false);
    for (const auto& g : h)
        EXPECT_EQ(g.free_rank, 1u);
    EXPECT_EQ(h[1], (HomologyGroup{1, {}}));
}

TEST(Homology, CustomXSetCoefficients)
{
    auto d3 = builtin::dihedral(3);
    auto c = custom_xset(d3);
    EXPECT_EQ(c.size(), 5);
    for (int n = 1; n <= 4; ++n)
        EXPECT_TRUE((boundary_matrix(d3, c, n - 1) * boundary_matrix(d3, c, n)).is_zero());
    // H_0 counts orbits of S: {0,1,2} and {3,4}.
    EXPECT_EQ(homology_table(d3, c, 0, false)[0], (HomologyGroup{2, {}}));
}

TEST(Cocycles, Examples)
{
    auto triv = CoefficientSystem::trivial();
    auto d3 = cocycle_basis(builtin::dihedral(3), triv, 1);
    ASSERT_EQ(d3.size(), 1u);
    EXPECT_EQ(d3[0].at({0}), d3[0].at({1}));
    EXPECT_EQ(d3[0].at({1}), d3[0].at({2}));
    EXPECT_EQ(cocycle_basis(builtin::trivial(2), triv, 1).size(), 2u);
    auto s = builtin::dihedral(3);
    for (int n = 1; n <= 3; ++n) {
        IntMatrix cob = boundary_matrix(s, triv, n + 1).transposed();
        for (const auto& f : cocycle_basis(s, triv, n, 3ul))
            EXPECT_EQ(modp::reduce(cob.apply(f.values()), 3), IntVector(cob.rows()));
        for (const auto& f : cocycle_basis(s, triv, n))
            EXPECT_EQ(cob.apply(f.values()), IntVector(cob.rows()));
    }
}
