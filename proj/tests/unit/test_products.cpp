#include "rackhom/complex.hpp"
#include "rackhom/errors.hpp"
#include "rackhom/products.hpp"
#include "rackhom/verify.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace rackhom;

namespace {

const CoefficientSystem kTrivial = CoefficientSystem::trivial();

Cochain random_cochain(int n, int size, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> d(-5, 5);
    Cochain f(n, size);
    for (std::size_t i = 0; i < f.dimension(); ++i)
        f.set_index(i, d(rng));
    return f;
}

Cochain constant(int n, int size, int v)
{
    Cochain f(n, size);
    for (std::size_t i = 0; i < f.dimension(); ++i)
        f.set_index(i, v);
    return f;
}

}  // namespace

TEST(Coboundary, DegreeOneFormula)
{
    auto d3 = builtin::dihedral(3);
    std::mt19937_64 rng(1);
    Cochain f = random_cochain(1, 3, rng);
    Cochain df = coboundary(d3, kTrivial, f);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            EXPECT_EQ(df.at({x, y}), f.at({x}) - f.at({d3.op(x, y)}));
    EXPECT_TRUE(coboundary(d3, kTrivial, constant(1, 3, 7)).is_zero());
}

TEST(Coboundary, SquaresToZero)
{
    std::mt19937_64 rng(2);
    for (auto s : {builtin::dihedral(3), builtin::permutation({1, 0})}) {
        for (int n = 0; n <= 3; ++n) {
            Cochain f = random_cochain(n, s.size(), rng);
            EXPECT_TRUE(coboundary(s, kTrivial, coboundary(s, kTrivial, f)).is_zero());
        }
        auto self = CoefficientSystem::self(s);
        Cochain g(2, s.size(), s.size());
        std::uniform_int_distribution<int> d(-3, 3);
        for (std::size_t i = 0; i < g.dimension(); ++i)
            g.set_index(i, d(rng));
        EXPECT_TRUE(coboundary(s, self, coboundary(s, self, g)).is_zero());
    }
}

TEST(Cup, DegreeOneOneFormula)
{
    auto d3 = builtin::dihedral(3);
    std::mt19937_64 rng(3);
    Cochain f = random_cochain(1, 3, rng), g = random_cochain(1, 3, rng);
    Cochain fg = cup(d3, f, g);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            EXPECT_EQ(fg.at({x, y}), -f.at({x}) * g.at({y}) + f.at({y}) * g.at({d3.op(x, y)}));
}

TEST(Cup, DegreeTwoTwoFormula)
{
    auto d3 = builtin::dihedral(3);
    auto op = [&](int a, int b) { return d3.op(a, b); };
    std::mt19937_64 rng(4);
    Cochain f = random_cochain(2, 3, rng), g = random_cochain(2, 3, rng);
    Cochain fg = cup(d3, f, g);
    for (const Tuple& t : all_tuples(3, 4)) {
        int x = t[0], y = t[1], z = t[2], u = t[3];
        Integer v = f.at({x, y}) * g.at({z, u}) + f.at({z, u}) * g.at({op(op(x, z), u), op(op(y, z), u)}) -
                    f.at({x, z}) * g.at({op(y, z), u}) + f.at({x, u}) * g.at({op(y, u), op(z, u)}) +
                    f.at({y, z}) * g.at({op(op(x, y), z), u}) - f.at({y, u}) * g.at({op(op(x, y), u), op(z, u)});
        EXPECT_EQ(fg.at(t), v);
    }
}

TEST(Cup, AssociativeAndLeibniz)
{
    auto d3 = builtin::dihedral(3);
    std::mt19937_64 rng(5);
    for (auto [a, b, c] : {std::array<int, 3>{1, 1, 1}, {1, 1, 2}, {2, 1, 2}, {0, 2, 1}}) {
        Cochain f = random_cochain(a, 3, rng), g = random_cochain(b, 3, rng), k = random_cochain(c, 3, rng);
        EXPECT_EQ(cup(d3, cup(d3, f, g), k), cup(d3, f, cup(d3, g, k)));
        Cochain lhs = coboundary(d3, kTrivial, cup(d3, f, g));
        Cochain rhs = cup(d3, coboundary(d3, kTrivial, f), g) +
                      Integer(a % 2 ? -1 : 1) * cup(d3, f, coboundary(d3, kTrivial, g));
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(Cup, RejectsNontrivialCoefficients)
{
    auto d3 = builtin::dihedral(3);
    auto self = CoefficientSystem::self(d3);
    Cochain f(1, 3, 3);
    EXPECT_THROW(cup(d3, self, f, f), Unsupported);
}

TEST(HalfCup, SumIsCupAndDegreeOneValue)
{
    auto d3 = builtin::dihedral(3);
    std::mt19937_64 rng(6);
    for (auto [a, b] : {std::pair{1, 1}, {1, 2}, {2, 2}, {3, 1}}) {
        Cochain f = random_cochain(a, 3, rng), g = random_cochain(b, 3, rng);
        EXPECT_EQ(half_cup(d3, f, g, Side::left) + half_cup(d3, f, g, Side::right), cup(d3, f, g));
    }
    Cochain f = random_cochain(1, 3, rng), g = random_cochain(1, 3, rng);
    Cochain l = half_cup(d3, f, g, Side::left);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            EXPECT_EQ(l.at({x, y}), -f.at({x}) * g.at({y}));
    EXPECT_THROW(half_cup(d3, constant(0, 3, 1), g, Side::left), Unsupported);
}

TEST(Witness, DegreeOneAndBilinear)
{
    auto d3 = builtin::dihedral(3);
    std::mt19937_64 rng(7);
    Cochain f = random_cochain(1, 3, rng), g = random_cochain(1, 3, rng);
    Cochain w = witness(d3, f, g, WitnessKind::commutativity);
    for (int x = 0; x < 3; ++x)
        EXPECT_EQ(w.at({x}), f.at({x}) * g.at({x}));
    EXPECT_TRUE(witness(d3, f, Cochain(1, 3), WitnessKind::commutativity).is_zero());
    // On degree-1 cocycles: f cup g + g cup f = d*(H(f, g)).
    auto z = cocycle_basis(d3, kTrivial, 1);
    for (const auto& a : z)
        for (const auto& b : z)
            EXPECT_EQ(cup(d3, a, b) + cup(d3, b, a),
                      coboundary(d3, kTrivial, witness(d3, a, b, WitnessKind::commutativity)));
}

TEST(Witness, SignsAreDetected)
{
    EXPECT_EQ(detect_commutativity_sign(builtin::dihedral(3)), kCommutativitySign);
    EXPECT_EQ(detect_zinbiel_sign(builtin::dihedral(3)), kZinbielSign);
    // No coboundaries on trivial(2): nothing to detect from.
    EXPECT_EQ(detect_commutativity_sign(builtin::trivial(2)), 0);
}

TEST(Action, Examples)
{
    std::mt19937_64 rng(8);
    Cochain f = random_cochain(2, 2, rng);
    EXPECT_EQ(x_action(builtin::trivial(2), 1, f), f);
    auto d3 = builtin::dihedral(3);
    Cochain g = random_cochain(1, 3, rng);
    EXPECT_EQ(x_action(d3, 0, g).at({1}), g.at({2}));
}

TEST(IsCoboundary, Examples)
{
    auto d3 = builtin::dihedral(3);
    auto zero = is_coboundary(d3, kTrivial, Cochain(2, 3));
    ASSERT_TRUE(zero.has_value());
    EXPECT_TRUE(coboundary(d3, kTrivial, *zero).is_zero());
    std::mt19937_64 rng(9);
    Cochain g = random_cochain(2, 3, rng);
    Cochain f = coboundary(d3, kTrivial, g);
    auto pre = is_coboundary(d3, kTrivial, f);
    ASSERT_TRUE(pre.has_value());
    EXPECT_EQ(coboundary(d3, kTrivial, *pre), f);
    EXPECT_FALSE(is_coboundary(d3, kTrivial, cocycle_basis(d3, kTrivial, 1).at(0)).has_value());
    EXPECT_THROW(make_class(d3, kTrivial, Cochain::from_values(1, 3, {1, 0, 0})),
                 ContractViolation);
}

TEST(InducedCoproduct, DihedralThree)
{
    auto d3 = builtin::dihedral(3);
    for (unsigned long p : {2ul, 3ul}) {
        auto a = induced_coproduct(d3, p, 3, 1);
        auto b = induced_coproduct(d3, p, 3, 99);
        EXPECT_TRUE(a.complement_components_vanish);
        EXPECT_EQ(a.table, b.table);
        EXPECT_EQ(induced_coassociativity_failure(a), "");
        EXPECT_EQ(induced_counit_failure(a), "");
        EXPECT_EQ(a.dims[0], 1u);
        EXPECT_EQ(a.coefficient(0, 0, 0, 0, 0), 1);
        auto h = homology_table(d3, kTrivial, 3, false, p);
        for (int n = 0; n <= 3; ++n)
            EXPECT_EQ(a.dims[n], h[n].free_rank);
    }
}

TEST(Suites, CupZinbielAction)
{
    for (auto s : {builtin::dihedral(3), builtin::trivial(2)}) {
        VerifyOptions o;
        o.max_degree = 4;
        for (const char* suite : {"cup", "zinbiel", "action"})
            for (const auto& r : run_suite(s, suite, o))
                EXPECT_TRUE(r.passed) << suite << ": " << r.failure << " " << r.instance.dump();
    }
}
