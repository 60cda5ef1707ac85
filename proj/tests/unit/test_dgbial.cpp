#include "rackhom/complex.hpp"
#include "rackhom/dgbial.hpp"
#include "rackhom/errors.hpp"
#include "rackhom/products.hpp"
#include "rackhom/verify.hpp"

#include <gtest/gtest.h>

using namespace rackhom;

namespace {

std::vector<FiniteShelf> shelves()
{
    return {builtin::dihedral(3), builtin::dihedral(4), builtin::trivial(2), builtin::permutation({1, 0}),
            builtin::trivial(1)};
}

void expect_suite(const FiniteShelf& s, const std::string& suite, int max_degree)
{
    VerifyOptions o;
    o.max_degree = max_degree;
    for (const auto& r : run_suite(s, suite, o)) {
        EXPECT_TRUE(r.passed) << suite << ": " << r.failure << " " << r.instance.dump();
        EXPECT_GT(r.checks, 0u);
    }
}

}  // namespace

TEST(NormalizeWord, Examples)
{
    auto d3 = builtin::dihedral(3);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
            EXPECT_EQ(normalize_word(d3, {egen(x), gen(y)}), (NormalForm{{y}, {d3.op(x, y)}}));
            EXPECT_EQ(normalize_word(d3, {gen(x), gen(y)}), (NormalForm{{x, y}, {}}));
        }
    EXPECT_EQ(normalize_word(d3, {egen(0), egen(1), gen(2)}), (NormalForm{{2}, {1, 0}}));
}

TEST(Diff, Examples)
{
    auto d3 = builtin::dihedral(3);
    for (int x = 0; x < 3; ++x) {
        EXPECT_TRUE(diff(d3, bar({x})).empty());
        for (int y = 0; y < 3; ++y)
            EXPECT_EQ(diff(d3, bar({x, y})), bar({d3.op(x, y)}) - bar({x}));
    }
}

TEST(Diff, SquaresToZeroAndMatchesBoundary)
{
    auto d3 = builtin::dihedral(3);
    for (int n = 0; n <= 5; ++n)
        for (const Tuple& t : all_tuples(3, n)) {
            EXPECT_TRUE(diff(d3, diff(d3, bar(t))).empty());
            BarElement expected;
            for (const auto& [b, c] : boundary(d3, CoefficientSystem::trivial(), ChainBasisElement{0, t}))
                expected.add(b.tuple, c);
            EXPECT_EQ(diff(d3, bar(t)), expected);
        }
}

TEST(Counit, Examples)
{
    EXPECT_EQ(counit(bar({})), 1);
    EXPECT_EQ(counit(bar({0})), 0);
    EXPECT_EQ(counit(bar({}, 3) - bar({0, 1}, 2)), 3);
}

TEST(Coproduct, Examples)
{
    auto d3 = builtin::dihedral(3);
    EXPECT_EQ(coproduct(d3, bar({})), tensor({}, {}));
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            EXPECT_EQ(coproduct(d3, bar({x, y})),
                      tensor({x, y}, {}) + tensor({}, {x, y}) + tensor({x}, {y}) - tensor({y}, {d3.op(x, y)}));
}

TEST(Coproduct, MethodsAgreeOnRacks)
{
    for (auto s : {builtin::dihedral(3), builtin::permutation({1, 0})})
        for (int n = 0; n <= 4; ++n)
            for (const Tuple& t : all_tuples(s.size(), n))
                EXPECT_EQ(coproduct(s, bar(t)), coproduct(s, bar(t), CoproductMethod::unshuffle));
    auto nonrack = make_shelf({{0, 0}, {0, 0}});
    EXPECT_THROW(coproduct(nonrack, bar({0, 1}), CoproductMethod::unshuffle), Unsupported);
}

TEST(UnshuffleSign, Examples)
{
    EXPECT_EQ(unshuffle_sign(3, {}), 1);
    EXPECT_EQ(unshuffle_sign(3, {1, 2, 3}), 1);
    EXPECT_EQ(unshuffle_sign(2, {1}), -1);  // (2,1)
    EXPECT_EQ(unshuffle_sign(3, {1}), 1);   // (2,3,1)
    EXPECT_EQ(unshuffle_sign(3, {2}), -1);  // (1,3,2)
}

TEST(Tau, Examples)
{
    EXPECT_EQ(tau(tensor({0}, {1})), tensor({1}, {0}, -1));
    EXPECT_EQ(tau(tensor({}, {0, 1})), tensor({0, 1}, {}));
    auto d3 = builtin::dihedral(3);
    for (int n = 0; n <= 4; ++n)
        for (const Tuple& t : all_tuples(3, n)) {
            BarTensor d = coproduct(d3, bar(t));
            EXPECT_EQ(tau(tau(d)), d);
        }
}

TEST(TensorDiff, Examples)
{
    for (auto s : shelves())
        for (int x = 0; x < s.size(); ++x)
            EXPECT_TRUE(tensor_diff(s, tensor({x}, {x})).empty());
}

TEST(Homotopy, ClosedForms)
{
    auto d3 = builtin::dihedral(3);
    EXPECT_TRUE(homotopy_h(d3, bar({})).empty());
    EXPECT_EQ(homotopy_h(d3, bar({1})), tensor({1}, {1}));
    // e_0 e_1 with 0<1 = 2.
    EXPECT_EQ(homotopy_h(d3, bar({0, 1})),
              tensor({0}, {0, 1}) + tensor({1}, {0, 1}) - tensor({0, 1}, {1}) - tensor({0, 1}, {2}));
}

TEST(Dendri, ClosedForms)
{
    auto d3 = builtin::dihedral(3);
    EXPECT_EQ(dendri(d3, bar({0, 1}), Side::left), tensor({0, 1}, {}) + tensor({0}, {1}));
    EXPECT_EQ(dendri(d3, bar({0, 1}), Side::right), tensor({}, {0, 1}) - tensor({1}, {2}));
    EXPECT_THROW(dendri(d3, bar({}), Side::left), Unsupported);
    EXPECT_TRUE(homotopy_hbar(d3, bar({2})).empty());
    EXPECT_EQ(homotopy_hbar(d3, bar({0, 1})), tensor({1}, {0, 1}));
}

TEST(Dendri, HbarSignIsDetectedNotAssumed)
{
    EXPECT_EQ(detect_hbar_sign(builtin::dihedral(3)), kHbarSign);
    EXPECT_EQ(detect_hbar_sign(builtin::dihedral(4)), kHbarSign);
}

TEST(Suites, ComplexDegreeFive)
{
    for (const auto& s : shelves())
        expect_suite(s, "complex", 5);
}

TEST(Suites, BialgebraHomotopyDendriformDegreeFour)
{
    for (const auto& s : shelves())
        for (const char* suite : {"dgb", "homotopy", "dendriform"})
            expect_suite(s, suite, 4);
}

TEST(Suites, NonRackUnshuffleIsInformational)
{
    auto nonrack = make_shelf({{0, 0}, {0, 0}});
    VerifyOptions o;
    o.max_degree = 3;
    auto r = run_suite(nonrack, "dgb", o);
    ASSERT_EQ(r.size(), 1u);
    EXPECT_TRUE(r[0].passed);
    ASSERT_FALSE(r[0].notes.empty());
    EXPECT_NE(r[0].notes[0].find("not a rack"), std::string::npos);
}
