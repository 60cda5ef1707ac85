#include "rackhom/complex.hpp"
#include "rackhom/errors.hpp"
#include "rackhom/exactlin.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace rackhom;

namespace {

IntMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, int lo = -4, int hi = 4)
{
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = d(rng);
    return m;
}

void expect_valid_snf(const IntMatrix& m)
{
    SNFResult s = smith_normal_form(m);
    IntMatrix d = s.left * m * s.right;
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            EXPECT_EQ(d(i, j), i == j ? s.diagonal[i] : Integer(0));
    EXPECT_EQ(abs(determinant(s.left)), 1);
    EXPECT_EQ(abs(determinant(s.right)), 1);
    auto f = s.invariant_factors();
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
        EXPECT_EQ(f[i + 1] % f[i], 0);
    EXPECT_EQ(invariant_factors(m), f);
    EXPECT_EQ(f.size(), rank(m));
}

}  // namespace

TEST(SNF, Examples)
{
    EXPECT_EQ(smith_normal_form(IntMatrix(1, 1)).diagonal, (IntVector{0}));
    EXPECT_EQ(smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 3}})).invariant_factors(), (IntVector{1, 6}));
    EXPECT_EQ(smith_normal_form(IntMatrix::from_rows({{2, 4}, {6, 8}})).invariant_factors(), (IntVector{2, 4}));
}

TEST(SNF, RandomMatricesReproduceD)
{
    std::mt19937_64 rng(7);
    for (int k = 0; k < 40; ++k)
        expect_valid_snf(random_matrix(1 + k % 5, 1 + (k * 3) % 6, rng));
    // Low rank with torsion.
    for (int k = 0; k < 10; ++k) {
        IntMatrix a = random_matrix(5, 2, rng), b = random_matrix(2, 6, rng);
        expect_valid_snf(a * b);
    }
}

TEST(SNF, DeterministicForFixedInput)
{
    std::mt19937_64 rng(3);
    IntMatrix m = random_matrix(4, 5, rng);
    auto a = smith_normal_form(m), b = smith_normal_form(m);
    EXPECT_EQ(a.diagonal, b.diagonal);
    EXPECT_EQ(a.left, b.left);
    EXPECT_EQ(a.right, b.right);
}

TEST(SNF, BigEntriesStayExact)
{
    IntMatrix m(2, 2);
    m(0, 0) = Integer("123456789012345678901234567890");
    m(1, 1) = Integer("987654321098765432109876543210");
    expect_valid_snf(m);
}

TEST(HomologyOfPair, Examples)
{
    EXPECT_EQ(homology_of_pair(IntMatrix(0, 2), IntMatrix(2, 0)), (HomologyGroup{2, {}}));
    EXPECT_EQ(homology_of_pair(IntMatrix(0, 1), IntMatrix::from_rows({{3}})), (HomologyGroup{0, {3}}));
    EXPECT_THROW(homology_of_pair(IntMatrix::from_rows({{1}}), IntMatrix::from_rows({{1}})), ContractViolation);
    EXPECT_EQ((HomologyGroup{2, {3}}).to_string(), "Z^2 + Z/3");
    EXPECT_EQ((HomologyGroup{}).to_string(), "0");
}

TEST(HomologyOfPair, ModularByRanks)
{
    // Z/3 vanishes mod 2 and becomes one dimension mod 3 (twice: Tor).
    EXPECT_EQ(homology_of_pair(IntMatrix(0, 1), IntMatrix::from_rows({{3}}), 2ul).free_rank, 0u);
    EXPECT_EQ(homology_of_pair(IntMatrix(0, 1), IntMatrix::from_rows({{3}}), 3ul).free_rank, 1u);
}

TEST(HomologyOfPair, FreeRankMatchesRationalRanks)
{
    auto s = builtin::dihedral(3);
    auto coeff = CoefficientSystem::trivial();
    std::vector<IntMatrix> d;
    for (int n = 0; n <= 5; ++n)
        d.push_back(boundary_matrix(s, coeff, n));
    for (int n = 0; n <= 4; ++n) {
        auto h = homology_of_pair(d[n], d[n + 1]);
        std::size_t dim = d[n].cols();
        EXPECT_EQ(h.free_rank, dim - rank(d[n]) - rank(d[n + 1]));
    }
}

TEST(DirectSum, Renormalizes)
{
    EXPECT_EQ(direct_sum(HomologyGroup{0, {2}}, HomologyGroup{0, {3}}), (HomologyGroup{0, {6}}));
    EXPECT_EQ(direct_sum(HomologyGroup{1, {2}}, HomologyGroup{2, {2}}), (HomologyGroup{3, {2, 2}}));
    EXPECT_EQ(direct_sum(HomologyGroup{0, {4}}, HomologyGroup{0, {2, 6}}), (HomologyGroup{0, {2, 2, 12}}));
}

TEST(SolveIntegral, Examples)
{
    auto m = IntMatrix::from_rows({{2}});
    EXPECT_EQ(solve_integral(m, {4}), (IntVector{2}));
    EXPECT_FALSE(solve_integral(m, {3}).has_value());
    std::mt19937_64 rng(11);
    for (int k = 0; k < 20; ++k) {
        IntMatrix a = random_matrix(4, 6, rng);
        IntVector b = a.apply(IntVector(6, 1));
        auto x = solve_integral(a, b);
        ASSERT_TRUE(x.has_value());
        EXPECT_EQ(a.apply(*x), b);
    }
    EXPECT_THROW(solve_integral(m, {1, 2}), InputError);
}

TEST(KernelBasis, AnnihilatesAndSpans)
{
    std::mt19937_64 rng(5);
    for (int k = 0; k < 10; ++k) {
        IntMatrix a = random_matrix(3, 2, rng) * random_matrix(2, 5, rng);
        auto ker = kernel_basis(a);
        EXPECT_EQ(ker.size(), 5 - rank(a));
        for (const auto& v : ker)
            EXPECT_EQ(a.apply(v), IntVector(3));
    }
}

TEST(Rank, Examples)
{
    EXPECT_EQ(rank(IntMatrix::identity(3)), 3u);
    EXPECT_EQ(rank(IntMatrix::from_rows({{2}}), 2ul), 0u);
    EXPECT_THROW(rank(IntMatrix::from_rows({{2}}), 4ul), InputError);
    auto s = builtin::dihedral(3);
    EXPECT_EQ(rank(boundary_matrix(s, CoefficientSystem::trivial(), 2)), 3u - orbits(s).size());
}

TEST(Rank, UniversalCoefficientsModP)
{
    // dim of mod-p cohomology equals dim of mod-p homology, degree by degree.
    for (auto s : {builtin::dihedral(3), builtin::dihedral(4)})
        for (unsigned long p : {2ul, 3ul}) {
            auto h = homology_table(s, CoefficientSystem::trivial(), 4, false, p);
            auto c = homology_table(s, CoefficientSystem::trivial(), 4, true, p);
            for (int n = 0; n <= 4; ++n)
                EXPECT_EQ(h[n].free_rank, c[n].free_rank);
        }
}

TEST(ModP, InverseAndSolve)
{
    auto m = IntMatrix::from_rows({{1, 2}, {3, 4}});
    auto inv = modp::inverse(m, 5);
    ASSERT_TRUE(inv.has_value());
    IntMatrix prod = m * *inv;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            EXPECT_EQ(((prod(i, j) % 5) + 5) % 5, i == j ? 1 : 0);
    EXPECT_FALSE(modp::inverse(IntMatrix::from_rows({{1, 2}, {2, 4}}), 5).has_value());
    auto x = modp::solve(m, {1, 0}, 5);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(modp::reduce(m.apply(*x), 5), (IntVector{1, 0}));
}
