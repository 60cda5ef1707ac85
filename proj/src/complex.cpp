#include "rackhom/complex.hpp"

#include "rackhom/errors.hpp"

namespace rackhom {

ChainBasisElement face(const FiniteShelf& shelf, const CoefficientSystem& coeff, int side, int i,
                       const ChainBasisElement& b)
{
    const int n = b.degree();
    if (i < 1 || i > n)
        throw InputError("face index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    if (side != 0 && side != 1)
        throw InputError("face side must be 0 or 1");
    ChainBasisElement out;
    out.coeff = b.coeff;
    out.tuple.reserve(n - 1);
    const int xi = b.tuple[i - 1];
    for (int j = 0; j < n; ++j) {
        if (j == i - 1)
            continue;
        int x = b.tuple[j];
        if (side == 1 && j < i - 1)
            x = shelf.op(x, xi);
        out.tuple.push_back(x);
    }
    if (side == 1)
        out.coeff = coeff.act(b.coeff, xi);
    return out;
}

Chain boundary(const FiniteShelf& shelf, const CoefficientSystem& coeff, const ChainBasisElement& b)
{
    Chain out;
    for (int i = 1; i <= b.degree(); ++i) {
        const int sign = (i % 2 == 1) ? 1 : -1;
        out.add(face(shelf, coeff, 0, i, b), sign);
        out.add(face(shelf, coeff, 1, i, b), -sign);
    }
    return out;
}

Chain boundary(const FiniteShelf& shelf, const CoefficientSystem& coeff, const Chain& c)
{
    Chain out;
    for (const auto& [b, k] : c)
        out.add(boundary(shelf, coeff, b), k);
    return out;
}

IntMatrix boundary_matrix(const FiniteShelf& shelf, const CoefficientSystem& coeff, int n,
                          const ResourceLimits& limits)
{
    const int size = shelf.size();
    const std::size_t cols = checked_dimension(size, coeff.size(), n, limits);
    if (n == 0)
        return IntMatrix(0, cols);
    const std::size_t rows = checked_dimension(size, coeff.size(), n - 1, limits);
    IntMatrix m(rows, cols);
    for (std::size_t c = 0; c < cols; ++c) {
        auto [r, t] = decode(size, n, c);
        for (const auto& [img, k] : boundary(shelf, coeff, ChainBasisElement{r, t}))
            m(encode(size, img.tuple, img.coeff), c) = k;
    }
    return m;
}

std::vector<HomologyGroup> homology_table(const FiniteShelf& shelf, const CoefficientSystem& coeff, int max_n,
                                          bool dual, std::optional<unsigned long> modulus,
                                          const ResourceLimits& limits)
{
    if (max_n < 0)
        throw InputError("max degree must be non-negative");
    std::vector<IntMatrix> d;
    for (int n = 0; n <= max_n + 1; ++n)
        d.push_back(boundary_matrix(shelf, coeff, n, limits));
    std::vector<HomologyGroup> out;
    for (int n = 0; n <= max_n; ++n) {
        if (dual)
            out.push_back(homology_of_pair(d[n + 1].transposed(), d[n].transposed(), modulus));
        else
            out.push_back(homology_of_pair(d[n], d[n + 1], modulus));
    }
    return out;
}

std::vector<Cochain> cocycle_basis(const FiniteShelf& shelf, const CoefficientSystem& coeff, int n,
                                   std::optional<unsigned long> modulus, const ResourceLimits& limits)
{
    if (n < 0)
        throw InputError("cocycle degree must be non-negative");
    IntMatrix coboundary = boundary_matrix(shelf, coeff, n + 1, limits).transposed();
    auto kernel = modulus ? modp::kernel_basis(coboundary, *modulus) : kernel_basis(coboundary);
    std::vector<Cochain> out;
    for (auto& v : kernel)
        out.push_back(Cochain::from_values(n, shelf.size(), std::move(v), coeff.size(), modulus));
    return out;
}

}  // namespace rackhom
