#pragma once

#include "rackhom/basis.hpp"
#include "rackhom/cochain.hpp"
#include "rackhom/exactlin.hpp"
#include "rackhom/linear_combination.hpp"
#include "rackhom/shelf.hpp"

#include <compare>
#include <optional>
#include <vector>

namespace rackhom {

// Basis element r x1...xn of C_n(X, ZS). `coeff` is 0 for trivial coefficients.
struct ChainBasisElement {
    int coeff = 0;
    Tuple tuple;

    int degree() const { return static_cast<int>(tuple.size()); }
    auto operator<=>(const ChainBasisElement&) const = default;
};

using Chain = LinearCombination<ChainBasisElement>;

// side 0 deletes x_i; side 1 deletes x_i and translates everything to its
// left (coefficient included) by x_i. `i` is 1-based.
ChainBasisElement face(const FiniteShelf& shelf, const CoefficientSystem& coeff, int side, int i,
                       const ChainBasisElement& b);

// sum_i (-1)^{i-1} (face0_i - face1_i)
Chain boundary(const FiniteShelf& shelf, const CoefficientSystem& coeff, const ChainBasisElement& b);
Chain boundary(const FiniteShelf& shelf, const CoefficientSystem& coeff, const Chain& c);

// Matrix of C_n -> C_{n-1} in basis order. n = 0 gives the 0 x dim(C_0) map.
IntMatrix boundary_matrix(const FiniteShelf& shelf, const CoefficientSystem& coeff, int n,
                          const ResourceLimits& limits = {});

// H_0..H_max_n of the chain complex, or of the dual complex when `dual`.
std::vector<HomologyGroup> homology_table(const FiniteShelf& shelf, const CoefficientSystem& coeff, int max_n,
                                          bool dual, std::optional<unsigned long> modulus = std::nullopt,
                                          const ResourceLimits& limits = {});

// Basis of the n-cocycles (over Z, or F_p when a modulus is given).
std::vector<Cochain> cocycle_basis(const FiniteShelf& shelf, const CoefficientSystem& coeff, int n,
                                   std::optional<unsigned long> modulus = std::nullopt,
                                   const ResourceLimits& limits = {});

}  // namespace rackhom
