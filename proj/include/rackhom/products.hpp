#pragma once

#include "rackhom/basis.hpp"
#include "rackhom/cochain.hpp"
#include "rackhom/dgbial.hpp"
#include "rackhom/exactlin.hpp"
#include "rackhom/shelf.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace rackhom {

// Signs in
//   f cup g - (-1)^{|f||g|} g cup f          = kCommutativitySign * d*(witness_c(f, g))
//   f right g - (-1)^{|f||g|} g left f       = kZinbielSign * d*(witness_z(f, g))
//   (d(x)Id + Id(x)d) hbar + hbar d          = kHbarSign * (tau leftDelta - rightDelta)
// for cocycles f, g. The witnesses carry the factor (-1)^{|W|}, like d*.
inline constexpr int kCommutativitySign = 1;
inline constexpr int kZinbielSign = 1;
inline constexpr int kHbarSign = -1;

// (d*f) = (-1)^{|f|} f o d, for any coefficient system.
Cochain coboundary(const FiniteShelf& shelf, const CoefficientSystem& coeff, const Cochain& f);

// (f (x) g)(a (x) b) = (-1)^{|g||a|} f(a) g(b), summed over a tensor.
Integer evaluate_tensor(const Cochain& f, const Cochain& g, const BarTensor& t);

// f cup g = (f (x) g) Delta. Trivial coefficients only.
Cochain cup(const FiniteShelf& shelf, const CoefficientSystem& coeff, const Cochain& f, const Cochain& g);
Cochain cup(const FiniteShelf& shelf, const Cochain& f, const Cochain& g);

// (f (x) g) composed with the half coproduct on `side`; |f|, |g| >= 1.
Cochain half_cup(const FiniteShelf& shelf, const Cochain& f, const Cochain& g, Side side);

enum class WitnessKind { commutativity, zinbielity };

// (-1)^{|f|+|g|-1} (f (x) g) h, resp. with hbar.
Cochain witness(const FiniteShelf& shelf, const Cochain& f, const Cochain& g, WitnessKind kind);

// (x.f)(x1..xn) = f(x1<x, ..., xn<x). Trivial coefficients only.
Cochain x_action(const FiniteShelf& shelf, Element x, const Cochain& f);

// Solves d*g = f for cochains of a fixed degree, reusing one factorization.
class CoboundarySolver {
public:
    CoboundarySolver(const FiniteShelf& shelf, const CoefficientSystem& coeff, int degree,
                     std::optional<unsigned long> modulus = std::nullopt, const ResourceLimits& limits = {});
    ~CoboundarySolver();
    CoboundarySolver(CoboundarySolver&&) noexcept;

    int degree() const { return degree_; }
    // Some g with d*g = f, or nullopt.
    std::optional<Cochain> preimage(const Cochain& f) const;

private:
    struct State;
    int degree_;
    std::unique_ptr<State> state_;
};

std::optional<Cochain> is_coboundary(const FiniteShelf& shelf, const CoefficientSystem& coeff, const Cochain& f,
                                     const ResourceLimits& limits = {});

// A cocycle together with the complex it lives in.
struct CohomologyClass {
    Cochain representative;
    CoefficientSystem coeff = CoefficientSystem::trivial();
};

// Throws ContractViolation when f is not a cocycle.
CohomologyClass make_class(const FiniteShelf& shelf, const CoefficientSystem& coeff, Cochain f);

// Coproduct induced on H_*(X, F_p) in degrees 0..max_degree, in class bases
// chosen inside Ker d and completed by a seeded random complement.
struct InducedCoproduct {
    unsigned long p = 2;
    int max_degree = 0;
    std::vector<std::size_t> dims;                   // dim H_k
    std::vector<std::vector<IntVector>> reps;        // reps[k][a]: cycle in C_k
    // table[k][a][i]: dims[i] x dims[k-i], coefficient of c_i_b (x) c_{k-i}_c in Delta(c_k_a)
    std::vector<std::vector<std::vector<IntMatrix>>> table;
    // The components of Delta(cycle) in L(x)L, R(x)L, L(x)R all vanished.
    bool complement_components_vanish = true;

    const Integer& coefficient(int k, std::size_t a, int i, std::size_t b, std::size_t c) const
    {
        return table[k][a][i](b, c);
    }
};

InducedCoproduct induced_coproduct(const FiniteShelf& shelf, unsigned long p, int max_degree, std::uint64_t seed,
                                   const ResourceLimits& limits = {});

// First violated instance of coassociativity / counit, as text; empty if none.
std::string induced_coassociativity_failure(const InducedCoproduct& c);
std::string induced_counit_failure(const InducedCoproduct& c);

// Sign detection at the lowest degree where the relation is not 0 = 0
// (degree 2 for hbar; total degree <= 4 over cocycle bases for the others).
// Returns +1 or -1, or 0 if neither sign fits or nothing was informative.
int detect_hbar_sign(const FiniteShelf& shelf);
int detect_commutativity_sign(const FiniteShelf& shelf);
int detect_zinbiel_sign(const FiniteShelf& shelf);

}  // namespace rackhom
