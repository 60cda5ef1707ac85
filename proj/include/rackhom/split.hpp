#pragma once

#include "rackhom/basis.hpp"
#include "rackhom/cochain.hpp"
#include "rackhom/dgbial.hpp"
#include "rackhom/exactlin.hpp"
#include "rackhom/shelf.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rackhom {

// Some x_i = x_{i+1}.
bool has_repeat(const Tuple& t);
// Some x_i = x_{i+1} with i >= 2 (1-based): the late degenerate tuples.
bool has_late_repeat(const Tuple& t);

// (e_{x1}-e_{x2})(e_{x2}-e_{x3})...(e_{x(n-1)}-e_{xn}) e_{xn}; 1 for the empty
// tuple, 0 when t has a repeat.
BarElement nondegenerate_generator(const Tuple& t);

// (e_{x1}-e_{y1})...(e_{x(n-1)}-e_{y(n-1)}) e_{xn}, with ys one shorter than xs.
BarElement complement2_generator(const Tuple& xs, const Tuple& ys);
// The same element as a combination of nondegenerate generators, keyed by
// their (non-repeating) tuples.
BarElement rewrite_complement2(const Tuple& xs, const Tuple& ys);

// Change of basis in degree n between tuples and {N-generators} u {D-tuples}.
// Columns of `generators` are g(t) for non-repeating t (lex order) followed
// by the repeating tuples; projectors act on tuple coordinates.
struct NDDecomposition {
    int degree = 0;
    std::vector<Tuple> n_tuples;
    std::vector<Tuple> d_tuples;
    IntMatrix generators;
    IntMatrix inverse;  // generators^{-1}
    IntMatrix proj_n;
    IntMatrix proj_d;
};

// Cached per (table, degree); the reference stays valid for the program lifetime.
const NDDecomposition& nd_decomposition(const FiniteShelf& shelf, int n, const ResourceLimits& limits = {});

// b = N-part + D-part. Requires a spindle.
std::pair<BarElement, BarElement> nd_project(const FiniteShelf& shelf, const BarElement& b);

// (x1, ..., xn) -> (x1, x1, x2, ..., xn); requires a spindle and positive degree.
BarElement s_map(const FiniteShelf& shelf, const BarElement& b);
// On B: doubles the first e-letter of a word.
MixedWord s_word(const MixedWord& w);

struct LateDecomposition {
    int degree = 0;
    std::vector<Tuple> late_tuples;
    std::vector<BarElement> s_part;  // s(g(t)), t non-repeating of degree n-1
};

LateDecomposition late_split(const FiniteShelf& shelf, int n);

enum class SplitPart { rack, quandle, degenerate, late, s_image };

std::string to_string(SplitPart part);

// A basis of the part in degree n. Basis vector j has coefficient 1 on
// pivots[j] and 0 on every other pivot.
struct PartBasis {
    std::vector<BarElement> vectors;
    std::vector<Tuple> pivots;
};

PartBasis part_basis(const FiniteShelf& shelf, SplitPart part, int n);

// d restricted to the part, C_n -> C_{n-1} in part coordinates; throws
// ContractViolation naming the basis vector when d leaves the part.
IntMatrix part_boundary(const FiniteShelf& shelf, SplitPart part, int n, const ResourceLimits& limits = {});

// Empty when d maps the degree-n part into the degree-(n-1) part.
std::string closure_failure(const FiniteShelf& shelf, SplitPart part, int n);

std::vector<HomologyGroup> split_homology(const FiniteShelf& shelf, SplitPart part, int max_n, bool dual,
                                          std::optional<unsigned long> modulus = std::nullopt,
                                          const ResourceLimits& limits = {});

// f o P_N and f o P_D.
Cochain quandle_part(const FiniteShelf& shelf, const Cochain& f);
Cochain degenerate_part(const FiniteShelf& shelf, const Cochain& f);

struct SplittingReport {
    bool cup_restricts = true;      // (a)
    bool zinbiel_ideal = true;      // (b)
    std::size_t pairs_checked = 0;
    std::size_t half_cups_leaving_n = 0;  // (c), informational
    std::string first_failure;

    bool passed() const { return cup_restricts && zinbiel_ideal; }
};

// (a) quandle cocycles f, g: the D-part of f cup g is a coboundary;
// (b) D-supported cocycle f, any cocycle g: the N-parts of f<g and g<f are
//     coboundaries. Over Z, or F_p when a modulus is given, total degree <= max_n.
SplittingReport verify_splitting(const FiniteShelf& shelf, int max_n,
                                 std::optional<unsigned long> modulus = std::nullopt,
                                 const ResourceLimits& limits = {});

// For x != y != z: the B^D (x) B^N component of Delta(g(x,y,z)), and the
// closed form e_z e_z (x) (e_{X<Y} - e_{X<z} - e_Y + e_{Y<z}), X = x<z, Y = y<z.
std::pair<BarTensor, BarTensor> degree3_obstruction(const FiniteShelf& shelf, Element x, Element y, Element z);

}  // namespace rackhom
