#pragma once

#include "rackhom/linear_combination.hpp"
#include "rackhom/shelf.hpp"

#include <array>
#include <compare>
#include <functional>
#include <utility>
#include <vector>

namespace rackhom {

// A generator of B(X): x (degree 0) or e_x (degree 1).
struct Letter {
    bool graded = false;
    Element x = 0;

    auto operator<=>(const Letter&) const = default;
};

inline Letter gen(Element x) { return {false, x}; }
inline Letter egen(Element x) { return {true, x}; }

using MixedWord = std::vector<Letter>;

struct NormalForm {
    std::vector<Element> a_word;  // the degree-0 letters, in order
    Tuple tuple;                  // the e-letters after moving all x to the left

    bool operator==(const NormalForm&) const = default;
};

// Canonical form a * e_{t1}...e_{tn} of a monomial, using e_y x = x e_{y<x}.
NormalForm normalize_word(const FiniteShelf& shelf, const MixedWord& w);

// Elements of Bbar, Bbar (x) Bbar and Bbar^{(x)3} on the tuple bases. Degree
// of a key is its tuple length; elements may mix degrees.
using BarElement = LinearCombination<Tuple>;
using TensorKey = std::pair<Tuple, Tuple>;
using BarTensor = LinearCombination<TensorKey>;
using Tensor3Key = std::array<Tuple, 3>;
using BarTensor3 = LinearCombination<Tensor3Key>;

inline BarElement bar(const Tuple& t, const Integer& c = 1) { return BarElement(t, c); }
inline BarTensor tensor(const Tuple& a, const Tuple& b, const Integer& c = 1) { return BarTensor({a, b}, c); }

// Monomials of B in the e-generators and their tensors, before reduction.
using WordTensor = LinearCombination<std::pair<MixedWord, MixedWord>>;

MixedWord e_word(const Tuple& t);
int word_degree(const MixedWord& w);
// (a1 (x) b1)(a2 (x) b2) = (-1)^{|b1||a2|} a1a2 (x) b1b2
WordTensor multiply(const WordTensor& s, const WordTensor& t);
WordTensor word_coproduct(const MixedWord& w);
WordTensor word_tau(const WordTensor& t);
// Project to Bbar (x) Bbar: both sides to their canonical tuple.
BarTensor reduce(const FiniteShelf& shelf, const WordTensor& t);

BarElement diff(const FiniteShelf& shelf, const BarElement& b);
Integer counit(const BarElement& b);

enum class CoproductMethod { multiplicative, unshuffle };

// The unshuffle method requires a rack and throws Unsupported otherwise.
BarTensor coproduct(const FiniteShelf& shelf, const BarElement& b,
                    CoproductMethod method = CoproductMethod::multiplicative);
// Unshuffle formula without the rack check.
BarTensor unshuffle_coproduct_unchecked(const FiniteShelf& shelf, const BarElement& b);
// Sign of the permutation listing {1..n} \ S first, then S (both increasing).
int unshuffle_sign(int n, const std::vector<int>& subset);
// delta^side_S applied to t (highest index first); S is 1-based and sorted.
Tuple face_set(const FiniteShelf& shelf, int side, const std::vector<int>& subset, const Tuple& t);

BarTensor tau(const BarTensor& t);
// d (x) Id + Id (x) d, with the sign (-1)^{|a|} on the second term.
BarTensor tensor_diff(const FiniteShelf& shelf, const BarTensor& t);

BarTensor homotopy_h(const FiniteShelf& shelf, const BarElement& b);

enum class Side { left, right };

// Half coproducts on Bbar^+; throws Unsupported on a degree-0 term.
BarTensor dendri(const FiniteShelf& shelf, const BarElement& b, Side side);

// hbar(e_{x1} w) = -(x1 (x) e_{x1}) h(w), zero in degree <= 1.
BarTensor homotopy_hbar(const FiniteShelf& shelf, const BarElement& b);

// Degree-0 maps Bbar -> Bbar (x) Bbar applied to one tensor factor.
using BarMap = std::function<BarTensor(const BarElement&)>;
BarTensor3 apply_left(const BarTensor& t, const BarMap& f);   // (F (x) Id)
BarTensor3 apply_right(const BarTensor& t, const BarMap& f);  // (Id (x) F)
BarElement counit_left(const BarTensor& t);                   // (eps (x) Id)
BarElement counit_right(const BarTensor& t);                  // (Id (x) eps)

}  // namespace rackhom
