#include "rackhom/dgbial.hpp"

#include "rackhom/errors.hpp"

#include <algorithm>

namespace rackhom {

namespace {

int parity_sign(long k) { return (k % 2 == 0) ? 1 : -1; }

int deg(const Tuple& t) { return static_cast<int>(t.size()); }

WordTensor unit_tensor()
{
    return WordTensor({MixedWord{}, MixedWord{}}, 1);
}

WordTensor word_h(const Tuple& t)
{
    WordTensor out;
    const int n = deg(t);
    for (int i = 0; i < n; ++i) {
        Tuple prefix(t.begin(), t.begin() + i);
        Tuple suffix(t.begin() + i + 1, t.end());
        WordTensor pivot({MixedWord{egen(t[i])}, MixedWord{egen(t[i])}}, 1);
        WordTensor term = multiply(multiply(word_tau(word_coproduct(e_word(prefix))), pivot),
                                   word_coproduct(e_word(suffix)));
        out.add(term, parity_sign(i));
    }
    return out;
}

template <typename F>
BarTensor extend(const BarElement& b, F&& on_tuple)
{
    BarTensor out;
    for (const auto& [t, c] : b)
        out.add(on_tuple(t), c);
    return out;
}

}  // namespace

NormalForm normalize_word(const FiniteShelf& shelf, const MixedWord& w)
{
    NormalForm out;
    for (const Letter& l : w) {
        if (l.graded) {
            out.tuple.push_back(l.x);
            continue;
        }
        for (auto& y : out.tuple)
            y = shelf.op(y, l.x);
        out.a_word.push_back(l.x);
    }
    return out;
}

MixedWord e_word(const Tuple& t)
{
    MixedWord w;
    w.reserve(t.size());
    for (int x : t)
        w.push_back(egen(x));
    return w;
}

int word_degree(const MixedWord& w)
{
    return static_cast<int>(std::count_if(w.begin(), w.end(), [](const Letter& l) { return l.graded; }));
}

WordTensor multiply(const WordTensor& s, const WordTensor& t)
{
    WordTensor out;
    for (const auto& [k1, c1] : s)
        for (const auto& [k2, c2] : t) {
            MixedWord a = k1.first, b = k1.second;
            a.insert(a.end(), k2.first.begin(), k2.first.end());
            b.insert(b.end(), k2.second.begin(), k2.second.end());
            int sign = parity_sign(word_degree(k1.second) * word_degree(k2.first));
            out.add({std::move(a), std::move(b)}, sign * c1 * c2);
        }
    return out;
}

WordTensor word_coproduct(const MixedWord& w)
{
    WordTensor out = unit_tensor();
    for (const Letter& l : w) {
        WordTensor factor;
        if (l.graded) {
            factor.add({MixedWord{l}, MixedWord{gen(l.x)}}, 1);
            factor.add({MixedWord{}, MixedWord{l}}, 1);
        } else {
            factor.add({MixedWord{l}, MixedWord{l}}, 1);
        }
        out = multiply(out, factor);
    }
    return out;
}

WordTensor word_tau(const WordTensor& t)
{
    WordTensor out;
    for (const auto& [k, c] : t)
        out.add({k.second, k.first}, parity_sign(word_degree(k.first) * word_degree(k.second)) * c);
    return out;
}

BarTensor reduce(const FiniteShelf& shelf, const WordTensor& t)
{
    BarTensor out;
    for (const auto& [k, c] : t)
        out.add({normalize_word(shelf, k.first).tuple, normalize_word(shelf, k.second).tuple}, c);
    return out;
}

BarElement diff(const FiniteShelf& shelf, const BarElement& b)
{
    // d(e_x) = 1 - x as a derivation; the word with x inserted is then
    // normalized and its A-part forgotten.
    BarElement out;
    for (const auto& [t, c] : b) {
        const int n = deg(t);
        for (int i = 0; i < n; ++i) {
            MixedWord dropped, replaced;
            for (int j = 0; j < n; ++j) {
                if (j != i)
                    dropped.push_back(egen(t[j]));
                replaced.push_back(j == i ? gen(t[j]) : egen(t[j]));
            }
            Integer s = parity_sign(i) * c;
            out.add(normalize_word(shelf, dropped).tuple, s);
            out.add(normalize_word(shelf, replaced).tuple, -s);
        }
    }
    return out;
}

Integer counit(const BarElement& b) { return b.coefficient(Tuple{}); }

int unshuffle_sign(int n, const std::vector<int>& subset)
{
    std::vector<int> perm;
    for (int i = 1; i <= n; ++i)
        if (!std::binary_search(subset.begin(), subset.end(), i))
            perm.push_back(i);
    perm.insert(perm.end(), subset.begin(), subset.end());
    long inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b])
                ++inversions;
    return parity_sign(inversions);
}

Tuple face_set(const FiniteShelf& shelf, int side, const std::vector<int>& subset, const Tuple& t)
{
    Tuple out = t;
    for (auto it = subset.rbegin(); it != subset.rend(); ++it) {
        const int i = *it - 1;
        if (i < 0 || i >= deg(out))
            throw InputError("face index out of range");
        if (side == 1)
            for (int j = 0; j < i; ++j)
                out[j] = shelf.op(out[j], out[i]);
        out.erase(out.begin() + i);
    }
    return out;
}

BarTensor unshuffle_coproduct_unchecked(const FiniteShelf& shelf, const BarElement& b)
{
    return extend(b, [&](const Tuple& t) {
        BarTensor out;
        const int n = deg(t);
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> s, sc;
            for (int i = 1; i <= n; ++i)
                ((mask >> (i - 1)) & 1u ? s : sc).push_back(i);
            out.add({face_set(shelf, 0, s, t), face_set(shelf, 1, sc, t)}, unshuffle_sign(n, s));
        }
        return out;
    });
}

BarTensor coproduct(const FiniteShelf& shelf, const BarElement& b, CoproductMethod method)
{
    if (method == CoproductMethod::unshuffle) {
        if (!shelf.is_rack())
            throw Unsupported("unshuffle coproduct formula is stated for racks only");
        return unshuffle_coproduct_unchecked(shelf, b);
    }
    return extend(b, [&](const Tuple& t) { return reduce(shelf, word_coproduct(e_word(t))); });
}

BarTensor tau(const BarTensor& t)
{
    BarTensor out;
    for (const auto& [k, c] : t)
        out.add({k.second, k.first}, parity_sign(deg(k.first) * deg(k.second)) * c);
    return out;
}

BarTensor tensor_diff(const FiniteShelf& shelf, const BarTensor& t)
{
    BarTensor out;
    for (const auto& [k, c] : t) {
        for (const auto& [a, ca] : diff(shelf, bar(k.first)))
            out.add({a, k.second}, ca * c);
        const int sign = parity_sign(deg(k.first));
        for (const auto& [b, cb] : diff(shelf, bar(k.second)))
            out.add({k.first, b}, sign * cb * c);
    }
    return out;
}

BarTensor homotopy_h(const FiniteShelf& shelf, const BarElement& b)
{
    return extend(b, [&](const Tuple& t) { return reduce(shelf, word_h(t)); });
}

BarTensor dendri(const FiniteShelf& shelf, const BarElement& b, Side side)
{
    return extend(b, [&](const Tuple& t) {
        if (t.empty())
            throw Unsupported("half coproducts are defined in positive degree only");
        const Element x1 = t.front();
        WordTensor head = side == Side::left ? WordTensor({MixedWord{egen(x1)}, MixedWord{gen(x1)}}, 1)
                                             : WordTensor({MixedWord{}, MixedWord{egen(x1)}}, 1);
        Tuple rest(t.begin() + 1, t.end());
        return reduce(shelf, multiply(head, word_coproduct(e_word(rest))));
    });
}

BarTensor homotopy_hbar(const FiniteShelf& shelf, const BarElement& b)
{
    return extend(b, [&](const Tuple& t) {
        if (t.empty())
            return BarTensor();
        const Element x1 = t.front();
        WordTensor head({MixedWord{gen(x1)}, MixedWord{egen(x1)}}, -1);
        Tuple rest(t.begin() + 1, t.end());
        return reduce(shelf, multiply(head, word_h(rest)));
    });
}

BarTensor3 apply_left(const BarTensor& t, const BarMap& f)
{
    BarTensor3 out;
    for (const auto& [k, c] : t)
        for (const auto& [img, ci] : f(bar(k.first)))
            out.add({img.first, img.second, k.second}, c * ci);
    return out;
}

BarTensor3 apply_right(const BarTensor& t, const BarMap& f)
{
    BarTensor3 out;
    for (const auto& [k, c] : t)
        for (const auto& [img, ci] : f(bar(k.second)))
            out.add({k.first, img.first, img.second}, c * ci);
    return out;
}

BarElement counit_left(const BarTensor& t)
{
    BarElement out;
    for (const auto& [k, c] : t)
        if (k.first.empty())
            out.add(k.second, c);
    return out;
}

BarElement counit_right(const BarTensor& t)
{
    BarElement out;
    for (const auto& [k, c] : t)
        if (k.second.empty())
            out.add(k.first, c);
    return out;
}

}  // namespace rackhom
