#include "rackhom/verify.hpp"

#include "rackhom/complex.hpp"
#include "rackhom/dgbial.hpp"
#include "rackhom/errors.hpp"
#include "rackhom/products.hpp"
#include "rackhom/split.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

namespace rackhom {

namespace {

using Moduli = std::vector<std::optional<unsigned long>>;

Moduli moduli_for(const VerifyOptions& o)
{
    if (o.modulus)
        return {o.modulus};
    return {std::nullopt, 2ul, 3ul};
}

Json modulus_json(std::optional<unsigned long> p) { return p ? Json(*p) : Json(nullptr); }

// Records checks and keeps the first failure with a rerunnable instance.
class Recorder {
public:
    Recorder(SuiteResult& r, const FiniteShelf& shelf) : r_(r), shelf_(shelf_to_json(shelf)) {}

    bool check(bool ok, const std::string& identity, const std::function<Json()>& element)
    {
        ++r_.checks;
        if (!ok && r_.passed) {
            r_.passed = false;
            r_.failure = identity;
            r_.instance = Json{{"shelf", shelf_}, {"identity", identity}, {"element", element()}};
        }
        return ok;
    }

    void note(std::string s) { r_.notes.push_back(std::move(s)); }

private:
    SuiteResult& r_;
    Json shelf_;
};

Json tuple_element(const Tuple& t) { return Json{{"tuple", t}}; }

Json cochains_element(std::initializer_list<const Cochain*> fs, std::optional<unsigned long> p = std::nullopt)
{
    Json list = Json::array();
    for (const Cochain* f : fs)
        list.push_back(cochain_to_json(*f));
    return Json{{"cochains", list}, {"modulus", modulus_json(p)}};
}

BarElement to_bar(const Chain& c)
{
    BarElement out;
    for (const auto& [b, v] : c)
        out.add(b.tuple, v);
    return out;
}

// d (x) Id and the Koszul-signed Id (x) d separately.
BarTensor left_diff(const FiniteShelf& shelf, const BarTensor& t)
{
    BarTensor out;
    for (const auto& [k, c] : t)
        for (const auto& [a, ca] : diff(shelf, bar(k.first)))
            out.add({a, k.second}, c * ca);
    return out;
}

BarTensor right_diff(const FiniteShelf& shelf, const BarTensor& t)
{
    BarTensor out;
    for (const auto& [k, c] : t) {
        const int sign = k.first.size() % 2 ? -1 : 1;
        for (const auto& [b, cb] : diff(shelf, bar(k.second)))
            out.add({k.first, b}, sign * c * cb);
    }
    return out;
}

Cochain random_cochain(int degree, int shelf_size, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> dist(-3, 3);
    Cochain f(degree, shelf_size);
    for (std::size_t i = 0; i < f.dimension(); ++i)
        f.set_index(i, dist(rng));
    return f;
}

int sign_of(int e) { return e % 2 ? -1 : 1; }

// Parity of the permutation listing the complement of S, then S, by inversions.
int inversion_sign(int n, const std::vector<int>& subset)
{
    std::vector<int> perm;
    for (int i = 1; i <= n; ++i)
        if (std::find(subset.begin(), subset.end(), i) == subset.end())
            perm.push_back(i);
    perm.insert(perm.end(), subset.begin(), subset.end());
    int inv = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
            inv += perm[a] > perm[b];
    return sign_of(inv);
}

void complex_suite(const FiniteShelf& shelf, const VerifyOptions& o, Recorder& rec)
{
    std::vector<CoefficientSystem> coeffs{CoefficientSystem::trivial(), CoefficientSystem::self(shelf)};
    if (o.coeff)
        coeffs.push_back(*o.coeff);
    for (const auto& coeff : coeffs) {
        auto element = [&](int r, const Tuple& t, Json extra = Json::object()) {
            Json e{{"coefficient_system", coeff.name()}, {"coeff", r}, {"tuple", t}};
            if (coeff.kind() == CoefficientSystem::Kind::xset)
                e["xset"] = xset_to_json(*coeff.action());
            for (auto& [k, v] : extra.items())
                e[k] = v;
            return e;
        };
        for (int n = 0; n <= o.max_degree; ++n) {
            checked_dimension(shelf.size(), coeff.size(), n, o.limits);
            for (int r = 0; r < coeff.size(); ++r)
                for (const Tuple& t : all_tuples(shelf.size(), n)) {
                    ChainBasisElement b{r, t};
                    rec.check(boundary(shelf, coeff, boundary(shelf, coeff, b)).empty(), "boundary squared is zero",
                              [&] { return element(r, t); });
                    for (int j = 2; j <= n; ++j)
                        for (int i = 1; i < j; ++i)
                            for (int e = 0; e < 2; ++e)
                                for (int h = 0; h < 2; ++h) {
                                    auto lhs = face(shelf, coeff, e, i, face(shelf, coeff, h, j, b));
                                    auto rhs = face(shelf, coeff, h, j - 1, face(shelf, coeff, e, i, b));
                                    rec.check(lhs == rhs, "cube identity", [&] {
                                        return element(r, t, Json{{"i", i}, {"j", j}, {"eps", e}, {"eta", h}});
                                    });
                                }
                }
        }
    }
}

void dgb_suite(const FiniteShelf& shelf, const VerifyOptions& o, Recorder& rec)
{
    const auto trivial = CoefficientSystem::trivial();
    const int size = shelf.size();
    BarMap delta = [&](const BarElement& b) { return coproduct(shelf, b); };
    std::size_t disagreements = 0;
    for (int n = 0; n <= o.max_degree; ++n) {
        checked_dimension(size, 1, n, o.limits);
        for (const Tuple& t : all_tuples(size, n)) {
            auto el = [&] { return tuple_element(t); };
            const BarElement b = bar(t);
            const BarElement db = diff(shelf, b);
            const BarTensor d = coproduct(shelf, b);
            rec.check(diff(shelf, db).empty(), "d squared is zero in Bbar", el);
            rec.check(db == to_bar(boundary(shelf, trivial, ChainBasisElement{0, t})),
                      "diff agrees with the rack boundary", el);
            rec.check(counit_left(d) == b, "left counit law", el);
            rec.check(counit_right(d) == b, "right counit law", el);
            rec.check(apply_left(d, delta) == apply_right(d, delta), "coassociativity", el);
            rec.check(coproduct(shelf, db) == tensor_diff(shelf, d), "coderivation law", el);
            rec.check(tau(tau(d)) == d, "tau squared is the identity", el);
            rec.check(tensor_diff(shelf, tensor_diff(shelf, d)).empty(), "tensor differential squares to zero", el);
            const BarTensor u = unshuffle_coproduct_unchecked(shelf, b);
            if (shelf.is_rack())
                rec.check(u == d, "multiplicative and unshuffle coproducts agree", el);
            else if (!(u == d))
                ++disagreements;
        }
        std::vector<int> all_positions;
        for (int i = 1; i <= n; ++i)
            all_positions.push_back(i);
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> s;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1)
                    s.push_back(i + 1);
            rec.check(unshuffle_sign(n, s) == inversion_sign(n, s), "unshuffle sign by inversion count",
                      [&] { return Json{{"n", n}, {"subset", s}}; });
        }
    }
    rec.check(counit(bar(Tuple{})) == 1 && coproduct(shelf, bar(Tuple{})) == tensor(Tuple{}, Tuple{}),
              "unit is group-like", [] { return Json{{"tuple", Tuple{}}}; });
    for (int x = 0; x < size; ++x)
        for (int y = 0; y < size; ++y) {
            BarTensor expected = tensor({x, y}, {}) + tensor({}, {x, y}) + tensor({x}, {y}) -
                                 tensor({y}, {shelf.op(x, y)});
            rec.check(coproduct(shelf, bar({x, y})) == expected, "closed form of Delta(e_x e_y)",
                      [&] { return tuple_element({x, y}); });
            rec.check(diff(shelf, bar({x, y})) == bar({shelf.op(x, y)}) - bar({x}), "closed form of d(e_x e_y)",
                      [&] { return tuple_element({x, y}); });
        }
    if (!shelf.is_rack())
        rec.note("not a rack: the unshuffle formula is not claimed here; it disagreed with the multiplicative "
                 "coproduct on " + std::to_string(disagreements) + " tuples");
}

void homotopy_suite(const FiniteShelf& shelf, const VerifyOptions& o, Recorder& rec)
{
    const int size = shelf.size();
    for (int n = 0; n <= o.max_degree; ++n) {
        checked_dimension(size, 1, n, o.limits);
        for (const Tuple& t : all_tuples(size, n)) {
            const BarElement b = bar(t);
            const BarTensor d = coproduct(shelf, b);
            BarTensor lhs = tensor_diff(shelf, homotopy_h(shelf, b)) + homotopy_h(shelf, diff(shelf, b));
            rec.check(lhs == d - tau(d), "dh + hd = Delta - tau Delta", [&] { return tuple_element(t); });
        }
    }
    rec.check(homotopy_h(shelf, bar(Tuple{})).empty(), "h(1) = 0", [] { return tuple_element({}); });
    for (int x = 0; x < size; ++x) {
        rec.check(homotopy_h(shelf, bar({x})) == tensor({x}, {x}), "h(e_x) = e_x (x) e_x",
                  [&] { return tuple_element({x}); });
        for (int y = 0; y < size; ++y) {
            BarTensor expected =
                tensor({y}, {x, y}) + tensor({x}, {x, y}) - tensor({x, y}, {shelf.op(x, y)}) - tensor({x, y}, {y});
            rec.check(homotopy_h(shelf, bar({x, y})) == expected, "closed form of h(e_x e_y)",
                      [&] { return tuple_element({x, y}); });
        }
    }
}

void dendriform_suite(const FiniteShelf& shelf, const VerifyOptions& o, Recorder& rec)
{
    const int size = shelf.size();
    BarMap delta = [&](const BarElement& b) { return coproduct(shelf, b); };
    BarMap left = [&](const BarElement& b) { return dendri(shelf, b, Side::left); };
    BarMap right = [&](const BarElement& b) { return dendri(shelf, b, Side::right); };
    for (int n = 1; n <= o.max_degree; ++n) {
        checked_dimension(size, 1, n, o.limits);
        for (const Tuple& t : all_tuples(size, n)) {
            auto el = [&] { return tuple_element(t); };
            const BarElement b = bar(t);
            const BarElement db = diff(shelf, b);
            const BarTensor l = left(b), r = right(b), d = delta(b);
            rec.check(l + r == d, "left plus right half coproduct is Delta", el);
            rec.check(apply_left(l, left) == apply_right(l, delta), "codendriform axiom 1", el);
            rec.check(apply_right(r, right) == apply_left(r, delta), "codendriform axiom 2", el);
            rec.check(apply_right(r, left) == apply_left(l, right), "codendriform axiom 3", el);
            if (n >= 2) {
                rec.check(left(db) == tensor_diff(shelf, l), "d.g. codendriform axiom 4", el);
                rec.check(right(db) == tensor_diff(shelf, r), "d.g. codendriform axiom 5", el);
            } else {
                rec.check(delta(db) == left_diff(shelf, l) + right_diff(shelf, r), "d.g. codendriform axiom 6", el);
            }
            BarTensor lhs = tensor_diff(shelf, homotopy_hbar(shelf, b)) + homotopy_hbar(shelf, db);
            BarTensor rhs = tau(l) - r;
            rhs *= kHbarSign;
            rec.check(lhs == rhs, "d hbar + hbar d = sign * (tau leftDelta - rightDelta)", el);
        }
    }
    for (int x = 0; x < size; ++x) {
        rec.check(homotopy_hbar(shelf, bar({x})).empty(), "hbar(e_x) = 0", [&] { return tuple_element({x}); });
        for (int y = 0; y < size; ++y) {
            auto el = [&] { return tuple_element({x, y}); };
            rec.check(left(bar({x, y})) == tensor({x, y}, {}) + tensor({x}, {y}), "closed form of leftDelta(e_x e_y)",
                      el);
            rec.check(right(bar({x, y})) == tensor({}, {x, y}) - tensor({y}, {shelf.op(x, y)}),
                      "closed form of rightDelta(e_x e_y)", el);
            rec.check(homotopy_hbar(shelf, bar({x, y})) == tensor({y}, {x, y}), "closed form of hbar(e_x e_y)", el);
        }
    }
    rec.note("hbar relation sign: " + std::to_string(kHbarSign));
}

// Cocycle bases per degree 1..max over the given ring.
std::map<int, std::vector<Cochain>> cocycles(const FiniteShelf& shelf, int max_n, std::optional<unsigned long> p,
                                             const ResourceLimits& limits)
{
    std::map<int, std::vector<Cochain>> out;
    for (int n = 1; n <= max_n; ++n)
        out[n] = cocycle_basis(shelf, CoefficientSystem::trivial(), n, p, limits);
    return out;
}

void cup_suite(const FiniteShelf& shelf, const VerifyOptions& o, Recorder& rec)
{
    const auto trivial = CoefficientSystem::trivial();
    const int size = shelf.size();
    const int max = o.max_degree;
    std::mt19937_64 rng(o.seed);
    for (int n = 0; n <= max; ++n)
        checked_dimension(size, 1, n, o.limits);
    for (int a = 0; a <= max; ++a)
        for (int b = 0; a + b <= max; ++b)
            for (int c = 0; a + b + c <= max; ++c) {
                if (a + b + c == 0)
                    continue;
                Cochain f = random_cochain(a, size, rng), g = random_cochain(b, size, rng),
                        k = random_cochain(c, size, rng);
                rec.check(cup(shelf, cup(shelf, f, g), k) == cup(shelf, f, cup(shelf, g, k)), "cup associativity",
                          [&] { return cochains_element({&f, &g, &k}); });
            }
    for (int a = 0; a < max; ++a)
        for (int b = 0; a + b < max; ++b) {
            Cochain f = random_cochain(a, size, rng), g = random_cochain(b, size, rng);
            Cochain lhs = coboundary(shelf, trivial, cup(shelf, f, g));
            Cochain rhs = cup(shelf, coboundary(shelf, trivial, f), g) +
                          Integer(sign_of(a)) * cup(shelf, f, coboundary(shelf, trivial, g));
            rec.check(lhs == rhs, "d* is a derivation of the cup product", [&] { return cochains_element({&f, &g}); });
        }
    if (max >= 2) {
        Cochain f = random_cochain(1, size, rng), g = random_cochain(1, size, rng);
        Cochain fg = cup(shelf, f, g);
        for (int x = 0; x < size; ++x)
            for (int y = 0; y < size; ++y)
                rec.check(fg.at({x, y}) == -f.at({x}) * g.at({y}) + f.at({y}) * g.at({shelf.op(x, y)}),
                          "degree (1,1) cup formula", [&] {
                              Json e = cochains_element({&f, &g});
                              e["tuple"] = Tuple{x, y};
                              return e;
                          });
        Cochain zero(1, size);
        rec.check(witness(shelf, f, zero, WitnessKind::commutativity).is_zero(), "witness(f, 0) = 0",
                  [&] { return cochains_element({&f}); });
        Cochain w = witness(shelf, f, g, WitnessKind::commutativity);
        for (int x = 0; x < size; ++x)
            rec.check(w.at({x}) == f.at({x}) * g.at({x}), "degree (1,1) commutativity witness",
                      [&] { return cochains_element({&f, &g}); });
    }
    if (max >= 4) {
        Cochain f = random_cochain(2, size, rng), g = random_cochain(2, size, rng);
        Cochain fg = cup(shelf, f, g);
        auto op = [&](int u, int v) { return shelf.op(u, v); };
        for (const Tuple& t : all_tuples(size, 4)) {
            const int x = t[0], y = t[1], z = t[2], s = t[3];
            Integer expected = f.at({x, y}) * g.at({z, s}) + f.at({z, s}) * g.at({op(op(x, z), s), op(op(y, z), s)}) -
                               f.at({x, z}) * g.at({op(y, z), s}) + f.at({x, s}) * g.at({op(y, s), op(z, s)}) +
                               f.at({y, z}) * g.at({op(op(x, y), z), s}) -
                               f.at({y, s}) * g.at({op(op(x, y), s), op(z, s)});
            rec.check(fg.at(t) == expected, "degree (2,2) cup formula", [&] {
                Json e = cochains_element({&f, &g});
                e["tuple"] = t;
                return e;
            });
        }
    }
    const int top = std::min(max, o.cocycle_degree.value_or(max));
    for (auto p : moduli_for(o)) {
        auto z = cocycles(shelf, top - 1, p, o.limits);
        for (int a = 1; a < top; ++a)
            for (int b = 1; a + b <= top; ++b)
                for (const auto& f : z[a])
                    for (const auto& g : z[b]) {
                        Cochain defect = cup(shelf, f, g) - Integer(sign_of(a * b)) * cup(shelf, g, f);
                        Cochain rhs = Integer(kCommutativitySign) *
                                      coboundary(shelf, trivial, witness(shelf, f, g, WitnessKind::commutativity));
                        rec.check(defect == rhs, "cup commutativity defect equals d* of the witness",
                                  [&] { return cochains_element({&f, &g}, p); });
                    }
    }
    rec.note("commutativity sign: " + std::to_string(kCommutativitySign));
}

void zinbiel_suite(const FiniteShelf& shelf, const VerifyOptions& o, Recorder& rec)
{
    const auto trivial = CoefficientSystem::trivial();
    const int size = shelf.size();
    const int max = o.max_degree;
    std::mt19937_64 rng(o.seed + 1);
    for (int n = 0; n <= max; ++n)
        checked_dimension(size, 1, n, o.limits);
    auto lh = [&](const Cochain& f, const Cochain& g) { return half_cup(shelf, f, g, Side::left); };
    auto rh = [&](const Cochain& f, const Cochain& g) { return half_cup(shelf, f, g, Side::right); };
    for (int a = 1; a < max; ++a)
        for (int b = 1; a + b <= max; ++b) {
            Cochain f = random_cochain(a, size, rng), g = random_cochain(b, size, rng);
            rec.check(lh(f, g) + rh(f, g) == cup(shelf, f, g), "left plus right half cup is the cup",
                      [&] { return cochains_element({&f, &g}); });
            for (int c = 1; a + b + c <= max; ++c) {
                Cochain k = random_cochain(c, size, rng);
                auto el = [&] { return cochains_element({&f, &g, &k}); };
                rec.check(lh(lh(f, g), k) == lh(f, cup(shelf, g, k)), "dendriform axiom 1", el);
                rec.check(rh(f, rh(g, k)) == rh(cup(shelf, f, g), k), "dendriform axiom 2", el);
                rec.check(rh(f, lh(g, k)) == lh(rh(f, g), k), "dendriform axiom 3", el);
            }
        }
    if (max >= 2) {
        Cochain f = random_cochain(1, size, rng), g = random_cochain(1, size, rng);
        Cochain fg = lh(f, g);
        for (int x = 0; x < size; ++x)
            for (int y = 0; y < size; ++y)
                rec.check(fg.at({x, y}) == -f.at({x}) * g.at({y}), "degree (1,1) left half cup formula",
                          [&] { return cochains_element({&f, &g}); });
    }
    const int top = std::min(max, o.cocycle_degree.value_or(max));
    for (auto p : moduli_for(o)) {
        auto z = cocycles(shelf, top - 1, p, o.limits);
        std::map<int, CoboundarySolver> solvers;
        auto exact = [&](const Cochain& f) {
            if (f.is_zero())
                return true;
            auto it = solvers.find(f.degree());
            if (it == solvers.end())
                it = solvers.emplace(f.degree(), CoboundarySolver(shelf, trivial, f.degree(), p, o.limits)).first;
            return it->second.preimage(f).has_value();
        };
        for (int a = 1; a < top; ++a)
            for (int b = 1; a + b <= top; ++b)
                for (const auto& f : z[a])
                    for (const auto& g : z[b]) {
                        Cochain defect = rh(f, g) - Integer(sign_of(a * b)) * lh(g, f);
                        Cochain rhs = Integer(kZinbielSign) *
                                      coboundary(shelf, trivial, witness(shelf, f, g, WitnessKind::zinbielity));
                        rec.check(defect == rhs, "half cup flip defect equals d* of the witness",
                                  [&] { return cochains_element({&f, &g}, p); });
                        for (int c = 1; a + b + c <= top; ++c)
                            for (const auto& k : z[c]) {
                                Cochain zin = lh(lh(f, g), k) -
                                              lh(f, lh(g, k) + Integer(sign_of(b * c)) * lh(k, g));
                                rec.check(exact(zin), "Zinbiel identity holds up to a coboundary",
                                          [&] { return cochains_element({&f, &g, &k}, p); });
                            }
                    }
    }
    rec.note("Zinbiel flip sign: " + std::to_string(kZinbielSign));
}

void action_suite(const FiniteShelf& shelf, const VerifyOptions& o, Recorder& rec)
{
    const auto trivial = CoefficientSystem::trivial();
    for (auto p : moduli_for(o))
        for (int n = 1; n <= std::min(3, o.max_degree); ++n) {
            CoboundarySolver solver(shelf, trivial, n, p, o.limits);
            for (const auto& f : cocycle_basis(shelf, trivial, n, p, o.limits))
                for (int x = 0; x < shelf.size(); ++x) {
                    Cochain defect = x_action(shelf, x, f) - f;
                    rec.check(defect.is_zero() || solver.preimage(defect).has_value(),
                              "x.f - f is a coboundary", [&] {
                                  Json e = cochains_element({&f}, p);
                                  e["x"] = x;
                                  return e;
                              });
                }
        }
}

void splitting_suite(const FiniteShelf& shelf, const VerifyOptions& o, Recorder& rec)
{
    if (!shelf.is_spindle())
        throw Unsupported("the splitting suite needs a spindle (x<x = x)");
    const int size = shelf.size();
    const int max = o.max_degree;
    for (int n = 0; n <= max; ++n)
        checked_dimension(size, 1, n, o.limits);
    for (auto part : {SplitPart::quandle, SplitPart::degenerate, SplitPart::late, SplitPart::s_image})
        for (int n = 0; n <= max; ++n) {
            std::string why = closure_failure(shelf, part, n);
            rec.check(why.empty(), "subcomplex closure of the " + to_string(part) + " part",
                      [&] { return Json{{"part", to_string(part)}, {"degree", n}, {"detail", why}}; });
        }
    for (int n = 0; n <= max; ++n) {
        const NDDecomposition& d = nd_decomposition(shelf, n, o.limits);
        const IntMatrix& pn = d.proj_n;
        rec.check(pn * pn == pn && d.proj_d * d.proj_d == d.proj_d && pn * d.proj_d == IntMatrix(pn.rows(), pn.cols()),
                  "projectors are complementary idempotents", [&] { return Json{{"degree", n}}; });
        rec.check(d.generators * d.inverse == IntMatrix::identity(pn.rows()), "change of basis is invertible",
                  [&] { return Json{{"degree", n}}; });
    }
    for (bool dual : {false, true}) {
        auto R = split_homology(shelf, SplitPart::rack, max, dual, std::nullopt, o.limits);
        auto Q = split_homology(shelf, SplitPart::quandle, max, dual, std::nullopt, o.limits);
        auto D = split_homology(shelf, SplitPart::degenerate, max, dual, std::nullopt, o.limits);
        auto L = split_homology(shelf, SplitPart::late, max, dual, std::nullopt, o.limits);
        for (int n = 0; n <= max; ++n) {
            auto el = [&] { return Json{{"degree", n}, {"dual", dual}}; };
            rec.check(R[n] == direct_sum(Q[n], D[n]), "rack = quandle + degenerate", el);
            if (n >= 2)
                rec.check(D[n] == direct_sum(L[n], Q[n - 1]), "degenerate = late + shifted quandle", el);
        }
    }
    for (int x = 0; x < size; ++x) {
        auto el = [&] { return tuple_element({x, x}); };
        rec.check(diff(shelf, bar({x, x})).empty(), "d(e_x e_x) = 0", el);
        rec.check(coproduct(shelf, bar({x, x})) == tensor({x, x}, {}) + tensor({}, {x, x}),
                  "e_x e_x is primitive", el);
    }
    for (int n = 1; n <= max; ++n)
        for (const Tuple& t : all_tuples(size, n)) {
            auto el = [&] { return tuple_element(t); };
            if (has_repeat(t)) {
                bool coideal = true;
                for (const auto& [k, c] : coproduct(shelf, bar(t)))
                    coideal = coideal && (has_repeat(k.first) || has_repeat(k.second));
                rec.check(coideal, "the degenerate part is a coideal", el);
                continue;
            }
            for (Side side : {Side::left, Side::right}) {
                BarTensor dd = dendri(shelf, nondegenerate_generator(t), side);
                BarTensor d_component;
                for (const auto& [k, c] : dd)
                    for (const auto& [u, cu] : nd_project(shelf, bar(k.second)).second)
                        d_component.add({k.first, u}, c * cu);
                rec.check(d_component.empty(), "half coproducts of N-generators are N on the right", el);
            }
        }
    for (int n = 1; n <= std::min(max, 3); ++n)
        for (const Tuple& xs : all_tuples(size, n))
            for (const Tuple& ys : all_tuples(size, n - 1)) {
                bool distinct = true;
                for (int i = 0; i + 1 < n; ++i)
                    distinct = distinct && xs[i] != ys[i];
                if (!distinct)
                    continue;
                BarElement rebuilt;
                for (const auto& [u, c] : rewrite_complement2(xs, ys))
                    rebuilt.add(nondegenerate_generator(u), c);
                rec.check(rebuilt == complement2_generator(xs, ys), "alternative generators rewrite into N-generators",
                          [&] { return Json{{"x", xs}, {"y", ys}}; });
            }
    if (max >= 3)
        for (int x = 0; x < size; ++x)
            for (int y = 0; y < size; ++y)
                for (int z = 0; z < size; ++z) {
                    if (x == y || y == z)
                        continue;
                    auto [got, expected] = degree3_obstruction(shelf, x, y, z);
                    rec.check(got == expected, "degree 3 obstruction term", [&] { return tuple_element({x, y, z}); });
                }
    for (auto p : moduli_for(o)) {
        SplittingReport r = verify_splitting(shelf, max, p, o.limits);
        rec.check(r.cup_restricts, "cup restricts to quandle cohomology", [&] {
            return Json{{"modulus", modulus_json(p)}, {"detail", r.first_failure}};
        });
        rec.check(r.zinbiel_ideal, "degenerate cohomology is a Zinbiel ideal", [&] {
            return Json{{"modulus", modulus_json(p)}, {"detail", r.first_failure}};
        });
        rec.note("over " + (p ? "F_" + std::to_string(*p) : std::string("Z")) + ": " +
                 std::to_string(r.half_cups_leaving_n) + " half cups of quandle cocycles leave the quandle part");
    }
}

using SuiteFn = void (*)(const FiniteShelf&, const VerifyOptions&, Recorder&);

const std::vector<std::pair<std::string, SuiteFn>>& registry()
{
    static const std::vector<std::pair<std::string, SuiteFn>> r{
        {"complex", complex_suite}, {"dgb", dgb_suite},         {"homotopy", homotopy_suite},
        {"dendriform", dendriform_suite}, {"cup", cup_suite},   {"zinbiel", zinbiel_suite},
        {"action", action_suite},   {"splitting", splitting_suite},
    };
    return r;
}

SuiteResult run_one(const FiniteShelf& shelf, const std::string& name, SuiteFn fn, const VerifyOptions& o)
{
    SuiteResult r;
    r.suite = name;
    Recorder rec(r, shelf);
    fn(shelf, o, rec);
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry())
            out.push_back(name);
        return out;
    }();
    return names;
}

std::vector<SuiteResult> run_suite(const FiniteShelf& shelf, const std::string& suite, const VerifyOptions& options)
{
    if (options.max_degree < 0)
        throw InputError("max degree must be non-negative");
    std::vector<SuiteResult> out;
    for (const auto& [name, fn] : registry()) {
        if (suite == name)
            return {run_one(shelf, name, fn, options)};
        if (suite != "all")
            continue;
        if (name == "splitting" && !shelf.is_spindle()) {
            SuiteResult skipped;
            skipped.suite = name;
            skipped.notes.push_back("skipped: not a spindle");
            out.push_back(std::move(skipped));
            continue;
        }
        out.push_back(run_one(shelf, name, fn, options));
    }
    if (suite != "all")
        throw InputError("unknown suite \"" + suite + "\"");
    return out;
}

Json to_json(const SuiteResult& r)
{
    Json out{{"suite", r.suite}, {"passed", r.passed}, {"checks", r.checks}};
    if (!r.passed) {
        out["failure"] = r.failure;
        out["instance"] = r.instance;
    }
    out["notes"] = r.notes;
    return out;
}

}  // namespace rackhom
