#include "rackhom/split.hpp"

#include "rackhom/complex.hpp"
#include "rackhom/errors.hpp"
#include "rackhom/products.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace rackhom {

namespace {

void require_spindle(const FiniteShelf& shelf, const char* what)
{
    if (!shelf.is_spindle())
        throw Unsupported(std::string(what) + " needs a spindle (x<x = x)");
}

// Apply an integer matrix on tuple coordinates to a homogeneous element.
BarElement apply_on_tuples(int shelf_size, int n, const IntMatrix& m, const BarElement& b)
{
    BarElement out;
    for (const auto& [t, c] : b) {
        std::size_t col = encode(shelf_size, t);
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (m(r, col) != 0)
                out.add(decode(shelf_size, n, r).second, c * m(r, col));
    }
    return out;
}

std::map<int, std::vector<BarElement>> by_degree(const BarElement& b)
{
    std::map<int, std::vector<BarElement>> out;
    std::map<int, BarElement> parts;
    for (const auto& [t, c] : b)
        parts[static_cast<int>(t.size())].add(t, c);
    for (auto& [n, e] : parts)
        out[n].push_back(e);
    return out;
}

}  // namespace

bool has_repeat(const Tuple& t)
{
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
        if (t[i] == t[i + 1])
            return true;
    return false;
}

bool has_late_repeat(const Tuple& t)
{
    for (std::size_t i = 1; i + 1 < t.size(); ++i)
        if (t[i] == t[i + 1])
            return true;
    return false;
}

BarElement nondegenerate_generator(const Tuple& t)
{
    if (t.empty())
        return bar(Tuple{});
    Tuple xs = t;
    Tuple ys(t.begin() + 1, t.end());
    return complement2_generator(xs, ys);
}

BarElement complement2_generator(const Tuple& xs, const Tuple& ys)
{
    if (xs.empty() || ys.size() + 1 != xs.size())
        throw InputError("complement generator needs n >= 1 letters x and n-1 letters y");
    BarElement out = bar(Tuple{});
    for (std::size_t i = 0; i < xs.size(); ++i) {
        BarElement next;
        for (const auto& [t, c] : out) {
            Tuple a = t;
            a.push_back(xs[i]);
            next.add(a, c);
            if (i < ys.size()) {
                Tuple b = t;
                b.push_back(ys[i]);
                next.add(b, -c);
            }
        }
        out = std::move(next);
    }
    return out;
}

BarElement rewrite_complement2(const Tuple& xs, const Tuple& ys)
{
    if (xs.empty() || ys.size() + 1 != xs.size())
        throw InputError("complement generator needs n >= 1 letters x and n-1 letters y");
    // Right to left: (e_x - e_y) g(u) = g(x u) - g(y u).
    BarElement out = bar(Tuple{xs.back()});
    for (std::size_t i = ys.size(); i-- > 0;) {
        BarElement next;
        for (const auto& [u, c] : out) {
            Tuple a{xs[i]}, b{ys[i]};
            a.insert(a.end(), u.begin(), u.end());
            b.insert(b.end(), u.begin(), u.end());
            if (!has_repeat(a))
                next.add(a, c);
            if (!has_repeat(b))
                next.add(b, -c);
        }
        out = std::move(next);
    }
    return out;
}

const NDDecomposition& nd_decomposition(const FiniteShelf& shelf, int n, const ResourceLimits& limits)
{
    require_spindle(shelf, "the quandle/degenerate splitting");
    static std::mutex mutex;
    static std::map<std::pair<OpTable, int>, std::unique_ptr<const NDDecomposition>> cache;
    auto key = std::make_pair(shelf.table(), n);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end())
            return *it->second;
    }
    checked_dimension(shelf.size(), 1, n, limits);
    const int size = shelf.size();
    const std::size_t dim = checked_dimension(size, 1, n, limits);
    auto d = std::make_unique<NDDecomposition>();
    d->degree = n;
    for (const Tuple& t : all_tuples(size, n))
        (has_repeat(t) ? d->d_tuples : d->n_tuples).push_back(t);
    // g(t) = t + (repeating tuples), so the change of basis is unitriangular
    // and its inverse only flips the sign of the off-diagonal block.
    d->generators = IntMatrix(dim, dim);
    d->inverse = IntMatrix(dim, dim);
    d->proj_n = IntMatrix(dim, dim);
    d->proj_d = IntMatrix::identity(dim);
    std::size_t col = 0;
    for (const Tuple& t : d->n_tuples) {
        const std::size_t self = encode(size, t);
        for (const auto& [u, c] : nondegenerate_generator(t)) {
            const std::size_t row = encode(size, u);
            d->generators(row, col) = c;
            if (row != self) {
                if (!has_repeat(u))
                    throw ContractViolation("nondegenerate generator of " + tuple_to_string(t) +
                                            " has a non-repeating lower term " + tuple_to_string(u));
                d->inverse(row, self) = -c;
            }
            d->proj_n(row, self) = c;
            d->proj_d(row, self) -= c;
        }
        d->inverse(col, self) = 1;
        ++col;
    }
    for (const Tuple& t : d->d_tuples) {
        const std::size_t self = encode(size, t);
        d->generators(self, col) = 1;
        d->inverse(col, self) = 1;
        ++col;
    }
    // Rows of `inverse` follow the column order of `generators`; fix the
    // N-rows, which were written in tuple order above.
    IntMatrix inv(dim, dim);
    std::size_t r = 0;
    for (const Tuple& t : d->n_tuples) {
        const std::size_t self = encode(size, t);
        inv(r++, self) = 1;
    }
    for (const Tuple& t : d->d_tuples) {
        const std::size_t self = encode(size, t);
        for (std::size_t c = 0; c < dim; ++c)
            inv(r, c) = (c == self) ? Integer(1) : Integer(-d->proj_n(self, c));
        ++r;
    }
    d->inverse = std::move(inv);
    std::lock_guard lock(mutex);
    return *cache.try_emplace(std::move(key), std::move(d)).first->second;
}

std::pair<BarElement, BarElement> nd_project(const FiniteShelf& shelf, const BarElement& b)
{
    require_spindle(shelf, "nd_project");
    BarElement n_part, d_part;
    for (const auto& [n, parts] : by_degree(b)) {
        const NDDecomposition& dec = nd_decomposition(shelf, n);
        for (const auto& e : parts) {
            n_part += apply_on_tuples(shelf.size(), n, dec.proj_n, e);
            d_part += apply_on_tuples(shelf.size(), n, dec.proj_d, e);
        }
    }
    return {n_part, d_part};
}

BarElement s_map(const FiniteShelf& shelf, const BarElement& b)
{
    require_spindle(shelf, "s");
    BarElement out;
    for (const auto& [t, c] : b) {
        if (t.empty())
            throw Unsupported("s is defined in positive degree only");
        Tuple u{t.front()};
        u.insert(u.end(), t.begin(), t.end());
        out.add(u, c);
    }
    return out;
}

MixedWord s_word(const MixedWord& w)
{
    MixedWord out;
    bool done = false;
    for (const Letter& l : w) {
        out.push_back(l);
        if (l.graded && !done) {
            out.push_back(l);
            done = true;
        }
    }
    if (!done)
        throw Unsupported("s is defined in positive degree only");
    return out;
}

LateDecomposition late_split(const FiniteShelf& shelf, int n)
{
    require_spindle(shelf, "the late splitting");
    if (n < 2)
        throw InputError("the late splitting starts in degree 2");
    LateDecomposition out;
    out.degree = n;
    for (const Tuple& t : all_tuples(shelf.size(), n))
        if (has_late_repeat(t))
            out.late_tuples.push_back(t);
    for (const Tuple& t : all_tuples(shelf.size(), n - 1))
        if (!has_repeat(t))
            out.s_part.push_back(s_map(shelf, nondegenerate_generator(t)));
    return out;
}

std::string to_string(SplitPart part)
{
    switch (part) {
    case SplitPart::rack:
        return "rack";
    case SplitPart::quandle:
        return "quandle";
    case SplitPart::degenerate:
        return "degenerate";
    case SplitPart::late:
        return "late";
    case SplitPart::s_image:
        return "s_image";
    }
    return "?";
}

PartBasis part_basis(const FiniteShelf& shelf, SplitPart part, int n)
{
    if (part != SplitPart::rack)
        require_spindle(shelf, "the quandle/degenerate splitting");
    PartBasis out;
    auto push = [&](BarElement v, Tuple pivot) {
        out.vectors.push_back(std::move(v));
        out.pivots.push_back(std::move(pivot));
    };
    if (part == SplitPart::s_image) {
        if (n >= 2)
            for (const Tuple& t : all_tuples(shelf.size(), n - 1))
                if (!has_repeat(t)) {
                    Tuple pivot{t.front()};
                    pivot.insert(pivot.end(), t.begin(), t.end());
                    push(s_map(shelf, nondegenerate_generator(t)), pivot);
                }
        return out;
    }
    for (const Tuple& t : all_tuples(shelf.size(), n)) {
        switch (part) {
        case SplitPart::rack:
            push(bar(t), t);
            break;
        case SplitPart::quandle:
            if (!has_repeat(t))
                push(nondegenerate_generator(t), t);
            break;
        case SplitPart::degenerate:
            if (has_repeat(t))
                push(bar(t), t);
            break;
        case SplitPart::late:
            if (has_late_repeat(t))
                push(bar(t), t);
            break;
        case SplitPart::s_image:
            break;
        }
    }
    return out;
}

namespace {

// Coordinates of v in `basis`, or an explanation when v is outside its span.
std::variant<IntVector, std::string> coordinates(const PartBasis& basis, const BarElement& v)
{
    IntVector coords(basis.vectors.size());
    BarElement rebuilt;
    for (std::size_t j = 0; j < basis.vectors.size(); ++j) {
        coords[j] = v.coefficient(basis.pivots[j]);
        rebuilt.add(basis.vectors[j], coords[j]);
    }
    if (rebuilt == v)
        return coords;
    BarElement diff = v - rebuilt;
    return "leaves the part (stray term on " + tuple_to_string(diff.begin()->first) + ")";
}

}  // namespace

IntMatrix part_boundary(const FiniteShelf& shelf, SplitPart part, int n, const ResourceLimits& limits)
{
    checked_dimension(shelf.size(), 1, n, limits);
    PartBasis source = part_basis(shelf, part, n);
    if (n == 0)
        return IntMatrix(0, source.vectors.size());
    PartBasis target = part_basis(shelf, part, n - 1);
    IntMatrix m(target.vectors.size(), source.vectors.size());
    for (std::size_t j = 0; j < source.vectors.size(); ++j) {
        auto coords = coordinates(target, diff(shelf, source.vectors[j]));
        if (auto* msg = std::get_if<std::string>(&coords))
            throw ContractViolation("d of " + to_string(part) + " basis vector at " +
                                    tuple_to_string(source.pivots[j]) + " " + *msg);
        const auto& c = std::get<IntVector>(coords);
        for (std::size_t i = 0; i < c.size(); ++i)
            m(i, j) = c[i];
    }
    return m;
}

std::string closure_failure(const FiniteShelf& shelf, SplitPart part, int n)
{
    try {
        part_boundary(shelf, part, n);
    } catch (const ContractViolation& e) {
        return e.what();
    }
    return {};
}

std::vector<HomologyGroup> split_homology(const FiniteShelf& shelf, SplitPart part, int max_n, bool dual,
                                          std::optional<unsigned long> modulus, const ResourceLimits& limits)
{
    if (max_n < 0)
        throw InputError("max degree must be non-negative");
    if (part != SplitPart::rack)
        require_spindle(shelf, "split_homology");
    std::vector<IntMatrix> d;
    for (int n = 0; n <= max_n + 1; ++n)
        d.push_back(part_boundary(shelf, part, n, limits));
    std::vector<HomologyGroup> out;
    for (int n = 0; n <= max_n; ++n) {
        if (dual)
            out.push_back(homology_of_pair(d[n + 1].transposed(), d[n].transposed(), modulus));
        else
            out.push_back(homology_of_pair(d[n], d[n + 1], modulus));
    }
    return out;
}

namespace {

Cochain compose(const FiniteShelf& shelf, const Cochain& f, bool n_part)
{
    if (f.coeff_size() != 1)
        throw Unsupported("splitting of cochains needs trivial coefficients");
    const NDDecomposition& dec = nd_decomposition(shelf, f.degree());
    const IntMatrix& p = n_part ? dec.proj_n : dec.proj_d;
    // (f o P)(t) = sum_s P[s, t] f(s)
    IntVector values(p.cols());
    for (std::size_t s = 0; s < p.rows(); ++s)
        if (f[s] != 0)
            for (std::size_t t = 0; t < p.cols(); ++t)
                if (p(s, t) != 0)
                    values[t] += p(s, t) * f[s];
    return Cochain::from_values(f.degree(), f.shelf_size(), std::move(values), 1, f.modulus());
}

std::string describe(const FiniteShelf& shelf, const char* what, const Cochain& f, const Cochain& g)
{
    std::ostringstream msg;
    msg << what << " on cocycles of degrees " << f.degree() << " and " << g.degree() << " over shelf of size "
        << shelf.size();
    return msg.str();
}

}  // namespace

Cochain quandle_part(const FiniteShelf& shelf, const Cochain& f) { return compose(shelf, f, true); }
Cochain degenerate_part(const FiniteShelf& shelf, const Cochain& f) { return compose(shelf, f, false); }

SplittingReport verify_splitting(const FiniteShelf& shelf, int max_n, std::optional<unsigned long> modulus,
                                 const ResourceLimits& limits)
{
    require_spindle(shelf, "verify_splitting");
    const auto coeff = CoefficientSystem::trivial();
    SplittingReport report;
    std::vector<std::vector<Cochain>> quandle(max_n + 1), degenerate(max_n + 1), all(max_n + 1);
    for (int n = 1; n < max_n; ++n) {
        for (auto& k : cocycle_basis(shelf, coeff, n, modulus, limits)) {
            Cochain q = quandle_part(shelf, k), dd = degenerate_part(shelf, k);
            if (!q.is_zero())
                quandle[n].push_back(q);
            if (!dd.is_zero())
                degenerate[n].push_back(dd);
            all[n].push_back(std::move(k));
        }
    }
    std::map<int, CoboundarySolver> solvers;
    auto exact = [&](const Cochain& f) {
        if (f.is_zero())
            return true;
        auto it = solvers.find(f.degree());
        if (it == solvers.end())
            it = solvers.emplace(f.degree(), CoboundarySolver(shelf, coeff, f.degree(), modulus, limits)).first;
        return it->second.preimage(f).has_value();
    };
    for (int i = 1; i < max_n; ++i)
        for (int j = 1; i + j <= max_n; ++j) {
            for (const auto& f : quandle[i])
                for (const auto& g : quandle[j]) {
                    ++report.pairs_checked;
                    if (!exact(degenerate_part(shelf, cup(shelf, f, g))) && report.cup_restricts) {
                        report.cup_restricts = false;
                        if (report.first_failure.empty())
                            report.first_failure = describe(shelf, "D-part of a quandle cup product is not exact", f, g);
                    }
                    if (!degenerate_part(shelf, half_cup(shelf, f, g, Side::left)).is_zero())
                        ++report.half_cups_leaving_n;
                }
            for (const auto& f : degenerate[i])
                for (const auto& g : all[j]) {
                    ++report.pairs_checked;
                    bool ok = exact(quandle_part(shelf, half_cup(shelf, f, g, Side::left))) &&
                              exact(quandle_part(shelf, half_cup(shelf, g, f, Side::left)));
                    if (!ok && report.zinbiel_ideal) {
                        report.zinbiel_ideal = false;
                        if (report.first_failure.empty())
                            report.first_failure = describe(shelf, "N-part of a half cup with a D-cocycle is not exact", f, g);
                    }
                }
        }
    return report;
}

std::pair<BarTensor, BarTensor> degree3_obstruction(const FiniteShelf& shelf, Element x, Element y, Element z)
{
    require_spindle(shelf, "the degree-3 obstruction");
    if (x == y || y == z)
        throw InputError("the obstruction needs x != y and y != z");
    BarTensor delta = coproduct(shelf, nondegenerate_generator({x, y, z}));
    BarTensor component;
    for (const auto& [k, c] : delta) {
        BarElement left = nd_project(shelf, bar(k.first)).second;
        BarElement right = nd_project(shelf, bar(k.second)).first;
        for (const auto& [a, ca] : left)
            for (const auto& [b, cb] : right)
                component.add({a, b}, c * ca * cb);
    }
    const Element X = shelf.op(x, z), Y = shelf.op(y, z);
    BarTensor expected;
    expected.add({{z, z}, {shelf.op(X, Y)}}, 1);
    expected.add({{z, z}, {shelf.op(X, z)}}, -1);
    expected.add({{z, z}, {Y}}, -1);
    expected.add({{z, z}, {shelf.op(Y, z)}}, 1);
    return {component, expected};
}

}  // namespace rackhom
