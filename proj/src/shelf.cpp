#include "rackhom/shelf.hpp"

#include "rackhom/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rackhom {

namespace {

// Flatten a square table, checking shape and range.
std::vector<int> flatten(const OpTable& table, int cols, int range, const char* what)
{
    std::vector<int> flat;
    flat.reserve(table.size() * cols);
    for (std::size_t r = 0; r < table.size(); ++r) {
        if (table[r].size() != static_cast<std::size_t>(cols)) {
            std::ostringstream msg;
            msg << what << " row " << r << " has " << table[r].size() << " entries, expected " << cols;
            throw InputError(msg.str());
        }
        for (int c = 0; c < cols; ++c) {
            int v = table[r][c];
            if (v < 0 || v >= range) {
                std::ostringstream msg;
                msg << what << " entry (" << r << "," << c << ") = " << v << " is outside {0.." << range - 1 << "}";
                throw InputError(msg.str());
            }
            flat.push_back(v);
        }
    }
    return flat;
}

bool is_permutation_of_range(const std::vector<int>& values, int n)
{
    std::vector<char> seen(n, 0);
    for (int v : values) {
        if (v < 0 || v >= n || seen[v])
            return false;
        seen[v] = 1;
    }
    return true;
}

}  // namespace

OpTable FiniteShelf::table() const
{
    OpTable out(size_, std::vector<int>(size_));
    for (int x = 0; x < size_; ++x)
        for (int y = 0; y < size_; ++y)
            out[x][y] = op(x, y);
    return out;
}

std::optional<ShelfAxiomFailure> find_shelf_witness(const OpTable& table)
{
    const int n = static_cast<int>(table.size());
    auto t = flatten(table, n, n, "shelf table");
    auto op = [&](int x, int y) { return t[x * n + y]; };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int lhs = op(op(x, y), z);
                int rhs = op(op(x, z), op(y, z));
                if (lhs != rhs)
                    return ShelfAxiomFailure{{x, y, z}, lhs, rhs};
            }
    return std::nullopt;
}

std::optional<XSetAxiomFailure> find_xset_witness(const OpTable& base, const OpTable& action)
{
    const int n = static_cast<int>(base.size());
    const int m = static_cast<int>(action.size());
    auto t = flatten(base, n, n, "shelf table");
    auto a = flatten(action, n, m, "action table");
    auto op = [&](int x, int y) { return t[x * n + y]; };
    auto act = [&](int s, int y) { return a[s * n + y]; };
    for (int s = 0; s < m; ++s)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int lhs = act(act(s, y), z);
                int rhs = act(act(s, z), op(y, z));
                if (lhs != rhs)
                    return XSetAxiomFailure{{s, y, z}, lhs, rhs};
            }
    return std::nullopt;
}

std::variant<FiniteShelf, ShelfAxiomFailure> classify(const OpTable& table)
{
    const int n = static_cast<int>(table.size());
    if (n == 0)
        throw InputError("shelf table is empty");
    auto flat = flatten(table, n, n, "shelf table");
    if (auto failure = find_shelf_witness(table))
        return *failure;

    ShelfFlags flags;
    flags.is_shelf = true;
    flags.is_rack = true;
    for (int y = 0; y < n && flags.is_rack; ++y) {
        std::vector<int> column(n);
        for (int x = 0; x < n; ++x)
            column[x] = flat[x * n + y];
        flags.is_rack = is_permutation_of_range(column, n);
    }
    flags.is_spindle = true;
    for (int x = 0; x < n; ++x)
        if (flat[x * n + x] != x)
            flags.is_spindle = false;
    flags.is_quandle = flags.is_rack && flags.is_spindle;
    return FiniteShelf(n, std::move(flat), flags);
}

FiniteShelf make_shelf(const OpTable& table)
{
    auto result = classify(table);
    if (auto* failure = std::get_if<ShelfAxiomFailure>(&result)) {
        std::ostringstream msg;
        msg << "not a shelf: self-distributivity fails at (x,y,z) = (" << failure->witness[0] << ","
            << failure->witness[1] << "," << failure->witness[2] << "): " << failure->lhs << " != " << failure->rhs;
        throw InputError(msg.str());
    }
    return std::get<FiniteShelf>(std::move(result));
}

namespace builtin {

FiniteShelf dihedral(int n)
{
    if (n < 1)
        throw InputError("dihedral quandle needs n >= 1");
    OpTable t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            t[x][y] = (((2 * y - x) % n) + n) % n;
    return make_shelf(t);
}

FiniteShelf trivial(int n)
{
    if (n < 1)
        throw InputError("trivial shelf needs n >= 1");
    OpTable t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        std::fill(t[x].begin(), t[x].end(), x);
    return make_shelf(t);
}

FiniteShelf permutation(const std::vector<int>& perm)
{
    const int n = static_cast<int>(perm.size());
    if (n == 0 || !is_permutation_of_range(perm, n))
        throw InputError("permutation rack: input is not a permutation of {0..n-1}");
    OpTable t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        std::fill(t[x].begin(), t[x].end(), perm[x]);
    return make_shelf(t);
}

FiniteShelf conjugation(const OpTable& group)
{
    const int n = static_cast<int>(group.size());
    if (n == 0)
        throw InputError("group table is empty");
    auto g = flatten(group, n, n, "group table");
    auto mul = [&](int a, int b) { return g[a * n + b]; };

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
                    std::ostringstream msg;
                    msg << "group table violates associativity at (" << a << "," << b << "," << c << ")";
                    throw InputError(msg.str());
                }
    int identity = -1;
    for (int e = 0; e < n && identity < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            ok = mul(e, a) == a && mul(a, e) == a;
        if (ok)
            identity = e;
    }
    if (identity < 0)
        throw InputError("group table violates the identity axiom: no two-sided identity");
    std::vector<int> inverse(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (mul(a, b) == identity && mul(b, a) == identity)
                inverse[a] = b;
        if (inverse[a] < 0) {
            std::ostringstream msg;
            msg << "group table violates the inverse axiom: element " << a << " has no inverse";
            throw InputError(msg.str());
        }
    }

    OpTable t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            t[x][y] = mul(mul(inverse[y], x), y);
    return make_shelf(t);
}

}  // namespace builtin

std::vector<std::vector<Element>> orbits(const FiniteShelf& shelf)
{
    if (!shelf.is_rack())
        throw Unsupported("orbits: the right translations of a non-rack are not invertible");
    const int n = shelf.size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    // For a finite rack the inverse of -<y is a power of it, so connected
    // components of x ~ x<y are exactly the orbits.
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int a = find(x), b = find(shelf.op(x, y));
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<std::vector<Element>> parts;
    std::vector<int> slot(n, -1);
    for (int x = 0; x < n; ++x) {
        int r = find(x);
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(parts.size());
            parts.emplace_back();
        }
        parts[slot[r]].push_back(x);
    }
    return parts;
}

Tuple remarkable_map(const FiniteShelf& shelf, const Tuple& tuple)
{
    Tuple out(tuple);
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < tuple.size(); ++j)
            out[i] = shelf.op(out[i], tuple[j]);
    return out;
}

OpTable XSetAction::action() const
{
    const int n = base_.size();
    OpTable out(size_, std::vector<int>(n));
    for (int s = 0; s < size_; ++s)
        for (int y = 0; y < n; ++y)
            out[s][y] = act(s, y);
    return out;
}

std::variant<XSetAction, XSetAxiomFailure> validate_xset(const FiniteShelf& shelf, const OpTable& action)
{
    const int m = static_cast<int>(action.size());
    if (m == 0)
        throw InputError("X-set action table is empty");
    auto flat = flatten(action, shelf.size(), m, "action table");
    if (auto failure = find_xset_witness(shelf.table(), action))
        return *failure;
    return XSetAction(shelf, m, std::move(flat));
}

CoefficientSystem CoefficientSystem::self(const FiniteShelf& shelf)
{
    auto result = validate_xset(shelf, shelf.table());
    // A shelf acting on itself satisfies the X-set axiom by self-distributivity.
    return CoefficientSystem(Kind::self, std::get<XSetAction>(std::move(result)));
}

std::string CoefficientSystem::name() const
{
    switch (kind_) {
    case Kind::trivial:
        return "trivial";
    case Kind::self:
        return "self";
    case Kind::xset:
        return "xset(" + std::to_string(size()) + ")";
    }
    return "?";
}

}  // namespace rackhom
