#include "rackhom/products.hpp"

#include "rackhom/complex.hpp"
#include "rackhom/errors.hpp"

#include <random>
#include <sstream>

namespace rackhom {

namespace {

int parity_sign(long k) { return (k % 2 == 0) ? 1 : -1; }

std::optional<unsigned long> common_modulus(const Cochain& f, const Cochain& g)
{
    if (f.modulus() != g.modulus())
        throw InputError("cochains over different rings");
    return f.modulus();
}

void require_trivial(const Cochain& f, const char* what)
{
    if (f.coeff_size() != 1)
        throw Unsupported(std::string(what) + " is defined for trivial coefficients only");
}

void require_shelf(const FiniteShelf& shelf, const Cochain& f)
{
    if (f.shelf_size() != shelf.size())
        throw InputError("cochain is defined on a shelf of size " + std::to_string(f.shelf_size()) +
                         ", not " + std::to_string(shelf.size()));
}

// Cochain of degree n whose value on t is (f (x) g)(phi(t)).
template <typename Phi>
Cochain convolve(const FiniteShelf& shelf, const Cochain& f, const Cochain& g, int n, Phi&& phi)
{
    require_shelf(shelf, f);
    require_shelf(shelf, g);
    require_trivial(f, "convolution");
    require_trivial(g, "convolution");
    Cochain out(n, shelf.size(), 1, common_modulus(f, g));
    std::size_t index = 0;
    for (const Tuple& t : all_tuples(shelf.size(), n))
        out.set_index(index++, evaluate_tensor(f, g, phi(bar(t))));
    return out;
}

// s with lhs == s * rhs for every pair; 0 if none or if all rhs vanish.
template <typename T>
int fit_sign(const std::vector<std::pair<T, T>>& pairs)
{
    bool plus = true, minus = true, informative = false;
    for (const auto& [lhs, rhs] : pairs) {
        plus = plus && lhs == rhs;
        minus = minus && lhs == -rhs;
        informative = informative || !(rhs == -rhs);
    }
    if (!informative || plus == minus)
        return 0;
    return plus ? 1 : -1;
}

}  // namespace

Cochain coboundary(const FiniteShelf& shelf, const CoefficientSystem& coeff, const Cochain& f)
{
    require_shelf(shelf, f);
    if (f.coeff_size() != coeff.size())
        throw InputError("cochain and coefficient system have different coefficient ranks");
    const int n = f.degree() + 1;
    Cochain out(n, shelf.size(), coeff.size(), f.modulus());
    const int sign = parity_sign(f.degree());
    for (std::size_t index = 0; index < out.dimension(); ++index) {
        auto [r, t] = decode(shelf.size(), n, index);
        Integer v = 0;
        for (const auto& [b, c] : boundary(shelf, coeff, ChainBasisElement{r, t}))
            v += c * f.at(b.tuple, b.coeff);
        out.set_index(index, sign * v);
    }
    return out;
}

Integer evaluate_tensor(const Cochain& f, const Cochain& g, const BarTensor& t)
{
    Integer out = 0;
    for (const auto& [k, c] : t) {
        const int a = static_cast<int>(k.first.size());
        if (a != f.degree() || static_cast<int>(k.second.size()) != g.degree())
            continue;
        out += parity_sign(g.degree() * a) * c * f.at(k.first) * g.at(k.second);
    }
    return out;
}

Cochain cup(const FiniteShelf& shelf, const CoefficientSystem& coeff, const Cochain& f, const Cochain& g)
{
    if (!coeff.is_trivial())
        throw Unsupported("cup product: the coproduct lives on Bbar, so only trivial coefficients are supported, got " +
                          coeff.name());
    return cup(shelf, f, g);
}

Cochain cup(const FiniteShelf& shelf, const Cochain& f, const Cochain& g)
{
    return convolve(shelf, f, g, f.degree() + g.degree(), [&](const BarElement& b) { return coproduct(shelf, b); });
}

Cochain half_cup(const FiniteShelf& shelf, const Cochain& f, const Cochain& g, Side side)
{
    if (f.degree() < 1 || g.degree() < 1)
        throw Unsupported("half cup products need cochains of positive degree");
    return convolve(shelf, f, g, f.degree() + g.degree(),
                    [&](const BarElement& b) { return dendri(shelf, b, side); });
}

Cochain witness(const FiniteShelf& shelf, const Cochain& f, const Cochain& g, WitnessKind kind)
{
    const int n = f.degree() + g.degree() - 1;
    if (n < 0)
        return Cochain(0, shelf.size(), 1, common_modulus(f, g));
    Cochain out = convolve(shelf, f, g, n, [&](const BarElement& b) {
        return kind == WitnessKind::commutativity ? homotopy_h(shelf, b) : homotopy_hbar(shelf, b);
    });
    return out *= parity_sign(n);
}

Cochain x_action(const FiniteShelf& shelf, Element x, const Cochain& f)
{
    require_shelf(shelf, f);
    require_trivial(f, "the action of X on cochains");
    if (x < 0 || x >= shelf.size())
        throw InputError("element " + std::to_string(x) + " is not in the shelf");
    Cochain out(f.degree(), shelf.size(), 1, f.modulus());
    std::size_t index = 0;
    for (Tuple t : all_tuples(shelf.size(), f.degree())) {
        for (auto& y : t)
            y = shelf.op(y, x);
        out.set_index(index++, f.at(t));
    }
    return out;
}

struct CoboundarySolver::State {
    int shelf_size;
    int coeff_size;
    std::optional<unsigned long> modulus;
    IntMatrix matrix;  // d*: C^{n-1} -> C^n
    std::optional<SNFResult> snf;
};

CoboundarySolver::CoboundarySolver(const FiniteShelf& shelf, const CoefficientSystem& coeff, int degree,
                                   std::optional<unsigned long> modulus, const ResourceLimits& limits)
    : degree_(degree), state_(std::make_unique<State>())
{
    if (degree < 1)
        throw InputError("coboundary preimages need degree >= 1");
    state_->shelf_size = shelf.size();
    state_->coeff_size = coeff.size();
    state_->modulus = modulus;
    state_->matrix = boundary_matrix(shelf, coeff, degree, limits).transposed();
    if (degree % 2 == 0)
        for (std::size_t r = 0; r < state_->matrix.rows(); ++r)
            for (std::size_t c = 0; c < state_->matrix.cols(); ++c)
                state_->matrix(r, c) = -state_->matrix(r, c);
    if (!modulus)
        state_->snf = smith_normal_form(state_->matrix);
}

CoboundarySolver::~CoboundarySolver() = default;
CoboundarySolver::CoboundarySolver(CoboundarySolver&&) noexcept = default;

std::optional<Cochain> CoboundarySolver::preimage(const Cochain& f) const
{
    if (f.degree() != degree_ || f.shelf_size() != state_->shelf_size || f.coeff_size() != state_->coeff_size)
        throw InputError("cochain does not match the solver's complex");
    if (f.modulus() != state_->modulus)
        throw InputError("cochain and solver work over different rings");
    std::optional<IntVector> x = state_->modulus ? modp::solve(state_->matrix, f.values(), *state_->modulus)
                                                 : solve_integral(*state_->snf, state_->matrix, f.values());
    if (!x)
        return std::nullopt;
    return Cochain::from_values(degree_ - 1, state_->shelf_size, std::move(*x), state_->coeff_size, state_->modulus);
}

std::optional<Cochain> is_coboundary(const FiniteShelf& shelf, const CoefficientSystem& coeff, const Cochain& f,
                                     const ResourceLimits& limits)
{
    return CoboundarySolver(shelf, coeff, f.degree(), f.modulus(), limits).preimage(f);
}

CohomologyClass make_class(const FiniteShelf& shelf, const CoefficientSystem& coeff, Cochain f)
{
    if (!coboundary(shelf, coeff, f).is_zero())
        throw ContractViolation("class representative of degree " + std::to_string(f.degree()) +
                                " is not a cocycle");
    return CohomologyClass{std::move(f), coeff};
}

namespace {

struct DegreeSplit {
    std::size_t boundary_rank = 0;
    std::vector<IntVector> reps;
    IntMatrix coords;  // inverse of [B | R | L]
};

IntMatrix columns_to_matrix(const std::vector<IntVector>& cols, std::size_t rows)
{
    IntMatrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = cols[c][r];
    return m;
}

// Append v to `basis` when it is independent of it modulo p.
bool extend_basis(std::vector<IntVector>& basis, const IntVector& v, std::size_t dim, unsigned long p)
{
    basis.push_back(v);
    if (rank(columns_to_matrix(basis, dim), p) == basis.size())
        return true;
    basis.pop_back();
    return false;
}

DegreeSplit split_degree(const IntMatrix& d_out, const IntMatrix& d_in, std::size_t dim, unsigned long p,
                         std::mt19937_64& rng)
{
    DegreeSplit s;
    std::vector<IntVector> basis;
    for (std::size_t c = 0; c < d_in.cols(); ++c)
        extend_basis(basis, modp::reduce(d_in.column(c), p), dim, p);
    s.boundary_rank = basis.size();
    auto cycles = modp::kernel_basis(d_out, p);
    for (const auto& z : cycles)
        if (extend_basis(basis, z, dim, p))
            s.reps.push_back(z);
    std::uniform_int_distribution<unsigned long> coin(0, p - 1);
    for (std::size_t j = 0; j < dim && basis.size() < dim; ++j) {
        IntVector e(dim);
        e[j] = 1;
        if (!extend_basis(basis, e, dim, p))
            continue;
        // Shift the complement vector by a random cycle.
        IntVector& l = basis.back();
        for (const auto& z : cycles) {
            unsigned long k = coin(rng);
            for (std::size_t r = 0; r < dim; ++r)
                l[r] += k * z[r];
        }
        l = modp::reduce(l, p);
    }
    auto inv = modp::inverse(columns_to_matrix(basis, dim), p);
    if (!inv)
        throw ContractViolation("induced coproduct: complement basis is singular");
    s.coords = std::move(*inv);
    return s;
}

Integer mod(const Integer& v, unsigned long p)
{
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
    return r;
}

}  // namespace

InducedCoproduct induced_coproduct(const FiniteShelf& shelf, unsigned long p, int max_degree, std::uint64_t seed,
                                   const ResourceLimits& limits)
{
    if (!is_prime(p))
        throw InputError("modulus " + std::to_string(p) + " is not prime");
    if (max_degree < 0)
        throw InputError("max degree must be non-negative");
    const auto coeff = CoefficientSystem::trivial();
    std::mt19937_64 rng(seed);
    std::vector<IntMatrix> d;
    for (int k = 0; k <= max_degree + 1; ++k)
        d.push_back(boundary_matrix(shelf, coeff, k, limits));
    std::vector<DegreeSplit> split;
    for (int k = 0; k <= max_degree; ++k)
        split.push_back(split_degree(d[k], d[k + 1], d[k].cols(), p, rng));

    InducedCoproduct out;
    out.p = p;
    out.max_degree = max_degree;
    for (int k = 0; k <= max_degree; ++k) {
        out.dims.push_back(split[k].reps.size());
        out.reps.push_back(split[k].reps);
    }
    out.table.resize(max_degree + 1);
    for (int k = 0; k <= max_degree; ++k) {
        for (const IntVector& z : split[k].reps) {
            // Delta(z), one matrix per left degree i.
            std::vector<IntMatrix> parts;
            for (int i = 0; i <= k; ++i)
                parts.emplace_back(d[i].cols(), d[k - i].cols());
            std::size_t index = 0;
            for (const Tuple& t : all_tuples(shelf.size(), k)) {
                const Integer& zt = z[index++];
                if (zt == 0)
                    continue;
                for (const auto& [key, c] : coproduct(shelf, bar(t))) {
                    const int i = static_cast<int>(key.first.size());
                    parts[i](encode(shelf.size(), key.first), encode(shelf.size(), key.second)) += zt * c;
                }
            }
            std::vector<IntMatrix> row;
            for (int i = 0; i <= k; ++i) {
                const DegreeSplit& left = split[i];
                const DegreeSplit& right = split[k - i];
                IntMatrix coords = left.coords * parts[i] * right.coords.transposed();
                const std::size_t lb = left.boundary_rank, lr = lb + left.reps.size();
                const std::size_t rb = right.boundary_rank, rr = rb + right.reps.size();
                IntMatrix classes(left.reps.size(), right.reps.size());
                for (std::size_t r = 0; r < coords.rows(); ++r)
                    for (std::size_t c = 0; c < coords.cols(); ++c) {
                        Integer v = mod(coords(r, c), p);
                        bool r_class = r >= lb && r < lr, c_class = c >= rb && c < rr;
                        bool r_compl = r >= lr, c_compl = c >= rr;
                        if (r_class && c_class)
                            classes(r - lb, c - rb) = v;
                        else if (v != 0 && ((r_compl && (c_compl || c_class)) || (r_class && c_compl)))
                            out.complement_components_vanish = false;
                    }
                row.push_back(std::move(classes));
            }
            out.table[k].push_back(std::move(row));
        }
    }
    return out;
}

std::string induced_coassociativity_failure(const InducedCoproduct& c)
{
    const unsigned long p = c.p;
    for (int k = 0; k <= c.max_degree; ++k)
        for (std::size_t a = 0; a < c.dims[k]; ++a)
            for (int i = 0; i <= k; ++i)
                for (int j = 0; i + j <= k; ++j) {
                    const int l = k - i - j;
                    for (std::size_t b = 0; b < c.dims[i]; ++b)
                        for (std::size_t m = 0; m < c.dims[j]; ++m)
                            for (std::size_t n = 0; n < c.dims[l]; ++n) {
                                Integer lhs = 0, rhs = 0;
                                for (std::size_t u = 0; u < c.dims[i + j]; ++u)
                                    lhs += c.coefficient(k, a, i + j, u, n) * c.coefficient(i + j, u, i, b, m);
                                for (std::size_t v = 0; v < c.dims[j + l]; ++v)
                                    rhs += c.coefficient(k, a, i, b, v) * c.coefficient(j + l, v, j, m, n);
                                if (mod(lhs - rhs, p) != 0) {
                                    std::ostringstream msg;
                                    msg << "coassociativity fails on class " << a << " of H_" << k << " at component ("
                                        << i << ":" << b << ", " << j << ":" << m << ", " << l << ":" << n << ")";
                                    return msg.str();
                                }
                            }
                }
    return {};
}

std::string induced_counit_failure(const InducedCoproduct& c)
{
    if (c.dims.empty() || c.dims[0] != 1)
        return "H_0 is not one-dimensional";
    const Integer eps = c.reps[0][0][0];
    for (int k = 0; k <= c.max_degree; ++k)
        for (std::size_t a = 0; a < c.dims[k]; ++a)
            for (std::size_t b = 0; b < c.dims[k]; ++b) {
                Integer expect = a == b ? 1 : 0;
                Integer left = mod(eps * c.coefficient(k, a, 0, 0, b), c.p);
                Integer right = mod(eps * c.coefficient(k, a, k, b, 0), c.p);
                if (left != expect || right != expect) {
                    std::ostringstream msg;
                    msg << "counit law fails on class " << a << " of H_" << k << " (component " << b << ")";
                    return msg.str();
                }
            }
    return {};
}

int detect_hbar_sign(const FiniteShelf& shelf)
{
    std::vector<std::pair<BarTensor, BarTensor>> pairs;
    for (const Tuple& t : all_tuples(shelf.size(), 2)) {
        BarElement b = bar(t);
        pairs.emplace_back(tensor_diff(shelf, homotopy_hbar(shelf, b)) + homotopy_hbar(shelf, diff(shelf, b)),
                           tau(dendri(shelf, b, Side::left)) - dendri(shelf, b, Side::right));
    }
    return fit_sign(pairs);
}

namespace {

// Defect and d*(witness) over all cocycle pairs, for the lowest total degree
// (up to 4) where the comparison is not 0 = 0.
int detect_witness_sign(const FiniteShelf& shelf, WitnessKind kind)
{
    const auto coeff = CoefficientSystem::trivial();
    std::vector<std::vector<Cochain>> cocycles(4);
    for (int n = 1; n <= 3; ++n)
        cocycles[n] = cocycle_basis(shelf, coeff, n);
    for (int total = 2; total <= 4; ++total) {
        std::vector<std::pair<Cochain, Cochain>> pairs;
        for (int i = 1; i < total; ++i)
            for (const auto& f : cocycles[i])
                for (const auto& g : cocycles[total - i]) {
                    const int sign = parity_sign(f.degree() * g.degree());
                    Cochain defect = kind == WitnessKind::commutativity
                                         ? cup(shelf, f, g) - sign * cup(shelf, g, f)
                                         : half_cup(shelf, f, g, Side::right) - sign * half_cup(shelf, g, f, Side::left);
                    pairs.emplace_back(std::move(defect), coboundary(shelf, coeff, witness(shelf, f, g, kind)));
                }
        if (int s = fit_sign(pairs); s != 0)
            return s;
        bool all_zero = true;
        for (const auto& [lhs, rhs] : pairs)
            all_zero = all_zero && lhs.is_zero() && rhs.is_zero();
        if (!all_zero)
            return 0;
    }
    return 0;
}

}  // namespace

int detect_commutativity_sign(const FiniteShelf& shelf)
{
    return detect_witness_sign(shelf, WitnessKind::commutativity);
}

int detect_zinbiel_sign(const FiniteShelf& shelf)
{
    return detect_witness_sign(shelf, WitnessKind::zinbielity);
}

}  // namespace rackhom
