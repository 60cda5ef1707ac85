#include "rackhom/exactlin.hpp"

#include "rackhom/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <sstream>
#include <utility>

namespace rackhom {

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows)
{
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw InputError("IntMatrix::from_rows: ragged rows");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

IntMatrix IntMatrix::transposed() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool IntMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

IntVector IntMatrix::column(std::size_t c) const
{
    IntVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out[r] = (*this)(r, c);
    return out;
}

IntVector IntMatrix::apply(const IntVector& v) const
{
    if (v.size() != cols_)
        throw InputError("IntMatrix::apply: dimension mismatch");
    IntVector out(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c] == 0)
            continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            const Integer& a = (*this)(r, c);
            if (a != 0)
                out[r] += a * v[c];
        }
    }
    return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw InputError("IntMatrix product: dimension mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t k = 0; k < a.cols(); ++k)
        for (std::size_t c = 0; c < b.cols(); ++c) {
            const Integer& bv = b(k, c);
            if (bv == 0)
                continue;
            for (std::size_t r = 0; r < a.rows(); ++r) {
                const Integer& av = a(r, k);
                if (av != 0)
                    out(r, c) += av * bv;
            }
        }
    return out;
}

namespace {

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j)
{
    if (i == j)
        return;
    for (std::size_t c = 0; c < m.cols(); ++c)
        swap(m(i, c), m(j, c));
}

void swap_cols(IntMatrix& m, std::size_t i, std::size_t j)
{
    if (i == j)
        return;
    for (std::size_t r = 0; r < m.rows(); ++r)
        swap(m(r, i), m(r, j));
}

// row_i += q * row_j
void add_row(IntMatrix& m, std::size_t i, std::size_t j, const Integer& q, std::size_t from = 0)
{
    for (std::size_t c = from; c < m.cols(); ++c)
        if (m(j, c) != 0)
            m(i, c) += q * m(j, c);
}

// col_i += q * col_j
void add_col(IntMatrix& m, std::size_t i, std::size_t j, const Integer& q, std::size_t from = 0)
{
    for (std::size_t r = from; r < m.rows(); ++r)
        if (m(r, j) != 0)
            m(r, i) += q * m(r, j);
}

void negate_row(IntMatrix& m, std::size_t i)
{
    for (std::size_t c = 0; c < m.cols(); ++c)
        m(i, c) = -m(i, c);
}

// Smallest nonzero |a(i,j)| with i, j >= t; ties by (row, col).
std::optional<std::pair<std::size_t, std::size_t>> min_pivot(const IntMatrix& a, std::size_t t)
{
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            const Integer& v = a(i, j);
            if (v == 0)
                continue;
            if (!best || cmpabs(v, best_abs) < 0) {
                best = {i, j};
                best_abs = abs(v);
                if (best_abs == 1)
                    return best;
            }
        }
    return best;
}

// In-place Smith reduction. U and V are updated when non-null so that
// U_out * M * V_out = D.
IntVector reduce_dense(IntMatrix& a, IntMatrix* u, IntMatrix* v)
{
    const std::size_t m = a.rows(), n = a.cols();
    IntVector diag;
    std::size_t t = 0;
    while (t < std::min(m, n)) {
        auto pivot = min_pivot(a, t);
        if (!pivot)
            break;
        auto [pi, pj] = *pivot;
        swap_rows(a, t, pi);
        if (u)
            swap_rows(*u, t, pi);
        swap_cols(a, t, pj);
        if (v)
            swap_cols(*v, t, pj);

        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a(i, t) == 0)
                    continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                if (q != 0) {
                    Integer nq = -q;
                    add_row(a, i, t, nq, t);
                    if (u)
                        add_row(*u, i, t, nq);
                }
                if (a(i, t) != 0)
                    dirty = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a(t, j) == 0)
                    continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                if (q != 0) {
                    Integer nq = -q;
                    add_col(a, j, t, nq, t);
                    if (v)
                        add_col(*v, j, t, nq);
                }
                if (a(t, j) != 0)
                    dirty = true;
            }
            if (dirty) {
                // A remainder is now smaller than the pivot; bring the least
                // entry of row/column t into position.
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < m; ++i)
                    if (a(i, t) != 0 && cmpabs(a(i, t), a(bi, bj)) < 0)
                        bi = i, bj = t;
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a(t, j) != 0 && cmpabs(a(t, j), a(bi, bj)) < 0)
                        bi = t, bj = j;
                swap_rows(a, t, bi);
                if (u)
                    swap_rows(*u, t, bi);
                swap_cols(a, t, bj);
                if (v)
                    swap_cols(*v, t, bj);
                continue;
            }
            // Row and column are clear; enforce divisibility of the rest.
            std::optional<std::size_t> offender;
            for (std::size_t i = t + 1; i < m && !offender; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a(i, j) != 0 && !mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        offender = i;
                        break;
                    }
            if (!offender)
                break;
            add_row(a, t, *offender, 1, t);
            if (u)
                add_row(*u, t, *offender, 1);
        }
        if (a(t, t) < 0) {
            negate_row(a, t);
            if (u)
                negate_row(*u, t);
        }
        diag.push_back(a(t, t));
        ++t;
    }
    diag.resize(std::min(m, n));
    return diag;
}

void check_prime(unsigned long p)
{
    if (p > std::numeric_limits<std::uint32_t>::max())
        throw InputError("modulus must be below 2^32");
    if (!is_prime(p))
        throw InputError("modulus " + std::to_string(p) + " is not prime");
}

// Sparse elimination on rows. Over Z only unit entries are used as pivots;
// over F_p every nonzero entry is a unit. Pivot choice minimizes the
// Markowitz fill-in estimate, ties by (row, col).
class SparseEliminator {
public:
    using Row = std::vector<std::pair<std::size_t, Integer>>;

    SparseEliminator(const IntMatrix& m, std::optional<unsigned long> modulus)
        : cols_(m.cols()), modulus_(modulus), rows_(m.rows()), col_count_(m.cols(), 0), col_rows_(m.cols())
    {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) {
                Integer v = m(r, c);
                if (modulus_)
                    mpz_fdiv_r_ui(v.get_mpz_t(), v.get_mpz_t(), *modulus_);
                if (v != 0) {
                    rows_[r].emplace_back(c, v);
                    ++col_count_[c];
                    col_rows_[c].push_back(r);
                }
            }
            if (!rows_[r].empty())
                active_.push_back(r);
        }
    }

    // Returns the number of pivots eliminated.
    std::size_t run()
    {
        std::size_t pivots = 0;
        for (;;) {
            auto pick = choose_pivot();
            if (!pick)
                break;
            eliminate(pick->first, pick->second);
            ++pivots;
        }
        return pivots;
    }

    IntMatrix residual() const
    {
        std::vector<std::size_t> cols;
        std::map<std::size_t, std::size_t> col_index;
        for (std::size_t r : active_)
            for (const auto& [c, v] : rows_[r])
                col_index.emplace(c, 0);
        std::size_t k = 0;
        for (auto& [c, idx] : col_index)
            idx = k++;
        IntMatrix out(active_.size(), col_index.size());
        for (std::size_t i = 0; i < active_.size(); ++i)
            for (const auto& [c, v] : rows_[active_[i]])
                out(i, col_index.at(c)) = v;
        return out;
    }

private:
    bool usable(const Integer& v) const { return modulus_ ? v != 0 : (v == 1 || v == -1); }

    std::optional<std::pair<std::size_t, std::size_t>> choose_pivot() const
    {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        std::size_t best_cost = std::numeric_limits<std::size_t>::max();
        for (std::size_t r : active_) {
            const Row& row = rows_[r];
            for (const auto& [c, v] : row) {
                if (!usable(v))
                    continue;
                std::size_t cost = (row.size() - 1) * (col_count_[c] - 1);
                if (cost < best_cost || (cost == best_cost && std::make_pair(r, c) < *best)) {
                    best_cost = cost;
                    best = {r, c};
                }
            }
            if (best_cost == 0)
                break;
        }
        return best;
    }

    Integer inverse_of(const Integer& v) const
    {
        if (!modulus_)
            return v;  // +-1
        Integer inv, mod = *modulus_;
        mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
        return inv;
    }

    static const Integer* find(const Row& row, std::size_t c)
    {
        auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::size_t key) { return e.first < key; });
        return (it != row.end() && it->first == c) ? &it->second : nullptr;
    }

    void eliminate(std::size_t pr, std::size_t pc)
    {
        const Row pivot_row = rows_[pr];
        const Integer inv = inverse_of(*find(pivot_row, pc));
        for (std::size_t r : col_rows_[pc]) {
            if (r == pr || rows_[r].empty())
                continue;
            const Integer* a = find(rows_[r], pc);
            if (!a)
                continue;
            Integer factor = -(*a) * inv;
            combine(r, pivot_row, factor);
        }
        for (const auto& [c, v] : pivot_row)
            --col_count_[c];
        rows_[pr].clear();
        active_.erase(std::find(active_.begin(), active_.end(), pr));
    }

    // row_r += factor * src
    void combine(std::size_t r, const Row& src, const Integer& factor)
    {
        Row& dst = rows_[r];
        Row merged;
        merged.reserve(dst.size() + src.size());
        auto i = dst.begin();
        auto j = src.begin();
        while (i != dst.end() || j != src.end()) {
            if (j == src.end() || (i != dst.end() && i->first < j->first)) {
                merged.push_back(std::move(*i++));
                continue;
            }
            Integer v = factor * j->second;
            std::size_t c = j->first;
            bool existed = i != dst.end() && i->first == c;
            if (existed)
                v += (i++)->second;
            if (modulus_)
                mpz_fdiv_r_ui(v.get_mpz_t(), v.get_mpz_t(), *modulus_);
            ++j;
            if (v != 0) {
                merged.emplace_back(c, std::move(v));
                if (!existed) {
                    ++col_count_[c];
                    col_rows_[c].push_back(r);
                }
            } else if (existed) {
                --col_count_[c];
            }
        }
        dst = std::move(merged);
        if (dst.empty())
            active_.erase(std::find(active_.begin(), active_.end(), r));
    }

    std::size_t cols_;
    std::optional<unsigned long> modulus_;
    std::vector<Row> rows_;
    std::vector<std::size_t> col_count_;
    std::vector<std::vector<std::size_t>> col_rows_;  // may hold stale rows
    std::vector<std::size_t> active_;
};

using Word = std::uint64_t;

struct ModMatrix {
    std::size_t rows, cols;
    std::vector<Word> data;
    Word& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
};

Word to_mod(const Integer& v, unsigned long p) { return mpz_fdiv_ui(v.get_mpz_t(), p); }

Word pow_mod(Word b, Word e, Word p)
{
    Word r = 1;
    b %= p;
    while (e) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

ModMatrix to_mod_matrix(const IntMatrix& m, unsigned long p, std::size_t extra_cols = 0)
{
    ModMatrix out{m.rows(), m.cols() + extra_cols, std::vector<Word>(m.rows() * (m.cols() + extra_cols), 0)};
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out.at(r, c) = to_mod(m(r, c), p);
    return out;
}

// Reduced row echelon form over the first `pivot_cols` columns; returns the
// pivot column of each pivot row.
std::vector<std::size_t> rref(ModMatrix& a, std::size_t pivot_cols, Word p)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < pivot_cols && row < a.rows; ++c) {
        std::size_t sel = row;
        while (sel < a.rows && a.at(sel, c) == 0)
            ++sel;
        if (sel == a.rows)
            continue;
        if (sel != row)
            for (std::size_t k = 0; k < a.cols; ++k)
                std::swap(a.at(sel, k), a.at(row, k));
        Word inv = pow_mod(a.at(row, c), p - 2, p);
        for (std::size_t k = 0; k < a.cols; ++k)
            a.at(row, k) = a.at(row, k) * inv % p;
        for (std::size_t r = 0; r < a.rows; ++r) {
            if (r == row || a.at(r, c) == 0)
                continue;
            Word f = p - a.at(r, c);
            for (std::size_t k = 0; k < a.cols; ++k)
                if (a.at(row, k))
                    a.at(r, k) = (a.at(r, k) + f * a.at(row, k)) % p;
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

// Bareiss fraction-free elimination; returns the rank.
std::size_t bareiss_rank(IntMatrix a)
{
    const std::size_t m = a.rows(), n = a.cols();
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t sel = r;
        while (sel < m && a(sel, c) == 0)
            ++sel;
        if (sel == m)
            continue;
        swap_rows(a, r, sel);
        for (std::size_t i = r + 1; i < m; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                a(i, j) = a(i, j) * a(r, c) - a(i, c) * a(r, j);
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            a(i, c) = 0;
        }
        prev = a(r, c);
        ++r;
    }
    return r;
}

}  // namespace

std::size_t SNFResult::rank() const
{
    return static_cast<std::size_t>(std::count_if(diagonal.begin(), diagonal.end(), [](const Integer& d) { return d != 0; }));
}

IntVector SNFResult::invariant_factors() const
{
    IntVector out;
    for (const auto& d : diagonal)
        if (d != 0)
            out.push_back(d);
    return out;
}

SNFResult smith_normal_form(const IntMatrix& m)
{
    SNFResult result;
    IntMatrix a = m;
    result.left = IntMatrix::identity(m.rows());
    result.right = IntMatrix::identity(m.cols());
    result.diagonal = reduce_dense(a, &result.left, &result.right);
    return result;
}

IntVector invariant_factors(const IntMatrix& m)
{
    SparseEliminator elim(m, std::nullopt);
    std::size_t units = elim.run();
    IntMatrix rest = elim.residual();
    IntVector out(units, Integer(1));
    for (auto& d : reduce_dense(rest, nullptr, nullptr))
        if (d != 0)
            out.push_back(d);
    return out;
}

Integer determinant(const IntMatrix& m)
{
    if (m.rows() != m.cols())
        throw InputError("determinant: matrix is not square");
    IntMatrix a = m;
    const std::size_t n = a.rows();
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t sel = k;
        while (sel < n && a(sel, k) == 0)
            ++sel;
        if (sel == n)
            return 0;
        if (sel != k) {
            swap_rows(a, k, sel);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return n == 0 ? Integer(1) : Integer(sign * prev);
}

std::string HomologyGroup::to_string() const
{
    std::ostringstream out;
    bool first = true;
    if (free_rank > 0) {
        out << "Z";
        if (free_rank > 1)
            out << "^" << free_rank;
        first = false;
    }
    for (const auto& t : torsion) {
        out << (first ? "" : " + ") << "Z/" << t;
        first = false;
    }
    if (first)
        out << "0";
    return out.str();
}

HomologyGroup direct_sum(const HomologyGroup& a, const HomologyGroup& b)
{
    // Split every factor into prime powers, then recombine by position.
    std::map<Integer, std::vector<Integer>> powers;
    auto split = [&](Integer d) {
        for (Integer q = 2; q * q <= d; ++q) {
            if (!mpz_divisible_p(d.get_mpz_t(), q.get_mpz_t()))
                continue;
            Integer pw = 1;
            while (mpz_divisible_p(d.get_mpz_t(), q.get_mpz_t())) {
                d /= q;
                pw *= q;
            }
            powers[q].push_back(pw);
        }
        if (d > 1)
            powers[d].push_back(d);
    };
    for (const auto& t : a.torsion)
        split(t);
    for (const auto& t : b.torsion)
        split(t);
    std::size_t length = 0;
    for (auto& [q, list] : powers) {
        std::sort(list.begin(), list.end(), [](const Integer& x, const Integer& y) { return x > y; });
        length = std::max(length, list.size());
    }
    IntVector factors(length, Integer(1));
    for (const auto& [q, list] : powers)
        for (std::size_t i = 0; i < list.size(); ++i)
            factors[i] *= list[i];
    std::reverse(factors.begin(), factors.end());
    return HomologyGroup{a.free_rank + b.free_rank, factors};
}

HomologyGroup homology_of_pair(const IntMatrix& boundary_out, const IntMatrix& boundary_in,
                               std::optional<unsigned long> modulus)
{
    if (boundary_out.cols() != boundary_in.rows())
        throw InputError("homology_of_pair: boundary_out has " + std::to_string(boundary_out.cols()) +
                         " columns but boundary_in has " + std::to_string(boundary_in.rows()) + " rows");
    if (modulus)
        check_prime(*modulus);

    // out * in = 0, column by column.
    for (std::size_t j = 0; j < boundary_in.cols(); ++j) {
        IntVector image = boundary_out.apply(boundary_in.column(j));
        for (const auto& v : image) {
            bool nonzero = modulus ? mpz_fdiv_ui(v.get_mpz_t(), *modulus) != 0 : v != 0;
            if (nonzero)
                throw ContractViolation("homology_of_pair: boundary_out * boundary_in is nonzero on basis vector " +
                                        std::to_string(j));
        }
    }

    const std::size_t dim = boundary_out.cols();
    if (modulus) {
        std::size_t r_out = rank(boundary_out, modulus), r_in = rank(boundary_in, modulus);
        return HomologyGroup{dim - r_out - r_in, {}};
    }
    std::size_t r_out = invariant_factors(boundary_out).size();
    IntVector in_factors = invariant_factors(boundary_in);
    HomologyGroup h;
    h.free_rank = dim - r_out - in_factors.size();
    for (auto& d : in_factors)
        if (d > 1)
            h.torsion.push_back(d);
    return h;
}

std::optional<IntVector> solve_integral(const IntMatrix& m, const IntVector& b)
{
    if (b.size() != m.rows())
        throw InputError("solve_integral: right-hand side has " + std::to_string(b.size()) + " entries, matrix has " +
                         std::to_string(m.rows()) + " rows");
    return solve_integral(smith_normal_form(m), m, b);
}

std::optional<IntVector> solve_integral(const SNFResult& snf, const IntMatrix& m, const IntVector& b)
{
    if (b.size() != m.rows())
        throw InputError("solve_integral: dimension mismatch");
    IntVector c = snf.left.apply(b);
    IntVector y(m.cols());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Integer d = i < snf.diagonal.size() ? snf.diagonal[i] : Integer(0);
        if (d == 0) {
            if (c[i] != 0)
                return std::nullopt;
            continue;
        }
        if (!mpz_divisible_p(c[i].get_mpz_t(), d.get_mpz_t()))
            return std::nullopt;
        y[i] = c[i] / d;
    }
    IntVector x = snf.right.apply(y);
    if (m.apply(x) != b)
        throw ContractViolation("solve_integral: back-substitution check failed");
    return x;
}

std::vector<IntVector> kernel_basis(const IntMatrix& m)
{
    SNFResult snf = smith_normal_form(m);
    std::vector<IntVector> out;
    for (std::size_t j = snf.rank(); j < m.cols(); ++j)
        out.push_back(snf.right.column(j));
    return out;
}

std::size_t rank(const IntMatrix& m, std::optional<unsigned long> modulus)
{
    if (!modulus)
        return bareiss_rank(m);
    check_prime(*modulus);
    SparseEliminator elim(m, modulus);
    std::size_t r = elim.run();
    // Every nonzero residue is a unit, so nothing is left over.
    return r;
}

bool is_prime(unsigned long p)
{
    if (p < 2)
        return false;
    for (unsigned long q = 2; q * q <= p; ++q)
        if (p % q == 0)
            return false;
    return true;
}

namespace modp {

IntVector reduce(const IntVector& v, unsigned long p)
{
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = static_cast<unsigned long>(to_mod(v[i], p));
    return out;
}

std::vector<IntVector> kernel_basis(const IntMatrix& m, unsigned long p)
{
    check_prime(p);
    ModMatrix a = to_mod_matrix(m, p);
    auto pivots = rref(a, m.cols(), p);
    std::vector<char> is_pivot(m.cols(), 0);
    for (auto c : pivots)
        is_pivot[c] = 1;
    std::vector<IntVector> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        IntVector v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = static_cast<unsigned long>((p - a.at(i, f)) % p);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<IntVector> solve(const IntMatrix& m, const IntVector& b, unsigned long p)
{
    check_prime(p);
    if (b.size() != m.rows())
        throw InputError("modp::solve: dimension mismatch");
    ModMatrix a = to_mod_matrix(m, p, 1);
    for (std::size_t r = 0; r < m.rows(); ++r)
        a.at(r, m.cols()) = to_mod(b[r], p);
    auto pivots = rref(a, m.cols(), p);
    for (std::size_t r = pivots.size(); r < m.rows(); ++r)
        if (a.at(r, m.cols()) != 0)
            return std::nullopt;
    IntVector x(m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = static_cast<unsigned long>(a.at(i, m.cols()));
    return x;
}

std::optional<IntMatrix> inverse(const IntMatrix& m, unsigned long p)
{
    check_prime(p);
    if (m.rows() != m.cols())
        throw InputError("modp::inverse: matrix is not square");
    const std::size_t n = m.rows();
    ModMatrix a = to_mod_matrix(m, p, n);
    for (std::size_t i = 0; i < n; ++i)
        a.at(i, n + i) = 1;
    auto pivots = rref(a, n, p);
    if (pivots.size() != n)
        return std::nullopt;
    IntMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            out(r, c) = static_cast<unsigned long>(a.at(r, n + c));
    return out;
}

}  // namespace modp

}  // namespace rackhom
