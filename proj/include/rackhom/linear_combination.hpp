#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>

namespace rackhom {

using Integer = mpz_class;

// Sparse formal Z-linear combination of keys. Zero coefficients are never
// stored, so two combinations are equal iff their term maps are equal.
template <typename Key>
class LinearCombination {
public:
    using Terms = std::map<Key, Integer>;
    using const_iterator = typename Terms::const_iterator;

    LinearCombination() = default;
    explicit LinearCombination(const Key& key, const Integer& coeff = 1) { add(key, coeff); }

    void add(const Key& key, const Integer& coeff)
    {
        if (coeff == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    void add(const LinearCombination& other, const Integer& scale)
    {
        if (scale == 0)
            return;
        for (const auto& [key, coeff] : other.terms_)
            add(key, coeff * scale);
    }

    Integer coefficient(const Key& key) const
    {
        auto it = terms_.find(key);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }

    LinearCombination& operator+=(const LinearCombination& other)
    {
        add(other, 1);
        return *this;
    }
    LinearCombination& operator-=(const LinearCombination& other)
    {
        add(other, -1);
        return *this;
    }
    LinearCombination& operator*=(const Integer& scale)
    {
        if (scale == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [key, coeff] : terms_)
            coeff *= scale;
        return *this;
    }

    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
    friend LinearCombination operator-(LinearCombination a) { return a *= -1; }
    friend LinearCombination operator*(const Integer& s, LinearCombination a) { return a *= s; }
    friend bool operator==(const LinearCombination& a, const LinearCombination& b) { return a.terms_ == b.terms_; }

    // Reduce every coefficient into [0, p).
    LinearCombination reduced_mod(unsigned long p) const
    {
        LinearCombination out;
        for (const auto& [key, coeff] : terms_) {
            Integer r;
            mpz_fdiv_r_ui(r.get_mpz_t(), coeff.get_mpz_t(), p);
            out.add(key, r);
        }
        return out;
    }

private:
    Terms terms_;
};

}  // namespace rackhom
