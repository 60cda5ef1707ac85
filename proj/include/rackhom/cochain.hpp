#pragma once

#include "rackhom/exactlin.hpp"
#include "rackhom/shelf.hpp"

#include <optional>

namespace rackhom {

// A function on coeff x X^n with values in Z, or in F_p when a modulus is
// set (values are then kept in [0, p)). Values are stored in basis order.
class Cochain {
public:
    Cochain() = default;
    Cochain(int degree, int shelf_size, int coeff_size = 1, std::optional<unsigned long> modulus = std::nullopt);
    static Cochain from_values(int degree, int shelf_size, IntVector values, int coeff_size = 1,
                               std::optional<unsigned long> modulus = std::nullopt);

    int degree() const { return degree_; }
    int shelf_size() const { return shelf_size_; }
    int coeff_size() const { return coeff_size_; }
    const std::optional<unsigned long>& modulus() const { return modulus_; }
    std::size_t dimension() const { return values_.size(); }
    const IntVector& values() const { return values_; }

    const Integer& at(const Tuple& tuple, int coeff = 0) const;
    void set(const Tuple& tuple, const Integer& value, int coeff = 0);
    const Integer& operator[](std::size_t index) const { return values_[index]; }
    void set_index(std::size_t index, const Integer& value);

    // Linear extension to a combination of tuples (trivial coefficients).
    Integer evaluate(const LinearCombination<Tuple>& chain) const;

    bool is_zero() const;
    // Same shape with values reduced mod p.
    Cochain reduced(unsigned long p) const;

    Cochain& operator+=(const Cochain& other);
    Cochain& operator-=(const Cochain& other);
    Cochain& operator*=(const Integer& scale);
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    friend Cochain operator-(Cochain a) { return a *= -1; }
    friend Cochain operator*(const Integer& s, Cochain a) { return a *= s; }
    bool operator==(const Cochain& other) const = default;

private:
    void check_compatible(const Cochain& other) const;
    void normalize(Integer& v) const;

    int degree_ = 0;
    int shelf_size_ = 1;
    int coeff_size_ = 1;
    std::optional<unsigned long> modulus_;
    IntVector values_{Integer(0)};
};

}  // namespace rackhom
