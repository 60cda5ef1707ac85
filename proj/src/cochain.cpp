#include "rackhom/cochain.hpp"

#include "rackhom/basis.hpp"
#include "rackhom/errors.hpp"

#include <algorithm>

namespace rackhom {

Cochain::Cochain(int degree, int shelf_size, int coeff_size, std::optional<unsigned long> modulus)
    : degree_(degree), shelf_size_(shelf_size), coeff_size_(coeff_size), modulus_(modulus)
{
    if (degree < 0 || shelf_size < 1 || coeff_size < 1)
        throw InputError("cochain: bad shape");
    if (modulus && !is_prime(*modulus))
        throw InputError("cochain: modulus " + std::to_string(*modulus) + " is not prime");
    values_.assign(tuple_count(shelf_size, degree) * coeff_size, Integer(0));
}

Cochain Cochain::from_values(int degree, int shelf_size, IntVector values, int coeff_size,
                             std::optional<unsigned long> modulus)
{
    Cochain c(degree, shelf_size, coeff_size, modulus);
    if (values.size() != c.values_.size())
        throw InputError("cochain: expected " + std::to_string(c.values_.size()) + " values, got " +
                         std::to_string(values.size()));
    c.values_ = std::move(values);
    for (auto& v : c.values_)
        c.normalize(v);
    return c;
}

void Cochain::normalize(Integer& v) const
{
    if (modulus_)
        mpz_fdiv_r_ui(v.get_mpz_t(), v.get_mpz_t(), *modulus_);
}

const Integer& Cochain::at(const Tuple& tuple, int coeff) const
{
    if (static_cast<int>(tuple.size()) != degree_)
        throw InputError("cochain of degree " + std::to_string(degree_) + " evaluated on " + tuple_to_string(tuple));
    return values_[encode(shelf_size_, tuple, coeff)];
}

void Cochain::set(const Tuple& tuple, const Integer& value, int coeff)
{
    if (static_cast<int>(tuple.size()) != degree_)
        throw InputError("cochain of degree " + std::to_string(degree_) + " set on " + tuple_to_string(tuple));
    for (int x : tuple)
        if (x < 0 || x >= shelf_size_)
            throw InputError("cochain: tuple entry out of range in " + tuple_to_string(tuple));
    if (coeff < 0 || coeff >= coeff_size_)
        throw InputError("cochain: coefficient index out of range");
    set_index(encode(shelf_size_, tuple, coeff), value);
}

void Cochain::set_index(std::size_t index, const Integer& value)
{
    values_.at(index) = value;
    normalize(values_[index]);
}

Integer Cochain::evaluate(const LinearCombination<Tuple>& chain) const
{
    Integer out = 0;
    for (const auto& [t, c] : chain)
        out += c * at(t);
    normalize(out);
    return out;
}

bool Cochain::is_zero() const
{
    return std::all_of(values_.begin(), values_.end(), [](const Integer& v) { return v == 0; });
}

Cochain Cochain::reduced(unsigned long p) const
{
    return from_values(degree_, shelf_size_, values_, coeff_size_, p);
}

void Cochain::check_compatible(const Cochain& other) const
{
    if (degree_ != other.degree_ || shelf_size_ != other.shelf_size_ || coeff_size_ != other.coeff_size_ ||
        modulus_ != other.modulus_)
        throw InputError("cochain arithmetic on incompatible cochains");
}

Cochain& Cochain::operator+=(const Cochain& other)
{
    check_compatible(other);
    for (std::size_t i = 0; i < values_.size(); ++i) {
        values_[i] += other.values_[i];
        normalize(values_[i]);
    }
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& other)
{
    check_compatible(other);
    for (std::size_t i = 0; i < values_.size(); ++i) {
        values_[i] -= other.values_[i];
        normalize(values_[i]);
    }
    return *this;
}

Cochain& Cochain::operator*=(const Integer& scale)
{
    for (auto& v : values_) {
        v *= scale;
        normalize(v);
    }
    return *this;
}

}  // namespace rackhom
