#include "rackhom/basis.hpp"

#include "rackhom/errors.hpp"

#include <limits>
#include <sstream>

namespace rackhom {

std::size_t tuple_count(int shelf_size, int n)
{
    const std::size_t cap = std::numeric_limits<std::size_t>::max();
    std::size_t out = 1;
    for (int i = 0; i < n; ++i) {
        if (out > cap / static_cast<std::size_t>(shelf_size))
            return cap;
        out *= shelf_size;
    }
    return out;
}

std::size_t checked_dimension(int shelf_size, int coeff_size, int n, const ResourceLimits& limits)
{
    if (n < 0)
        throw InputError("negative degree " + std::to_string(n));
    if (n > limits.max_degree)
        throw ResourceLimitExceeded("degree " + std::to_string(n) + " exceeds the degree cap " +
                                    std::to_string(limits.max_degree));
    std::size_t count = tuple_count(shelf_size, n);
    if (count > limits.max_basis / static_cast<std::size_t>(coeff_size)) {
        std::ostringstream msg;
        msg << "C_" << n << " has dimension " << coeff_size << " * " << shelf_size << "^" << n
            << ", above the basis cap " << limits.max_basis;
        throw ResourceLimitExceeded(msg.str());
    }
    std::size_t dim = count * coeff_size;
    return dim;
}

std::size_t encode(int shelf_size, const Tuple& tuple, int coeff)
{
    std::size_t code = static_cast<std::size_t>(coeff);
    for (int x : tuple)
        code = code * shelf_size + x;
    return code;
}

std::pair<int, Tuple> decode(int shelf_size, int n, std::size_t index)
{
    Tuple t(n);
    for (int i = n - 1; i >= 0; --i) {
        t[i] = static_cast<int>(index % shelf_size);
        index /= shelf_size;
    }
    return {static_cast<int>(index), t};
}

std::vector<Tuple> all_tuples(int shelf_size, int n)
{
    std::size_t count = tuple_count(shelf_size, n);
    std::vector<Tuple> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(decode(shelf_size, n, i).second);
    return out;
}

std::string tuple_to_string(const Tuple& t)
{
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i)
        out += (i ? "," : "") + std::to_string(t[i]);
    return out + ")";
}

}  // namespace rackhom
