#pragma once

#include "rackhom/shelf.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace rackhom {

// Caps on degree and basis size; operations refuse instead of thrashing.
struct ResourceLimits {
    int max_degree = 6;
    std::size_t max_basis = 4096;
};

// Number of basis elements of coeff_size * X^n, or throws ResourceLimitExceeded
// when it exceeds `limits.max_basis` (the message names n and the dimension).
std::size_t checked_dimension(int shelf_size, int coeff_size, int n, const ResourceLimits& limits);

// Unchecked count; saturates at SIZE_MAX.
std::size_t tuple_count(int shelf_size, int n);

// Basis order is lexicographic on (coeff, tuple): index = coeff * |X|^n + code(tuple).
std::size_t encode(int shelf_size, const Tuple& tuple, int coeff = 0);
std::pair<int, Tuple> decode(int shelf_size, int n, std::size_t index);

// All tuples of X^n in lexicographic order.
std::vector<Tuple> all_tuples(int shelf_size, int n);

std::string tuple_to_string(const Tuple& t);

}  // namespace rackhom
