#pragma once

#include <vector>

#include "euclid/element.hpp"

namespace euclid {

struct IntegerPrimePower {
    Integer prime;
    unsigned long exponent = 0;
};

struct PrimePower {
    Element prime;  // unit-normalized
    unsigned long exponent = 0;
};

/// Factorization of |n| > 0 by trial division up to the budget; a leftover
/// cofactor is accepted only if it is provably or probabilistically prime.
/// Throws DomainError("factor too large") otherwise.
std::vector<IntegerPrimePower> factor_integer(const Integer& n);

/// Prime factorization of a nonzero element, ignoring the unit part.
///  Z: trial division; Z[i]: split of the norm; F_p[X]: trial division by
///  monic polynomials of increasing degree.
std::vector<PrimePower> factor(const Element& e);

bool is_prime(const Element& e);

}  // namespace euclid
