#pragma once

#include <string>
#include <string_view>

#include "euclid/element.hpp"

namespace euclid {

/// Element literals:
///   Z       optional sign and decimal digits ("-11")
///   Z[i]    "a", "bi", "a+bi", "a-bi" ("i" alone means 1i)
///   F_p[X]  sum of "c*x^k", "x^k", "c*x", "x", "c" terms; coefficients reduced mod p
/// Throws ParseError on malformed text.
Element parse_element(std::string_view text, const DomainTag& tag);

Integer parse_integer(std::string_view text);

/// "z", "gauss" or "poly" (the latter requires characteristic p).
DomainTag parse_domain(std::string_view name, std::uint64_t characteristic);

}  // namespace euclid
