#pragma once

#include <string>
#include <vector>

#include "euclid/element.hpp"

namespace euclid {

/// Positional numeral s_m ... s_0 in base B, most significant digit first.
struct Numeral {
    Element base;
    std::vector<Element> digits;
};

/// integer_digits . preperiod_digits (repetend_digits)
struct RecurringNumeral {
    Element base;
    std::vector<Element> integer_digits;
    std::vector<Element> preperiod_digits;
    std::vector<Element> repetend_digits;
    /// Set when some digit d has nu(d) >= nu(B), i.e. the sequence is not a
    /// genuine digit string (possible in Z[i] and for signed sequences).
    bool non_digit_sequence = false;
};

/// True when d = 0 or nu(d) < nu(B).
bool is_digit(const Element& d, const Element& base);

/// Repeated division by B. Negative integers in a positive integer base get
/// all digits negated, so the expansion terminates. Throws DomainError
/// "invalid base" for zero or unit B, and when the digit cap is exceeded.
Numeral to_digits(const Element& s, const Element& base);

enum class DigitCheck { Strict, Lenient };

/// sum s_j B^j. Strict mode rejects digits violating the digit bound.
Element from_digits(const Numeral& n, DigitCheck check = DigitCheck::Strict);
Element from_digits(const std::vector<Element>& digits, const Element& base);

/// to_digits, left-padded with zeros to at least `width` digits.
std::vector<Element> padded_digits(const Element& s, const Element& base, std::size_t width);

/// Integer bases up to 10 juxtapose digits ("142857"); everything else uses
/// comma-separated digit literals ("[1,0,1]").
std::string format_numeral(const Numeral& n);
/// "0.(142857)", "0.(0,1,0,4)", "0.1(6)", "0.[2,3](1,4)".
std::string format_numeral(const RecurringNumeral& n);

/// Digit list as JSON-friendly strings.
std::vector<std::string> digit_strings(const std::vector<Element>& digits);

}  // namespace euclid
