#include "euclid/digits.hpp"

#include <algorithm>

#include "euclid/budget.hpp"
#include "euclid/domain.hpp"

namespace euclid {

namespace {

bool juxtaposed(const Element& base) {
    return base.kind() == DomainKind::RationalIntegers && base.as_integer() >= 2 && base.as_integer() <= 10;
}

std::string join(const std::vector<Element>& digits, bool juxtapose) {
    std::string out;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (!juxtapose && i > 0) out += ",";
        out += digits[i].to_string();
    }
    return out;
}

bool all_genuine(const std::vector<Element>& digits, const Element& base) {
    return std::all_of(digits.begin(), digits.end(), [&](const Element& d) { return is_digit(d, base); });
}

}  // namespace

bool is_digit(const Element& d, const Element& base) { return d.is_zero() || valuation(d) < valuation(base); }

Numeral to_digits(const Element& s, const Element& base) {
    if (!(s.tag() == base.tag())) throw DomainError("to_digits: element and base from different domains");
    if (!is_proper(base)) throw DomainError("invalid base: " + base.to_string());
    Numeral n{base, {}};
    if (s.is_zero()) {
        n.digits.push_back(s);
        return n;
    }
    const bool flip = s.kind() == DomainKind::RationalIntegers && s.as_integer() < 0 && base.as_integer() > 0;
    Element rest = flip ? -s : s;
    const auto cap = budgets().digit_cap;
    while (!rest.is_zero()) {
        if (n.digits.size() >= cap)
            throw DomainError("digit expansion exceeded cap of " + std::to_string(cap) + " digits");
        auto [q, r] = divide(rest, base);
        n.digits.push_back(flip ? -r : r);
        rest = std::move(q);
    }
    std::reverse(n.digits.begin(), n.digits.end());
    return n;
}

Element from_digits(const std::vector<Element>& digits, const Element& base) {
    Element acc = Element::zero(base.tag());
    for (const auto& d : digits) acc = acc * base + d;
    return acc;
}

Element from_digits(const Numeral& n, DigitCheck check) {
    if (check == DigitCheck::Strict) {
        for (const auto& d : n.digits)
            if (!is_digit(d, n.base)) throw DomainError("invalid digit " + d.to_string() + " for base " + n.base.to_string());
    }
    return from_digits(n.digits, n.base);
}

std::vector<Element> padded_digits(const Element& s, const Element& base, std::size_t width) {
    auto digits = to_digits(s, base).digits;
    if (digits.size() == 1 && digits[0].is_zero()) digits.clear();
    if (digits.size() < width) digits.insert(digits.begin(), width - digits.size(), Element::zero(base.tag()));
    return digits;
}

std::string format_numeral(const Numeral& n) {
    const bool jux = juxtaposed(n.base) && all_genuine(n.digits, n.base) &&
                     std::none_of(n.digits.begin(), n.digits.end(), [](const Element& d) { return d.as_integer() < 0; });
    if (jux) return join(n.digits, true);
    if (n.digits.size() == 1 && n.digits[0].is_zero()) return "0";
    return "[" + join(n.digits, false) + "]";
}

std::string format_numeral(const RecurringNumeral& n) {
    auto nonneg = [](const std::vector<Element>& v) {
        return std::none_of(v.begin(), v.end(), [](const Element& d) { return d.as_integer() < 0; });
    };
    const bool jux = juxtaposed(n.base) && !n.non_digit_sequence && nonneg(n.integer_digits) &&
                     nonneg(n.preperiod_digits) && nonneg(n.repetend_digits);
    std::string out;
    const bool zero_int = n.integer_digits.empty() || (n.integer_digits.size() == 1 && n.integer_digits[0].is_zero());
    if (zero_int) out = "0";
    else out = jux ? join(n.integer_digits, true) : "[" + join(n.integer_digits, false) + "]";
    out += ".";
    if (!n.preperiod_digits.empty()) out += jux ? join(n.preperiod_digits, true) : "[" + join(n.preperiod_digits, false) + "]";
    out += "(" + join(n.repetend_digits, jux) + ")";
    return out;
}

std::vector<std::string> digit_strings(const std::vector<Element>& digits) {
    std::vector<std::string> out;
    out.reserve(digits.size());
    for (const auto& d : digits) out.push_back(d.to_string());
    return out;
}

}  // namespace euclid
