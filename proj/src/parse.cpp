#include "euclid/parse.hpp"

#include <cctype>
#include <vector>

namespace euclid {

namespace {

std::string strip_spaces(std::string_view text) {
    std::string out;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// Splits "a+b-c" into signed terms {"a", "+b", "-c"}; a leading sign stays attached.
std::vector<std::string> split_terms(const std::string& s) {
    std::vector<std::string> terms;
    std::string cur;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if ((c == '+' || c == '-') && i > 0 && s[i - 1] != '^') {
            terms.push_back(cur);
            cur.clear();
        }
        cur.push_back(c);
    }
    terms.push_back(cur);
    return terms;
}

Element parse_gaussian(const std::string& s) {
    if (s.empty()) throw ParseError("empty Gaussian literal");
    Integer re = 0, im = 0;
    bool seen_re = false, seen_im = false;
    for (const auto& term : split_terms(s)) {
        if (term.empty() || term == "+" || term == "-") throw ParseError("malformed Gaussian literal: " + s);
        if (term.back() == 'i') {
            if (seen_im) throw ParseError("repeated imaginary part: " + s);
            seen_im = true;
            std::string coeff = term.substr(0, term.size() - 1);
            if (coeff.empty() || coeff == "+") im = 1;
            else if (coeff == "-") im = -1;
            else im = parse_integer(coeff);
        } else {
            if (seen_re || seen_im) throw ParseError("malformed Gaussian literal: " + s);
            seen_re = true;
            re = parse_integer(term);
        }
    }
    return Element::gaussian(re, im);
}

Element parse_polynomial(const std::string& s, std::uint64_t p) {
    if (s.empty()) throw ParseError("empty polynomial literal");
    std::vector<std::int64_t> coeffs;
    const Integer mod(static_cast<unsigned long>(p));
    for (auto term : split_terms(s)) {
        bool negative = false;
        if (!term.empty() && (term[0] == '+' || term[0] == '-')) {
            negative = term[0] == '-';
            term.erase(0, 1);
        }
        if (term.empty()) throw ParseError("malformed polynomial literal: " + s);
        Integer c = 1;
        std::size_t degree = 0;
        const auto xpos = term.find_first_of("xX");
        if (xpos == std::string::npos) {
            c = parse_integer(term);
        } else {
            std::string head = term.substr(0, xpos);
            std::string tail = term.substr(xpos + 1);
            if (!head.empty()) {
                if (head.back() != '*') throw ParseError("expected '*' before x in: " + term);
                head.pop_back();
                c = parse_integer(head);
            }
            if (tail.empty()) {
                degree = 1;
            } else {
                if (tail[0] != '^' || !all_digits(tail.substr(1))) throw ParseError("malformed exponent in: " + term);
                degree = std::stoul(tail.substr(1));
                if (degree > 1'000'000) throw ParseError("exponent too large in: " + term);
            }
        }
        if (negative) c = -c;
        Integer r = c % mod;
        if (r < 0) r += mod;
        if (coeffs.size() <= degree) coeffs.resize(degree + 1, 0);
        coeffs[degree] = static_cast<std::int64_t>((coeffs[degree] + r.get_ui()) % p);
    }
    return Element::polynomial(p, coeffs);
}

}  // namespace

Integer parse_integer(std::string_view text) {
    std::string s = strip_spaces(text);
    std::string_view body = s;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) body.remove_prefix(1);
    if (!all_digits(body)) throw ParseError("not an integer: '" + std::string(text) + "'");
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    return Integer(s, 10);
}

Element parse_element(std::string_view text, const DomainTag& tag) {
    const std::string s = strip_spaces(text);
    switch (tag.kind) {
        case DomainKind::RationalIntegers: return Element::integer(parse_integer(s));
        case DomainKind::GaussianIntegers: return parse_gaussian(s);
        case DomainKind::PolynomialsOverPrimeField: return parse_polynomial(s, tag.characteristic);
    }
    throw ParseError("unknown domain");
}

DomainTag parse_domain(std::string_view name, std::uint64_t characteristic) {
    if (name == "z") return DomainTag::integers();
    if (name == "gauss") return DomainTag::gaussian();
    if (name == "poly") {
        if (characteristic == 0) throw ParseError("poly domain needs --char p");
        try {
            return DomainTag::polynomials(characteristic);
        } catch (const DomainError& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("unknown domain '" + std::string(name) + "' (expected z, gauss or poly)");
}

}  // namespace euclid
