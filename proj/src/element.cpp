#include "euclid/element.hpp"

#include <algorithm>

namespace euclid {

namespace {

bool is_small_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

using Coeffs = std::vector<std::uint64_t>;

void trim(Coeffs& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

std::uint64_t reduce_signed(std::int64_t c, std::uint64_t p) {
    std::int64_t r = c % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(r);
}

}  // namespace

DomainTag DomainTag::polynomials(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 32) || !is_small_prime(p))
        throw DomainError("characteristic must be a prime below 2^32, got " + std::to_string(p));
    return {DomainKind::PolynomialsOverPrimeField, p};
}

std::string DomainTag::name() const {
    switch (kind) {
        case DomainKind::RationalIntegers: return "Z";
        case DomainKind::GaussianIntegers: return "Z[i]";
        case DomainKind::PolynomialsOverPrimeField: return "F" + std::to_string(characteristic) + "[X]";
    }
    return "?";
}

Element Element::integer(Integer v) { return Element(DomainTag::integers(), std::move(v)); }

Element Element::gaussian(Integer re, Integer im) {
    return Element(DomainTag::gaussian(), Gaussian{std::move(re), std::move(im)});
}

Element Element::polynomial(std::uint64_t p, const std::vector<std::int64_t>& coeffs) {
    auto tag = DomainTag::polynomials(p);
    Coeffs c;
    c.reserve(coeffs.size());
    for (auto v : coeffs) c.push_back(reduce_signed(v, p));
    trim(c);
    return Element(tag, std::move(c));
}

Element Element::polynomial_residues(std::uint64_t p, std::vector<std::uint64_t> coeffs) {
    auto tag = DomainTag::polynomials(p);
    for (auto& v : coeffs) v %= p;
    trim(coeffs);
    return Element(tag, std::move(coeffs));
}

Element Element::monomial(std::uint64_t p, std::int64_t c, std::size_t degree) {
    std::vector<std::int64_t> coeffs(degree + 1, 0);
    coeffs[degree] = c;
    return polynomial(p, coeffs);
}

Element Element::zero(const DomainTag& tag) { return from_integer(tag, 0); }
Element Element::one(const DomainTag& tag) { return from_integer(tag, 1); }

Element Element::from_integer(const DomainTag& tag, const Integer& n) {
    switch (tag.kind) {
        case DomainKind::RationalIntegers: return integer(n);
        case DomainKind::GaussianIntegers: return gaussian(n, 0);
        case DomainKind::PolynomialsOverPrimeField: {
            Integer r = n % Integer(static_cast<unsigned long>(tag.characteristic));
            if (r < 0) r += static_cast<unsigned long>(tag.characteristic);
            Coeffs c{r.get_ui()};
            trim(c);
            return Element(tag, std::move(c));
        }
    }
    throw DomainError("unknown domain");
}

bool Element::is_zero() const {
    switch (kind()) {
        case DomainKind::RationalIntegers: return std::get<Integer>(value_) == 0;
        case DomainKind::GaussianIntegers: {
            const auto& g = std::get<Gaussian>(value_);
            return g.re == 0 && g.im == 0;
        }
        case DomainKind::PolynomialsOverPrimeField: return std::get<Coeffs>(value_).empty();
    }
    return false;
}

bool Element::is_one() const { return *this == one(tag_); }

const Integer& Element::as_integer() const {
    if (kind() != DomainKind::RationalIntegers) throw DomainError("element is not a rational integer");
    return std::get<Integer>(value_);
}

const Gaussian& Element::as_gaussian() const {
    if (kind() != DomainKind::GaussianIntegers) throw DomainError("element is not a Gaussian integer");
    return std::get<Gaussian>(value_);
}

const std::vector<std::uint64_t>& Element::coefficients() const {
    if (kind() != DomainKind::PolynomialsOverPrimeField) throw DomainError("element is not a polynomial");
    return std::get<Coeffs>(value_);
}

long Element::degree() const { return static_cast<long>(coefficients().size()) - 1; }

Element Element::conj() const {
    const auto& g = as_gaussian();
    return gaussian(g.re, -g.im);
}

void Element::require_same_domain(const Element& rhs) const {
    if (!(tag_ == rhs.tag_))
        throw DomainError("elements from different domains: " + tag_.name() + " vs " + rhs.tag_.name());
}

Element& Element::operator+=(const Element& rhs) {
    require_same_domain(rhs);
    switch (kind()) {
        case DomainKind::RationalIntegers: std::get<Integer>(value_) += std::get<Integer>(rhs.value_); break;
        case DomainKind::GaussianIntegers: {
            auto& a = std::get<Gaussian>(value_);
            const auto& b = std::get<Gaussian>(rhs.value_);
            a.re += b.re;
            a.im += b.im;
            break;
        }
        case DomainKind::PolynomialsOverPrimeField: {
            auto& a = std::get<Coeffs>(value_);
            const auto& b = std::get<Coeffs>(rhs.value_);
            const auto p = tag_.characteristic;
            if (a.size() < b.size()) a.resize(b.size(), 0);
            for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + b[i]) % p;
            trim(a);
            break;
        }
    }
    return *this;
}

Element Element::operator-() const {
    switch (kind()) {
        case DomainKind::RationalIntegers: return integer(-std::get<Integer>(value_));
        case DomainKind::GaussianIntegers: {
            const auto& g = std::get<Gaussian>(value_);
            return gaussian(-g.re, -g.im);
        }
        case DomainKind::PolynomialsOverPrimeField: {
            Coeffs c = std::get<Coeffs>(value_);
            const auto p = tag_.characteristic;
            for (auto& v : c) v = (p - v) % p;
            return Element(tag_, std::move(c));
        }
    }
    return *this;
}

Element& Element::operator-=(const Element& rhs) { return *this += -rhs; }

Element& Element::operator*=(const Element& rhs) {
    require_same_domain(rhs);
    switch (kind()) {
        case DomainKind::RationalIntegers: std::get<Integer>(value_) *= std::get<Integer>(rhs.value_); break;
        case DomainKind::GaussianIntegers: {
            const auto a = std::get<Gaussian>(value_);
            const auto& b = std::get<Gaussian>(rhs.value_);
            value_ = Gaussian{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
            break;
        }
        case DomainKind::PolynomialsOverPrimeField: {
            const auto& a = std::get<Coeffs>(value_);
            const auto& b = std::get<Coeffs>(rhs.value_);
            if (a.empty() || b.empty()) {
                value_ = Coeffs{};
                break;
            }
            const auto p = tag_.characteristic;
            Coeffs c(a.size() + b.size() - 1, 0);
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i] == 0) continue;
                for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
            }
            trim(c);
            value_ = std::move(c);
            break;
        }
    }
    return *this;
}

bool operator==(const Element& a, const Element& b) {
    if (!(a.tag_ == b.tag_)) return false;
    switch (a.kind()) {
        case DomainKind::RationalIntegers: return std::get<Integer>(a.value_) == std::get<Integer>(b.value_);
        case DomainKind::GaussianIntegers: {
            const auto& x = std::get<Gaussian>(a.value_);
            const auto& y = std::get<Gaussian>(b.value_);
            return x.re == y.re && x.im == y.im;
        }
        case DomainKind::PolynomialsOverPrimeField: return std::get<Coeffs>(a.value_) == std::get<Coeffs>(b.value_);
    }
    return false;
}

namespace {
std::strong_ordering cmp(const Integer& a, const Integer& b) {
    const int c = mpz_cmp(a.get_mpz_t(), b.get_mpz_t());
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}
}  // namespace

std::strong_ordering operator<=>(const Element& a, const Element& b) {
    if (auto c = a.tag_.kind <=> b.tag_.kind; c != 0) return c;
    if (auto c = a.tag_.characteristic <=> b.tag_.characteristic; c != 0) return c;
    switch (a.kind()) {
        case DomainKind::RationalIntegers: return cmp(std::get<Integer>(a.value_), std::get<Integer>(b.value_));
        case DomainKind::GaussianIntegers: {
            const auto& x = std::get<Gaussian>(a.value_);
            const auto& y = std::get<Gaussian>(b.value_);
            if (auto c = cmp(x.re, y.re); c != 0) return c;
            return cmp(x.im, y.im);
        }
        case DomainKind::PolynomialsOverPrimeField: {
            // Degree first, then coefficients from the top.
            const auto& x = std::get<Coeffs>(a.value_);
            const auto& y = std::get<Coeffs>(b.value_);
            if (auto c = x.size() <=> y.size(); c != 0) return c;
            return std::lexicographical_compare_three_way(x.rbegin(), x.rend(), y.rbegin(), y.rend());
        }
    }
    return std::strong_ordering::equal;
}

std::string to_string(const Integer& n) { return n.get_str(10); }

std::string Element::to_string() const {
    switch (kind()) {
        case DomainKind::RationalIntegers: return euclid::to_string(std::get<Integer>(value_));
        case DomainKind::GaussianIntegers: {
            const auto& g = std::get<Gaussian>(value_);
            if (g.im == 0) return euclid::to_string(g.re);
            std::string im;
            if (g.im == 1) im = "i";
            else if (g.im == -1) im = "-i";
            else im = euclid::to_string(g.im) + "i";
            if (g.re == 0) return im;
            return euclid::to_string(g.re) + (g.im > 0 ? "+" : "") + im;
        }
        case DomainKind::PolynomialsOverPrimeField: {
            const auto& c = std::get<Coeffs>(value_);
            if (c.empty()) return "0";
            std::string out;
            for (std::size_t k = c.size(); k-- > 0;) {
                if (c[k] == 0) continue;
                if (!out.empty()) out += "+";
                if (k == 0) {
                    out += std::to_string(c[k]);
                    continue;
                }
                if (c[k] != 1) out += std::to_string(c[k]) + "*";
                out += k == 1 ? "x" : "x^" + std::to_string(k);
            }
            return out;
        }
    }
    return "?";
}

}  // namespace euclid
