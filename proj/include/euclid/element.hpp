#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace euclid {

using Integer = mpz_class;

/// Raised when an operation's mathematical precondition fails
/// (zero divisor, non-invertible element, budget exhausted, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when text cannot be turned into an element or option value.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class DomainKind { RationalIntegers, GaussianIntegers, PolynomialsOverPrimeField };

struct DomainTag {
    DomainKind kind = DomainKind::RationalIntegers;
    std::uint64_t characteristic = 0;  // nonzero only for polynomials

    static DomainTag integers() { return {DomainKind::RationalIntegers, 0}; }
    static DomainTag gaussian() { return {DomainKind::GaussianIntegers, 0}; }
    // Throws DomainError unless p is a prime below 2^32.
    static DomainTag polynomials(std::uint64_t p);

    friend bool operator==(const DomainTag&, const DomainTag&) = default;

    std::string name() const;
};

struct Gaussian {
    Integer re;
    Integer im;
};

/// A value in one of the three supported Euclidean domains.
///
/// Polynomial payloads store least non-negative residues mod p, lowest degree
/// first, with no trailing zero coefficients; the zero polynomial is empty.
class Element {
public:
    Element() : tag_(DomainTag::integers()), value_(Integer(0)) {}

    static Element integer(Integer v);
    static Element integer(long v) { return integer(Integer(v)); }
    static Element gaussian(Integer re, Integer im);
    static Element polynomial(std::uint64_t p, const std::vector<std::int64_t>& coeffs);
    static Element polynomial_residues(std::uint64_t p, std::vector<std::uint64_t> coeffs);
    /// c * X^degree over F_p.
    static Element monomial(std::uint64_t p, std::int64_t c, std::size_t degree);

    static Element zero(const DomainTag& tag);
    static Element one(const DomainTag& tag);
    /// Image of the rational integer n in the domain.
    static Element from_integer(const DomainTag& tag, const Integer& n);

    const DomainTag& tag() const { return tag_; }
    DomainKind kind() const { return tag_.kind; }

    bool is_zero() const;
    bool is_one() const;

    const Integer& as_integer() const;
    const Gaussian& as_gaussian() const;
    const std::vector<std::uint64_t>& coefficients() const;

    /// Polynomial degree; -1 for the zero polynomial.
    long degree() const;
    /// Complex conjugate (Gaussian only).
    Element conj() const;

    Element& operator+=(const Element& rhs);
    Element& operator-=(const Element& rhs);
    Element& operator*=(const Element& rhs);

    friend Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
    friend Element operator-(Element lhs, const Element& rhs) { return lhs -= rhs; }
    friend Element operator*(Element lhs, const Element& rhs) { return lhs *= rhs; }
    Element operator-() const;

    friend bool operator==(const Element& a, const Element& b);
    /// Total order used for set/map keys and canonical chain rotations.
    friend std::strong_ordering operator<=>(const Element& a, const Element& b);

    std::string to_string() const;

private:
    using Payload = std::variant<Integer, Gaussian, std::vector<std::uint64_t>>;
    Element(DomainTag tag, Payload value) : tag_(tag), value_(std::move(value)) {}
    void require_same_domain(const Element& rhs) const;

    DomainTag tag_;
    Payload value_;
};

std::string to_string(const Integer& n);

}  // namespace euclid
