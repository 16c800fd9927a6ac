#include <doctest.h>

#include "euclid/element.hpp"
#include "euclid/parse.hpp"

using namespace euclid;

TEST_CASE("domain tags") {
    CHECK(DomainTag::polynomials(5).characteristic == 5);
    CHECK_THROWS_AS(DomainTag::polynomials(6), DomainError);
    CHECK_THROWS_AS(DomainTag::polynomials(1), DomainError);
    CHECK_THROWS_AS(DomainTag::polynomials(4294967311ull), DomainError);  // prime but >= 2^32
    CHECK_FALSE(DomainTag::integers() == DomainTag::gaussian());
    CHECK_FALSE(DomainTag::polynomials(5) == DomainTag::polynomials(7));
}

TEST_CASE("integer arithmetic is exact beyond 64 bits") {
    const Element a = parse_element("123456789012345678901234567890", DomainTag::integers());
    const Element b = a * a;
    CHECK(b.to_string() == "15241578753238836750495351562536198787501905199875019052100");
    CHECK((b - a * a).is_zero());
    CHECK((-a).to_string() == "-123456789012345678901234567890");
}

TEST_CASE("gaussian arithmetic and formatting") {
    const Element a = Element::gaussian(2, 1);
    const Element b = Element::gaussian(2, -1);
    CHECK(a * b == Element::gaussian(5, 0));
    CHECK((a * b).to_string() == "5");
    CHECK(Element::gaussian(0, 1).to_string() == "i");
    CHECK(Element::gaussian(0, -1).to_string() == "-i");
    CHECK(Element::gaussian(3, 2).to_string() == "3+2i");
    CHECK(Element::gaussian(2, -1).to_string() == "2-i");
    CHECK(a.conj() == b);
    CHECK(Element::gaussian(0, 1) * Element::gaussian(0, 1) == Element::gaussian(-1, 0));
}

TEST_CASE("polynomials reduce coefficients and trim") {
    const Element p = Element::polynomial(5, {6, -1, 0, 5});  // 1 + 4x, the x^3 term vanishes
    CHECK(p.degree() == 1);
    CHECK(p.coefficients() == std::vector<std::uint64_t>{1, 4});
    CHECK(p.to_string() == "4*x+1");
    CHECK(Element::polynomial(5, {0, 0, 0}).is_zero());
    CHECK(Element::polynomial(5, {0, 0, 0}).degree() == -1);
    const Element x = Element::monomial(5, 1, 1);
    CHECK((x * x + Element::one(DomainTag::polynomials(5))).to_string() == "x^2+1");
    // (x+1)^5 = x^5 + 1 in characteristic 5
    Element y = Element::one(DomainTag::polynomials(5));
    for (int i = 0; i < 5; ++i) y *= x + Element::one(DomainTag::polynomials(5));
    CHECK(y.to_string() == "x^5+1");
}

TEST_CASE("mixing domains is rejected") {
    CHECK_THROWS_AS(Element::integer(1) + Element::gaussian(1, 0), DomainError);
    CHECK_THROWS_AS(Element::polynomial(5, {1}) * Element::polynomial(7, {1}), DomainError);
}

TEST_CASE("ordering") {
    CHECK(Element::integer(-3) < Element::integer(2));
    CHECK(Element::gaussian(1, 5) < Element::gaussian(2, 0));
    CHECK(Element::polynomial(5, {4, 4}) < Element::polynomial(5, {0, 0, 1}));  // lower degree first
    CHECK(Element::polynomial(5, {1, 2}) < Element::polynomial(5, {0, 3}));
}

TEST_CASE("parsing round trips") {
    const auto z = DomainTag::integers();
    const auto g = DomainTag::gaussian();
    const auto f = DomainTag::polynomials(5);
    CHECK(parse_element("-11", z) == Element::integer(-11));
    CHECK(parse_element("+7", z) == Element::integer(7));
    CHECK(parse_element("3+2i", g) == Element::gaussian(3, 2));
    CHECK(parse_element("2-i", g) == Element::gaussian(2, -1));
    CHECK(parse_element("-i", g) == Element::gaussian(0, -1));
    CHECK(parse_element("5i", g) == Element::gaussian(0, 5));
    CHECK(parse_element("4", g) == Element::gaussian(4, 0));
    CHECK(parse_element("x^4+x^2", f) == Element::polynomial(5, {0, 0, 1, 0, 1}));
    CHECK(parse_element("3*x^2-x+7", f) == Element::polynomial(5, {2, 4, 3}));
    CHECK(parse_element("x", f) == Element::monomial(5, 1, 1));
    for (const char* s : {"3+2i", "2-i", "i", "-i", "7", "-3i"}) CHECK(parse_element(s, g).to_string() == s);
    for (const char* s : {"x^2+1", "4*x", "3*x^3+x+2"}) CHECK(parse_element(s, f).to_string() == s);
    CHECK_THROWS_AS(parse_element("bad", z), ParseError);
    CHECK_THROWS_AS(parse_element("1.5", z), ParseError);
    CHECK_THROWS_AS(parse_element("3+2j", g), ParseError);
    CHECK_THROWS_AS(parse_element("x^", f), ParseError);
    CHECK_THROWS_AS(parse_element("", z), ParseError);
    CHECK(parse_domain("gauss", 0) == g);
    CHECK(parse_domain("poly", 5) == f);
    CHECK_THROWS_AS(parse_domain("q", 0), ParseError);
}
