#include <doctest.h>

#include <random>

#include "euclid/divtest.hpp"
#include "euclid/domain.hpp"

using namespace euclid;

namespace {

Element Z(long n) { return Element::integer(n); }
Element F5(std::vector<std::int64_t> c) { return Element::polynomial(5, c); }
const Element X = Element::monomial(5, 1, 1);

}  // namespace

TEST_CASE("forward k-values") {
    CHECK(forward_k(Z(3), Z(10)).value == Z(1));
    CHECK(forward_k(Z(11), Z(10)).value == Z(-1));
    CHECK(forward_k(Z(29), Z(10)).value == Z(10));
    CHECK_THROWS_AS(forward_k(Z(1), Z(10)), DomainError);
}

TEST_CASE("reverse k-values") {
    CHECK(reverse_k(Z(29), Z(10)).value == Z(3));
    CHECK(reverse_k(Z(7), Z(10)).value == Z(-2));
    CHECK(reverse_k(F5({1, 0, 1}), X).value == F5({0, -1}));
    CHECK_THROWS_WITH_AS(reverse_k(Z(6), Z(10)), doctest::Contains("base not invertible"), DomainError);
    // k B == 1 mod d and k minimal, checked by scanning |k| < d
    for (long d = 3; d < 300; ++d) {
        if (d % 2 == 0 || d % 5 == 0) continue;
        const long k = reverse_k(Z(d), Z(10)).value.as_integer().get_si();
        CHECK(((10 * k) % d + d) % d == 1);
        for (long c = -d; c <= d; ++c)
            if (((10 * c) % d + d) % d == 1) CHECK(std::abs(c) >= std::abs(k));
    }
}

TEST_CASE("forward reduction") {
    const auto a = forward_reduce(Z(1234), Z(3), Z(10));
    CHECK(a.reduced_value == Z(10));
    CHECK_FALSE(a.divisible);
    CHECK(a.residue == Z(1));
    const auto b = forward_reduce(Z(121), Z(11), Z(10));
    CHECK(b.reduced_value == Z(0));
    CHECK(b.divisible);
    CHECK(forward_reduce(Z(825), Z(25), Z(10)).divisible);
    // iterated chain keeps shrinking, digit sum of digit sum ...
    const auto c = forward_reduce(Z(987654321987654321), Z(9), Z(10));
    CHECK(c.reduction_chain.front() == Z(90));
    CHECK(c.divisible);
}

TEST_CASE("reverse reduction") {
    const auto v = reverse_reduce(Z(841), Z(29), Z(10));
    CHECK(v.reduced_value == Z(29));
    CHECK(v.divisible);
    CHECK(v.k == Z(3));
    const auto p = reverse_reduce(F5({0, 0, 1, 0, 1}), F5({1, 0, 1}), X);
    CHECK(p.reduced_value == F5({1, 0, 1}));
    CHECK(p.divisible);
    CHECK(reverse_reduce(Z(6), Z(7), Z(10)).reduced_value == Z(6));
}

TEST_CASE("reductions agree with direct division") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 400; ++i) {
        const long s = static_cast<long>(rng() % 10'000'000);
        long d = 3 + static_cast<long>(rng() % 200);
        while (d % 2 == 0 || d % 5 == 0) ++d;
        const bool truth = s % d == 0;
        CHECK(reverse_reduce(Z(s), Z(d), Z(10)).divisible == truth);
        CHECK(forward_reduce(Z(s), Z(d), Z(10)).divisible == truth);
        CHECK(reverse_reduce(Z(s), Z(d), Z(10)).residue == Z(s % d));
    }
}

TEST_CASE("chunked reduction") {
    const auto v = chunked_reduce(Z(142857142), Z(7), Z(10), ChunkSpec{{3, 6}});
    CHECK(v.reduced_value == Z(-573));
    CHECK(v.residue == Z(1));
    CHECK_FALSE(v.divisible);
    // 142857 = 7 * 20408 + 1
    const auto w = chunked_reduce(Z(142857), Z(7), Z(10), ChunkSpec{{3}});
    CHECK(w.residue == Z(142857 % 7));
    CHECK(w.divisible == (142857 % 7 == 0));
    CHECK_THROWS_AS(chunked_reduce(Z(1234), Z(7), Z(10), ChunkSpec{{2, 2}}), DomainError);
    CHECK_THROWS_AS(chunked_reduce(Z(1234), Z(7), Z(10), ChunkSpec{{4}}), DomainError);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const long s = 100'000'000 + static_cast<long>(rng() % 900'000'000);
        const std::size_t a = 1 + rng() % 3, b = a + 1 + rng() % (7 - a);  // 9 digits: cuts < 8
        for (long d : {7L, 13L, 37L, 101L}) CHECK(chunked_reduce(Z(s), Z(d), Z(10), ChunkSpec{{a, b}}).residue == Z(s % d));
    }
}

TEST_CASE("k progressions") {
    const auto p9 = k_progression(Z(9), Z(10));
    CHECK(p9.k_a == Z(1));
    CHECK(p9.l == Z(1));
    CHECK(predict_k(p9, Z(1)) == Z(2));
    CHECK(predict_k(p9, Z(2)) == Z(3));
    const auto p7 = k_progression(Z(7), Z(10));
    CHECK(p7.k_a == Z(-2));
    CHECK(p7.l == Z(-3));
    CHECK(canonical_residue(predict_k(p7, Z(1)), Z(17)) == Z(12));
    for (long a : {3L, 7L, 9L, 11L, 13L}) {
        const auto prog = k_progression(Z(a), Z(10));
        for (long m = 0; m < 40; ++m) CHECK(predict_k(prog, Z(m)) == reverse_k(Z(a + 10 * m), Z(10)).value);
    }
}

TEST_CASE("k from power relations") {
    CHECK(k_from_power_relation(Z(9), Z(10), 1, Z(1)) == Z(1));
    CHECK(k_from_power_relation(Z(11), Z(10), 1, Z(-1)) == Z(-1));
    CHECK(k_from_power_relation(Z(7), Z(10), 3, Z(-1)) == reverse_k(Z(7), Z(10)).value);
    for (std::int64_t c = 1; c < 5; ++c) {
        const Element d = F5({-c, 1});
        const Element k = k_from_power_relation(d, X, 1, F5({c}));
        CHECK(k == reverse_k(d, X).value);
        CHECK(canonical_residue(k * F5({c}), d) == F5({1}));
    }
    CHECK_THROWS_AS(k_from_power_relation(Z(7), Z(10), 2, Z(1)), DomainError);
    CHECK_THROWS_AS(k_from_power_relation(Z(9), Z(10), 1, Z(2)), DomainError);
}

TEST_CASE("general divisibility") {
    const auto a = general_divisibility(Z(343750), Z(125), Z(10));
    CHECK(a.verdict.divisible);
    REQUIRE(a.factors.size() == 1);
    CHECK(a.factors[0].digits_checked == 3);
    CHECK(a.factors[0].checked_value == Z(750));
    const auto b = general_divisibility(Z(1000), Z(8), Z(12));
    REQUIRE(b.factors.size() == 1);
    CHECK(b.factors[0].digits_checked == 2);
    const auto c = general_divisibility(Z(90), Z(6), Z(10));
    CHECK(c.verdict.divisible);
    CHECK(c.factors.size() == 2);
    for (long s = 0; s < 3000; s += 7)
        for (long n : {6L, 12L, 40L, 75L, 96L}) CHECK(general_divisibility(Z(s), Z(n), Z(10)).verdict.divisible == (s % n == 0));
}

TEST_CASE("factor theorem as a reverse test") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        std::vector<std::int64_t> c(2 + rng() % 6);
        for (auto& v : c) v = static_cast<std::int64_t>(rng() % 5);
        const std::uint64_t root = 1 + rng() % 4;
        CHECK(factor_theorem_check(F5(c), root).agree());
    }
    CHECK(factor_theorem_check(F5({0, 0, 1, 0, 1}), 2).evaluates_to_zero);
    CHECK_THROWS_AS(factor_theorem_check(Z(5), 1), DomainError);
}

TEST_CASE("uniqueness witness") {
    CHECK_FALSE(uniqueness_witness(Z(29), Z(10), Z(3)).has_value());
    CHECK_FALSE(uniqueness_witness(Z(29), Z(10), Z(32)).has_value());
    for (long k = -10; k <= 10; ++k) {
        if (k == 3) continue;
        const auto w = uniqueness_witness(Z(29), Z(10), Z(k));
        REQUIRE(w.has_value());
        CHECK(divides(Z(29), *w));
        CHECK(canonical_residue(*w, Z(10)) == Z(1));
    }
}
