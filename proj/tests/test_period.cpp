#include <doctest.h>

#include <random>

#include "euclid/domain.hpp"
#include "euclid/factor.hpp"
#include "euclid/period.hpp"
#include "euclid/recurring.hpp"

using namespace euclid;

namespace {

Element Z(long n) { return Element::integer(n); }
Element G(long a, long b) { return Element::gaussian(a, b); }

std::vector<Integer> ints(std::initializer_list<long> v) {
    std::vector<Integer> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

// length of the remainder cycle of 1/d in base 10, plain integers
long remainder_cycle(long d) {
    long r = 1, n = 0;
    do {
        r = r * 10 % d;
        ++n;
    } while (r != 1);
    return n;
}

std::uint64_t cycle_length(std::uint64_t m) {
    std::uint64_t x = 10 % m, n = 1;
    while (x != 1) {
        x = x * 10 % m;
        ++n;
    }
    return n;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    unsigned __int128 r = 1, x = b % m;
    for (; e; e >>= 1, x = x * x % m)
        if (e & 1) r = r * x % m;
    return static_cast<std::uint64_t>(r);
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t r = 2; r * r <= n; ++r)
        if (n % r == 0) {
            out.push_back(r);
            while (n % r == 0) n /= r;
        }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

TEST_CASE("multiplicative orders") {
    CHECK(multiplicative_order(Z(10), Z(7)) == 6);
    CHECK(multiplicative_order(Z(10), Z(487)) == 486);
    CHECK(multiplicative_order(G(1, 1), G(2, 1)) == 2);
    CHECK(multiplicative_order(Z(10), Z(1001)) == 6);
    CHECK_THROWS_AS(multiplicative_order(Z(10), Z(14)), DomainError);
    for (long p : {3L, 7L, 11L, 13L, 101L})
        for (unsigned n = 1; n <= 3; ++n) {
            const Element d = pow(Z(p), n);
            CHECK(multiplicative_order(Z(10), d) == order_by_iteration(Z(10), d, 10'000'000));
        }
}

TEST_CASE("orders agree with independent oracles for all primes below 1000 and n <= 3") {
    for (std::uint64_t p = 3; p < 1000; ++p) {
        if (p == 5 || !is_prime(Z(static_cast<long>(p)))) continue;
        const auto pp = prime_power_period(Z(static_cast<long>(p)), 3, Z(10));
        std::uint64_t m = 1;
        for (unsigned n = 1; n <= 3; ++n) {
            m *= p;
            const std::uint64_t q = pp.q[n - 1].get_ui();
            if (m < 2'000'000) {
                CHECK(q == cycle_length(m));
            } else {
                CHECK(powmod(10, q, m) == 1);
                for (std::uint64_t r : prime_divisors(q)) CHECK(powmod(10, q / r, m) != 1);
            }
            if (n > 1) {
                const Integer ratio = pp.q[n - 1] / pp.q[n - 2];
                CHECK((ratio == 1 || ratio == static_cast<unsigned long>(p)));
            }
        }
    }
}

TEST_CASE("prime integers below primes") {
    auto a = prime_integer_below(Z(7));
    CHECK(a.prime_integer == 7);
    CHECK(a.f == 1);
    auto b = prime_integer_below(G(2, 1));
    CHECK(b.prime_integer == 5);
    CHECK(b.f == 1);
    auto c = prime_integer_below(G(1, 1));
    CHECK(c.prime_integer == 2);
    CHECK(c.f == 2);
    CHECK(prime_integer_below(G(3, 0)).prime_integer == 3);
    CHECK_THROWS_WITH_AS(prime_integer_below(Element::polynomial(5, {1, 0, 1})), doctest::Contains("no prime integer"),
                         DomainError);
}

TEST_CASE("prime power periods in Z") {
    const auto three = prime_power_period(Z(3), 4, Z(10));
    CHECK(three.q == ints({1, 1, 3, 9}));
    CHECK(three.g == 2);
    const auto seven = prime_power_period(Z(7), 2, Z(10));
    CHECK(seven.q == ints({6, 42}));
    CHECK(seven.g == 1);
    const auto w = prime_power_period(Z(487), 3, Z(10));
    CHECK(w.q == ints({486, 486, 487 * 486}));
    CHECK(w.g == 2);
    CHECK_THROWS_AS(prime_power_period(Z(5), 2, Z(10)), DomainError);
}

TEST_CASE("prime power periods in Z[i]") {
    const Element base = G(3, 2);
    const auto a = prime_power_period(G(1, 1), 4, base);
    CHECK(a.f == 2);
    CHECK(a.g == 3);
    CHECK(a.q == ints({1, 1, 1, 2}));
    const auto b = prime_power_period(G(2, 1), 4, base);
    CHECK(b.g == 1);
    CHECK(b.q == ints({2, 10, 50, 250}));
    const auto c = prime_power_period(G(3, 0), 4, base);
    CHECK(c.g == 1);
    CHECK(c.q == ints({4, 12, 36, 108}));
}

TEST_CASE("the 1+i lifting law against brute force at higher powers") {
    // ring sizes reach 2^10, so iteration stays cheap
    for (const auto& base : {G(3, 2), G(1, 2), G(5, 4), G(2, 1), G(7, 0)}) {
        const auto pp = prime_power_period(G(1, 1), 10, base);
        for (unsigned n = 1; n <= 10; ++n) CHECK(pp.q[n - 1] == order_by_iteration(base, pow(G(1, 1), n), 1'000'000));
    }
    // a unit base has bounded order, so the orders never start lifting
    CHECK_THROWS_WITH_AS(prime_power_period(G(1, 1), 4, G(0, 1)), doctest::Contains("no lifting index"), DomainError);
}

TEST_CASE("period of d") {
    CHECK(period_of_d(Z(91), Z(10)).period == 6);
    const auto r = period_of_d(Z(189), Z(10));
    CHECK(r.period == 6);
    REQUIRE(r.per_prime.size() == 2);
    CHECK(r.per_prime[0].period == 3);
    CHECK(r.per_prime[1].period == 6);
    CHECK(period_of_d(Z(49), Z(10)).period == 42);
    for (long d = 2; d <= 500; ++d) {
        if (d % 2 == 0 || d % 5 == 0) continue;
        const auto p = period_of_d(Z(d), Z(10));
        CHECK(p.period == remainder_cycle(d));
        CHECK(p.period == static_cast<unsigned long>(repetend(Z(d), Z(10)).period));
        for (const auto& q : p.per_prime) CHECK(p.period % q.period == 0);
    }
    const auto poly = period_of_d(Element::polynomial(5, {1, 0, 1}), Element::monomial(5, 1, 1));
    CHECK(poly.period == 4);
}

TEST_CASE("lifting the exponent examples") {
    const auto a = lte_check(pow(Z(10), 6), Z(1), 7, Z(7));
    CHECK(a.passed());
    CHECK(a.nu_a == 1);
    CHECK(a.a_m * (pow(Z(10), 6) - Z(1)) == pow(Z(10), 42) - Z(1));
    const auto b = lte_check(Z(4), Z(1), 3, Z(3));
    CHECK(b.a_m == Z(21));
    CHECK(b.nu_a == 1);
    CHECK(b.passed());
    const auto c = lte_check(Z(8), Z(1), 4, Z(7));
    CHECK_FALSE(c.p_divides_a);
    CHECK(c.passed());
    CHECK_THROWS_AS(lte_check(Z(8), Z(2), 3, Z(7)), DomainError);  // 7 does not divide 6
    CHECK_THROWS_AS(lte_check(Z(3), Z(3), 3, Z(3)), DomainError);
}

TEST_CASE("lifting the exponent on random instances") {
    std::mt19937_64 rng(2024);
    const long primes[] = {2, 3, 5, 7, 11, 13};
    for (int i = 0; i < 300; ++i) {
        const long p = primes[rng() % 6];
        long y = 1 + static_cast<long>(rng() % 50);
        if (y % p == 0) ++y;
        const long x = y + p * (1 + static_cast<long>(rng() % 20));
        const unsigned long m = 1 + rng() % 30;
        CHECK(lte_check(Z(x), Z(y), m, Z(p)).passed());
    }
    const Element gp[] = {G(1, 1), G(2, 1), G(3, 0), G(3, 2)};
    for (int i = 0; i < 60; ++i) {
        const Element& p = gp[rng() % 4];
        Element y = G(1 + static_cast<long>(rng() % 9), static_cast<long>(rng() % 9));
        if (divides(p, y)) y = y + Element::one(DomainTag::gaussian());
        const Element x = y + p * G(1 + static_cast<long>(rng() % 5), static_cast<long>(rng() % 5));
        CHECK(lte_check(x, y, 1 + rng() % 16, p).passed());
    }
}
