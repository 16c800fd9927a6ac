#include <doctest.h>

#include <cmath>
#include <set>

#include "euclid/census.hpp"

using namespace euclid;

namespace {

// naive order by repeated multiplication, small p only
std::uint64_t naive_order(std::uint64_t p, std::int64_t base) {
    const std::uint64_t b = static_cast<std::uint64_t>((base % static_cast<std::int64_t>(p) + static_cast<std::int64_t>(p)) %
                                                       static_cast<std::int64_t>(p));
    std::uint64_t x = b, e = 1;
    while (x != 1) {
        x = x * b % p;
        ++e;
    }
    return e;
}

bool naive_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("sieve") {
    CHECK(sieve_primes(10) == std::vector<std::uint32_t>{2, 3, 5, 7});
    CHECK(sieve_primes(1).empty());
    CHECK(sieve_primes(2) == std::vector<std::uint32_t>{2});
    const auto small = sieve_primes(20000);
    std::vector<std::uint32_t> naive;
    for (std::uint32_t n = 2; n <= 20000; ++n)
        if (naive_prime(n)) naive.push_back(n);
    CHECK(small == naive);
    CHECK(sieve_primes(1370471).size() == 105002);
    CHECK_THROWS_AS(sieve_primes(kSieveCap + 1), DomainError);
}

TEST_CASE("prime classes") {
    CHECK(classify_prime(7, 10) == PrimeClass::FullPeriod);
    CHECK(classify_prime(11, 10) == PrimeClass::EvenNonFull);
    CHECK(classify_prime(3, 10) == PrimeClass::OddPeriod);
    CHECK(classify_prime(31, 10) == PrimeClass::OddPeriod);  // period 15
    CHECK(classify_prime(17, 10) == PrimeClass::FullPeriod);
    CHECK_THROWS_AS(classify_prime(5, 10), DomainError);
    CHECK_THROWS_AS(classify_prime(2, 3), DomainError);
    CHECK(census_excludes(2, 10));
    CHECK(census_excludes(5, 10));
    CHECK_FALSE(census_excludes(3, 10));
    CHECK(to_string(PrimeClass::EvenNonFull) == "even_nonfull");
}

TEST_CASE("fast path agrees with the full order") {
    for (std::int64_t base : {10, 2, 3, -3, 7, 12}) {
        for (std::uint32_t p : sieve_primes(10000)) {
            if (census_excludes(p, base)) continue;
            CHECK(classify_prime(p, base) == classify_by_order(p, base));
            if (p < 2000) CHECK(order_mod_prime(p, base) == naive_order(p, base));
        }
    }
}

TEST_CASE("D_p is odd exactly when B^t == 1 for the odd part t of p - 1") {
    for (std::uint32_t p : sieve_primes(5000)) {
        if (census_excludes(p, 10)) continue;
        std::uint64_t t = p - 1;
        while (t % 2 == 0) t /= 2;
        std::uint64_t x = 1;
        for (std::uint64_t i = 0; i < t; ++i) x = x * 10 % p;
        CHECK((x == 1) == (naive_order(p, 10) % 2 == 1));
    }
}

TEST_CASE("density references") {
    const auto ten = density_references(10);
    REQUIRE(ten.full.has_value());
    CHECK(*ten.full == doctest::Approx(kArtinConstant));
    CHECK(ten.full_requires_grh);
    CHECK(*ten.odd == doctest::Approx(1.0 / 3));
    CHECK(*ten.even_nonfull == doctest::Approx(2.0 / 3 - kArtinConstant));
    const auto four = density_references(4);
    CHECK_FALSE(four.full.has_value());
    CHECK_FALSE(four.odd.has_value());
    CHECK_FALSE(density_references(8).full.has_value());
    CHECK_FALSE(density_references(8).odd.has_value());  // 8 = 2 * 2^2
    CHECK(density_references(2).full.has_value());
    CHECK_FALSE(density_references(2).odd.has_value());
    CHECK_FALSE(density_references(5).full.has_value());  // kernel 1 mod 4
    CHECK(density_references(5).odd.has_value());
}

TEST_CASE("census golden counts") {
    const auto r = census(1370471, 10);
    CHECK(r.prime_count == 105002);
    CHECK(r.counts.full == 39447);
    CHECK(r.counts.odd == 34988);
    CHECK(r.counts.even_nonfull == 30565);
    CHECK(r.counts.excluded == 2);
    CHECK(r.ordered());
    CHECK(r.full == doctest::Approx(0.375686).epsilon(1e-5));
    CHECK(r.odd == doctest::Approx(0.333219).epsilon(1e-5));
    CHECK(r.even_nonfull == doctest::Approx(0.291095).epsilon(1e-5));
    CHECK(std::abs(r.full - kArtinConstant) < 0.003);
    const auto small = census(1000, 10);
    CHECK(std::abs(small.full - 9.0 / 24) < 0.06);
    CHECK(std::abs(small.odd - 8.0 / 24) < 0.06);
    CHECK(std::abs(small.even_nonfull - 7.0 / 24) < 0.06);
    CHECK_THROWS_AS(census(50, 10), DomainError);
}

TEST_CASE("census counts match classification prime by prime") {
    ClassCounts expected;
    for (std::uint32_t p : sieve_primes(30000)) {
        if (census_excludes(p, 10)) {
            ++expected.excluded;
            continue;
        }
        const auto e = naive_order(p, 10);
        if (e == p - 1)
            ++expected.full;
        else if (e % 2 == 1)
            ++expected.odd;
        else
            ++expected.even_nonfull;
    }
    CHECK(census(30000, 10, Schedule::Serial).counts == expected);
}

TEST_CASE("serial and parallel kernels agree") {
    const auto primes = sieve_primes(300000);
    for (std::int64_t base : {10, 2, -7}) {
        CHECK(kernels::classify_serial(primes, base) == kernels::classify_parallel(primes, base));
        std::vector<std::uint64_t> a, b;
        CHECK(kernels::residual_serial(primes, base, 12, a));
        CHECK(kernels::residual_parallel(primes, base, 12, b));
        CHECK(a == b);
        CHECK(kernels::wieferich_serial(primes, base) == kernels::wieferich_parallel(primes, base));
    }
    CHECK(kernels::max_threads() >= 1);
}

TEST_CASE("artin constant") {
    const auto a = artin_constant(100);
    CHECK(a.value > 0.37);
    CHECK(a.value < 0.38);
    CHECK(a.lower <= a.product_lo);
    CHECK(a.product_lo <= a.product_hi);
    CHECK(a.primes_used == 25);
    const auto two = artin_constant(2);
    CHECK(two.value == doctest::Approx(0.5));
    const auto big = artin_constant(10'000'000);
    CHECK(std::abs(big.value - kArtinConstant) < 1e-6);
    CHECK(big.decimal(big.lower).substr(0, 7) == "0.37395");
    // the certified bracket contains the constant
    const double lo = std::stod(big.decimal(big.lower)), hi = std::stod(big.decimal(big.upper));
    CHECK(lo <= kArtinConstant);
    CHECK(kArtinConstant <= hi);
    CHECK_THROWS_AS(artin_constant(1), DomainError);
}

TEST_CASE("residual index histograms") {
    const auto h = residual_index_histogram(100, 10, 4);
    CHECK(h.buckets == std::vector<std::uint64_t>{9, 8, 0, 1});
    CHECK(h.overflow == 5);
    CHECK(h.total == 23);
    CHECK(h.identity_holds);
    const auto big = residual_index_histogram(100000, 10, 8);
    CHECK(big.buckets == std::vector<std::uint64_t>{3617, 2684, 635, 711, 192, 473, 83, 136});
    CHECK(big.overflow == 1059);
    CHECK(big.total == 9590);
    CHECK(big.bucket(1) == census(100000, 10).counts.full);
    CHECK(big.bucket(0) == 0);
    CHECK(big.bucket(9) == 0);
}

TEST_CASE("wieferich search") {
    const auto w = wieferich_search(10000, 10);
    CHECK(w.primes == std::vector<std::uint64_t>{3, 487});
    CHECK(w.equivalence_holds);
    CHECK(w.non_hits_checked == 100);
    CHECK(wieferich_search(1000, 2).primes.empty());
    CHECK(wieferich_search(4000, 2).primes == std::vector<std::uint64_t>{1093, 3511});
    CHECK(wieferich_search(10000, 10, 7).primes == w.primes);
}
