#include <doctest.h>

#include <algorithm>
#include <map>

#include "euclid/digits.hpp"
#include "euclid/domain.hpp"
#include "euclid/period.hpp"
#include "euclid/recurring.hpp"

using namespace euclid;

namespace {

Element Z(long n) { return Element::integer(n); }
Element F5(std::vector<std::int64_t> c) { return Element::polynomial(5, c); }
const Element X = Element::monomial(5, 1, 1);

std::string text(const std::vector<Element>& digits) {
    std::string s;
    for (const auto& d : digits) s += d.to_string();
    return s;
}

// long division with plain integers: digits of a/d after the point
std::string long_division(long a, long d, std::size_t n) {
    std::string s;
    for (std::size_t i = 0; i < n; ++i) {
        a *= 10;
        s += static_cast<char>('0' + a / d);
        a %= d;
    }
    return s;
}

// orbit sizes of t -> 10 t mod d, by brute force over 0..d-1
std::map<std::size_t, std::size_t> orbit_tally(long d) {
    std::vector<bool> seen(static_cast<std::size_t>(d), false);
    std::map<std::size_t, std::size_t> tally;
    for (long t = 0; t < d; ++t) {
        if (seen[static_cast<std::size_t>(t)]) continue;
        std::size_t len = 0;
        long x = t;
        do {
            seen[static_cast<std::size_t>(x)] = true;
            x = x * 10 % d;
            ++len;
        } while (x != t);
        ++tally[len];
    }
    return tally;
}

}  // namespace

TEST_CASE("expansion sequences") {
    CHECK(text(expansion_sequence(Z(1), Z(7), Z(10), 6)) == "142857");
    CHECK(text(expansion_sequence(Z(1), Z(17), Z(10), 16)) == "0588235294117647");
    CHECK(text(expansion_sequence(Z(0), Z(13), Z(10), 4)) == "0000");
    for (long d = 2; d < 60; ++d)
        for (long a = 1; a < d; a += 3) CHECK(text(expansion_sequence(Z(a), Z(d), Z(10), 30)) == long_division(a, d, 30));
    CHECK_THROWS_AS(expansion_sequence(Z(9), Z(7), Z(10), 3), DomainError);
}

TEST_CASE("fraction expansion with preperiod") {
    const auto sixth = expand_fraction(Z(1), Z(6), Z(10));
    CHECK(format_numeral(sixth) == "0.1(6)");
    const auto big = expand_fraction(Z(22), Z(7), Z(10));
    CHECK(format_numeral(big) == "3.(142857)");
    const auto poly = expand_fraction(F5({1}), F5({1, 0, 1}), X);
    CHECK(format_numeral(poly) == "0.(0,1,0,4)");
    CHECK(format_numeral(expand_fraction(Z(1), Z(8), Z(10))) == "0.125(0)");
}

TEST_CASE("repetends") {
    const auto r7 = repetend(Z(7), Z(10));
    CHECK(r7.period == 6);
    CHECK(r7.value == Z(142857));
    const auto r27 = repetend(Z(27), Z(10));
    CHECK(r27.period == 3);
    CHECK(text(r27.digits) == "037");
    const auto rp = repetend(F5({1, 0, 1}), X);
    CHECK(rp.period == 4);
    CHECK(rp.value == F5({-1, 0, 1}));
    CHECK(rp.digits == std::vector<Element>{F5({0}), F5({1}), F5({0}), F5({4})});
    for (long d = 3; d < 300; d += 2) {
        if (d % 5 == 0) continue;
        const auto r = repetend(Z(d), Z(10));
        CHECK(Z(d) * r.value == pow(Z(10), r.period) - Z(1));
        CHECK(r.digits.size() == r.period);
        const auto v = reduce(value_of_recurring(RecurringNumeral{Z(10), {}, {}, r.digits, false}));
        CHECK(v.numerator == Z(1));
        CHECK(v.denominator == Z(d));
    }
    CHECK_THROWS_AS(repetend(Z(6), Z(10)), DomainError);
}

TEST_CASE("values of recurring numerals") {
    const auto v = value_of_recurring(RecurringNumeral{Z(10), {}, {}, {Z(1), Z(4), Z(2), Z(8), Z(5), Z(7)}, false});
    CHECK(v.numerator == Z(142857));
    CHECK(v.denominator == Z(999999));
    const auto r = reduce(v);
    CHECK(r.numerator == Z(1));
    CHECK(r.denominator == Z(7));
    const auto one = value_of_recurring(RecurringNumeral{Z(10), {}, {}, {Z(9)}, false});
    CHECK(one.declared_one);
    const auto zero = value_of_recurring(RecurringNumeral{Z(10), {}, {}, {Z(0)}, false});
    CHECK(zero.numerator.is_zero());
    const auto mixed = reduce(value_of_recurring(expand_fraction(Z(22), Z(7), Z(10))));
    CHECK(mixed.numerator == Z(22));
    CHECK(mixed.denominator == Z(7));
    const auto sixth = reduce(value_of_recurring(expand_fraction(Z(1), Z(6), Z(10))));
    CHECK(sixth.numerator == Z(1));
    CHECK(sixth.denominator == Z(6));
}

TEST_CASE("chain census") {
    auto entries = [](long d) { return chains(Z(d), Z(10)).entries; };
    using E = std::vector<std::pair<std::size_t, std::size_t>>;
    CHECK(entries(7) == E{{6, 1}, {1, 1}});
    CHECK(entries(13) == E{{6, 2}, {1, 1}});
    CHECK(entries(21) == E{{6, 3}, {1, 3}});
    const auto c7 = chains(Z(7), Z(10));
    REQUIRE(c7.chains.size() == 2);
    CHECK(text(c7.chains[0].digits) == "9");
    CHECK(text(c7.chains[1].digits) == "142857");
    for (long d = 2; d <= 200; ++d) {
        if (d % 2 == 0 || d % 5 == 0) continue;
        const auto c = chains(Z(d), Z(10));
        std::size_t sum = 0;
        std::map<std::size_t, std::size_t> got;
        for (auto [b, n] : c.entries) {
            sum += b * n;
            got[b] = n;
        }
        CHECK(sum == static_cast<std::size_t>(d));
        CHECK(got == orbit_tally(d));
    }
}

TEST_CASE("chain census over F_5 for monic divisors of degree <= 3") {
    std::size_t tested = 0;
    for (int deg = 1; deg <= 3; ++deg) {
        std::vector<std::int64_t> c(static_cast<std::size_t>(deg) + 1, 0);
        c.back() = 1;
        for (;;) {
            const Element d = F5(c);
            if (coprime(d, X)) {
                const auto census = chains(d, X);
                std::size_t sum = 0;
                for (auto [b, n] : census.entries) sum += b * n;
                CHECK(Integer(static_cast<unsigned long>(sum)) == residue_count(d));
                ++tested;
            }
            std::size_t i = 0;
            while (i < static_cast<std::size_t>(deg) && ++c[i] == 5) c[i++] = 0;
            if (i == static_cast<std::size_t>(deg)) break;
        }
    }
    CHECK(tested == 4 + 20 + 100);
}

TEST_CASE("shift law") {
    // the expansion of (10^i t mod d)/d is the i-rotation of that of t/d
    for (long d : {7L, 13L, 17L, 21L, 41L})
        for (long t = 1; t < d; ++t) {
            const std::size_t e = repetend(Z(d), Z(10)).period;
            const auto base = expansion_sequence(Z(t), Z(d), Z(10), e);
            long shifted = t;
            for (std::size_t i = 1; i < e; ++i) {
                shifted = shifted * 10 % d;
                auto rotated = base;
                std::rotate(rotated.begin(), rotated.begin() + static_cast<long>(i), rotated.end());
                CHECK(expansion_sequence(Z(shifted), Z(d), Z(10), e) == rotated);
            }
        }
}

TEST_CASE("cyclic multiples") {
    const auto c7 = cyclic_multiples_check(Z(7), Z(10));
    CHECK(c7.passed());
    CHECK(c7.multiples == std::vector<std::string>{"142857", "285714", "428571", "571428", "714285", "857142"});
    CHECK(c7.full_multiple == Z(999999));
    const auto c17 = cyclic_multiples_check(Z(17), Z(10));
    CHECK(c17.passed());
    CHECK(c17.full_multiple.to_string() == std::string(16, '9'));
    CHECK_THROWS_WITH_AS(cyclic_multiples_check(Z(13), Z(10)), doctest::Contains("requires single chain"), DomainError);
    CHECK_THROWS_WITH_AS(cyclic_multiples_check(Z(3), Z(10)), doctest::Contains("requires single chain"), DomainError);
}

TEST_CASE("midy complements") {
    const auto m7 = midy_complement_check(Z(7), Z(10));
    CHECK(m7.l == 3);
    CHECK(m7.halves_sum == Z(999));
    CHECK(m7.represents == 1);
    CHECK(m7.all_samples_pass);
    const auto m17 = midy_complement_check(Z(17), Z(10));
    CHECK(m17.l == 8);
    CHECK(text(m17.first_half) == "05882352");
    CHECK(text(m17.second_half) == "94117647");
    CHECK(m17.halves_sum == Z(99999999));
    const auto mp = midy_complement_check(F5({1, 0, 1}), X);
    CHECK(mp.l == 2);
    CHECK(mp.represents == 0);
    CHECK(mp.all_samples_pass);
    CHECK(std::all_of(mp.digit_sums.begin(), mp.digit_sums.end(), [](const Element& e) { return e.is_zero(); }));
    const auto odd = midy_complement_check(Z(31), Z(10));  // period 15
    CHECK_FALSE(odd.witness_found);
    // large divisor: samples are capped
    CHECK(midy_complement_check(Z(1009), Z(10)).samples_checked <= 101);
}

TEST_CASE("square splits") {
    const auto a = square_split_check(Z(7), Z(10), Z(142857), 1);
    CHECK(a.high == Z(20408));
    CHECK(a.low == Z(122449));
    CHECK(a.sum == Z(142857));
    CHECK(a.quotient == Z(1));
    CHECK(a.quotient_matches_formula);
    const auto b = square_split_check(Z(27), Z(10), Z(37), 1);
    CHECK(b.sum == Z(370));
    CHECK(b.quotient == Z(10));
    const auto c = square_split_check(Z(7), Z(10), Z(2), 1);
    CHECK(c.degenerate);
    CHECK(c.sum == Z(285714));
    CHECK(c.divisible);
    for (long k = 1; k < 2000; k += 37)
        for (unsigned long l : {1ul, 2ul}) {
            const auto r = square_split_check(Z(13), Z(10), Z(k), l);
            CHECK(r.divisible);
            CHECK(r.quotient_matches_formula);
        }
}

TEST_CASE("unity as a recurring numeral") {
    const auto z = unity_recurring_witness(DomainTag::integers(), Z(10), 3);
    CHECK(z.found);
    CHECK(text(z.witness) == "9");
    CHECK(text(unity_recurring_witness(DomainTag::integers(), Z(2), 3).witness) == "1");
    const auto neg = unity_recurring_witness(DomainTag::integers(), Z(-10), 3);
    CHECK(neg.found);
    CHECK(neg.base_used == Z(-11));
    const auto f = unity_recurring_witness(DomainTag::polynomials(5), X, 3);
    CHECK_FALSE(f.found);
    CHECK(f.search_complete);
    CHECK(f.strings_checked == 5 + 25 + 125);
    const auto cut = unity_recurring_witness(DomainTag::polynomials(5), X, 3, 10);
    CHECK_FALSE(cut.search_complete);
}

TEST_CASE("same period for divisors") {
    const auto a = same_period_for_divisors_check({Z(7), Z(13)}, Z(10));
    CHECK(a.product_order == 6);
    CHECK(a.all_equal);
    CHECK(a.passed());
    CHECK(a.divisor_orders.size() == 3);
    const auto b = same_period_for_divisors_check({Z(3), Z(7)}, Z(10));
    CHECK(b.product_order == 6);
    CHECK(b.lcm_matches);
    CHECK_FALSE(b.all_equal);
    const auto c = same_period_for_divisors_check({Z(41)}, Z(10));
    CHECK(c.product_order == 5);
    const auto g = same_period_for_divisors_check({Element::gaussian(2, 1), Element::gaussian(2, -1), Element::gaussian(3, 0)}, Element::gaussian(7, 0));
    CHECK(g.passed());
    CHECK_THROWS_AS(same_period_for_divisors_check({Z(7), Z(-7)}, Z(10)), DomainError);
}
