#include "euclid/selftest.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "euclid/census.hpp"
#include "euclid/digits.hpp"
#include "euclid/divtest.hpp"
#include "euclid/domain.hpp"
#include "euclid/factor.hpp"
#include "euclid/period.hpp"
#include "euclid/recurring.hpp"

namespace euclid {

namespace {

Element Z(long n) { return Element::integer(n); }
Element F5(std::vector<std::int64_t> c) { return Element::polynomial(5, c); }

CheckOutcome pass(std::string detail = {}) { return {true, std::move(detail)}; }
CheckOutcome fail(std::string detail) { return {false, std::move(detail)}; }

std::string join(const std::vector<Element>& v) {
    std::string out;
    for (const auto& e : v) out += (out.empty() ? "" : ",") + e.to_string();
    return out;
}

std::string join(const std::vector<Integer>& v) {
    std::string out;
    for (const auto& e : v) out += (out.empty() ? "" : ",") + e.get_str();
    return out;
}

CheckOutcome k_values() {
    const auto k = reverse_k(Z(29), Z(10)).value;
    const auto v = reverse_reduce(Z(841), Z(29), Z(10));
    const bool ok = k == Z(3) && v.reduced_value == Z(29) && v.divisible && forward_k(Z(29), Z(10)).value == Z(10);
    return {ok, "k=" + k.to_string() + " alpha(841)=" + v.reduced_value.to_string()};
}

CheckOutcome chunked() {
    const auto v = chunked_reduce(Z(142857142), Z(7), Z(10), ChunkSpec{{3, 6}});
    return {v.reduced_value == Z(-573) && v.residue == Z(1) && !v.divisible,
            "alpha=" + v.reduced_value.to_string() + " residue=" + v.residue.to_string()};
}

CheckOutcome polynomial_tests(std::uint64_t seed) {
    const Element x = F5({0, 1});
    const Element d = F5({1, 0, 1});
    const auto k = reverse_k(d, x).value;
    if (!(k == F5({0, -1}))) return fail("k=" + k.to_string());
    if (!reverse_reduce(F5({0, 0, 1, 0, 1}), d, x).divisible) return fail("X^4+X^2 not declared divisible");
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 200; ++i) {
        std::vector<std::int64_t> c(1 + rng() % 7);
        for (auto& v : c) v = static_cast<std::int64_t>(rng() % 5);
        c.push_back(1);
        const std::uint64_t root = 1 + rng() % 4;
        if (!factor_theorem_check(F5(c), root).agree()) return fail("factor theorem disagreement at pair " + std::to_string(i));
    }
    return pass("k=" + k.to_string() + ", 200 factor-theorem pairs agree");
}

CheckOutcome repetends() {
    const auto r7 = repetend(Z(7), Z(10));
    const auto r17 = repetend(Z(17), Z(10));
    const auto r27 = repetend(Z(27), Z(10));
    const auto rp = repetend(F5({1, 0, 1}), F5({0, 1}));
    const bool ok = r7.period == 6 && r7.value == Z(142857) && format_numeral(Numeral{Z(10), r17.digits}) == "0588235294117647" &&
                    r27.period == 3 && format_numeral(Numeral{Z(10), r27.digits}) == "037" && rp.period == 4 &&
                    rp.digits == std::vector<Element>{F5({0}), F5({1}), F5({0}), F5({-1})};
    return {ok, "r7=" + r7.value.to_string() + " r27 period " + std::to_string(r27.period) + " poly digits " + join(rp.digits)};
}

CheckOutcome cyclic() {
    const auto c7 = cyclic_multiples_check(Z(7), Z(10));
    const auto c17 = cyclic_multiples_check(Z(17), Z(10));
    return {c7.passed() && c17.passed() && c7.full_multiple == Z(999999),
            "7*142857=" + c7.full_multiple.to_string() + " 17*r=" + c17.full_multiple.to_string()};
}

CheckOutcome midy() {
    const auto m7 = midy_complement_check(Z(7), Z(10));
    const auto m17 = midy_complement_check(Z(17), Z(10));
    const auto mp = midy_complement_check(F5({1, 0, 1}), F5({0, 1}));
    const bool ok = m7.halves_sum == Z(999) && m17.halves_sum == Z(99999999) && mp.witness_found && mp.represents == 0 &&
                    m7.all_samples_pass && m17.all_samples_pass && mp.all_samples_pass;
    return {ok, "142+857=" + m7.halves_sum.to_string() + " 17: " + m17.halves_sum.to_string() +
                    " poly sums " + join(mp.digit_sums)};
}

CheckOutcome square_split() {
    const auto a = square_split_check(Z(7), Z(10), Z(142857), 1);
    const auto b = square_split_check(Z(27), Z(10), Z(37), 1);
    return {a.sum == Z(142857) && b.sum == Z(370) && a.quotient_matches_formula && b.quotient_matches_formula,
            "142857^2 -> " + a.sum.to_string() + ", 37^2 -> " + b.sum.to_string()};
}

CheckOutcome lifting() {
    const auto p3 = prime_power_period(Z(3), 4, Z(10));
    const auto p7 = prime_power_period(Z(7), 2, Z(10));
    const auto p487 = prime_power_period(Z(487), 3, Z(10));
    const bool ok = join(p3.q) == "1,1,3,9" && p3.g == 2 && join(p7.q) == "6,42" && p7.g == 1 &&
                    join(p487.q) == "486,486,236682" && p487.g == 2;
    return {ok, "3:[" + join(p3.q) + "] 7:[" + join(p7.q) + "] 487:[" + join(p487.q) + "]"};
}

CheckOutcome gaussian_lifting() {
    const Element base = Element::gaussian(3, 2);
    std::string detail;
    for (const auto& p : {Element::gaussian(1, 1), Element::gaussian(2, 1), Element::gaussian(3, 0)}) {
        const auto r = prime_power_period(p, 4, base);  // throws on any law or brute-force mismatch
        detail += p.to_string() + ":g=" + std::to_string(r.g) + "[" + join(r.q) + "] ";
    }
    return pass(detail);
}

CheckOutcome periods() {
    if (period_of_d(Z(91), Z(10)).period != 6) return fail("D_91 != 6");
    for (long d = 2; d <= 500; ++d) {
        if (d % 2 == 0 || d % 5 == 0) continue;
        const auto e = expand_fraction(Z(1), Z(d), Z(10)).repetend_digits.size();
        if (period_of_d(Z(d), Z(10)).period != static_cast<unsigned long>(e)) return fail("mismatch at d=" + std::to_string(d));
    }
    return pass("D_91=6, d<=500 agree with remainder cycles");
}

CheckOutcome chain_census() {
    auto tally = [](long d) {
        std::string s;
        for (auto [b, c] : chains(Z(d), Z(10)).entries) s += "(" + std::to_string(b) + "," + std::to_string(c) + ")";
        return s;
    };
    for (long d = 2; d <= 200; ++d) {
        if (d % 2 == 0 || d % 5 == 0) continue;
        const auto c = chains(Z(d), Z(10));
        std::size_t sum = 0;
        for (auto [b, n] : c.entries) sum += b * n;
        if (sum != static_cast<std::size_t>(d)) return fail("sum b_i c_i != d at " + std::to_string(d));
    }
    const bool ok = tally(7) == "(6,1)(1,1)" && tally(13) == "(6,2)(1,1)" && tally(21) == "(6,3)(1,3)";
    return {ok, "7:" + tally(7) + " 13:" + tally(13) + " 21:" + tally(21)};
}

CheckOutcome wieferich() {
    const auto w = wieferich_search(10'000, 10);
    const bool ok = w.primes == std::vector<std::uint64_t>{3, 487} && w.equivalence_holds;
    std::string hits;
    for (auto p : w.primes) hits += std::to_string(p) + " ";
    return {ok, "hits " + hits + "(" + std::to_string(w.non_hits_checked) + " non-hits checked)"};
}

CheckOutcome census_check() {
    const auto r = census(1'370'471, 10);
    const bool ok = r.ordered() && std::abs(r.full - 0.37395) <= 0.02 && std::abs(r.odd - 1.0 / 3) <= 0.02 &&
                    std::abs(r.even_nonfull - 0.29271) <= 0.02;
    std::ostringstream os;
    os.precision(5);
    os << std::fixed << r.full << " / " << r.odd << " / " << r.even_nonfull;
    return {ok, os.str()};
}

CheckOutcome census_determinism() {
    const auto primes = sieve_primes(200'000);
    const auto a = kernels::classify_serial(primes, 10);
    const auto b = kernels::classify_parallel(primes, 10);
    std::vector<std::uint64_t> ra, rb;
    const bool ia = kernels::residual_serial(primes, 10, 8, ra);
    const bool ib = kernels::residual_parallel(primes, 10, 8, rb);
    const bool ok = a == b && ra == rb && ia && ib && ra[0] == a.full &&
                    kernels::wieferich_serial(primes, 10) == kernels::wieferich_parallel(primes, 10);
    return {ok, std::to_string(kernels::max_threads()) + " threads"};
}

CheckOutcome parity_and_halves() {
    for (std::uint64_t p : sieve_primes(10'000)) {
        if (census_excludes(p, 10)) continue;
        if (classify_prime(p, 10) != classify_by_order(p, 10)) return fail("fast path disagrees at " + std::to_string(p));
        const std::uint64_t d = order_mod_prime(p, 10);
        bool half = false;
        std::uint64_t x = 1;
        for (std::uint64_t l = 1; 2 * l <= d && !half; ++l) {
            x = x * 10 % p;
            half = x == p - 1;
        }
        if (half != (d % 2 == 0)) return fail("even period criterion fails at " + std::to_string(p));
    }
    return pass("primes <= 10^4");
}

CheckOutcome artin() {
    const auto a = artin_constant(10'000'000);
    const double lo = mpq_class(a.lower, a.scale).get_d();
    const double hi = mpq_class(a.upper, a.scale).get_d();
    const bool ok = std::abs(a.value - kArtinConstant) < 1e-6 && lo <= kArtinConstant && kArtinConstant <= hi;
    return {ok, "[" + a.decimal(a.lower) + ", " + a.decimal(a.upper) + "]"};
}

CheckOutcome lte(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const long small[] = {2, 3, 5, 7, 11, 13};
    int z = 0;
    while (z < 500) {
        const long p = small[rng() % 6];
        const long y = static_cast<long>(rng() % 200) - 100;
        const long t = static_cast<long>(rng() % 41) - 20;
        if (y % p == 0 || t == 0) continue;
        const auto m = 1 + rng() % 40;
        const auto r = lte_check(Z(y + p * t), Z(y), m, Z(p));
        if (!r.passed()) return fail("Z instance x=" + std::to_string(y + p * t) + " y=" + std::to_string(y) + " m=" + std::to_string(m));
        ++z;
    }
    const Element gp[] = {Element::gaussian(1, 1), Element::gaussian(2, 1), Element::gaussian(1, 2), Element::gaussian(3, 0)};
    int g = 0;
    while (g < 50) {
        const auto& p = gp[rng() % 4];
        const Element y = Element::gaussian(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 21) - 10);
        const Element t = Element::gaussian(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 9) - 4);
        if (t.is_zero() || y.is_zero() || divides(p, y)) continue;
        const auto m = 1 + rng() % 20;
        if (!lte_check(y + p * t, y, m, p).passed()) return fail("Z[i] instance y=" + y.to_string() + " p=" + p.to_string());
        ++g;
    }
    return pass("500 Z and 50 Z[i] instances");
}

CheckOutcome unity() {
    const auto z = unity_recurring_witness(DomainTag::integers(), Z(10), 3);
    RecurringNumeral rn{z.base_used, {}, {}, z.witness, false};
    const bool z_ok = z.found && join(z.witness) == "9" && value_of_recurring(rn).declared_one;
    const auto f = unity_recurring_witness(DomainTag::polynomials(5), F5({0, 1}), 3);
    const bool f_ok = !f.found && f.search_complete;
    return {z_ok && f_ok, "Z: 0.(" + join(z.witness) + ") = 1; F_5[X]: " + std::to_string(f.strings_checked) + " strings, none"};
}

CheckOutcome axioms(std::uint64_t seed) {
    std::string detail;
    bool ok = true;
    for (const auto& tag : {DomainTag::integers(), DomainTag::gaussian(), DomainTag::polynomials(5)}) {
        const auto r = check_axioms(tag, 1000, seed);
        ok = ok && r.passed();
        detail += tag.name() + ":" + std::to_string(r.checks) + (r.passed() ? " ok " : " FAIL ");
        if (!r.passed()) detail += r.failures.front().axiom + " " + r.failures.front().detail + " ";
    }
    return {ok, detail};
}

}  // namespace

SelfTestResult timed_check(const std::string& name, const std::function<CheckOutcome()>& check) {
    SelfTestResult r;
    r.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
        auto out = check();
        r.passed = out.passed;
        r.detail = std::move(out.detail);
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<SelfTestResult> run_selftest(std::uint64_t seed) {
    std::vector<SelfTestResult> out;
    out.push_back(timed_check("divtest.k_values", k_values));
    out.push_back(timed_check("divtest.chunked", chunked));
    out.push_back(timed_check("divtest.polynomial", [&] { return polynomial_tests(seed); }));
    out.push_back(timed_check("recurring.repetend", repetends));
    out.push_back(timed_check("recurring.cyclic_multiples", cyclic));
    out.push_back(timed_check("recurring.midy", midy));
    out.push_back(timed_check("recurring.square_split", square_split));
    out.push_back(timed_check("period.lifting_z", lifting));
    out.push_back(timed_check("period.lifting_gaussian", gaussian_lifting));
    out.push_back(timed_check("period.remainder_cycles", periods));
    out.push_back(timed_check("recurring.chain_census", chain_census));
    out.push_back(timed_check("census.wieferich", wieferich));
    out.push_back(timed_check("census.densities", census_check));
    out.push_back(timed_check("census.serial_vs_parallel", census_determinism));
    out.push_back(timed_check("census.parity_and_halves", parity_and_halves));
    out.push_back(timed_check("census.artin", artin));
    out.push_back(timed_check("period.lte", [&] { return lte(seed); }));
    out.push_back(timed_check("recurring.unity", unity));
    out.push_back(timed_check("domain.axioms", [&] { return axioms(seed); }));
    return out;
}

}  // namespace euclid
