#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_set>

#include "euclid/census.hpp"
#include "euclid/period.hpp"

namespace euclid {

namespace {

bool is_square(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n;
}

bool is_perfect_power(std::uint64_t n) {
    Integer m(static_cast<unsigned long>(n));
    return mpz_perfect_power_p(m.get_mpz_t()) != 0;
}

std::uint64_t squarefree_kernel(std::uint64_t n) {
    std::uint64_t h = 1;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        unsigned e = 0;
        while (n % q == 0) {
            n /= q;
            ++e;
        }
        if (e % 2) h *= q;
    }
    return h * n;
}

std::uint64_t magnitude(std::int64_t b) { return b < 0 ? 0 - static_cast<std::uint64_t>(b) : static_cast<std::uint64_t>(b); }

void require_base(std::int64_t base) {
    if (magnitude(base) < 2) throw DomainError("census base must satisfy |B| >= 2");
}

double ratio(std::uint64_t a, std::uint64_t b) { return b == 0 ? 0.0 : static_cast<double>(a) / static_cast<double>(b); }

}  // namespace

DensityReferences density_references(std::int64_t base) {
    require_base(base);
    const std::uint64_t n = magnitude(base);
    DensityReferences r;
    const bool square_form = is_square(n) || (n % 2 == 0 && is_square(n / 2));
    if (!square_form) r.odd = 1.0 / 3.0;
    if (base > 0 && !is_perfect_power(n) && squarefree_kernel(n) % 4 != 1) r.full = kArtinConstant;
    if (r.full && r.odd) r.even_nonfull = 2.0 / 3.0 - kArtinConstant;
    return r;
}

CensusReport census(std::uint64_t limit, std::int64_t base, Schedule schedule) {
    require_base(base);
    if (limit < 100) throw DomainError("census limit must be at least 100");
    const auto primes = sieve_primes(limit);
    CensusReport r;
    r.base = base;
    r.limit = limit;
    r.prime_count = primes.size();
    r.counts = schedule == Schedule::Serial ? kernels::classify_serial(primes, base) : kernels::classify_parallel(primes, base);
    if (r.counts.included() + r.counts.excluded != r.prime_count) throw DomainError("internal: census partition broken");
    const auto total = r.counts.included();
    r.full = ratio(r.counts.full, total);
    r.odd = ratio(r.counts.odd, total);
    r.even_nonfull = ratio(r.counts.even_nonfull, total);
    r.references = density_references(base);
    r.delta_ratio_full = r.full - 9.0 / 24.0;
    r.delta_ratio_odd = r.odd - 8.0 / 24.0;
    r.delta_ratio_even = r.even_nonfull - 7.0 / 24.0;
    return r;
}

std::string ArtinResult::decimal(const Integer& scaled, unsigned places) const {
    Integer whole = scaled / scale;
    Integer frac = scaled % scale;
    std::string f = frac.get_str();
    f.insert(0, digits - f.size(), '0');
    return whole.get_str() + "." + f.substr(0, std::min<std::size_t>(places, f.size()));
}

ArtinResult artin_constant(std::uint64_t prime_limit) {
    if (prime_limit < 2) throw DomainError("artin_constant needs prime_limit >= 2");
    ArtinResult r;
    r.prime_limit = prime_limit;
    r.digits = 40;
    mpz_ui_pow_ui(r.scale.get_mpz_t(), 10, r.digits);
    r.product_lo = r.scale;
    r.product_hi = r.scale;
    Integer num, den;
    for (std::uint64_t p : sieve_primes(prime_limit)) {
        // 1 - 1/(p(p-1)) = (p^2 - p - 1) / (p^2 - p)
        den = static_cast<unsigned long>(p);
        den *= static_cast<unsigned long>(p - 1);
        num = den - 1;
        r.product_lo *= num;
        mpz_fdiv_q(r.product_lo.get_mpz_t(), r.product_lo.get_mpz_t(), den.get_mpz_t());
        r.product_hi *= num;
        mpz_cdiv_q(r.product_hi.get_mpz_t(), r.product_hi.get_mpz_t(), den.get_mpz_t());
        ++r.primes_used;
    }
    // prod_{p > N}(1 - x_p) >= 1 - sum x_p >= 1 - sum_{n > N} 1/(n(n-1)) = 1 - 1/N
    const Integer n(static_cast<unsigned long>(prime_limit));
    r.lower = r.product_lo * (n - 1);
    mpz_fdiv_q(r.lower.get_mpz_t(), r.lower.get_mpz_t(), n.get_mpz_t());
    r.upper = r.product_hi;
    const Integer mid = (r.product_lo + r.product_hi) / 2;
    r.value = mpq_class(mid, r.scale).get_d();
    r.error_bound = mpq_class(r.upper - r.lower, r.scale).get_d();
    return r;
}

ResidualIndexHistogram residual_index_histogram(std::uint64_t limit, std::int64_t base, std::uint64_t max_m, Schedule schedule) {
    require_base(base);
    if (limit < 100) throw DomainError("residual histogram limit must be at least 100");
    if (max_m == 0) throw DomainError("max_m must be positive");
    const auto primes = sieve_primes(limit);
    ResidualIndexHistogram h;
    h.base = base;
    h.limit = limit;
    h.max_m = max_m;
    std::vector<std::uint64_t> raw;
    h.identity_holds = schedule == Schedule::Serial ? kernels::residual_serial(primes, base, max_m, raw)
                                                    : kernels::residual_parallel(primes, base, max_m, raw);
    h.overflow = raw.back();
    raw.pop_back();
    h.buckets = std::move(raw);
    for (auto c : h.buckets) h.total += c;
    h.total += h.overflow;
    return h;
}

WieferichResult wieferich_search(std::uint64_t limit, std::int64_t base, std::uint64_t seed, Schedule schedule) {
    require_base(base);
    const auto primes = sieve_primes(limit);
    WieferichResult w;
    w.base = base;
    w.limit = limit;
    w.primes = schedule == Schedule::Serial ? kernels::wieferich_serial(primes, base) : kernels::wieferich_parallel(primes, base);

    const Element b = Element::integer(Integer(static_cast<long>(base)));
    auto orders_agree = [&](std::uint64_t p) {
        const Element ep = Element::integer(Integer(static_cast<unsigned long>(p)));
        return multiplicative_order(b, ep) == multiplicative_order(b, ep * ep);
    };
    for (auto p : w.primes) w.equivalence_holds = w.equivalence_holds && orders_agree(p);

    std::vector<std::uint64_t> non_hits;
    const std::unordered_set<std::uint64_t> hit_set(w.primes.begin(), w.primes.end());
    for (std::uint64_t p : primes)
        if (!hit_set.count(p) && base % static_cast<std::int64_t>(p) != 0) non_hits.push_back(p);
    std::mt19937_64 rng(seed);
    const std::size_t take = std::min<std::size_t>(100, non_hits.size());
    for (std::size_t i = 0; i < take; ++i) {
        std::swap(non_hits[i], non_hits[i + rng() % (non_hits.size() - i)]);
        w.equivalence_holds = w.equivalence_holds && !orders_agree(non_hits[i]);
        ++w.non_hits_checked;
    }
    return w;
}

}  // namespace euclid
