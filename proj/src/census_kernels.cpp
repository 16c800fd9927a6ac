#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "euclid/census.hpp"
#include "prime_arith.hpp"

namespace euclid {

namespace detail {

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = sieve_primes(65535);
    return primes;
}

}  // namespace detail

using detail::powmod;
using detail::reduce_base;

namespace {

std::uint64_t order_with(std::uint64_t p, std::uint64_t b, std::vector<std::uint64_t>& factors) {
    detail::distinct_prime_factors(p - 1, factors);
    std::uint64_t e = p - 1;
    for (auto q : factors)
        while (e % q == 0 && powmod(b, e / q, p) == 1) e /= q;
    return e;
}

PrimeClass classify_with(std::uint64_t p, std::uint64_t b, std::vector<std::uint64_t>& factors) {
    std::uint64_t t = p - 1;
    while (t % 2 == 0) t /= 2;
    if (powmod(b, t, p) == 1) return PrimeClass::OddPeriod;
    // D_p even: full iff B is a primitive root
    detail::distinct_prime_factors(p - 1, factors);
    for (auto q : factors)
        if (powmod(b, (p - 1) / q, p) == 1) return PrimeClass::EvenNonFull;
    return PrimeClass::FullPeriod;
}

void require_censused(std::uint64_t p, std::int64_t base) {
    if (census_excludes(p, base)) throw DomainError("excluded prime " + std::to_string(p) + " for base " + std::to_string(base));
    if (p >= (std::uint64_t{1} << 32)) throw DomainError("prime too large for word-size census arithmetic");
}

bool wieferich_hit(std::uint64_t p, std::int64_t base) {
    const std::uint64_t m = p * p;
    return powmod(reduce_base(base, m), p - 1, m) == 1;
}

}  // namespace

std::string to_string(PrimeClass c) {
    switch (c) {
        case PrimeClass::FullPeriod: return "full";
        case PrimeClass::OddPeriod: return "odd";
        case PrimeClass::EvenNonFull: return "even_nonfull";
    }
    return "?";
}

bool census_excludes(std::uint64_t p, std::int64_t base) { return p == 2 || reduce_base(base, p) == 0; }

std::uint64_t order_mod_prime(std::uint64_t p, std::int64_t base) {
    if (p < 2 || p >= (std::uint64_t{1} << 32)) throw DomainError("order_mod_prime needs a prime below 2^32");
    const std::uint64_t b = reduce_base(base, p);
    if (b == 0) throw DomainError("base divisible by " + std::to_string(p));
    std::vector<std::uint64_t> factors;
    return order_with(p, b, factors);
}

PrimeClass classify_prime(std::uint64_t p, std::int64_t base) {
    require_censused(p, base);
    std::vector<std::uint64_t> factors;
    return classify_with(p, reduce_base(base, p), factors);
}

PrimeClass classify_by_order(std::uint64_t p, std::int64_t base) {
    require_censused(p, base);
    const std::uint64_t d = order_mod_prime(p, base);
    if (d == p - 1) return PrimeClass::FullPeriod;
    return d % 2 ? PrimeClass::OddPeriod : PrimeClass::EvenNonFull;
}

namespace kernels {

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

ClassCounts classify_serial(const std::vector<std::uint32_t>& primes, std::int64_t base) {
    ClassCounts c;
    std::vector<std::uint64_t> factors;
    for (std::uint64_t p : primes) {
        if (census_excludes(p, base)) {
            ++c.excluded;
            continue;
        }
        switch (classify_with(p, reduce_base(base, p), factors)) {
            case PrimeClass::FullPeriod: ++c.full; break;
            case PrimeClass::OddPeriod: ++c.odd; break;
            case PrimeClass::EvenNonFull: ++c.even_nonfull; break;
        }
    }
    return c;
}

ClassCounts classify_parallel(const std::vector<std::uint32_t>& primes, std::int64_t base) {
    std::uint64_t full = 0, odd = 0, even = 0, excluded = 0;
    const auto n = static_cast<std::int64_t>(primes.size());
#pragma omp parallel reduction(+ : full, odd, even, excluded)
    {
        std::vector<std::uint64_t> factors;
#pragma omp for schedule(dynamic, 4096)
        for (std::int64_t i = 0; i < n; ++i) {
            const std::uint64_t p = primes[static_cast<std::size_t>(i)];
            if (census_excludes(p, base)) {
                ++excluded;
                continue;
            }
            switch (classify_with(p, reduce_base(base, p), factors)) {
                case PrimeClass::FullPeriod: ++full; break;
                case PrimeClass::OddPeriod: ++odd; break;
                case PrimeClass::EvenNonFull: ++even; break;
            }
        }
    }
    return {full, odd, even, excluded};
}

bool residual_serial(const std::vector<std::uint32_t>& primes, std::int64_t base, std::uint64_t max_m,
                     std::vector<std::uint64_t>& out) {
    out.assign(max_m + 1, 0);
    std::vector<std::uint64_t> factors;
    bool ok = true;
    for (std::uint64_t p : primes) {
        if (census_excludes(p, base)) continue;
        const std::uint64_t d = order_with(p, reduce_base(base, p), factors);
        const std::uint64_t c = (p - 1) / d;
        ok = ok && c * d == p - 1;
        ++out[std::min(c, max_m + 1) - 1];
    }
    return ok;
}

bool residual_parallel(const std::vector<std::uint32_t>& primes, std::int64_t base, std::uint64_t max_m,
                       std::vector<std::uint64_t>& out) {
    out.assign(max_m + 1, 0);
    bool ok = true;
    const auto n = static_cast<std::int64_t>(primes.size());
#pragma omp parallel reduction(&& : ok)
    {
        std::vector<std::uint64_t> local(max_m + 1, 0);
        std::vector<std::uint64_t> factors;
#pragma omp for schedule(dynamic, 4096) nowait
        for (std::int64_t i = 0; i < n; ++i) {
            const std::uint64_t p = primes[static_cast<std::size_t>(i)];
            if (census_excludes(p, base)) continue;
            const std::uint64_t d = order_with(p, reduce_base(base, p), factors);
            const std::uint64_t c = (p - 1) / d;
            ok = ok && c * d == p - 1;
            ++local[std::min(c, max_m + 1) - 1];
        }
#pragma omp critical
        for (std::size_t m = 0; m < local.size(); ++m) out[m] += local[m];
    }
    return ok;
}

std::vector<std::uint64_t> wieferich_serial(const std::vector<std::uint32_t>& primes, std::int64_t base) {
    std::vector<std::uint64_t> hits;
    for (std::uint64_t p : primes)
        if (reduce_base(base, p) != 0 && wieferich_hit(p, base)) hits.push_back(p);
    return hits;
}

std::vector<std::uint64_t> wieferich_parallel(const std::vector<std::uint32_t>& primes, std::int64_t base) {
    std::vector<std::uint64_t> hits;
    const auto n = static_cast<std::int64_t>(primes.size());
#pragma omp parallel
    {
        std::vector<std::uint64_t> local;
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < n; ++i) {
            const std::uint64_t p = primes[static_cast<std::size_t>(i)];
            if (reduce_base(base, p) != 0 && wieferich_hit(p, base)) local.push_back(p);
        }
#pragma omp critical
        hits.insert(hits.end(), local.begin(), local.end());
    }
    std::sort(hits.begin(), hits.end());
    return hits;
}

}  // namespace kernels

}  // namespace euclid
