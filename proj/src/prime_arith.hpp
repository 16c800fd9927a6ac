#pragma once

// Word-size modular helpers for the census kernels (p < 2^32).

#include <cstdint>
#include <vector>

namespace euclid::detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

// B mod m as a least non-negative residue, for signed B.
inline std::uint64_t reduce_base(std::int64_t base, std::uint64_t m) {
    const auto sm = static_cast<__int128>(m);
    __int128 r = static_cast<__int128>(base) % sm;
    if (r < 0) r += sm;
    return static_cast<std::uint64_t>(r);
}

// Primes below 2^16: enough trial divisors for any n < 2^32.
const std::vector<std::uint32_t>& small_primes();

// Distinct prime factors of n < 2^32, ascending.
inline void distinct_prime_factors(std::uint64_t n, std::vector<std::uint64_t>& out) {
    out.clear();
    for (std::uint64_t q : small_primes()) {
        if (q * q > n) break;
        if (n % q) continue;
        out.push_back(q);
        do n /= q;
        while (n % q == 0);
    }
    if (n > 1) out.push_back(n);
}

}  // namespace euclid::detail
