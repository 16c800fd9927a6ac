#include <algorithm>
#include <cmath>

#include "euclid/census.hpp"

namespace euclid {

namespace {

constexpr std::uint64_t kSegment = 1 << 18;

std::vector<std::uint32_t> simple_sieve(std::uint64_t n) {
    std::vector<bool> composite(n + 1, false);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
    }
    return primes;
}

}  // namespace

std::vector<std::uint32_t> sieve_primes(std::uint64_t limit) {
    if (limit > kSieveCap) throw DomainError("sieve limit " + std::to_string(limit) + " exceeds " + std::to_string(kSieveCap));
    if (limit < 2) return {};
    auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit)));
    while (root * root > limit) --root;
    while ((root + 1) * (root + 1) <= limit) ++root;
    const auto base_primes = simple_sieve(root);

    std::vector<std::uint32_t> primes;
    // pi(x) < 1.26 x / ln x
    primes.reserve(static_cast<std::size_t>(1.26 * static_cast<double>(limit) / std::log(static_cast<double>(limit))) + 16);
    std::vector<char> mark(kSegment);
    for (std::uint64_t lo = 2; lo <= limit; lo += kSegment) {
        const std::uint64_t hi = std::min(limit, lo + kSegment - 1);
        std::fill(mark.begin(), mark.end(), 1);
        for (std::uint64_t p : base_primes) {
            if (p * p > hi) break;
            std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
            for (std::uint64_t j = start; j <= hi; j += p) mark[j - lo] = 0;
        }
        for (std::uint64_t x = lo; x <= hi; ++x)
            if (mark[x - lo]) primes.push_back(static_cast<std::uint32_t>(x));
    }
    return primes;
}

}  // namespace euclid
