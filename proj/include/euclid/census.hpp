#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "euclid/element.hpp"

namespace euclid {

inline constexpr std::uint64_t kSieveCap = 100'000'000;
inline constexpr double kArtinConstant = 0.3739558136192;

/// All primes <= limit, ascending. Segmented; throws DomainError past kSieveCap.
std::vector<std::uint32_t> sieve_primes(std::uint64_t limit);

enum class PrimeClass { FullPeriod, OddPeriod, EvenNonFull };
std::string to_string(PrimeClass c);

/// D_p = ord_p(B) by stripping the prime factors of p - 1.
std::uint64_t order_mod_prime(std::uint64_t p, std::int64_t base);
/// Class of p using the parity fast path (B^t == 1 with t the odd part of
/// p - 1 iff D_p is odd) and a primitive-root test for the even case.
/// Throws DomainError("excluded prime") when p | B or p == 2.
PrimeClass classify_prime(std::uint64_t p, std::int64_t base);
/// Same verdict computed from the full order; used to cross-check the fast path.
PrimeClass classify_by_order(std::uint64_t p, std::int64_t base);

/// Censused primes are exactly those with p odd and p not dividing B.
bool census_excludes(std::uint64_t p, std::int64_t base);

enum class Schedule { Serial, Parallel };

struct DensityReferences {
    std::optional<double> full;          // Artin's constant, conditional on GRH
    bool full_requires_grh = true;
    std::optional<double> odd;           // 1/3 unless B = +-u^2 or +-2u^2
    std::optional<double> even_nonfull;  // 2/3 - A, only with both of the above
};

/// Reference densities for the three classes.
///  - odd-period 1/3 is withheld when B = u^2 or 2u^2 (up to sign);
///  - Artin's A is attached when B is not a perfect power, not -1 and its
///    squarefree kernel is not 1 mod 4 (where A needs a correction factor).
DensityReferences density_references(std::int64_t base);

struct ClassCounts {
    std::uint64_t full = 0;
    std::uint64_t odd = 0;
    std::uint64_t even_nonfull = 0;
    std::uint64_t excluded = 0;
    std::uint64_t included() const { return full + odd + even_nonfull; }
    friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

struct CensusReport {
    std::int64_t base = 10;
    std::uint64_t limit = 0;
    std::uint64_t prime_count = 0;  // pi(limit)
    ClassCounts counts;
    double full = 0, odd = 0, even_nonfull = 0;  // proportions of included primes
    DensityReferences references;
    // proportion minus 9/24, 8/24, 7/24
    double delta_ratio_full = 0, delta_ratio_odd = 0, delta_ratio_even = 0;
    bool ordered() const { return counts.full > counts.odd && counts.odd > counts.even_nonfull; }
};

/// Classifies every censused prime <= limit (limit >= 100).
CensusReport census(std::uint64_t limit, std::int64_t base, Schedule schedule = Schedule::Parallel);

/// Truncated Artin product over p <= prime_limit in fixed-point arithmetic
/// with outward rounding, plus the tail bound sum_{n > N} 1/(n(n-1)) = 1/N.
struct ArtinResult {
    std::uint64_t prime_limit = 0;
    std::uint64_t primes_used = 0;
    Integer scale;        // 10^digits
    unsigned digits = 0;  // fractional decimal digits carried
    Integer product_lo;   // floor-rounded truncated product, times scale
    Integer product_hi;   // ceil-rounded
    Integer lower;        // certified lower bound on A, times scale
    Integer upper;        // certified upper bound on A, times scale
    double value = 0;     // midpoint of the truncated-product interval
    double error_bound = 0;  // upper - lower
    std::string decimal(const Integer& scaled, unsigned places = 15) const;
};

ArtinResult artin_constant(std::uint64_t prime_limit);

struct ResidualIndexHistogram {
    std::int64_t base = 10;
    std::uint64_t limit = 0;
    std::uint64_t max_m = 0;
    std::vector<std::uint64_t> buckets;  // buckets[m-1]: primes with c_p = m, m <= max_m
    std::uint64_t overflow = 0;          // c_p > max_m
    std::uint64_t total = 0;             // censused primes
    bool identity_holds = true;          // c_p * D_p == p - 1 for every prime
    std::uint64_t bucket(std::uint64_t m) const { return m >= 1 && m <= buckets.size() ? buckets[m - 1] : 0; }
};

ResidualIndexHistogram residual_index_histogram(std::uint64_t limit, std::int64_t base, std::uint64_t max_m,
                                                Schedule schedule = Schedule::Parallel);

struct WieferichResult {
    std::int64_t base = 10;
    std::uint64_t limit = 0;
    std::vector<std::uint64_t> primes;
    std::size_t non_hits_checked = 0;
    bool equivalence_holds = true;  // q1 == q2 exactly on hits, on hits and sampled non-hits
};

/// Primes p <= limit, p not dividing B, with B^(p-1) == 1 mod p^2. The
/// equivalence with ord_p(B) == ord_{p^2}(B) is asserted on every hit and on
/// 100 seeded non-hits.
WieferichResult wieferich_search(std::uint64_t limit, std::int64_t base, std::uint64_t seed = 42,
                                 Schedule schedule = Schedule::Parallel);

namespace kernels {

// Serial reference and OpenMP versions; results must agree exactly.
ClassCounts classify_serial(const std::vector<std::uint32_t>& primes, std::int64_t base);
ClassCounts classify_parallel(const std::vector<std::uint32_t>& primes, std::int64_t base);

// out[m-1] for m <= max_m, out[max_m] = overflow; returns false if c_p D_p != p - 1 anywhere
bool residual_serial(const std::vector<std::uint32_t>& primes, std::int64_t base, std::uint64_t max_m,
                     std::vector<std::uint64_t>& out);
bool residual_parallel(const std::vector<std::uint32_t>& primes, std::int64_t base, std::uint64_t max_m,
                       std::vector<std::uint64_t>& out);

std::vector<std::uint64_t> wieferich_serial(const std::vector<std::uint32_t>& primes, std::int64_t base);
std::vector<std::uint64_t> wieferich_parallel(const std::vector<std::uint32_t>& primes, std::int64_t base);

int max_threads();

}  // namespace kernels

}  // namespace euclid
