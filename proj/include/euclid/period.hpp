#pragma once

#include <cstdint>
#include <vector>

#include "euclid/element.hpp"

namespace euclid {

/// Least e >= 1 with B^e == 1 mod d. Uses the unit-group order of every
/// prime-power factor of d and strips its prime factors; falls back to
/// iterated multiplication when d cannot be factored within budget.
Integer multiplicative_order(const Element& base, const Element& d);

/// Reference implementation: iterate x <- x*B mod d until x == 1.
Integer order_by_iteration(const Element& base, const Element& d, std::uint64_t step_budget);

/// |(E / pi^alpha E)^x| = N^(alpha-1) (N - 1) with N the residue count of pi.
Integer unit_group_order(const Element& prime, unsigned long alpha);

/// The rational prime p' lying under a prime p, and f = nu_p(p').
struct PrimeIntegerBelow {
    Integer prime_integer;
    unsigned long f = 1;
};

/// Z: (|p|, 1). Z[i]: the rational prime below p; f = 2 exactly for the
/// associates of 1+i. Polynomial rings have no such integer (error).
PrimeIntegerBelow prime_integer_below(const Element& p);

struct LteReport {
    Element a_m;                // (x^m - y^m) / (x - y)
    Integer prime_integer;      // p'
    unsigned long f = 1;
    unsigned long nu_x_minus_y = 0;
    bool p_divides_a = false;
    bool p_prime_divides_m = false;
    bool divisibility_clause_holds = false;
    bool valuation_clause_applies = false;
    unsigned long nu_a = 0;       // nu_p(a(m))
    unsigned long expected_nu = 0;  // f * nu_{p'}(m)
    bool valuation_clause_holds = true;
    bool passed() const { return divisibility_clause_holds && valuation_clause_holds; }
};

/// Checks both clauses of the lifting-the-exponent statement on one instance.
/// Preconditions: x != y, p prime, p does not divide y, p | (x - y); Z or Z[i].
LteReport lte_check(const Element& x, const Element& y, unsigned long m, const Element& p);

struct PrimePowerPeriod {
    Element prime;
    Integer prime_integer;  // p'
    unsigned long f = 1;
    unsigned long g = 0;
    /// q[n-1] = order of B mod p^n, for n = 1..alpha_max
    std::vector<Integer> q;
};

/// q_n = ord(B mod p^n) for n <= alpha_max, computed directly and checked
/// against the lifting law q_{g+n} = p'^ceil(n/f) q_g. In Z[i] each order
/// is additionally cross-checked by brute force when the ring is small.
/// Disagreements are thrown as DomainError.
PrimePowerPeriod prime_power_period(const Element& p, unsigned long alpha_max, const Element& base);

struct PrimeFactorPeriod {
    Element prime;
    unsigned long alpha = 0;
    Integer period;  // Q_i = q_alpha(p_i)
    unsigned long g = 0;           // 0 when lifting data is not defined (F_p[X])
    std::vector<Integer> q_list;   // empty for F_p[X]
};

struct PeriodResult {
    Element divisor;
    Element base;
    Integer period;  // D_d = lcm(Q_i)
    std::vector<PrimeFactorPeriod> per_prime;
};

PeriodResult period_of_d(const Element& d, const Element& base);

Integer lcm(const Integer& a, const Integer& b);

}  // namespace euclid
