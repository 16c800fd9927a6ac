#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "euclid/digits.hpp"
#include "euclid/element.hpp"

namespace euclid {

/// First `count` terms of the expansion of a/d: a_i is the quotient of
/// B * r_{i-1} by d under the fixed division convention, r_0 = a.
/// Requires d proper and a = 0 or nu(a) < nu(d).
std::vector<Element> expansion_sequence(const Element& a, const Element& d, const Element& base, std::size_t count);

/// Full expansion of a/d with the recurring block found by remainder-state
/// repetition (exact, linear in preperiod + period).
RecurringNumeral expand_fraction(const Element& a, const Element& d, const Element& base);

/// 1/d = 0.(r_d) with d * r_d = B^e - 1 and e = ord_d(B).
struct Repetend {
    Element divisor;
    Element base;
    std::size_t period = 0;
    Element value;
    std::vector<Element> digits;  // exactly `period` entries, zero padded on the left
};

Repetend repetend(const Element& d, const Element& base);

struct Fraction {
    Element numerator;
    Element denominator;
    /// Numerator equalled B^n - 1, so the numeral is the value 1.
    bool declared_one = false;
};

/// a_1...a_n / (B^n - 1) for a pure recurring numeral, with integer and
/// preperiod parts folded in by shifting. Unreduced.
Fraction value_of_recurring(const RecurringNumeral& rn);
/// Divide out the gcd and unit-normalize the denominator.
Fraction reduce(const Fraction& f);

struct Chain {
    std::vector<Element> digits;  // lexicographically least rotation
    std::size_t length = 0;
    Element smallest_residue;     // least residue t of the orbit (0 stands for d/d)
};

struct ChainCensus {
    Element divisor;
    Element base;
    /// (length b_i, count c_i), by decreasing length
    std::vector<std::pair<std::size_t, std::size_t>> entries;
    std::vector<Chain> chains;
    std::size_t residues = 0;  // sum b_i c_i
};

/// Orbits of multiplication by B on the residues mod d, including d/d = 0.(B-1).
ChainCensus chains(const Element& d, const Element& base);

struct CyclicMultiplesReport {
    Repetend rep;
    std::vector<std::string> multiples;  // t * r_d as e-digit strings, t = 1..|d|-1
    bool all_rotations = false;
    Element full_multiple;               // d * r_d
    bool full_multiple_is_all_max = false;  // d * r_d == B^e - 1
    bool passed() const { return all_rotations && full_multiple_is_all_max; }
};

/// Z only; d must have a single nonzero chain (e = |d| - 1).
CyclicMultiplesReport cyclic_multiples_check(const Element& d, const Element& base);

struct MidyReport {
    bool witness_found = false;
    std::size_t l = 0;       // least l with d | B^l + 1
    std::size_t period = 0;
    std::vector<Element> first_half;   // digits a_1..a_l of 1/d
    std::vector<Element> second_half;  // digits a_{l+1}..a_{2l}
    std::vector<Element> digit_sums;
    Element halves_sum;                // value(first) + value(second)
    int represents = -1;               // 1, 0, or -1 when neither
    std::size_t samples_checked = 0;
    bool all_samples_pass = false;
};

/// Sums the i-th and (l+i)-th digit chains of a/d for up to `sample_cap`
/// residues a coprime to d and checks each sums to a chain worth 1 or 0.
MidyReport midy_complement_check(const Element& d, const Element& base, std::size_t sample_cap = 100);

struct SquareSplitReport {
    Repetend rep;
    Element product;     // k * r_d
    Element high;        // s'
    Element low;         // last l*e digits
    Element sum;         // s' + low
    bool divisible = false;
    Element quotient;    // sum / r_d
    bool degenerate = false;  // product has at most l*e digits
    bool quotient_matches_formula = false;  // quotient == k - d s' (1 + B^e + ... + B^{(l-1)e})
};

SquareSplitReport square_split_check(const Element& d, const Element& base, const Element& k, unsigned long l);

struct UnityReport {
    bool found = false;
    Element base_used;                // B, or B - 1 in the nu(B) < nu(B - 1) case
    std::vector<Element> witness;     // repetend digits representing 1
    std::size_t max_period = 0;
    std::uint64_t strings_checked = 0;
    bool search_complete = true;      // false when the budget cut the search short
    std::string reason;
};

/// Z: the witness 0.(B-1) (or 0.(B,-B) in base B-1). Other domains: exhaustive
/// search over digit strings of length <= max_period for a_1..a_n = B^n - 1.
UnityReport unity_recurring_witness(const DomainTag& tag, const Element& base, std::size_t max_period,
                                    std::uint64_t string_budget = 10'000'000);

struct SamePeriodReport {
    std::vector<Integer> prime_orders;
    Integer product_order;
    Integer lcm_of_orders;
    bool lcm_matches = false;
    bool all_equal = false;
    std::vector<std::pair<Element, Integer>> divisor_orders;  // every nonunit divisor of the product
    bool divisors_share_order = false;  // meaningful only when all_equal
    bool passed() const { return lcm_matches && (!all_equal || divisors_share_order); }
};

SamePeriodReport same_period_for_divisors_check(const std::vector<Element>& primes, const Element& base);

}  // namespace euclid
