#pragma once

#include <optional>
#include <string>
#include <vector>

#include "euclid/element.hpp"

namespace euclid {

enum class Direction { Forward, Reverse };

/// Divisibility-test multiplier. Forward: k == B mod d. Reverse: k*B == 1 mod d.
/// `value` is always the minimal representative of its class.
struct KValue {
    Element divisor;
    Element base;
    Direction direction = Direction::Forward;
    Element value;
};

/// Cut positions 0 < n_1 < ... < n_l < m, counted in digits from the right.
struct ChunkSpec {
    std::vector<std::size_t> cuts;
};

struct DivisibilityVerdict {
    bool divisible = false;
    Element residue;        // canonical s mod d
    Element reduced_value;  // the weighted or alpha-sum actually computed
    Element k;              // multiplier used
    /// forward_reduce only: successive weighted sums, first equals reduced_value.
    std::vector<Element> reduction_chain;
};

KValue forward_k(const Element& d, const Element& base);
/// Throws DomainError("base not invertible ...") when gcd(d, B) != 1.
KValue reverse_k(const Element& d, const Element& base);

/// sum s_j k^j with k = forward_k, repeated while the value keeps shrinking
/// in digit count and still has more digits than d.
DivisibilityVerdict forward_reduce(const Element& s, const Element& d, const Element& base);

/// alpha_s(k) = sum s_j k^(m-j) with k = reverse_k; residue = B^m alpha mod d.
DivisibilityVerdict reverse_reduce(const Element& s, const Element& d, const Element& base);

/// Chunked alpha-sum: top chunk + k^(n_l - n_{l-1}) * next chunk + ... + k^(n_l) * bottom chunk.
/// Each chunk weight is reduced to its minimal representative mod d.
DivisibilityVerdict chunked_reduce(const Element& s, const Element& d, const Element& base, const ChunkSpec& cuts);

/// k_{a + mB} == k_a + m*l mod (a + mB), with l = (B k_a - 1) / a.
struct KProgression {
    Element a;
    Element base;
    Element k_a;
    Element l;
};

KProgression k_progression(const Element& a, const Element& base);
/// Reverse k-value of d = a + m*B predicted by the progression (minimal representative).
Element predict_k(const KProgression& prog, const Element& m);

/// k_d == B^t (aB)^-1 mod d for a unit a with d | B^t - a.
Element k_from_power_relation(const Element& d, const Element& base, unsigned long t, const Element& a);

struct FactorCheck {
    Element factor;          // d (coprime part) or p_i^alpha_i
    bool coprime_part = false;
    unsigned long alpha = 0;  // prime-power parts only
    unsigned long beta = 0;
    std::size_t digits_checked = 0;  // ceil(alpha / beta)
    Element checked_value;   // alpha-sum (coprime part) or the rightmost-digit number
    bool divisible = false;
};

struct GeneralVerdict {
    DivisibilityVerdict verdict;
    std::vector<FactorCheck> factors;
};

/// Splits n into a part coprime to B and prime powers of primes dividing B.
/// The coprime part goes through reverse_reduce; each p_i^alpha_i is checked on
/// the ceil(alpha_i / beta_i) rightmost digits, beta_i = nu_{p_i}(B).
GeneralVerdict general_divisibility(const Element& s, const Element& n, const Element& base);

/// Factor theorem as a reverse test: reverse_reduce(s, X - c, X) agrees with s(c) == 0.
struct FactorTheoremCheck {
    bool reverse_test_divisible = false;
    bool evaluates_to_zero = false;
    bool agree() const { return reverse_test_divisible == evaluates_to_zero; }
};
FactorTheoremCheck factor_theorem_check(const Element& s, std::uint64_t c);

/// Uniqueness witness: for a candidate k' not congruent to k_d,
/// a multiple of d with unit digit 1 on which the condition beta + k' s_0 == 0 fails.
/// Returns that multiple, or nothing if k' == k_d mod d.
std::optional<Element> uniqueness_witness(const Element& d, const Element& base, const Element& candidate);

std::string to_string(Direction d);

}  // namespace euclid
