#pragma once

#include <cstdint>

namespace euclid {

/// Iteration caps guarding computations whose termination is not guaranteed
/// in every domain, or that would otherwise run unbounded.
struct Budgets {
    std::uint64_t digit_cap = 1'000'000;       // digits produced by one expansion
    std::uint64_t order_steps = 10'000'000;    // brute-force multiplicative order
    std::uint64_t residue_count = 1'000'000;   // residues enumerated for chains
    std::uint64_t trial_division = 1'000'000;  // largest trial divisor in Z
};

/// Process-wide budgets. The digit cap can be overridden through the
/// EUCLID_DIGITS_BUDGET environment variable; it is read once.
const Budgets& budgets();

}  // namespace euclid
