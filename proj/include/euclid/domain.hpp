#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "euclid/budget.hpp"
#include "euclid/element.hpp"

namespace euclid {

struct DivisionResult {
    Element quotient;
    Element remainder;
};

/// x*a + y*b == g, with g unit-normalized.
struct BezoutCertificate {
    Element g;
    Element x;
    Element y;
};

/// Z: |e|; Z[i]: re^2 + im^2; F_p[X]: degree. Throws on zero.
Integer valuation(const Element& e);

/// Division with remainder under the fixed per-domain conventions:
///  - Z: 0 <= r < |d|
///  - F_p[X]: deg r < deg d (unique)
///  - Z[i]: each coordinate of s/d rounded to nearest, ties toward +infinity
DivisionResult divide(const Element& s, const Element& d);

bool is_unit(const Element& e);
/// A nonzero nonunit, i.e. an element outside E_0.
bool is_proper(const Element& e);
/// Z: positive; Z[i]: re > 0, im >= 0; F_p[X]: monic. Zero maps to zero.
Element unit_normalize(const Element& e);
/// Inverse of a unit.
Element unit_inverse(const Element& u);

bool divides(const Element& d, const Element& s);
/// Exact quotient s / d; throws if d does not divide s.
Element exact_quotient(const Element& s, const Element& d);

BezoutCertificate extended_gcd(const Element& a, const Element& b);
Element gcd(const Element& a, const Element& b);
bool coprime(const Element& a, const Element& b);

/// Canonical residue x with b*x == 1 mod d.
Element mod_inverse(const Element& b, const Element& d);

Element canonical_residue(const Element& e, const Element& d);

/// Least-valuation member of the class of e mod d (0 if d | e). Ties:
/// Z picks the positive one, Z[i] the largest real then imaginary part.
Element minimal_representative(const Element& e, const Element& d);

Element pow(const Element& b, unsigned long n);
/// b^n reduced to its canonical residue mod d.
Element pow_mod(const Element& b, const Integer& n, const Element& d);

/// Number of residue classes mod d: |d|, N(d) or p^deg d.
Integer residue_count(const Element& d);

/// All canonical residues mod d, in ascending Element order.
/// Throws DomainError when residue_count(d) exceeds the budget.
std::vector<Element> enumerate_residues(const Element& d, std::uint64_t budget);

/// Largest n with p^n | e (e nonzero, p proper).
unsigned long multiplicity(const Element& p, const Element& e);

/// Evaluate a polynomial at a field element of F_p.
std::uint64_t evaluate(const Element& poly, std::uint64_t c);

struct AxiomFailure {
    std::string axiom;
    std::string detail;
};

struct AxiomReport {
    DomainTag tag;
    std::size_t samples = 0;
    std::size_t checks = 0;
    bool strong_ea_checked = false;
    std::vector<AxiomFailure> failures;
    bool passed() const { return failures.empty(); }
};

/// Randomized (seeded) check of the Euclidean-domain axioms the library relies on.
AxiomReport check_axioms(const DomainTag& tag, std::size_t sample_budget, std::uint64_t seed = 42);

}  // namespace euclid
