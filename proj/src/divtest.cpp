#include "euclid/divtest.hpp"

#include "euclid/digits.hpp"
#include "euclid/domain.hpp"
#include "euclid/factor.hpp"

namespace euclid {

namespace {

void require_divisor(const Element& d, const Element& base) {
    if (!(d.tag() == base.tag())) throw DomainError("divisor and base from different domains");
    if (!is_proper(d)) throw DomainError("divisor must be neither zero nor a unit: " + d.to_string());
    if (!is_proper(base)) throw DomainError("invalid base: " + base.to_string());
}

std::size_t digit_count(const Element& v, const Element& base) { return to_digits(v, base).digits.size(); }

// sum digits[i] * k^(len-1-i): Horner over the digits as listed.
Element horner(const std::vector<Element>& digits, const Element& k) {
    Element acc = Element::zero(k.tag());
    for (const auto& s : digits) acc = acc * k + s;
    return acc;
}

}  // namespace

std::string to_string(Direction d) { return d == Direction::Forward ? "forward" : "reverse"; }

KValue forward_k(const Element& d, const Element& base) {
    require_divisor(d, base);
    return {d, base, Direction::Forward, minimal_representative(base, d)};
}

KValue reverse_k(const Element& d, const Element& base) {
    require_divisor(d, base);
    if (!coprime(d, base)) throw DomainError("base not invertible modulo " + d.to_string());
    return {d, base, Direction::Reverse, minimal_representative(mod_inverse(base, d), d)};
}

DivisibilityVerdict forward_reduce(const Element& s, const Element& d, const Element& base) {
    const KValue k = forward_k(d, base);
    const std::size_t d_len = digit_count(d, base);
    DivisibilityVerdict v;
    v.k = k.value;
    Element current = s;
    std::size_t current_len = digit_count(current, base);
    for (;;) {
        // digits most significant first, so Horner yields sum s_j k^j
        const Element next = horner(to_digits(current, base).digits, k.value);
        v.reduction_chain.push_back(next);
        const std::size_t next_len = digit_count(next, base);
        if (next_len <= d_len || next_len >= current_len) break;
        current = next;
        current_len = next_len;
    }
    v.reduced_value = v.reduction_chain.front();
    v.residue = canonical_residue(s, d);
    if (!(canonical_residue(v.reduction_chain.back(), d) == v.residue))
        throw DomainError("internal: forward reduction lost congruence");
    v.divisible = v.residue.is_zero();
    return v;
}

DivisibilityVerdict reverse_reduce(const Element& s, const Element& d, const Element& base) {
    const KValue k = reverse_k(d, base);
    auto digits = to_digits(s, base).digits;
    const auto m = digits.size() - 1;
    // alpha = sum s_j k^(m-j): Horner starting from the unit digit
    std::vector<Element> low_first(digits.rbegin(), digits.rend());
    DivisibilityVerdict v;
    v.k = k.value;
    v.reduced_value = horner(low_first, k.value);
    v.residue = canonical_residue(pow(base, m) * v.reduced_value, d);
    if (!(v.residue == canonical_residue(s, d))) throw DomainError("internal: reverse reduction lost congruence");
    v.divisible = v.residue.is_zero();
    return v;
}

DivisibilityVerdict chunked_reduce(const Element& s, const Element& d, const Element& base, const ChunkSpec& spec) {
    const KValue k = reverse_k(d, base);
    const auto digits = to_digits(s, base).digits;
    const std::size_t m = digits.size() - 1;
    const auto& cuts = spec.cuts;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        if (cuts[i] == 0 || cuts[i] >= m || (i > 0 && cuts[i] <= cuts[i - 1]))
            throw DomainError("invalid cuts: need 0 < n_1 < ... < n_l < " + std::to_string(m));
    }
    // digit index j (from the right) lives at digits[m - j]
    auto chunk = [&](std::size_t hi, std::size_t lo) {
        std::vector<Element> part(digits.begin() + static_cast<long>(m - hi), digits.begin() + static_cast<long>(m - lo) + 1);
        return from_digits(part, base);
    };
    const std::size_t top_cut = cuts.empty() ? 0 : cuts.back();
    Element alpha = chunk(m, top_cut);
    for (std::size_t i = cuts.size(); i-- > 0;) {
        const std::size_t lo = i == 0 ? 0 : cuts[i - 1];
        const Element weight = minimal_representative(pow(k.value, top_cut - lo), d);
        alpha += weight * chunk(cuts[i] - 1, lo);
    }
    DivisibilityVerdict v;
    v.k = k.value;
    v.reduced_value = alpha;
    v.residue = canonical_residue(pow(base, top_cut) * alpha, d);
    if (!(v.residue == canonical_residue(s, d))) throw DomainError("internal: chunked reduction lost congruence");
    v.divisible = v.residue.is_zero();
    return v;
}

KProgression k_progression(const Element& a, const Element& base) {
    const KValue k = reverse_k(a, base);
    const Element l = exact_quotient(base * k.value - Element::one(a.tag()), a);
    return {a, base, k.value, l};
}

Element predict_k(const KProgression& prog, const Element& m) {
    const Element d = prog.a + m * prog.base;
    if (!is_proper(d)) throw DomainError("a + mB must be neither zero nor a unit");
    return minimal_representative(prog.k_a + m * prog.l, d);
}

Element k_from_power_relation(const Element& d, const Element& base, unsigned long t, const Element& a) {
    require_divisor(d, base);
    if (!is_unit(a)) throw DomainError("a must be a unit");
    if (!coprime(d, base)) throw DomainError("base not invertible modulo " + d.to_string());
    const Element bt = pow(base, t);
    if (!divides(d, bt - a)) throw DomainError(d.to_string() + " does not divide B^t - a");
    return minimal_representative(bt * mod_inverse(a * base, d), d);
}

GeneralVerdict general_divisibility(const Element& s, const Element& n, const Element& base) {
    require_divisor(n, base);
    GeneralVerdict out;
    const auto digits = to_digits(s, base).digits;
    Element coprime_part = n;
    bool all = true;
    for (const auto& [p, beta] : factor(base)) {
        const auto alpha = multiplicity(p, n);
        if (alpha == 0) continue;
        const Element pa = pow(p, alpha);
        coprime_part = exact_quotient(coprime_part, pa);
        FactorCheck fc;
        fc.factor = pa;
        fc.alpha = alpha;
        fc.beta = beta;
        fc.digits_checked = (alpha + beta - 1) / beta;
        const std::size_t take = std::min(fc.digits_checked, digits.size());
        std::vector<Element> tail(digits.end() - static_cast<long>(take), digits.end());
        fc.checked_value = from_digits(tail, base);
        fc.divisible = divides(pa, fc.checked_value);
        all = all && fc.divisible;
        out.factors.push_back(std::move(fc));
    }
    out.verdict.k = Element::zero(n.tag());
    out.verdict.reduced_value = s;
    if (is_proper(coprime_part)) {
        const auto rv = reverse_reduce(s, coprime_part, base);
        FactorCheck fc;
        fc.factor = coprime_part;
        fc.coprime_part = true;
        fc.checked_value = rv.reduced_value;
        fc.divisible = rv.divisible;
        all = all && rv.divisible;
        out.verdict.k = rv.k;
        out.verdict.reduced_value = rv.reduced_value;
        out.factors.insert(out.factors.begin(), std::move(fc));
    }
    out.verdict.residue = canonical_residue(s, n);
    out.verdict.divisible = all;
    if (all != out.verdict.residue.is_zero()) throw DomainError("internal: factor-wise verdict disagrees with residue");
    return out;
}

FactorTheoremCheck factor_theorem_check(const Element& s, std::uint64_t c) {
    if (s.kind() != DomainKind::PolynomialsOverPrimeField) throw DomainError("factor theorem check needs a polynomial");
    const auto p = s.tag().characteristic;
    if (c % p == 0) throw DomainError("c must be a nonzero field element");
    const Element x = Element::monomial(p, 1, 1);
    const Element d = x - Element::polynomial_residues(p, {c % p});
    FactorTheoremCheck out;
    out.reverse_test_divisible = reverse_reduce(s, d, x).divisible;
    out.evaluates_to_zero = evaluate(s, c) == 0;
    return out;
}

std::optional<Element> uniqueness_witness(const Element& d, const Element& base, const Element& candidate) {
    const KValue k = reverse_k(d, base);
    if (divides(d, candidate - k.value)) return std::nullopt;
    // s = d * beta_0 with s == 1 mod B, so s = B*beta + 1
    const Element beta0 = mod_inverse(d, base);
    const Element s = d * beta0;
    const Element one = Element::one(d.tag());
    const Element beta = exact_quotient(s - one, base);
    if (divides(d, beta + candidate)) throw DomainError("internal: candidate passed the uniqueness witness");
    return s;
}

}  // namespace euclid
