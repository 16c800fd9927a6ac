#include "euclid/period.hpp"

#include "euclid/budget.hpp"
#include "euclid/domain.hpp"
#include "euclid/factor.hpp"

namespace euclid {

namespace {

// Residue rings at most this large get a brute-force cross-check in Z[i].
constexpr unsigned long kGaussianCrossCheckLimit = 1'000'000;

bool congruent_one(const Element& x, const Element& d) { return divides(d, x - Element::one(d.tag())); }

void require_order_preconditions(const Element& base, const Element& d) {
    if (!(base.tag() == d.tag())) throw DomainError("base and modulus from different domains");
    if (!is_proper(d)) throw DomainError("modulus must be neither zero nor a unit");
    if (!coprime(base, d)) throw DomainError("base " + base.to_string() + " is not coprime to " + d.to_string());
}

Integer order_in_prime_power(const Element& base, const Element& prime, unsigned long alpha) {
    const Element modulus = pow(prime, alpha);
    const Integer group = unit_group_order(prime, alpha);
    Integer e = group;
    for (const auto& [q, k] : factor_integer(group)) {
        for (unsigned long i = 0; i < k; ++i) {
            const Integer candidate = e / q;
            if (!congruent_one(pow_mod(base, candidate, modulus), modulus)) break;
            e = candidate;
        }
    }
    return e;
}

Integer ceil_div(unsigned long n, unsigned long f) { return Integer((n + f - 1) / f); }

}  // namespace

Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer unit_group_order(const Element& prime, unsigned long alpha) {
    if (alpha == 0) throw DomainError("unit group order needs alpha >= 1");
    const Integer n = residue_count(prime);
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), n.get_mpz_t(), alpha - 1);
    return power * (n - 1);
}

Integer order_by_iteration(const Element& base, const Element& d, std::uint64_t step_budget) {
    require_order_preconditions(base, d);
    const Element b = canonical_residue(base, d);
    Element x = b;
    Integer e = 1;
    std::uint64_t steps = 1;
    while (!congruent_one(x, d)) {
        if (++steps > step_budget) throw DomainError("order computation exceeded " + std::to_string(step_budget) + " steps");
        x = canonical_residue(x * b, d);
        ++e;
    }
    return e;
}

Integer multiplicative_order(const Element& base, const Element& d) {
    require_order_preconditions(base, d);
    std::vector<PrimePower> factors;
    try {
        factors = factor(d);
    } catch (const DomainError&) {
        return order_by_iteration(base, d, budgets().order_steps);
    }
    Integer result = 1;
    for (const auto& [prime, alpha] : factors) {
        Integer part;
        try {
            part = order_in_prime_power(base, prime, alpha);
        } catch (const DomainError&) {
            part = order_by_iteration(base, pow(prime, alpha), budgets().order_steps);
        }
        result = lcm(result, part);
    }
    return result;
}

PrimeIntegerBelow prime_integer_below(const Element& p) {
    switch (p.kind()) {
        case DomainKind::PolynomialsOverPrimeField:
            throw DomainError("no prime integer exists below a prime of F_p[X]");
        case DomainKind::RationalIntegers:
            if (!is_prime(p)) throw DomainError(p.to_string() + " is not prime");
            return {abs(p.as_integer()), 1};
        case DomainKind::GaussianIntegers: {
            if (!is_prime(p)) throw DomainError(p.to_string() + " is not a Gaussian prime");
            const Integer n = valuation(p);
            if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) return {n, n == 2 ? 2ul : 1ul};
            Integer q;
            mpz_sqrt(q.get_mpz_t(), n.get_mpz_t());
            return {q, 1};
        }
    }
    throw DomainError("unknown domain");
}

LteReport lte_check(const Element& x, const Element& y, unsigned long m, const Element& p) {
    if (p.kind() == DomainKind::PolynomialsOverPrimeField) throw DomainError("lte_check requires Z or Z[i]");
    if (!(x.tag() == y.tag()) || !(x.tag() == p.tag())) throw DomainError("lte_check: mixed domains");
    if (x == y) throw DomainError("lte_check requires x != y");
    if (m == 0) throw DomainError("lte_check requires m >= 1");
    const auto below = prime_integer_below(p);
    if (divides(p, y)) throw DomainError("lte_check requires p not dividing y");
    const Element diff = x - y;
    if (!divides(p, diff)) throw DomainError("lte_check requires p | x - y");

    LteReport r;
    r.prime_integer = below.prime_integer;
    r.f = below.f;
    r.a_m = exact_quotient(pow(x, m) - pow(y, m), diff);
    r.nu_x_minus_y = multiplicity(p, diff);
    r.p_divides_a = divides(p, r.a_m);
    r.p_prime_divides_m = Integer(m) % r.prime_integer == 0;
    r.divisibility_clause_holds = r.p_divides_a == r.p_prime_divides_m;

    const Integer threshold = Integer(r.f) / (r.prime_integer - 1);
    r.valuation_clause_applies = Integer(r.nu_x_minus_y) > threshold;
    if (r.valuation_clause_applies) {
        unsigned long nu_m = 0;
        for (Integer v(m); v % r.prime_integer == 0; v /= r.prime_integer) ++nu_m;
        r.expected_nu = r.f * nu_m;
        if (r.a_m.is_zero()) {
            r.valuation_clause_holds = false;
        } else {
            r.nu_a = multiplicity(p, r.a_m);
            r.valuation_clause_holds = r.nu_a == r.expected_nu;
        }
    }
    return r;
}

PrimePowerPeriod prime_power_period(const Element& p, unsigned long alpha_max, const Element& base) {
    if (p.kind() == DomainKind::PolynomialsOverPrimeField)
        throw DomainError("prime power period lifting requires Z or Z[i]");
    if (alpha_max == 0) throw DomainError("alpha_max must be positive");
    const auto below = prime_integer_below(p);
    if (!coprime(p, base)) throw DomainError("prime " + p.to_string() + " divides the base");

    PrimePowerPeriod out;
    out.prime = unit_normalize(p);
    out.prime_integer = below.prime_integer;
    out.f = below.f;
    const Integer& pp = out.prime_integer;

    // g must exceed f / (p' - 1)
    auto g_admissible = [&](unsigned long g) { return Integer(g) * (pp - 1) > Integer(out.f); };

    std::vector<Integer> q;
    const unsigned long cap = alpha_max + 40;
    for (unsigned long n = 1; n <= cap; ++n) {
        Integer qn = multiplicative_order(base, pow(out.prime, n));
        if (p.kind() == DomainKind::GaussianIntegers && residue_count(pow(out.prime, n)) <= kGaussianCrossCheckLimit) {
            const Integer brute = order_by_iteration(base, pow(out.prime, n), budgets().order_steps);
            if (brute != qn)
                throw DomainError("order of " + base.to_string() + " mod " + out.prime.to_string() + "^" + std::to_string(n) +
                                  ": group-order route gives " + to_string(qn) + ", brute force gives " + to_string(brute));
        }
        if (!q.empty()) {
            const Integer& prev = q.back();
            if (!(qn == prev || qn == pp * prev))
                throw DomainError("q_" + std::to_string(n) + " = " + to_string(qn) + " is neither q_" + std::to_string(n - 1) +
                                  " nor p' times it");
        }
        q.push_back(qn);
        if (out.g == 0 && n >= 2 && g_admissible(n - 1) && q[n - 1] == pp * q[n - 2]) out.g = n - 1;
        if (n >= alpha_max && out.g != 0) break;
    }
    if (out.g == 0) throw DomainError("no lifting index g found within " + std::to_string(cap) + " powers");

    // q_{g+n} = p'^ceil(n/f) q_g on every computed index
    for (unsigned long idx = out.g; idx <= q.size(); ++idx) {
        const unsigned long n = idx - out.g;
        Integer factor;
        mpz_pow_ui(factor.get_mpz_t(), pp.get_mpz_t(), ceil_div(n, out.f).get_ui());
        const Integer predicted = factor * q[out.g - 1];
        if (predicted != q[idx - 1])
            throw DomainError("lifting law predicts q_" + std::to_string(idx) + " = " + to_string(predicted) +
                              " but direct computation gives " + to_string(q[idx - 1]));
    }
    q.resize(alpha_max);
    out.q = std::move(q);
    return out;
}

PeriodResult period_of_d(const Element& d, const Element& base) {
    require_order_preconditions(base, d);
    PeriodResult result{d, base, Integer(1), {}};
    for (const auto& [prime, alpha] : factor(d)) {
        PrimeFactorPeriod entry{prime, alpha, 0, 0, {}};
        if (d.kind() == DomainKind::PolynomialsOverPrimeField) {
            entry.period = multiplicative_order(base, pow(prime, alpha));
        } else {
            auto lifted = prime_power_period(prime, alpha, base);
            entry.period = lifted.q.back();
            entry.g = lifted.g;
            entry.q_list = std::move(lifted.q);
        }
        result.period = lcm(result.period, entry.period);
        result.per_prime.push_back(std::move(entry));
    }
    return result;
}

}  // namespace euclid
