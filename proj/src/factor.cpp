#include "euclid/factor.hpp"

#include <algorithm>

#include "euclid/budget.hpp"
#include "euclid/domain.hpp"

namespace euclid {

std::vector<IntegerPrimePower> factor_integer(const Integer& n) {
    if (n == 0) throw DomainError("cannot factor zero");
    Integer m = abs(n);
    std::vector<IntegerPrimePower> out;
    const unsigned long limit = budgets().trial_division;
    auto strip = [&](unsigned long q) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), q) == 0) return;
        IntegerPrimePower pp{Integer(q), 0};
        while (mpz_divisible_ui_p(m.get_mpz_t(), q) != 0) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), q);
            ++pp.exponent;
        }
        out.push_back(pp);
    };
    strip(2);
    unsigned long q = 3;
    for (; q <= limit && Integer(q) * q <= m; q += 2) strip(q);
    if (m > 1) {
        // No factor up to q exists, so m < q^2 makes it prime.
        const bool proven = m < Integer(q) * q;
        if (proven || mpz_probab_prime_p(m.get_mpz_t(), 40) != 0) {
            out.push_back({m, 1});
            return out;
        }
        // a pure power of a large prime, e.g. p^2 for a census prime p
        for (unsigned long k = 2; Integer(q) <= m; ++k) {
            Integer root;
            if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), k) != 0 && mpz_probab_prime_p(root.get_mpz_t(), 40) != 0) {
                out.push_back({root, k});
                return out;
            }
            if (root < q) break;
        }
        throw DomainError("factor too large: composite cofactor " + to_string(m) + " beyond trial division budget");
    }
    return out;
}

namespace {

std::vector<PrimePower> factor_gaussian(const Element& e) {
    const auto& g = e.as_gaussian();
    const Integer n = g.re * g.re + g.im * g.im;
    std::vector<PrimePower> out;
    Element rest = e;
    auto take = [&](const Element& pi) {
        const Element normalized = unit_normalize(pi);
        const auto k = multiplicity(normalized, rest);
        if (k == 0) return;
        for (unsigned long i = 0; i < k; ++i) rest = exact_quotient(rest, normalized);
        out.push_back({normalized, k});
    };
    for (const auto& [q, k] : factor_integer(n)) {
        if (q == 2) {
            take(Element::gaussian(1, 1));
        } else if (q % 4 == 3) {
            take(Element::gaussian(q, 0));
        } else {
            // x^2 = -1 mod q from a quadratic non-residue
            Integer x;
            const Integer exp = (q - 1) / 4;
            for (unsigned long a = 2;; ++a) {
                Integer base(a);
                mpz_powm(x.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), q.get_mpz_t());
                if ((x * x + 1) % q == 0) break;
            }
            const Element pi = gcd(Element::gaussian(q, 0), Element::gaussian(x, 1));
            take(pi);
            take(pi.conj());
        }
    }
    if (!is_unit(rest)) throw DomainError("internal: incomplete Gaussian factorization of " + e.to_string());
    std::sort(out.begin(), out.end(), [](const PrimePower& a, const PrimePower& b) {
        const auto na = valuation(a.prime), nb = valuation(b.prime);
        if (na != nb) return na < nb;
        return a.prime < b.prime;
    });
    return out;
}

std::vector<PrimePower> factor_polynomial(const Element& e) {
    const auto p = e.tag().characteristic;
    std::vector<PrimePower> out;
    Element rest = unit_normalize(e);
    std::uint64_t tried = 0;
    const std::uint64_t limit = budgets().trial_division;
    for (long deg = 1; 2 * deg <= rest.degree(); ++deg) {
        // enumerate monic polynomials of this degree
        std::vector<std::uint64_t> c(static_cast<std::size_t>(deg) + 1, 0);
        c.back() = 1;
        for (;;) {
            if (++tried > limit) throw DomainError("factor too large: polynomial trial division budget exhausted");
            const Element cand = Element::polynomial_residues(p, c);
            unsigned long k = 0;
            while (rest.degree() >= deg && divides(cand, rest)) {
                rest = exact_quotient(rest, cand);
                ++k;
            }
            if (k > 0) out.push_back({cand, k});
            std::size_t i = 0;
            while (i < static_cast<std::size_t>(deg)) {
                if (++c[i] < p) break;
                c[i] = 0;
                ++i;
            }
            if (i == static_cast<std::size_t>(deg)) break;
        }
    }
    if (rest.degree() > 0) {
        // a remaining irreducible factor may repeat an earlier one only if it was found above
        auto it = std::find_if(out.begin(), out.end(), [&](const PrimePower& pp) { return pp.prime == rest; });
        if (it != out.end()) ++it->exponent;
        else out.push_back({rest, 1});
    }
    std::sort(out.begin(), out.end(), [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    return out;
}

}  // namespace

std::vector<PrimePower> factor(const Element& e) {
    if (e.is_zero()) throw DomainError("cannot factor zero");
    switch (e.kind()) {
        case DomainKind::RationalIntegers: {
            std::vector<PrimePower> out;
            if (abs(e.as_integer()) == 1) return out;
            for (const auto& [q, k] : factor_integer(e.as_integer())) out.push_back({Element::integer(q), k});
            return out;
        }
        case DomainKind::GaussianIntegers: return factor_gaussian(e);
        case DomainKind::PolynomialsOverPrimeField: return factor_polynomial(e);
    }
    return {};
}

bool is_prime(const Element& e) {
    if (!is_proper(e)) return false;
    switch (e.kind()) {
        case DomainKind::RationalIntegers: {
            const Integer n = abs(e.as_integer());
            return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
        }
        default: {
            const auto f = factor(e);
            return f.size() == 1 && f[0].exponent == 1;
        }
    }
}

}  // namespace euclid
