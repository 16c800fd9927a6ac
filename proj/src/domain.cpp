#include "euclid/domain.hpp"

#include <algorithm>
#include <random>

namespace euclid {

namespace {

using Coeffs = std::vector<std::uint64_t>;

std::uint64_t field_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t field_inverse(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw DomainError("zero has no inverse in F_" + std::to_string(p));
    return field_pow(a, p - 2, p);
}

Integer norm(const Gaussian& g) { return g.re * g.re + g.im * g.im; }

void require_same(const Element& a, const Element& b) {
    if (!(a.tag() == b.tag()))
        throw DomainError("elements from different domains: " + a.tag().name() + " vs " + b.tag().name());
}

DivisionResult divide_integers(const Integer& s, const Integer& d) {
    Integer ad = abs(d);
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), s.get_mpz_t(), ad.get_mpz_t());
    Integer q;
    Integer diff = s - r;
    mpz_divexact(q.get_mpz_t(), diff.get_mpz_t(), d.get_mpz_t());
    return {Element::integer(q), Element::integer(r)};
}

// floor((2*num + den) / (2*den)) for den > 0: nearest integer, ties up.
Integer round_half_up(const Integer& num, const Integer& den) {
    Integer n2 = 2 * num + den;
    Integer d2 = 2 * den;
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), n2.get_mpz_t(), d2.get_mpz_t());
    return q;
}

DivisionResult divide_gaussian(const Element& s, const Element& d) {
    const auto& sg = s.as_gaussian();
    const auto& dg = d.as_gaussian();
    const Integer n = norm(dg);
    // s * conj(d)
    const Integer num_re = sg.re * dg.re + sg.im * dg.im;
    const Integer num_im = sg.im * dg.re - sg.re * dg.im;
    Element q = Element::gaussian(round_half_up(num_re, n), round_half_up(num_im, n));
    Element r = s - d * q;
    return {q, r};
}

DivisionResult divide_polynomials(const Element& s, const Element& d) {
    const auto p = s.tag().characteristic;
    Coeffs rem = s.coefficients();
    const Coeffs& dc = d.coefficients();
    const std::size_t dn = dc.size();
    if (rem.size() < dn) return {Element::zero(s.tag()), s};
    const std::uint64_t lead_inv = field_inverse(dc.back(), p);
    Coeffs quot(rem.size() - dn + 1, 0);
    for (std::size_t k = rem.size(); k-- >= dn;) {
        const std::uint64_t c = rem[k] * lead_inv % p;
        quot[k - dn + 1] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < dn; ++j) {
            const std::size_t idx = k - dn + 1 + j;
            rem[idx] = (rem[idx] + p - c * dc[j] % p) % p;
        }
        if (k == 0) break;
    }
    rem.resize(dn - 1);
    return {Element::polynomial_residues(p, std::move(quot)), Element::polynomial_residues(p, std::move(rem))};
}

}  // namespace

Integer valuation(const Element& e) {
    if (e.is_zero()) throw DomainError("valuation of zero undefined");
    switch (e.kind()) {
        case DomainKind::RationalIntegers: return abs(e.as_integer());
        case DomainKind::GaussianIntegers: return norm(e.as_gaussian());
        case DomainKind::PolynomialsOverPrimeField: return Integer(e.degree());
    }
    return 0;
}

DivisionResult divide(const Element& s, const Element& d) {
    require_same(s, d);
    if (d.is_zero()) throw DomainError("division by zero");
    switch (s.kind()) {
        case DomainKind::RationalIntegers: return divide_integers(s.as_integer(), d.as_integer());
        case DomainKind::GaussianIntegers: return divide_gaussian(s, d);
        case DomainKind::PolynomialsOverPrimeField: return divide_polynomials(s, d);
    }
    throw DomainError("unknown domain");
}

bool is_unit(const Element& e) {
    if (e.is_zero()) return false;
    switch (e.kind()) {
        case DomainKind::RationalIntegers: return abs(e.as_integer()) == 1;
        case DomainKind::GaussianIntegers: return norm(e.as_gaussian()) == 1;
        case DomainKind::PolynomialsOverPrimeField: return e.degree() == 0;
    }
    return false;
}

bool is_proper(const Element& e) { return !e.is_zero() && !is_unit(e); }

Element unit_inverse(const Element& u) {
    if (!is_unit(u)) throw DomainError("not a unit: " + u.to_string());
    switch (u.kind()) {
        case DomainKind::RationalIntegers: return u;
        case DomainKind::GaussianIntegers: return u.conj();
        case DomainKind::PolynomialsOverPrimeField: {
            const auto p = u.tag().characteristic;
            return Element::polynomial_residues(p, {field_inverse(u.coefficients()[0], p)});
        }
    }
    return u;
}

Element unit_normalize(const Element& e) {
    if (e.is_zero()) return e;
    switch (e.kind()) {
        case DomainKind::RationalIntegers: return Element::integer(abs(e.as_integer()));
        case DomainKind::GaussianIntegers: {
            const Element i = Element::gaussian(0, 1);
            Element v = e;
            for (int k = 0; k < 4; ++k) {
                const auto& g = v.as_gaussian();
                if (g.re > 0 && g.im >= 0) return v;
                v *= i;
            }
            return v;
        }
        case DomainKind::PolynomialsOverPrimeField: {
            const auto p = e.tag().characteristic;
            const auto inv = field_inverse(e.coefficients().back(), p);
            return e * Element::polynomial_residues(p, {inv});
        }
    }
    return e;
}

bool divides(const Element& d, const Element& s) {
    if (d.is_zero()) return s.is_zero();
    return divide(s, d).remainder.is_zero();
}

Element exact_quotient(const Element& s, const Element& d) {
    auto res = divide(s, d);
    if (!res.remainder.is_zero()) throw DomainError(d.to_string() + " does not divide " + s.to_string());
    return res.quotient;
}

BezoutCertificate extended_gcd(const Element& a, const Element& b) {
    require_same(a, b);
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zeros undefined");
    const auto& tag = a.tag();
    Element r0 = a, r1 = b;
    Element x0 = Element::one(tag), x1 = Element::zero(tag);
    Element y0 = Element::zero(tag), y1 = Element::one(tag);
    while (!r1.is_zero()) {
        auto [q, r] = divide(r0, r1);
        r0 = std::exchange(r1, r);
        x0 = std::exchange(x1, x0 - q * x1);
        y0 = std::exchange(y1, y0 - q * y1);
    }
    // Scale by the unit that normalizes r0.
    const Element g = unit_normalize(r0);
    const Element u = exact_quotient(g, r0);
    return {g, x0 * u, y0 * u};
}

Element gcd(const Element& a, const Element& b) { return extended_gcd(a, b).g; }

bool coprime(const Element& a, const Element& b) {
    if (a.is_zero() && b.is_zero()) return false;
    return is_unit(gcd(a, b));
}

Element canonical_residue(const Element& e, const Element& d) { return divide(e, d).remainder; }

Element mod_inverse(const Element& b, const Element& d) {
    require_same(b, d);
    if (!is_proper(d)) throw DomainError("modulus must be neither zero nor a unit");
    auto cert = extended_gcd(b, d);
    if (!is_unit(cert.g)) throw DomainError("not invertible: gcd(" + b.to_string() + ", " + d.to_string() + ") = " + cert.g.to_string());
    return canonical_residue(cert.x * unit_inverse(cert.g), d);
}

Element minimal_representative(const Element& e, const Element& d) {
    Element r = canonical_residue(e, d);
    if (r.is_zero()) return r;
    switch (r.kind()) {
        case DomainKind::RationalIntegers: {
            const Integer ad = abs(d.as_integer());
            if (2 * r.as_integer() > ad) return Element::integer(r.as_integer() - ad);
            return r;
        }
        case DomainKind::GaussianIntegers: {
            Element best = r;
            Integer best_norm = valuation(r);
            for (int a = -1; a <= 1; ++a) {
                for (int b = -1; b <= 1; ++b) {
                    const Element cand = r + d * Element::gaussian(a, b);
                    if (cand.is_zero()) continue;
                    const Integer n = valuation(cand);
                    const auto& cg = cand.as_gaussian();
                    const auto& bg = best.as_gaussian();
                    if (n < best_norm || (n == best_norm && (cg.re > bg.re || (cg.re == bg.re && cg.im > bg.im)))) {
                        best = cand;
                        best_norm = n;
                    }
                }
            }
            return best;
        }
        case DomainKind::PolynomialsOverPrimeField: return r;
    }
    return r;
}

Element pow(const Element& b, unsigned long n) {
    Element result = Element::one(b.tag());
    Element base = b;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n > 0) base *= base;
    }
    return result;
}

Element pow_mod(const Element& b, const Integer& n, const Element& d) {
    if (n < 0) return pow_mod(mod_inverse(b, d), -n, d);
    Element result = canonical_residue(Element::one(b.tag()), d);
    Element base = canonical_residue(b, d);
    const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = canonical_residue(result * result, d);
        if (mpz_tstbit(n.get_mpz_t(), i)) result = canonical_residue(result * base, d);
    }
    return result;
}

Integer residue_count(const Element& d) {
    if (d.is_zero()) throw DomainError("residue count of zero is infinite");
    switch (d.kind()) {
        case DomainKind::RationalIntegers: return abs(d.as_integer());
        case DomainKind::GaussianIntegers: return norm(d.as_gaussian());
        case DomainKind::PolynomialsOverPrimeField: {
            Integer r;
            mpz_ui_pow_ui(r.get_mpz_t(), d.tag().characteristic, static_cast<unsigned long>(d.degree()));
            return r;
        }
    }
    return 0;
}

std::vector<Element> enumerate_residues(const Element& d, std::uint64_t budget) {
    const Integer count = residue_count(d);
    if (count > Integer(static_cast<unsigned long>(budget)))
        throw DomainError("residue count " + to_string(count) + " exceeds budget " + std::to_string(budget));
    const auto n = count.get_ui();
    std::vector<Element> out;
    out.reserve(n);
    switch (d.kind()) {
        case DomainKind::RationalIntegers:
            for (unsigned long t = 0; t < n; ++t) out.push_back(Element::integer(Integer(t)));
            break;
        case DomainKind::PolynomialsOverPrimeField: {
            const auto p = d.tag().characteristic;
            const auto deg = static_cast<std::size_t>(d.degree());
            Coeffs c(deg, 0);
            for (unsigned long t = 0; t < n; ++t) {
                out.push_back(Element::polynomial_residues(p, c));
                for (std::size_t k = 0; k < deg; ++k) {
                    if (++c[k] < p) break;
                    c[k] = 0;
                }
            }
            break;
        }
        case DomainKind::GaussianIntegers: {
            // Canonical remainders satisfy N(r) <= N(d)/2.
            Integer side;
            mpz_sqrt(side.get_mpz_t(), count.get_mpz_t());
            const long s = side.get_si() + 1;
            for (long a = -s; a <= s; ++a)
                for (long b = -s; b <= s; ++b) {
                    Element x = Element::gaussian(a, b);
                    if (canonical_residue(x, d) == x) out.push_back(std::move(x));
                }
            if (out.size() != n) throw DomainError("internal: Gaussian residue enumeration incomplete");
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

unsigned long multiplicity(const Element& p, const Element& e) {
    if (e.is_zero()) throw DomainError("multiplicity in zero is unbounded");
    if (!is_proper(p)) throw DomainError("multiplicity requires a nonzero nonunit");
    unsigned long n = 0;
    Element v = e;
    for (;;) {
        auto [q, r] = divide(v, p);
        if (!r.is_zero()) return n;
        v = std::move(q);
        ++n;
    }
}

std::uint64_t evaluate(const Element& poly, std::uint64_t c) {
    const auto p = poly.tag().characteristic;
    const auto& coeffs = poly.coefficients();
    std::uint64_t acc = 0;
    c %= p;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = (acc * c + coeffs[k]) % p;
    return acc;
}

// --- axiom checks -----------------------------------------------------------

namespace {

class Sampler {
public:
    Sampler(DomainTag tag, std::uint64_t seed) : tag_(tag), rng_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(rng_() % span);
    }

    Element sample() {
        switch (tag_.kind) {
            case DomainKind::RationalIntegers: {
                if (rng_() % 8 == 0) {
                    // occasional multi-limb value
                    Integer v(static_cast<unsigned long>(rng_()));
                    v <<= 64;
                    v += static_cast<unsigned long>(rng_());
                    return Element::integer(rng_() % 2 ? v : Integer(-v));
                }
                return Element::integer(uniform(-1'000'000, 1'000'000));
            }
            case DomainKind::GaussianIntegers:
                return Element::gaussian(uniform(-1000, 1000), uniform(-1000, 1000));
            case DomainKind::PolynomialsOverPrimeField: {
                const auto p = tag_.characteristic;
                std::vector<std::uint64_t> c(static_cast<std::size_t>(uniform(0, 8)));
                for (auto& v : c) v = rng_() % p;
                return Element::polynomial_residues(p, c);
            }
        }
        return Element::zero(tag_);
    }

    Element sample_nonzero() {
        for (;;) {
            Element e = sample();
            if (!e.is_zero()) return e;
        }
    }

    Element sample_unit() {
        switch (tag_.kind) {
            case DomainKind::RationalIntegers: return Element::integer(rng_() % 2 ? 1 : -1);
            case DomainKind::GaussianIntegers: {
                static const int re[] = {1, 0, -1, 0};
                static const int im[] = {0, 1, 0, -1};
                const auto k = rng_() % 4;
                return Element::gaussian(re[k], im[k]);
            }
            case DomainKind::PolynomialsOverPrimeField:
                return Element::polynomial_residues(tag_.characteristic, {1 + rng_() % (tag_.characteristic - 1)});
        }
        return Element::one(tag_);
    }

private:
    DomainTag tag_;
    std::mt19937_64 rng_;
};

}  // namespace

AxiomReport check_axioms(const DomainTag& tag, std::size_t sample_budget, std::uint64_t seed) {
    AxiomReport report;
    report.tag = tag;
    report.samples = sample_budget;
    // Strong EA is only established for Z and F[X].
    report.strong_ea_checked = tag.kind != DomainKind::GaussianIntegers;
    Sampler sampler(tag, seed);
    const Integer nu_one = valuation(Element::one(tag));

    auto fail = [&](std::string axiom, const std::string& detail) {
        report.failures.push_back({std::move(axiom), detail});
    };

    for (std::size_t i = 0; i < sample_budget; ++i) {
        const Element a = sampler.sample_nonzero();
        const Element b = sampler.sample_nonzero();

        ++report.checks;
        if (valuation(a * b) < valuation(a))
            fail("nu(ab) >= nu(a)", a.to_string() + " * " + b.to_string());

        // unit <=> nu(x) == nu(1), on a random element and on a random unit
        for (const Element& x : {a, sampler.sample_unit()}) {
            ++report.checks;
            if (is_unit(x) != (valuation(x) == nu_one))
                fail("unit iff nu(x) = nu(1)", x.to_string());
        }

        const Element s = sampler.sample();
        const Element d = b;
        const auto [q, r] = divide(s, d);
        ++report.checks;
        if (!(d * q + r == s)) fail("s = dq + r", s.to_string() + " / " + d.to_string());
        ++report.checks;
        if (!r.is_zero() && !(valuation(r) < valuation(d)))
            fail("nu(r) < nu(d)", s.to_string() + " / " + d.to_string());

        // Strong EA: nonzero quotients shrink, for dividends and divisors outside E_0.
        if (report.strong_ea_checked && is_proper(d) && is_proper(s) && !q.is_zero()) {
            ++report.checks;
            if (!(valuation(q) < valuation(s)))
                fail("strong EA nu(q) < nu(s)", s.to_string() + " / " + d.to_string());
        }
    }
    return report;
}

}  // namespace euclid
