#include "euclid/recurring.hpp"

#include <algorithm>
#include <map>

#include "euclid/budget.hpp"
#include "euclid/domain.hpp"
#include "euclid/period.hpp"

namespace euclid {

namespace {

void require_coprime_divisor(const Element& d, const Element& base) {
    if (!(d.tag() == base.tag())) throw DomainError("divisor and base from different domains");
    if (!is_proper(d)) throw DomainError("divisor must be neither zero nor a unit: " + d.to_string());
    if (!is_proper(base)) throw DomainError("invalid base: " + base.to_string());
    if (!coprime(d, base)) throw DomainError("base not invertible modulo " + d.to_string());
}

std::size_t checked_period(const Integer& e) {
    if (e > Integer(static_cast<unsigned long>(budgets().digit_cap)))
        throw DomainError("period " + to_string(e) + " exceeds the digit cap");
    return e.get_ui();
}

std::vector<Element> least_rotation(const std::vector<Element>& v) {
    std::vector<Element> best = v;
    std::vector<Element> cur = v;
    for (std::size_t i = 1; i < v.size(); ++i) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

std::string plain_digits(const std::vector<Element>& digits) {
    std::string out;
    for (const auto& d : digits) out += d.to_string();
    return out;
}

}  // namespace

std::vector<Element> expansion_sequence(const Element& a, const Element& d, const Element& base, std::size_t count) {
    if (!(a.tag() == d.tag()) || !(d.tag() == base.tag())) throw DomainError("expansion_sequence: mixed domains");
    if (!is_proper(d)) throw DomainError("divisor must be neither zero nor a unit: " + d.to_string());
    if (!a.is_zero() && !(valuation(a) < valuation(d)))
        throw DomainError("expansion_sequence needs a = 0 or nu(a) < nu(d)");
    if (count > budgets().digit_cap) throw DomainError("requested digit count exceeds the digit cap");
    std::vector<Element> out;
    out.reserve(count);
    Element r = a;
    for (std::size_t i = 0; i < count; ++i) {
        auto [q, rem] = divide(base * r, d);
        out.push_back(std::move(q));
        r = std::move(rem);
    }
    return out;
}

RecurringNumeral expand_fraction(const Element& a, const Element& d, const Element& base) {
    if (!(a.tag() == d.tag()) || !(d.tag() == base.tag())) throw DomainError("expand: mixed domains");
    if (!is_proper(d)) throw DomainError("divisor must be neither zero nor a unit: " + d.to_string());
    if (!is_proper(base)) throw DomainError("invalid base: " + base.to_string());
    auto [q0, r] = divide(a, d);
    RecurringNumeral rn;
    rn.base = base;
    rn.integer_digits = to_digits(q0, base).digits;
    std::map<Element, std::size_t> seen;
    std::vector<Element> digits;
    const auto cap = budgets().digit_cap;
    while (true) {
        auto [it, inserted] = seen.emplace(r, digits.size());
        if (!inserted) {
            rn.preperiod_digits.assign(digits.begin(), digits.begin() + static_cast<long>(it->second));
            rn.repetend_digits.assign(digits.begin() + static_cast<long>(it->second), digits.end());
            break;
        }
        if (digits.size() >= cap) throw DomainError("expansion exceeded the digit cap of " + std::to_string(cap));
        auto [q, rem] = divide(base * r, d);
        digits.push_back(std::move(q));
        r = std::move(rem);
    }
    for (const auto* part : {&rn.integer_digits, &rn.preperiod_digits, &rn.repetend_digits})
        for (const auto& x : *part)
            if (!is_digit(x, base)) rn.non_digit_sequence = true;
    return rn;
}

Repetend repetend(const Element& d, const Element& base) {
    require_coprime_divisor(d, base);
    const std::size_t e = checked_period(multiplicative_order(base, d));
    Repetend rep;
    rep.divisor = d;
    rep.base = base;
    rep.period = e;
    rep.value = exact_quotient(pow(base, e) - Element::one(d.tag()), d);
    rep.digits = padded_digits(rep.value, base, e);
    return rep;
}

Fraction value_of_recurring(const RecurringNumeral& rn) {
    if (rn.repetend_digits.empty()) throw DomainError("recurring numeral needs a nonempty repetend");
    const Element& base = rn.base;
    const auto& tag = base.tag();
    const Element one = Element::one(tag);
    const Element den_rep = pow(base, rn.repetend_digits.size()) - one;
    const Element rep_value = from_digits(rn.repetend_digits, base);
    const bool pure = rn.preperiod_digits.empty() &&
                      std::all_of(rn.integer_digits.begin(), rn.integer_digits.end(), [](const Element& x) { return x.is_zero(); });
    if (pure) {
        if (rep_value == den_rep) return {one, one, true};
        return {rep_value, den_rep, false};
    }
    const Element shift = pow(base, rn.preperiod_digits.size());
    const Element int_value = from_digits(rn.integer_digits, base);
    const Element pre_value = from_digits(rn.preperiod_digits, base);
    Fraction f;
    f.numerator = int_value * shift * den_rep + pre_value * den_rep + rep_value;
    f.denominator = shift * den_rep;
    return f;
}

Fraction reduce(const Fraction& f) {
    if (f.denominator.is_zero()) throw DomainError("zero denominator");
    if (f.numerator.is_zero()) return {f.numerator, Element::one(f.denominator.tag()), f.declared_one};
    const Element g = gcd(f.numerator, f.denominator);
    Element num = exact_quotient(f.numerator, g);
    Element den = exact_quotient(f.denominator, g);
    const Element u = exact_quotient(unit_normalize(den), den);
    return {num * u, den * u, f.declared_one};
}

ChainCensus chains(const Element& d, const Element& base) {
    require_coprime_divisor(d, base);
    const auto residues = enumerate_residues(d, budgets().residue_count);
    std::map<Element, std::size_t> index;
    for (std::size_t i = 0; i < residues.size(); ++i) index.emplace(residues[i], i);
    std::vector<bool> visited(residues.size(), false);
    std::map<std::size_t, std::size_t, std::greater<>> tally;

    ChainCensus census;
    census.divisor = d;
    census.base = base;
    for (std::size_t i = 0; i < residues.size(); ++i) {
        if (visited[i]) continue;
        std::size_t length = 0;
        Element t = residues[i];
        do {
            visited[index.at(t)] = true;
            ++length;
            t = canonical_residue(base * t, d);
        } while (!(t == residues[i]));
        Chain chain;
        chain.length = length;
        chain.smallest_residue = residues[i];
        // 0 stands for d/d = 0.(B-1)
        chain.digits = residues[i].is_zero() ? std::vector<Element>{base - Element::one(d.tag())}
                                             : least_rotation(expansion_sequence(residues[i], d, base, length));
        census.chains.push_back(std::move(chain));
        ++tally[length];
        census.residues += length;
    }
    census.entries.assign(tally.begin(), tally.end());
    return census;
}

CyclicMultiplesReport cyclic_multiples_check(const Element& d, const Element& base) {
    if (d.kind() != DomainKind::RationalIntegers) throw DomainError("cyclic multiples check is defined for Z");
    CyclicMultiplesReport report;
    report.rep = repetend(d, base);
    const Integer n = abs(d.as_integer());
    if (Integer(static_cast<unsigned long>(report.rep.period)) != n - 1)
        throw DomainError("requires single chain: ord_" + to_string(n) + "(" + base.to_string() + ") = " +
                          std::to_string(report.rep.period) + " != " + to_string(n - 1));
    const std::size_t e = report.rep.period;
    std::vector<std::vector<Element>> rotations;
    std::vector<Element> cur = report.rep.digits;
    for (std::size_t i = 0; i < e; ++i) {
        rotations.push_back(cur);
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    }
    report.all_rotations = true;
    for (Integer t = 1; t < n; ++t) {
        const Element multiple = Element::integer(t) * report.rep.value;
        const auto digits = padded_digits(multiple, base, e);
        report.multiples.push_back(plain_digits(digits));
        if (digits.size() != e || std::find(rotations.begin(), rotations.end(), digits) == rotations.end())
            report.all_rotations = false;
    }
    report.full_multiple = d * report.rep.value;
    report.full_multiple_is_all_max = report.full_multiple == pow(base, e) - Element::one(d.tag());
    return report;
}

MidyReport midy_complement_check(const Element& d, const Element& base, std::size_t sample_cap) {
    require_coprime_divisor(d, base);
    const auto& tag = d.tag();
    const Element one = Element::one(tag);
    const Element two_b = Element::from_integer(tag, 2) * base;
    if (!coprime(d, two_b)) throw DomainError("midy check needs d coprime to 2B");
    MidyReport report;
    report.period = checked_period(multiplicative_order(base, d));
    for (std::size_t l = 1; l <= report.period; ++l) {
        if (divides(d, pow(base, l) + one)) {
            report.witness_found = true;
            report.l = l;
            break;
        }
    }
    if (!report.witness_found) return report;
    const std::size_t l = report.l;
    const std::size_t e = report.period;

    // Residues coprime to d, thinned evenly to at most sample_cap.
    std::vector<Element> units;
    for (auto& r : enumerate_residues(d, budgets().residue_count))
        if (!r.is_zero() && coprime(r, d)) units.push_back(std::move(r));
    std::vector<Element> sample;
    if (units.size() <= sample_cap) {
        sample = units;
    } else {
        for (std::size_t i = 0; i < sample_cap; ++i) sample.push_back(units[i * units.size() / sample_cap]);
    }
    // make sure 1/d is among the samples
    const Element one_res = canonical_residue(one, d);
    if (std::find(sample.begin(), sample.end(), one_res) == sample.end()) sample.insert(sample.begin(), one_res);

    const Element full = pow(base, e) - one;
    report.all_samples_pass = true;
    for (const auto& a : sample) {
        const auto digits = expansion_sequence(a, d, base, e);
        std::vector<Element> sums;
        sums.reserve(e);
        for (std::size_t i = 0; i < e; ++i) sums.push_back(digits[i] + digits[(i + l) % e]);
        const Element value = from_digits(sums, base);
        int represents = -1;
        if (value == full) represents = 1;
        else if (value.is_zero()) represents = 0;
        if (represents < 0) report.all_samples_pass = false;
        ++report.samples_checked;
        if (a == one_res) {
            report.first_half.assign(digits.begin(), digits.begin() + static_cast<long>(l));
            report.second_half.assign(digits.begin() + static_cast<long>(l), digits.begin() + static_cast<long>(std::min(2 * l, e)));
            report.digit_sums.assign(sums.begin(), sums.begin() + static_cast<long>(l));
            report.halves_sum = from_digits(report.first_half, base) + from_digits(report.second_half, base);
            report.represents = represents;
        }
    }
    return report;
}

SquareSplitReport square_split_check(const Element& d, const Element& base, const Element& k, unsigned long l) {
    if (l == 0) throw DomainError("square split needs l >= 1");
    SquareSplitReport report;
    report.rep = repetend(d, base);
    const auto& tag = d.tag();
    const std::size_t e = report.rep.period;
    report.product = k * report.rep.value;
    const Element shift = pow(base, l * e);
    auto [high, low] = divide(report.product, shift);
    report.high = high;
    report.low = low;
    report.degenerate = high.is_zero();
    report.sum = high + low;
    auto [quot, rem] = divide(report.sum, report.rep.value);
    report.divisible = rem.is_zero();
    report.quotient = report.divisible ? quot : Element::zero(tag);
    Element geometric = Element::zero(tag);
    for (unsigned long i = 0; i < l; ++i) geometric += pow(base, i * e);
    report.quotient_matches_formula = report.divisible && report.quotient == k - d * high * geometric;
    return report;
}

namespace {

std::vector<Element> digit_alphabet(const Element& base, std::uint64_t budget) {
    const auto& tag = base.tag();
    std::vector<Element> out;
    switch (tag.kind) {
        case DomainKind::RationalIntegers: {
            const Integer n = valuation(base);
            for (Integer v = -(n - 1); v < n; ++v) out.push_back(Element::integer(v));
            break;
        }
        case DomainKind::PolynomialsOverPrimeField: {
            const Element bound = Element::monomial(tag.characteristic, 1, static_cast<std::size_t>(base.degree()));
            out = enumerate_residues(bound, budget);
            break;
        }
        case DomainKind::GaussianIntegers: {
            const Integer n = valuation(base);
            Integer side;
            mpz_sqrt(side.get_mpz_t(), n.get_mpz_t());
            const long s = side.get_si();
            for (long a = -s; a <= s; ++a)
                for (long b = -s; b <= s; ++b) {
                    Element x = Element::gaussian(a, b);
                    if (x.is_zero() || valuation(x) < n) out.push_back(std::move(x));
                }
            break;
        }
    }
    return out;
}

}  // namespace

UnityReport unity_recurring_witness(const DomainTag& tag, const Element& base, std::size_t max_period, std::uint64_t string_budget) {
    if (!(base.tag() == tag)) throw DomainError("base is not in the requested domain");
    if (!is_proper(base)) throw DomainError("invalid base: " + base.to_string());
    const Element one = Element::one(tag);
    UnityReport report;
    report.base_used = base;
    report.max_period = max_period;

    if (tag.kind == DomainKind::RationalIntegers) {
        const Element b_minus_1 = base - one;
        if (valuation(base) > valuation(b_minus_1)) {
            report.found = true;
            report.witness = {b_minus_1};
            report.reason = "nu(B) > nu(B-1): 1 = 0.(B-1)";
        } else {
            report.found = true;
            report.base_used = b_minus_1;
            report.witness = {base, -base};
            report.reason = "nu(B) < nu(B-1): 1 = 0.(B,-B) in base B-1";
        }
        RecurringNumeral rn{report.base_used, {}, {}, report.witness, false};
        if (!value_of_recurring(rn).declared_one) throw DomainError("internal: unity witness does not evaluate to 1");
        return report;
    }

    const auto alphabet = digit_alphabet(base, string_budget);
    const std::size_t q = alphabet.size();
    for (std::size_t n = 1; n <= max_period && !report.found; ++n) {
        const Element target = pow(base, n) - one;
        std::vector<std::size_t> idx(n, 0);
        for (;;) {
            if (report.strings_checked >= string_budget) {
                report.search_complete = false;
                report.reason = "search budget exhausted";
                return report;
            }
            ++report.strings_checked;
            Element value = Element::zero(tag);
            for (auto i : idx) value = value * base + alphabet[i];
            if (value == target) {
                report.found = true;
                for (auto i : idx) report.witness.push_back(alphabet[i]);
                report.reason = "digit string equal to B^n - 1";
                break;
            }
            std::size_t pos = n;
            while (pos > 0) {
                if (++idx[pos - 1] < q) break;
                idx[pos - 1] = 0;
                --pos;
            }
            if (pos == 0) break;
        }
    }
    if (!report.found) report.reason = "no digit string a_1..a_n equals B^n - 1 for n <= " + std::to_string(max_period);
    return report;
}

SamePeriodReport same_period_for_divisors_check(const std::vector<Element>& primes, const Element& base) {
    if (primes.empty()) throw DomainError("need at least one prime");
    if (primes.size() > 16) throw DomainError("at most 16 primes supported");
    SamePeriodReport report;
    const auto& tag = base.tag();
    Element product = Element::one(tag);
    report.lcm_of_orders = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (unit_normalize(primes[i]) == unit_normalize(primes[j])) throw DomainError("primes must be distinct");
        report.prime_orders.push_back(multiplicative_order(base, primes[i]));
        report.lcm_of_orders = lcm(report.lcm_of_orders, report.prime_orders.back());
        product *= primes[i];
    }
    report.product_order = multiplicative_order(base, product);
    report.lcm_matches = report.product_order == report.lcm_of_orders;
    report.all_equal = std::all_of(report.prime_orders.begin(), report.prime_orders.end(),
                                   [&](const Integer& o) { return o == report.prime_orders.front(); });
    report.divisors_share_order = true;
    const std::size_t subsets = std::size_t{1} << primes.size();
    for (std::size_t mask = 1; mask < subsets; ++mask) {
        Element divisor = Element::one(tag);
        for (std::size_t i = 0; i < primes.size(); ++i)
            if (mask & (std::size_t{1} << i)) divisor *= primes[i];
        const Integer order = multiplicative_order(base, divisor);
        if (order != report.prime_orders.front()) report.divisors_share_order = false;
        report.divisor_orders.emplace_back(divisor, order);
    }
    return report;
}

}  // namespace euclid
