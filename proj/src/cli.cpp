#include "euclid/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>
#include "euclid/census.hpp"
#include "euclid/digits.hpp"
#include "euclid/divtest.hpp"
#include "euclid/domain.hpp"
#include "euclid/parse.hpp"
#include "euclid/period.hpp"
#include "euclid/recurring.hpp"
#include "euclid/selftest.hpp"

namespace euclid::cli {

namespace {

using json = nlohmann::ordered_json;

struct Common {
    std::string domain = "z";
    std::uint64_t characteristic = 0;
    std::string base;
    std::uint64_t seed = 42;
    std::string out = "json";
};

void add_common(CLI::App* sub, Common& c, bool element_domain = true) {
    if (element_domain) {
        sub->add_option("--domain", c.domain, "z, gauss or poly")->check(CLI::IsMember({"z", "gauss", "poly"}));
        sub->add_option("--char", c.characteristic, "field characteristic for --domain poly");
    }
    sub->add_option("--base", c.base, "radix B (default 10, or x for polynomials)");
    sub->add_option("--out", c.out, "json, tsv or human")->check(CLI::IsMember({"json", "tsv", "human"}));
    sub->add_option("--seed", c.seed, "seed for sampled checks");
}

DomainTag tag_of(const Common& c) { return parse_domain(c.domain, c.characteristic); }

Element element(const std::string& text, const Common& c) { return parse_element(text, tag_of(c)); }

Element base_of(const Common& c) {
    const auto tag = tag_of(c);
    if (!c.base.empty()) return parse_element(c.base, tag);
    return tag.kind == DomainKind::PolynomialsOverPrimeField ? Element::monomial(tag.characteristic, 1, 1) : Element::from_integer(tag, 10);
}

std::int64_t integer_base(const Common& c) {
    const Integer b = parse_integer(c.base.empty() ? "10" : c.base);
    if (!b.fits_slong_p()) throw ParseError("base out of range: " + c.base);
    return b.get_si();
}

std::string s(const Element& e) { return e.to_string(); }
std::string s(const Integer& n) { return n.get_str(); }
std::string s(std::uint64_t n) { return std::to_string(n); }

json digits_json(const std::vector<Element>& digits) {
    json a = json::array();
    for (const auto& d : digits) a.push_back(d.to_string());
    return a;
}

std::string fixed(double v, int places = 6) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(places) << v;
    return os.str();
}

json optional_density(const std::optional<double>& v) { return v ? json(fixed(*v)) : json(nullptr); }

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
    } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); })) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), rows);
    } else if (j.is_array()) {
        std::string joined;
        for (const auto& x : j) joined += (joined.empty() ? "" : ",") + (x.is_string() ? x.get<std::string>() : x.dump());
        rows.emplace_back(prefix, joined);
    } else {
        rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
    }
}

void emit(const json& j, const Common& c, std::ostream& out) {
    if (c.out == "json") {
        out << j.dump() << '\n';
        return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(j, "", rows);
    for (const auto& [k, v] : rows) out << k << (c.out == "tsv" ? "\t" : ": ") << v << '\n';
}

json verdict_json(const DivisibilityVerdict& v) {
    return {{"divisible", v.divisible}, {"residue", s(v.residue)}, {"reduced_value", s(v.reduced_value)}, {"k", s(v.k)}};
}

std::vector<std::size_t> parse_cuts(const std::string& text) {
    std::vector<std::size_t> cuts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty() || !std::all_of(part.begin(), part.end(), ::isdigit)) throw ParseError("bad cut list: " + text);
        cuts.push_back(std::stoul(part));
    }
    return cuts;
}

// ---- subcommands -------------------------------------------------------

json cmd_divtest(const std::string& s_text, const std::string& d_text, std::string mode, std::string cuts, const Common& c) {
    const Element sv = element(s_text, c);
    const Element d = element(d_text, c);
    const Element b = base_of(c);
    if (mode.rfind("chunks:", 0) == 0) {
        cuts = mode.substr(7);
        mode = "chunks";
    }
    if (mode == "forward") return verdict_json(forward_reduce(sv, d, b));
    if (mode == "reverse") return verdict_json(reverse_reduce(sv, d, b));
    if (mode == "chunks") return verdict_json(chunked_reduce(sv, d, b, ChunkSpec{parse_cuts(cuts)}));
    const auto g = general_divisibility(sv, d, b);
    json j = verdict_json(g.verdict);
    json parts = json::array();
    for (const auto& f : g.factors) {
        json p = {{"factor", s(f.factor)}, {"coprime_part", f.coprime_part}, {"checked_value", s(f.checked_value)}, {"divisible", f.divisible}};
        if (!f.coprime_part) p["digits_checked"] = s(static_cast<std::uint64_t>(f.digits_checked));
        parts.push_back(p);
    }
    j["factors"] = parts;
    return j;
}

json cmd_kvalue(const std::string& d_text, const std::string& mode, const Common& c) {
    const Element d = element(d_text, c);
    const KValue k = mode == "forward" ? forward_k(d, base_of(c)) : reverse_k(d, base_of(c));
    return {{"k", s(k.value)}};
}

json cmd_expand(const std::string& frac, std::size_t digits, bool digits_given, const Common& c) {
    const auto slash = frac.rfind('/');
    if (slash == std::string::npos) throw ParseError("expected a/d, got " + frac);
    const Element a = element(frac.substr(0, slash), c);
    const Element d = element(frac.substr(slash + 1), c);
    const Element b = base_of(c);
    json j = {{"numerator", s(a)}, {"denominator", s(d)}, {"base", s(b)}};
    if (digits_given) {
        j["digits"] = digits_json(expansion_sequence(a, d, b, digits));
        return j;
    }
    const auto rn = expand_fraction(a, d, b);
    j["integer_digits"] = digits_json(rn.integer_digits);
    j["preperiod"] = digits_json(rn.preperiod_digits);
    j["repetend"] = digits_json(rn.repetend_digits);
    j["period"] = s(static_cast<std::uint64_t>(rn.repetend_digits.size()));
    j["numeral"] = format_numeral(rn);
    j["non_digit_sequence"] = rn.non_digit_sequence;
    return j;
}

json cmd_chains(const std::string& d_text, const Common& c) {
    const auto census = chains(element(d_text, c), base_of(c));
    json entries = json::array();
    for (auto [b, n] : census.entries) entries.push_back({{"length", s(b)}, {"count", s(n)}});
    json list = json::array();
    for (const auto& ch : census.chains)
        list.push_back({{"length", s(ch.length)}, {"smallest_residue", s(ch.smallest_residue)}, {"digits", digits_json(ch.digits)}});
    return {{"divisor", s(census.divisor)}, {"base", s(census.base)}, {"residues", s(census.residues)}, {"entries", entries}, {"chains", list}};
}

json cmd_midy(const std::string& d_text, const Common& c) {
    const auto r = midy_complement_check(element(d_text, c), base_of(c));
    json j = {{"witness_found", r.witness_found}, {"period", s(r.period)}};
    if (r.witness_found) {
        j["l"] = s(r.l);
        j["first_half"] = digits_json(r.first_half);
        j["second_half"] = digits_json(r.second_half);
        j["digit_sums"] = digits_json(r.digit_sums);
        j["halves_sum"] = s(r.halves_sum);
        j["represents"] = r.represents < 0 ? json(nullptr) : json(std::to_string(r.represents));
        j["samples_checked"] = s(r.samples_checked);
        j["all_samples_pass"] = r.all_samples_pass;
    }
    return j;
}

json cmd_squaresplit(const std::string& d_text, const std::string& k_text, unsigned long l, const Common& c) {
    const Element d = element(d_text, c);
    const auto r = square_split_check(d, base_of(c), element(k_text, c), l);
    return {{"repetend", s(r.rep.value)}, {"period", s(r.rep.period)}, {"product", s(r.product)}, {"high", s(r.high)},
            {"low", s(r.low)}, {"sum", s(r.sum)}, {"divisible", r.divisible}, {"quotient", s(r.quotient)},
            {"degenerate", r.degenerate}, {"quotient_matches_formula", r.quotient_matches_formula}};
}

json cmd_period(const std::string& d_text, const Common& c) {
    const auto r = period_of_d(element(d_text, c), base_of(c));
    json factors = json::array();
    for (const auto& f : r.per_prime) {
        json q = json::array();
        for (const auto& v : f.q_list) q.push_back(s(v));
        factors.push_back({{"p", s(f.prime)}, {"alpha", s(static_cast<std::uint64_t>(f.alpha))}, {"Q", s(f.period)},
                           {"g", s(static_cast<std::uint64_t>(f.g))}, {"q_list", q}});
    }
    return {{"period", s(r.period)}, {"factors", factors}};
}

json census_json(const CensusReport& r) {
    const auto& ref = r.references;
    auto delta = [](double v, const std::optional<double>& ref) { return ref ? json(fixed(v - *ref)) : json(nullptr); };
    return {{"base", std::to_string(r.base)},
            {"limit", s(r.limit)},
            {"prime_count", s(r.prime_count)},
            {"counts", {{"full", s(r.counts.full)}, {"odd", s(r.counts.odd)}, {"even_nonfull", s(r.counts.even_nonfull)}, {"excluded", s(r.counts.excluded)}}},
            {"proportions", {{"full", fixed(r.full)}, {"odd", fixed(r.odd)}, {"even_nonfull", fixed(r.even_nonfull)}}},
            {"references", {{"artin", optional_density(ref.full)}, {"odd", optional_density(ref.odd)}, {"even_nonfull", optional_density(ref.even_nonfull)}, {"artin_requires_grh", ref.full_requires_grh}}},
            {"deltas", {{"full", delta(r.full, ref.full)}, {"odd", delta(r.odd, ref.odd)}, {"even_nonfull", delta(r.even_nonfull, ref.even_nonfull)},
                        {"ratio_9_8_7", {{"full", fixed(r.delta_ratio_full)}, {"odd", fixed(r.delta_ratio_odd)}, {"even_nonfull", fixed(r.delta_ratio_even)}}}}},
            {"ordered", r.ordered()}};
}

void emit_census_tsv(const CensusReport& r, std::ostream& out) {
    auto opt = [](const std::optional<double>& v) { return v ? fixed(*v) : std::string("NA"); };
    auto dlt = [](double v, const std::optional<double>& ref) { return ref ? fixed(v - *ref) : std::string("NA"); };
    const auto& ref = r.references;
    out << "class\tcount\tproportion\treference\tdelta\tdelta_9_8_7\n";
    out << "full\t" << r.counts.full << '\t' << fixed(r.full) << '\t' << opt(ref.full) << '\t' << dlt(r.full, ref.full) << '\t' << fixed(r.delta_ratio_full) << '\n';
    out << "odd\t" << r.counts.odd << '\t' << fixed(r.odd) << '\t' << opt(ref.odd) << '\t' << dlt(r.odd, ref.odd) << '\t' << fixed(r.delta_ratio_odd) << '\n';
    out << "even_nonfull\t" << r.counts.even_nonfull << '\t' << fixed(r.even_nonfull) << '\t' << opt(ref.even_nonfull) << '\t'
        << dlt(r.even_nonfull, ref.even_nonfull) << '\t' << fixed(r.delta_ratio_even) << '\n';
}

json cmd_artin(std::uint64_t limit) {
    const auto a = artin_constant(limit);
    return {{"prime_limit", s(a.prime_limit)}, {"primes_used", s(a.primes_used)}, {"value", a.decimal((a.product_lo + a.product_hi) / 2, 15)},
            {"lower", a.decimal(a.lower, 15)}, {"upper", a.decimal(a.upper, 15)}, {"error_bound", a.decimal(a.upper - a.lower, 15)}};
}

json cmd_residual(std::uint64_t limit, std::int64_t base, std::uint64_t max_m, Schedule sched) {
    const auto h = residual_index_histogram(limit, base, max_m, sched);
    json buckets = json::object();
    for (std::uint64_t m = 1; m <= h.max_m; ++m) buckets[std::to_string(m)] = s(h.bucket(m));
    return {{"base", std::to_string(h.base)}, {"limit", s(h.limit)}, {"max_m", s(h.max_m)}, {"total", s(h.total)},
            {"buckets", buckets}, {"overflow", s(h.overflow)}, {"identity_holds", h.identity_holds}};
}

json cmd_wieferich(std::uint64_t limit, std::int64_t base, std::uint64_t seed, Schedule sched) {
    const auto w = wieferich_search(limit, base, seed, sched);
    json primes = json::array();
    for (auto p : w.primes) primes.push_back(s(p));
    return {{"base", std::to_string(w.base)}, {"limit", s(w.limit)}, {"primes", primes},
            {"equivalence_holds", w.equivalence_holds}, {"non_hits_checked", s(w.non_hits_checked)}};
}

int cmd_selftest(const Common& c, std::ostream& out) {
    const auto results = run_selftest(c.seed);
    bool all = true;
    for (const auto& r : results) all = all && r.passed;
    if (c.out == "json") {
        json rows = json::array();
        for (const auto& r : results) rows.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        out << json{{"seed", s(c.seed)}, {"passed", all}, {"checks", rows}}.dump() << '\n';
    } else {
        for (const auto& r : results)
            out << (r.passed ? "PASS" : "FAIL") << "  " << std::left << std::setw(28) << r.name << std::right << std::fixed
                << std::setprecision(3) << std::setw(8) << r.seconds << "s  " << r.detail << '\n';
        out << (all ? "all checks passed" : "some checks FAILED") << '\n';
    }
    return all ? kExitOk : kExitDomain;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Divisibility tests, recurring expansions and prime census in Euclidean domains", "euclid"};
    app.require_subcommand(1);
    Common c;

    std::string a1, a2, mode = "reverse", cuts;
    std::size_t digits = 0;
    unsigned long l = 1;
    std::uint64_t limit = 0, max_m = 8;
    bool serial = false;

    auto* divtest = app.add_subcommand("divtest", "divtest: forward_reduce, reverse_reduce, chunked_reduce or general_divisibility of s by d");
    divtest->add_option("s", a1, "dividend")->required();
    divtest->add_option("--divisor", a2, "divisor d")->required();
    divtest->add_option("--mode", mode, "forward, reverse, chunks (with --cuts or chunks:n1,n2) or general");
    divtest->add_option("--cuts", cuts, "chunk cut positions n1,n2,... counted from the right");
    add_common(divtest, c);

    auto* kvalue = app.add_subcommand("kvalue", "divtest: forward_k or reverse_k multiplier for d");
    kvalue->add_option("d", a1, "divisor")->required();
    kvalue->add_option("--mode", mode, "forward or reverse")->check(CLI::IsMember({"forward", "reverse"}));
    add_common(kvalue, c);

    auto* expand = app.add_subcommand("expand", "recurring: expand_fraction (or expansion_sequence with --digits) of a/d");
    expand->add_option("fraction", a1, "a/d")->required();
    auto* digits_opt = expand->add_option("--digits", digits, "emit only the first n expansion digits");
    add_common(expand, c);

    auto* chains_cmd = app.add_subcommand("chains", "recurring: chains, the orbits of multiplication by B modulo d");
    chains_cmd->add_option("d", a1, "divisor")->required();
    add_common(chains_cmd, c);

    auto* midy = app.add_subcommand("midy", "recurring: midy_complement_check for d | B^l + 1");
    midy->add_option("d", a1, "divisor")->required();
    add_common(midy, c);

    auto* squaresplit = app.add_subcommand("squaresplit", "recurring: square_split_check of k * r_d");
    squaresplit->add_option("d", a1, "divisor")->required();
    squaresplit->add_option("--k", a2, "multiplier k")->required();
    squaresplit->add_option("--l", l, "split after l periods");
    add_common(squaresplit, c);

    auto* period = app.add_subcommand("period", "period: period_of_d with per-prime lifting data");
    period->add_option("d", a1, "divisor")->required();
    add_common(period, c);

    auto* census_cmd = app.add_subcommand("census", "census: census of primes by period class");
    census_cmd->add_option("--limit", limit, "largest prime considered")->required();
    census_cmd->add_flag("--serial", serial, "use the serial reference kernel");
    add_common(census_cmd, c, false);

    auto* artin = app.add_subcommand("artin", "census: artin_constant truncated product with certified bounds");
    artin->add_option("--primes-limit", limit, "largest prime in the product")->required();
    add_common(artin, c, false);

    auto* residual = app.add_subcommand("residual", "census: residual_index_histogram of c_p = (p-1)/D_p");
    residual->add_option("--limit", limit, "largest prime considered")->required();
    residual->add_option("--max-m", max_m, "largest bucket");
    residual->add_flag("--serial", serial, "use the serial reference kernel");
    add_common(residual, c, false);

    auto* wieferich = app.add_subcommand("wieferich", "census: wieferich_search for p^2 | B^(p-1) - 1");
    wieferich->add_option("--limit", limit, "largest prime considered")->required();
    wieferich->add_flag("--serial", serial, "use the serial reference kernel");
    add_common(wieferich, c, false);

    auto* selftest = app.add_subcommand("selftest", "cli: run_selftest, the invariant suite as a pass/fail table");
    add_common(selftest, c, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    const Schedule sched = serial ? Schedule::Serial : Schedule::Parallel;
    try {
        if (selftest->parsed()) {
            if (c.out == "tsv") c.out = "human";
            return cmd_selftest(c, out);
        }
        if (census_cmd->parsed()) {
            const auto r = census(limit, integer_base(c), sched);
            if (c.out == "tsv") emit_census_tsv(r, out);
            else emit(census_json(r), c, out);
            return kExitOk;
        }
        json j;
        if (divtest->parsed()) j = cmd_divtest(a1, a2, mode, cuts, c);
        else if (kvalue->parsed()) j = cmd_kvalue(a1, mode, c);
        else if (expand->parsed()) j = cmd_expand(a1, digits, digits_opt->count() > 0, c);
        else if (chains_cmd->parsed()) j = cmd_chains(a1, c);
        else if (midy->parsed()) j = cmd_midy(a1, c);
        else if (squaresplit->parsed()) j = cmd_squaresplit(a1, a2, l, c);
        else if (period->parsed()) j = cmd_period(a1, c);
        else if (artin->parsed()) j = cmd_artin(limit);
        else if (residual->parsed()) j = cmd_residual(limit, integer_base(c), max_m, sched);
        else if (wieferich->parsed()) j = cmd_wieferich(limit, integer_base(c), c.seed, sched);
        emit(j, c, out);
        return kExitOk;
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
}

}  // namespace euclid::cli
