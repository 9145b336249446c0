#include "q4n/certify.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "q4n/complexes.hpp"
#include "q4n/encoding.hpp"
#include "q4n/groupring.hpp"
#include "q4n/ideals.hpp"
#include "q4n/quotients.hpp"

namespace q4n {

using nlohmann::json;

const std::vector<std::pair<Suite, std::string>>& suite_names() {
    static const std::vector<std::pair<Suite, std::string>> names = {
        {Suite::prop21, "prop21"}, {Suite::prop22, "prop22"}, {Suite::thm32, "thm32"},
        {Suite::thm33, "thm33"},   {Suite::lemma42, "lemma42"}, {Suite::prop44, "prop44"},
        {Suite::thm45, "thm45"},   {Suite::all, "all"},
    };
    return names;
}

Suite suite_from_name(const std::string& name) {
    for (const auto& [suite, n] : suite_names())
        if (n == name) return suite;
    throw ConfigError("unknown suite '" + name + "'");
}

namespace {

json invariants_json(const std::vector<Int>& v) {
    json out = json::array();
    for (const Int& x : v) out.push_back(x.get_str());
    return out;
}

// Prop 2.1: quotient structure {t, d} of ZQ_4n / <a+by, x+1> and the
// coprimality hypothesis.  Informational when the hypothesis fails.
VerificationReport verify_prop21(GroupParams p, const Int& a, const Int& b) {
    CheckSet cs;
    cs.note("params", json{{"n", p.n}, {"a", a.get_str()}, {"b", b.get_str()}});

    if (a == 0 && b == 0) {
        cs.note("degenerate", "a = b = 0: P = <x+1>, t = k/d undefined; nothing to certify");
        IdealLattice P = p_ideal(p, a, b);
        cs.note("quotient_invariants", invariants_json(quotient_structure(P)));
        return cs.finish("prop-2.1-quotient-structure", "Proposition 2.1");
    }

    const ProjectivityCriterion crit = projectivity_criterion(p, a, b);
    cs.note("k", crit.k.get_str());
    cs.note("d", crit.d.get_str());
    cs.note("t", crit.t.get_str());
    cs.note("coprime", crit.coprime);

    const IdealLattice P = p_ideal(p, a, b);
    cs.record("two_sided", is_two_sided(P));

    const std::vector<Int> inv = quotient_structure(P);
    cs.note("quotient_invariants", invariants_json(inv));

    if (crit.k != 0) {
        // |ZQ/P| = |k|, and the nontrivial factors are {t, d}
        cs.record("index_equals_k", lattice_index(P.lattice) == abs(crit.k),
                  json{{"index", lattice_index(P.lattice).get_str()}});
        std::vector<Int> expected;
        if (crit.d != 1) expected.push_back(crit.d);
        if (abs(crit.t) != 1) expected.push_back(abs(crit.t));
        cs.record("invariants_are_t_and_d", inv == expected);
    }
    if (crit.coprime) {
        Int exponent(1), g, four_n(4 * p.n);
        for (const Int& f : inv)
            if (f > exponent) exponent = f;
        mpz_gcd(g.get_mpz_t(), exponent.get_mpz_t(), four_n.get_mpz_t());
        cs.record("exponent_coprime_to_4n", g == 1,
                  json{{"exponent", exponent.get_str()}});
        cs.note("projective", "hypothesis (k, 2n) = 1 holds; projectivity follows "
                              "from the cited criterion for quotients of exponent "
                              "coprime to 4n");
    } else {
        cs.note("projective", "hypothesis (k, 2n) = 1 fails; projectivity not asserted");
    }
    return cs.finish("prop-2.1-quotient-structure", "Proposition 2.1");
}

void require(bool ok, const std::string& message) {
    if (!ok) throw ConfigError(message);
}

void validate(Suite s, GroupParams p, const Int& a, const Int& b) {
    const bool headline = p.n == 7 && a == -3 && b == 4;
    Int k = a * a + b * b, g, two_n(2 * p.n);
    mpz_gcd(g.get_mpz_t(), k.get_mpz_t(), two_n.get_mpz_t());
    switch (s) {
        case Suite::prop21:
            break;
        case Suite::prop22:
            require(p.n % 2 == 1, "suite prop22 requires odd n");
            require(g == 1, "suite prop22 requires gcd(a^2+b^2, 2n) = 1");
            break;
        case Suite::thm32:
            require(p.n == 7, "suite thm32 requires n = 7");
            require(!(k % 7 == 0), "suite thm32 requires a+by to be a unit of the "
                                   "fiber: gcd hypothesis violated (7 | a^2+b^2)");
            break;
        case Suite::thm33:
            require(headline, "suite thm33 requires n=7, a=-3, b=4");
            break;
        case Suite::lemma42:
            require(p.n % 2 == 1, "suite lemma42 requires odd n");
            break;
        case Suite::prop44:
            require(p.n % 2 == 1, "suite prop44 requires odd n");
            require(g == 1, "suite prop44 requires gcd(a^2+b^2, 2n) = 1");
            break;
        case Suite::thm45:
            require(headline, "suite thm45 requires n=7, a=-3, b=4");
            break;
        case Suite::all:
            for (const auto& [suite, name] : suite_names())
                if (suite != Suite::all) validate(suite, p, a, b);
            break;
    }
}

template <typename F>
void timed(std::vector<VerificationReport>& out, F&& run) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r = run();
    const auto stop = std::chrono::steady_clock::now();
    r.wall_time_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    out.push_back(std::move(r));
}

} // namespace

std::vector<VerificationReport> run_suite(const RunConfig& config) {
    if (config.n < 2) throw ConfigError("n must be >= 2");
    const GroupParams p(config.n);
    validate(config.suite, p, config.a, config.b);

    const auto wants = [&](Suite s) {
        return config.suite == s || config.suite == Suite::all;
    };

    std::vector<VerificationReport> reports;
    if (wants(Suite::prop21))
        timed(reports, [&] { return verify_prop21(p, config.a, config.b); });
    if (wants(Suite::prop22)) {
        timed(reports, [&] { return verify_milnor_squares(p); });
        timed(reports, [&] { return verify_prop22(p, config.a, config.b); });
    }
    if (wants(Suite::thm32))
        timed(reports, [&] { return nonfreeness_certificate(p, config.a, config.b); });
    if (wants(Suite::thm33)) {
        timed(reports, [&] { return verify_phi_factorization(); });
        timed(reports, [&] { return verify_stably_free(); });
    }
    if (wants(Suite::lemma42))
        timed(reports, [&] { return verify_sigma_generates(p); });
    if (wants(Suite::prop44))
        timed(reports, [&] { return verify_prop44(p, config.a, config.b); });
    if (wants(Suite::thm45))
        timed(reports, [&] { return verify_exotic_complex(); });
    return reports;
}

bool all_pass(const std::vector<VerificationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const VerificationReport& r) { return r.pass; });
}

std::string text_summary(const std::vector<VerificationReport>& reports) {
    std::ostringstream os;
    for (const VerificationReport& r : reports) {
        os << (r.pass ? "PASS" : "FAIL") << "  " << r.check_id << "  (" << r.theorem_ref
           << ", " << r.wall_time_ms << " ms)\n";
        if (!r.pass && r.details.contains("checks")) {
            for (const auto& [name, entry] : r.details["checks"].items())
                if (entry.contains("ok") && entry["ok"] == false)
                    os << "      failed: " << name << "\n";
        }
    }
    os << (all_pass(reports) ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    return os.str();
}

json reports_to_json(const std::vector<VerificationReport>& reports) {
    json out = json::array();
    for (const VerificationReport& r : reports) out.push_back(report_to_json(r));
    return out;
}

DumpPaths dump_matrix(const std::string& name, const std::string& out_base) {
    const GroupParams p(7);

    ZGRMatrix gr(p, 0, 0);
    IntegerMatrix integer;
    if (name == "d1") {
        gr = fox_boundaries(p).d1;
        integer = to_integer_matrix(gr);
    } else if (name == "d2") {
        gr = fox_boundaries(p).d2;
        integer = to_integer_matrix(gr);
    } else if (name == "phi") {
        gr = phi_matrix();
        integer = to_integer_matrix(gr);
    } else if (name == "exotic-d2") {
        gr = exotic_boundary2();
        integer = to_integer_matrix(gr);
    } else if (name == "sigma") {
        gr = sigma(p);
        integer = to_integer_matrix(gr);
    } else if (name == "p-basis") {
        const IdealLattice P = p_ideal(p, Int(-3), Int(4));
        gr = ZGRMatrix(p, P.lattice.rank(), 1);
        for (std::size_t r = 0; r < P.lattice.rank(); ++r)
            gr.at(r, 0) = ZRingElem::from_coeffs(p, P.lattice.basis().row(r));
        integer = P.lattice.basis();
    } else {
        throw ConfigError("unknown dump name '" + name +
                          "' (expected d1, d2, phi, exotic-d2, sigma, p-basis)");
    }

    DumpPaths paths{out_base + ".json", out_base + ".mat"};
    {
        std::ofstream os(paths.json_path);
        if (!os) throw ConfigError("cannot write " + paths.json_path);
        os << gr_matrix_to_json(gr).dump(2) << "\n";
    }
    {
        std::ofstream os(paths.matrix_path);
        if (!os) throw ConfigError("cannot write " + paths.matrix_path);
        write_integer_matrix(os, integer);
    }
    return paths;
}

} // namespace q4n
