#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "q4n/certify.hpp"

namespace {

int run_verify(const q4n::RunConfig& config) {
    std::vector<q4n::VerificationReport> reports = q4n::run_suite(config);

    const std::string text = q4n::text_summary(reports);
    const std::string payload = config.format == q4n::OutputFormat::json
                                    ? q4n::reports_to_json(reports).dump(2) + "\n"
                                    : text;
    if (config.out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream os(config.out_path);
        if (!os) {
            std::cerr << "error: cannot write " << config.out_path << "\n";
            return 2;
        }
        os << payload;
        std::cout << text;
        std::cout << "wrote " << config.out_path << "\n";
    }
    return q4n::all_pass(reports) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact certificates for the stably free nonfree ideal over ZQ_28 "
                 "and the exotic algebraic 2-complex built from it"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run a certificate suite");
    std::string suite = "all";
    std::string format = "text";
    long n = 7, a = -3, b = 4;
    std::string out_path;
    verify->add_option("--suite", suite,
                       "one of prop21, prop22, thm32, thm33, lemma42, prop44, thm45, all")
        ->capture_default_str();
    verify->add_option("--n", n, "group parameter: |Q_4n| = 4n")->capture_default_str();
    verify->add_option("--a", a, "ideal parameter a in <a+by, x+1>")->capture_default_str();
    verify->add_option("--b", b, "ideal parameter b in <a+by, x+1>")->capture_default_str();
    verify->add_option("--format", format, "text or json")->capture_default_str();
    verify->add_option("--out", out_path, "write the report to this file");

    // dump
    auto* dump = app.add_subcommand("dump", "write a named matrix to disk");
    std::string name;
    std::string dump_out;
    dump->add_option("--name", name, "d1, d2, phi, exotic-d2, sigma, p-basis")->required();
    dump->add_option("--out", dump_out, "output base path (.json and .mat are appended)")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            q4n::RunConfig config;
            config.suite = q4n::suite_from_name(suite);
            if (format == "json") config.format = q4n::OutputFormat::json;
            else if (format == "text") config.format = q4n::OutputFormat::text;
            else throw q4n::ConfigError("unknown format '" + format + "'");
            if (n < 2) throw q4n::ConfigError("n must be >= 2");
            config.n = static_cast<int>(n);
            config.a = q4n::Int(a);
            config.b = q4n::Int(b);
            config.out_path = out_path;
            return run_verify(config);
        }
        q4n::DumpPaths paths = q4n::dump_matrix(name, dump_out);
        std::cout << "wrote " << paths.json_path << " and " << paths.matrix_path << "\n";
        return 0;
    } catch (const q4n::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
