#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "q4n/report.hpp"
#include "q4n/zlattice.hpp"

namespace q4n {

/// Suites map one-to-one onto the certified statements; "all" runs every
/// suite in declaration order.
enum class Suite { prop21, prop22, thm32, thm33, lemma42, prop44, thm45, all };

const std::vector<std::pair<Suite, std::string>>& suite_names();
Suite suite_from_name(const std::string& name);

enum class OutputFormat { text, json };

struct RunConfig {
    int n = 7;
    Int a = Int(-3);
    Int b = Int(4);
    Suite suite = Suite::all;
    OutputFormat format = OutputFormat::text;
    std::string out_path; // empty: stdout only
};

/// Invalid (n, a, b) for a suite that needs its hypotheses; CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Runs the selected checks in fixed order.  Throws ConfigError for invalid
/// configurations; individual check failures come back as failed reports.
std::vector<VerificationReport> run_suite(const RunConfig& config);

bool all_pass(const std::vector<VerificationReport>& reports);
std::string text_summary(const std::vector<VerificationReport>& reports);
nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports);

/// Writes <out_base>.json (group-ring triple encoding) and <out_base>.mat
/// (integerized plain-text form) for one of the named matrices:
/// d1, d2, phi, exotic-d2, sigma, p-basis.  Fixed at (n, a, b) = (7, -3, 4).
struct DumpPaths {
    std::string json_path;
    std::string matrix_path;
};
DumpPaths dump_matrix(const std::string& name, const std::string& out_base);

} // namespace q4n
