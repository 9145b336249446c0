#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include <json.hpp>

namespace q4n {

/// Pass/fail certificate for one named check, tied to the statement it
/// verifies.  status is pass iff every recorded sub-assertion passed.
struct VerificationReport {
    std::string check_id;
    std::string theorem_ref;
    bool pass = false;
    nlohmann::json details = nlohmann::json::object();
    std::int64_t wall_time_ms = 0;
};

nlohmann::json report_to_json(const VerificationReport& r);

/// Accumulates named boolean sub-assertions into a report's details.
class CheckSet {
public:
    /// Records one sub-assertion; extra data is attached under the same key
    /// (counterexample payloads on failure, ranks and invariants on success).
    bool record(const std::string& name, bool ok,
                nlohmann::json extra = nlohmann::json()) {
        nlohmann::json entry;
        entry["ok"] = ok;
        if (!extra.is_null()) entry["data"] = std::move(extra);
        checks_[name] = std::move(entry);
        all_ = all_ && ok;
        return ok;
    }

    void note(const std::string& key, nlohmann::json value) {
        notes_[key] = std::move(value);
    }

    bool all() const { return all_; }

    VerificationReport finish(std::string check_id, std::string theorem_ref) const {
        VerificationReport r;
        r.check_id = std::move(check_id);
        r.theorem_ref = std::move(theorem_ref);
        r.pass = all_;
        r.details = notes_;
        r.details["checks"] = checks_;
        return r;
    }

private:
    nlohmann::json checks_ = nlohmann::json::object();
    nlohmann::json notes_ = nlohmann::json::object();
    bool all_ = true;
};

} // namespace q4n
