#pragma once

#include "json.hpp"

#include <string>
#include <vector>

namespace alcove {

struct CheckItem {
    std::string id;
    std::string anchor;   // the statement being checked, in words
    bool passed = false;
    nlohmann::json witness;  // populated for failures, optional otherwise
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckItem> items;
    double runtime_seconds = 0.0;

    void add(std::string id, std::string anchor, bool passed, nlohmann::json witness = nullptr) {
        // A failure always carries a witness, even if the check only produced a boolean.
        if (!passed && witness.is_null()) witness = nlohmann::json{{"holds", false}};
        items.push_back({std::move(id), std::move(anchor), passed, std::move(witness)});
    }
    void append(const VerificationReport& other, const std::string& prefix = "");
    int passed() const;
    int failed() const { return static_cast<int>(items.size()) - passed(); }
    bool ok() const { return failed() == 0; }
};

inline constexpr int kReportSchemaVersion = 1;

nlohmann::json to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);
std::string render_text(const VerificationReport& r, bool verbose = false);

}  // namespace alcove
