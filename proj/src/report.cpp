#include "alcove/report.hpp"

#include <algorithm>
#include <sstream>

namespace alcove {

void VerificationReport::append(const VerificationReport& other, const std::string& prefix) {
    for (CheckItem it : other.items) {
        if (!prefix.empty()) it.id = prefix + "/" + it.id;
        items.push_back(std::move(it));
    }
    runtime_seconds += other.runtime_seconds;
}

int VerificationReport::passed() const {
    return static_cast<int>(std::count_if(items.begin(), items.end(), [](const CheckItem& c) { return c.passed; }));
}

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json items = nlohmann::json::array();
    for (const CheckItem& c : r.items) {
        nlohmann::json j{{"id", c.id}, {"anchor", c.anchor}, {"status", c.passed ? "pass" : "fail"}};
        if (!c.witness.is_null()) j["witness"] = c.witness;
        items.push_back(j);
    }
    return {{"schema_version", kReportSchemaVersion},
            {"suite", r.suite},
            {"items", items},
            {"totals", {{"passed", r.passed()}, {"failed", r.failed()}, {"total", r.items.size()}}},
            {"runtime_seconds", r.runtime_seconds}};
}

VerificationReport report_from_json(const nlohmann::json& j) {
    VerificationReport r;
    r.suite = j.at("suite").get<std::string>();
    r.runtime_seconds = j.value("runtime_seconds", 0.0);
    for (const auto& it : j.at("items")) {
        r.add(it.at("id").get<std::string>(), it.at("anchor").get<std::string>(),
              it.at("status").get<std::string>() == "pass", it.value("witness", nlohmann::json()));
    }
    return r;
}

std::string render_text(const VerificationReport& r, bool verbose) {
    std::ostringstream os;
    os << "suite " << r.suite << ": " << r.passed() << "/" << r.items.size() << " passed";
    if (r.runtime_seconds > 0) os << " (" << r.runtime_seconds << " s)";
    os << "\n";
    for (const CheckItem& c : r.items) {
        if (!verbose && c.passed) continue;
        os << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.id << " -- " << c.anchor << "\n";
        if (!c.passed && !c.witness.is_null()) os << "      witness: " << c.witness.dump() << "\n";
    }
    return os.str();
}

}  // namespace alcove
