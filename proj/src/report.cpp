#include "tate/report.hpp"

#include <algorithm>

namespace tate {

namespace {
const char* status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        default: return "skipped";
    }
}
}  // namespace

void Report::pass(const std::string& name, const std::string& params) {
    checks.push_back({name, params, CheckStatus::Pass, ""});
}

void Report::fail(const std::string& name, const std::string& params, const std::string& witness) {
    checks.push_back({name, params, CheckStatus::Fail, witness});
}

void Report::skip(const std::string& name, const std::string& params, const std::string& note) {
    checks.push_back({name, params, CheckStatus::Skipped, note});
}

void Report::check(bool ok, const std::string& name, const std::string& params, const std::string& witness) {
    if (ok)
        pass(name, params);
    else
        fail(name, params, witness);
}

void Report::merge(const Report& other) {
    for (const std::string& g : other.grid)
        if (std::find(grid.begin(), grid.end(), g) == grid.end()) grid.push_back(g);
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

int Report::count(CheckStatus s) const {
    int n = 0;
    for (const auto& c : checks)
        if (c.status == s) ++n;
    return n;
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["grid"] = grid;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["params"] = c.params;
        e["status"] = status_str(c.status);
        if (!c.witness.empty()) e["witness"] = c.witness;
        arr.push_back(std::move(e));
    }
    j["checks"] = std::move(arr);
    j["summary"] = {{"pass", count(CheckStatus::Pass)},
                    {"fail", count(CheckStatus::Fail)},
                    {"skipped", count(CheckStatus::Skipped)}};
    return j;
}

}  // namespace tate
