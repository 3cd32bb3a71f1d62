#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace tate {

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
    std::string name;
    std::string params;
    CheckStatus status = CheckStatus::Pass;
    std::string witness;  // counterexample data on failure, note on skip
};

// Machine-readable verification outcome. Every configured check appears
// exactly once; failures carry a concrete witness.
struct Report {
    std::vector<std::string> grid;
    std::vector<CheckResult> checks;

    void pass(const std::string& name, const std::string& params);
    void fail(const std::string& name, const std::string& params, const std::string& witness);
    void skip(const std::string& name, const std::string& params, const std::string& note);
    void check(bool ok, const std::string& name, const std::string& params, const std::string& witness);

    void merge(const Report& other);
    int count(CheckStatus s) const;
    bool all_pass() const { return count(CheckStatus::Fail) == 0; }

    nlohmann::ordered_json to_json() const;
};

}  // namespace tate
