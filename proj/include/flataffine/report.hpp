#pragma once

#include <json.hpp>

#include <chrono>
#include <string>
#include <vector>

namespace flataffine {

/// Result document of one CLI command: machine-readable JSON on demand plus a
/// short human summary. Key order is fixed: command, status, checks, residuals,
/// errata, inputs, wall_ms.
class Report {
public:
    explicit Report(std::string command);

    void add_input(const std::string& key, const std::string& value);
    void add_check(const std::string& name, bool pass, const std::string& detail = "");
    void add_residual(const std::string& name, double value);
    void add_dimension(const std::string& name, long long value);
    void add_erratum(const std::string& note);

    bool ok() const { return failures_ == 0; }
    int exit_code() const { return ok() ? 0 : 1; }

    nlohmann::ordered_json to_json() const;
    std::string human_summary() const;

private:
    struct Check {
        std::string name;
        bool pass;
        std::string detail;
    };

    std::string command_;
    std::vector<std::pair<std::string, std::string>> inputs_;
    std::vector<Check> checks_;
    nlohmann::ordered_json residuals_ = nlohmann::ordered_json::object();
    std::vector<std::string> errata_;
    std::size_t failures_ = 0;
    std::chrono::steady_clock::time_point start_;
};

} // namespace flataffine
