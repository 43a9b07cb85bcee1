#include "flataffine/report.hpp"

#include <sstream>

namespace flataffine {

Report::Report(std::string command)
    : command_(std::move(command)), start_(std::chrono::steady_clock::now())
{
}

void Report::add_input(const std::string& key, const std::string& value)
{
    inputs_.emplace_back(key, value);
}

void Report::add_check(const std::string& name, bool pass, const std::string& detail)
{
    checks_.push_back({name, pass, detail});
    if (!pass)
        ++failures_;
}

void Report::add_residual(const std::string& name, double value)
{
    residuals_[name] = value;
}

void Report::add_dimension(const std::string& name, long long value)
{
    residuals_[name] = value;
}

void Report::add_erratum(const std::string& note)
{
    errata_.push_back(note);
}

nlohmann::ordered_json Report::to_json() const
{
    const auto wall =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                  start_)
            .count();
    nlohmann::ordered_json doc;
    doc["command"] = command_;
    doc["status"] = ok() ? "pass" : "fail";
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : checks_) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["status"] = c.pass ? "pass" : "fail";
        if (!c.detail.empty())
            jc["detail"] = c.detail;
        checks.push_back(std::move(jc));
    }
    doc["checks"] = std::move(checks);
    doc["residuals"] = residuals_;
    doc["errata"] = errata_;
    auto inputs = nlohmann::ordered_json::object();
    for (const auto& [k, v] : inputs_)
        inputs[k] = v;
    doc["inputs"] = std::move(inputs);
    doc["wall_ms"] = wall;
    return doc;
}

std::string Report::human_summary() const
{
    std::ostringstream os;
    os << command_ << ": " << (ok() ? "PASS" : "FAIL") << " (" << checks_.size()
       << " checks, " << failures_ << " failed)\n";
    for (const auto& c : checks_) {
        os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name;
        if (!c.detail.empty())
            os << " - " << c.detail;
        os << "\n";
    }
    for (const auto& e : errata_)
        os << "  note: " << e << "\n";
    return os.str();
}

} // namespace flataffine
