#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lsgdd {

struct Issue {
    std::string check;
    std::string detail;
};

/// Accumulates the outcome of a structured verification run. A report with no
/// issues certifies the checked object; notes carry measured values and other
/// non-failure observations.
class Report {
public:
    void fail(std::string check, std::string detail) {
        issues_.push_back({std::move(check), std::move(detail)});
    }
    void note(std::string text) { notes_.push_back(std::move(text)); }
    void merge(const Report& other, const std::string& prefix = "") {
        for (const auto& i : other.issues_) issues_.push_back({prefix + i.check, i.detail});
        for (const auto& n : other.notes_) notes_.push_back(prefix + n);
    }

    [[nodiscard]] bool ok() const { return issues_.empty(); }
    [[nodiscard]] const std::vector<Issue>& issues() const { return issues_; }
    [[nodiscard]] const std::vector<std::string>& notes() const { return notes_; }

    [[nodiscard]] std::string to_string() const {
        std::string out;
        for (const auto& i : issues_) out += "FAIL " + i.check + ": " + i.detail + "\n";
        for (const auto& n : notes_) out += "note " + n + "\n";
        if (issues_.empty()) out += "ok\n";
        return out;
    }

private:
    std::vector<Issue> issues_;
    std::vector<std::string> notes_;
};

class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(Report report)
        : std::runtime_error(report.to_string()), report_(std::move(report)) {}
    [[nodiscard]] const Report& report() const { return report_; }

private:
    Report report_;
};

/// Throws if the report carries any failure.
inline void require_ok(const Report& report) {
    if (!report.ok()) throw VerificationError(report);
}

}  // namespace lsgdd
