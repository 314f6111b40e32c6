#pragma once

#include "f4gvm/paperdata.hpp"
#include "f4gvm/verma.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace f4gvm::paperdata {

enum class Status { Match, Mismatch, Allowlisted, Info };

const char* to_string(Status s);

struct ReportEntry {
    std::string id;  // "<section>/<table>/<row>", e.g. "M3/signature/d-=f-"
    Status status = Status::Info;
    std::string detail;
    std::string allowlist_id;  // set for Allowlisted entries
};

struct VerificationReport {
    std::string mode;  // "symbolic" or "concrete"
    std::optional<ConcreteLabels> labels;
    std::vector<ReportEntry> entries;

    std::map<Status, std::size_t> counts() const;
    /// No entry is a non-allowlisted mismatch.
    bool passed() const;
    const ReportEntry* find(const std::string& id) const;
};

struct VerifyOptions {
    const GoldenData* data = nullptr;                       // null: embedded data
    const std::vector<AllowlistEntry>* allowlist = nullptr;  // null: data's own allowlist
};

/// Classifies the main multiplet and every reduced kind over symbolic
/// labels and compares against the printed tables. In this mode every
/// allowlist entry must be exercised; an unused entry is a mismatch.
VerificationReport verify_symbolic(const VerifyOptions& opts = {});

/// Same comparison at concrete labels (all >= 1; reduced kinds pin the
/// corresponding entries to 0), plus a cross-check against the symbolic
/// classification evaluated at those labels. Throws InvalidLabels.
VerificationReport verify_concrete(const ConcreteLabels& labels, const VerifyOptions& opts = {});

} // namespace f4gvm::paperdata
