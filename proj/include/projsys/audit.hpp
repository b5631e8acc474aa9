#pragma once

#include "projsys/projsystem.hpp"

#include <string>
#include <vector>

namespace projsys {

struct AuditCheck {
    std::string rule_id;
    std::string claim;
    bool passed = true;
    std::string detail;
};

struct AuditReport {
    CodeParams params;
    std::vector<AuditCheck> checks;  // applicable checks only

    bool passed() const noexcept;
    std::vector<std::string> failures() const;
};

/// Checks a concrete system against every applicable upper bound and forcing result.
AuditReport audit(const ProjectiveSystem& ps);

/// Throws RuleViolation naming the first failed check.
AuditReport audit_or_throw(const ProjectiveSystem& ps);

}  // namespace projsys
