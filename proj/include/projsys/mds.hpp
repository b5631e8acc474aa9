#pragma once

#include <string>

namespace projsys {

/// Known value or interval for m(k,q), the maximum length of a k-dimensional MDS code.
struct MdsValue {
    long long lo = 0;
    long long hi = 0;
    bool unbounded = false;  // k = 1
    std::string rule_id;
    std::string citation;

    bool exact() const noexcept { return !unbounded && lo == hi; }
};

MdsValue m_mds(int k, int q);

}  // namespace projsys
