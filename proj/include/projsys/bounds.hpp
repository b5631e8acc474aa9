#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace projsys {

enum class Direction { upper, lower };
/// What a bound constrains: the length n, or (for a few structural results) the dimension k.
enum class Target { length, dimension };

std::string direction_name(Direction d);
std::string target_name(Target t);

inline constexpr long long kUnbounded = std::numeric_limits<long long>::max() / 4;

struct BoundQuery {
    int k = 0;
    int q = 0;
    int s = 0;
    std::optional<int> t;
    std::optional<int> d;
};

/// Throws Precondition / NotPrimePower / Unsupported on a malformed query.
void validate(const BoundQuery& query);

struct BoundResult {
    long long value = 0;
    Direction direction = Direction::upper;
    Target target = Target::length;
    std::string rule_id;
    std::string citation;
    std::vector<std::string> conditions_used;
    std::string witness;  // construction name for lower bounds, if any
    bool binding = false;
};

struct SkippedRule {
    std::string rule_id;
    std::string failed_condition;
};

/// Static description of a rule, the rows of the generated bound tables.
struct RuleInfo {
    std::string id;
    Direction direction;
    Target target;
    std::string condition;
    std::string formula;
    std::string citation;
    int table;  // 3: bounds on m^s(k,q); 4: bounds needing t; 0: neither
};

const std::vector<RuleInfo>& rule_catalog();

/// Every applicable upper bound, sorted by (target, value, rule_id). The first length-target
/// result is marked binding.
std::vector<BoundResult> upper_bounds(const BoundQuery& query);
/// Upper-bound rules that did not fire and the first condition they failed.
std::vector<SkippedRule> skipped_upper_bounds(const BoundQuery& query);

/// Every applicable lower bound on m^s(k,q), best first; ties broken by rule_id.
std::vector<BoundResult> lower_bounds(const BoundQuery& query);

/// Minimum over upper_bounds (length target); kUnbounded if nothing applies.
long long upper_value(const BoundQuery& query);
/// Maximum over lower_bounds; kUnbounded for m(1,q).
long long lower_value(const BoundQuery& query);

/// The binding upper result (length target), if any.
std::optional<BoundResult> binding_upper(const BoundQuery& query);
std::optional<BoundResult> binding_lower(const BoundQuery& query);

}  // namespace projsys
