#include "projsys/kappa.hpp"

#include "projsys/bounds.hpp"
#include "projsys/error.hpp"
#include "projsys/integrality.hpp"

#include <algorithm>

namespace projsys {

int kappa_sweep_limit(int q) { return std::max(2 * q + 3, 12); }

namespace {

BoundQuery maximal_query(int s, int q, int k) {
    // A length-maximal code with s >= 1 has d = q(s+1) > 1 and is dual to an AMDS code.
    return BoundQuery{k, q, s, s >= 1 ? 1 : 0, q * (s + 1)};
}

}  // namespace

std::string kappa_exclusion(int s, int q, int k) {
    const long long n = integrality_length(IntegralityMode::full_length, k, q, s);
    if (auto fail = first_failure(integrality(n, k, q, s, IntegralityMode::full_length), IntegralityMode::full_length))
        return *fail;
    const auto ub = binding_upper(maximal_query(s, q, k));
    if (ub && ub->value < n) return ub->rule_id;
    return {};
}

KappaEntry kappa(int s, int q) {
    validate(BoundQuery{2, q, s, std::nullopt, std::nullopt});
    KappaEntry e;
    e.s = s;
    e.q = q;
    for (int k = 3; k <= kappa_sweep_limit(q); ++k) {
        KappaStep step;
        step.k = k;
        step.full_length = integrality_length(IntegralityMode::full_length, k, q, s);
        step.upper = upper_value(maximal_query(s, q, k));
        if (auto lb = binding_lower(BoundQuery{k, q, s, std::nullopt, std::nullopt})) {
            step.lower = lb->value;
            step.lower_rule = lb->rule_id;
            if (lb->value >= step.full_length && k > e.lower) {
                e.lower = k;
                e.lower_rule = lb->rule_id;
                e.lower_witness = lb->witness;
            }
        }
        step.exclusion = kappa_exclusion(s, q, k);
        e.steps.push_back(step);
        if (!step.exclusion.empty()) {
            if (step.lower >= step.full_length)
                throw Error(ErrorCode::RuleViolation, "k = " + std::to_string(k) + " both excluded by " + step.exclusion +
                                                          " and witnessed by " + step.lower_rule);
            e.upper = k - 1;
            e.upper_rule = step.exclusion;
            break;
        }
    }
    if (!e.upper)
        e.notes.push_back("no exclusion found for k <= " + std::to_string(kappa_sweep_limit(q)));
    if (s == 0 && q == 2)
        e.notes.push_back(
            "discrepancy: the even-weight [k+1,k,2]_2 codes are length-maximal with s = 0 for every k, so kappa(0,2) is "
            "unbounded, against the strong conjecture kappa(0,2) = 3");
    return e;
}

}  // namespace projsys
