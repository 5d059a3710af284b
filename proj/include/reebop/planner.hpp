#pragma once

#include "reebop/bubbling.hpp"
#include "reebop/manifold_profile.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace reebop {

enum class VerdictStatus { Consistent, Infeasible, HypothesisNotMet, Unverifiable };

std::string to_string(VerdictStatus s);

// outcome of one restriction rule: which rule, what it concluded, and the
// concrete values that drove the conclusion
struct Verdict {
    VerdictStatus status = VerdictStatus::Consistent;
    std::string rule;
    std::string witness;
    bool operator==(const Verdict&) const = default;
};

// Unconditional restriction rules, applied to the target alone. Only
// violations are returned; an empty result means no rule rejects the target.
//   problem  - degree 0 must stay trivial, degree n must grow
//   cor1     - degree n-1 growth is always torsion-free
//   prop5    - degree n growth is always free
//   thm1     - a single torsion degree j needs j < n-1 and rank at 2j-n+1
//   thm3     - two torsion degrees: non-summand directions force ranks
//   thm7     - three torsion degrees: asymmetry forces two positive ranks
std::vector<Verdict> necessary_conditions(const TargetFamily& t);

// disjoint classes of prime powers
struct PrimePowerPartition {
    std::vector<std::vector<Int>> classes;
};

// Conditional rule thm5: each class localizes torsion to a block of degrees,
// the blocks must be ordered, and each forces a positive rank inside a
// window of degrees. Throws std::invalid_argument on a malformed partition.
Verdict check_thm5(const TargetFamily& t, const PrimePowerPartition& partition);

struct SubgroupHypothesis {
    FGAbelianGroup subgroup;    // finite
    std::vector<int> degrees;   // subset of 1..n-1
};

struct SubgroupFamily {
    std::vector<SubgroupHypothesis> entries;
};

// Conditional rule thm6: a family of finite groups, each isolated as a
// summand on exactly its stated degrees, occurring there exactly once as a
// subgroup, with odd degree-set sizes; forces ranks like thm5. Subgroup
// counting beyond order_bound yields Unverifiable. Throws
// std::invalid_argument on a malformed family.
Verdict check_thm6(const TargetFamily& t, const SubgroupFamily& family,
                   unsigned long long order_bound = default_subgroup_order_bound);

// planners either hand back a plan whose replay grows the initial disc by
// exactly the target, or a HypothesisNotMet verdict naming the failed clause
using PlanOrVerdict = std::variant<Plan, Verdict>;

// all spheres in one leading bouquet, then points; target must be free
PlanOrVerdict plan_prop3(const TargetFamily& t);

// one sphere or point per op; needs total middle rank <= rank at degree n
PlanOrVerdict plan_prop4(const TargetFamily& t);

// single torsion degree j realized by one carrier of dimension 2n-2j-1
PlanOrVerdict plan_thm2(const TargetFamily& t, const ManifoldProfile& carrier);

enum class Thm4Case { Case1a, Case1b, Case2, Case3 };

std::string to_string(Thm4Case c);

// two torsion degrees realized by two carriers; the case selects which
// summand relation between the torsion subgroups is exploited
PlanOrVerdict plan_thm4(const TargetFamily& t, const ManifoldProfile& s1,
                        const ManifoldProfile& s2, Thm4Case c);

// Backtracking search over multisets of at most max_carriers torsion
// carriers drawn from the catalog and fresh splices of its entries; exact
// degreewise torsion cover, sphere-filled rank residual, everything in the
// first op's bouquet. nullopt = search space exhausted. Throws
// std::invalid_argument on an empty catalog.
std::optional<Plan> plan_search(const TargetFamily& t,
                                const std::vector<ManifoldProfile>& catalog, int max_carriers);

// Regroups a plan's ops into rank(h) consecutive groups (the first group
// absorbs the surplus), modelling the collapse of degree-n growth onto the
// free subgroup h. Throws std::invalid_argument when h is not free,
// std::out_of_range when rank(h) is not in 1..ops.
Plan prop5_truncate(const Plan& plan, const FGAbelianGroup& h);

}  // namespace reebop
