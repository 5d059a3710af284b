#include "reebop/planner.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace reebop {

std::string to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Consistent: return "Consistent";
        case VerdictStatus::Infeasible: return "Infeasible";
        case VerdictStatus::HypothesisNotMet: return "HypothesisNotMet";
        case VerdictStatus::Unverifiable: return "Unverifiable";
    }
    return "?";
}

std::string to_string(Thm4Case c) {
    switch (c) {
        case Thm4Case::Case1a: return "1a";
        case Thm4Case::Case1b: return "1b";
        case Thm4Case::Case2: return "2";
        case Thm4Case::Case3: return "3";
    }
    return "?";
}

namespace {

void validate_target(const TargetFamily& t) {
    if (t.n < 1) throw std::invalid_argument("target dimension must be >= 1");
    if (t.groups.size() != static_cast<std::size_t>(t.n) + 1)
        throw std::invalid_argument("target needs one group per degree 0.." +
                                    std::to_string(t.n));
}

const FGAbelianGroup& group_at(const TargetFamily& t, int k) {
    return t.groups[static_cast<std::size_t>(k)];
}

int count_positive_ranks(const TargetFamily& t) {
    int c = 0;
    for (int j = 1; j < t.n; ++j)
        if (group_at(t, j).rank() > 0) ++c;
    return c;
}

std::vector<int> torsion_support(const TargetFamily& t) {
    std::vector<int> s;
    for (int j = 0; j <= t.n; ++j)
        if (!group_at(t, j).torsion().empty()) s.push_back(j);
    return s;
}

Verdict verdict(VerdictStatus st, std::string rule, std::string witness) {
    return {st, std::move(rule), std::move(witness)};
}

Verdict hyp(std::string rule, std::string witness) {
    return verdict(VerdictStatus::HypothesisNotMet, std::move(rule), std::move(witness));
}

std::string deg(int j) { return std::to_string(j); }

}  // namespace

std::vector<Verdict> necessary_conditions(const TargetFamily& t) {
    validate_target(t);
    const int n = t.n;
    std::vector<Verdict> out;
    auto infeasible = [&out](std::string rule, std::string witness) {
        out.push_back(
            verdict(VerdictStatus::Infeasible, std::move(rule), std::move(witness)));
    };

    if (!group_at(t, n - 1).torsion().empty())
        infeasible("cor1", "growth at degree " + deg(n - 1) + " has torsion " +
                               group_at(t, n - 1).torsion_subgroup().to_string() +
                               "; it is always torsion-free");
    if (!group_at(t, n).torsion().empty())
        infeasible("prop5", "growth at degree " + deg(n) + " has torsion " +
                                group_at(t, n).torsion_subgroup().to_string() +
                                "; it is always free");
    if (!group_at(t, 0).is_trivial())
        infeasible("problem", "growth at degree 0 is " + group_at(t, 0).to_string() +
                                  "; the quotient stays connected, so degree 0 never grows");
    if (group_at(t, n).is_trivial())
        infeasible("problem",
                   "growth at degree " + deg(n) + " is trivial; every op adds Z there");

    const std::vector<int> support = torsion_support(t);

    if (support.size() == 1 && support[0] >= 1) {
        const int j = support[0];
        const int idx = 2 * j - n + 1;
        if (j >= n - 1)
            infeasible("thm1", "torsion only at degree " + deg(j) + " needs j < n-1 = " +
                                   deg(n - 1));
        else if (idx < 1)
            infeasible("thm1", "torsion only at degree " + deg(j) +
                                   " needs a carrier of dimension " + deg(2 * n - 2 * j - 1) +
                                   " >= " + deg(n) + " (2j-n+1 = " + deg(idx) + " < 1)");
        else if (group_at(t, idx).rank() == 0)
            infeasible("thm1", "torsion only at degree " + deg(j) +
                                   " forces positive rank at degree 2j-n+1 = " + deg(idx) +
                                   ", but rank there is 0");
    }

    if (support.size() == 2 && support[0] >= 1) {
        const int js[2] = {support[0], support[1]};
        if (js[1] >= n - 1) {
            infeasible("thm3", "torsion degrees " + deg(js[0]) + " and " + deg(js[1]) +
                                   " must both lie below n-1 = " + deg(n - 1));
        } else {
            bool fired = false;
            for (int k = 0; k < 2; ++k) {
                const int x = js[k], y = js[1 - k];
                const FGAbelianGroup tx = group_at(t, x).torsion_subgroup();
                const FGAbelianGroup ty = group_at(t, y).torsion_subgroup();
                if (is_summand(tx, ty)) continue;
                // torsion at x is not carried by straddling carriers alone,
                // so some carrier concentrates at x
                fired = true;
                const int idx = 2 * x - n + 1;
                if (idx < 1)
                    infeasible("thm3",
                               "T G_" + deg(x) + " = " + tx.to_string() +
                                   " is no summand of T G_" + deg(y) + " = " + ty.to_string() +
                                   ", forcing a carrier of dimension " +
                                   deg(2 * n - 2 * x - 1) + " >= " + deg(n));
                else if (group_at(t, idx).rank() == 0)
                    infeasible("thm3",
                               "T G_" + deg(x) + " = " + tx.to_string() +
                                   " is no summand of T G_" + deg(y) + " = " + ty.to_string() +
                                   ", forcing positive rank at degree " + deg(idx) +
                                   ", but rank there is 0");
            }
            if (fired && count_positive_ranks(t) < 2)
                infeasible("thm3", "an unshared torsion direction forces two positive-rank "
                                   "degrees below " + deg(n) + ", found " +
                                       deg(count_positive_ranks(t)));
        }
    }

    if (support.size() == 3 && support[0] >= 1 && support[2] <= n - 1) {
        const int j1 = support[0], j2 = support[1], j3 = support[2];
        const FGAbelianGroup t1 = group_at(t, j1).torsion_subgroup();
        const FGAbelianGroup t3 = group_at(t, j3).torsion_subgroup();
        if ((t1 != t3 || 2 * j2 != j1 + j3) && count_positive_ranks(t) < 2)
            infeasible("thm7",
                       "torsion at degrees {" + deg(j1) + "," + deg(j2) + "," + deg(j3) +
                           "} with T G_" + deg(j1) + " = " + t1.to_string() + ", T G_" +
                           deg(j3) + " = " + t3.to_string() + " and 2*" + deg(j2) +
                           " != " + deg(j1) + "+" + deg(j3) +
                           " forces two positive-rank degrees below " + deg(n) +
                           ", found " + deg(count_positive_ranks(t)));
    }
    return out;
}

Verdict check_thm5(const TargetFamily& t, const PrimePowerPartition& partition) {
    validate_target(t);
    const int n = t.n;
    if (partition.classes.empty())
        throw std::invalid_argument("partition needs at least one class");

    std::set<std::pair<Int, int>> seen;
    std::vector<std::vector<std::pair<Int, int>>> classes;
    for (const auto& cls : partition.classes) {
        if (cls.empty()) throw std::invalid_argument("partition classes must be non-empty");
        std::vector<std::pair<Int, int>> parsed;
        for (const Int& q : cls) {
            if (q < 2) throw std::invalid_argument("partition entries must be >= 2");
            auto f = factorize(q);
            if (f.size() != 1)
                throw std::invalid_argument("partition entry " + q.str() +
                                            " is not a prime power");
            if (!seen.insert(f.front()).second)
                throw std::invalid_argument("prime power " + q.str() +
                                            " occurs twice in the partition");
            parsed.push_back(f.front());
        }
        classes.push_back(std::move(parsed));
    }

    // degree blocks per class, required to be non-empty and ordered left to right
    std::vector<std::pair<int, int>> blocks;  // (min, max) degree per class
    for (std::size_t i = 0; i < classes.size(); ++i) {
        int lo = n + 1, hi = -1;
        for (int j = 0; j <= n; ++j)
            for (const TorsionFactor& f : group_at(t, j).torsion())
                for (const auto& pe : classes[i])
                    if (f.prime == pe.first && f.exponent == pe.second) {
                        lo = std::min(lo, j);
                        hi = std::max(hi, j);
                    }
        if (hi < 0)
            return hyp("thm5", "no prime power of class " + std::to_string(i + 1) +
                                   " occurs in the target torsion");
        blocks.emplace_back(lo, hi);
    }
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i)
        if (blocks[i].second >= blocks[i + 1].first)
            return hyp("thm5", "class " + std::to_string(i + 1) + " (degrees " +
                                   deg(blocks[i].first) + ".." + deg(blocks[i].second) +
                                   ") does not precede class " + std::to_string(i + 2) +
                                   " (degrees " + deg(blocks[i + 1].first) + ".." +
                                   deg(blocks[i + 1].second) + ")");

    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const int lo = std::max(2 * blocks[i].first - n + 1, 1);
        const int hi = std::min(2 * blocks[i].second - n + 1, n - 1);
        if (lo > hi)
            return verdict(VerdictStatus::Infeasible, "thm5",
                           "class " + std::to_string(i + 1) + " needs positive rank in the "
                           "empty window [" + deg(2 * blocks[i].first - n + 1) + "," +
                               deg(2 * blocks[i].second - n + 1) + "] within 1.." +
                               deg(n - 1));
        bool found = false;
        for (int j = lo; j <= hi && !found; ++j)
            if (group_at(t, j).rank() > 0) found = true;
        if (!found)
            return verdict(VerdictStatus::Infeasible, "thm5",
                           "class " + std::to_string(i + 1) +
                               " forces positive rank in degrees [" + deg(lo) + "," + deg(hi) +
                               "], all of which have rank 0");
    }
    if (count_positive_ranks(t) < static_cast<int>(classes.size()))
        return verdict(VerdictStatus::Infeasible, "thm5",
                       std::to_string(classes.size()) +
                           " classes force as many positive-rank degrees below " + deg(n) +
                           ", found " + deg(count_positive_ranks(t)));
    return verdict(VerdictStatus::Consistent, "thm5",
                   std::to_string(classes.size()) + " ordered classes, each with rank support");
}

Verdict check_thm6(const TargetFamily& t, const SubgroupFamily& family,
                   unsigned long long order_bound) {
    validate_target(t);
    const int n = t.n;
    if (family.entries.empty())
        throw std::invalid_argument("subgroup family needs at least one entry");
    for (const SubgroupHypothesis& e : family.entries) {
        if (e.subgroup.rank() > 0)
            throw std::invalid_argument("family group " + e.subgroup.to_string() +
                                        " must be finite");
        if (e.subgroup.is_trivial())
            throw std::invalid_argument("family groups must be non-trivial");
        if (e.degrees.empty())
            throw std::invalid_argument("family degree sets must be non-empty");
        for (int j : e.degrees)
            if (j < 1 || j > n - 1)
                throw std::invalid_argument("family degree " + deg(j) + " outside 1.." +
                                            deg(n - 1));
    }

    const auto& entries = family.entries;
    for (std::size_t a = 0; a < entries.size(); ++a)
        for (std::size_t b = a + 1; b < entries.size(); ++b) {
            if (entries[a].subgroup == entries[b].subgroup)
                return hyp("thm6", "family groups " + std::to_string(a + 1) + " and " +
                                       std::to_string(b + 1) + " are both " +
                                       entries[a].subgroup.to_string());
            if (entries[a].degrees == entries[b].degrees)
                return hyp("thm6", "family degree sets " + std::to_string(a + 1) + " and " +
                                       std::to_string(b + 1) + " coincide");
        }

    for (std::size_t a = 0; a < entries.size(); ++a) {
        const FGAbelianGroup& h = entries[a].subgroup;
        std::vector<int> degrees = entries[a].degrees;
        std::sort(degrees.begin(), degrees.end());

        std::vector<int> actual;
        for (int j = 1; j <= n - 1; ++j)
            if (is_summand(h, group_at(t, j))) actual.push_back(j);
        if (actual != degrees) {
            auto render = [](const std::vector<int>& v) {
                std::string s = "{";
                for (std::size_t i = 0; i < v.size(); ++i)
                    s += (i ? "," : "") + deg(v[i]);
                return s + "}";
            };
            return hyp("thm6", entries[a].subgroup.to_string() + " is a summand exactly at " +
                                   render(actual) + ", family says " + render(degrees));
        }

        for (int j : degrees) {
            const FGAbelianGroup rest = *complement(h, group_at(t, j));
            if (shares_canonical_factor(h, rest))
                return hyp("thm6", h.to_string() + " shares a canonical factor with its "
                                   "complement " + rest.torsion_subgroup().to_string() +
                                       " at degree " + deg(j));
        }
        for (int j = 1; j <= n - 1; ++j) {
            if (std::binary_search(degrees.begin(), degrees.end(), j)) continue;
            if (shares_canonical_factor(h, group_at(t, j)))
                return hyp("thm6", h.to_string() + " shares a canonical factor with G_" +
                                       deg(j) + " = " + group_at(t, j).to_string() +
                                       " off its degree set");
        }
        for (int j : degrees) {
            auto cnt = count_subgroups_isomorphic_to(group_at(t, j), h, order_bound);
            if (!cnt)
                return verdict(VerdictStatus::Unverifiable, "thm6",
                               "torsion of G_" + deg(j) + " (order " +
                                   group_at(t, j).torsion_order().str() +
                                   ") exceeds the counting bound " +
                                   std::to_string(order_bound));
            if (*cnt != 1)
                return hyp("thm6", "G_" + deg(j) + " = " + group_at(t, j).to_string() +
                                       " contains " + std::to_string(*cnt) + " subgroups " +
                                       h.to_string() + ", needs exactly 1");
        }
        if (degrees.size() % 2 == 0)
            return hyp("thm6", "degree set of " + h.to_string() + " has even size " +
                                   std::to_string(degrees.size()));
    }

    for (const SubgroupHypothesis& e : entries) {
        bool found = false;
        int witness_idx = 0;
        for (int j : e.degrees) {
            const int idx = 2 * j - n + 1;
            witness_idx = idx;
            if (idx >= 1 && idx <= n - 1 && group_at(t, idx).rank() > 0) {
                found = true;
                break;
            }
        }
        if (!found)
            return verdict(VerdictStatus::Infeasible, "thm6",
                           e.subgroup.to_string() +
                               " forces positive rank at some degree 2j-n+1 over its degree "
                               "set (last tried " + deg(witness_idx) + "), found none");
    }
    if (count_positive_ranks(t) < static_cast<int>(entries.size()))
        return verdict(VerdictStatus::Infeasible, "thm6",
                       std::to_string(entries.size()) +
                           " family groups force as many positive-rank degrees below " +
                           deg(n) + ", found " + deg(count_positive_ranks(t)));
    return verdict(VerdictStatus::Consistent, "thm6",
                   std::to_string(entries.size()) +
                       " isolated summand groups, each with rank support");
}

// ---------------------------------------------------------------------------
// planners

namespace {

// degrees 1..n-1 a bouquet of parts adds, split off degree n
std::vector<FGAbelianGroup> contribution_family(const std::vector<ManifoldProfile>& parts,
                                                int n) {
    std::vector<FGAbelianGroup> c(static_cast<std::size_t>(n));
    for (const ManifoldProfile& p : parts)
        for (int j = 1; j < n; ++j)
            c[static_cast<std::size_t>(j)] =
                direct_sum(c[static_cast<std::size_t>(j)], contribution(p, n, j));
    return c;
}

struct StructuralFailure {
    std::string witness;
};

std::optional<StructuralFailure> structural_check(const TargetFamily& t) {
    if (!group_at(t, 0).is_trivial())
        return StructuralFailure{"growth at degree 0 must be trivial, got " +
                                 group_at(t, 0).to_string()};
    if (group_at(t, t.n).is_trivial())
        return StructuralFailure{"growth at degree " + deg(t.n) +
                                 " must be non-trivial, one Z per op"};
    if (!group_at(t, t.n).is_free())
        return StructuralFailure{"growth at degree " + deg(t.n) + " must be free, got " +
                                 group_at(t, t.n).to_string()};
    return std::nullopt;
}

// carriers and spheres lead in one bouquet; the remaining ops are points
Plan assemble_plan(const TargetFamily& t, std::vector<ManifoldProfile> parts, OpKind kind) {
    const int n = t.n;
    Plan plan;
    plan.n = n;
    plan.initial = initial_disc_state(n);
    const int op_count = group_at(t, n).rank();
    plan.ops.reserve(static_cast<std::size_t>(op_count));
    plan.ops.push_back({kind, Bouquet{std::move(parts)}});
    for (int i = 1; i < op_count; ++i) plan.ops.push_back({kind, Bouquet::point()});
    return plan;
}

// per-degree free residual once the carriers are placed; nullopt with a
// witness degree when the carriers overshoot or leave torsion uncovered
std::optional<std::vector<int>> sphere_residual(const TargetFamily& t,
                                                const std::vector<FGAbelianGroup>& carried,
                                                int* bad_degree) {
    std::vector<int> counts(static_cast<std::size_t>(t.n), 0);
    for (int j = 1; j < t.n; ++j) {
        auto rest = complement(carried[static_cast<std::size_t>(j)], group_at(t, j));
        if (!rest || !rest->is_free()) {
            if (bad_degree) *bad_degree = j;
            return std::nullopt;
        }
        counts[static_cast<std::size_t>(j)] = rest->rank();
    }
    return counts;
}

void append_spheres(std::vector<ManifoldProfile>& parts, const std::vector<int>& counts,
                    int n) {
    for (int j = 1; j < n; ++j)
        for (int c = 0; c < counts[static_cast<std::size_t>(j)]; ++c)
            parts.push_back(sphere_profile(n - j));
}

void verify_realizes(const Plan& plan, const TargetFamily& t) {
    PlanReplay replay = apply_plan(plan);
    auto d = delta_family(plan.initial, replay.final_state);
    if (!d || !(*d == t)) throw std::logic_error("constructed plan fails its own replay");
}

// a carrier hypothesis: dimension, middle homology pinned at given degrees,
// everything else trivial
std::optional<Verdict> check_carrier(const std::string& rule, const ManifoldProfile& s,
                                      int n, int want_dim,
                                      const std::vector<std::pair<int, FGAbelianGroup>>& middles) {
    if (auto v = validate_profile(s))
        return hyp(rule, "carrier '" + s.name + "' fails validation (" + v->law + ": " +
                             v->detail + ")");
    if (s.dim != want_dim)
        return hyp(rule, "carrier '" + s.name + "' has dimension " + deg(s.dim) +
                             ", the construction needs " + deg(want_dim));
    if (s.dim >= n)
        return hyp(rule, "carrier '" + s.name + "' has dimension " + deg(s.dim) +
                             " >= n = " + deg(n));
    if (s.embeds_in && *s.embeds_in > n)
        return hyp(rule, "carrier '" + s.name + "' only embeds in dimension " +
                             deg(*s.embeds_in) + " > n = " + deg(n));
    for (int c = 1; c < s.dim; ++c) {
        const FGAbelianGroup* want = nullptr;
        for (const auto& [d, g] : middles)
            if (d == c) want = &g;
        if (want) {
            if (s.h(c) != *want)
                return hyp(rule, "carrier '" + s.name + "' has H_" + deg(c) + " = " +
                                     s.h(c).to_string() + ", needs " + want->to_string());
        } else if (!s.h(c).is_trivial()) {
            return hyp(rule, "carrier '" + s.name + "' has H_" + deg(c) + " = " +
                                 s.h(c).to_string() + ", needs 0");
        }
    }
    return std::nullopt;
}

}  // namespace

PlanOrVerdict plan_prop3(const TargetFamily& t) {
    validate_target(t);
    if (auto f = structural_check(t)) return hyp("prop3", f->witness);
    for (int j = 1; j < t.n; ++j)
        if (!group_at(t, j).is_free())
            return hyp("prop3", "growth at degree " + deg(j) + " is " +
                                    group_at(t, j).to_string() +
                                    "; this construction only reaches free growth");
    std::vector<ManifoldProfile> parts;
    for (int j = 1; j < t.n; ++j)
        for (int c = 0; c < group_at(t, j).rank(); ++c) parts.push_back(sphere_profile(t.n - j));
    Plan plan = assemble_plan(t, std::move(parts), OpKind::TrivialS);
    verify_realizes(plan, t);
    return plan;
}

PlanOrVerdict plan_prop4(const TargetFamily& t) {
    validate_target(t);
    if (auto f = structural_check(t)) return hyp("prop4", f->witness);
    int middle_rank = 0;
    for (int j = 1; j < t.n; ++j) {
        if (!group_at(t, j).is_free())
            return hyp("prop4", "growth at degree " + deg(j) + " is " +
                                    group_at(t, j).to_string() +
                                    "; this construction only reaches free growth");
        middle_rank += group_at(t, j).rank();
    }
    const int op_count = group_at(t, t.n).rank();
    if (middle_rank > op_count)
        return hyp("prop4", "one sphere per op needs total middle rank " + deg(middle_rank) +
                                " <= rank at degree " + deg(t.n) + " = " + deg(op_count));
    Plan plan;
    plan.n = t.n;
    plan.initial = initial_disc_state(t.n);
    for (int j = 1; j < t.n; ++j)
        for (int c = 0; c < group_at(t, j).rank(); ++c)
            plan.ops.push_back({OpKind::TrivialS, Bouquet{{sphere_profile(t.n - j)}}});
    for (int i = middle_rank; i < op_count; ++i)
        plan.ops.push_back({OpKind::TrivialS, Bouquet::point()});
    verify_realizes(plan, t);
    return plan;
}

PlanOrVerdict plan_thm2(const TargetFamily& t, const ManifoldProfile& carrier) {
    validate_target(t);
    const int n = t.n;
    if (auto f = structural_check(t)) return hyp("thm2", f->witness);
    const std::vector<int> support = torsion_support(t);
    if (support.size() != 1)
        return hyp("thm2", "this construction needs torsion at exactly one degree, found " +
                               std::to_string(support.size()));
    const int j = support[0];
    if (j > n - 2)
        return hyp("thm2", "torsion at degree " + deg(j) + " is never realized (degrees " +
                               deg(n - 1) + " and " + deg(n) + " stay torsion-free)");
    if (auto v = check_carrier("thm2", carrier, n, 2 * n - 2 * j - 1,
                               {{n - j - 1, group_at(t, j).torsion_subgroup()}}))
        return *v;
    const int idx = 2 * j - n + 1;
    if (group_at(t, idx).rank() == 0)
        return hyp("thm2", "the carrier lands one Z at degree 2j-n+1 = " + deg(idx) +
                               ", but the target rank there is 0");

    std::vector<ManifoldProfile> parts{carrier};
    int bad = 0;
    auto residual = sphere_residual(t, contribution_family(parts, n), &bad);
    if (!residual)
        return hyp("thm2", "carrier growth at degree " + deg(bad) +
                               " is no summand of the target there");
    append_spheres(parts, *residual, n);
    Plan plan = assemble_plan(t, std::move(parts), OpKind::TrivialM);
    verify_realizes(plan, t);
    return plan;
}

PlanOrVerdict plan_thm4(const TargetFamily& t, const ManifoldProfile& s1,
                        const ManifoldProfile& s2, Thm4Case c) {
    validate_target(t);
    const int n = t.n;
    if (auto f = structural_check(t)) return hyp("thm4", f->witness);
    const std::vector<int> support = torsion_support(t);
    if (support.size() != 2)
        return hyp("thm4", "this construction needs torsion at exactly two degrees, found " +
                               std::to_string(support.size()));
    const int j1 = support[0], j2 = support[1];
    if (j2 > n - 2)
        return hyp("thm4", "torsion at degree " + deg(j2) + " is never realized (degrees " +
                               deg(n - 1) + " and " + deg(n) + " stay torsion-free)");
    const FGAbelianGroup a = group_at(t, j1).torsion_subgroup();
    const FGAbelianGroup b = group_at(t, j2).torsion_subgroup();

    const std::string case_name = "case " + to_string(c);
    std::optional<Verdict> bad;
    switch (c) {
        case Thm4Case::Case1a:
        case Thm4Case::Case1b: {
            const bool guard = c == Thm4Case::Case1a ? !is_summand(a, b) : !is_summand(b, a);
            if (!guard)
                return hyp("thm4", case_name + " needs T G_" +
                                       deg(c == Thm4Case::Case1a ? j1 : j2) +
                                       " to be no summand of the other torsion subgroup");
            bad = check_carrier("thm4", s1, n, 2 * n - 2 * j1 - 1, {{n - j1 - 1, a}});
            if (!bad) bad = check_carrier("thm4", s2, n, 2 * n - 2 * j2 - 1, {{n - j2 - 1, b}});
            break;
        }
        case Thm4Case::Case2: {
            auto rest = complement(a, b);
            if (!rest)
                return hyp("thm4", case_name + " needs T G_" + deg(j1) + " = " + a.to_string() +
                                       " to be a summand of T G_" + deg(j2) + " = " +
                                       b.to_string());
            bad = check_carrier("thm4", s1, n, 2 * n - 2 * j2 - 1,
                                {{n - j2 - 1, rest->torsion_subgroup()}});
            if (!bad)
                bad = check_carrier("thm4", s2, n, 2 * n - j1 - j2 - 1,
                                    {{n - j2 - 1, a}, {n - j1 - 1, a}});
            break;
        }
        case Thm4Case::Case3: {
            auto rest = complement(b, a);
            if (!rest)
                return hyp("thm4", case_name + " needs T G_" + deg(j2) + " = " + b.to_string() +
                                       " to be a summand of T G_" + deg(j1) + " = " +
                                       a.to_string());
            bad = check_carrier("thm4", s1, n, 2 * n - 2 * j1 - 1,
                                {{n - j1 - 1, rest->torsion_subgroup()}});
            if (!bad)
                bad = check_carrier("thm4", s2, n, 2 * n - j1 - j2 - 1,
                                    {{n - j2 - 1, b}, {n - j1 - 1, b}});
            break;
        }
    }
    if (bad) return *bad;

    std::vector<ManifoldProfile> parts{s1, s2};
    int bad_degree = 0;
    auto residual = sphere_residual(t, contribution_family(parts, n), &bad_degree);
    if (!residual)
        return hyp("thm4", "carrier growth at degree " + deg(bad_degree) +
                               " is no summand of the target there");
    append_spheres(parts, *residual, n);
    Plan plan = assemble_plan(t, std::move(parts), OpKind::TrivialM);
    verify_realizes(plan, t);
    return plan;
}

namespace {

struct SearchCandidate {
    ManifoldProfile profile;
    std::vector<FGAbelianGroup> contrib;  // degrees 1..n-1
    Int torsion_weight;
};

}  // namespace

std::optional<Plan> plan_search(const TargetFamily& t,
                                const std::vector<ManifoldProfile>& catalog,
                                int max_carriers) {
    validate_target(t);
    if (catalog.empty()) throw std::invalid_argument("search needs a non-empty catalog");
    if (max_carriers < 0) throw std::invalid_argument("max_carriers must be >= 0");
    const int n = t.n;
    if (structural_check(t)) return std::nullopt;
    if (!group_at(t, n - 1).torsion().empty()) return std::nullopt;

    // candidate pool: torsion carriers from the catalog plus fresh splices of
    // its eligible entries, deduplicated by shape
    std::vector<SearchCandidate> pool;
    std::set<std::pair<int, std::string>> shapes;  // (dim, rendered homology)
    auto shape_key = [](const ManifoldProfile& p) {
        std::string s;
        for (const FGAbelianGroup& g : p.homology) s += g.to_string() + "|";
        return std::pair<int, std::string>{p.dim, s};
    };
    auto consider = [&](const ManifoldProfile& p) {
        if (validate_profile(p)) return;
        if (p.dim >= n) return;
        if (p.embeds_in && *p.embeds_in > n) return;
        bool torsion = false;
        for (const FGAbelianGroup& g : p.homology) torsion = torsion || !g.torsion().empty();
        if (!torsion) return;
        if (!shapes.insert(shape_key(p)).second) return;
        SearchCandidate c;
        c.profile = p;
        c.contrib = contribution_family({p}, n);
        c.torsion_weight = 1;
        for (const FGAbelianGroup& g : p.homology) c.torsion_weight *= g.torsion_order();
        pool.push_back(std::move(c));
    };
    for (const ManifoldProfile& p : catalog) consider(p);
    for (const ManifoldProfile& p : catalog) {
        if (validate_profile(p) || p.dim < 3 || p.dim % 2 == 0) continue;
        const int mid = (p.dim - 1) / 2;
        bool eligible = p.h(mid).rank() == 0 && !p.h(mid).is_trivial();
        for (int j = 1; j < p.dim && eligible; ++j)
            if (j != mid && !p.h(j).is_trivial()) eligible = false;
        if (!eligible) continue;
        for (int k2 = 2; p.dim + k2 - 1 <= n - 1; ++k2)
            consider(lemma1_transform(p, k2));
    }
    std::stable_sort(pool.begin(), pool.end(),
                     [](const SearchCandidate& a, const SearchCandidate& b) {
                         if (a.torsion_weight != b.torsion_weight)
                             return a.torsion_weight > b.torsion_weight;
                         return a.profile.name < b.profile.name;
                     });

    std::vector<FGAbelianGroup> acc(static_cast<std::size_t>(n));
    std::vector<const SearchCandidate*> chosen;
    std::optional<Plan> found;

    auto torsion_matches = [&]() {
        for (int j = 1; j < n; ++j)
            if (acc[static_cast<std::size_t>(j)].torsion() !=
                group_at(t, j).torsion())
                return false;
        return true;
    };

    std::function<bool(std::size_t, int)> dfs = [&](std::size_t start, int left) -> bool {
        if (torsion_matches()) {
            std::vector<ManifoldProfile> parts;
            for (const SearchCandidate* c : chosen) parts.push_back(c->profile);
            int bad = 0;
            if (auto residual = sphere_residual(t, acc, &bad)) {
                append_spheres(parts, *residual, n);
                Plan plan = assemble_plan(t, std::move(parts), OpKind::TrivialM);
                verify_realizes(plan, t);
                found = std::move(plan);
                return true;
            }
        }
        if (left == 0) return false;
        for (std::size_t i = start; i < pool.size(); ++i) {
            const SearchCandidate& c = pool[i];
            std::vector<FGAbelianGroup> saved = acc;
            bool ok = true;
            for (int j = 1; j < n && ok; ++j) {
                acc[static_cast<std::size_t>(j)] = direct_sum(
                    acc[static_cast<std::size_t>(j)], c.contrib[static_cast<std::size_t>(j)]);
                ok = is_summand(acc[static_cast<std::size_t>(j)].torsion_subgroup(),
                                group_at(t, j).torsion_subgroup()) &&
                     acc[static_cast<std::size_t>(j)].rank() <= group_at(t, j).rank();
            }
            if (ok) {
                chosen.push_back(&c);
                if (dfs(i, left - 1)) return true;
                chosen.pop_back();
            }
            acc = std::move(saved);
        }
        return false;
    };
    dfs(0, max_carriers);
    return found;
}

Plan prop5_truncate(const Plan& plan, const FGAbelianGroup& h) {
    if (!h.is_free())
        throw std::invalid_argument("truncation subgroup must be free, got " + h.to_string());
    const int r = h.rank();
    if (r < 1 || static_cast<std::size_t>(r) > plan.ops.size())
        throw std::out_of_range("truncation rank " + std::to_string(r) + " outside 1.." +
                                std::to_string(plan.ops.size()));
    const std::size_t first_group = plan.ops.size() - static_cast<std::size_t>(r) + 1;
    Plan out;
    out.n = plan.n;
    out.initial = plan.initial;
    std::size_t i = 0;
    while (i < plan.ops.size()) {
        const std::size_t group = i == 0 ? first_group : 1;
        BubblingOp merged = plan.ops[i];
        for (std::size_t k = 1; k < group; ++k) {
            const BubblingOp& next = plan.ops[i + k];
            merged.polyhedron.parts.insert(merged.polyhedron.parts.end(),
                                           next.polyhedron.parts.begin(),
                                           next.polyhedron.parts.end());
            if (next.kind != merged.kind) merged.kind = OpKind::M;
        }
        out.ops.push_back(std::move(merged));
        i += group;
    }
    return out;
}

}  // namespace reebop
