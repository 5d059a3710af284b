#include "reebop/bubbling.hpp"

namespace reebop {

std::string to_string(OpKind k) {
    switch (k) {
        case OpKind::M: return "M";
        case OpKind::S: return "S";
        case OpKind::TrivialM: return "trivial-M";
        case OpKind::TrivialS: return "trivial-S";
    }
    return "?";
}

ReebState initial_disc_state(int n) {
    if (n < 1) throw std::invalid_argument("target dimension must be >= 1");
    ReebState w;
    w.n = n;
    w.homology.assign(static_cast<std::size_t>(n) + 1, FGAbelianGroup{});
    w.homology[0] = FGAbelianGroup::free_group(1);
    return w;
}

FGAbelianGroup contribution(const ManifoldProfile& p, int n, int degree) {
    if (p.dim >= n)
        throw std::invalid_argument("part '" + p.name + "' has dim " + std::to_string(p.dim) +
                                    ", needs dim < " + std::to_string(n));
    if (degree < 0 || degree > n)
        throw std::invalid_argument("degree " + std::to_string(degree) + " out of range 0.." +
                                    std::to_string(n));
    if (degree == n) return {};
    return p.h(degree - (n - p.dim));
}

ReebState apply_op(const ReebState& w, const BubblingOp& op) {
    const int n = w.n;
    for (const ManifoldProfile& p : op.polyhedron.parts) {
        if (p.dim >= n)
            throw std::invalid_argument("part '" + p.name + "' has dim " + std::to_string(p.dim) +
                                        ", needs dim < " + std::to_string(n));
        if (auto v = validate_profile(p))
            throw std::invalid_argument("part '" + p.name + "' fails validation (" + v->law +
                                        " at degree " + std::to_string(v->degree) + ": " +
                                        v->detail + ")");
    }
    ReebState out = w;
    for (int i = 0; i < n; ++i)
        for (const ManifoldProfile& p : op.polyhedron.parts)
            out.homology[static_cast<std::size_t>(i)] =
                direct_sum(out.homology[static_cast<std::size_t>(i)], contribution(p, n, i));
    out.homology[static_cast<std::size_t>(n)] =
        direct_sum(out.homology[static_cast<std::size_t>(n)], FGAbelianGroup::free_group(1));
    return out;
}

PlanReplay apply_plan(const Plan& plan) {
    if (plan.initial.n != plan.n)
        throw std::invalid_argument("plan dimension differs from its initial state");
    if (plan.initial.homology.size() != static_cast<std::size_t>(plan.n) + 1)
        throw std::invalid_argument("initial state has the wrong number of degrees");
    PlanReplay r;
    r.final_state = plan.initial;
    for (std::size_t i = 0; i < plan.ops.size(); ++i) {
        ReebState next;
        try {
            next = apply_op(r.final_state, plan.ops[i]);
        } catch (const std::invalid_argument& e) {
            throw InvalidOperation(i, e.what());
        }
        OpLedgerEntry entry;
        entry.op_index = i;
        entry.delta.reserve(static_cast<std::size_t>(plan.n) + 1);
        for (int k = 0; k <= plan.n; ++k) {
            auto d = complement(r.final_state.homology[static_cast<std::size_t>(k)],
                                next.homology[static_cast<std::size_t>(k)]);
            entry.delta.push_back(d ? *d : FGAbelianGroup{});
        }
        r.ledger.push_back(std::move(entry));
        r.final_state = std::move(next);
    }
    return r;
}

std::optional<TargetFamily> delta_family(const ReebState& before, const ReebState& after) {
    if (before.n != after.n)
        throw std::invalid_argument("states live over different target dimensions");
    TargetFamily t;
    t.n = before.n;
    for (int k = 0; k <= before.n; ++k) {
        auto d = complement(before.homology[static_cast<std::size_t>(k)],
                            after.homology[static_cast<std::size_t>(k)]);
        if (!d) return std::nullopt;
        t.groups.push_back(std::move(*d));
    }
    return t;
}

SourceHomologyReport infer_source_homology(const ReebState& w, int m, bool special_generic) {
    const int k = m - w.n;
    if (k <= 1)
        throw std::invalid_argument("source dimension must exceed the target dimension by >= 2");
    SourceHomologyReport r;
    r.source_dim = m;
    r.inclusive = special_generic;
    r.max_degree = special_generic ? k : k - 1;
    for (int l = 0; l <= r.max_degree; ++l)
        r.homology.push_back(l <= w.n ? w.homology[static_cast<std::size_t>(l)]
                                      : FGAbelianGroup{});
    r.hypotheses = {"the map is a simple fold map (its singular-value set is embedded)",
                    "regular fibres are disjoint unions of almost-spheres",
                    "every fold has index 0 or 1"};
    if (special_generic)
        r.hypotheses.emplace_back("the map is special generic (all folds are definite)");
    return r;
}

}  // namespace reebop
