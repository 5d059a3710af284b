#pragma once

#include "reebop/abelian_group.hpp"
#include "reebop/manifold_profile.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace reebop {

// one-point union of closed manifolds; empty parts = the one-point space
struct Bouquet {
    std::vector<ManifoldProfile> parts;

    bool is_point() const { return parts.empty(); }
    static Bouquet point() { return {}; }
    bool operator==(const Bouquet&) const = default;
};

// The four surgery flavours. They differ in how the new piece is glued, which
// the homology update never sees; kinds are provenance metadata on ops.
enum class OpKind { M, S, TrivialM, TrivialS };

std::string to_string(OpKind k);

struct BubblingOp {
    OpKind kind = OpKind::TrivialS;
    Bouquet polyhedron;
    bool operator==(const BubblingOp&) const = default;
};

// homology of the quotient space tracked through a surgery sequence; n is the
// target dimension and stays fixed
struct ReebState {
    int n = 1;
    std::vector<FGAbelianGroup> homology;  // degrees 0..n
    bool operator==(const ReebState&) const = default;
};

// the n-disc image of the no-singularity starting map: Z in degree 0 only
ReebState initial_disc_state(int n);

// What one bouquet part adds in one degree: its own homology shifted up by
// n - dim. Throws std::invalid_argument when dim >= n or degree is outside
// 0..n.
FGAbelianGroup contribution(const ManifoldProfile& p, int n, int degree);

// One surgery: degrees 0..n-1 gain the shifted homology of every part, and
// degree n gains exactly one Z whatever the bouquet is. Throws
// std::invalid_argument when a part has dim >= n or fails validate_profile.
ReebState apply_op(const ReebState& w, const BubblingOp& op);

struct OpLedgerEntry {
    std::size_t op_index = 0;
    std::vector<FGAbelianGroup> delta;  // degrees 0..n
};

struct Plan {
    int n = 1;
    ReebState initial;
    std::vector<BubblingOp> ops;
    bool operator==(const Plan&) const = default;
};

struct PlanReplay {
    ReebState final_state;
    std::vector<OpLedgerEntry> ledger;
};

class InvalidOperation : public std::runtime_error {
public:
    InvalidOperation(std::size_t index, const std::string& what)
        : std::runtime_error("op " + std::to_string(index) + ": " + what), op_index(index) {}
    std::size_t op_index;
};

// replays every op in order; the first invalid op aborts with its index
PlanReplay apply_plan(const Plan& plan);

// degreewise growth from `before` to `after`
struct TargetFamily {
    int n = 1;
    std::vector<FGAbelianGroup> groups;  // degrees 0..n
    bool operator==(const TargetFamily&) const = default;
};

// the degreewise complement; nullopt when some degree of `before` is not a
// summand of `after` (growth is not expressible); throws on mismatched n
std::optional<TargetFamily> delta_family(const ReebState& before, const ReebState& after);

// What the quotient determines about the source manifold in low degrees,
// under hypotheses this engine cannot check. m = source dimension; degrees
// below m - n are reported (inclusive of m - n when special_generic).
struct SourceHomologyReport {
    int source_dim = 0;
    int max_degree = 0;
    bool inclusive = false;
    std::vector<FGAbelianGroup> homology;  // degrees 0..max_degree
    std::vector<std::string> hypotheses;
};

SourceHomologyReport infer_source_homology(const ReebState& w, int m, bool special_generic);

}  // namespace reebop
