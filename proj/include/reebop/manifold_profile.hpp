#pragma once

#include "reebop/abelian_group.hpp"

#include <optional>
#include <string>
#include <vector>

namespace reebop {

// A closed connected orientable manifold described only by its name, its
// dimension, its integral homology in every degree, and (optionally) a
// codimension witness: the smallest Euclidean dimension it is asserted to
// embed in. The homology sequence is the profile's identity; names are labels.
struct ManifoldProfile {
    std::string name;
    int dim = 0;
    std::vector<FGAbelianGroup> homology;  // degrees 0..dim
    std::optional<int> embeds_in;

    const FGAbelianGroup& h(int k) const;  // trivial group outside 0..dim
    bool operator==(const ManifoldProfile&) const = default;
};

struct ProfileViolation {
    int degree = 0;
    std::string law;     // which consistency law failed
    std::string detail;  // the offending values
};

// Closed-orientable consistency laws: homology sized dim+1, H_0 = H_dim = Z,
// rank symmetry rank H_k = rank H_{dim-k}, torsion symmetry
// T H_k = T H_{dim-k-1}, embeds_in > dim when present. First failure reported.
std::optional<ProfileViolation> validate_profile(const ManifoldProfile& p);

// builtins; each throws std::invalid_argument carrying the violation if the
// requested parameters produce an inconsistent profile
ManifoldProfile sphere_profile(int d);                          // d >= 1
ManifoldProfile lens_profile(const Int& p);                     // p >= 2
ManifoldProfile barden5_profile(const FGAbelianGroup& t);       // t finite
ManifoldProfile crowley7_profile(const FGAbelianGroup& t);      // t finite

// degreewise merge of middle homology; requires equal dimensions
ManifoldProfile connected_sum_profile(const ManifoldProfile& a, const ManifoldProfile& b);

// Splice construction: input of odd dimension 2a+1 with homology vanishing in
// degrees 0 < j < a and a < j < 2a+1, spliced with a (k2 >= 2)-parameter into
// an output of dimension 2a+k2 whose homology repeats H_a(input) at degrees a
// and a+k2-1. Throws std::invalid_argument when the hypotheses fail.
ManifoldProfile lemma1_transform(const ManifoldProfile& p, int k2);

// spheres, lens spaces, the 5- and 7-dimensional torsion carriers, and a few
// spliced lens entries
std::vector<ManifoldProfile> default_catalog();

std::optional<ManifoldProfile> find_profile(const std::vector<ManifoldProfile>& catalog,
                                            const std::string& name);

}  // namespace reebop
