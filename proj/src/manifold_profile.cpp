#include "reebop/manifold_profile.hpp"

#include <stdexcept>

namespace reebop {

const FGAbelianGroup& ManifoldProfile::h(int k) const {
    static const FGAbelianGroup trivial;
    if (k < 0 || k > dim || static_cast<std::size_t>(k) >= homology.size()) return trivial;
    return homology[static_cast<std::size_t>(k)];
}

std::optional<ProfileViolation> validate_profile(const ManifoldProfile& p) {
    if (p.dim < 0 || p.homology.size() != static_cast<std::size_t>(p.dim) + 1)
        return ProfileViolation{0, "shape",
                                "expected " + std::to_string(p.dim + 1) + " homology groups, got " +
                                    std::to_string(p.homology.size())};
    const FGAbelianGroup z = FGAbelianGroup::free_group(1);
    if (p.h(0) != z)
        return ProfileViolation{0, "connected", "H_0 = " + p.h(0).to_string() + ", expected Z"};
    if (p.h(p.dim) != z)
        return ProfileViolation{p.dim, "orientable-top",
                                "H_" + std::to_string(p.dim) + " = " + p.h(p.dim).to_string() +
                                    ", expected Z"};
    for (int k = 0; k <= p.dim; ++k)
        if (p.h(k).rank() != p.h(p.dim - k).rank())
            return ProfileViolation{k, "rank-symmetry",
                                    "rank H_" + std::to_string(k) + " = " +
                                        std::to_string(p.h(k).rank()) + " but rank H_" +
                                        std::to_string(p.dim - k) + " = " +
                                        std::to_string(p.h(p.dim - k).rank())};
    for (int k = 0; k < p.dim; ++k)
        if (p.h(k).torsion_subgroup() != p.h(p.dim - k - 1).torsion_subgroup())
            return ProfileViolation{k, "torsion-symmetry",
                                    "T H_" + std::to_string(k) + " = " +
                                        p.h(k).torsion_subgroup().to_string() + " but T H_" +
                                        std::to_string(p.dim - k - 1) + " = " +
                                        p.h(p.dim - k - 1).torsion_subgroup().to_string()};
    if (p.embeds_in && *p.embeds_in <= p.dim)
        return ProfileViolation{0, "embedding",
                                "embeds_in = " + std::to_string(*p.embeds_in) +
                                    " must exceed dim = " + std::to_string(p.dim)};
    return std::nullopt;
}

namespace {

ManifoldProfile checked(ManifoldProfile p) {
    if (auto v = validate_profile(p))
        throw std::invalid_argument("profile '" + p.name + "' rejected (" + v->law +
                                    " at degree " + std::to_string(v->degree) + ": " + v->detail +
                                    ")");
    return p;
}

}  // namespace

ManifoldProfile sphere_profile(int d) {
    if (d < 1) throw std::invalid_argument("sphere profile needs dimension >= 1");
    ManifoldProfile p;
    p.name = "S^" + std::to_string(d);
    p.dim = d;
    p.homology.assign(static_cast<std::size_t>(d) + 1, FGAbelianGroup{});
    p.homology.front() = p.homology.back() = FGAbelianGroup::free_group(1);
    p.embeds_in = d + 1;
    return checked(std::move(p));
}

ManifoldProfile lens_profile(const Int& p_param) {
    if (p_param < 2) throw std::invalid_argument("lens profile parameter must be >= 2");
    ManifoldProfile p;
    p.name = "L(" + p_param.str() + ")";
    p.dim = 3;
    p.homology = {FGAbelianGroup::free_group(1), FGAbelianGroup::cyclic(p_param),
                  FGAbelianGroup{}, FGAbelianGroup::free_group(1)};
    p.embeds_in = 5;
    return checked(std::move(p));
}

ManifoldProfile barden5_profile(const FGAbelianGroup& t) {
    ManifoldProfile p;
    p.name = "B5(" + t.to_string() + ")";
    p.dim = 5;
    p.homology = {FGAbelianGroup::free_group(1), FGAbelianGroup{}, t,
                  FGAbelianGroup{}, FGAbelianGroup{}, FGAbelianGroup::free_group(1)};
    return checked(std::move(p));
}

ManifoldProfile crowley7_profile(const FGAbelianGroup& t) {
    ManifoldProfile p;
    p.name = "C7(" + t.to_string() + ")";
    p.dim = 7;
    p.homology.assign(8, FGAbelianGroup{});
    p.homology.front() = p.homology.back() = FGAbelianGroup::free_group(1);
    p.homology[3] = t;
    return checked(std::move(p));
}

ManifoldProfile connected_sum_profile(const ManifoldProfile& a, const ManifoldProfile& b) {
    if (a.dim != b.dim)
        throw std::invalid_argument("connected sum needs equal dimensions, got " +
                                    std::to_string(a.dim) + " and " + std::to_string(b.dim));
    if (a.dim < 1) throw std::invalid_argument("connected sum needs dimension >= 1");
    ManifoldProfile out;
    out.name = "(" + a.name + "#" + b.name + ")";
    out.dim = a.dim;
    out.homology.assign(static_cast<std::size_t>(a.dim) + 1, FGAbelianGroup{});
    out.homology.front() = out.homology.back() = FGAbelianGroup::free_group(1);
    for (int k = 1; k < a.dim; ++k)
        out.homology[static_cast<std::size_t>(k)] = direct_sum(a.h(k), b.h(k));
    if (a.embeds_in && b.embeds_in) out.embeds_in = std::max(*a.embeds_in, *b.embeds_in);
    return checked(std::move(out));
}

ManifoldProfile lemma1_transform(const ManifoldProfile& p, int k2) {
    if (auto v = validate_profile(p))
        throw std::invalid_argument("splice input '" + p.name + "' rejected (" + v->law + ": " +
                                    v->detail + ")");
    if (k2 < 2)
        throw std::invalid_argument("splice parameter k2 = " + std::to_string(k2) +
                                    " rejected; the construction needs k2 >= 2");
    if (p.dim < 3 || p.dim % 2 == 0)
        throw std::invalid_argument("splice input must have odd dimension >= 3, got " +
                                    std::to_string(p.dim));
    const int a = (p.dim - 1) / 2;
    for (int j = 1; j < p.dim; ++j) {
        if (j == a) continue;
        if (!p.h(j).is_trivial())
            throw std::invalid_argument("splice input must have trivial homology at degree " +
                                        std::to_string(j) + ", got " + p.h(j).to_string());
    }

    ManifoldProfile out;
    out.name = p.name + "_(" + std::to_string(p.dim) + "," + std::to_string(k2) + ")";
    out.dim = 2 * a + k2;
    out.homology.assign(static_cast<std::size_t>(out.dim) + 1, FGAbelianGroup{});
    out.homology.front() = out.homology.back() = FGAbelianGroup::free_group(1);
    out.homology[static_cast<std::size_t>(a)] = p.h(a);
    out.homology[static_cast<std::size_t>(a + k2 - 1)] = p.h(a);
    return checked(std::move(out));
}

std::vector<ManifoldProfile> default_catalog() {
    std::vector<ManifoldProfile> cat;
    for (int d = 1; d <= 8; ++d) cat.push_back(sphere_profile(d));
    for (int p : {2, 3, 5, 7, 25}) cat.push_back(lens_profile(p));
    for (int m : {2, 3, 4}) cat.push_back(barden5_profile(FGAbelianGroup::cyclic(m)));
    for (int m : {2, 3}) cat.push_back(crowley7_profile(FGAbelianGroup::cyclic(m)));
    for (int p : {2, 3, 5, 7, 25}) cat.push_back(lemma1_transform(lens_profile(p), 2));
    for (int p : {2, 3, 5}) cat.push_back(lemma1_transform(lens_profile(p), 3));
    return cat;
}

std::optional<ManifoldProfile> find_profile(const std::vector<ManifoldProfile>& catalog,
                                            const std::string& name) {
    for (const ManifoldProfile& p : catalog)
        if (p.name == name) return p;
    return std::nullopt;
}

}  // namespace reebop
