#pragma once

#include "reebop/integer_matrix.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace reebop {

// m copies of the cyclic group of order prime^exponent
struct TorsionFactor {
    Int prime;
    int exponent = 1;
    int multiplicity = 1;

    Int order() const;  // prime^exponent
    bool operator==(const TorsionFactor&) const = default;
};

// Finitely generated abelian group in canonical form: free rank plus
// prime-power torsion blocks sorted by (prime, exponent). Equality of two
// values is isomorphism of the groups.
class FGAbelianGroup {
public:
    FGAbelianGroup() = default;  // trivial group
    // merges duplicate (prime, exponent) blocks, sorts; throws
    // std::invalid_argument on negative rank, non-prime modulus,
    // exponent < 1 or multiplicity < 1
    FGAbelianGroup(int rank, std::vector<TorsionFactor> torsion);

    static FGAbelianGroup free_group(int rank);
    static FGAbelianGroup cyclic(const Int& order);  // order >= 1

    int rank() const { return rank_; }
    const std::vector<TorsionFactor>& torsion() const { return torsion_; }

    bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }
    bool is_free() const { return torsion_.empty(); }
    bool is_finite() const { return rank_ == 0; }

    Int torsion_order() const;  // product of prime^(exponent*multiplicity)
    FGAbelianGroup torsion_subgroup() const;
    FGAbelianGroup free_part() const;

    // "0", "Z", "Z^2+Z_4+Z_9^2", ...
    std::string to_string() const;

    bool operator==(const FGAbelianGroup&) const = default;

private:
    int rank_ = 0;
    std::vector<TorsionFactor> torsion_;
};

// Z^g modulo the column span of `relations`, g = relations.rows()
struct PresentationMatrix {
    IntMatrix relations;
    std::size_t generators() const { return relations.rows(); }
};

// canonical form of the presented group, via the elementary-divisor chain
FGAbelianGroup canonicalize(const PresentationMatrix& p);

FGAbelianGroup direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b);

// whether g ~ h (+) k for some k
bool is_summand(const FGAbelianGroup& h, const FGAbelianGroup& g);

// the k with g ~ h (+) k, when h is a summand of g
std::optional<FGAbelianGroup> complement(const FGAbelianGroup& h, const FGAbelianGroup& g);

// true when some canonical block (prime, exponent) occurs in both torsion lists
bool shares_canonical_factor(const FGAbelianGroup& a, const FGAbelianGroup& b);

inline constexpr unsigned long long default_subgroup_order_bound = 512;

// Exact number of subgroups of the torsion part of g isomorphic to the finite
// group h, by brute-force enumeration of generated subgroups. Returns nullopt
// (unbounded sentinel) when |torsion(g)| exceeds order_bound; throws
// std::invalid_argument when h has positive rank.
std::optional<unsigned long long> count_subgroups_isomorphic_to(
    const FGAbelianGroup& g, const FGAbelianGroup& h,
    unsigned long long order_bound = default_subgroup_order_bound);

// trial division; n >= 1, factors in ascending prime order
std::vector<std::pair<Int, int>> factorize(Int n);
bool is_prime(const Int& n);

}  // namespace reebop
