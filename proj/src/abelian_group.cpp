#include "reebop/abelian_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace reebop {

Int TorsionFactor::order() const {
    Int o = 1;
    for (int i = 0; i < exponent; ++i) o *= prime;
    return o;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (Int f = 5; f * f <= n; f += 6)
        if (n % f == 0 || n % (f + 2) == 0) return false;
    return true;
}

std::vector<std::pair<Int, int>> factorize(Int n) {
    if (n < 1) throw std::invalid_argument("factorize: argument must be positive");
    std::vector<std::pair<Int, int>> out;
    auto strip = [&](const Int& p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (Int f = 5; f * f <= n; f += 6) {
        strip(f);
        strip(f + 2);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

FGAbelianGroup::FGAbelianGroup(int rank, std::vector<TorsionFactor> torsion) : rank_(rank) {
    if (rank < 0) throw std::invalid_argument("group rank must be non-negative");
    std::map<std::pair<Int, int>, long long> blocks;
    for (const TorsionFactor& f : torsion) {
        if (f.exponent < 1) throw std::invalid_argument("torsion exponent must be >= 1");
        if (f.multiplicity < 1) throw std::invalid_argument("torsion multiplicity must be >= 1");
        if (!is_prime(f.prime))
            throw std::invalid_argument("torsion modulus " + f.prime.str() + " is not prime");
        blocks[{f.prime, f.exponent}] += f.multiplicity;
    }
    for (const auto& [key, m] : blocks)
        torsion_.push_back({key.first, key.second, static_cast<int>(m)});
}

FGAbelianGroup FGAbelianGroup::free_group(int rank) { return {rank, {}}; }

FGAbelianGroup FGAbelianGroup::cyclic(const Int& order) {
    if (order < 1) throw std::invalid_argument("cyclic group order must be >= 1");
    std::vector<TorsionFactor> t;
    for (const auto& [p, e] : factorize(order)) t.push_back({p, e, 1});
    return {0, std::move(t)};
}

Int FGAbelianGroup::torsion_order() const {
    Int o = 1;
    for (const TorsionFactor& f : torsion_)
        for (int i = 0; i < f.multiplicity; ++i) o *= f.order();
    return o;
}

FGAbelianGroup FGAbelianGroup::torsion_subgroup() const { return {0, torsion_}; }

FGAbelianGroup FGAbelianGroup::free_part() const { return {rank_, {}}; }

std::string FGAbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::string s;
    auto append = [&s](const std::string& part) {
        if (!s.empty()) s += "+";
        s += part;
    };
    if (rank_ == 1) append("Z");
    else if (rank_ > 1) append("Z^" + std::to_string(rank_));
    for (const TorsionFactor& f : torsion_) {
        std::string part = "Z_" + f.order().str();
        if (f.multiplicity > 1) part += "^" + std::to_string(f.multiplicity);
        append(part);
    }
    return s;
}

FGAbelianGroup canonicalize(const PresentationMatrix& p) {
    SmithDecomposition s = smith_normal_form(p.relations);
    int rank = static_cast<int>(p.generators());
    std::vector<TorsionFactor> torsion;
    for (const Int& d : s.divisors()) {
        if (d == 0) continue;
        --rank;
        if (d == 1) continue;
        for (const auto& [prime, e] : factorize(d)) torsion.push_back({prime, e, 1});
    }
    return {rank, std::move(torsion)};
}

FGAbelianGroup direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b) {
    std::vector<TorsionFactor> t = a.torsion();
    t.insert(t.end(), b.torsion().begin(), b.torsion().end());
    return {a.rank() + b.rank(), std::move(t)};
}

namespace {

// multiset difference of canonical blocks; nullopt when h is not contained in g
std::optional<std::vector<TorsionFactor>> torsion_difference(const FGAbelianGroup& h,
                                                             const FGAbelianGroup& g) {
    std::vector<TorsionFactor> out;
    auto it = h.torsion().begin();
    for (const TorsionFactor& f : g.torsion()) {
        if (it != h.torsion().end() && it->prime == f.prime && it->exponent == f.exponent) {
            if (it->multiplicity > f.multiplicity) return std::nullopt;
            if (it->multiplicity < f.multiplicity)
                out.push_back({f.prime, f.exponent, f.multiplicity - it->multiplicity});
            ++it;
        } else {
            out.push_back(f);
        }
    }
    if (it != h.torsion().end()) return std::nullopt;
    return out;
}

}  // namespace

bool is_summand(const FGAbelianGroup& h, const FGAbelianGroup& g) {
    return complement(h, g).has_value();
}

std::optional<FGAbelianGroup> complement(const FGAbelianGroup& h, const FGAbelianGroup& g) {
    if (h.rank() > g.rank()) return std::nullopt;
    auto t = torsion_difference(h, g);
    if (!t) return std::nullopt;
    return FGAbelianGroup{g.rank() - h.rank(), std::move(*t)};
}

bool shares_canonical_factor(const FGAbelianGroup& a, const FGAbelianGroup& b) {
    for (const TorsionFactor& f : a.torsion())
        for (const TorsionFactor& g : b.torsion())
            if (f.prime == g.prime && f.exponent == g.exponent) return true;
    return false;
}

namespace {

// finite abelian group as Z_{q_0} x ... x Z_{q_{t-1}}; elements coded in mixed radix
struct TorsionAmbient {
    std::vector<unsigned long long> moduli;
    unsigned long long size = 1;

    std::vector<unsigned long long> strides() const {
        std::vector<unsigned long long> s(moduli.size());
        unsigned long long acc = 1;
        for (std::size_t i = 0; i < moduli.size(); ++i) {
            s[i] = acc;
            acc *= moduli[i];
        }
        return s;
    }
};

std::vector<unsigned long long> decode(const TorsionAmbient& t, unsigned long long code) {
    std::vector<unsigned long long> c(t.moduli.size());
    for (std::size_t i = 0; i < t.moduli.size(); ++i) {
        c[i] = code % t.moduli[i];
        code /= t.moduli[i];
    }
    return c;
}

unsigned long long add_codes(const TorsionAmbient& t, unsigned long long a, unsigned long long b) {
    auto x = decode(t, a), y = decode(t, b);
    unsigned long long code = 0, stride = 1;
    for (std::size_t i = 0; i < t.moduli.size(); ++i) {
        code += ((x[i] + y[i]) % t.moduli[i]) * stride;
        stride *= t.moduli[i];
    }
    return code;
}

unsigned long long element_order(const TorsionAmbient& t, unsigned long long code) {
    auto c = decode(t, code);
    unsigned long long ord = 1;
    for (std::size_t i = 0; i < t.moduli.size(); ++i) {
        unsigned long long oi = t.moduli[i] / std::gcd(t.moduli[i], c[i]);
        ord = std::lcm(ord, oi);
    }
    return ord;
}

// subgroup generated by s (a subgroup, sorted) and one extra element
std::vector<unsigned long long> extend_subgroup(const TorsionAmbient& t,
                                                const std::vector<unsigned long long>& s,
                                                unsigned long long g) {
    std::set<unsigned long long> out(s.begin(), s.end());
    unsigned long long ord = element_order(t, g);
    unsigned long long kg = 0;
    for (unsigned long long k = 1; k < ord; ++k) {
        kg = add_codes(t, kg, g);
        for (unsigned long long x : s) out.insert(add_codes(t, x, kg));
    }
    return {out.begin(), out.end()};
}

// canonical type of a concrete subgroup, from p-power annihilator counts
FGAbelianGroup subgroup_type(const TorsionAmbient& t,
                             const std::vector<unsigned long long>& elems) {
    std::vector<unsigned long long> orders;
    orders.reserve(elems.size());
    for (unsigned long long x : elems) orders.push_back(element_order(t, x));

    Int size = elems.size();
    std::vector<TorsionFactor> factors;
    for (const auto& [prime, top_e] : factorize(size)) {
        unsigned long long p = static_cast<unsigned long long>(prime);
        // c[e] = #elements with order dividing p^e; log_p gives the lambda profile
        std::vector<int> logs{0};
        for (int e = 1; e <= top_e; ++e) {
            unsigned long long pe = 1;
            for (int i = 0; i < e; ++i) pe *= p;
            unsigned long long count = 0;
            for (unsigned long long o : orders)
                if (pe % o == 0) ++count;
            int lg = 0;
            while (count > 1) {
                count /= p;
                ++lg;
            }
            logs.push_back(lg);
        }
        std::vector<int> at_least(logs.size());  // #cyclic p-factors with exponent >= e
        for (std::size_t e = 1; e < logs.size(); ++e) at_least[e] = logs[e] - logs[e - 1];
        for (std::size_t e = 1; e < logs.size(); ++e) {
            int mult = at_least[e] - (e + 1 < logs.size() ? at_least[e + 1] : 0);
            if (mult > 0) factors.push_back({Int(p), static_cast<int>(e), mult});
        }
    }
    return {0, std::move(factors)};
}

}  // namespace

std::optional<unsigned long long> count_subgroups_isomorphic_to(const FGAbelianGroup& g,
                                                                const FGAbelianGroup& h,
                                                                unsigned long long order_bound) {
    if (h.rank() > 0)
        throw std::invalid_argument("subgroup counting requires a finite target group");
    if (h.is_trivial()) return 1;
    if (g.torsion_order() > order_bound) return std::nullopt;
    if (h.torsion_order() > g.torsion_order()) return 0;

    TorsionAmbient ambient;
    for (const TorsionFactor& f : g.torsion()) {
        unsigned long long q = static_cast<unsigned long long>(f.order());
        for (int i = 0; i < f.multiplicity; ++i) {
            ambient.moduli.push_back(q);
            ambient.size *= q;
        }
    }
    unsigned long long target_order = static_cast<unsigned long long>(h.torsion_order());
    if (ambient.size % target_order != 0) return 0;

    int generator_rounds = 0;
    for (const TorsionFactor& f : h.torsion()) generator_rounds += f.multiplicity;

    // all subgroups with order dividing |h|, grown one generator at a time
    std::set<std::vector<unsigned long long>> seen;
    std::vector<std::vector<unsigned long long>> frontier{{0}};
    seen.insert(frontier.front());
    for (int round = 0; round < generator_rounds; ++round) {
        std::vector<std::vector<unsigned long long>> next;
        for (const auto& sub : frontier) {
            for (unsigned long long g_code = 1; g_code < ambient.size; ++g_code) {
                if (std::binary_search(sub.begin(), sub.end(), g_code)) continue;
                if (target_order % element_order(ambient, g_code) != 0) continue;
                auto bigger = extend_subgroup(ambient, sub, g_code);
                if (target_order % bigger.size() != 0) continue;
                if (seen.insert(bigger).second) next.push_back(std::move(bigger));
            }
        }
        frontier = std::move(next);
    }

    unsigned long long count = 0;
    for (const auto& sub : seen)
        if (sub.size() == target_order && subgroup_type(ambient, sub) == h) ++count;
    return count;
}

}  // namespace reebop
