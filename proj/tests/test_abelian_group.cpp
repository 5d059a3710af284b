#include "reebop/abelian_group.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace reebop;

namespace {

FGAbelianGroup grp(int rank, std::vector<TorsionFactor> t = {}) {
    return FGAbelianGroup(rank, std::move(t));
}

IntMatrix diag(const std::vector<long long>& d) {
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

}  // namespace

TEST_SUITE("fg-abelian") {
    TEST_CASE("constructor canonicalizes and validates") {
        const FGAbelianGroup g(1, {{3, 2, 1}, {2, 1, 1}, {2, 1, 1}});
        CHECK(g.rank() == 1);
        REQUIRE(g.torsion().size() == 2);
        CHECK(g.torsion()[0] == TorsionFactor{2, 1, 2});  // merged, sorted first
        CHECK(g.torsion()[1] == TorsionFactor{3, 2, 1});

        CHECK_THROWS_AS(grp(-1), std::invalid_argument);
        CHECK_THROWS_AS(grp(0, {{4, 1, 1}}), std::invalid_argument);  // 4 not prime
        CHECK_THROWS_AS(grp(0, {{2, 0, 1}}), std::invalid_argument);
        CHECK_THROWS_AS(grp(0, {{2, 1, 0}}), std::invalid_argument);
    }

    TEST_CASE("cyclic splits into prime powers") {
        CHECK(FGAbelianGroup::cyclic(1).is_trivial());
        CHECK(FGAbelianGroup::cyclic(12) == grp(0, {{2, 2, 1}, {3, 1, 1}}));
        CHECK(FGAbelianGroup::cyclic(360) == grp(0, {{2, 3, 1}, {3, 2, 1}, {5, 1, 1}}));
        CHECK_THROWS_AS(FGAbelianGroup::cyclic(0), std::invalid_argument);
    }

    TEST_CASE("to_string") {
        CHECK(grp(0).to_string() == "0");
        CHECK(grp(1).to_string() == "Z");
        CHECK(grp(2, {{2, 2, 1}, {3, 2, 2}}).to_string() == "Z^2+Z_4+Z_9^2");
    }

    TEST_CASE("canonicalize the pinned presentations") {
        CHECK(canonicalize({diag({2, 4})}) == grp(0, {{2, 1, 1}, {2, 2, 1}}));

        IntMatrix m(2, 2);
        m(0, 0) = 2; m(0, 1) = 4; m(1, 0) = 6; m(1, 1) = 10;
        CHECK(canonicalize({m}) == grp(0, {{2, 1, 2}}));  // Z_2 + Z_2

        IntMatrix col(2, 1);
        col(0, 0) = 1;
        CHECK(canonicalize({col}) == grp(1));

        CHECK(canonicalize({IntMatrix(3, 0)}) == grp(3));
        CHECK(canonicalize({IntMatrix(0, 0)}) == grp(0));
    }

    TEST_CASE("canonicalize is idempotent on diagonal presentations") {
        std::mt19937_64 rng(5);
        std::uniform_int_distribution<int> pick(0, 4);
        const long long orders[] = {2, 3, 4, 9, 25};
        for (int t = 0; t < 50; ++t) {
            std::vector<long long> ds;
            for (int i = pick(rng); i-- > 0;) ds.push_back(orders[pick(rng)]);
            const FGAbelianGroup g = canonicalize({diag(ds)});
            // re-present g by one relation column per torsion copy
            std::vector<long long> again;
            for (const TorsionFactor& f : g.torsion())
                for (int c = 0; c < f.multiplicity; ++c)
                    again.push_back(static_cast<long long>(f.order()));
            CHECK(canonicalize({diag(again)}) == g);
        }
    }

    TEST_CASE("direct_sum") {
        CHECK(direct_sum(grp(1), grp(0, {{2, 1, 1}})) == grp(1, {{2, 1, 1}}));
        const FGAbelianGroup g(2, {{5, 1, 1}});
        CHECK(direct_sum(g, grp(0)) == g);
        CHECK(direct_sum(grp(0, {{2, 1, 1}, {2, 2, 1}}), grp(0, {{2, 1, 1}})) ==
              grp(0, {{2, 1, 2}, {2, 2, 1}}));
        // commutative and associative
        const FGAbelianGroup a(1, {{3, 1, 1}}), b(0, {{2, 2, 2}}), c(2, {{3, 1, 1}});
        CHECK(direct_sum(a, b) == direct_sum(b, a));
        CHECK(direct_sum(direct_sum(a, b), c) == direct_sum(a, direct_sum(b, c)));
    }

    TEST_CASE("is_summand") {
        CHECK(is_summand(grp(0, {{2, 1, 1}}), grp(0, {{2, 1, 1}, {2, 2, 1}})));
        CHECK_FALSE(is_summand(grp(0, {{2, 2, 1}}), grp(0, {{2, 1, 2}})));
        CHECK(is_summand(grp(1, {{2, 1, 1}}), grp(2, {{2, 1, 1}, {3, 1, 1}})));
        CHECK(is_summand(grp(0), grp(0)));
        CHECK_FALSE(is_summand(grp(0, {{2, 1, 3}}), grp(0, {{2, 1, 2}})));  // multiplicity
    }

    TEST_CASE("complement") {
        auto k = complement(grp(0, {{2, 1, 1}}), grp(0, {{2, 1, 1}, {2, 2, 1}}));
        REQUIRE(k.has_value());
        CHECK(*k == grp(0, {{2, 2, 1}}));
        CHECK_FALSE(complement(grp(0, {{3, 2, 1}}), grp(0, {{3, 1, 1}})).has_value());
        k = complement(grp(1), grp(3, {{5, 1, 1}}));
        REQUIRE(k.has_value());
        CHECK(*k == grp(2, {{5, 1, 1}}));
    }

    TEST_CASE("complement exists iff summand, and reassembles") {
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<int> rk(0, 2), mult(1, 2), flip(0, 1);
        const TorsionFactor pool[] = {{2, 1, 1}, {2, 2, 1}, {3, 1, 1}, {5, 1, 1}};
        auto random_group = [&]() {
            std::vector<TorsionFactor> t;
            for (const TorsionFactor& f : pool)
                if (flip(rng)) t.push_back({f.prime, f.exponent, mult(rng)});
            return FGAbelianGroup(rk(rng), t);
        };
        for (int i = 0; i < 200; ++i) {
            const FGAbelianGroup h = random_group(), g = random_group();
            const auto k = complement(h, g);
            CHECK(k.has_value() == is_summand(h, g));
            if (k) CHECK(direct_sum(h, *k) == g);
        }
    }

    TEST_CASE("shares_canonical_factor") {
        CHECK_FALSE(shares_canonical_factor(grp(0, {{2, 1, 1}}), grp(0, {{2, 2, 1}})));
        CHECK(shares_canonical_factor(grp(0, {{2, 1, 1}, {3, 2, 1}}), grp(0, {{3, 2, 1}})));
        CHECK_FALSE(shares_canonical_factor(grp(5), grp(7)));
    }

    TEST_CASE("subgroup counting on the pinned examples") {
        CHECK(count_subgroups_isomorphic_to(grp(0, {{2, 1, 2}}), grp(0, {{2, 1, 1}})) == 3);
        CHECK(count_subgroups_isomorphic_to(grp(0, {{2, 2, 1}}), grp(0, {{2, 1, 1}})) == 1);
        CHECK(count_subgroups_isomorphic_to(grp(2, {{7, 1, 1}}), grp(0)) == 1);
        // the trivial subgroup exists in the trivial group too
        CHECK(count_subgroups_isomorphic_to(grp(0), grp(0)) == 1);
        // Z_4 + Z_2: two cyclic subgroups of order 4, three of order 2
        const FGAbelianGroup g42(0, {{2, 1, 1}, {2, 2, 1}});
        CHECK(count_subgroups_isomorphic_to(g42, grp(0, {{2, 2, 1}})) == 2);
        CHECK(count_subgroups_isomorphic_to(g42, grp(0, {{2, 1, 1}})) == 3);
        CHECK(count_subgroups_isomorphic_to(g42, grp(0, {{2, 1, 2}})) == 1);
        // no subgroup of mismatched order or prime
        CHECK(count_subgroups_isomorphic_to(g42, grp(0, {{3, 1, 1}})) == 0);
        CHECK(count_subgroups_isomorphic_to(g42, grp(0, {{2, 3, 1}})) == 0);
        // counting happens inside the torsion part; free rank is ignored
        CHECK(count_subgroups_isomorphic_to(grp(3, {{2, 1, 2}}), grp(0, {{2, 1, 1}})) == 3);
    }

    TEST_CASE("subgroup counting: the line count p+1") {
        for (long long p : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL}) {
            const FGAbelianGroup g(0, {{p, 1, 2}});
            const auto c = count_subgroups_isomorphic_to(g, grp(0, {{p, 1, 1}}));
            REQUIRE(c.has_value());
            CHECK(*c == static_cast<unsigned long long>(p) + 1);
        }
    }

    TEST_CASE("subgroup counting bound and errors") {
        // |Z_2^10| = 1024 > 512 default bound
        CHECK_FALSE(count_subgroups_isomorphic_to(grp(0, {{2, 1, 10}}), grp(0, {{2, 1, 1}}))
                        .has_value());
        CHECK(count_subgroups_isomorphic_to(grp(0, {{2, 1, 10}}), grp(0, {{2, 1, 1}}), 1024)
                  .has_value());
        CHECK_THROWS_AS(
            (void)count_subgroups_isomorphic_to(grp(0, {{2, 1, 1}}), grp(1)),
            std::invalid_argument);
    }

    TEST_CASE("group accessors") {
        const FGAbelianGroup g(2, {{2, 2, 1}, {3, 1, 2}});
        CHECK(g.torsion_order() == 36);
        CHECK(g.torsion_subgroup() == grp(0, {{2, 2, 1}, {3, 1, 2}}));
        CHECK(g.free_part() == grp(2));
        CHECK_FALSE(g.is_finite());
        CHECK(g.torsion_subgroup().is_finite());
        CHECK(grp(3).is_free());
    }

    TEST_CASE("factorize and primality") {
        CHECK(factorize(1).empty());
        CHECK(factorize(360) ==
              std::vector<std::pair<Int, int>>{{2, 3}, {3, 2}, {5, 1}});
        CHECK(is_prime(2));
        CHECK(is_prime(97));
        CHECK_FALSE(is_prime(1));
        CHECK_FALSE(is_prime(91));  // 7 * 13
    }
}
