#include "reebop/chain_complex.hpp"
#include "reebop/manifold_profile.hpp"

#include <doctest.h>

#include <vector>

using namespace reebop;

namespace {

std::vector<FGAbelianGroup> all_homology(const ChainComplex& c) {
    std::vector<FGAbelianGroup> h;
    for (int k = 0; k <= c.top_degree(); ++k) h.push_back(c.homology(k));
    return h;
}

long long rank_alternating_sum(const std::vector<FGAbelianGroup>& h) {
    long long s = 0;
    int sign = 1;
    for (const FGAbelianGroup& g : h) {
        s += sign * g.rank();
        sign = -sign;
    }
    return s;
}

void check_euler(const ChainComplex& c) {
    CHECK(c.euler_characteristic() == rank_alternating_sum(all_homology(c)));
}

}  // namespace

TEST_SUITE("chain-oracle") {
    TEST_CASE("construction validates shapes and boundary composition") {
        // single loop edge on one vertex
        CHECK(ChainComplex({1, 1}, {IntMatrix(1, 1)}).homology(1) == FGAbelianGroup::free_group(1));

        IntMatrix bad_shape(2, 2);
        CHECK_THROWS_AS(ChainComplex({1, 1}, {bad_shape}), std::invalid_argument);
        CHECK_THROWS_AS(ChainComplex({}, {}), std::invalid_argument);

        // d1 = [1 1], d2 = [1 0]^T: composite is nonzero
        IntMatrix d1(1, 2), d2(2, 1);
        d1(0, 0) = 1; d1(0, 1) = 1;
        d2(0, 0) = 1;
        CHECK_THROWS_AS(ChainComplex({1, 2, 1}, {d1, d2}), std::invalid_argument);
    }

    TEST_CASE("homology of the pinned builtins") {
        CHECK(point_complex().homology(0) == FGAbelianGroup::free_group(1));
        CHECK(sphere_complex(2).homology(2) == FGAbelianGroup::free_group(1));
        CHECK(lens_complex(5).homology(1) == FGAbelianGroup::cyclic(5));

        CHECK(all_homology(sphere_complex(3)) ==
              std::vector<FGAbelianGroup>{FGAbelianGroup::free_group(1), FGAbelianGroup(),
                                          FGAbelianGroup(), FGAbelianGroup::free_group(1)});
        CHECK(all_homology(lens_complex(7)) ==
              std::vector<FGAbelianGroup>{FGAbelianGroup::free_group(1),
                                          FGAbelianGroup::cyclic(7), FGAbelianGroup(),
                                          FGAbelianGroup::free_group(1)});

        // d = 0: two points
        CHECK(sphere_complex(0).homology(0) == FGAbelianGroup::free_group(2));
        // d = 1: the circle, via the two-cell model
        CHECK(all_homology(sphere_complex(1)) ==
              std::vector<FGAbelianGroup>{FGAbelianGroup::free_group(1),
                                          FGAbelianGroup::free_group(1)});

        CHECK_THROWS_AS((void)lens_complex(1), std::invalid_argument);
        CHECK_THROWS_AS((void)point_complex().homology(1), std::out_of_range);
    }

    TEST_CASE("a non-orientable check: mod-2 attached disc") {
        // one vertex, one loop, one 2-cell attached with degree 2
        IntMatrix d1(1, 1), d2(1, 1);
        d2(0, 0) = 2;
        const ChainComplex c({1, 1, 1}, {d1, d2});
        CHECK(all_homology(c) ==
              std::vector<FGAbelianGroup>{FGAbelianGroup::free_group(1),
                                          FGAbelianGroup::cyclic(2), FGAbelianGroup()});
        check_euler(c);
    }

    TEST_CASE("tensor products match the Kunneth expectations") {
        const ChainComplex torus = tensor_product(sphere_complex(1), sphere_complex(1));
        CHECK(all_homology(torus) ==
              std::vector<FGAbelianGroup>{FGAbelianGroup::free_group(1),
                                          FGAbelianGroup::free_group(2),
                                          FGAbelianGroup::free_group(1)});

        CHECK(all_homology(tensor_product(sphere_complex(2), sphere_complex(3))) ==
              std::vector<FGAbelianGroup>{FGAbelianGroup::free_group(1), FGAbelianGroup(),
                                          FGAbelianGroup::free_group(1),
                                          FGAbelianGroup::free_group(1), FGAbelianGroup(),
                                          FGAbelianGroup::free_group(1)});

        CHECK(all_homology(tensor_product(point_complex(), lens_complex(3))) ==
              all_homology(lens_complex(3)));

        // S^a x S^b for all a, b <= 3: free, rank 1 at 0, a, b, a+b (2 at a=b)
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b) {
                const ChainComplex prod =
                    tensor_product(sphere_complex(a), sphere_complex(b));
                const auto h = all_homology(prod);
                for (int k = 0; k <= a + b; ++k) {
                    int expect = (k == 0) + (k == a) + (k == b) + (k == a + b);
                    CHECK(h[k] == FGAbelianGroup::free_group(expect));
                }
                check_euler(prod);
            }

        // torsion crossing torsion picks up a Tor term:
        // H_*(L(2) x L(2)) = (Z, Z_2^2, Z_2, Z^2+Z_2, Z_2^2, 0, Z)
        const ChainComplex ll = tensor_product(lens_complex(2), lens_complex(2));
        CHECK(ll.homology(0) == FGAbelianGroup::free_group(1));
        CHECK(ll.homology(1) == FGAbelianGroup(0, {{2, 1, 2}}));
        CHECK(ll.homology(2) == FGAbelianGroup::cyclic(2));
        CHECK(ll.homology(3) == FGAbelianGroup(2, {{2, 1, 1}}));
        CHECK(ll.homology(4) == FGAbelianGroup(0, {{2, 1, 2}}));
        CHECK(ll.homology(5) == FGAbelianGroup());
        CHECK(ll.homology(6) == FGAbelianGroup::free_group(1));
        check_euler(ll);
    }

    TEST_CASE("wedge sums add reduced homology") {
        CHECK(all_homology(wedge_sum(sphere_complex(1), sphere_complex(2))) ==
              std::vector<FGAbelianGroup>{FGAbelianGroup::free_group(1),
                                          FGAbelianGroup::free_group(1),
                                          FGAbelianGroup::free_group(1)});

        CHECK(all_homology(wedge_sum(lens_complex(5), point_complex())) ==
              all_homology(lens_complex(5)));

        const ChainComplex w = wedge_sum(lens_complex(3), lens_complex(3));
        CHECK(w.homology(0) == FGAbelianGroup::free_group(1));
        CHECK(w.homology(1) == FGAbelianGroup(0, {{3, 1, 2}}));
        CHECK(w.homology(3) == FGAbelianGroup::free_group(2));
        check_euler(w);

        // wedge of wedges and mixed shapes keep the defect zero
        check_euler(wedge_sum(wedge_sum(sphere_complex(2), lens_complex(2)),
                              sphere_complex(1)));
        check_euler(tensor_product(wedge_sum(sphere_complex(1), sphere_complex(1)),
                                   sphere_complex(2)));
    }

    TEST_CASE("oracle agrees with the catalog profiles") {
        auto matches = [](const ChainComplex& c, const ManifoldProfile& p) {
            REQUIRE(c.top_degree() == p.dim);
            for (int k = 0; k <= p.dim; ++k) CHECK(c.homology(k) == p.h(k));
        };
        for (int d = 1; d <= 6; ++d) matches(sphere_complex(d), sphere_profile(d));
        for (long long p : {2LL, 3LL, 5LL, 7LL, 25LL})
            matches(lens_complex(p), lens_profile(p));
    }
}
