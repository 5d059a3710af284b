#include "reebop/integer_matrix.hpp"

#include <doctest.h>

#include <numeric>
#include <random>
#include <vector>

using namespace reebop;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    return m;
}

// gcd of all k x k minors; the classical characterization of the divisor
// chain, used as an oracle independent of the reduction algorithm
Int minor_gcd(const IntMatrix& m, std::size_t k) {
    std::vector<std::size_t> ri(k), ci(k);
    Int g = 0;
    std::vector<std::size_t> rows_pick, cols_pick;
    // enumerate k-subsets of rows and columns
    std::vector<bool> rmask(m.rows(), false), cmask(m.cols(), false);
    std::fill(rmask.begin(), rmask.begin() + static_cast<long>(k), true);
    do {
        std::vector<std::size_t> rs;
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (rmask[i]) rs.push_back(i);
        std::fill(cmask.begin(), cmask.end(), false);
        std::fill(cmask.begin(), cmask.begin() + static_cast<long>(k), true);
        do {
            std::vector<std::size_t> cs;
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (cmask[j]) cs.push_back(j);
            IntMatrix sub(k, k);
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < k; ++b) sub(a, b) = m(rs[a], cs[b]);
            g = gcd(g, determinant(sub));
        } while (std::prev_permutation(cmask.begin(), cmask.end()));
    } while (std::prev_permutation(rmask.begin(), rmask.end()));
    return abs(g);
}

void check_snf_contract(const IntMatrix& m) {
    const SmithDecomposition s = smith_normal_form(m);
    CHECK(s.left.rows() == m.rows());
    CHECK(s.left.cols() == m.rows());
    CHECK(s.right.rows() == m.cols());
    CHECK(s.right.cols() == m.cols());
    CHECK(s.left * m * s.right == s.diagonal);
    CHECK(abs(determinant(s.left)) == 1);
    CHECK(abs(determinant(s.right)) == 1);
    for (std::size_t i = 0; i < s.diagonal.rows(); ++i)
        for (std::size_t j = 0; j < s.diagonal.cols(); ++j)
            if (i != j) CHECK(s.diagonal(i, j) == 0);
    const auto d = s.divisors();
    for (std::size_t i = 0; i < d.size(); ++i) CHECK(d[i] >= 0);
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        if (d[i] == 0)
            CHECK(d[i + 1] == 0);
        else
            CHECK(d[i + 1] % d[i] == 0);
    }
}

}  // namespace

TEST_SUITE("integer-matrix") {
    TEST_CASE("smith normal form on the pinned examples") {
        auto divisors_of = [](const IntMatrix& m) {
            return smith_normal_form(m).divisors();
        };
        CHECK(divisors_of(from_rows({{2, 0}, {0, 3}})) == std::vector<Int>{1, 6});
        CHECK(divisors_of(IntMatrix::identity(2)) == std::vector<Int>{1, 1});
        CHECK(divisors_of(from_rows({{2, 4}, {6, 10}})) == std::vector<Int>{2, 2});
    }

    TEST_CASE("smith normal form of degenerate shapes") {
        check_snf_contract(IntMatrix(0, 0));
        check_snf_contract(IntMatrix(0, 3));
        check_snf_contract(IntMatrix(3, 0));
        check_snf_contract(IntMatrix(2, 5));  // all zero
        CHECK(smith_normal_form(IntMatrix(2, 5)).divisors() == std::vector<Int>{0, 0});
    }

    TEST_CASE("smith normal form contract on random matrices") {
        std::mt19937_64 rng(20240816);
        std::uniform_int_distribution<int> dim(1, 5), entry(-50, 50);
        for (int t = 0; t < 300; ++t) {
            IntMatrix m(dim(rng), dim(rng));
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
            check_snf_contract(m);
        }
    }

    TEST_CASE("divisors match the minor-gcd characterization") {
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<int> dim(1, 4), entry(-9, 9);
        for (int t = 0; t < 60; ++t) {
            IntMatrix m(dim(rng), dim(rng));
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
            const auto d = smith_normal_form(m).divisors();
            Int prod = 1;
            for (std::size_t k = 0; k < d.size(); ++k) {
                prod *= d[k];
                // d_1 * ... * d_k = gcd of all k x k minors
                CHECK(abs(prod) == minor_gcd(m, k + 1));
            }
        }
    }

    TEST_CASE("entries that overflow fixed-width integers") {
        IntMatrix m(2, 2);
        m(0, 0) = Int("123456789012345678901234567890");
        m(0, 1) = 1;
        m(1, 0) = 0;
        m(1, 1) = Int("-987654321098765432109876543210");
        check_snf_contract(m);
        CHECK(abs(determinant(m)) == abs(m(0, 0) * m(1, 1)));
    }

    TEST_CASE("determinant") {
        CHECK(determinant(IntMatrix(0, 0)) == 1);
        CHECK(determinant(IntMatrix::identity(4)) == 1);
        CHECK(determinant(from_rows({{2, 4}, {6, 10}})) == -4);
        CHECK(determinant(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}})) == -3);
        CHECK(determinant(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 0);
        CHECK_THROWS_AS((void)determinant(IntMatrix(2, 3)), std::invalid_argument);
    }

    TEST_CASE("matrix product shape checking") {
        CHECK(IntMatrix::identity(3) * IntMatrix::identity(3) == IntMatrix::identity(3));
        CHECK_THROWS_AS(IntMatrix(2, 3) * IntMatrix(2, 3), std::invalid_argument);
    }

    TEST_CASE("solve_columns finds exact integral solutions") {
        const IntMatrix a = from_rows({{2, 0}, {0, 3}});
        const IntMatrix b = from_rows({{4}, {9}});
        const auto x = solve_columns(a, b);
        REQUIRE(x.has_value());
        CHECK(a * *x == b);

        const IntMatrix odd = from_rows({{3}, {5}});
        CHECK_FALSE(solve_columns(a, odd).has_value());  // 3 not divisible by 2

        // random consistent systems: b = a * y must be solvable, and the
        // solution must reproduce b exactly
        std::mt19937_64 rng(99);
        std::uniform_int_distribution<int> dim(1, 4), entry(-6, 6);
        for (int t = 0; t < 100; ++t) {
            IntMatrix m(dim(rng), dim(rng));
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
            IntMatrix y(m.cols(), 2);
            for (std::size_t i = 0; i < y.rows(); ++i)
                for (std::size_t j = 0; j < y.cols(); ++j) y(i, j) = entry(rng);
            const IntMatrix rhs = m * y;
            const auto sol = solve_columns(m, rhs);
            REQUIRE(sol.has_value());
            CHECK(m * *sol == rhs);
        }
    }
}
