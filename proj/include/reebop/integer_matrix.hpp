#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace reebop {

using Int = boost::multiprecision::cpp_int;

// Dense matrix over Z, row-major, arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row a += c * row b   /   col a += c * col b
    void add_row(std::size_t a, std::size_t b, const Int& c);
    void add_col(std::size_t a, std::size_t b, const Int& c);
    void negate_row(std::size_t a);

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// diagonal == left * input * right, with left/right unimodular and the
// diagonal entries non-negative, each dividing the next.
struct SmithDecomposition {
    IntMatrix left;
    IntMatrix diagonal;
    IntMatrix right;

    // the min(rows, cols) diagonal entries, zeros included
    std::vector<Int> divisors() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

// Bareiss fraction-free elimination; throws std::invalid_argument unless square.
Int determinant(const IntMatrix& m);

// Exact integer solution x of a*x = b (column-wise); nullopt when none exists.
std::optional<IntMatrix> solve_columns(const IntMatrix& a, const IntMatrix& b);

}  // namespace reebop
