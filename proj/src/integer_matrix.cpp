#include "reebop/integer_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace reebop {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    for (const Int& v : data_)
        if (v != 0) return false;
    return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row(std::size_t a, std::size_t b, const Int& c) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) += c * (*this)(b, j);
}

void IntMatrix::add_col(std::size_t a, std::size_t b, const Int& c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) += c * (*this)(i, b);
}

void IntMatrix::negate_row(std::size_t a) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) = -(*this)(a, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

std::vector<Int> SmithDecomposition::divisors() const {
    std::size_t n = std::min(diagonal.rows(), diagonal.cols());
    std::vector<Int> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = diagonal(i, i);
    return d;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    SmithDecomposition s{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
    IntMatrix& d = s.diagonal;
    IntMatrix& u = s.left;
    IntMatrix& v = s.right;

    const std::size_t steps = std::min(rows, cols);
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // pivot: least |entry| in the trailing block
            std::size_t pi = t, pj = t;
            bool found = false;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    if (d(i, j) == 0) continue;
                    if (!found || abs(d(i, j)) < abs(d(pi, pj))) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            if (!found) goto done;  // trailing block is zero

            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            // clear the pivot cross; truncated division leaves remainders
            // strictly smaller than the pivot, so the loop terminates
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d(i, t) == 0) continue;
                Int q = d(i, t) / d(t, t);
                if (q != 0) {
                    d.add_row(i, t, -q);
                    u.add_row(i, t, -q);
                }
                if (d(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d(t, j) == 0) continue;
                Int q = d(t, j) / d(t, t);
                if (q != 0) {
                    d.add_col(j, t, -q);
                    v.add_col(j, t, -q);
                }
                if (d(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // pivot must divide the rest of the block; fold an offending row in
            std::size_t bi = 0;
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        divides = false;
                        bi = i;
                        break;
                    }
            if (divides) break;
            d.add_row(t, bi, 1);
            u.add_row(t, bi, 1);
        }
    }
done:
    for (std::size_t t = 0; t < steps; ++t)
        if (d(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    return s;
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap_i = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (a(i, k) != 0) {
                    swap_i = i;
                    break;
                }
            if (swap_i == n) return 0;
            a.swap_rows(k, swap_i);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::optional<IntMatrix> solve_columns(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve_columns: shape mismatch");
    SmithDecomposition s = smith_normal_form(a);
    IntMatrix c = s.left * b;  // d * y = c with d diagonal
    const std::size_t k = std::min(a.rows(), a.cols());
    IntMatrix y(a.cols(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i < k && s.diagonal(i, i) != 0) {
            const Int& di = s.diagonal(i, i);
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (c(i, j) % di != 0) return std::nullopt;
                y(i, j) = c(i, j) / di;
            }
        } else {
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (c(i, j) != 0) return std::nullopt;
        }
    }
    return s.right * y;
}

}  // namespace reebop
