#include "reebop/chain_complex.hpp"

#include <stdexcept>
#include <string>

namespace reebop {

ChainComplex::ChainComplex(std::vector<int> dims, std::vector<IntMatrix> boundaries)
    : dims_(std::move(dims)), boundaries_(std::move(boundaries)) {
    if (dims_.empty()) throw std::invalid_argument("complex needs at least degree 0");
    for (int d : dims_)
        if (d < 0) throw std::invalid_argument("cell counts must be non-negative");
    if (boundaries_.size() + 1 != dims_.size())
        throw std::invalid_argument("expected one boundary matrix per degree 1..top");
    for (std::size_t k = 0; k < boundaries_.size(); ++k) {
        const IntMatrix& b = boundaries_[k];
        if (b.rows() != static_cast<std::size_t>(dims_[k]) ||
            b.cols() != static_cast<std::size_t>(dims_[k + 1]))
            throw std::invalid_argument("boundary " + std::to_string(k + 1) +
                                        " has the wrong shape");
    }
    for (std::size_t k = 0; k + 1 < boundaries_.size(); ++k)
        if (!(boundaries_[k] * boundaries_[k + 1]).is_zero())
            throw std::invalid_argument("composite boundary " + std::to_string(k + 2) +
                                        " -> " + std::to_string(k) + " does not vanish");
}

int ChainComplex::cells(int k) const {
    if (k < 0 || k > top_degree()) return 0;
    return dims_[static_cast<std::size_t>(k)];
}

const IntMatrix& ChainComplex::boundary(int k) const {
    if (k < 1 || k > top_degree()) throw std::out_of_range("no boundary at degree " + std::to_string(k));
    return boundaries_[static_cast<std::size_t>(k - 1)];
}

FGAbelianGroup ChainComplex::homology(int k) const {
    if (k < 0 || k > top_degree())
        throw std::out_of_range("homology degree " + std::to_string(k) + " out of range");
    const std::size_t ck = static_cast<std::size_t>(dims_[k]);
    IntMatrix out =
        k >= 1 ? boundary(k) : IntMatrix(0, ck);  // degree k -> k-1
    IntMatrix in =
        k < top_degree() ? boundary(k + 1) : IntMatrix(ck, 0);  // degree k+1 -> k

    // kernel basis of `out`: columns of the right transform whose divisor is 0
    SmithDecomposition s = smith_normal_form(out);
    const std::size_t pivots = std::min(out.rows(), out.cols());
    std::vector<std::size_t> kernel_cols;
    for (std::size_t j = 0; j < ck; ++j)
        if (j >= pivots || s.diagonal(j, j) == 0) kernel_cols.push_back(j);

    // express the incoming image in the transformed basis; rows off the
    // kernel must vanish because the composite boundary is zero
    auto coords = solve_columns(s.right, in);
    if (!coords) throw std::logic_error("unimodular solve failed");
    IntMatrix relations(kernel_cols.size(), in.cols());
    for (std::size_t r = 0; r < kernel_cols.size(); ++r)
        for (std::size_t j = 0; j < in.cols(); ++j)
            relations(r, j) = (*coords)(kernel_cols[r], j);

    return canonicalize({std::move(relations)});
}

long long ChainComplex::euler_characteristic() const {
    long long chi = 0;
    int sign = 1;
    for (int d : dims_) {
        chi += sign * static_cast<long long>(d);
        sign = -sign;
    }
    return chi;
}

ChainComplex point_complex() { return ChainComplex({1}, {}); }

ChainComplex sphere_complex(int d) {
    if (d < 0) throw std::invalid_argument("sphere dimension must be >= 0");
    if (d == 0) return ChainComplex({2}, {});
    if (d == 1) {
        IntMatrix b(2, 2);
        b(0, 0) = -1;
        b(1, 0) = 1;
        b(0, 1) = -1;
        b(1, 1) = 1;
        return ChainComplex({2, 2}, {b});
    }
    std::vector<int> dims(static_cast<std::size_t>(d) + 1, 0);
    dims.front() = dims.back() = 1;
    std::vector<IntMatrix> boundaries;
    for (int k = 1; k <= d; ++k)
        boundaries.emplace_back(static_cast<std::size_t>(dims[k - 1]),
                                static_cast<std::size_t>(dims[k]));
    return ChainComplex(std::move(dims), std::move(boundaries));
}

ChainComplex lens_complex(const Int& p) {
    if (p < 2) throw std::invalid_argument("lens parameter must be >= 2");
    IntMatrix b1(1, 1), b2(1, 1), b3(1, 1);
    b2(0, 0) = p;
    return ChainComplex({1, 1, 1, 1}, {b1, b2, b3});
}

namespace {

// cell layout of the product: degree k lists blocks (a, k-a) by ascending a
struct ProductLayout {
    const ChainComplex& a;
    const ChainComplex& b;

    int top() const { return a.top_degree() + b.top_degree(); }

    int block_offset(int k, int a_deg) const {
        int off = 0;
        for (int i = 0; i < a_deg; ++i) off += a.cells(i) * b.cells(k - i);
        return off;
    }

    int cells(int k) const { return block_offset(k, k + 1); }

    int index(int k, int a_deg, int i, int j) const {
        return block_offset(k, a_deg) + i * b.cells(k - a_deg) + j;
    }
};

}  // namespace

ChainComplex tensor_product(const ChainComplex& a, const ChainComplex& b) {
    ProductLayout lay{a, b};
    const int top = lay.top();
    std::vector<int> dims(static_cast<std::size_t>(top) + 1);
    for (int k = 0; k <= top; ++k) dims[static_cast<std::size_t>(k)] = lay.cells(k);

    std::vector<IntMatrix> boundaries;
    for (int k = 1; k <= top; ++k) {
        IntMatrix m(static_cast<std::size_t>(dims[k - 1]), static_cast<std::size_t>(dims[k]));
        for (int ad = 0; ad <= k; ++ad) {
            const int bd = k - ad;
            for (int i = 0; i < a.cells(ad); ++i)
                for (int j = 0; j < b.cells(bd); ++j) {
                    const int col = lay.index(k, ad, i, j);
                    if (ad >= 1) {
                        const IntMatrix& da = a.boundary(ad);
                        for (int r = 0; r < a.cells(ad - 1); ++r) {
                            const Int& c = da(static_cast<std::size_t>(r),
                                              static_cast<std::size_t>(i));
                            if (c == 0) continue;
                            m(static_cast<std::size_t>(lay.index(k - 1, ad - 1, r, j)),
                              static_cast<std::size_t>(col)) += c;
                        }
                    }
                    if (bd >= 1) {
                        const IntMatrix& db = b.boundary(bd);
                        const int sign = ad % 2 == 0 ? 1 : -1;
                        for (int r = 0; r < b.cells(bd - 1); ++r) {
                            const Int& c = db(static_cast<std::size_t>(r),
                                              static_cast<std::size_t>(j));
                            if (c == 0) continue;
                            m(static_cast<std::size_t>(lay.index(k - 1, ad, i, r)),
                              static_cast<std::size_t>(col)) += sign * c;
                        }
                    }
                }
        }
        boundaries.push_back(std::move(m));
    }
    return ChainComplex(std::move(dims), std::move(boundaries));
}

ChainComplex wedge_sum(const ChainComplex& a, const ChainComplex& b) {
    if (a.cells(0) < 1 || b.cells(0) < 1)
        throw std::invalid_argument("wedge sum needs a base 0-cell on both sides");

    const int top = std::max(a.top_degree(), b.top_degree());
    std::vector<int> dims(static_cast<std::size_t>(top) + 1);
    dims[0] = a.cells(0) + b.cells(0) - 1;
    for (int k = 1; k <= top; ++k) dims[static_cast<std::size_t>(k)] = a.cells(k) + b.cells(k);

    // vertices of b shift behind those of a, except the base which is merged
    auto b_vertex = [&](int j) { return j == 0 ? 0 : a.cells(0) + j - 1; };

    std::vector<IntMatrix> boundaries;
    for (int k = 1; k <= top; ++k) {
        IntMatrix m(static_cast<std::size_t>(dims[k - 1]), static_cast<std::size_t>(dims[k]));
        const int a_cols = a.cells(k);
        if (a_cols > 0 && k <= a.top_degree()) {
            const IntMatrix& da = a.boundary(k);
            for (int r = 0; r < a.cells(k - 1); ++r)
                for (int c = 0; c < a_cols; ++c)
                    m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                        da(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        }
        if (b.cells(k) > 0 && k <= b.top_degree()) {
            const IntMatrix& db = b.boundary(k);
            for (int r = 0; r < b.cells(k - 1); ++r) {
                const int row = k == 1 ? b_vertex(r) : a.cells(k - 1) + r;
                for (int c = 0; c < b.cells(k); ++c)
                    m(static_cast<std::size_t>(row), static_cast<std::size_t>(a_cols + c)) +=
                        db(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
            }
        }
        boundaries.push_back(std::move(m));
    }
    return ChainComplex(std::move(dims), std::move(boundaries));
}

}  // namespace reebop
