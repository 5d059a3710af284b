#pragma once

#include "reebop/abelian_group.hpp"
#include "reebop/integer_matrix.hpp"

#include <vector>

namespace reebop {

// Cellular chain complex with integer coefficients. dims[k] counts the cells
// in degree k; boundary(k) maps degree-k chains to degree-(k-1) chains. The
// constructor re-checks shapes and boundary-of-boundary vanishing, so every
// live instance is a genuine complex.
class ChainComplex {
public:
    // boundaries[k-1] is the degree-k boundary matrix, dims[k-1] x dims[k];
    // throws std::invalid_argument on shape mismatch or when some composite
    // boundary fails to vanish
    ChainComplex(std::vector<int> dims, std::vector<IntMatrix> boundaries);

    int top_degree() const { return static_cast<int>(dims_.size()) - 1; }
    const std::vector<int>& dims() const { return dims_; }
    int cells(int k) const;  // 0 outside 0..top_degree

    const IntMatrix& boundary(int k) const;  // 1 <= k <= top_degree

    // kernel/image via the elementary-divisor chain; throws std::out_of_range
    // for k outside 0..top_degree
    FGAbelianGroup homology(int k) const;

    long long euler_characteristic() const;

private:
    std::vector<int> dims_;
    std::vector<IntMatrix> boundaries_;
};

ChainComplex point_complex();

// d = 0: two points; d = 1: two vertices and two edges; d >= 2: one vertex
// and one top cell
ChainComplex sphere_complex(int d);

// one cell per degree 0..3, the 2-cell attached with multiplicity p (p >= 2)
ChainComplex lens_complex(const Int& p);

// product complex with the alternating-sign differential
ChainComplex tensor_product(const ChainComplex& a, const ChainComplex& b);

// one-point union along the base 0-cell (cell 0 of each side)
ChainComplex wedge_sum(const ChainComplex& a, const ChainComplex& b);

}  // namespace reebop
