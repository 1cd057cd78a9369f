#pragma once

#include "nippas/geometry.hpp"

#include <vector>

namespace nippas {

/// Exponent vector of one multivariate basis function.
struct MultiIndex {
    std::vector<int> degrees;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> deg) : degrees(std::move(deg)) {}
    static MultiIndex zero(int dim) { return MultiIndex(std::vector<int>(dim, 0)); }

    int dim() const { return static_cast<int>(degrees.size()); }
    int total_degree() const;

    bool operator==(const MultiIndex&) const = default;
};

/// Graded lexicographic order: lower total degree first; within a grade the
/// degree vectors descend lexicographically, so (1,0) precedes (0,1).
bool graded_lex_less(const MultiIndex& a, const MultiIndex& b);

/// Tensor Chebyshev basis on a bounding box, one function per index, indices
/// kept in graded lexicographic order and grown one at a time.
struct BasisSpec {
    BoundingBox box;
    std::vector<MultiIndex> indices;

    explicit BasisSpec(BoundingBox b) : box(std::move(b)) {}
    int dim() const { return box.dim(); }
    int size() const { return static_cast<int>(indices.size()); }
};

/// Successor of the last index of the spec in graded lexicographic order
/// ((0,...,0) for an empty spec).
MultiIndex next_index(const BasisSpec& spec);

/// prod_i T_{m_i}(t_i) with t_i the affine map of z_i onto [-1,1] and T_k the
/// Chebyshev polynomial of the first kind (three-term recurrence).
double eval_basis_fn(const MultiIndex& m, const BoundingBox& box, const Vector& z);

/// All basis functions of the spec at z. Per-axis Chebyshev values are
/// computed once by recurrence and shared across terms.
Vector basis_row(const BasisSpec& spec, const Vector& z);

/// sum_i coeffs[i] * phi_i(z); throws on length mismatch.
double eval_combination(const BasisSpec& spec, const Vector& coeffs, const Vector& z);

}  // namespace nippas
