#include "nippas/basis.hpp"

#include <numeric>
#include <stdexcept>

namespace nippas {

int MultiIndex::total_degree() const {
    return std::accumulate(degrees.begin(), degrees.end(), 0);
}

bool graded_lex_less(const MultiIndex& a, const MultiIndex& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("graded_lex_less: dimension mismatch");
    const int ta = a.total_degree(), tb = b.total_degree();
    if (ta != tb) return ta < tb;
    // within a grade: descending lexicographic
    for (int i = 0; i < a.dim(); ++i)
        if (a.degrees[i] != b.degrees[i]) return a.degrees[i] > b.degrees[i];
    return false;
}

MultiIndex next_index(const BasisSpec& spec) {
    const int d = spec.dim();
    if (spec.indices.empty()) return MultiIndex::zero(d);

    MultiIndex m = spec.indices.back();
    const int total = m.total_degree();
    if (d == 1) {
        m.degrees[0] = total + 1;
        return m;
    }
    // rightmost entry left of the tail that can donate a unit
    int pivot = -1;
    for (int i = d - 2; i >= 0; --i)
        if (m.degrees[i] > 0) { pivot = i; break; }
    if (pivot < 0) {
        // (0,...,0,total) closes the grade; open the next one
        m.degrees.assign(d, 0);
        m.degrees[0] = total + 1;
        return m;
    }
    const int tail = m.degrees[d - 1];
    m.degrees[pivot] -= 1;
    for (int i = pivot + 1; i < d; ++i) m.degrees[i] = 0;
    m.degrees[pivot + 1] = tail + 1;
    return m;
}

namespace {

// T_0..T_k at t via the three-term recurrence, appended to out
void chebyshev_values(double t, int max_degree, std::vector<double>& out) {
    out.resize(static_cast<std::size_t>(max_degree) + 1);
    out[0] = 1.0;
    if (max_degree >= 1) out[1] = t;
    for (int k = 2; k <= max_degree; ++k) out[k] = 2.0 * t * out[k - 1] - out[k - 2];
}

double to_reference(const BoundingBox& box, const Vector& z, int axis) {
    return 2.0 * (z[axis] - box.lo[axis]) / box.width(axis) - 1.0;
}

}  // namespace

double eval_basis_fn(const MultiIndex& m, const BoundingBox& box, const Vector& z) {
    if (m.dim() != box.dim() || z.size() != box.dim())
        throw std::invalid_argument("eval_basis_fn: dimension mismatch");
    double value = 1.0;
    std::vector<double> t_values;
    for (int axis = 0; axis < box.dim(); ++axis) {
        chebyshev_values(to_reference(box, z, axis), m.degrees[axis], t_values);
        value *= t_values[m.degrees[axis]];
    }
    return value;
}

Vector basis_row(const BasisSpec& spec, const Vector& z) {
    if (z.size() != spec.dim())
        throw std::invalid_argument("basis_row: dimension mismatch");
    const int d = spec.dim();
    const int n = spec.size();

    std::vector<int> max_degree(d, 0);
    for (const MultiIndex& m : spec.indices)
        for (int axis = 0; axis < d; ++axis)
            max_degree[axis] = std::max(max_degree[axis], m.degrees[axis]);

    std::vector<std::vector<double>> axis_values(d);
    for (int axis = 0; axis < d; ++axis)
        chebyshev_values(to_reference(spec.box, z, axis), max_degree[axis], axis_values[axis]);

    Vector row(n);
    for (int i = 0; i < n; ++i) {
        double v = 1.0;
        for (int axis = 0; axis < d; ++axis)
            v *= axis_values[axis][spec.indices[i].degrees[axis]];
        row[i] = v;
    }
    return row;
}

double eval_combination(const BasisSpec& spec, const Vector& coeffs, const Vector& z) {
    if (coeffs.size() != spec.size())
        throw std::invalid_argument("eval_combination: coefficient count mismatch");
    return basis_row(spec, z).dot(coeffs);
}

}  // namespace nippas
