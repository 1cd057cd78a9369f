#include "nippas/models.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace nippas {

ReProfile re_profile_from_string(const std::string& s) {
    if (s == "Re1" || s == "re1") return ReProfile::re1;
    if (s == "Re2" || s == "re2") return ReProfile::re2;
    if (s == "Re3" || s == "re3") return ReProfile::re3;
    throw std::invalid_argument("unknown Reynolds profile: " + s);
}

std::string to_string(ReProfile p) {
    switch (p) {
        case ReProfile::re1: return "Re1";
        case ReProfile::re2: return "Re2";
        case ReProfile::re3: return "Re3";
    }
    return "?";
}

namespace {

std::function<double(double)> profile_function(ReProfile profile) {
    switch (profile) {
        case ReProfile::re1: return [](double z) { return 99.0 * z + 1.0; };
        case ReProfile::re2: return [](double z) { return std::pow(10.0, 2.0 * z); };
        case ReProfile::re3: return [](double z) { return std::pow(10.0, -2.0 * (z - 1.0)); };
    }
    throw std::logic_error("steady_ad: unknown profile");
}

}  // namespace

SteadyAdvectionDiffusion::SteadyAdvectionDiffusion(ReProfile profile, int n_interior,
                                                   QoiSpec qoi)
    : SteadyAdvectionDiffusion(profile_function(profile), n_interior, std::move(qoi)) {}

SteadyAdvectionDiffusion::SteadyAdvectionDiffusion(std::function<double(double)> reynolds_fn,
                                                   int n_interior, QoiSpec qoi)
    : reynolds_fn_(std::move(reynolds_fn)),
      n_(n_interior),
      dx_(1.0 / (n_interior + 1)),
      qoi_(std::move(qoi)) {
    if (!reynolds_fn_) throw std::invalid_argument("steady_ad: null Reynolds profile");
    if (n_ < 3) throw std::invalid_argument("steady_ad: need at least 3 interior points");

    std::vector<Eigen::Triplet<double>> t1, t2;
    const double inv2dx = 1.0 / (2.0 * dx_);
    const double invdx2 = 1.0 / (dx_ * dx_);
    for (int i = 0; i < n_; ++i) {
        if (i > 0) {
            t1.emplace_back(i, i - 1, -inv2dx);
            t2.emplace_back(i, i - 1, invdx2);
        }
        t2.emplace_back(i, i, -2.0 * invdx2);
        if (i < n_ - 1) {
            t1.emplace_back(i, i + 1, inv2dx);
            t2.emplace_back(i, i + 1, invdx2);
        }
    }
    l1_.resize(n_, n_);
    l2_.resize(n_, n_);
    l1_.setFromTriplets(t1.begin(), t1.end());
    l2_.setFromTriplets(t2.begin(), t2.end());
}

double SteadyAdvectionDiffusion::reynolds(double z) const { return reynolds_fn_(z); }

int SteadyAdvectionDiffusion::qoi_size() const { return qoi_.output_size(n_); }

double SteadyAdvectionDiffusion::coefficient(int l, const Vector& z) const {
    if (z.size() != 1) throw std::invalid_argument("steady_ad: z must be 1D");
    if (l == 0) return reynolds(z[0]);
    if (l == 1) return -1.0;
    throw std::invalid_argument("steady_ad: term index out of range");
}

Vector SteadyAdvectionDiffusion::full_source(const Vector& z) const {
    if (z.size() != 1) throw std::invalid_argument("steady_ad: z must be 1D");
    Vector s = Vector::Zero(n_);
    // boundary value v(1) = 1 folded into the last interior equation
    s[n_ - 1] = -reynolds(z[0]) / (2.0 * dx_) + 1.0 / (dx_ * dx_);
    return s;
}

Vector SteadyAdvectionDiffusion::qoi_source(const Vector& z) const {
    return qoi_.apply(full_source(z));
}

Vector SteadyAdvectionDiffusion::solve(double z) const {
    const double re = reynolds(z);
    if (!(re * dx_ < 2.0))
        throw std::runtime_error("steady_ad: cell Reynolds number " +
                                 std::to_string(re * dx_) + " violates Re*dx < 2");

    // Thomas algorithm for (Re L1 - L2) v = S
    const double inv2dx = 1.0 / (2.0 * dx_);
    const double invdx2 = 1.0 / (dx_ * dx_);
    const double lower = -re * inv2dx - invdx2;
    const double diag = 2.0 * invdx2;
    const double upper = re * inv2dx - invdx2;

    std::vector<double> c(n_), d(n_);
    Vector rhs = full_source(Vector::Constant(1, z));
    c[0] = upper / diag;
    d[0] = rhs[0] / diag;
    for (int i = 1; i < n_; ++i) {
        const double denom = diag - lower * c[i - 1];
        c[i] = upper / denom;
        d[i] = (rhs[i] - lower * d[i - 1]) / denom;
    }
    Vector v(n_);
    v[n_ - 1] = d[n_ - 1];
    for (int i = n_ - 2; i >= 0; --i) v[i] = d[i] - c[i] * v[i + 1];
    return v;
}

BlackBoxSample SteadyAdvectionDiffusion::do_sample(const Vector& z, bool with_full) const {
    if (z.size() != 1) throw std::invalid_argument("steady_ad: z must be 1D");
    Vector v = solve(z[0]);
    Vector l1v = l1_ * v;
    Vector l2v = l2_ * v;

    BlackBoxSample out;
    out.qoi = qoi_.apply(v);
    out.term_values.push_back(qoi_.apply(l1v));
    out.term_values.push_back(qoi_.apply(l2v));
    if (with_full) {
        out.full_solution = std::move(v);
        out.full_term_values.push_back(std::move(l1v));
        out.full_term_values.push_back(std::move(l2v));
    }
    return out;
}

const Eigen::SparseMatrix<double>& SteadyAdvectionDiffusion::operator_matrix(int l) const {
    if (l == 0) return l1_;
    if (l == 1) return l2_;
    throw std::invalid_argument("steady_ad: term index out of range");
}

Vector SteadyAdvectionDiffusion::apply_qoi_map(const Vector& v) const {
    return qoi_.apply(v);
}

double SteadyAdvectionDiffusion::exact_solution(double reynolds, double x) {
    return std::expm1(reynolds * x) / std::expm1(reynolds);
}

BoundingBox SteadyAdvectionDiffusion::parameter_box() {
    return BoundingBox::unit(1);
}

}  // namespace nippas
