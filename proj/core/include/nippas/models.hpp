#pragma once

#include "nippas/geometry.hpp"

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace nippas {

/// One black-box evaluation: the QoI, the QoI-projected operator terms, and
/// (for linear models on request) the full solution and full operator terms.
struct BlackBoxSample {
    Vector qoi;                                  // u(z)
    std::vector<Vector> term_values;             // Q L_l v(z), l = 0..n_l-1
    Vector full_solution;                        // v(z), empty unless requested
    std::vector<Vector> full_term_values;        // L_l v(z), empty unless requested
};

/// Linear map from the solution vector to the QoI vector.
struct QoiSpec {
    enum class Kind { identity, select, matrix };

    Kind kind = Kind::identity;
    int index = 0;            // select
    Eigen::MatrixXd matrix;   // matrix

    static QoiSpec identity() { return {}; }
    static QoiSpec select(int idx) { return {Kind::select, idx, {}}; }
    static QoiSpec dense(Eigen::MatrixXd m) { return {Kind::matrix, 0, std::move(m)}; }

    int output_size(int n_pde) const;
    Vector apply(const Vector& v) const;
    /// Spectral norm ||Q||_2.
    double norm2() const;
};

/// Adapter contract for a parametric PDE solver: sampling returns the QoI and
/// the per-operator-term projections; the coefficient functions gamma_l(z)
/// and the projected source Q S(z) are known analytically. Adapters are pure
/// in z given fixed configuration.
class BlackBoxModel {
public:
    virtual ~BlackBoxModel() = default;

    virtual std::string name() const = 0;
    virtual int dim() const = 0;        // parameter dimension d
    virtual int num_terms() const = 0;  // n_l
    virtual int qoi_size() const = 0;   // N_QoI

    /// gamma_l(z), the scalar coefficient in front of operator term l.
    virtual double coefficient(int l, const Vector& z) const = 0;
    /// Q S(z).
    virtual Vector qoi_source(const Vector& z) const = 0;
    /// Solve at z. with_full requests full-space data (linear models only).
    BlackBoxSample sample(const Vector& z, bool with_full = false) const {
        return do_sample(z, with_full);
    }

    /// True when the model exposes explicit operator matrices (enables the
    /// scaled residual and classic empirical interpolation measures).
    virtual bool linear() const { return false; }
    virtual int pde_size() const { return 0; }
    virtual const Eigen::SparseMatrix<double>& operator_matrix(int l) const;
    virtual Vector full_source(const Vector& z) const;
    virtual Vector apply_qoi_map(const Vector& v) const;

private:
    virtual BlackBoxSample do_sample(const Vector& z, bool with_full) const = 0;
};

/// Memoizes expensive reference evaluations, keyed by the exact bit pattern
/// of z. Persistable as structured text for reuse across runs.
class ReferenceCache {
public:
    const Vector& get(const Vector& z, const std::function<Vector(const Vector&)>& eval);
    std::size_t size() const { return map_.size(); }

    void save(const std::string& path) const;
    /// Merges entries from a cache file; missing file is not an error.
    void load(const std::string& path);

private:
    std::unordered_map<std::string, Vector> map_;
};

// ---------------------------------------------------------------------------
// Steady advection-diffusion:  Re(z) v_x - v_xx = 0, v(0)=0, v(1)=1
// ---------------------------------------------------------------------------

enum class ReProfile { re1, re2, re3 };

ReProfile re_profile_from_string(const std::string& s);
std::string to_string(ReProfile p);

/// Central finite differences on n interior points x_i = i dx, dx = 1/(n+1).
/// Terms: L1 (first derivative, gamma = Re(z)) and L2 (second derivative,
/// gamma = -1). Requires the cell Reynolds number Re(z) dx < 2.
class SteadyAdvectionDiffusion final : public BlackBoxModel {
public:
    SteadyAdvectionDiffusion(ReProfile profile, int n_interior, QoiSpec qoi);
    /// Arbitrary Reynolds profile Re(z).
    SteadyAdvectionDiffusion(std::function<double(double)> reynolds_fn, int n_interior,
                             QoiSpec qoi);

    std::string name() const override { return "steady_ad"; }
    int dim() const override { return 1; }
    int num_terms() const override { return 2; }
    int qoi_size() const override;
    double coefficient(int l, const Vector& z) const override;
    Vector qoi_source(const Vector& z) const override;

    bool linear() const override { return true; }
    int pde_size() const override { return n_; }
    const Eigen::SparseMatrix<double>& operator_matrix(int l) const override;
    Vector full_source(const Vector& z) const override;
    Vector apply_qoi_map(const Vector& v) const override;

    double reynolds(double z) const;
    double dx() const { return dx_; }
    double grid_point(int i) const { return (i + 1) * dx_; }
    const QoiSpec& qoi_spec() const { return qoi_; }
    /// Full discrete solution (tridiagonal solve).
    Vector solve(double z) const;
    /// Exact solution of the continuous problem, v(x) = (e^{Re x}-1)/(e^{Re}-1).
    static double exact_solution(double reynolds, double x);
    /// Natural random space [0, 1].
    static BoundingBox parameter_box();

private:
    BlackBoxSample do_sample(const Vector& z, bool with_full) const override;

    std::function<double(double)> reynolds_fn_;
    int n_;
    double dx_;
    QoiSpec qoi_;
    Eigen::SparseMatrix<double> l1_, l2_;
};

// ---------------------------------------------------------------------------
// Unsteady advection-diffusion:  v_t + z1 v_x = z2 v_xx, periodic on [0,2pi]
// ---------------------------------------------------------------------------

enum class TimeScheme { backward_euler, crank_nicolson, rk4 };

TimeScheme time_scheme_from_string(const std::string& s);
std::string to_string(TimeScheme s);

/// Fourier spectral discretisation on the equidistant periodic grid
/// x_i = 2 pi i / n_x, initial condition v(x,0) = sin(x), marched to t = 1.
/// The QoI is the solution value at x = 2 pi (grid point 0 by periodicity).
/// Terms: discrete time derivative (gamma = 1), v_x (gamma = z1), and v_xx
/// (gamma = -z2), all taken at the space-time location the scheme enforces in
/// its final step, so the discrete equation holds to round-off.
class UnsteadyAdvectionDiffusion final : public BlackBoxModel {
public:
    UnsteadyAdvectionDiffusion(TimeScheme scheme, int n_x, double dt, double t_final = 1.0);

    std::string name() const override { return "unsteady_ad"; }
    int dim() const override { return 2; }
    int num_terms() const override { return 3; }
    int qoi_size() const override { return 1; }
    double coefficient(int l, const Vector& z) const override;
    Vector qoi_source(const Vector& z) const override;

    TimeScheme scheme() const { return scheme_; }
    double dt() const { return dt_; }
    int n_x() const { return n_x_; }
    /// Exact solution of the continuous problem at the QoI location,
    /// v(2pi, t) = e^{-z2 t} sin(2pi - z1 t).
    double exact_qoi(const Vector& z) const;
    /// Natural random space [0, 2pi]^2.
    static BoundingBox parameter_box();

private:
    BlackBoxSample do_sample(const Vector& z, bool with_full) const override;

    TimeScheme scheme_;
    int n_x_;
    double dt_;
    double t_final_;
};

// ---------------------------------------------------------------------------
// Shallow-water dambreak with parameters (g, h_l, v_l) on a simplex chart
// ---------------------------------------------------------------------------

/// First-order finite volumes with the local Lax-Friedrichs flux on [-1, 1],
/// reflective walls, Riemann initial data (h_l, v_l | 1, 0), marched to t = 1
/// under a CFL constraint. Parameters live on the 2D chart of the scaled
/// simplex; sampling maps chart coordinates to (g, h_l, v_l) internally.
/// The QoI is h in the leftmost cell at t = 1. Terms at the QoI row: the
/// discrete d/dt of h and the discrete d/dx of hv from the final update
/// (both gamma = 1, zero source).
class SweDambreak final : public BlackBoxModel {
public:
    SweDambreak(int n_cells, double cfl, SimplexChart chart = SimplexChart::swe_parameters());

    std::string name() const override { return "swe_dambreak"; }
    int dim() const override { return 2; }
    int num_terms() const override { return 2; }
    int qoi_size() const override { return 1; }
    double coefficient(int l, const Vector& z) const override;
    Vector qoi_source(const Vector& z) const override;

    const SimplexChart& chart() const { return chart_; }
    int n_cells() const { return n_cells_; }
    /// Total mass (integral of h) at t = 0 and t = 1 for a conservation audit.
    std::pair<double, double> mass_budget(const Vector& z) const;
    /// Natural chart space [0, 1]^2 (restricted to the unit triangle).
    static BoundingBox parameter_box();

private:
    BlackBoxSample do_sample(const Vector& z, bool with_full) const override;

    struct Solve;
    Solve run_solver(const Vector& z) const;

    int n_cells_;
    double cfl_;
    SimplexChart chart_;
};

// ---------------------------------------------------------------------------
// Closed-form toy model
// ---------------------------------------------------------------------------

/// QoI = f(z) with a single operator term of value f(z), unit coefficient and
/// source f(z); the residual then equals the interpolation defect of f.
class AnalyticToy final : public BlackBoxModel {
public:
    AnalyticToy(BoundingBox box, std::function<double(const Vector&)> f,
                std::string label = "analytic_toy");

    std::string name() const override { return label_; }
    int dim() const override { return box_.dim(); }
    int num_terms() const override { return 1; }
    int qoi_size() const override { return 1; }
    double coefficient(int l, const Vector& z) const override;
    Vector qoi_source(const Vector& z) const override;

    const BoundingBox& box() const { return box_; }
    double value(const Vector& z) const { return f_(z); }

private:
    BlackBoxSample do_sample(const Vector& z, bool with_full) const override;

    BoundingBox box_;
    std::function<double(const Vector&)> f_;
    std::string label_;
};

}  // namespace nippas
