#include "nippas/models.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace nippas {

namespace {

struct Cell {
    double h;
    double m;  // momentum h*v
};

struct FluxPair {
    double fh;
    double fm;
};

FluxPair physical_flux(const Cell& u, double g) {
    const double v = u.m / u.h;
    return {u.m, u.m * v + 0.5 * g * u.h * u.h};
}

// local Lax-Friedrichs (Rusanov)
FluxPair numerical_flux(const Cell& left, const Cell& right, double g) {
    const FluxPair fl = physical_flux(left, g);
    const FluxPair fr = physical_flux(right, g);
    const double al = std::abs(left.m / left.h) + std::sqrt(g * left.h);
    const double ar = std::abs(right.m / right.h) + std::sqrt(g * right.h);
    const double a = std::max(al, ar);
    return {0.5 * (fl.fh + fr.fh) - 0.5 * a * (right.h - left.h),
            0.5 * (fl.fm + fr.fm) - 0.5 * a * (right.m - left.m)};
}

}  // namespace

struct SweDambreak::Solve {
    double qoi_h;          // h in the leftmost cell at t = 1
    double dh_dt;          // discrete d/dt of h there, final step
    double dflux_dx;       // discrete d/dx of hv there, final step
    double mass_initial;
    double mass_final;
};

SweDambreak::SweDambreak(int n_cells, double cfl, SimplexChart chart)
    : n_cells_(n_cells), cfl_(cfl), chart_(std::move(chart)) {
    if (n_cells_ < 10) throw std::invalid_argument("swe_dambreak: need at least 10 cells");
    if (!(cfl_ > 0.0) || cfl_ > 1.0)
        throw std::invalid_argument("swe_dambreak: CFL number must lie in (0, 1]");
}

SweDambreak::Solve SweDambreak::run_solver(const Vector& z) const {
    const Eigen::Vector3d params = chart_.to_ambient(z);
    const double g = params[0], h_left = params[1], v_left = params[2];
    if (!(h_left > 0.0)) throw std::runtime_error("swe_dambreak: h_l must be positive");
    if (!(g > 0.0)) throw std::runtime_error("swe_dambreak: g must be positive");

    const int n = n_cells_;
    const double dx = 2.0 / n;
    std::vector<Cell> u(n);
    for (int i = 0; i < n; ++i) {
        const double x = -1.0 + (i + 0.5) * dx;
        if (x <= 0.0)
            u[i] = {h_left, h_left * v_left};
        else
            u[i] = {1.0, 0.0};
    }

    const double t_final = 1.0;
    double mass_initial = 0.0;
    for (const Cell& c : u) mass_initial += c.h * dx;

    std::vector<FluxPair> flux(n + 1);
    double t = 0.0;
    double prev_h0 = u[0].h;
    double last_dt = 0.0;
    double last_dflux = 0.0;

    while (t < t_final - 1e-14) {
        double max_speed = 0.0;
        for (const Cell& c : u)
            max_speed = std::max(max_speed, std::abs(c.m / c.h) + std::sqrt(g * c.h));
        double dt = cfl_ * dx / max_speed;
        dt = std::min(dt, t_final - t);

        // reflective ghost states: mirrored h, negated momentum
        const Cell ghost_left{u[0].h, -u[0].m};
        const Cell ghost_right{u[n - 1].h, -u[n - 1].m};
        flux[0] = numerical_flux(ghost_left, u[0], g);
        flux[n] = numerical_flux(u[n - 1], ghost_right, g);
        for (int i = 1; i < n; ++i) flux[i] = numerical_flux(u[i - 1], u[i], g);

        prev_h0 = u[0].h;
        for (int i = 0; i < n; ++i) {
            u[i].h -= dt / dx * (flux[i + 1].fh - flux[i].fh);
            u[i].m -= dt / dx * (flux[i + 1].fm - flux[i].fm);
            if (!(u[i].h > 0.0))
                throw std::runtime_error("swe_dambreak: dry state (h <= 0) encountered");
        }

        double new_speed = 0.0;
        for (const Cell& c : u)
            new_speed = std::max(new_speed, std::abs(c.m / c.h) + std::sqrt(g * c.h));
        if (dt * new_speed / dx > 1.0)
            throw std::runtime_error("swe_dambreak: CFL condition violated");

        last_dt = dt;
        last_dflux = (flux[1].fh - flux[0].fh) / dx;
        t += dt;
    }

    double mass_final = 0.0;
    for (const Cell& c : u) mass_final += c.h * dx;

    Solve out;
    out.qoi_h = u[0].h;
    out.dh_dt = (u[0].h - prev_h0) / last_dt;
    out.dflux_dx = last_dflux;
    out.mass_initial = mass_initial;
    out.mass_final = mass_final;
    return out;
}

double SweDambreak::coefficient(int l, const Vector& z) const {
    if (z.size() != 2) throw std::invalid_argument("swe_dambreak: z must be a 2D chart point");
    if (l != 0 && l != 1) throw std::invalid_argument("swe_dambreak: term index out of range");
    return 1.0;  // the h-equation row involves no parameter coefficients
}

Vector SweDambreak::qoi_source(const Vector& z) const {
    if (z.size() != 2) throw std::invalid_argument("swe_dambreak: z must be a 2D chart point");
    return Vector::Zero(1);
}

BlackBoxSample SweDambreak::do_sample(const Vector& z, bool) const {
    if (z.size() != 2) throw std::invalid_argument("swe_dambreak: z must be a 2D chart point");
    const Solve s = run_solver(z);
    BlackBoxSample out;
    out.qoi = Vector::Constant(1, s.qoi_h);
    out.term_values.push_back(Vector::Constant(1, s.dh_dt));
    out.term_values.push_back(Vector::Constant(1, s.dflux_dx));
    return out;
}

std::pair<double, double> SweDambreak::mass_budget(const Vector& z) const {
    const Solve s = run_solver(z);
    return {s.mass_initial, s.mass_final};
}

BoundingBox SweDambreak::parameter_box() {
    return BoundingBox::unit(2);
}

}  // namespace nippas
