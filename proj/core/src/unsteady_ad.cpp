#include "nippas/models.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace nippas {

namespace {

using Complex = std::complex<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// amplification factor of one step of size dt for the mode ODE y' = lambda y
Complex amplification(TimeScheme scheme, Complex lambda, double dt) {
    const Complex mu = dt * lambda;
    switch (scheme) {
        case TimeScheme::backward_euler:
            return 1.0 / (1.0 - mu);
        case TimeScheme::crank_nicolson:
            return (1.0 + 0.5 * mu) / (1.0 - 0.5 * mu);
        case TimeScheme::rk4:
            return 1.0 + mu * (1.0 + mu * (0.5 + mu * (1.0 / 6.0 + mu / 24.0)));
    }
    return {};
}

// the state at which the scheme's final step evaluates the spatial operators;
// chosen so that (y^M - y^{M-1})/dt = lambda * w holds exactly per mode
Complex scheme_spatial_state(TimeScheme scheme, Complex lambda, double dt,
                             Complex y_prev, Complex y_new) {
    switch (scheme) {
        case TimeScheme::backward_euler:
            return y_new;
        case TimeScheme::crank_nicolson:
            return 0.5 * (y_prev + y_new);
        case TimeScheme::rk4: {
            const Complex mu = dt * lambda;
            return y_prev * (1.0 + mu * (0.5 + mu * (1.0 / 6.0 + mu / 24.0)));
        }
    }
    return {};
}

}  // namespace

TimeScheme time_scheme_from_string(const std::string& s) {
    if (s == "BE" || s == "be" || s == "backward_euler") return TimeScheme::backward_euler;
    if (s == "CN" || s == "cn" || s == "crank_nicolson") return TimeScheme::crank_nicolson;
    if (s == "RK4" || s == "rk4") return TimeScheme::rk4;
    throw std::invalid_argument("unknown time scheme: " + s);
}

std::string to_string(TimeScheme s) {
    switch (s) {
        case TimeScheme::backward_euler: return "BE";
        case TimeScheme::crank_nicolson: return "CN";
        case TimeScheme::rk4: return "RK4";
    }
    return "?";
}

UnsteadyAdvectionDiffusion::UnsteadyAdvectionDiffusion(TimeScheme scheme, int n_x,
                                                       double dt, double t_final)
    : scheme_(scheme), n_x_(n_x), dt_(dt), t_final_(t_final) {
    if (n_x_ < 4 || n_x_ % 2 != 0)
        throw std::invalid_argument("unsteady_ad: n_x must be even and >= 4");
    if (!(dt_ > 0.0) || !(t_final_ > 0.0) || dt_ > t_final_)
        throw std::invalid_argument("unsteady_ad: require 0 < dt <= t_final");
}

double UnsteadyAdvectionDiffusion::coefficient(int l, const Vector& z) const {
    if (z.size() != 2) throw std::invalid_argument("unsteady_ad: z must be 2D");
    switch (l) {
        case 0: return 1.0;     // time derivative
        case 1: return z[0];    // advection
        case 2: return -z[1];   // diffusion
    }
    throw std::invalid_argument("unsteady_ad: term index out of range");
}

Vector UnsteadyAdvectionDiffusion::qoi_source(const Vector& z) const {
    if (z.size() != 2) throw std::invalid_argument("unsteady_ad: z must be 2D");
    return Vector::Zero(1);
}

BlackBoxSample UnsteadyAdvectionDiffusion::do_sample(const Vector& z, bool) const {
    if (z.size() != 2) throw std::invalid_argument("unsteady_ad: z must be 2D");
    const double z1 = z[0], z2 = z[1];
    if (z2 < 0.0) throw std::runtime_error("unsteady_ad: negative diffusion coefficient");

    const int n = n_x_;
    // forward DFT of the initial condition v0(x) = sin(x)
    std::vector<Complex> v_hat(n);
    for (int k = 0; k < n; ++k) {
        Complex acc = 0.0;
        for (int j = 0; j < n; ++j) {
            const double x = kTwoPi * j / n;
            acc += std::sin(x) * std::exp(Complex(0.0, -kTwoPi * k * j / n));
        }
        v_hat[k] = acc / double(n);
    }

    // wavenumbers; the Nyquist mode carries no first derivative
    std::vector<double> wave(n);
    for (int k = 0; k < n; ++k) {
        const int kk = (k <= n / 2) ? k : k - n;
        wave[k] = (k == n / 2) ? 0.0 : double(kk);
    }
    std::vector<Complex> lambda(n);
    for (int k = 0; k < n; ++k)
        lambda[k] = Complex(-z2 * wave[k] * wave[k], -z1 * wave[k]);

    const long steps = std::max<long>(1, std::lround(std::ceil(t_final_ / dt_ - 1e-12)));
    const double dt_last = t_final_ - (steps - 1) * dt_;

    // stability guard over the modes the initial condition actually excites
    if (scheme_ == TimeScheme::rk4) {
        double max_amp = 0.0;
        for (int k = 0; k < n; ++k) {
            if (std::abs(v_hat[k]) < 1e-13) continue;
            max_amp = std::max(max_amp, std::abs(amplification(scheme_, lambda[k], dt_)));
        }
        if (max_amp > 1.0 + 1e-9)
            throw std::runtime_error(
                "unsteady_ad: RK4 diffusion-number bound violated (|amp| = " +
                std::to_string(max_amp) + ")");
    }

    std::vector<Complex> prev(n);
    for (long s = 0; s < steps; ++s) {
        const double dts = (s == steps - 1) ? dt_last : dt_;
        for (int k = 0; k < n; ++k) {
            prev[k] = v_hat[k];
            v_hat[k] *= amplification(scheme_, lambda[k], dts);
        }
    }

    // QoI location x = 2pi coincides with grid point 0, where all Fourier
    // factors are 1: point values are plain sums of modal amplitudes
    Complex u = 0.0, du_dt = 0.0, dv_dx = 0.0, dv_dxx = 0.0;
    for (int k = 0; k < n; ++k) {
        u += v_hat[k];
        du_dt += (v_hat[k] - prev[k]) / dt_last;
        const Complex w = scheme_spatial_state(scheme_, lambda[k], dt_last, prev[k], v_hat[k]);
        dv_dx += Complex(0.0, wave[k]) * w;
        dv_dxx += -wave[k] * wave[k] * w;
    }

    BlackBoxSample out;
    out.qoi = Vector::Constant(1, u.real());
    out.term_values.push_back(Vector::Constant(1, du_dt.real()));
    out.term_values.push_back(Vector::Constant(1, dv_dx.real()));
    out.term_values.push_back(Vector::Constant(1, dv_dxx.real()));
    return out;
}

double UnsteadyAdvectionDiffusion::exact_qoi(const Vector& z) const {
    return std::exp(-z[1] * t_final_) * std::sin(kTwoPi - z[0] * t_final_);
}

BoundingBox UnsteadyAdvectionDiffusion::parameter_box() {
    Vector lo(2), hi(2);
    lo << 0.0, 0.0;
    hi << kTwoPi, kTwoPi;
    return BoundingBox(lo, hi);
}

}  // namespace nippas
