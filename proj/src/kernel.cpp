#include "wellheat/kernel.hpp"

#include <cmath>
#include <ostream>

#include "wellheat/csv.hpp"

namespace wellheat {

void SoilProps::validate() const {
    if (!(rho_f > 0.0)) throw ConfigError("rho_f must be strictly positive");
    if (!(c_f > 0.0)) throw ConfigError("c_f must be strictly positive");
    if (!(k_f > 0.0)) throw ConfigError("k_f must be strictly positive");
    if (!(r_f > 0.0)) throw ConfigError("formation_radius_rf must be strictly positive");
}

double SoilProps::dimensionless_time(double t_seconds) const {
    return k_f * t_seconds / (rho_f * c_f * r_f * r_f);
}

double p_dimensionless(double s) {
    if (s < 0.0) throw NumericalError("p_dimensionless: negative dimensionless time");
    if (s <= 1.5) {
        const double rs = std::sqrt(s);
        return 2.0 / std::sqrt(M_PI) * rs * (1.0 - 0.3 * rs);
    }
    return 0.5 * (0.80907 + std::log(s)) * (1.0 + 0.6 / s);
}

double p_of_time(double t_seconds, const SoilProps& soil) {
    if (t_seconds < 0.0) throw NumericalError("p_of_time: negative time");
    return p_dimensionless(soil.dimensionless_time(t_seconds)) / (2.0 * M_PI * soil.k_f);
}

KernelTable build_kernel_table(double tau, std::size_t n_steps,
                               const SoilProps& soil, double strength) {
    if (!(tau > 0.0)) throw NumericalError("build_kernel_table: tau must be positive");
    if (n_steps < 1) throw NumericalError("build_kernel_table: n_steps must be >= 1");
    KernelTable table;
    table.tau = tau;
    table.values.resize(n_steps + 1);
    for (std::size_t m = 0; m <= n_steps; ++m)
        table.values[m] = strength * p_of_time(static_cast<double>(m) * tau, soil);
    return table;
}

// The oracle works on the dimensionless face-value problem: with x = r/r_f
// and s the dimensionless time, u(x, s) solves
//   du/ds = (1/x) d/dx (x du/dx),   u(x, 0) = 0,  -x du/dx|_{x=1} = 1,
//   u -> 0 far away,
// and u(1, s) is the dimensionless response whose physical kernel is
// u / (2 pi k_f).  Substituting x = exp(xi) turns the operator into
// exp(-2 xi) d2u/dxi2 on a uniform xi grid, which a backward Euler sweep
// handles with one tridiagonal solve per step.
std::vector<RadialSample> radial_oracle(const SoilProps& soil, double t_end,
                                        int n_r, int n_t) {
    soil.validate();
    if (n_r < 16) throw NumericalError("radial_oracle: n_r must be >= 16");
    if (n_t < 16) throw NumericalError("radial_oracle: n_t must be >= 16");
    if (!(t_end > 0.0)) throw NumericalError("radial_oracle: t_end must be positive");

    const double s_end = soil.dimensionless_time(t_end);
    const double dxi = std::log(1000.0) / n_r; // domain r_f .. 1000 r_f
    const double ds = s_end / n_t;

    // unknowns u_0..u_{n_r-1}; u_{n_r} = 0 (far field)
    const int m = n_r;
    std::vector<double> u(m, 0.0);
    std::vector<double> diag(m), lower(m), upper(m), rhs(m), work(m);

    const double mu0 = ds / (dxi * dxi);
    std::vector<double> mu(m);
    for (int j = 0; j < m; ++j)
        mu[j] = mu0 * std::exp(-2.0 * j * dxi);

    std::vector<RadialSample> samples;
    samples.reserve(n_t + 1);
    samples.push_back({0.0, 0.0, 0.0});

    const double scale = 1.0 / (2.0 * M_PI * soil.k_f);
    for (int step = 1; step <= n_t; ++step) {
        // flux condition enters row 0 through the ghost node u_{-1} = u_1 + 2 dxi
        diag[0] = 1.0 + 2.0 * mu[0];
        upper[0] = -2.0 * mu[0];
        rhs[0] = u[0] + 2.0 * mu[0] * dxi;
        for (int j = 1; j < m; ++j) {
            lower[j] = -mu[j];
            diag[j] = 1.0 + 2.0 * mu[j];
            upper[j] = -mu[j];
            rhs[j] = u[j];
        }
        // Thomas sweep
        work[0] = upper[0] / diag[0];
        rhs[0] /= diag[0];
        for (int j = 1; j < m; ++j) {
            const double denom = diag[j] - lower[j] * work[j - 1];
            work[j] = upper[j] / denom;
            rhs[j] = (rhs[j] - lower[j] * rhs[j - 1]) / denom;
        }
        u[m - 1] = rhs[m - 1];
        for (int j = m - 2; j >= 0; --j)
            u[j] = rhs[j] - work[j] * u[j + 1];

        if (!std::isfinite(u[0]))
            throw NumericalError("radial_oracle: linear solve diverged");

        const double s = step * ds;
        samples.push_back({s * soil.rho_f * soil.c_f * soil.r_f * soil.r_f / soil.k_f,
                           s, u[0] * scale});
    }
    return samples;
}

void write_radial_samples_csv(std::ostream& out,
                              const std::vector<RadialSample>& samples) {
    out << "t_seconds,s_dimensionless,p_value\n";
    for (const auto& sample : samples)
        out << format_number(sample.t) << ',' << format_number(sample.s) << ','
            << format_number(sample.value) << '\n';
}

} // namespace wellheat
