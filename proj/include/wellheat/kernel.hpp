#ifndef WELLHEAT_KERNEL_HPP
#define WELLHEAT_KERNEL_HPP

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "wellheat/errors.hpp"

namespace wellheat {

/** Thermal properties of the formation around the well. */
struct SoilProps {
    double rho_f = 0.0; // kg/m^3
    double c_f = 0.0;   // J/(kg K)
    double k_f = 0.0;   // W/(m K)
    double r_f = 0.0;   // m

    void validate() const; // throws ConfigError naming the field
    /** Dimensionless time s = k_f t / (rho_f c_f r_f^2). */
    double dimensionless_time(double t_seconds) const;
};

/**
 * Hasan-Kabir closed form for the dimensionless transient response of a
 * radially infinite formation driven by a constant unit heat rate:
 *
 *   p_n(s) = 2/sqrt(pi) sqrt(s) (1 - 0.3 sqrt(s))        s <= 1.5
 *   p_n(s) = 1/2 (0.80907 + ln s)(1 + 0.6/s)             s >  1.5
 *
 * The two branches meet with a ~2.7% downward jump at s = 1.5; callers that
 * need monotone tables must stay on one side of the branch point.
 */
double p_dimensionless(double s);

/** Response kernel in physical units, p(t) = p_n(s(t)) / (2 pi k_f), so that
 *  p * q has units of temperature for a lineal flux q (W/m). */
double p_of_time(double t_seconds, const SoilProps& soil);

/** Precomputed convolution samples P_m = strength * p(m tau), m = 0..n_steps. */
struct KernelTable {
    double tau = 0.0;
    std::vector<double> values;

    std::size_t max_level() const { return values.empty() ? 0 : values.size() - 1; }
};

KernelTable build_kernel_table(double tau, std::size_t n_steps,
                               const SoilProps& soil, double strength);

/** One sample of the finite-difference reference solution. */
struct RadialSample {
    double t = 0.0;     // seconds
    double s = 0.0;     // dimensionless time
    double value = 0.0; // directly comparable to p_of_time
};

/**
 * Independent reference for p(t): implicit finite differences on the radial
 * conduction problem with zero initial data, unit lineal flux at r_f and a
 * homogeneous far-field condition at 1000 r_f.  The radial grid is
 * logarithmically graded; time stepping is backward Euler with n_t uniform
 * steps on [0, t_end].  Returns n_t + 1 samples of P(r_f, t)/(2 pi k_f).
 */
std::vector<RadialSample> radial_oracle(const SoilProps& soil, double t_end,
                                        int n_r, int n_t);

/** CSV dump, columns: t_seconds, s_dimensionless, p_value. */
void write_radial_samples_csv(std::ostream& out,
                              const std::vector<RadialSample>& samples);

} // namespace wellheat

#endif
