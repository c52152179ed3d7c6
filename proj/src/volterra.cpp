#include "wellheat/volterra.hpp"

#include <algorithm>
#include <cmath>

namespace wellheat {

FormationHistory::FormationHistory(std::vector<double> geothermal)
    : t_z_(std::move(geothermal)) {}

std::span<const double> FormationHistory::water_at(std::size_t k) const {
    return t_v_.at(k - 1);
}

std::span<const double> FormationHistory::formation_at(std::size_t k) const {
    return t_f_.at(k - 1);
}

void FormationHistory::append(std::vector<double> t_v, std::vector<double> t_f) {
    t_v_.push_back(std::move(t_v));
    t_f_.push_back(std::move(t_f));
}

std::vector<double> formation_update(FormationHistory& hist,
                                     const KernelTable& kernel,
                                     std::span<const double> t_v_new) {
    const std::size_t nodes = hist.node_count();
    const std::size_t n = hist.level() + 1; // level being produced
    if (kernel.max_level() < n)
        throw NumericalError("formation_update: kernel table too short for level " +
                             std::to_string(n));
    const auto& P = kernel.values;
    const auto t_z = hist.geothermal();

    std::vector<double> acc(nodes);
    for (std::size_t i = 0; i < nodes; ++i)
        acc[i] = t_z[i] + P[1] * t_v_new[i];
    for (std::size_t k = 1; k < n; ++k) {
        const double coeff = P[n + 1 - k] - P[n - 1 - k];
        const auto tv = hist.water_at(k);
        const auto tf = hist.formation_at(k);
        for (std::size_t i = 0; i < nodes; ++i)
            acc[i] += (tv[i] - tf[i]) * coeff;
    }
    const double inv = 1.0 / (1.0 + P[1]);
    for (std::size_t i = 0; i < nodes; ++i)
        acc[i] *= inv;

    hist.add_terms(static_cast<std::uint64_t>(n - 1) * nodes);
    hist.append(std::vector<double>(t_v_new.begin(), t_v_new.end()), acc);
    return acc;
}

double heat_flux(double t_e, double t_f, double b_f) {
    return b_f * (t_e - t_f);
}

std::vector<double> volterra_residual(const FormationHistory& hist,
                                      const std::function<double(double)>& p_of_t,
                                      double b_f, double tau,
                                      std::size_t stride) {
    const std::size_t nodes = hist.node_count();
    const std::size_t levels = hist.level();
    if (stride == 0) stride = 1;
    std::vector<double> worst(nodes, 0.0);
    if (levels == 0) return worst;

    std::vector<double> p(levels + 1);
    for (std::size_t me = 0; me <= levels; ++me)
        p[me] = p_of_t(static_cast<double>(me) * tau);

    const auto t_z = hist.geothermal();
    std::vector<double> q_prev(nodes), q_cur(nodes), integral(nodes);
    for (std::size_t n = 1; n <= levels; n += stride) {
        std::fill(integral.begin(), integral.end(), 0.0);
        // q at level 0 vanishes with the initial condition T_V = T_F = T_Z
        std::fill(q_prev.begin(), q_prev.end(), 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            const auto tv = hist.water_at(k + 1);
            const auto tf = hist.formation_at(k + 1);
            const double dp = p[n - k] - p[n - k - 1];
            for (std::size_t i = 0; i < nodes; ++i) {
                q_cur[i] = b_f * (tv[i] - tf[i]);
                integral[i] += 0.5 * (q_prev[i] + q_cur[i]) * dp;
            }
            std::swap(q_prev, q_cur);
        }
        const auto tv_n = hist.water_at(n);
        const auto tf_n = hist.formation_at(n);
        for (std::size_t i = 0; i < nodes; ++i) {
            const double q_n = b_f * (tv_n[i] - tf_n[i]);
            const double lhs = b_f * (tv_n[i] - t_z[i]);
            const double rhs = q_n + b_f * integral[i];
            worst[i] = std::max(worst[i], std::abs(lhs - rhs));
        }
    }
    return worst;
}

} // namespace wellheat
