#ifndef WELLHEAT_VOLTERRA_HPP
#define WELLHEAT_VOLTERRA_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "wellheat/kernel.hpp"

namespace wellheat {

/**
 * Per-node memory of the formation coupling: the outer-annulus water
 * temperatures T_V and formation temperatures T_F at every past time level,
 * plus the geothermal baseline T_Z.  Level 0 is the initial state where
 * T_V = T_F = T_Z and the formation flux vanishes.
 */
class FormationHistory {
  public:
    explicit FormationHistory(std::vector<double> geothermal);

    std::size_t node_count() const { return t_z_.size(); }
    /** Number of completed levels; 0 right after construction. */
    std::size_t level() const { return t_v_.size(); }

    std::span<const double> geothermal() const { return t_z_; }
    /** k = 1..level(). */
    std::span<const double> water_at(std::size_t k) const;
    std::span<const double> formation_at(std::size_t k) const;

    void append(std::vector<double> t_v, std::vector<double> t_f);

    /** Running count of convolution terms accumulated by formation_update;
     *  grows by (level-1) * node_count per call. */
    std::uint64_t convolution_terms() const { return terms_; }
    void add_terms(std::uint64_t n) { terms_ += n; }

  private:
    std::vector<double> t_z_;
    std::vector<std::vector<double>> t_v_, t_f_;
    std::uint64_t terms_ = 0;
};

/**
 * Advance the formation temperature one level with the discrete history sum
 *
 *   T_F^n = [ T_Z + sum_{k=1}^{n-1} (T_V^k - T_F^k)(P_{n+1-k} - P_{n-1-k})
 *                 + P_1 T_V^n ] / (1 + P_1)
 *
 * where P_m = kernel.values[m].  Appends (t_v_new, result) to the history
 * and returns the new formation temperatures.  Throws NumericalError when
 * the kernel table is shorter than the new level requires.
 */
std::vector<double> formation_update(FormationHistory& hist,
                                     const KernelTable& kernel,
                                     std::span<const double> t_v_new);

/** Newton law of cooling at the formation face: q_f = b_f (T_e - T_f), W/m. */
double heat_flux(double t_e, double t_f, double b_f);

/**
 * A-posteriori residual of the Volterra flux equation
 *
 *   b_f (T_e - T_z) = q_f + b_f  int_0^t p'(t-s) q_f(s) ds
 *
 * evaluated on a completed history with q_f = b_f (T_V - T_F).  The singular
 * p' is integrated by parts per subinterval: each [t_k, t_{k+1}] contributes
 * the midpoint average of q times the exact difference p(t_n - t_k) -
 * p(t_n - t_{k+1}).  Returns, per node, the max over the checked levels of
 * |lhs - rhs| (W/m).  `stride` subsamples the checked levels (1 = all).
 */
std::vector<double> volterra_residual(const FormationHistory& hist,
                                      const std::function<double(double)>& p_of_t,
                                      double b_f, double tau,
                                      std::size_t stride = 1);

} // namespace wellheat

#endif
