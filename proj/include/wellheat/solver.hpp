#ifndef WELLHEAT_SOLVER_HPP
#define WELLHEAT_SOLVER_HPP

#include <functional>
#include <string>
#include <vector>

#include "wellheat/config.hpp"
#include "wellheat/kernel.hpp"
#include "wellheat/volterra.hpp"

namespace wellheat {

enum class Phase { circulating, shut_in };

/** Nodal fields on the uniform grid z_i = i h, i = 0..N. */
struct GridState {
    std::vector<double> t_oil, t_inner, t_outer, t_formation, q_f;
    double time = 0.0;
    Phase phase = Phase::circulating;

    std::size_t node_count() const { return t_oil.size(); }
};

struct CycleSchedule {
    double heating_s = 0.0;
    double cooling_s = 0.0;
    int n_cycles = 1;
};

/**
 * Largest stable step tau = safety * h / (v_max + C h) for the explicit
 * upwind scheme, with v_max the largest speed and
 * C = max(b_o/a_o, (b_o+b_e)/a_i, (b_e+b_f)/a_e) the exchange constant that
 * keeps every nodal update a convex combination.
 */
double cfl_timestep(const Coefficients& coeffs, double h, double safety);

/** Initial state: T_o = T_e = T_f = T_z(z), T_i affine T_inj -> T_z(L), q_f = 0. */
GridState initial_state(const WellConfig& cfg);

/**
 * Impose the inflow data for the current phase on fields that are moving:
 * oil gets T_oL at z = L; counter flow injects T_inj at the top of the inner
 * annulus and copies T_e(L) = T_i(L) at the bottom turnaround, parallel flow
 * injects into the outer annulus and copies T_i(L) = T_e(L).  Stopped fields
 * (shut-in) have no inflow end and keep their nodal values.
 */
void apply_boundaries(GridState& state, const Coefficients& coeffs,
                      FlowMode mode, double t_inj, Phase phase);

/**
 * One explicit step: first-order upwind advection plus exchange terms at the
 * old level for the three fluids (with old T_f), then boundary data, then the
 * formation history update driven by the new outer-annulus temperature, and
 * finally q_f = b_f (T_e - T_f).  Refuses to step (NumericalError) if tau
 * breaks the convex-combination bound for the active phase velocities.
 */
void upwind_step(GridState& state, const Coefficients& coeffs, double tau,
                 double h, FlowMode mode, Phase phase, double t_inj,
                 FormationHistory& hist, const KernelTable& kernel);

struct ProfileSnapshot {
    double time = 0.0;
    std::vector<double> t_oil, t_inner, t_outer, t_formation, q_f;
};

struct ScalarRecord {
    double time = 0.0;
    double outlet = 0.0;         // water outlet at z=0: T_e counter, T_i parallel
    double bottomhole_oil = 0.0; // oil one cell above the z=L inflow node
    double total_flux = 0.0;     // trapezoid of q_f over depth, W
};

/** Global energy bookkeeping over a run (J).  The balance residual is
 *  gain(oil) + gain(water) - boundary_net + formation_total. */
struct EnergyBudget {
    double oil_gain = 0.0;
    double water_gain = 0.0;
    double boundary_net = 0.0;     // advective inflow minus outflow enthalpy
    double formation_total = 0.0;  // integral of q_f dz dt

    double residual() const {
        return oil_gain + water_gain - boundary_net + formation_total;
    }
};

struct RunResult {
    WellConfig config;
    Coefficients coeffs;
    double h = 0.0;
    double tau = 0.0;
    int steps_heating = 0, steps_cooling = 0, total_steps = 0;
    std::vector<ProfileSnapshot> snapshots;
    std::vector<ScalarRecord> scalars; // one per level, including level 0
    GridState final_state;
    FormationHistory history;
    EnergyBudget energy;

    /** T_o(L) - T_o(0) at the final level. */
    double oil_temperature_drop() const;
};

using StepObserver = std::function<void(const GridState&)>;

/**
 * Run the cycle schedule from the initial state.  The step is
 * tau = min(lambda h, cfl_timestep), then shortened so the heating phase is
 * a whole number of steps; the cooling phase is rounded to whole steps.
 * `observer`, when set, sees every level including the initial one.
 */
RunResult run_simulation(const WellConfig& cfg, int snapshots_per_cycle = 50,
                         const StepObserver& observer = {});

struct ComparisonReport {
    RunResult counter_run;
    RunResult parallel_run;
    double drop_counter = 0.0;
    double drop_parallel = 0.0;
    std::string winner; // "counter" | "parallel" | "tie"
};

/** Run both arrangements with identical parameters and schedule (the two
 *  simulations execute concurrently) and compare oil temperature drops. */
ComparisonReport compare_arrangements(const WellConfig& cfg,
                                      int snapshots_per_cycle = 50);

} // namespace wellheat

#endif
