#ifndef WELLHEAT_CONFIG_HPP
#define WELLHEAT_CONFIG_HPP

#include <string>
#include <string_view>

#include "wellheat/errors.hpp"

namespace wellheat {

enum class FlowMode { counter, parallel };

std::string to_string(FlowMode mode);

/**
 * Full input parameter set for one well, SI units throughout.
 *
 * Geometry and soil:
 *   depth_L              well depth (m), z axis points downward
 *   formation_radius_rf  radius at which the formation model starts (m)
 *   area_o/i/e           cross-section areas of tubing, inner and outer annulus (m^2)
 * Materials:
 *   rho_o, rho_w, rho_f  densities of oil, water, soil (kg/m^3)
 *   c_o, c_w, c_f        specific heats (J/(kg K)); k_f soil conductivity (W/(m K))
 * Exchange and flow:
 *   b_o  tubing <-> inner annulus coefficient per unit length (W/(m K))
 *   b_e  inner <-> outer annulus, b_f outer annulus <-> formation
 *   v_o, v_i  oil and inner-annulus water speeds (m/s); the outer-annulus
 *             speed is derived from mass conservation, never an input
 * Thermal boundary data:
 *   T_inj injected water temperature (K); T_surf surface geothermal (K);
 *   geo_gradient geothermal gradient (K/m)
 * Schedule and discretization:
 *   mode counter|parallel; cycle_heating_s / cycle_cooling_s phase lengths (s);
 *   n_cycles; n_cells; lambda = tau/h (s/m); cfl_safety in (0,1]
 *   oil_flows_during_shutin: keep producing while water is stopped (default on)
 */
struct WellConfig {
    double depth_L = 0.0;
    double formation_radius_rf = 0.0;
    double area_o = 0.0, area_i = 0.0, area_e = 0.0;
    double rho_o = 0.0, rho_w = 0.0, rho_f = 0.0;
    double c_o = 0.0, c_w = 0.0, c_f = 0.0;
    double k_f = 0.0;
    double b_o = 0.0, b_e = 0.0, b_f = 0.0;
    double v_o = 0.0, v_i = 0.0;
    double T_inj = 0.0;
    double T_surf = 0.0;
    double geo_gradient = 0.0;
    FlowMode mode = FlowMode::counter;
    double cycle_heating_s = 0.0;
    double cycle_cooling_s = 0.0;
    int n_cycles = 1;
    int n_cells = 2;
    double lambda = 0.0;
    double cfl_safety = 1.0;
    bool oil_flows_during_shutin = true;

    bool operator==(const WellConfig&) const = default;
};

/**
 * Derived lineal heat capacities a = A rho c (J/(m K)) and transport
 * velocities with the direction of travel encoded by sign: a field with
 * signed velocity w obeys dT/dt + w dT/dz = exchange terms.  Oil always
 * rises (w_o = -v_o).  Counter flow: inner annulus runs down (+v_i),
 * outer rises (-v_e); parallel flow swaps the water signs.
 */
struct Coefficients {
    double a_o = 0.0, a_i = 0.0, a_e = 0.0;
    double b_o = 0.0, b_e = 0.0, b_f = 0.0;
    double signed_v_o = 0.0, signed_v_i = 0.0, signed_v_e = 0.0;
    double T_oL = 0.0; // oil inlet temperature at z = L
    bool oil_flows_during_shutin = true;
};

/** Parse a flat "key = value" document ('#' comments). Unknown keys are
 *  rejected and every diagnostic names the offending key. */
WellConfig parse_config(std::string_view text);

/** Read and parse a config file; missing file raises ConfigError naming the path. */
WellConfig load_config_file(const std::string& path);

/** Canonical renderer; parse_config(render_config(cfg)) == cfg exactly. */
std::string render_config(const WellConfig& cfg);

/** Validate invariants (positivity, ranges). Throws ConfigError naming the key. */
void validate_config(const WellConfig& cfg);

Coefficients derive_coefficients(const WellConfig& cfg);

/** Undisturbed soil temperature T_surf + geo_gradient * z for z in [0, L]. */
double geothermal(double z, const WellConfig& cfg);

/** Initial inner-annulus profile: affine from T_inj at z=0 to T_z(L) at z=L. */
double initial_inner_profile(double z, const WellConfig& cfg);

} // namespace wellheat

#endif
