#ifndef WELLHEAT_CSV_HPP
#define WELLHEAT_CSV_HPP

#include <iosfwd>
#include <string>

#include "wellheat/solver.hpp"

namespace wellheat {

/** Serialize with 9 significant digits; all CSV output goes through this. */
std::string format_number(double x);

/** Columns: time_s, z_m, T_oil_K, T_inner_K, T_outer_K, T_formation_K, q_f_W_per_m. */
void write_profiles_csv(std::ostream& out, const RunResult& run);

/** Columns: time_s, outlet_inner_K or outlet_outer_K (by mode),
 *  bottomhole_oil_K, total_flux_W. */
void write_scalars_csv(std::ostream& out, const RunResult& run);

std::string run_summary_text(const RunResult& run);

std::string comparison_text(const ComparisonReport& report);

} // namespace wellheat

#endif
