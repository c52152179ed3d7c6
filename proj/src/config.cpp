#include "wellheat/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace wellheat {

std::string to_string(FlowMode mode) {
    return mode == FlowMode::counter ? "counter" : "parallel";
}

namespace {

std::string trim(std::string_view sv) {
    size_t a = 0, b = sv.size();
    while (a < b && std::isspace(static_cast<unsigned char>(sv[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(sv[b - 1]))) --b;
    return std::string(sv.substr(a, b - a));
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        double v = std::stod(value, &pos);
        if (pos != value.size())
            throw ConfigError("unparsable value for \"" + key + "\": " + value);
        if (!std::isfinite(v))
            throw ConfigError("non-finite value for \"" + key + "\"");
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError("unparsable value for \"" + key + "\": " + value);
    }
}

int parse_int(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        long v = std::stol(value, &pos);
        if (pos != value.size())
            throw ConfigError("unparsable value for \"" + key + "\": " + value);
        return static_cast<int>(v);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError("unparsable value for \"" + key + "\": " + value);
    }
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw ConfigError("unparsable value for \"" + key + "\": " + value);
}

void require_positive(const char* key, double v) {
    if (!(v > 0.0)) throw ConfigError(std::string(key) + " must be strictly positive");
}

void require_nonnegative(const char* key, double v) {
    if (!(v >= 0.0)) throw ConfigError(std::string(key) + " must be non-negative");
}

} // namespace

void validate_config(const WellConfig& c) {
    require_positive("depth_L", c.depth_L);
    require_positive("formation_radius_rf", c.formation_radius_rf);
    require_positive("area_o", c.area_o);
    require_positive("area_i", c.area_i);
    require_positive("area_e", c.area_e);
    require_positive("rho_o", c.rho_o);
    require_positive("rho_w", c.rho_w);
    require_positive("rho_f", c.rho_f);
    require_positive("c_o", c.c_o);
    require_positive("c_w", c.c_w);
    require_positive("c_f", c.c_f);
    require_positive("k_f", c.k_f);
    require_nonnegative("b_o", c.b_o);
    require_nonnegative("b_e", c.b_e);
    require_nonnegative("b_f", c.b_f);
    require_nonnegative("v_o", c.v_o);
    require_nonnegative("v_i", c.v_i);
    if (c.n_cells < 2) throw ConfigError("n_cells must be at least 2");
    if (!(c.cfl_safety > 0.0 && c.cfl_safety <= 1.0))
        throw ConfigError("cfl_safety must lie in (0, 1]");
    require_positive("lambda", c.lambda);
    require_positive("cycle_heating_s", c.cycle_heating_s);
    require_nonnegative("cycle_cooling_s", c.cycle_cooling_s);
    if (c.n_cycles < 1) throw ConfigError("n_cycles must be at least 1");
}

WellConfig parse_config(std::string_view text) {
    std::map<std::string, std::string> kv;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::string stripped = trim(line);
        if (stripped.empty()) continue;
        auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + " is not a key = value pair");
        std::string key = trim(stripped.substr(0, eq));
        std::string value = trim(stripped.substr(eq + 1));
        if (key.empty())
            throw ConfigError("line " + std::to_string(lineno) + " has an empty key");
        if (kv.count(key))
            throw ConfigError("duplicate key \"" + key + "\"");
        kv[key] = value;
    }

    WellConfig cfg;
    std::set<std::string> seen;
    auto take = [&](const char* key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        seen.insert(key);
        return it->second;
    };
    auto need = [&](const char* key) -> std::string {
        auto v = take(key);
        if (!v) throw ConfigError("missing field \"" + std::string(key) + "\"");
        return *v;
    };
    auto need_double = [&](const char* key) { return parse_double(key, need(key)); };

    cfg.depth_L = need_double("depth_L");
    cfg.formation_radius_rf = need_double("formation_radius_rf");
    cfg.area_o = need_double("area_o");
    cfg.area_i = need_double("area_i");
    cfg.area_e = need_double("area_e");
    cfg.rho_o = need_double("rho_o");
    cfg.rho_w = need_double("rho_w");
    cfg.rho_f = need_double("rho_f");
    cfg.c_o = need_double("c_o");
    cfg.c_w = need_double("c_w");
    cfg.c_f = need_double("c_f");
    cfg.k_f = need_double("k_f");
    cfg.b_o = need_double("b_o");
    cfg.b_e = need_double("b_e");
    cfg.b_f = need_double("b_f");
    cfg.v_o = need_double("v_o");
    cfg.v_i = need_double("v_i");
    cfg.T_inj = need_double("T_inj");
    cfg.T_surf = need_double("T_surf");
    cfg.geo_gradient = need_double("geo_gradient");
    cfg.cycle_heating_s = need_double("cycle_heating_s");
    cfg.cycle_cooling_s = need_double("cycle_cooling_s");
    cfg.n_cycles = parse_int("n_cycles", need("n_cycles"));
    cfg.n_cells = parse_int("n_cells", need("n_cells"));
    cfg.lambda = need_double("lambda");
    cfg.cfl_safety = need_double("cfl_safety");

    std::string mode = need("mode");
    if (mode == "counter") cfg.mode = FlowMode::counter;
    else if (mode == "parallel") cfg.mode = FlowMode::parallel;
    else throw ConfigError("mode must be \"counter\" or \"parallel\", got \"" + mode + "\"");

    if (auto v = take("oil_flows_during_shutin"))
        cfg.oil_flows_during_shutin = parse_bool("oil_flows_during_shutin", *v);

    for (const auto& [key, value] : kv)
        if (!seen.count(key))
            throw ConfigError("unknown key \"" + key + "\"");

    validate_config(cfg);
    return cfg;
}

WellConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

namespace {

std::string full_precision(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::string render_config(const WellConfig& c) {
    std::ostringstream out;
    auto put = [&](const char* key, double v) { out << key << " = " << full_precision(v) << "\n"; };
    put("depth_L", c.depth_L);
    put("formation_radius_rf", c.formation_radius_rf);
    put("area_o", c.area_o);
    put("area_i", c.area_i);
    put("area_e", c.area_e);
    put("rho_o", c.rho_o);
    put("rho_w", c.rho_w);
    put("rho_f", c.rho_f);
    put("c_o", c.c_o);
    put("c_w", c.c_w);
    put("c_f", c.c_f);
    put("k_f", c.k_f);
    put("b_o", c.b_o);
    put("b_e", c.b_e);
    put("b_f", c.b_f);
    put("v_o", c.v_o);
    put("v_i", c.v_i);
    put("T_inj", c.T_inj);
    put("T_surf", c.T_surf);
    put("geo_gradient", c.geo_gradient);
    out << "mode = " << to_string(c.mode) << "\n";
    put("cycle_heating_s", c.cycle_heating_s);
    put("cycle_cooling_s", c.cycle_cooling_s);
    out << "n_cycles = " << c.n_cycles << "\n";
    out << "n_cells = " << c.n_cells << "\n";
    put("lambda", c.lambda);
    put("cfl_safety", c.cfl_safety);
    out << "oil_flows_during_shutin = " << (c.oil_flows_during_shutin ? "true" : "false") << "\n";
    return out.str();
}

Coefficients derive_coefficients(const WellConfig& cfg) {
    Coefficients co;
    co.a_o = cfg.area_o * cfg.rho_o * cfg.c_o;
    co.a_i = cfg.area_i * cfg.rho_w * cfg.c_w;
    co.a_e = cfg.area_e * cfg.rho_w * cfg.c_w;
    co.b_o = cfg.b_o;
    co.b_e = cfg.b_e;
    co.b_f = cfg.b_f;
    const double v_e = co.a_i * cfg.v_i / co.a_e; // mass conservation a_i v_i = a_e v_e
    co.signed_v_o = -cfg.v_o;
    if (cfg.mode == FlowMode::counter) {
        co.signed_v_i = cfg.v_i;
        co.signed_v_e = -v_e;
    } else {
        co.signed_v_i = -cfg.v_i;
        co.signed_v_e = v_e;
    }
    co.T_oL = geothermal(cfg.depth_L, cfg);
    co.oil_flows_during_shutin = cfg.oil_flows_during_shutin;
    return co;
}

double geothermal(double z, const WellConfig& cfg) {
    if (z < 0.0 || z > cfg.depth_L)
        throw ConfigError("geothermal: z outside [0, depth_L]");
    return cfg.T_surf + cfg.geo_gradient * z;
}

double initial_inner_profile(double z, const WellConfig& cfg) {
    if (z < 0.0 || z > cfg.depth_L)
        throw ConfigError("initial_inner_profile: z outside [0, depth_L]");
    const double t_bottom = cfg.T_surf + cfg.geo_gradient * cfg.depth_L;
    return cfg.T_inj + (t_bottom - cfg.T_inj) * (z / cfg.depth_L);
}

} // namespace wellheat
