#include "mcac/config.hpp"

#include "mcac/errors.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace mcac {

double SimConfig::ft_dt_effective() const {
    if (ft_dt > 0.0) return ft_dt;
    double length = 0.0;
    if (initial == InitialKind::Circle) length = 2.0 * M_PI * r;
    else length = M_PI * (3.0 * (a + b) - std::sqrt((3.0 * a + b) * (a + 3.0 * b)));
    const double spacing = length / ft_npoints;
    return 0.2 * spacing * spacing; // inside the 0.25*spacing^2 stability budget
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
    try {
        size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "' has non-numeric value '" + v + "'");
    }
}

int to_int(const std::string& key, const std::string& v) {
    try {
        size_t pos = 0;
        const int x = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "' has non-integer value '" + v + "'");
    }
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "on" || v == "true" || v == "1") return true;
    if (v == "off" || v == "false" || v == "0") return false;
    throw ConfigError("config: key '" + key + "' has non-boolean value '" + v + "'");
}

} // namespace

SimConfig parse_config_text(const std::string& text) {
    SimConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            std::ostringstream os;
            os << "config: line " << lineno << " is not 'key = value': '" << line << "'";
            throw ConfigError(os.str());
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));

        if (key == "grid.nx") cfg.grid.nx = to_int(key, val);
        else if (key == "grid.ny") cfg.grid.ny = to_int(key, val);
        else if (key == "grid.Lx") cfg.grid.Lx = to_double(key, val);
        else if (key == "grid.Ly") cfg.grid.Ly = to_double(key, val);
        else if (key == "eps") cfg.eps = to_double(key, val);
        else if (key == "dt") cfg.dt = (val == "auto") ? -1.0 : to_double(key, val);
        else if (key == "tmax") cfg.tmax = to_double(key, val);
        else if (key == "multiplier") {
            if (val == "bb") cfg.multiplier = MultiplierKind::BB;
            else if (val == "rs") cfg.multiplier = MultiplierKind::RS;
            else if (val == "none") cfg.multiplier = MultiplierKind::NONE;
            else throw ConfigError("config: multiplier must be bb|rs|none, got '" + val + "'");
        } else if (key == "initial") {
            if (val == "circle") cfg.initial = InitialKind::Circle;
            else if (val == "ellipse") cfg.initial = InitialKind::Ellipse;
            else if (val == "file") cfg.initial = InitialKind::File;
            else throw ConfigError("config: initial must be circle|ellipse|file, got '" + val + "'");
        } else if (key == "initial.cx") cfg.cx = to_double(key, val);
        else if (key == "initial.cy") cfg.cy = to_double(key, val);
        else if (key == "initial.r") cfg.r = to_double(key, val);
        else if (key == "initial.a") cfg.a = to_double(key, val);
        else if (key == "initial.b") cfg.b = to_double(key, val);
        else if (key == "initial.path") cfg.file_path = val;
        else if (key == "approx_order") cfg.approx_order = to_int(key, val);
        else if (key == "record_stride") cfg.record_stride = to_int(key, val);
        else if (key == "snapshot_stride") cfg.snapshot_stride = to_int(key, val);
        else if (key == "output_dir") cfg.output_dir = val;
        else if (key == "fronttrack.npoints") cfg.ft_npoints = to_int(key, val);
        else if (key == "fronttrack.dt") cfg.ft_dt = (val == "auto") ? -1.0 : to_double(key, val);
        else if (key == "fronttrack.projection") cfg.ft_projection = to_bool(key, val);
        else throw ConfigError("config: unknown key '" + key + "'");
    }
    validate_config(cfg);
    return cfg;
}

SimConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

void validate_config(const SimConfig& cfg) {
    if (cfg.grid.nx < 8 || cfg.grid.ny < 8)
        throw ConfigError("config: grid.nx and grid.ny must be >= 8");
    if (cfg.grid.count() > kMaxCells)
        throw ConfigError("config: grid.nx * grid.ny exceeds the configured maximum");
    if (cfg.grid.Lx <= 0.0 || cfg.grid.Ly <= 0.0)
        throw ConfigError("config: grid.Lx and grid.Ly must be positive");
    if (cfg.eps <= 0.0) throw ConfigError("config: eps must be positive");
    if (cfg.tmax < 0.0) throw ConfigError("config: tmax must be >= 0");
    if (cfg.dt > 0.0 && cfg.dt > dt_max(cfg.eps)) {
        std::ostringstream os;
        os << "config: dt = " << cfg.dt << " exceeds 0.2*eps^2 = " << dt_max(cfg.eps);
        throw ConfigError(os.str());
    }
    if (cfg.approx_order != 0 && cfg.approx_order != 2)
        throw ConfigError("config: approx_order must be 0 or 2");
    if (cfg.record_stride < 1) throw ConfigError("config: record_stride must be >= 1");
    if (cfg.snapshot_stride < 0) throw ConfigError("config: snapshot_stride must be >= 0");
    if (cfg.ft_npoints < 16) throw ConfigError("config: fronttrack.npoints must be >= 16");

    if (cfg.initial != InitialKind::File) {
        const double reach = cfg.initial == InitialKind::Circle ? cfg.r : std::max(cfg.a, cfg.b);
        const double margin = 2.0 * std::sqrt(cfg.eps);
        const double side = std::min(std::min(cfg.cx, cfg.grid.Lx - cfg.cx),
                                     std::min(cfg.cy, cfg.grid.Ly - cfg.cy));
        if (reach + margin >= side) {
            std::ostringstream os;
            os << "config: initial interface reach " << reach << " + 2*sqrt(eps) " << margin
               << " does not clear the domain side distance " << side;
            throw ConfigError(os.str());
        }
    } else if (cfg.file_path.empty()) {
        throw ConfigError("config: initial = file requires initial.path");
    }
}

} // namespace mcac
