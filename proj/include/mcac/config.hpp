#pragma once

#include "mcac/dynamics.hpp"
#include "mcac/grid.hpp"

#include <string>

namespace mcac {

enum class InitialKind { Circle, Ellipse, File };

struct SimConfig {
    GridSpec grid{256, 256, 2.0, 2.0};
    double eps = 0.03;
    double dt = -1.0; // -1 = "auto" = 0.1*eps^2
    double tmax = 0.05;
    MultiplierKind multiplier = MultiplierKind::BB;
    InitialKind initial = InitialKind::Circle;
    double cx = 1.0, cy = 1.0;
    double r = 0.3;       // circle
    double a = 0.35, b = 0.25; // ellipse
    std::string file_path;
    int approx_order = 2;
    int record_stride = 50;
    int snapshot_stride = 0; // 0 = initial and final only
    std::string output_dir = "out";
    int ft_npoints = 1024;
    double ft_dt = -1.0; // -1 = auto from spacing bound
    bool ft_projection = true;

    double dt_effective() const { return dt > 0.0 ? dt : dt_default(eps); }
    double ft_dt_effective() const;
};

// Flat "key = value" lines with dotted keys and '#' comments. Unknown keys
// are rejected by name; dt above 0.2*eps^2 is rejected; the initial interface
// must clear every side by 2*sqrt(eps).
SimConfig parse_config_text(const std::string& text);
SimConfig load_config(const std::string& path);
void validate_config(const SimConfig& cfg);

} // namespace mcac
