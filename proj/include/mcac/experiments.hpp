#pragma once

#include "mcac/approx.hpp"
#include "mcac/config.hpp"
#include "mcac/diagnostics.hpp"
#include "mcac/dynamics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mcac {

Curve initial_curve(const SimConfig& cfg);

struct RunResult {
    std::vector<TimeSeriesRecord> records;
    Field final_u;
    std::optional<FlowPath> flow;
};

// Runs one simulation from the config: front-tracked reference flow, initial
// data (order-k approximate solution or PFS1 snapshot), IMEX stepping, one
// diagnostics record every record_stride steps. When out_dir is non-empty,
// writes timeseries.csv, PFS1 snapshots, gamma_t{index}.csv flow curves and
// the final extracted level set. Partial records are flushed if a step aborts.
RunResult run_simulation(const SimConfig& cfg, const std::string& out_dir);

struct ProfileConstantsReport {
    double sigma = 0.0, sigma_star = 0.0, int_theta_prime = 0.0, i_rho = 0.0;
    bool pass = false;
};

ProfileConstantsReport cmd_profile_constants(std::ostream& os);

int cmd_simulate(const SimConfig& cfg, std::ostream& os);

struct ConvergenceReport {
    std::vector<double> eps_values;
    std::vector<double> errors; // sup over records of l2_err_step
    double fitted_order = 0.0;
    bool decreasing = false;
    bool pass = false;
};

ConvergenceReport cmd_converge(const SimConfig& base, const std::vector<double>& eps_list,
                               std::ostream& os);

struct CompareReport {
    VolumeDrift bb, rs;
    double ratio = 0.0; // drift_BB / drift_RS (levelset)
    bool pass = false;  // fails only if BB drift > 2x RS drift
};

CompareReport cmd_compare_multipliers(const SimConfig& base, std::ostream& os);

struct EquilibriumReport {
    double tracker_drift = 0.0;  // relative radius drift of the front tracker
    double levelset_drift = 0.0; // relative mean-radius drift of the BB run
    bool pass = false;
};

EquilibriumReport cmd_equilibrium(const SimConfig& cfg, std::ostream& os);

// Mean vertex distance to a fixed center.
double mean_radius(const Curve& c, Vec2 center);

double fit_log_slope(const std::vector<double>& x, const std::vector<double>& y);

} // namespace mcac
