#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "reacharm/arm_dynamics.hpp"
#include "reacharm/controller.hpp"

namespace reacharm {

/// Reference scenario and objective weights for controller gain tuning.
struct TuningScenario {
    double step_amplitude = 0.1;  ///< step on every joint [rad]
    double duration = 0.8;        ///< rollout horizon [s]
    double w_tr = 1.0;
    double w_ts = 1.0;
    double w_mp = 1.0;
    double w_ess = 10.0;
    double instability_penalty = 1e6;
    std::optional<double> tau_max = 500.0;  ///< clamp applied during tuning rollouts
};

/// Time-domain features of one joint's step response.
struct StepMetrics {
    double rise_time = 0.0;      ///< 10% -> 90% [s]
    double settling_time = 0.0;  ///< entry into the +-2% band [s]
    double overshoot = 0.0;      ///< fraction of the step amplitude
    double ess = 0.0;            ///< mean |error| over the final 10% [rad]
    bool settled = false;
    bool degenerate = false;     ///< zero-amplitude reference, metrics undefined
};

/// Recorded closed-loop rollout at the controller rate.
struct TrackingTrace {
    std::vector<double> t;
    std::vector<Eigen::VectorXd> x1;
    std::vector<Eigen::VectorXd> x2;
    std::vector<Eigen::VectorXd> tau;
    Eigen::VectorXd x1_initial;
    Eigen::VectorXd target;
    bool blew_up = false;
    double max_abs_torque = 0.0;
};

struct StepSimConfig {
    Eigen::VectorXd x1_initial;  ///< defaults to zeros
    Eigen::VectorXd target;      ///< constant position reference
    double duration = 0.8;
    double dt = 1e-3;
    SimOptions sim;
    std::optional<double> tau_max;
    double mass_scale = 1.0;  ///< scales the M handed to the controller
    std::uint64_t seed = 0;
};

TrackingTrace run_adaptive_step(const ArmParams& params, const ControllerConfig& cfg,
                                const StepSimConfig& sim);
TrackingTrace run_pid_step(const ArmParams& params, const PidGains& gains,
                           const StepSimConfig& sim);

StepMetrics step_metrics(const std::vector<double>& t, const std::vector<double>& x,
                         double initial, double target);

/// Metrics per joint extracted from a trace.
std::vector<StepMetrics> trace_metrics(const TrackingTrace& trace);

/// Weighted sum over joints; the instability penalty when the rollout blew up
/// or any joint failed to settle within the horizon.
double scenario_cost(const TrackingTrace& trace, const TuningScenario& scenario,
                     std::vector<StepMetrics>* metrics_out = nullptr);

/// The five-gain tuning objective: closed-loop rollout of the adaptive
/// controller on the disturbed plant, scored by scenario_cost. Gains are
/// ordered (a0, a1, b1, c1, r1).
double control_objective(const Eigen::VectorXd& gains, const TuningScenario& scenario,
                         const ArmParams& params, std::uint64_t seed);

/// Default tuning search box bracketing plausible gain magnitudes,
/// ordered (a0, a1, b1, c1, r1).
std::vector<std::array<double, 2>> default_gain_bounds();

ControllerConfig gains_from_vector(const Eigen::VectorXd& gains, double rho0 = 0.0);

}  // namespace reacharm
