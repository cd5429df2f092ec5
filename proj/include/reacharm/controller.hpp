#pragma once

#include <Eigen/Dense>
#include <optional>
#include <utility>

#include "reacharm/arm_dynamics.hpp"

namespace reacharm {

/// The five gains of the subsystem-based adaptive controller plus the
/// initial adaptive estimate. All gains must be strictly positive and
/// rho0 >= 0.
struct ControllerConfig {
    double a0 = 668.0;
    double a1 = 552.0;
    double b1 = 1.8;
    double c1 = 0.001;
    double r1 = 0.69;
    double rho0 = 0.0;
};

/// Scalar online estimate bounding the lumped uncertainty magnitude.
struct AdaptiveState {
    double rho_hat = 0.0;
};

struct TrackingErrors {
    Eigen::VectorXd e1;    ///< position error [rad]
    Eigen::VectorXd e2;    ///< velocity error [rad/s]
    Eigen::VectorXd Y1;    ///< transformed error, equals e1
    Eigen::VectorXd Y2;    ///< e2 - tau0
    Eigen::VectorXd tau0;  ///< virtual control for the position subsystem
};

/// e1 = x1 - x1d, e2 = x2 - x2d. Throws DimensionMismatch.
std::pair<Eigen::VectorXd, Eigen::VectorXd> compute_errors(const Eigen::VectorXd& x1,
                                                           const Eigen::VectorXd& x2,
                                                           const Eigen::VectorXd& x1d,
                                                           const Eigen::VectorXd& x2d);

/// tau0 = -1/2 a0 e1; Y1 = e1; Y2 = e2 - tau0.
TrackingErrors transform(const Eigen::VectorXd& e1, const Eigen::VectorXd& e2, double a0);

/// Explicit-Euler step of rho_hat' = -c1 r1 rho_hat + 1/2 b1 c1 |Y2|^2,
/// clamped at zero from below.
double adaptive_update(double rho_hat, const Eigen::VectorXd& Y2, const ControllerConfig& cfg,
                       double dt);

/// tau = -1/2 M (a1 + b1 rho_hat) Y2 - M Y1.
Eigen::VectorXd torque(const Eigen::MatrixXd& M, const Eigen::VectorXd& Y1,
                       const Eigen::VectorXd& Y2, double rho_hat, const ControllerConfig& cfg);

/// One controller tick: errors -> transform -> adaptive update -> torque.
/// The caller provides the inertia matrix it wants the controller to use
/// (exact M(x1), or a scaled version for model-mismatch studies) and an
/// optional symmetric torque clamp.
std::pair<Eigen::VectorXd, AdaptiveState> control_step(
    const JointState& state, const Eigen::VectorXd& x1d, const Eigen::VectorXd& x2d,
    const AdaptiveState& adaptive, const ControllerConfig& cfg, const Eigen::MatrixXd& M,
    double dt, std::optional<double> tau_max = std::nullopt);

/// Per-joint PID baseline, convention tau = -(Kp e1 + Ki int(e1) + Kd e2).
struct PidGains {
    double kp = 300.0;
    double ki = 200.0;
    double kd = 30.0;
    double integral_limit = 50.0;  ///< anti-windup clamp on int(e1)
};

struct PidState {
    Eigen::VectorXd integral;
};

Eigen::VectorXd pid_step(const JointState& state, const Eigen::VectorXd& x1d,
                         const Eigen::VectorXd& x2d, const PidGains& gains, PidState& pid,
                         double dt, std::optional<double> tau_max = std::nullopt);

}  // namespace reacharm
