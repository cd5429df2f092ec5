#include "reacharm/controller.hpp"

#include <algorithm>
#include <cmath>

#include "reacharm/errors.hpp"

namespace reacharm {

std::pair<Eigen::VectorXd, Eigen::VectorXd> compute_errors(const Eigen::VectorXd& x1,
                                                           const Eigen::VectorXd& x2,
                                                           const Eigen::VectorXd& x1d,
                                                           const Eigen::VectorXd& x2d) {
    if (x1.size() != x1d.size() || x2.size() != x2d.size() || x1.size() != x2.size()) {
        throw DimensionMismatch("state and reference dimensions disagree");
    }
    return {x1 - x1d, x2 - x2d};
}

TrackingErrors transform(const Eigen::VectorXd& e1, const Eigen::VectorXd& e2, double a0) {
    TrackingErrors te;
    te.e1 = e1;
    te.e2 = e2;
    te.Y1 = e1;
    te.tau0 = -0.5 * a0 * e1;
    te.Y2 = e2 - te.tau0;
    return te;
}

double adaptive_update(double rho_hat, const Eigen::VectorXd& Y2, const ControllerConfig& cfg,
                       double dt) {
    const double rho_dot = -cfg.c1 * cfg.r1 * rho_hat + 0.5 * cfg.b1 * cfg.c1 * Y2.squaredNorm();
    return std::max(0.0, rho_hat + dt * rho_dot);
}

Eigen::VectorXd torque(const Eigen::MatrixXd& M, const Eigen::VectorXd& Y1,
                       const Eigen::VectorXd& Y2, double rho_hat, const ControllerConfig& cfg) {
    return -0.5 * (cfg.a1 + cfg.b1 * rho_hat) * (M * Y2) - M * Y1;
}

std::pair<Eigen::VectorXd, AdaptiveState> control_step(
    const JointState& state, const Eigen::VectorXd& x1d, const Eigen::VectorXd& x2d,
    const AdaptiveState& adaptive, const ControllerConfig& cfg, const Eigen::MatrixXd& M,
    double dt, std::optional<double> tau_max) {
    auto [e1, e2] = compute_errors(state.x1, state.x2, x1d, x2d);
    const TrackingErrors te = transform(e1, e2, cfg.a0);
    AdaptiveState next{adaptive_update(adaptive.rho_hat, te.Y2, cfg, dt)};
    Eigen::VectorXd tau = torque(M, te.Y1, te.Y2, next.rho_hat, cfg);
    if (tau_max) {
        tau = tau.cwiseMax(-*tau_max).cwiseMin(*tau_max);
    }
    return {std::move(tau), next};
}

Eigen::VectorXd pid_step(const JointState& state, const Eigen::VectorXd& x1d,
                         const Eigen::VectorXd& x2d, const PidGains& gains, PidState& pid,
                         double dt, std::optional<double> tau_max) {
    auto [e1, e2] = compute_errors(state.x1, state.x2, x1d, x2d);
    if (pid.integral.size() != e1.size()) {
        pid.integral = Eigen::VectorXd::Zero(e1.size());
    }
    pid.integral += dt * e1;
    pid.integral = pid.integral.cwiseMax(-gains.integral_limit).cwiseMin(gains.integral_limit);

    Eigen::VectorXd tau = -(gains.kp * e1 + gains.ki * pid.integral + gains.kd * e2);
    if (tau_max) {
        tau = tau.cwiseMax(-*tau_max).cwiseMin(*tau_max);
    }
    return tau;
}

}  // namespace reacharm
