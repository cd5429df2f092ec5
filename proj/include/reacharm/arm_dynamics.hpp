#pragma once

#include <Eigen/Dense>

#include "reacharm/rng.hpp"

namespace reacharm {

/// Joint-space state of the arm: angles x1 [rad], velocities x2 [rad/s],
/// simulation time t [s].
struct JointState {
    Eigen::VectorXd x1;
    Eigen::VectorXd x2;
    double t = 0.0;

    int dof() const { return static_cast<int>(x1.size()); }
};

/// Physical parameters of the planar vertical 2-link arm.
/// Angle convention: q1 from the horizontal +x axis, q2 relative to link 1;
/// gravity acts along -y.
struct ArmParams {
    double l1 = 1.0;               ///< link lengths [m]
    double l2 = 0.8;
    double m1 = 1.0;               ///< link masses [kg]
    double m2 = 1.0;
    double lc1 = 0.5;              ///< center-of-mass offsets [m]
    double lc2 = 0.4;
    double I1 = 1.0 / 12.0;        ///< rotational inertias about the COM [kg m^2]
    double I2 = 0.8 * 0.8 / 12.0;
    double g = 9.81;               ///< gravity [m/s^2]
};

/// Which plant terms are active during integration.
///
/// `rigid_body` toggles the Coriolis and gravity torques; `uncertainty` the
/// friction-like acceleration term; `disturbance` the external acceleration
/// disturbance (its second entry consumes one uniform draw per step).
struct SimOptions {
    bool rigid_body = true;
    bool uncertainty = true;
    bool disturbance = true;
    double blowup_limit = 1e6;
};

/// Everything the plant computes at one state, exposed for inspection.
struct PlantOutputs {
    Eigen::MatrixXd M;
    Eigen::MatrixXd C;
    Eigen::VectorXd G;
    Eigen::VectorXd F_unc;   ///< uncertain acceleration [rad/s^2]
    Eigen::VectorXd tau_d;   ///< disturbance acceleration [rad/s^2]
};

/// Inertia matrix M(q); symmetric positive definite.
Eigen::MatrixXd mass_matrix(const Eigen::VectorXd& q, const ArmParams& params);

/// Coriolis/centrifugal matrix in Christoffel form, so that
/// (dM/dt - 2C) is skew-symmetric.
Eigen::MatrixXd coriolis_matrix(const Eigen::VectorXd& q, const Eigen::VectorXd& qdot,
                                const ArmParams& params);

/// Gravity torque vector; equals the gradient of the potential energy.
Eigen::VectorXd gravity_vector(const Eigen::VectorXd& q, const ArmParams& params);

/// Friction-like uncertain acceleration term (state-dependent, deterministic).
Eigen::VectorXd uncertainty_accel(const JointState& state);

/// External disturbance acceleration; the second entry uses one uniform(0,1)
/// draw from the provided stream.
Eigen::VectorXd disturbance_accel(const JointState& state, Rng& rng);

/// Convenience: both uncertainty terms at once.
std::pair<Eigen::VectorXd, Eigen::VectorXd> uncertainty_terms(const JointState& state, Rng& rng);

/// One fixed-step RK4 step of
///   x1' = x2,  x2' = M^-1 (tau - C x2 - G) + F_unc + tau_d
/// with tau and tau_d held constant within the step.
/// Throws NumericalBlowup if any state magnitude exceeds opts.blowup_limit.
JointState step_dynamics(const JointState& state, const Eigen::VectorXd& tau, double dt,
                         const ArmParams& params, const SimOptions& opts, Rng& rng);

/// Tip position of the planar arm embedded at z = 0.
Eigen::Vector3d forward_kinematics(const Eigen::VectorXd& q, const ArmParams& params);

/// Tip Jacobian (2 x n), rows are d(px)/dq and d(py)/dq.
Eigen::MatrixXd tip_jacobian(const Eigen::VectorXd& q, const ArmParams& params);

double kinetic_energy(const JointState& state, const ArmParams& params);
double potential_energy(const Eigen::VectorXd& q, const ArmParams& params);
double total_energy(const JointState& state, const ArmParams& params);

}  // namespace reacharm
