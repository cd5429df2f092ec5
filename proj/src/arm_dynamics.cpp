#include "reacharm/arm_dynamics.hpp"

#include <cmath>

#include "reacharm/errors.hpp"

namespace reacharm {

namespace {

void check_dof2(const Eigen::VectorXd& q) {
    if (q.size() != 2) {
        throw DimensionMismatch("the shipped rigid-body model is the 2-link arm (got dof=" +
                                std::to_string(q.size()) + ")");
    }
}

}  // namespace

Eigen::MatrixXd mass_matrix(const Eigen::VectorXd& q, const ArmParams& p) {
    check_dof2(q);
    // Standard 2-link form: M = [a + 2b c2, d + b c2; d + b c2, d].
    const double a = p.m1 * p.lc1 * p.lc1 + p.I1 + p.m2 * (p.l1 * p.l1 + p.lc2 * p.lc2) + p.I2;
    const double b = p.m2 * p.l1 * p.lc2;
    const double d = p.m2 * p.lc2 * p.lc2 + p.I2;
    const double c2 = std::cos(q(1));

    Eigen::MatrixXd M(2, 2);
    M(0, 0) = a + 2.0 * b * c2;
    M(0, 1) = d + b * c2;
    M(1, 0) = M(0, 1);
    M(1, 1) = d;
    return M;
}

Eigen::MatrixXd coriolis_matrix(const Eigen::VectorXd& q, const Eigen::VectorXd& qdot,
                                const ArmParams& p) {
    check_dof2(q);
    check_dof2(qdot);
    // Christoffel convention; h = -m2 l1 lc2 sin(q2).
    const double h = -p.m2 * p.l1 * p.lc2 * std::sin(q(1));

    Eigen::MatrixXd C(2, 2);
    C(0, 0) = h * qdot(1);
    C(0, 1) = h * (qdot(0) + qdot(1));
    C(1, 0) = -h * qdot(0);
    C(1, 1) = 0.0;
    return C;
}

Eigen::VectorXd gravity_vector(const Eigen::VectorXd& q, const ArmParams& p) {
    check_dof2(q);
    const double c1 = std::cos(q(0));
    const double c12 = std::cos(q(0) + q(1));

    Eigen::VectorXd G(2);
    G(0) = p.g * (p.m1 * p.lc1 * c1 + p.m2 * p.l1 * c1 + p.m2 * p.lc2 * c12);
    G(1) = p.g * p.m2 * p.lc2 * c12;
    return G;
}

Eigen::VectorXd uncertainty_accel(const JointState& state) {
    check_dof2(state.x1);
    Eigen::VectorXd F(2);
    F(0) = 0.5 * std::cos(0.7 * state.x2(1));
    F(1) = -1.1 * std::cos(1.8 * state.x1(1)) + 1.8 * std::cos(0.3 * state.x1(1));
    return F;
}

Eigen::VectorXd disturbance_accel(const JointState& state, Rng& rng) {
    check_dof2(state.x1);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    Eigen::VectorXd tau_d(2);
    tau_d(0) = 3.0 * std::cos(2.0 * state.t);
    tau_d(1) = -0.2 * unif(rng);
    return tau_d;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> uncertainty_terms(const JointState& state, Rng& rng) {
    return {uncertainty_accel(state), disturbance_accel(state, rng)};
}

JointState step_dynamics(const JointState& state, const Eigen::VectorXd& tau, double dt,
                         const ArmParams& params, const SimOptions& opts, Rng& rng) {
    if (tau.size() != state.x1.size()) {
        throw DimensionMismatch("torque dimension does not match state");
    }
    const int n = state.dof();

    // tau_d is drawn once and held constant within the step.
    Eigen::VectorXd tau_d = Eigen::VectorXd::Zero(n);
    if (opts.disturbance) {
        tau_d = disturbance_accel(state, rng);
    }

    auto accel = [&](const Eigen::VectorXd& x1, const Eigen::VectorXd& x2,
                     double t) -> Eigen::VectorXd {
        const Eigen::MatrixXd M = mass_matrix(x1, params);
        Eigen::VectorXd rhs = tau;
        if (opts.rigid_body) {
            rhs -= coriolis_matrix(x1, x2, params) * x2 + gravity_vector(x1, params);
        }
        Eigen::VectorXd a = M.ldlt().solve(rhs);
        if (opts.uncertainty) {
            JointState s{x1, x2, t};
            a += uncertainty_accel(s);
        }
        return a + tau_d;
    };

    const Eigen::VectorXd k1q = state.x2;
    const Eigen::VectorXd k1v = accel(state.x1, state.x2, state.t);
    const Eigen::VectorXd k2q = state.x2 + 0.5 * dt * k1v;
    const Eigen::VectorXd k2v = accel(state.x1 + 0.5 * dt * k1q, k2q, state.t + 0.5 * dt);
    const Eigen::VectorXd k3q = state.x2 + 0.5 * dt * k2v;
    const Eigen::VectorXd k3v = accel(state.x1 + 0.5 * dt * k2q, k3q, state.t + 0.5 * dt);
    const Eigen::VectorXd k4q = state.x2 + dt * k3v;
    const Eigen::VectorXd k4v = accel(state.x1 + dt * k3q, k4q, state.t + dt);

    JointState out;
    out.x1 = state.x1 + (dt / 6.0) * (k1q + 2.0 * k2q + 2.0 * k3q + k4q);
    out.x2 = state.x2 + (dt / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    out.t = state.t + dt;

    const double mag = std::max(out.x1.cwiseAbs().maxCoeff(), out.x2.cwiseAbs().maxCoeff());
    if (!std::isfinite(mag) || mag > opts.blowup_limit) {
        throw NumericalBlowup("state magnitude exceeded " + std::to_string(opts.blowup_limit));
    }
    return out;
}

Eigen::Vector3d forward_kinematics(const Eigen::VectorXd& q, const ArmParams& p) {
    check_dof2(q);
    const double c1 = std::cos(q(0)), s1 = std::sin(q(0));
    const double c12 = std::cos(q(0) + q(1)), s12 = std::sin(q(0) + q(1));
    return {p.l1 * c1 + p.l2 * c12, p.l1 * s1 + p.l2 * s12, 0.0};
}

Eigen::MatrixXd tip_jacobian(const Eigen::VectorXd& q, const ArmParams& p) {
    check_dof2(q);
    const double s1 = std::sin(q(0)), c1 = std::cos(q(0));
    const double s12 = std::sin(q(0) + q(1)), c12 = std::cos(q(0) + q(1));
    Eigen::MatrixXd J(2, 2);
    J(0, 0) = -p.l1 * s1 - p.l2 * s12;
    J(0, 1) = -p.l2 * s12;
    J(1, 0) = p.l1 * c1 + p.l2 * c12;
    J(1, 1) = p.l2 * c12;
    return J;
}

double kinetic_energy(const JointState& state, const ArmParams& params) {
    const Eigen::MatrixXd M = mass_matrix(state.x1, params);
    return 0.5 * state.x2.dot(M * state.x2);
}

double potential_energy(const Eigen::VectorXd& q, const ArmParams& p) {
    check_dof2(q);
    const double s1 = std::sin(q(0));
    const double s12 = std::sin(q(0) + q(1));
    return p.g * (p.m1 * p.lc1 * s1 + p.m2 * (p.l1 * s1 + p.lc2 * s12));
}

double total_energy(const JointState& state, const ArmParams& params) {
    return kinetic_energy(state, params) + potential_energy(state.x1, params);
}

}  // namespace reacharm
