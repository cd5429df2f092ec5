#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "reacharm/rng.hpp"

namespace reacharm {

/// One nest: a gain vector and its objective value (lower is better).
struct Candidate {
    Eigen::VectorXd position;
    double cost = 0.0;
};

struct CsoConfig {
    int eta = 15;           ///< population size (>= 2)
    int n_iteration = 200;  ///< iteration budget
    double pa = 0.25;       ///< abandonment fraction in [0, 1]
    double beta = 1.5;      ///< Levy exponent in (1, 2]
    std::vector<std::array<double, 2>> bounds;  ///< per-dimension [lo, hi]
    std::uint64_t seed = 0;
    bool log_uniform_init = false;  ///< requires strictly positive bounds
    bool coupled_levy = false;      ///< tie the numerator and denominator draws (study flag)
};

struct CsoHistoryRow {
    int iteration;
    double best_cost;
    double mean_cost;
};

struct CsoResult {
    Eigen::VectorXd best;
    double best_cost;
    std::vector<CsoHistoryRow> history;
};

/// Objective with a deterministic per-evaluation sub-seed, derived from
/// (master seed, iteration, candidate index).
using SeededObjective = std::function<double(const Eigen::VectorXd&, std::uint64_t)>;
using Objective = std::function<double(const Eigen::VectorXd&)>;

/// Normalizing scale of the Mantegna step numerator.
double levy_sigma(double beta);

/// stp = (u_normal * sigma_u) / |y_normal|^(1/beta); exposed for tests.
double levy_from_normals(double u_normal, double y_normal, double beta);

/// One heavy-tailed symmetric Levy step. Draws two standard normals
/// (independent by default; `coupled` reuses the numerator draw as the
/// denominator). Denominator draws below 1e-12 in magnitude are resampled.
double levy_step(double beta, Rng& rng, bool coupled = false);

/// Levy-flight move of one nest toward/away from the best nest, clamped to
/// the bounds box. Per-dimension independent step and scale draws.
Eigen::VectorXd global_walk(const Eigen::VectorXd& B_j, const Eigen::VectorXd& B_best,
                            double beta, const std::vector<std::array<double, 2>>& bounds,
                            Rng& rng, bool coupled = false);

/// Regenerates the ceil(pa * eta) worst candidates by mixing random nest
/// pairs; a proposal replaces its candidate only on strict cost improvement.
/// `evaluate(position, slot_index)` supplies proposal costs.
void abandon_and_replace(std::vector<Candidate>& population, double pa,
                         const std::vector<std::array<double, 2>>& bounds, Rng& rng,
                         const std::function<double(const Eigen::VectorXd&, int)>& evaluate);

CsoResult optimize(const SeededObjective& objective, const CsoConfig& cfg);
CsoResult optimize(const Objective& objective, const CsoConfig& cfg);

}  // namespace reacharm
