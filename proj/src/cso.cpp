#include "reacharm/cso.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "reacharm/errors.hpp"

namespace reacharm {

namespace {

double clamp_to(double v, const std::array<double, 2>& b) {
    return std::clamp(v, b[0], b[1]);
}

void validate(const CsoConfig& cfg) {
    if (cfg.eta < 2) throw ConfigError("cso: eta must be >= 2");
    if (cfg.pa < 0.0 || cfg.pa > 1.0) throw ConfigError("cso: pa must be in [0, 1]");
    if (cfg.beta <= 1.0 || cfg.beta > 2.0) throw ConfigError("cso: beta must be in (1, 2]");
    if (cfg.bounds.empty()) throw ConfigError("cso: bounds must be non-empty");
    for (const auto& b : cfg.bounds) {
        if (!(b[0] < b[1])) throw ConfigError("cso: each bound must satisfy lo < hi");
        if (cfg.log_uniform_init && b[0] <= 0.0) {
            throw ConfigError("cso: log-uniform init needs positive lower bounds");
        }
    }
}

int best_index(const std::vector<Candidate>& pop) {
    int bi = 0;
    for (int i = 1; i < static_cast<int>(pop.size()); ++i) {
        if (pop[i].cost < pop[bi].cost) bi = i;
    }
    return bi;
}

}  // namespace

double levy_sigma(double beta) {
    const double num = std::tgamma(beta + 1.0) * std::sin(M_PI * beta / 2.0);
    const double den = std::tgamma((beta + 1.0) / 2.0) * beta * std::pow(2.0, (beta - 1.0) / 2.0);
    return std::pow(num / den, 1.0 / beta);
}

double levy_from_normals(double u_normal, double y_normal, double beta) {
    const double u = u_normal * levy_sigma(beta);
    return u / std::pow(std::abs(y_normal), 1.0 / beta);
}

double levy_step(double beta, Rng& rng, bool coupled) {
    std::normal_distribution<double> normal(0.0, 1.0);
    const double u_normal = normal(rng);
    double y_normal = coupled ? u_normal : normal(rng);
    while (std::abs(y_normal) < 1e-12) {
        y_normal = normal(rng);
    }
    return levy_from_normals(u_normal, y_normal, beta);
}

Eigen::VectorXd global_walk(const Eigen::VectorXd& B_j, const Eigen::VectorXd& B_best,
                            double beta, const std::vector<std::array<double, 2>>& bounds,
                            Rng& rng, bool coupled) {
    if (B_j.size() != B_best.size()) throw DimensionMismatch("global_walk: size mismatch");
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXd out(B_j.size());
    for (int d = 0; d < B_j.size(); ++d) {
        const double stp = levy_step(beta, rng, coupled);
        const double ell = normal(rng);
        const double v = B_j(d) + ell * 0.01 * stp * (B_j(d) - B_best(d));
        out(d) = clamp_to(v, bounds[static_cast<std::size_t>(d)]);
    }
    return out;
}

void abandon_and_replace(std::vector<Candidate>& population, double pa,
                         const std::vector<std::array<double, 2>>& bounds, Rng& rng,
                         const std::function<double(const Eigen::VectorXd&, int)>& evaluate) {
    const int eta = static_cast<int>(population.size());
    const int k = static_cast<int>(std::ceil(pa * eta));
    if (k <= 0) return;

    // Indices of the k worst candidates by cost.
    std::vector<int> order(population.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return population[a].cost < population[b].cost; });

    std::vector<int> perm1(order.size()), perm2(order.size());
    std::iota(perm1.begin(), perm1.end(), 0);
    std::iota(perm2.begin(), perm2.end(), 0);
    std::shuffle(perm1.begin(), perm1.end(), rng);
    std::shuffle(perm2.begin(), perm2.end(), rng);

    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int slot = 0; slot < k; ++slot) {
        const int j = order[static_cast<std::size_t>(eta - 1 - slot)];
        const Eigen::VectorXd& iota_nest = population[static_cast<std::size_t>(
            perm1[static_cast<std::size_t>(j)])].position;
        const Eigen::VectorXd& kappa_nest = population[static_cast<std::size_t>(
            perm2[static_cast<std::size_t>(j)])].position;
        const double r = unif(rng);

        Eigen::VectorXd proposal = population[static_cast<std::size_t>(j)].position +
                                   r * (iota_nest - kappa_nest);
        for (int d = 0; d < proposal.size(); ++d) {
            proposal(d) = clamp_to(proposal(d), bounds[static_cast<std::size_t>(d)]);
        }

        const double cost = evaluate(proposal, slot);
        if (cost < population[static_cast<std::size_t>(j)].cost) {
            population[static_cast<std::size_t>(j)] = {proposal, cost};
        }
    }
}

CsoResult optimize(const SeededObjective& objective, const CsoConfig& cfg) {
    validate(cfg);
    const int dim = static_cast<int>(cfg.bounds.size());
    Rng rng(cfg.seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    auto init_coord = [&](int d) {
        const auto& b = cfg.bounds[static_cast<std::size_t>(d)];
        const double u = unif(rng);
        if (cfg.log_uniform_init) {
            return std::exp(std::log(b[0]) + u * (std::log(b[1]) - std::log(b[0])));
        }
        return b[0] + u * (b[1] - b[0]);
    };

    std::vector<Candidate> pop(static_cast<std::size_t>(cfg.eta));
    for (int j = 0; j < cfg.eta; ++j) {
        Eigen::VectorXd x(dim);
        for (int d = 0; d < dim; ++d) x(d) = init_coord(d);
        pop[static_cast<std::size_t>(j)] = {x, objective(x, sub_seed(cfg.seed, 0, j))};
    }

    std::vector<CsoHistoryRow> history;
    auto record = [&](int iter) {
        double mean = 0.0;
        for (const auto& c : pop) mean += c.cost;
        mean /= static_cast<double>(pop.size());
        history.push_back({iter, pop[static_cast<std::size_t>(best_index(pop))].cost, mean});
    };
    record(0);

    for (int iter = 1; iter <= cfg.n_iteration; ++iter) {
        const Eigen::VectorXd best = pop[static_cast<std::size_t>(best_index(pop))].position;

        // Levy-flight phase: move every nest, keep strict improvements.
        std::vector<Eigen::VectorXd> proposals(pop.size());
        for (int j = 0; j < cfg.eta; ++j) {
            proposals[static_cast<std::size_t>(j)] = global_walk(
                pop[static_cast<std::size_t>(j)].position, best, cfg.beta, cfg.bounds, rng,
                cfg.coupled_levy);
        }
        for (int j = 0; j < cfg.eta; ++j) {
            const double cost = objective(proposals[static_cast<std::size_t>(j)],
                                          sub_seed(cfg.seed, 2 * iter - 1, j));
            if (cost < pop[static_cast<std::size_t>(j)].cost) {
                pop[static_cast<std::size_t>(j)] = {proposals[static_cast<std::size_t>(j)], cost};
            }
        }

        // Abandonment phase: rebuild the worst fraction from random pair mixes.
        abandon_and_replace(pop, cfg.pa, cfg.bounds, rng,
                            [&](const Eigen::VectorXd& x, int slot) {
                                return objective(x, sub_seed(cfg.seed, 2 * iter, slot));
                            });

        record(iter);
    }

    const int bi = best_index(pop);
    return {pop[static_cast<std::size_t>(bi)].position, pop[static_cast<std::size_t>(bi)].cost,
            std::move(history)};
}

CsoResult optimize(const Objective& objective, const CsoConfig& cfg) {
    return optimize(
        [&objective](const Eigen::VectorXd& x, std::uint64_t) { return objective(x); }, cfg);
}

}  // namespace reacharm
