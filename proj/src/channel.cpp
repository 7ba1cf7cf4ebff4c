#include "fogcache/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fogcache {

double success_probability(const LinkModel& link) {
    if (!std::isfinite(link.rate) || link.rate <= 0.0)
        throw std::invalid_argument("link rate must be finite and > 0");
    if (!std::isfinite(link.snr) || link.snr <= 0.0)
        throw std::invalid_argument("link snr must be finite and > 0");
    return std::exp(-std::expm1(link.rate * std::log(2.0)) / (2.0 * link.snr));
}

double db_to_linear(double x_db) { return std::pow(10.0, x_db / 10.0); }

double linear_to_db(double x) {
    if (!(x > 0.0))
        throw std::domain_error("linear_to_db requires x > 0");
    return 10.0 * std::log10(x);
}

Popularity zipf_popularity(int num_files, double gamma) {
    if (num_files < 1)
        throw std::invalid_argument("num_files must be >= 1");
    if (!std::isfinite(gamma) || gamma < 0.0)
        throw std::invalid_argument("gamma must be finite and >= 0");
    Popularity pop;
    pop.gamma = gamma;
    pop.probabilities.resize(num_files);
    double norm = 0.0;
    for (int f = 0; f < num_files; ++f) {
        pop.probabilities[f] = std::pow(static_cast<double>(f + 1), -gamma);
        norm += pop.probabilities[f];
    }
    for (double& u : pop.probabilities) u /= norm;
    return pop;
}

CellGrid build_cell_grid(double radius, int levels, double path_loss_k,
                         double path_loss_mu) {
    if (!std::isfinite(radius) || radius <= 0.0)
        throw std::invalid_argument("cell radius must be finite and > 0");
    if (levels < 1)
        throw std::invalid_argument("cell levels must be >= 1");
    if (!std::isfinite(path_loss_k) || path_loss_k <= 0.0)
        throw std::invalid_argument("path_loss_k must be finite and > 0");
    if (!std::isfinite(path_loss_mu) || path_loss_mu < 0.0)
        throw std::invalid_argument("path_loss_mu must be finite and >= 0");

    CellGrid grid;
    grid.radius = radius;
    grid.levels = levels;
    grid.path_loss_k = path_loss_k;
    grid.path_loss_mu = path_loss_mu;
    grid.distances.resize(levels);
    grid.weights.resize(levels);
    const double k = static_cast<double>(levels);
    for (int i = 0; i < levels; ++i) {
        grid.distances[i] = (static_cast<double>(i + 1) / k) * radius;
        grid.weights[i] = 2.0 * static_cast<double>(i + 1) / (k * (k + 1.0));
    }
    return grid;
}

double snr_at_distance(const CellGrid& grid, int level) {
    if (level < 0 || level >= grid.levels)
        throw std::out_of_range("distance level " + std::to_string(level) +
                                " outside [0, " + std::to_string(grid.levels) + ")");
    return grid.path_loss_k / std::pow(grid.distances[level], grid.path_loss_mu);
}

}  // namespace fogcache
