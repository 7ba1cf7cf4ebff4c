#pragma once

#include <vector>

namespace fogcache {

/// One block-fading Rayleigh link carrying fixed-rate packets.
/// `rate` is the spectral efficiency in bit/s/Hz, `snr` the average
/// signal-to-noise ratio in linear scale. Everything inside the library
/// works with linear SNR; decibels exist only at the CLI boundary.
struct LinkModel {
    double rate;
    double snr;
};

/// Probability that a single slot on `link` is decoded, i.e. that the
/// instantaneous capacity supports the packet rate:
/// exp(-(2^rate - 1) / (2 snr)). Strictly inside (0,1] for valid inputs.
/// Throws std::invalid_argument when rate or snr is non-positive or
/// non-finite.
double success_probability(const LinkModel& link);

double db_to_linear(double x_db);

/// Throws std::domain_error for x <= 0.
double linear_to_db(double x);

/// Zipf request probabilities over a library of files, most popular first.
struct Popularity {
    std::vector<double> probabilities;  // u_f, descending, sums to 1
    double gamma;                       // skew exponent, >= 0
    int num_files() const { return static_cast<int>(probabilities.size()); }
};

/// u_f = f^-gamma / sum_g g^-gamma for f = 1..num_files.
/// Throws std::invalid_argument for num_files < 1 or gamma < 0 / non-finite.
Popularity zipf_popularity(int num_files, double gamma);

/// Circular cell of radius `radius` discretized into `levels` rings.
/// Ring i (0-based) sits at distance (i+1)/levels * radius and carries the
/// user-population weight 2(i+1)/(levels(levels+1)), the discrete version of
/// the uniform-disc density 2d/R^2. `path_loss_k` is the downlink SNR at
/// 1 m (linear), `path_loss_mu` the propagation exponent.
struct CellGrid {
    double radius;
    int levels;
    double path_loss_k;
    double path_loss_mu;
    std::vector<double> distances;
    std::vector<double> weights;
};

CellGrid build_cell_grid(double radius, int levels, double path_loss_k,
                         double path_loss_mu);

/// Downlink SNR path_loss_k / d^mu at ring `level` (0-based).
/// Throws std::out_of_range for level outside [0, levels).
double snr_at_distance(const CellGrid& grid, int level);

}  // namespace fogcache
