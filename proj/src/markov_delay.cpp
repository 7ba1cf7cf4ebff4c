#include "fogcache/markov_delay.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace fogcache {

namespace {

void check_probability(double p, const char* name) {
    if (!(p > 0.0) || !(p < 1.0))
        throw std::invalid_argument(std::string(name) +
                                    " must lie strictly inside (0, 1)");
}

void check_state(int at_bs, int delivered, int file_size) {
    if (file_size < 1)
        throw std::invalid_argument("file_size must be >= 1");
    if (at_bs < 0 || delivered < 0 || at_bs + delivered > file_size)
        throw std::invalid_argument(
            "state (" + std::to_string(at_bs) + ", " + std::to_string(delivered) +
            ") outside the chain for file_size " + std::to_string(file_size));
}

}  // namespace

bool admissible(const ChainState& state, int file_size, int cached) {
    const int total = state.at_bs + state.delivered;
    return state.at_bs >= 0 && state.delivered >= 0 && total <= file_size &&
           cached <= total;
}

TransitionProbs transition_probs(int at_bs, int delivered, int file_size,
                                 double p1, double p2) {
    check_state(at_bs, delivered, file_size);
    if (at_bs == 0 && delivered == file_size)
        throw std::invalid_argument("absorbing state has no outgoing transitions");
    check_probability(p1, "p1");
    check_probability(p2, "p2");

    if (at_bs + delivered == file_size)  // fronthaul done, downlink drains
        return {1.0 - p2, p2, 0.0, 0.0};
    if (at_bs == 0)  // downlink starved, only the fronthaul can move
        return {1.0 - p1, 0.0, p1, 0.0};
    return {(1.0 - p1) * (1.0 - p2), (1.0 - p1) * p2, p1 * (1.0 - p2), p1 * p2};
}

ExpectedStepsTable::ExpectedStepsTable(int file_size, double p1, double p2)
    : file_size_(file_size), p1_(p1), p2_(p2) {
    if (file_size < 1)
        throw std::invalid_argument("file_size must be >= 1");
    check_probability(p1, "p1");
    check_probability(p2, "p2");

    const int n = file_size;
    nu_.assign(static_cast<std::size_t>(n + 1) * (n + 1),
               std::numeric_limits<double>::quiet_NaN());
    auto at = [this, n](int i, int j) -> double& {
        return nu_[static_cast<std::size_t>(i) * (n + 1) + j];
    };

    // Backward over diagonals s = i + j; within a diagonal, ascending i so
    // the same-diagonal successor (i-1, j+1) is already filled. The other
    // successors (i+1, j) and (i, j+1) live on diagonal s + 1.
    at(0, n) = 0.0;
    const double interior_denom = 1.0 - (1.0 - p1) * (1.0 - p2);
    for (int s = n; s >= 0; --s) {
        for (int i = (s == n ? 1 : 0); i <= s; ++i) {
            const int j = s - i;
            if (s == n) {
                at(i, j) = 1.0 / p2 + at(i - 1, j + 1);
            } else if (i == 0) {
                at(i, j) = 1.0 / p1 + at(1, j);
            } else {
                at(i, j) = (1.0 + (1.0 - p1) * p2 * at(i - 1, j + 1) +
                            p1 * (1.0 - p2) * at(i + 1, j) + p1 * p2 * at(i, j + 1)) /
                           interior_denom;
            }
        }
    }
}

double ExpectedStepsTable::remaining_slots(int at_bs, int delivered) const {
    check_state(at_bs, delivered, file_size_);
    return nu_[static_cast<std::size_t>(at_bs) * (file_size_ + 1) + delivered];
}

ExpectedStepsTable expected_steps_table(int file_size, double p1, double p2) {
    return ExpectedStepsTable(file_size, p1, p2);
}

DelayProfile delay_profile(int file_size, double p1, double p2) {
    const ExpectedStepsTable table(file_size, p1, p2);
    DelayProfile profile;
    profile.p1 = p1;
    profile.p2 = p2;
    profile.file_size = file_size;
    profile.delays.resize(file_size + 1);
    for (int n = 0; n <= file_size; ++n)
        profile.delays[n] = table.remaining_slots(n, 0);
    return profile;
}

std::vector<DelayProfile> grid_delay_profiles(const CellGrid& grid,
                                              double downlink_rate,
                                              const LinkModel& fronthaul,
                                              int file_size, ExecMode mode) {
    const double p1 = success_probability(fronthaul);
    const int k = grid.levels;
    std::vector<DelayProfile> profiles(k);

    auto compute_level = [&](int i) {
        const double snr2 = snr_at_distance(grid, i);
        const double p2 = success_probability({downlink_rate, snr2});
        profiles[i] = delay_profile(file_size, p1, p2);
    };

    if (mode == ExecMode::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (int i = 0; i < k; ++i) compute_level(i);
    } else {
        for (int i = 0; i < k; ++i) compute_level(i);
    }
    return profiles;
}

std::vector<double> distance_averaged_profile(const CellGrid& grid,
                                              double downlink_rate,
                                              const LinkModel& fronthaul,
                                              int file_size, ExecMode mode) {
    const auto profiles =
        grid_delay_profiles(grid, downlink_rate, fronthaul, file_size, mode);
    // Fixed-order reduction keeps the result independent of thread count.
    std::vector<double> averaged(file_size + 1, 0.0);
    for (int i = 0; i < grid.levels; ++i)
        for (int n = 0; n <= file_size; ++n)
            averaged[n] += grid.weights[i] * profiles[i].delays[n];
    return averaged;
}

double distance_averaged_delay(int cached, const CellGrid& grid,
                               double downlink_rate, const LinkModel& fronthaul,
                               int file_size, ExecMode mode) {
    if (cached < 0 || cached > file_size)
        throw std::invalid_argument("cached packet count outside [0, file_size]");
    return distance_averaged_profile(grid, downlink_rate, fronthaul, file_size,
                                     mode)[cached];
}

}  // namespace fogcache
