#pragma once

#include <vector>

#include "fogcache/channel.hpp"
#include "fogcache/exec.hpp"

namespace fogcache {

/// Delivery state for one file of `file_size` packets: `at_bs` packets sit
/// at the base station waiting for the downlink, `delivered` have reached
/// the user. The fronthaul still owes file_size - at_bs - delivered packets.
struct ChainState {
    int at_bs;
    int delivered;
};

/// A start state (cached, 0) only reaches states with cached <= at_bs + delivered.
bool admissible(const ChainState& state, int file_size, int cached);

/// Outgoing probabilities of one slot from a non-absorbing state. The four
/// successors are: no change, (at_bs-1, delivered+1), (at_bs+1, delivered),
/// and (at_bs, delivered+1); they always sum to 1.
struct TransitionProbs {
    double stay;
    double downlink_only;
    double fronthaul_only;
    double both;
};

/// p1/p2 are the per-slot fronthaul/downlink success probabilities, both
/// strictly inside (0,1). Throws std::invalid_argument for the absorbing
/// state (0, file_size) or any (i, j) with i + j > file_size or i, j < 0.
TransitionProbs transition_probs(int at_bs, int delivered, int file_size,
                                 double p1, double p2);

/// Expected slots-to-completion for every state of the delivery chain with
/// a given (file_size, p1, p2). Filled once by a backward recursion; the
/// values do not depend on how many packets were cached, so one table
/// serves every start state.
class ExpectedStepsTable {
  public:
    ExpectedStepsTable(int file_size, double p1, double p2);

    /// Expected remaining slots from (at_bs, delivered). Zero only at the
    /// absorbing state (0, file_size).
    double remaining_slots(int at_bs, int delivered) const;

    int file_size() const { return file_size_; }
    double p1() const { return p1_; }
    double p2() const { return p2_; }

  private:
    int file_size_;
    double p1_;
    double p2_;
    std::vector<double> nu_;  // (file_size+1)^2, row-major, i*(N+1)+j
};

ExpectedStepsTable expected_steps_table(int file_size, double p1, double p2);

/// delays[n] = expected slots to deliver the whole file when n packets are
/// cached at the BS. Non-increasing in n, with delays[file_size] exactly
/// file_size / p2.
struct DelayProfile {
    std::vector<double> delays;
    double p1;
    double p2;
    int file_size;
};

DelayProfile delay_profile(int file_size, double p1, double p2);

/// One DelayProfile per cell ring, at that ring's downlink SNR. This is the
/// hot loop of every sweep: rings are independent, so the parallel policy
/// shares them across threads and writes each result into its own slot.
std::vector<DelayProfile> grid_delay_profiles(const CellGrid& grid,
                                              double downlink_rate,
                                              const LinkModel& fronthaul,
                                              int file_size,
                                              ExecMode mode = ExecMode::parallel);

/// Population-weighted average of the per-ring profiles: element n is the
/// expected delay over a uniformly placed user when n packets are cached.
std::vector<double> distance_averaged_profile(const CellGrid& grid,
                                              double downlink_rate,
                                              const LinkModel& fronthaul,
                                              int file_size,
                                              ExecMode mode = ExecMode::parallel);

double distance_averaged_delay(int cached, const CellGrid& grid,
                               double downlink_rate, const LinkModel& fronthaul,
                               int file_size, ExecMode mode = ExecMode::parallel);

}  // namespace fogcache
