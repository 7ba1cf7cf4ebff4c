#pragma once

#include <cstdint>

#include "fogcache/exec.hpp"

namespace fogcache {

/// One Monte Carlo experiment: deliver a file of `file_size` packets with
/// `cached` of them already at the BS, drawing per-slot successes with
/// probabilities p1 (fronthaul) and p2 (downlink).
struct SimConfig {
    int file_size;
    int cached;
    double p1;
    double p2;
    std::uint64_t runs;
    std::uint64_t master_seed;
};

struct SimResult {
    double mean_slots;
    double std_error;  // sample std / sqrt(runs); 0 when degenerate
    std::uint64_t runs;
    std::uint64_t min_slots;
    std::uint64_t max_slots;
    bool degenerate;  // single-sample estimate, std_error not meaningful
};

/// Seed for the counter-indexed stream `counter` under `master_seed`
/// (SplitMix64 finalizer over master_seed + GOLDEN*(counter+1)). Every run
/// of a simulation gets its own stream derived this way, so results do not
/// depend on execution order or thread count. The derivation is part of the
/// output contract: identical seeds reproduce identical results across
/// versions.
std::uint64_t stream_seed(std::uint64_t master_seed, std::uint64_t counter);

/// Slot count of one delivery, deterministic in (master_seed, run_index).
/// Each slot the fronthaul attempts iff packets are still missing at the BS
/// and the downlink attempts iff the BS holds an undelivered packet; a
/// packet arriving in a slot becomes eligible for the downlink in the next.
/// Throws std::invalid_argument for an invalid config or run_index >= runs.
std::uint64_t simulate_delivery(const SimConfig& config, std::uint64_t run_index);

/// Mean/extremes/standard error over config.runs independent deliveries.
/// Aggregation uses integer accumulators, so serial and parallel execution
/// agree bit-for-bit at any thread count.
SimResult estimate_delay(const SimConfig& config,
                         ExecMode mode = ExecMode::parallel);

}  // namespace fogcache
