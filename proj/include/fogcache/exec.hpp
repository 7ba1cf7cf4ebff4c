#pragma once

namespace fogcache {

/// Execution policy for the data-parallel kernels. Both policies produce
/// bit-identical results: parallel loops write into preallocated slots and
/// reductions are either serialized in index order or use integer
/// accumulators, so thread count never changes the output.
enum class ExecMode {
    serial,   ///< reference implementation, one thread
    parallel  ///< OpenMP worksharing (falls back to serial without OpenMP)
};

}  // namespace fogcache
