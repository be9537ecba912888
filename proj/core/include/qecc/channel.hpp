#pragma once

#include <optional>

#include "qecc/analysis.hpp"

namespace qecc {

/// Seeded symmetric-channel run: per trial a random message is encoded,
/// each symbol independently flips to a uniformly random different symbol
/// with probability epsilon, and the decode is classified against the
/// transmitted word. forced_weight replaces the per-symbol flips with
/// exactly that many errors at random distinct positions, which bridges the
/// Monte Carlo numbers to the exhaustive sweeps.
struct ChannelConfig {
    double epsilon = 0.0;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    std::optional<unsigned> forced_weight;
    unsigned workers = 1;
};

struct ChannelReport {
    SweepStats stats;

    double rate(std::uint64_t count) const {
        return stats.trials == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(stats.trials);
    }
};

/// Bitwise deterministic for fixed (seed, trials, spec): trial i draws its
/// randomness from a stream keyed by (seed, i), so the result does not
/// depend on execution order or worker count.
ChannelReport simulate(const Codec& codec, const ChannelConfig& config);

}  // namespace qecc
