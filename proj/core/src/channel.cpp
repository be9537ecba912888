#include "qecc/channel.hpp"

#include <algorithm>
#include <thread>

namespace qecc {

namespace {

SweepStats run_range(const Codec& codec, const ChannelConfig& config, std::uint64_t begin,
                     std::uint64_t end) {
    const std::uint32_t p = codec.spec().base();
    const std::size_t n = codec.spec().block_length();
    SweepStats stats;
    std::vector<std::size_t> positions;
    for (std::uint64_t trial = begin; trial < end; ++trial) {
        SplitMix64 rng = trial_stream(config.seed, trial);
        const Codeword transmitted = random_codeword(codec, rng);
        Codeword received = transmitted;
        if (config.forced_weight) {
            positions.clear();
            while (positions.size() < *config.forced_weight) {
                const std::size_t pos = rng.below(n);
                if (std::find(positions.begin(), positions.end(), pos) == positions.end()) {
                    positions.push_back(pos);
                }
            }
            for (std::size_t pos : positions) {
                received.add_at(pos, static_cast<std::uint8_t>(1 + rng.below(p - 1)));
            }
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                if (rng.unit() < config.epsilon) {
                    received.add_at(i, static_cast<std::uint8_t>(1 + rng.below(p - 1)));
                }
            }
        }
        classify_trial(transmitted, received, codec.decode(received), stats);
    }
    return stats;
}

}  // namespace

ChannelReport simulate(const Codec& codec, const ChannelConfig& config) {
    if (config.epsilon < 0.0 || config.epsilon > 1.0) {
        throw UsageError("simulate: epsilon must lie in [0, 1]");
    }
    if (config.trials < 1) throw UsageError("simulate: trials must be at least 1");
    if (config.forced_weight && (*config.forced_weight < 1 ||
                                 *config.forced_weight > codec.spec().block_length())) {
        throw UsageError("simulate: forced weight out of range");
    }
    const unsigned workers =
        std::max<unsigned>(1, std::min<std::uint64_t>(config.workers, config.trials));

    if (workers == 1) {
        ChannelReport report;
        report.stats = run_range(codec, config, 0, config.trials);
        return report;
    }

    std::vector<SweepStats> partial(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const std::uint64_t chunk = config.trials / workers;
    const std::uint64_t remainder = config.trials % workers;
    std::uint64_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t end = begin + chunk + (w < remainder ? 1 : 0);
        threads.emplace_back([&codec, &config, &partial, w, begin, end] {
            partial[w] = run_range(codec, config, begin, end);
        });
        begin = end;
    }
    for (auto& t : threads) t.join();

    ChannelReport report;
    for (const SweepStats& s : partial) report.stats += s;
    return report;
}

}  // namespace qecc
