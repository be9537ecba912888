#include "qecc/analysis.hpp"

#include <algorithm>

namespace qecc {

std::vector<std::uint8_t> CheckMatrix::syndrome(std::span<const std::uint8_t> word) const {
    if (word.size() != columns()) throw UsageError("CheckMatrix: word length mismatch");
    std::vector<std::uint8_t> out(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < word.size(); ++c) acc += rows[r][c] * word[c];
        out[r] = static_cast<std::uint8_t>(acc % base);
    }
    return out;
}

CheckMatrix check_matrix_of(const CodeSpec& spec) {
    CheckMatrix m;
    m.base = spec.base();
    const std::size_t n = spec.block_length();

    for (unsigned j = 0; j < spec.index_length(); ++j) {
        std::vector<std::uint8_t> row(n, 0);
        for (std::size_t c = 0; c < n; ++c) {
            const Position& pos = spec.active(c);
            if (pos.index) row[c] = pos.index->digit(j);
        }
        m.rows.push_back(std::move(row));
    }
    if (spec.group_sum_checks()) {
        for (std::uint8_t g = 1; g <= 2; ++g) {
            std::vector<std::uint8_t> row(n, 0);
            for (std::size_t c = 0; c < n; ++c) row[c] = spec.active(c).group == g ? 1 : 0;
            m.rows.push_back(std::move(row));
        }
    } else if (spec.global_sum_check()) {
        m.rows.emplace_back(n, 1);
    }
    return m;
}

std::vector<std::optional<ColumnDependency>> min_distance_column_search(const CheckMatrix& matrix,
                                                                        unsigned w_max) {
    if (w_max > 4) throw UsageError("min_distance_column_search: weight budget capped at 4");
    const std::uint32_t p = matrix.base;
    const std::size_t n = matrix.columns();
    const std::size_t r = matrix.rows.size();
    std::vector<std::optional<ColumnDependency>> results(w_max);

    std::vector<std::pair<std::size_t, std::uint8_t>> chosen;
    std::vector<std::uint32_t> acc(r, 0);
    for (unsigned w = 1; w <= w_max; ++w) {
        bool found = false;
        auto extend = [&](auto&& self, std::size_t first_free) -> void {
            if (found) return;
            if (chosen.size() == w) {
                for (std::size_t i = 0; i < r; ++i) {
                    if (acc[i] % p != 0) return;
                }
                results[w - 1] = ColumnDependency{chosen};
                found = true;
                return;
            }
            for (std::size_t c = first_free; c + (w - chosen.size()) <= n; ++c) {
                for (std::uint32_t k = 1; k < p; ++k) {
                    for (std::size_t i = 0; i < r; ++i) acc[i] += k * matrix.rows[i][c];
                    chosen.emplace_back(c, static_cast<std::uint8_t>(k));
                    self(self, c + 1);
                    chosen.pop_back();
                    for (std::size_t i = 0; i < r; ++i) acc[i] -= k * matrix.rows[i][c];
                    if (found) return;
                }
            }
        };
        extend(extend, 0);
    }
    return results;
}

unsigned min_weight_enumeration(const Codec& codec) {
    const std::uint32_t p = codec.spec().base();
    const std::size_t k = codec.spec().message_length();
    if (k == 0) throw UsageError("min_weight_enumeration: code has no message symbols");
    constexpr std::uint64_t kBudget = 10'000'000;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total *= p;
        if (total > kBudget) throw UsageError("min_weight_enumeration: message space exceeds budget");
    }

    unsigned best = static_cast<unsigned>(codec.spec().block_length()) + 1;
    std::vector<std::uint8_t> message(k, 0);
    for (std::uint64_t m = 1; m < total; ++m) {
        // Mixed-radix increment.
        for (std::size_t i = k; i-- > 0;) {
            if (++message[i] < p) break;
            message[i] = 0;
        }
        const Codeword word = codec.encode(message);
        unsigned weight = 0;
        for (std::uint8_t s : word.symbols()) weight += s != 0;
        best = std::min(best, weight);
    }
    return best;
}

SweepStats& SweepStats::operator+=(const SweepStats& other) {
    trials += other.trials;
    clean += other.clean;
    corrected_ok += other.corrected_ok;
    miscorrected += other.miscorrected;
    detected += other.detected;
    silent += other.silent;
    return *this;
}

void classify_trial(const Codeword& transmitted, const Codeword& received,
                    const DecodeResult& result, SweepStats& stats) {
    ++stats.trials;
    switch (result.outcome.status) {
        case DecodeStatus::Clean:
            if (received == transmitted) {
                ++stats.clean;
            } else {
                ++stats.silent;
            }
            break;
        case DecodeStatus::CorrectedSingle:
        case DecodeStatus::CorrectedMulti:
            if (result.word == transmitted) {
                ++stats.corrected_ok;
            } else {
                ++stats.miscorrected;
            }
            break;
        case DecodeStatus::DetectedMultiple:
            ++stats.detected;
            break;
    }
}

SweepStats exhaustive_error_sweep(const Codec& codec, const Codeword& codeword, unsigned weight) {
    if (weight < 1) throw UsageError("error_sweep: weight must be at least 1");
    const std::uint32_t p = codec.spec().base();
    const std::size_t n = codeword.size();
    SweepStats stats;

    std::vector<std::pair<std::size_t, std::uint8_t>> pattern;
    auto extend = [&](auto&& self, std::size_t first_free) -> void {
        if (pattern.size() == weight) {
            Codeword received = codeword;
            for (auto [pos, delta] : pattern) received.add_at(pos, delta);
            classify_trial(codeword, received, codec.decode(received), stats);
            return;
        }
        for (std::size_t i = first_free; i + (weight - pattern.size()) <= n; ++i) {
            for (std::uint32_t d = 1; d < p; ++d) {
                pattern.emplace_back(i, static_cast<std::uint8_t>(d));
                self(self, i + 1);
                pattern.pop_back();
            }
        }
    };
    extend(extend, 0);
    return stats;
}

SweepStats sampled_error_sweep(const Codec& codec, const Codeword& codeword, unsigned weight,
                               std::uint64_t samples, SplitMix64& rng) {
    if (weight < 1) throw UsageError("error_sweep: weight must be at least 1");
    const std::uint32_t p = codec.spec().base();
    const std::size_t n = codeword.size();
    if (weight > n) throw UsageError("error_sweep: weight exceeds block length");
    SweepStats stats;
    std::vector<std::size_t> positions;
    for (std::uint64_t t = 0; t < samples; ++t) {
        positions.clear();
        while (positions.size() < weight) {
            const std::size_t pos = rng.below(n);
            if (std::find(positions.begin(), positions.end(), pos) == positions.end()) {
                positions.push_back(pos);
            }
        }
        Codeword received = codeword;
        for (std::size_t pos : positions) {
            received.add_at(pos, static_cast<std::uint8_t>(1 + rng.below(p - 1)));
        }
        classify_trial(codeword, received, codec.decode(received), stats);
    }
    return stats;
}

Codeword random_codeword(const Codec& codec, SplitMix64& rng) {
    std::vector<std::uint8_t> message(codec.spec().message_length());
    for (auto& d : message) d = static_cast<std::uint8_t>(rng.below(codec.spec().base()));
    return codec.encode(message);
}

}  // namespace qecc
