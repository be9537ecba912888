#pragma once

#include <optional>

#include "qecc/code.hpp"
#include "qecc/rng.hpp"

namespace qecc {

/// Parity-check rows over the active positions: one row per index digit,
/// then the value-sum rows the family defines (global sum, or the two group
/// indicator rows). A word is a codeword iff every row inner product
/// vanishes mod base.
struct CheckMatrix {
    std::uint32_t base = 0;
    std::vector<std::vector<std::uint8_t>> rows;

    std::size_t columns() const { return rows.empty() ? 0 : rows.front().size(); }
    /// Row inner products with the word, mod base.
    std::vector<std::uint8_t> syndrome(std::span<const std::uint8_t> word) const;
};

CheckMatrix check_matrix_of(const CodeSpec& spec);

/// A set of columns with nonzero coefficients combining to zero; as a
/// symbol vector it is a codeword of that weight.
struct ColumnDependency {
    std::vector<std::pair<std::size_t, std::uint8_t>> entries;  // (column, coefficient)
};

/// Exhaustive dependency search per weight. result[w-1] holds the first
/// dependency of weight w found, or nullopt when none exists; all-nullopt
/// up to w_max certifies minimum distance > w_max.
std::vector<std::optional<ColumnDependency>> min_distance_column_search(const CheckMatrix& matrix,
                                                                        unsigned w_max);

/// Minimum Hamming weight over all nonzero codewords, produced by running
/// every message through the real encoder. Refuses budgets beyond 10^7
/// messages.
unsigned min_weight_enumeration(const Codec& codec);

/// Outcome counts from error-injection runs. Categories partition trials:
/// clean (no corruption, decoder agreed), corrected_ok (repair matched the
/// transmitted word), miscorrected (decoder returned some other word),
/// detected, silent (decoder said clean on a corrupted word).
struct SweepStats {
    std::uint64_t trials = 0;
    std::uint64_t clean = 0;
    std::uint64_t corrected_ok = 0;
    std::uint64_t miscorrected = 0;
    std::uint64_t detected = 0;
    std::uint64_t silent = 0;

    SweepStats& operator+=(const SweepStats& other);
    friend bool operator==(const SweepStats&, const SweepStats&) = default;
};

/// Classifies one decode against the transmitted word and adds it to stats.
void classify_trial(const Codeword& transmitted, const Codeword& received,
                    const DecodeResult& result, SweepStats& stats);

/// Decodes every error pattern of exactly the given weight applied to the
/// codeword: all position subsets times all nonzero per-position deltas.
SweepStats exhaustive_error_sweep(const Codec& codec, const Codeword& codeword, unsigned weight);

/// Random patterns of exactly the given weight.
SweepStats sampled_error_sweep(const Codec& codec, const Codeword& codeword, unsigned weight,
                               std::uint64_t samples, SplitMix64& rng);

/// Uniformly random message encoded through the codec.
Codeword random_codeword(const Codec& codec, SplitMix64& rng);

}  // namespace qecc
