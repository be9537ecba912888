#include "qecc/a1.hpp"

namespace qecc {

std::uint64_t A1Code::capacity(unsigned r) {
    if (r < 1) throw UsageError("a1: index length must be at least 1");
    const std::uint64_t kept = (checked_pow(3, r) - 1) / 2;
    return kept >= r ? kept - r : 0;
}

unsigned A1Code::choose_r(std::uint64_t m) {
    if (m < 1) throw UsageError("a1: message length must be at least 1");
    unsigned r = 1;
    while (capacity(r) < m) ++r;
    return r;
}

namespace {

std::shared_ptr<const CodeSpec> build_a1_spec(unsigned r, std::size_t m) {
    if (m < 1 || m > A1Code::capacity(r)) {
        throw UsageError("a1: message length exceeds capacity for this index length");
    }
    const std::uint64_t n = checked_pow(3, r);
    std::vector<Position> positions;
    std::size_t message_left = m;
    for (std::uint64_t i = 1; i < n; ++i) {
        DigitVec index = DigitVec::from_index(i, 3, r);
        // Keep one index per inverse pair: the one starting with 1.
        if (index.leading_nonzero() != 1) continue;
        Position pos;
        const bool redundant = index.weight() == 1;
        pos.index = std::move(index);
        if (redundant) {
            pos.role = PositionRole::Redundant;
        } else if (message_left > 0) {
            pos.role = PositionRole::Message;
            --message_left;
        } else {
            pos.role = PositionRole::Banished;
        }
        positions.push_back(std::move(pos));
    }
    return std::make_shared<CodeSpec>(CodeFamily::A1, 3, r, 3, std::move(positions),
                                      /*global_sum_check=*/false, /*group_sum_checks=*/false);
}

}  // namespace

A1Code::A1Code(unsigned index_length, std::size_t message_length)
    : Codec(build_a1_spec(index_length, message_length)) {}

Codeword A1Code::encode(std::span<const std::uint8_t> message) const {
    std::vector<std::uint8_t> symbols = place_message(message);
    const DigitVec target = inverse(indexed_xor_sum(*spec_, symbols));
    for (unsigned j = 1; j <= spec_->index_length(); ++j) {
        const auto ordinal =
            spec_->ordinal_of_index(DigitVec::elementary(3, spec_->index_length(), j));
        symbols[*ordinal] = target.lsd(j - 1);
    }
    return Codeword(spec_, std::move(symbols));
}

DigitVec A1Code::syndrome(const Codeword& word) const {
    return indexed_xor_sum(*spec_, word.symbols());
}

DecodeResult A1Code::decode(const Codeword& received) const {
    const DigitVec s = syndrome(received);
    if (s.is_zero()) {
        return DecodeResult{DecodeOutcome{DecodeStatus::Clean, {}}, received};
    }

    // A single error of magnitude d at index i shifts the sum to d*i, so the
    // kept member of the pair {s, 2s} names the location and the magnitude.
    DigitVec location = s;
    std::uint8_t delta = 1;
    if (location.leading_nonzero() != 1) {
        location = scalar_mul(2, s);
        delta = 2;
    }

    const auto ordinal = spec_->ordinal_of_index(location);
    if (!ordinal) {
        // Banished region: no symbol lives there, so one error cannot
        // explain the syndrome.
        return DecodeResult{DecodeOutcome{DecodeStatus::DetectedMultiple, {}}, received};
    }
    Codeword repaired = received;
    repaired.add_at(*ordinal, static_cast<std::uint8_t>(3 - delta));
    return DecodeResult{
        DecodeOutcome{DecodeStatus::CorrectedSingle, {Correction{*ordinal, delta}}},
        std::move(repaired)};
}

}  // namespace qecc
