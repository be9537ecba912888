#include "qecc/prototype.hpp"

namespace qecc {

namespace {

std::shared_ptr<const CodeSpec> build_prototype_spec(std::uint32_t base, unsigned r) {
    if (!is_prime(base)) throw UsageError("prototype: base must be prime");
    if (r < 1) throw UsageError("prototype: index length must be at least 1");
    const std::uint64_t n = checked_pow(base, r);

    std::vector<Position> positions;
    positions.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        Position pos;
        pos.index = DigitVec::from_index(i, base, r);
        // Redundant at 0 and every power of the base; message elsewhere.
        const bool redundant =
            i == 0 || (pos.index->weight() == 1 && pos.index->leading_nonzero() == 1);
        pos.role = redundant ? PositionRole::Redundant : PositionRole::Message;
        positions.push_back(std::move(pos));
    }
    return std::make_shared<CodeSpec>(CodeFamily::Prototype, base, r, 3, std::move(positions),
                                      /*global_sum_check=*/true, /*group_sum_checks=*/false);
}

}  // namespace

PrototypeCode::PrototypeCode(std::uint32_t base, unsigned index_length)
    : Codec(build_prototype_spec(base, index_length)) {}

Codeword PrototypeCode::encode(std::span<const std::uint8_t> message) const {
    const std::uint32_t p = spec_->base();
    std::vector<std::uint8_t> symbols = place_message(message);

    // Redundant symbols sit at elementary indices, so each digit check is
    // zeroed independently by the matching digit of inverse(P_message).
    const DigitVec target = inverse(indexed_xor_sum(*spec_, symbols));
    for (unsigned j = 0; j < spec_->index_length(); ++j) {
        const std::uint64_t pos_index = checked_pow(p, spec_->index_length() - 1 - j);
        const auto ordinal = spec_->ordinal_of_index(DigitVec::from_index(pos_index, p, spec_->index_length()));
        symbols[*ordinal] = target.digit(j);
    }

    // Position 0 restores the global value sum.
    std::uint64_t sum = 0;
    for (std::size_t i = 1; i < symbols.size(); ++i) sum += symbols[i];
    symbols[0] = static_cast<std::uint8_t>((p - sum % p) % p);

    return Codeword(spec_, std::move(symbols));
}

PrototypeSyndromes PrototypeCode::syndromes(const Codeword& word, std::uint64_t* add_count) const {
    const std::uint32_t p = spec_->base();
    const unsigned r = spec_->index_length();
    std::vector<std::uint64_t> acc(r, 0);
    std::uint64_t sum = 0;
    std::uint64_t adds = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        const DigitVec& index = *spec_->active(i).index;
        for (unsigned j = 0; j < r; ++j) {
            acc[j] += static_cast<std::uint64_t>(word[i]) * index.digit(j);
            ++adds;
        }
        sum += word[i];
        ++adds;
    }
    if (add_count) *add_count = adds;

    std::vector<std::uint8_t> digits(r);
    for (unsigned j = 0; j < r; ++j) digits[j] = static_cast<std::uint8_t>(acc[j] % p);
    return PrototypeSyndromes{DigitVec(p, std::move(digits)),
                              static_cast<std::uint8_t>(sum % p)};
}

DecodeResult PrototypeCode::decode(const Codeword& received) const {
    const std::uint32_t p = spec_->base();
    const PrototypeSyndromes s = syndromes(received);

    if (s.all_zero()) {
        return DecodeResult{DecodeOutcome{DecodeStatus::Clean, {}}, received};
    }
    if (s.global_sum == 0) {
        // No single error can leave the value sum intact while disturbing a
        // digit check.
        return DecodeResult{DecodeOutcome{DecodeStatus::DetectedMultiple, {}}, received};
    }

    // Error magnitude is the global sum; each location digit solves
    // l * delta == S_j (mod p).
    const std::uint8_t delta = s.global_sum;
    std::vector<std::uint8_t> location(spec_->index_length(), 0);
    for (unsigned j = 0; j < spec_->index_length(); ++j) {
        const std::uint8_t sj = s.digit_sums.digit(j);
        if (sj != 0) location[j] = static_cast<std::uint8_t>(solve_unique(p, delta, sj));
    }
    const auto ordinal = spec_->ordinal_of_index(DigitVec(p, std::move(location)));

    Codeword repaired = received;
    repaired.add_at(*ordinal, static_cast<std::uint8_t>(p - delta));
    return DecodeResult{
        DecodeOutcome{DecodeStatus::CorrectedSingle, {Correction{*ordinal, delta}}},
        std::move(repaired)};
}

Codeword PrototypeCode::weight3_codeword(const DigitVec& u) const {
    if (spec_->base() != 3) throw UsageError("weight3_codeword: base must be 3");
    if (u.base() != 3 || u.length() != spec_->index_length()) {
        throw UsageError("weight3_codeword: u has wrong base or length");
    }
    std::vector<std::uint8_t> symbols(spec_->block_length(), 0);
    DigitVec step = u;
    const DigitVec ones(3, std::vector<std::uint8_t>(u.length(), 1));
    for (int k = 0; k < 3; ++k) {
        symbols[*spec_->ordinal_of_index(step)] = 1;
        step = xor_add(step, ones);
    }
    return Codeword(spec_, std::move(symbols));
}

}  // namespace qecc
