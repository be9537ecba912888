#include "qecc/a2.hpp"

#include <algorithm>

namespace qecc {

namespace {

bool is_member(const std::vector<DigitVec>& sorted_set, const DigitVec& v) {
    return std::binary_search(sorted_set.begin(), sorted_set.end(), v);
}

/// Shared layout: the indices of I1 and I2 merged ascending, redundant roles
/// on R, banished tail taken from the highest I2 indices.
std::vector<Position> indexed_positions(const WxliFamily& family, bool with_i2,
                                        std::size_t banish_from_i2) {
    std::vector<Position> positions;
    std::vector<DigitVec> banished;
    if (banish_from_i2 > 0) {
        banished.assign(family.i2.end() - banish_from_i2, family.i2.end());
    }
    std::vector<DigitVec> redundant_sorted = family.redundant;
    std::sort(redundant_sorted.begin(), redundant_sorted.end());

    std::vector<std::pair<DigitVec, std::uint8_t>> indexed;  // (index, group)
    for (const DigitVec& v : family.i1) indexed.emplace_back(v, 1);
    if (with_i2) {
        for (const DigitVec& v : family.i2) indexed.emplace_back(v, 2);
    }
    std::sort(indexed.begin(), indexed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    for (auto& [index, group] : indexed) {
        Position pos;
        pos.group = group;
        if (group == 1 && is_member(redundant_sorted, index)) {
            pos.role = PositionRole::Redundant;
        } else if (group == 2 && is_member(banished, index)) {
            pos.role = PositionRole::Banished;
        } else {
            pos.role = PositionRole::Message;
        }
        pos.index = std::move(index);
        positions.push_back(std::move(pos));
    }
    return positions;
}

std::shared_ptr<const CodeSpec> build_a2_spec(const WxliFamily& family, std::size_t m) {
    const std::uint64_t cap = 2 * family.f() - family.r;
    if (m > cap) throw UsageError("a2: message length exceeds capacity");
    if (m + family.f() < cap) {
        throw UsageError("a2: message too short for this index length; use the sparse variant");
    }
    std::vector<Position> positions =
        indexed_positions(family, /*with_i2=*/true, /*banish_from_i2=*/cap - m);
    positions.push_back(Position{PositionKind::OddAdjust, std::nullopt, PositionRole::Special, 1});
    positions.push_back(Position{PositionKind::EvenAdjust, std::nullopt, PositionRole::Special, 2});
    return std::make_shared<CodeSpec>(CodeFamily::A2, 3, family.r, 4, std::move(positions),
                                      /*global_sum_check=*/false, /*group_sum_checks=*/true);
}

std::shared_ptr<const CodeSpec> build_sparse_spec(const WxliFamily& family, std::size_t m,
                                                  bool global_check) {
    const std::uint64_t cap = family.f() - family.r;
    if (m > cap) throw UsageError("a2sparse: message length exceeds capacity");

    // No I2 side here; short messages banish the highest I1 message indices.
    std::vector<Position> positions =
        indexed_positions(family, /*with_i2=*/false, /*banish_from_i2=*/0);
    std::size_t to_banish = cap - m;
    for (auto it = positions.rbegin(); it != positions.rend() && to_banish > 0; ++it) {
        if (it->role != PositionRole::Message) continue;
        it->role = PositionRole::Banished;
        --to_banish;
    }
    if (global_check) {
        positions.push_back(
            Position{PositionKind::GlobalSum, std::nullopt, PositionRole::Special, 0});
    }
    return std::make_shared<CodeSpec>(CodeFamily::A2Sparse, 3, family.r, 4, std::move(positions),
                                      /*global_sum_check=*/global_check,
                                      /*group_sum_checks=*/false);
}

/// Writes the regular redundant values that zero the index-weighted sum.
void solve_regular_redundant(const CodeSpec& spec, const WxliFamily& family,
                             const SpanSolver& solver, std::vector<std::uint8_t>& symbols) {
    const DigitVec target = inverse(indexed_xor_sum(spec, symbols));
    const std::vector<std::uint8_t> coeffs = solver.coefficients(target);
    for (std::size_t j = 0; j < family.redundant.size(); ++j) {
        symbols[*spec.ordinal_of_index(family.redundant[j])] = coeffs[j];
    }
}

}  // namespace

std::uint64_t A2Code::capacity(unsigned r) { return 2 * family_size(r) - r; }

A2Code::A2Code(unsigned index_length, std::size_t message_length)
    : A2Code(build_family(index_length), message_length) {}

A2Code::A2Code(WxliFamily family, std::size_t message_length)
    : Codec(build_a2_spec(family, message_length)),
      family_(std::move(family)),
      solver_(family_.redundant) {}

Codeword A2Code::encode(std::span<const std::uint8_t> message) const {
    std::vector<std::uint8_t> symbols = place_message(message);
    solve_regular_redundant(*spec_, family_, solver_, symbols);
    // The adjust symbols zero their group value sums.
    const std::size_t o = *spec_->ordinal_of_kind(PositionKind::OddAdjust);
    const std::size_t e = *spec_->ordinal_of_kind(PositionKind::EvenAdjust);
    symbols[o] = static_cast<std::uint8_t>((3 - value_sum(*spec_, symbols, 1)) % 3);
    symbols[e] = static_cast<std::uint8_t>((3 - value_sum(*spec_, symbols, 2)) % 3);
    return Codeword(spec_, std::move(symbols));
}

A2Syndromes A2Code::syndromes(const Codeword& word) const {
    return A2Syndromes{value_sum(*spec_, word.symbols(), 1), value_sum(*spec_, word.symbols(), 2),
                       indexed_xor_sum(*spec_, word.symbols())};
}

DecodeResult A2Code::decode(const Codeword& received) const {
    const A2Syndromes s = syndromes(received);

    auto clean = [&] { return DecodeResult{DecodeOutcome{DecodeStatus::Clean, {}}, received}; };
    auto detected = [&] {
        return DecodeResult{DecodeOutcome{DecodeStatus::DetectedMultiple, {}}, received};
    };
    auto corrected = [&](std::size_t ordinal, std::uint8_t delta) {
        Codeword repaired = received;
        repaired.add_at(ordinal, static_cast<std::uint8_t>(3 - delta));
        return DecodeResult{
            DecodeOutcome{DecodeStatus::CorrectedSingle, {Correction{ordinal, delta}}},
            std::move(repaired)};
    };

    if (s.p1 != 0 && s.p2 != 0) return detected();  // one error per group at least

    if (s.p_all.is_zero()) {
        if (s.p1 == 0 && s.p2 == 0) return clean();
        // Only the group adjust symbols move a group sum without moving the
        // indexed sum.
        if (s.p1 != 0) return corrected(*spec_->ordinal_of_kind(PositionKind::OddAdjust), s.p1);
        return corrected(*spec_->ordinal_of_kind(PositionKind::EvenAdjust), s.p2);
    }

    if (s.p1 == 0 && s.p2 == 0) return detected();  // indexed sum moved, both groups intact

    // One group sum moved: a single error at index f would explain both,
    // since delta^2 == 1 (mod 3) makes f = delta * p_all.
    const std::uint8_t delta = s.p1 != 0 ? s.p1 : s.p2;
    const std::uint8_t group = s.p1 != 0 ? 1 : 2;
    const DigitVec locator = scalar_mul(delta, s.p_all);
    const auto ordinal = spec_->ordinal_of_index(locator);
    if (!ordinal || spec_->active(*ordinal).group != group) return detected();
    return corrected(*ordinal, delta);
}

std::uint64_t A2SparseCode::capacity(unsigned r) { return family_size(r) - r; }

A2SparseCode::A2SparseCode(unsigned index_length, std::size_t message_length, bool global_check)
    : A2SparseCode(build_family(index_length), message_length, global_check) {}

A2SparseCode::A2SparseCode(WxliFamily family, std::size_t message_length, bool global_check)
    : Codec(build_sparse_spec(family, message_length, global_check)),
      family_(std::move(family)),
      solver_(family_.redundant) {}

Codeword A2SparseCode::encode(std::span<const std::uint8_t> message) const {
    std::vector<std::uint8_t> symbols = place_message(message);
    solve_regular_redundant(*spec_, family_, solver_, symbols);
    if (spec_->global_sum_check()) {
        const std::size_t sum_pos = *spec_->ordinal_of_kind(PositionKind::GlobalSum);
        symbols[sum_pos] = static_cast<std::uint8_t>((3 - value_sum(*spec_, symbols)) % 3);
    }
    return Codeword(spec_, std::move(symbols));
}

DecodeResult A2SparseCode::decode(const Codeword& received) const {
    const DigitVec idx_sum = indexed_xor_sum(*spec_, received.symbols());

    auto detected = [&] {
        return DecodeResult{DecodeOutcome{DecodeStatus::DetectedMultiple, {}}, received};
    };
    auto corrected = [&](std::size_t ordinal, std::uint8_t delta) {
        Codeword repaired = received;
        repaired.add_at(ordinal, static_cast<std::uint8_t>(3 - delta));
        return DecodeResult{
            DecodeOutcome{DecodeStatus::CorrectedSingle, {Correction{ordinal, delta}}},
            std::move(repaired)};
    };

    if (spec_->global_sum_check()) {
        const std::uint8_t val_sum = value_sum(*spec_, received.symbols());
        if (idx_sum.is_zero() && val_sum == 0) {
            return DecodeResult{DecodeOutcome{DecodeStatus::Clean, {}}, received};
        }
        if (!idx_sum.is_zero()) {
            // A zero locator (val_sum == 0) is never an active index, so the
            // membership test also rejects it.
            const auto ordinal = spec_->ordinal_of_index(scalar_mul(val_sum, idx_sum));
            if (!ordinal) return detected();
            return corrected(*ordinal, val_sum);
        }
        // Indexed sum intact, value sum moved: the check symbol itself.
        return corrected(*spec_->ordinal_of_kind(PositionKind::GlobalSum), val_sum);
    }

    if (idx_sum.is_zero()) {
        return DecodeResult{DecodeOutcome{DecodeStatus::Clean, {}}, received};
    }
    // Without the value sum the magnitude comes from which of {s, 2s} is an
    // active 0/1 index; the two cases are mutually exclusive.
    if (auto ordinal = spec_->ordinal_of_index(idx_sum)) return corrected(*ordinal, 1);
    if (auto ordinal = spec_->ordinal_of_index(scalar_mul(2, idx_sum))) {
        return corrected(*ordinal, 2);
    }
    return detected();
}

}  // namespace qecc
