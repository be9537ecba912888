#pragma once

#include "qecc/code.hpp"

namespace qecc {

/// Syndromes of the digit-indexed SEC-DED code: one residue per index digit
/// (stored most significant first, so the vector equals the index-weighted
/// xor sum of the word) plus the global value sum. All zero on a codeword.
struct PrototypeSyndromes {
    DigitVec digit_sums;
    std::uint8_t global_sum = 0;

    bool all_zero() const { return global_sum == 0 && digit_sums.is_zero(); }
};

/// Digit-indexed SEC-DED code over a prime base p with block length p^r:
/// r digit checks plus one global sum, redundant symbols at position 0 and
/// the powers p^i. Corrects one symbol error with an explicit index locator
/// and detects (possibly miscorrecting) double errors.
class PrototypeCode : public Codec {
public:
    PrototypeCode(std::uint32_t base, unsigned index_length);

    Codeword encode(std::span<const std::uint8_t> message) const override;
    DecodeResult decode(const Codeword& received) const override;

    /// add_count, when given, receives the number of symbol additions
    /// performed: block_length * (r + 1).
    PrototypeSyndromes syndromes(const Codeword& word, std::uint64_t* add_count = nullptr) const;

    /// Weight-3 codeword for base 3: value 1 at u, u+(1..1), u+(2..2).
    /// Certifies that the design distance 3 is tight.
    Codeword weight3_codeword(const DigitVec& u) const;
};

}  // namespace qecc
