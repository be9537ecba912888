#pragma once

#include "qecc/code.hpp"

namespace qecc {

/// Ternary SEC-DED code keeping one index per additive-inverse pair: the
/// indices whose most significant nonzero digit is 1. Redundant symbols sit
/// at the powers of 3; message symbols fill the lowest remaining kept
/// indices and the unused tail is banished, so any message length up to
/// capacity(r) is supported with r + 0 extra checks beyond the digit sums.
class A1Code : public Codec {
public:
    A1Code(unsigned index_length, std::size_t message_length);

    /// Message capacity g(r) = (3^r - 1) / 2 - r.
    static std::uint64_t capacity(unsigned r);
    /// Smallest r whose capacity covers m.
    static unsigned choose_r(std::uint64_t m);

    Codeword encode(std::span<const std::uint8_t> message) const override;
    DecodeResult decode(const Codeword& received) const override;

    /// Index-weighted xor sum of the word; zero exactly on codewords.
    DigitVec syndrome(const Codeword& word) const;
};

}  // namespace qecc
