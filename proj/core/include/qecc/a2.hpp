#pragma once

#include "qecc/code.hpp"
#include "qecc/wxli.hpp"

namespace qecc {

/// The three checks of the full distance-4 code: value sums over the two
/// index groups (the adjust symbols O and E count toward their group) and
/// the index-weighted xor sum, to which O and E contribute nothing.
struct A2Syndromes {
    std::uint8_t p1 = 0;
    std::uint8_t p2 = 0;
    DigitVec p_all;

    bool all_zero() const { return p1 == 0 && p2 == 0 && p_all.is_zero(); }
};

/// Distance-4 SEC-TED code over the 3-wise independent index family:
/// positions at I1 (0/1 indices) and I2 (their doubles) plus the two group
/// adjust symbols O and E. Corrects any single error and detects all double
/// errors; shorter messages banish the highest I2 indices.
class A2Code : public Codec {
public:
    /// Full-length capacity is 2 f(r) - r; message lengths down to
    /// f(r) - r shorten the I2 side.
    A2Code(unsigned index_length, std::size_t message_length);

    static std::uint64_t capacity(unsigned r);

    Codeword encode(std::span<const std::uint8_t> message) const override;
    DecodeResult decode(const Codeword& received) const override;

    A2Syndromes syndromes(const Codeword& word) const;

    const WxliFamily& family() const { return family_; }

private:
    A2Code(WxliFamily family, std::size_t message_length);

    WxliFamily family_;
    SpanSolver solver_;
};

/// The I1-only variant: same distance 4 from the same independence
/// property, r checks, higher rate. With the optional global value-sum
/// symbol the decoder also recovers the error magnitude directly and can
/// correct an error on the check symbol itself.
class A2SparseCode : public Codec {
public:
    A2SparseCode(unsigned index_length, std::size_t message_length, bool global_check = false);

    static std::uint64_t capacity(unsigned r);

    Codeword encode(std::span<const std::uint8_t> message) const override;
    DecodeResult decode(const Codeword& received) const override;

    const WxliFamily& family() const { return family_; }

private:
    A2SparseCode(WxliFamily family, std::size_t message_length, bool global_check);

    WxliFamily family_;
    SpanSolver solver_;
};

}  // namespace qecc
