#pragma once

#include <istream>

#include "qecc/code.hpp"
#include "qecc/wxli.hpp"

namespace qecc {

/// Code built from any certified k-wise independent index set: distance
/// k + 1, bounded-distance decoding up to radius floor(k / 2) by searching
/// error patterns in increasing weight. Systematic encoding requires the
/// elementary vectors to be present in the set (they form the redundant
/// positions, serialized first); decoder-only instances accept any set.
class NwxliCode : public Codec {
public:
    /// index_set order is the declared message order. Certifies the claimed
    /// independence at construction and rejects the set with the violating
    /// combination in the message otherwise.
    NwxliCode(std::vector<DigitVec> index_set, unsigned certified_order,
              bool require_systematic = true);

    /// The [11,6,5] ternary Golay instance: five elementary redundant
    /// positions plus six certified 4-wise independent message indices.
    static NwxliCode golay();

    unsigned certified_order() const { return certified_order_; }
    unsigned radius() const { return certified_order_ / 2; }
    bool systematic() const { return systematic_; }

    Codeword encode(std::span<const std::uint8_t> message) const override;
    DecodeResult decode(const Codeword& received) const override;

    /// Like decode but keeps searching after the first hit and reports an
    /// InternalError on a second pattern of the same weight; the bounded
    /// radius makes such a collision impossible for a certified set.
    DecodeResult decode_checked(const Codeword& received) const;

    DigitVec syndrome(const Codeword& word) const;

private:
    DecodeResult run_decode(const Codeword& received, bool check_unique) const;

    unsigned certified_order_;
    bool systematic_;
};

/// Reads one digit vector per line (base 3). The first r lines, r being the
/// vector length, must together form the full elementary set; the remaining
/// lines are the message indices in declared order.
std::vector<DigitVec> load_index_set(std::istream& in);

}  // namespace qecc
