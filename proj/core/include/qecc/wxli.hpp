#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qecc/digit_vec.hpp"

namespace qecc {

/// Popcount band parameter n for the 0/1 index family of length r:
/// elements carry between n and 2n-1 one-digits.
unsigned band_parameter(unsigned r);

/// Cardinality f(r) of the constructed family: sum of C(r, i) for
/// i in [n, 2n-1].
std::uint64_t family_size(unsigned r);

/// The constructed 3-wise independent index family over length-r ternary
/// vectors: I1 holds the 0/1 vectors in the popcount band, I2 its digitwise
/// doubles, and redundant the ordered spanning subset R of I1.
struct WxliFamily {
    unsigned r = 0;
    unsigned band = 0;
    std::vector<DigitVec> i1;         // ascending by index value
    std::vector<DigitVec> i2;         // scalar_mul(2, .) of i1, same order
    std::vector<DigitVec> redundant;  // R_1..R_r

    std::size_t f() const { return i1.size(); }
};

WxliFamily build_family(unsigned r);

/// Ordered spanning redundant subset R_1..R_r of I1. Windows of consecutive
/// elementary vectors; two closed-form window families cover odd/large and
/// small/even lengths. The window formulas leave gaps at r = 3 (a window
/// would step past e_r) and at even r >= 8 (no window reaches e_r); both get
/// a substitute window that keeps membership, distinctness and spanning.
std::vector<DigitVec> redundant_indices(unsigned r);

/// One violating combination: distinct elements with coefficients in
/// [1, base) whose weighted xor sum is zero.
struct DependencyWitness {
    std::vector<std::pair<DigitVec, std::uint8_t>> terms;
};

struct IndependenceReport {
    bool independent = false;
    std::optional<DependencyWitness> witness;  // engaged iff not independent
};

/// Exhaustively certifies that no combination of up to k distinct elements
/// with nonzero coefficients sums to zero. Elements must be distinct and
/// share base and length.
IndependenceReport certify_kwise_independent(std::span<const DigitVec> elements, unsigned k);

/// Expresses targets as coefficient vectors over a spanning set: solves
/// sum_j c_j * basis_j == target digitwise mod p. Construction inverts the
/// basis matrix once; throws InternalError when the set does not span.
class SpanSolver {
public:
    explicit SpanSolver(const std::vector<DigitVec>& basis);

    std::vector<std::uint8_t> coefficients(const DigitVec& target) const;

private:
    std::uint32_t base_;
    std::size_t dim_;
    std::vector<std::uint8_t> inverse_;  // dim x dim, row-major
};

/// Coefficients of every elementary vector e_1..e_r over the family's
/// redundant set, solved mod 3. Row i-1 holds the coefficients of e_i.
std::vector<std::vector<std::uint8_t>> decompose_elementary(const WxliFamily& family);

}  // namespace qecc
