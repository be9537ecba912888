#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qecc/errors.hpp"

namespace qecc {

bool is_prime(std::uint32_t n);

/// x^e with overflow detection; throws UsageError when the result would not
/// fit in 64 bits.
std::uint64_t checked_pow(std::uint64_t x, unsigned e);

/// Multiplicative inverse of a modulo prime p, a in [1, p).
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

/// The unique l in [1, p) with (l * z) mod p == y, for prime p and
/// z, y in [1, p). Existence and uniqueness hold exactly because p is prime.
std::uint32_t solve_unique(std::uint32_t p, std::uint32_t z, std::uint32_t y);

/// Fixed-length vector of base-p digits, most significant digit first.
/// Doubles as a position index (via its base-p value), a syndrome value,
/// and an element of the carry-free addition group. The base must be prime;
/// this is validated at construction. Immutable.
class DigitVec {
public:
    DigitVec(std::uint32_t base, std::vector<std::uint8_t> digits);

    static DigitVec zero(std::uint32_t base, std::size_t length);

    /// Elementary vector e_i: single 1 digit at the i-th position counted
    /// from the least significant end, i in [1, length].
    static DigitVec elementary(std::uint32_t base, std::size_t length, std::size_t i);

    static DigitVec from_index(std::uint64_t index, std::uint32_t base, std::size_t length);

    /// Parses contiguous digit characters, most significant first.
    /// Digits 0-9 then a-z cover bases up to 36.
    static DigitVec parse(std::string_view text, std::uint32_t base);

    std::uint32_t base() const { return base_; }
    std::size_t length() const { return digits_.size(); }

    /// i-th digit, most significant first.
    std::uint8_t digit(std::size_t i) const { return digits_[i]; }
    /// i-th digit counted from the least significant end (0-based).
    std::uint8_t lsd(std::size_t i) const { return digits_[digits_.size() - 1 - i]; }
    std::span<const std::uint8_t> digits() const { return digits_; }

    std::uint64_t to_index() const;
    std::string str() const;

    bool is_zero() const;
    /// Value of the most significant nonzero digit; 0 for the zero vector.
    std::uint8_t leading_nonzero() const;
    /// Number of nonzero digits.
    std::size_t weight() const;

    friend bool operator==(const DigitVec&, const DigitVec&) = default;
    /// Orders by length, then lexicographically by digits (equals numeric
    /// order for equal lengths).
    std::strong_ordering operator<=>(const DigitVec& other) const;

private:
    std::uint32_t base_;
    std::vector<std::uint8_t> digits_;
};

/// Digitwise sum mod p, no carries. Operands must share base and length.
DigitVec xor_add(const DigitVec& a, const DigitVec& b);

/// a plus the additive inverse of b.
DigitVec xor_sub(const DigitVec& a, const DigitVec& b);

/// Digitwise (k * digit) mod p; equals a added to itself k times.
DigitVec scalar_mul(std::uint64_t k, const DigitVec& a);

/// The vector b with xor_add(a, b) == 0.
DigitVec inverse(const DigitVec& a);

}  // namespace qecc
