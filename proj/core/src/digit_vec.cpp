#include "qecc/digit_vec.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace qecc {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::uint32_t d = 3; d <= n / d; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::uint64_t checked_pow(std::uint64_t x, unsigned e) {
    std::uint64_t result = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (x != 0 && result > std::numeric_limits<std::uint64_t>::max() / x) {
            throw UsageError("checked_pow: result exceeds 64 bits");
        }
        result *= x;
    }
    return result;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    if (!is_prime(p)) throw UsageError("mod_inverse: modulus must be prime");
    if (a == 0 || a >= p) throw UsageError("mod_inverse: value out of range");
    // Extended Euclid on (a, p).
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

std::uint32_t solve_unique(std::uint32_t p, std::uint32_t z, std::uint32_t y) {
    if (!is_prime(p)) throw UsageError("solve_unique: p must be prime");
    if (z == 0 || z >= p || y == 0 || y >= p) {
        throw std::domain_error("solve_unique: z and y must lie in [1, p)");
    }
    return static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(y) * mod_inverse(z, p)) % p);
}

DigitVec::DigitVec(std::uint32_t base, std::vector<std::uint8_t> digits)
    : base_(base), digits_(std::move(digits)) {
    if (!is_prime(base_)) throw UsageError("DigitVec: base must be prime");
    if (digits_.empty()) throw UsageError("DigitVec: length must be at least 1");
    for (std::uint8_t d : digits_) {
        if (d >= base_) throw UsageError("DigitVec: digit out of range for base");
    }
}

DigitVec DigitVec::zero(std::uint32_t base, std::size_t length) {
    return DigitVec(base, std::vector<std::uint8_t>(length, 0));
}

DigitVec DigitVec::elementary(std::uint32_t base, std::size_t length, std::size_t i) {
    if (i < 1 || i > length) throw UsageError("DigitVec::elementary: index out of range");
    std::vector<std::uint8_t> d(length, 0);
    d[length - i] = 1;
    return DigitVec(base, std::move(d));
}

DigitVec DigitVec::from_index(std::uint64_t index, std::uint32_t base, std::size_t length) {
    if (index >= checked_pow(base, static_cast<unsigned>(length))) {
        throw UsageError("DigitVec::from_index: index out of range");
    }
    std::vector<std::uint8_t> d(length, 0);
    for (std::size_t i = 0; i < length; ++i) {
        d[length - 1 - i] = static_cast<std::uint8_t>(index % base);
        index /= base;
    }
    return DigitVec(base, std::move(d));
}

namespace {

constexpr char digit_char(std::uint8_t v) {
    return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + (v - 10));
}

int digit_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return 10 + (c - 'a');
    return -1;
}

}  // namespace

DigitVec DigitVec::parse(std::string_view text, std::uint32_t base) {
    if (text.empty()) throw DataError("DigitVec::parse: empty text");
    std::vector<std::uint8_t> d;
    d.reserve(text.size());
    for (char c : text) {
        const int v = digit_value(c);
        if (v < 0 || static_cast<std::uint32_t>(v) >= base) {
            throw DataError(std::string("DigitVec::parse: invalid digit '") + c + "'");
        }
        d.push_back(static_cast<std::uint8_t>(v));
    }
    return DigitVec(base, std::move(d));
}

std::uint64_t DigitVec::to_index() const {
    std::uint64_t v = 0;
    for (std::uint8_t d : digits_) v = v * base_ + d;
    return v;
}

std::string DigitVec::str() const {
    std::string s;
    s.reserve(digits_.size());
    for (std::uint8_t d : digits_) s.push_back(digit_char(d));
    return s;
}

bool DigitVec::is_zero() const {
    return std::all_of(digits_.begin(), digits_.end(), [](std::uint8_t d) { return d == 0; });
}

std::uint8_t DigitVec::leading_nonzero() const {
    for (std::uint8_t d : digits_) {
        if (d != 0) return d;
    }
    return 0;
}

std::size_t DigitVec::weight() const {
    return static_cast<std::size_t>(
        std::count_if(digits_.begin(), digits_.end(), [](std::uint8_t d) { return d != 0; }));
}

std::strong_ordering DigitVec::operator<=>(const DigitVec& other) const {
    if (auto c = digits_.size() <=> other.digits_.size(); c != 0) return c;
    if (auto c = base_ <=> other.base_; c != 0) return c;
    return std::lexicographical_compare_three_way(digits_.begin(), digits_.end(),
                                                  other.digits_.begin(), other.digits_.end());
}

namespace {

void require_compatible(const DigitVec& a, const DigitVec& b, const char* op) {
    if (a.base() != b.base() || a.length() != b.length()) {
        throw UsageError(std::string(op) + ": operands must share base and length");
    }
}

}  // namespace

DigitVec xor_add(const DigitVec& a, const DigitVec& b) {
    require_compatible(a, b, "xor_add");
    std::vector<std::uint8_t> d(a.length());
    for (std::size_t i = 0; i < a.length(); ++i) {
        d[i] = static_cast<std::uint8_t>((a.digit(i) + b.digit(i)) % a.base());
    }
    return DigitVec(a.base(), std::move(d));
}

DigitVec xor_sub(const DigitVec& a, const DigitVec& b) {
    require_compatible(a, b, "xor_sub");
    std::vector<std::uint8_t> d(a.length());
    for (std::size_t i = 0; i < a.length(); ++i) {
        d[i] = static_cast<std::uint8_t>((a.digit(i) + a.base() - b.digit(i)) % a.base());
    }
    return DigitVec(a.base(), std::move(d));
}

DigitVec scalar_mul(std::uint64_t k, const DigitVec& a) {
    const std::uint64_t kk = k % a.base();
    std::vector<std::uint8_t> d(a.length());
    for (std::size_t i = 0; i < a.length(); ++i) {
        d[i] = static_cast<std::uint8_t>((kk * a.digit(i)) % a.base());
    }
    return DigitVec(a.base(), std::move(d));
}

DigitVec inverse(const DigitVec& a) {
    std::vector<std::uint8_t> d(a.length());
    for (std::size_t i = 0; i < a.length(); ++i) {
        d[i] = static_cast<std::uint8_t>((a.base() - a.digit(i)) % a.base());
    }
    return DigitVec(a.base(), std::move(d));
}

}  // namespace qecc
