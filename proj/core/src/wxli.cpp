#include "qecc/wxli.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "qecc/errors.hpp"

namespace qecc {

unsigned band_parameter(unsigned r) {
    if (r < 3) throw UsageError("band_parameter: r must be at least 3");
    if (r == 3) return 2;
    if (r <= 7) return r / 2;
    return (r + 1) / 2 - 1;
}

namespace {

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
    }
    return result;
}

/// Sum of consecutive elementary vectors e_lo..e_hi (1-based from the least
/// significant digit).
DigitVec elementary_window(unsigned r, unsigned lo, unsigned hi) {
    if (lo < 1 || hi > r || lo > hi) throw InternalError("elementary_window: bad range");
    std::vector<std::uint8_t> digits(r, 0);
    for (unsigned i = lo; i <= hi; ++i) digits[r - i] = 1;
    return DigitVec(3, std::move(digits));
}

}  // namespace

std::uint64_t family_size(unsigned r) {
    const unsigned n = band_parameter(r);
    std::uint64_t f = 0;
    for (unsigned i = n; i <= 2 * n - 1; ++i) f += binomial(r, i);
    return f;
}

WxliFamily build_family(unsigned r) {
    const unsigned n = band_parameter(r);
    WxliFamily family;
    family.r = r;
    family.band = n;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
        const unsigned ones = static_cast<unsigned>(std::popcount(mask));
        if (ones < n || ones > 2 * n - 1) continue;
        std::vector<std::uint8_t> digits(r, 0);
        for (unsigned i = 0; i < r; ++i) {
            if (mask & (std::uint64_t{1} << (r - 1 - i))) digits[i] = 1;
        }
        family.i1.emplace_back(3, std::move(digits));
    }
    // Masks were enumerated in increasing binary order, which for 0/1 digit
    // vectors equals increasing base-3 index order.
    family.i2.reserve(family.i1.size());
    for (const DigitVec& v : family.i1) family.i2.push_back(scalar_mul(2, v));
    family.redundant = redundant_indices(r);
    return family;
}

std::vector<DigitVec> redundant_indices(unsigned r) {
    const unsigned n = band_parameter(r);
    if (r == 3) {
        // The odd-case window for j = 3 would step past e_3; this fixed set
        // keeps membership and spanning.
        return {elementary_window(3, 1, 2), elementary_window(3, 2, 3),
                elementary_window(3, 1, 3)};
    }
    const bool small_even = r <= 7 && r % 2 == 0;
    std::vector<DigitVec> result;
    result.reserve(r);
    for (unsigned j = 1; j <= r; ++j) {
        unsigned lo, hi;
        if (small_even) {
            lo = (j + 1) / 2;
            hi = n + j / 2;
        } else {
            lo = 1 + j / 2;
            hi = n + (j + 1) / 2;
        }
        if (j == r && hi < r) {
            // At even r >= 8 no window reaches e_r, so the set could not
            // span; widen the last window by one digit.
            hi = r;
        }
        result.push_back(elementary_window(r, lo, hi));
    }
    return result;
}

IndependenceReport certify_kwise_independent(std::span<const DigitVec> elements, unsigned k) {
    if (k < 1) throw UsageError("certify_kwise_independent: order must be at least 1");
    if (elements.empty()) return IndependenceReport{true, std::nullopt};
    const std::uint32_t p = elements.front().base();
    std::unordered_map<std::uint64_t, std::size_t> lookup;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i].base() != p || elements[i].length() != elements.front().length()) {
            throw UsageError("certify_kwise_independent: mixed base or length");
        }
        if (!lookup.emplace(elements[i].to_index(), i).second) {
            throw UsageError("certify_kwise_independent: elements must be distinct");
        }
    }

    // Size-1 combinations vanish only for the zero vector.
    for (const DigitVec& v : elements) {
        if (v.is_zero()) {
            DependencyWitness w;
            w.terms.emplace_back(v, 1);
            return IndependenceReport{false, std::move(w)};
        }
    }

    // For sizes >= 2: enumerate the first s-1 terms over ordered element
    // positions, then look the closing term up by value. Requiring the
    // closing position to exceed the last chosen one visits every subset
    // exactly once; smaller dependencies were ruled out by earlier passes.
    std::vector<std::pair<std::size_t, std::uint8_t>> chosen;
    for (unsigned s = 2; s <= k && s <= elements.size(); ++s) {
        std::optional<DependencyWitness> found;
        auto extend = [&](auto&& self, std::size_t first_free, const DigitVec& partial) -> void {
            if (found) return;
            if (chosen.size() == s - 1) {
                for (std::uint32_t c = 1; c < p && !found; ++c) {
                    // Need c * x == inverse(partial).
                    const DigitVec x = scalar_mul(mod_inverse(c, p), inverse(partial));
                    auto it = lookup.find(x.to_index());
                    if (it == lookup.end() || it->second <= chosen.back().first) continue;
                    DependencyWitness w;
                    for (auto [idx, coeff] : chosen) w.terms.emplace_back(elements[idx], coeff);
                    w.terms.emplace_back(elements[it->second], static_cast<std::uint8_t>(c));
                    found = std::move(w);
                }
                return;
            }
            for (std::size_t i = first_free; i + (s - 1 - chosen.size()) <= elements.size(); ++i) {
                for (std::uint32_t c = 1; c < p; ++c) {
                    chosen.emplace_back(i, static_cast<std::uint8_t>(c));
                    self(self, i + 1, xor_add(partial, scalar_mul(c, elements[i])));
                    chosen.pop_back();
                    if (found) return;
                }
            }
        };
        extend(extend, 0, DigitVec::zero(p, elements.front().length()));
        if (found) return IndependenceReport{false, std::move(found)};
    }
    return IndependenceReport{true, std::nullopt};
}

SpanSolver::SpanSolver(const std::vector<DigitVec>& basis) {
    if (basis.empty()) throw UsageError("SpanSolver: empty basis");
    base_ = basis.front().base();
    dim_ = basis.front().length();
    if (basis.size() != dim_) throw InternalError("SpanSolver: basis size must equal dimension");

    // Gauss-Jordan on [M | I] where column j of M is basis[j], digits read
    // most significant first.
    std::vector<std::vector<std::uint32_t>> m(dim_, std::vector<std::uint32_t>(2 * dim_, 0));
    for (std::size_t j = 0; j < dim_; ++j) {
        if (basis[j].base() != base_ || basis[j].length() != dim_) {
            throw UsageError("SpanSolver: mixed base or length");
        }
        for (std::size_t i = 0; i < dim_; ++i) m[i][j] = basis[j].digit(i);
    }
    for (std::size_t i = 0; i < dim_; ++i) m[i][dim_ + i] = 1;

    for (std::size_t col = 0; col < dim_; ++col) {
        std::size_t pivot = col;
        while (pivot < dim_ && m[pivot][col] == 0) ++pivot;
        if (pivot == dim_) throw InternalError("SpanSolver: set does not span");
        std::swap(m[col], m[pivot]);
        const std::uint32_t inv = mod_inverse(m[col][col], base_);
        for (auto& v : m[col]) v = v * inv % base_;
        for (std::size_t row = 0; row < dim_; ++row) {
            if (row == col || m[row][col] == 0) continue;
            const std::uint32_t factor = m[row][col];
            for (std::size_t c = 0; c < 2 * dim_; ++c) {
                m[row][c] = (m[row][c] + (base_ - factor) * m[col][c]) % base_;
            }
        }
    }

    inverse_.resize(dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            inverse_[i * dim_ + j] = static_cast<std::uint8_t>(m[i][dim_ + j]);
        }
    }
}

std::vector<std::uint8_t> SpanSolver::coefficients(const DigitVec& target) const {
    if (target.base() != base_ || target.length() != dim_) {
        throw UsageError("SpanSolver: target has wrong base or length");
    }
    std::vector<std::uint8_t> c(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
        std::uint32_t acc = 0;
        for (std::size_t j = 0; j < dim_; ++j) {
            acc += inverse_[i * dim_ + j] * target.digit(j);
        }
        c[i] = static_cast<std::uint8_t>(acc % base_);
    }
    return c;
}

std::vector<std::vector<std::uint8_t>> decompose_elementary(const WxliFamily& family) {
    const SpanSolver solver(family.redundant);
    std::vector<std::vector<std::uint8_t>> rows;
    rows.reserve(family.r);
    for (unsigned i = 1; i <= family.r; ++i) {
        rows.push_back(solver.coefficients(DigitVec::elementary(3, family.r, i)));
    }
    return rows;
}

}  // namespace qecc
