#include "qecc/nwxli.hpp"

#include <algorithm>
#include <sstream>

namespace qecc {

namespace {

std::shared_ptr<const CodeSpec> build_nwxli_spec(const std::vector<DigitVec>& index_set,
                                                 unsigned certified_order,
                                                 bool require_systematic, bool& systematic_out) {
    if (index_set.empty()) throw UsageError("nwxli: empty index set");
    const std::uint32_t base = index_set.front().base();
    const unsigned r = static_cast<unsigned>(index_set.front().length());
    if (certified_order < 1) throw UsageError("nwxli: independence order must be at least 1");

    const IndependenceReport report = certify_kwise_independent(index_set, certified_order);
    if (!report.independent) {
        std::ostringstream os;
        os << "nwxli: index set is not " << certified_order << "-wise independent:";
        for (const auto& [v, c] : report.witness->terms) {
            os << " " << static_cast<unsigned>(c) << "*" << v.str();
        }
        throw UsageError(os.str());
    }

    // Split off the elementary vectors; systematic encoding solves the
    // redundant values digit by digit through them.
    std::vector<DigitVec> elementary;
    std::vector<DigitVec> message;
    for (const DigitVec& v : index_set) {
        if (v.weight() == 1 && v.leading_nonzero() == 1) {
            elementary.push_back(v);
        } else {
            message.push_back(v);
        }
    }
    systematic_out = elementary.size() == r;
    if (require_systematic && !systematic_out) {
        throw UsageError("nwxli: systematic construction needs all elementary vectors in the set");
    }
    std::sort(elementary.begin(), elementary.end());

    std::vector<Position> positions;
    positions.reserve(index_set.size());
    for (DigitVec& v : elementary) {
        positions.push_back(Position{PositionKind::Indexed, std::move(v), PositionRole::Redundant, 0});
    }
    for (DigitVec& v : message) {
        positions.push_back(Position{PositionKind::Indexed, std::move(v), PositionRole::Message, 0});
    }
    const unsigned distance = certified_order + 1;
    return std::make_shared<CodeSpec>(CodeFamily::NWxli, base, r, distance, std::move(positions),
                                      /*global_sum_check=*/false, /*group_sum_checks=*/false);
}

}  // namespace

NwxliCode::NwxliCode(std::vector<DigitVec> index_set, unsigned certified_order,
                     bool require_systematic)
    : Codec(nullptr), certified_order_(certified_order), systematic_(false) {
    spec_ = build_nwxli_spec(index_set, certified_order, require_systematic, systematic_);
}

NwxliCode NwxliCode::golay() {
    const char* indices[] = {"00001", "00010", "00100", "01000", "10000", "01122",
                             "10212", "12021", "12102", "22110", "22222"};
    std::vector<DigitVec> set;
    for (const char* s : indices) set.push_back(DigitVec::parse(s, 3));
    return NwxliCode(std::move(set), 4);
}

Codeword NwxliCode::encode(std::span<const std::uint8_t> message) const {
    if (!systematic_) {
        throw UsageError("nwxli: this instance lacks the elementary vectors; decode only");
    }
    std::vector<std::uint8_t> symbols = place_message(message);
    const DigitVec target = inverse(indexed_xor_sum(*spec_, symbols));
    for (unsigned j = 1; j <= spec_->index_length(); ++j) {
        const auto ordinal = spec_->ordinal_of_index(
            DigitVec::elementary(spec_->base(), spec_->index_length(), j));
        symbols[*ordinal] = target.lsd(j - 1);
    }
    return Codeword(spec_, std::move(symbols));
}

DigitVec NwxliCode::syndrome(const Codeword& word) const {
    return indexed_xor_sum(*spec_, word.symbols());
}

DecodeResult NwxliCode::decode(const Codeword& received) const {
    return run_decode(received, /*check_unique=*/false);
}

DecodeResult NwxliCode::decode_checked(const Codeword& received) const {
    return run_decode(received, /*check_unique=*/true);
}

DecodeResult NwxliCode::run_decode(const Codeword& received, bool check_unique) const {
    const DigitVec s = syndrome(received);
    if (s.is_zero()) {
        return DecodeResult{DecodeOutcome{DecodeStatus::Clean, {}}, received};
    }

    const std::uint32_t p = spec_->base();
    const std::size_t n = received.size();

    // Search error patterns (positions with nonzero magnitudes) in
    // increasing weight; within the bounded radius any match is unique, so
    // the first hit decides.
    std::optional<std::vector<Correction>> match;
    std::vector<Correction> chosen;
    for (unsigned w = 1; w <= radius() && !match; ++w) {
        auto extend = [&](auto&& self, std::size_t first_free, const DigitVec& remainder) -> void {
            if (match && !check_unique) return;
            if (chosen.size() == w - 1) {
                // Close with one looked-up term: delta * index == remainder.
                for (std::uint32_t d = 1; d < p; ++d) {
                    const DigitVec index = scalar_mul(mod_inverse(d, p), remainder);
                    const auto ordinal = spec_->ordinal_of_index(index);
                    if (!ordinal) continue;
                    if (!chosen.empty() && *ordinal <= chosen.back().position) continue;
                    std::vector<Correction> full = chosen;
                    full.push_back(Correction{*ordinal, static_cast<std::uint8_t>(d)});
                    if (match) {
                        throw InternalError("nwxli: ambiguous decode within radius");
                    }
                    match = std::move(full);
                    if (!check_unique) return;
                }
                return;
            }
            for (std::size_t i = first_free; i + (w - 1 - chosen.size()) < n; ++i) {
                const Position& pos = spec_->active(i);
                for (std::uint32_t d = 1; d < p; ++d) {
                    chosen.push_back(Correction{i, static_cast<std::uint8_t>(d)});
                    self(self, i + 1, xor_sub(remainder, scalar_mul(d, *pos.index)));
                    chosen.pop_back();
                    if (match && !check_unique) return;
                }
            }
        };
        extend(extend, 0, s);
    }

    if (!match) {
        return DecodeResult{DecodeOutcome{DecodeStatus::DetectedMultiple, {}}, received};
    }
    Codeword repaired = received;
    for (const Correction& c : *match) {
        repaired.add_at(c.position, static_cast<std::uint8_t>(p - c.delta));
    }
    return DecodeResult{DecodeOutcome{DecodeStatus::CorrectedMulti, *match}, std::move(repaired)};
}

std::vector<DigitVec> load_index_set(std::istream& in) {
    std::vector<DigitVec> set;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            set.push_back(DigitVec::parse(line, 3));
        } catch (const DataError& e) {
            std::ostringstream os;
            os << "index set line " << line_no << ": " << e.what();
            throw DataError(os.str());
        }
        if (set.back().length() != set.front().length()) {
            std::ostringstream os;
            os << "index set line " << line_no << ": mixed vector lengths";
            throw DataError(os.str());
        }
    }
    if (set.empty()) throw DataError("index set: no vectors");
    const std::size_t r = set.front().length();
    if (set.size() < r) throw DataError("index set: fewer vectors than the index length");
    std::vector<bool> seen(r + 1, false);
    for (std::size_t i = 0; i < r; ++i) {
        const DigitVec& v = set[i];
        if (v.weight() != 1 || v.leading_nonzero() != 1) {
            std::ostringstream os;
            os << "index set vector " << i + 1 << ": the first " << r
               << " vectors must be elementary";
            throw DataError(os.str());
        }
        for (std::size_t j = 1; j <= r; ++j) {
            if (v.lsd(j - 1) == 1) {
                if (seen[j]) throw DataError("index set: duplicate elementary vector");
                seen[j] = true;
            }
        }
    }
    return set;
}

}  // namespace qecc
