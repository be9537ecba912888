#include "qecc/code.hpp"

#include <sstream>

namespace qecc {

std::string_view family_name(CodeFamily f) {
    switch (f) {
        case CodeFamily::Prototype: return "prototype";
        case CodeFamily::A1: return "a1";
        case CodeFamily::A2: return "a2";
        case CodeFamily::A2Sparse: return "a2sparse";
        case CodeFamily::NWxli: return "nwxli";
    }
    return "?";
}

std::string_view role_name(PositionRole r) {
    switch (r) {
        case PositionRole::Message: return "message";
        case PositionRole::Redundant: return "redundant";
        case PositionRole::Special: return "special";
        case PositionRole::Banished: return "banished";
    }
    return "?";
}

std::string_view status_name(DecodeStatus s) {
    switch (s) {
        case DecodeStatus::Clean: return "CLEAN";
        case DecodeStatus::CorrectedSingle: return "CORRECTED";
        case DecodeStatus::CorrectedMulti: return "CORRECTED";
        case DecodeStatus::DetectedMultiple: return "MULTI";
    }
    return "?";
}

CodeSpec::CodeSpec(CodeFamily family, std::uint32_t base, unsigned index_length,
                   unsigned design_distance, std::vector<Position> positions,
                   bool global_sum_check, bool group_sum_checks)
    : family_(family),
      base_(base),
      index_length_(index_length),
      design_distance_(design_distance),
      global_sum_check_(global_sum_check),
      group_sum_checks_(group_sum_checks),
      positions_(std::move(positions)) {
    if (!is_prime(base_)) throw UsageError("CodeSpec: base must be prime");
    for (std::size_t i = 0; i < positions_.size(); ++i) {
        const Position& pos = positions_[i];
        if ((pos.kind == PositionKind::Indexed) != pos.index.has_value()) {
            throw InternalError("CodeSpec: index must be present exactly on indexed positions");
        }
        if (pos.index && (pos.index->base() != base_ || pos.index->length() != index_length_)) {
            throw InternalError("CodeSpec: index base/length mismatch");
        }
        if (pos.role == PositionRole::Banished) continue;
        if (pos.role == PositionRole::Message) ++message_count_;
        if (pos.index) {
            auto [it, inserted] = index_to_ordinal_.emplace(pos.index->to_index(), active_.size());
            if (!inserted) throw InternalError("CodeSpec: duplicate position index");
        }
        active_.push_back(i);
    }
}

std::optional<std::size_t> CodeSpec::ordinal_of_index(const DigitVec& index) const {
    auto it = index_to_ordinal_.find(index.to_index());
    if (it == index_to_ordinal_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> CodeSpec::ordinal_of_kind(PositionKind kind) const {
    for (std::size_t i = 0; i < active_.size(); ++i) {
        if (positions_[active_[i]].kind == kind) return i;
    }
    return std::nullopt;
}

std::string CodeSpec::describe_position(std::size_t ordinal) const {
    const Position& pos = active(ordinal);
    switch (pos.kind) {
        case PositionKind::Indexed: return pos.index->str();
        case PositionKind::OddAdjust: return "O";
        case PositionKind::EvenAdjust: return "E";
        case PositionKind::GlobalSum: return "sum";
    }
    return "?";
}

std::string CodeSpec::id() const {
    std::ostringstream os;
    os << family_name(family_) << "[";
    if (family_ == CodeFamily::Prototype) os << "p=" << base_ << ",";
    os << "r=" << index_length_;
    if (family_ != CodeFamily::Prototype && family_ != CodeFamily::NWxli) {
        os << ",m=" << message_length();
    }
    if (family_ == CodeFamily::NWxli) os << ",n=" << block_length();
    if (family_ == CodeFamily::A2Sparse && global_sum_check_) os << ",sum";
    os << "]";
    return os.str();
}

Codeword::Codeword(std::shared_ptr<const CodeSpec> spec, std::vector<std::uint8_t> symbols)
    : spec_(std::move(spec)), symbols_(std::move(symbols)) {
    if (!spec_) throw UsageError("Codeword: null spec");
    if (symbols_.size() != spec_->block_length()) {
        throw UsageError("Codeword: symbol count must equal block length");
    }
    for (std::uint8_t s : symbols_) {
        if (s >= spec_->base()) throw UsageError("Codeword: symbol out of range");
    }
}

void Codeword::set_symbol(std::size_t i, std::uint8_t value) {
    if (value >= spec_->base()) throw UsageError("Codeword: symbol out of range");
    symbols_[i] = value;
}

void Codeword::add_at(std::size_t i, std::uint8_t delta) {
    symbols_[i] = static_cast<std::uint8_t>((symbols_[i] + delta) % spec_->base());
}

std::string serialize(const Codeword& word) {
    DigitVec digits(word.spec().base(),
                    std::vector<std::uint8_t>(word.symbols().begin(), word.symbols().end()));
    return digits.str();
}

Codeword parse_word(std::shared_ptr<const CodeSpec> spec, std::string_view line) {
    if (!spec) throw UsageError("parse_word: null spec");
    if (line.size() != spec->block_length()) {
        std::ostringstream os;
        os << "parse_word: expected " << spec->block_length() << " symbols, got " << line.size();
        throw DataError(os.str());
    }
    DigitVec digits = DigitVec::parse(line, spec->base());
    return Codeword(std::move(spec),
                    std::vector<std::uint8_t>(digits.digits().begin(), digits.digits().end()));
}

std::vector<std::uint8_t> Codec::extract_message(const Codeword& word) const {
    std::vector<std::uint8_t> message;
    message.reserve(spec_->message_length());
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (spec_->active(i).role == PositionRole::Message) message.push_back(word[i]);
    }
    return message;
}

std::vector<std::uint8_t> Codec::place_message(std::span<const std::uint8_t> message) const {
    if (message.size() != spec_->message_length()) {
        std::ostringstream os;
        os << "encode: message length must be " << spec_->message_length() << ", got "
           << message.size();
        throw UsageError(os.str());
    }
    std::vector<std::uint8_t> symbols(spec_->block_length(), 0);
    std::size_t next = 0;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (spec_->active(i).role != PositionRole::Message) continue;
        if (message[next] >= spec_->base()) throw UsageError("encode: message digit out of range");
        symbols[i] = message[next++];
    }
    return symbols;
}

DigitVec indexed_xor_sum(const CodeSpec& spec, std::span<const std::uint8_t> symbols) {
    const std::uint32_t p = spec.base();
    std::vector<std::uint64_t> acc(spec.index_length(), 0);
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        const Position& pos = spec.active(i);
        if (pos.kind != PositionKind::Indexed || symbols[i] == 0) continue;
        const DigitVec& index = *pos.index;
        for (std::size_t j = 0; j < acc.size(); ++j) {
            acc[j] += static_cast<std::uint64_t>(symbols[i]) * index.digit(j);
        }
    }
    std::vector<std::uint8_t> digits(acc.size());
    for (std::size_t j = 0; j < acc.size(); ++j) {
        digits[j] = static_cast<std::uint8_t>(acc[j] % p);
    }
    return DigitVec(p, std::move(digits));
}

std::uint8_t value_sum(const CodeSpec& spec, std::span<const std::uint8_t> symbols,
                       std::uint8_t group) {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (group != 0 && spec.active(i).group != group) continue;
        sum += symbols[i];
    }
    return static_cast<std::uint8_t>(sum % spec.base());
}

}  // namespace qecc
