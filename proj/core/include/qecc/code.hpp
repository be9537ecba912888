#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "qecc/digit_vec.hpp"
#include "qecc/errors.hpp"

namespace qecc {

enum class CodeFamily : std::uint8_t { Prototype, A1, A2, A2Sparse, NWxli };

std::string_view family_name(CodeFamily f);

enum class PositionRole : std::uint8_t { Message, Redundant, Special, Banished };

std::string_view role_name(PositionRole r);

/// What a position is. Most positions carry a digit-vector index that feeds
/// the index-weighted checks; the adjust/sum positions carry no index weight
/// and only participate in plain value sums.
enum class PositionKind : std::uint8_t { Indexed, OddAdjust, EvenAdjust, GlobalSum };

struct Position {
    PositionKind kind = PositionKind::Indexed;
    std::optional<DigitVec> index;  // engaged iff kind == Indexed
    PositionRole role = PositionRole::Message;
    std::uint8_t group = 0;  // 0 = none, 1/2 = value-sum group membership
};

/// Full description of one concrete code instance: alphabet, index length,
/// ordered position table (the serialization order, banished entries kept in
/// place but never serialized) and which check rows apply. Built by the
/// codec constructors; immutable afterwards.
class CodeSpec {
public:
    CodeSpec(CodeFamily family, std::uint32_t base, unsigned index_length,
             unsigned design_distance, std::vector<Position> positions,
             bool global_sum_check, bool group_sum_checks);

    CodeFamily family() const { return family_; }
    std::uint32_t base() const { return base_; }
    unsigned index_length() const { return index_length_; }
    unsigned design_distance() const { return design_distance_; }
    bool global_sum_check() const { return global_sum_check_; }
    bool group_sum_checks() const { return group_sum_checks_; }

    /// Every position, banished included, in serialization order.
    const std::vector<Position>& positions() const { return positions_; }

    /// Symbols per codeword (non-banished positions).
    std::size_t block_length() const { return active_.size(); }
    std::size_t message_length() const { return message_count_; }

    /// Active (non-banished) position for a symbol ordinal.
    const Position& active(std::size_t ordinal) const { return positions_[active_[ordinal]]; }

    /// Symbol ordinal of the active position carrying this index, if any.
    std::optional<std::size_t> ordinal_of_index(const DigitVec& index) const;
    /// Symbol ordinal of the first active position of the given kind.
    std::optional<std::size_t> ordinal_of_kind(PositionKind kind) const;

    /// Human-readable label for a symbol ordinal: the index digits, or
    /// "O" / "E" / "sum" for the non-indexed positions.
    std::string describe_position(std::size_t ordinal) const;

    /// Compact instance tag, e.g. "a2[r=4,m=16]".
    std::string id() const;

private:
    CodeFamily family_;
    std::uint32_t base_;
    unsigned index_length_;
    unsigned design_distance_;
    bool global_sum_check_;
    bool group_sum_checks_;
    std::vector<Position> positions_;
    std::vector<std::size_t> active_;  // indices into positions_
    std::size_t message_count_ = 0;
    std::unordered_map<std::uint64_t, std::size_t> index_to_ordinal_;
};

/// One codeword bound to its spec: a symbol per non-banished position, in
/// serialization order.
class Codeword {
public:
    Codeword(std::shared_ptr<const CodeSpec> spec, std::vector<std::uint8_t> symbols);

    const CodeSpec& spec() const { return *spec_; }
    const std::shared_ptr<const CodeSpec>& spec_ptr() const { return spec_; }

    std::span<const std::uint8_t> symbols() const { return symbols_; }
    std::uint8_t operator[](std::size_t i) const { return symbols_[i]; }
    std::size_t size() const { return symbols_.size(); }

    void set_symbol(std::size_t i, std::uint8_t value);
    /// Adds delta to the symbol at i, mod base.
    void add_at(std::size_t i, std::uint8_t delta);

    friend bool operator==(const Codeword& a, const Codeword& b) {
        return a.symbols_ == b.symbols_;
    }

private:
    std::shared_ptr<const CodeSpec> spec_;
    std::vector<std::uint8_t> symbols_;
};

std::string serialize(const Codeword& word);
Codeword parse_word(std::shared_ptr<const CodeSpec> spec, std::string_view line);

enum class DecodeStatus : std::uint8_t {
    Clean,
    CorrectedSingle,
    CorrectedMulti,
    DetectedMultiple,
};

std::string_view status_name(DecodeStatus s);

struct Correction {
    std::size_t position = 0;  // symbol ordinal
    std::uint8_t delta = 0;    // amount subtracted, in [1, base)
    friend bool operator==(const Correction&, const Correction&) = default;
};

struct DecodeOutcome {
    DecodeStatus status = DecodeStatus::Clean;
    std::vector<Correction> corrections;  // empty unless Corrected*
};

struct DecodeResult {
    DecodeOutcome outcome;
    Codeword word;  // repaired word; received unchanged when not corrected
};

/// Common codec surface. Implementations are stateless after construction
/// and safe for unrestricted concurrent use.
class Codec {
public:
    virtual ~Codec() = default;

    const CodeSpec& spec() const { return *spec_; }
    const std::shared_ptr<const CodeSpec>& spec_ptr() const { return spec_; }

    virtual Codeword encode(std::span<const std::uint8_t> message) const = 0;
    virtual DecodeResult decode(const Codeword& received) const = 0;

    /// Message digits read back from the message-role positions in table
    /// order. extract_message(encode(m)) == m.
    std::vector<std::uint8_t> extract_message(const Codeword& word) const;

protected:
    explicit Codec(std::shared_ptr<const CodeSpec> spec) : spec_(std::move(spec)) {}

    /// Zero-filled symbol vector with the message placed into message-role
    /// positions in table order. Validates length and digit range.
    std::vector<std::uint8_t> place_message(std::span<const std::uint8_t> message) const;

    std::shared_ptr<const CodeSpec> spec_;
};

/// Index-weighted sum over the active indexed positions: xor-accumulates
/// symbol * index for every indexed symbol. The adjust/sum positions
/// contribute nothing.
DigitVec indexed_xor_sum(const CodeSpec& spec, std::span<const std::uint8_t> symbols);

/// Plain value sum mod base. group == 0 sums every active position;
/// otherwise only positions tagged with that group.
std::uint8_t value_sum(const CodeSpec& spec, std::span<const std::uint8_t> symbols,
                       std::uint8_t group = 0);

}  // namespace qecc
