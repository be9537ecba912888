#include "doctest.h"

#include "qecc/a2.hpp"
#include "qecc/rng.hpp"

using namespace qecc;

namespace {

std::vector<std::uint8_t> digits_of(const std::string& s) {
    const DigitVec v = DigitVec::parse(s, 3);
    return {v.digits().begin(), v.digits().end()};
}

const char* kMessage = "0211001022101122";
const char* kCodeword = "2020211001022210112220";

}  // namespace

TEST_SUITE("a2") {

TEST_CASE("spec parameters") {
    const A2Code r4(4, 16);
    CHECK(r4.spec().block_length() == 22);
    CHECK(r4.spec().message_length() == 16);
    CHECK(r4.spec().design_distance() == 4);

    const A2Code r3(3, 5);
    CHECK(r3.spec().block_length() == 10);
    CHECK(r3.spec().message_length() == 5);

    const A2Code shortened(4, 15);
    CHECK(shortened.spec().block_length() == 21);
    CHECK(!shortened.spec().ordinal_of_index(DigitVec::parse("2220", 3)).has_value());

    CHECK(A2Code::capacity(4) == 16);
    CHECK_THROWS_AS(A2Code(4, 17), UsageError);
    CHECK_THROWS_AS(A2Code(4, 5), UsageError);  // below the sparse boundary
}

TEST_CASE("encode golden vector") {
    const A2Code code(4, 16);
    const Codeword word = code.encode(digits_of(kMessage));
    CHECK(serialize(word) == kCodeword);

    const std::pair<const char*, std::uint8_t> redundant[] = {
        {"0011", 2}, {"0110", 0}, {"0111", 2}, {"1110", 2}};
    for (const auto& [index, value] : redundant) {
        CHECK(word[*code.spec().ordinal_of_index(DigitVec::parse(index, 3))] == value);
    }
    CHECK(word[*code.spec().ordinal_of_kind(PositionKind::OddAdjust)] == 2);
    CHECK(word[*code.spec().ordinal_of_kind(PositionKind::EvenAdjust)] == 0);

    CHECK(serialize(code.encode(std::vector<std::uint8_t>(16, 0))) == std::string(22, '0'));
}

TEST_CASE("encode zeroes all three syndromes") {
    SplitMix64 rng(401);
    for (unsigned r : {3u, 4u, 5u}) {
        const A2Code code(r, A2Code::capacity(r));
        for (int i = 0; i < 20; ++i) {
            std::vector<std::uint8_t> message(code.spec().message_length());
            for (auto& d : message) d = static_cast<std::uint8_t>(rng.below(3));
            CHECK(code.syndromes(code.encode(message)).all_zero());
        }
    }
}

TEST_CASE("decode golden double corruption") {
    const A2Code code(4, 16);
    Codeword received = code.encode(digits_of(kMessage));
    // 2 -> 0 at index 1101 and 2 -> 1 on the odd adjust symbol.
    received.set_symbol(*code.spec().ordinal_of_index(DigitVec::parse("1101", 3)), 0);
    received.set_symbol(*code.spec().ordinal_of_kind(PositionKind::OddAdjust), 1);

    const A2Syndromes s = code.syndromes(received);
    CHECK(s.p1 == 0);
    CHECK(s.p2 == 0);
    CHECK(s.p_all == DigitVec::parse("1101", 3));
    CHECK(code.decode(received).outcome.status == DecodeStatus::DetectedMultiple);
}

TEST_CASE("decode clean and single errors per case row") {
    const A2Code code(4, 16);
    const Codeword transmitted = code.encode(digits_of(kMessage));
    CHECK(code.decode(transmitted).outcome.status == DecodeStatus::Clean);

    SUBCASE("message error resolved through the locator") {
        // 2 -> 0 at index 0101: group sum 1 rises by 1, locator lands on 0101.
        const std::size_t pos = *code.spec().ordinal_of_index(DigitVec::parse("0101", 3));
        Codeword received = transmitted;
        received.set_symbol(pos, 0);
        const A2Syndromes s = code.syndromes(received);
        CHECK(s.p1 == 1);
        CHECK(s.p2 == 0);
        CHECK(s.p_all == DigitVec::parse("0101", 3));
        const DecodeResult result = code.decode(received);
        REQUIRE(result.outcome.status == DecodeStatus::CorrectedSingle);
        CHECK(result.outcome.corrections[0].position == pos);
        CHECK(result.word[pos] == 2);
        CHECK(result.word == transmitted);
    }

    SUBCASE("adjust-symbol errors correct from the group sums alone") {
        for (PositionKind kind : {PositionKind::OddAdjust, PositionKind::EvenAdjust}) {
            const std::size_t pos = *code.spec().ordinal_of_kind(kind);
            for (std::uint8_t delta = 1; delta < 3; ++delta) {
                Codeword received = transmitted;
                received.add_at(pos, delta);
                const DecodeResult result = code.decode(received);
                REQUIRE(result.outcome.status == DecodeStatus::CorrectedSingle);
                CHECK(result.outcome.corrections[0].position == pos);
                CHECK(result.outcome.corrections[0].delta == delta);
                CHECK(result.word == transmitted);
            }
        }
    }
}

TEST_CASE("exhaustive single-error correction at r=4") {
    const A2Code code(4, 16);
    SplitMix64 rng(402);
    for (int cw = 0; cw < 20; ++cw) {
        std::vector<std::uint8_t> message(16);
        for (auto& d : message) d = static_cast<std::uint8_t>(rng.below(3));
        const Codeword transmitted = code.encode(message);
        for (std::size_t pos = 0; pos < 22; ++pos) {
            for (std::uint8_t delta = 1; delta < 3; ++delta) {
                Codeword received = transmitted;
                received.add_at(pos, delta);
                const DecodeResult result = code.decode(received);
                REQUIRE(result.outcome.status == DecodeStatus::CorrectedSingle);
                REQUIRE(result.outcome.corrections[0].position == pos);
                REQUIRE(result.outcome.corrections[0].delta == delta);
                REQUIRE(result.word == transmitted);
                REQUIRE(code.syndromes(result.word).all_zero());
            }
        }
    }
}

TEST_CASE("every double error is detected at r=4") {
    const A2Code code(4, 16);
    SplitMix64 rng(403);
    for (int cw = 0; cw < 3; ++cw) {
        std::vector<std::uint8_t> message(16);
        for (auto& d : message) d = static_cast<std::uint8_t>(rng.below(3));
        const Codeword transmitted = code.encode(message);
        for (std::size_t p1 = 0; p1 < 22; ++p1) {
            for (std::size_t p2 = p1 + 1; p2 < 22; ++p2) {
                for (std::uint8_t d1 = 1; d1 < 3; ++d1) {
                    for (std::uint8_t d2 = 1; d2 < 3; ++d2) {
                        Codeword received = transmitted;
                        received.add_at(p1, d1);
                        received.add_at(p2, d2);
                        REQUIRE(code.decode(received).outcome.status ==
                                DecodeStatus::DetectedMultiple);
                    }
                }
            }
        }
    }
}

TEST_CASE("locator landing on a banished index reports multiple errors") {
    // Received word with group sums (0, 2) and indexed sum 1110: the locator
    // 2 * 1110 = 2220 is active at full length but banished at m=15.
    auto make_received = [](const Codec& code) {
        std::vector<std::uint8_t> symbols(code.spec().block_length(), 0);
        for (const char* s : {"1001", "0101", "0011"}) {
            symbols[*code.spec().ordinal_of_index(DigitVec::parse(s, 3))] = 1;
        }
        symbols[*code.spec().ordinal_of_kind(PositionKind::EvenAdjust)] = 2;
        return Codeword(code.spec_ptr(), symbols);
    };

    const A2Code full(4, 16);
    const DecodeResult full_result = full.decode(make_received(full));
    REQUIRE(full_result.outcome.status == DecodeStatus::CorrectedSingle);
    CHECK(full.spec().describe_position(full_result.outcome.corrections[0].position) == "2220");
    CHECK(full.syndromes(full_result.word).all_zero());

    const A2Code shortened(4, 15);
    CHECK(shortened.decode(make_received(shortened)).outcome.status ==
          DecodeStatus::DetectedMultiple);
}

TEST_CASE("large index lengths round trip and correct singles") {
    // r=6 exercises the small-even window case, r=8 the widened last
    // window that keeps the redundant set spanning.
    SplitMix64 rng(409);
    for (unsigned r : {6u, 8u}) {
        const A2Code code(r, A2Code::capacity(r));
        std::vector<std::uint8_t> message(code.spec().message_length());
        for (auto& d : message) d = static_cast<std::uint8_t>(rng.below(3));
        const Codeword transmitted = code.encode(message);
        CHECK(code.syndromes(transmitted).all_zero());
        CHECK(code.extract_message(transmitted) == message);
        for (int t = 0; t < 200; ++t) {
            const std::size_t pos = rng.below(transmitted.size());
            const std::uint8_t delta = static_cast<std::uint8_t>(1 + rng.below(2));
            Codeword received = transmitted;
            received.add_at(pos, delta);
            const DecodeResult result = code.decode(received);
            REQUIRE(result.outcome.status == DecodeStatus::CorrectedSingle);
            REQUIRE(result.outcome.corrections[0].position == pos);
            REQUIRE(result.word == transmitted);
        }
    }
}

TEST_CASE("shortened code still round trips") {
    const A2Code code(4, 15);
    SplitMix64 rng(404);
    for (int i = 0; i < 10; ++i) {
        std::vector<std::uint8_t> message(15);
        for (auto& d : message) d = static_cast<std::uint8_t>(rng.below(3));
        const Codeword word = code.encode(message);
        CHECK(code.syndromes(word).all_zero());
        CHECK(code.extract_message(word) == message);
    }
}

}  // TEST_SUITE

TEST_SUITE("a2sparse") {

TEST_CASE("spec parameters") {
    const A2SparseCode r4(4, 6);
    CHECK(r4.spec().block_length() == 10);
    CHECK(r4.spec().message_length() == 6);
    CHECK(r4.spec().design_distance() == 4);

    const A2SparseCode r5(5, 15);
    CHECK(r5.spec().block_length() == 20);
    CHECK(r5.spec().message_length() == 15);

    const A2SparseCode with_sum(4, 6, /*global_check=*/true);
    CHECK(with_sum.spec().block_length() == 11);
    CHECK(with_sum.spec().message_length() == 6);

    CHECK(A2SparseCode::capacity(4) == 6);
    CHECK_THROWS_AS(A2SparseCode(4, 7), UsageError);
}

TEST_CASE("encode zeroes the checks") {
    SplitMix64 rng(405);
    for (bool global : {false, true}) {
        const A2SparseCode code(4, 6, global);
        for (int i = 0; i < 20; ++i) {
            std::vector<std::uint8_t> message(6);
            for (auto& d : message) d = static_cast<std::uint8_t>(rng.below(3));
            const Codeword word = code.encode(message);
            CHECK(indexed_xor_sum(code.spec(), word.symbols()).is_zero());
            if (global) CHECK(value_sum(code.spec(), word.symbols()) == 0);
            CHECK(code.extract_message(word) == message);
        }
    }
}

TEST_CASE("single error at a 0/1 index") {
    const A2SparseCode code(4, 6);
    const Codeword transmitted = code.encode(digits_of("021100"));
    const std::size_t pos = *code.spec().ordinal_of_index(DigitVec::parse("0111", 3));
    Codeword received = transmitted;
    received.add_at(pos, 1);
    CHECK(indexed_xor_sum(code.spec(), received.symbols()) == DigitVec::parse("0111", 3));
    const DecodeResult result = code.decode(received);
    REQUIRE(result.outcome.status == DecodeStatus::CorrectedSingle);
    CHECK(result.outcome.corrections[0].position == pos);
    CHECK(result.outcome.corrections[0].delta == 1);
    CHECK(result.word == transmitted);
}

TEST_CASE("exhaustive single-error correction, both variants") {
    SplitMix64 rng(406);
    for (bool global : {false, true}) {
        const A2SparseCode code(4, 6, global);
        for (int cw = 0; cw < 20; ++cw) {
            std::vector<std::uint8_t> message(6);
            for (auto& d : message) d = static_cast<std::uint8_t>(rng.below(3));
            const Codeword transmitted = code.encode(message);
            for (std::size_t pos = 0; pos < transmitted.size(); ++pos) {
                for (std::uint8_t delta = 1; delta < 3; ++delta) {
                    Codeword received = transmitted;
                    received.add_at(pos, delta);
                    const DecodeResult result = code.decode(received);
                    REQUIRE(result.outcome.status == DecodeStatus::CorrectedSingle);
                    REQUIRE(result.outcome.corrections[0].position == pos);
                    REQUIRE(result.outcome.corrections[0].delta == delta);
                    REQUIRE(result.word == transmitted);
                }
            }
        }
    }
}

TEST_CASE("error on the value-sum symbol itself") {
    const A2SparseCode code(4, 6, /*global_check=*/true);
    const Codeword transmitted = code.encode(digits_of("021100"));
    const std::size_t sum_pos = *code.spec().ordinal_of_kind(PositionKind::GlobalSum);
    Codeword received = transmitted;
    received.add_at(sum_pos, 2);
    const DecodeResult result = code.decode(received);
    REQUIRE(result.outcome.status == DecodeStatus::CorrectedSingle);
    CHECK(result.outcome.corrections[0].position == sum_pos);
    CHECK(result.outcome.corrections[0].delta == 2);
    CHECK(result.word == transmitted);
}

TEST_CASE("double errors never miscorrect") {
    SplitMix64 rng(407);
    for (bool global : {false, true}) {
        const A2SparseCode code(4, 6, global);
        std::vector<std::uint8_t> message(6);
        for (auto& d : message) d = static_cast<std::uint8_t>(rng.below(3));
        const Codeword transmitted = code.encode(message);
        const std::size_t n = transmitted.size();
        for (std::size_t p1 = 0; p1 < n; ++p1) {
            for (std::size_t p2 = p1 + 1; p2 < n; ++p2) {
                for (std::uint8_t d1 = 1; d1 < 3; ++d1) {
                    for (std::uint8_t d2 = 1; d2 < 3; ++d2) {
                        Codeword received = transmitted;
                        received.add_at(p1, d1);
                        received.add_at(p2, d2);
                        REQUIRE(code.decode(received).outcome.status ==
                                DecodeStatus::DetectedMultiple);
                    }
                }
            }
        }
    }
}

TEST_CASE("shortened sparse banishes the highest message indices") {
    const A2SparseCode code(4, 4);
    CHECK(code.spec().block_length() == 8);
    CHECK(code.spec().message_length() == 4);
    // 1101 and 1100 are the two highest non-redundant indices in the family.
    CHECK(!code.spec().ordinal_of_index(DigitVec::parse("1101", 3)).has_value());
    CHECK(!code.spec().ordinal_of_index(DigitVec::parse("1100", 3)).has_value());
    SplitMix64 rng(408);
    for (int i = 0; i < 10; ++i) {
        std::vector<std::uint8_t> message(4);
        for (auto& d : message) d = static_cast<std::uint8_t>(rng.below(3));
        const Codeword word = code.encode(message);
        CHECK(indexed_xor_sum(code.spec(), word.symbols()).is_zero());
        CHECK(code.extract_message(word) == message);
    }
}

}  // TEST_SUITE
