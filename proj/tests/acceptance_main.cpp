// Acceptance suite: runs every release criterion end to end and prints one
// pass/fail line per criterion. Exit status is nonzero if any fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qecc/a1.hpp"
#include "qecc/a2.hpp"
#include "qecc/analysis.hpp"
#include "qecc/channel.hpp"
#include "qecc/nwxli.hpp"
#include "qecc/prototype.hpp"
#include "qecc/wxli.hpp"

using namespace qecc;

namespace {

int g_failed_criteria = 0;

class Criterion {
public:
    Criterion(int number, std::string name) : number_(number), name_(std::move(name)) {}

    void expect(bool condition, const std::string& detail) {
        if (condition) return;
        ok_ = false;
        failures_.push_back(detail);
    }

    template <typename T, typename U>
    void expect_eq(const T& actual, const U& expected, const std::string& what) {
        std::ostringstream os;
        os << what << ": expected " << expected << ", got " << actual;
        expect(actual == static_cast<T>(expected), os.str());
    }

    ~Criterion() {
        std::printf("criterion %d [%s] ... %s\n", number_, name_.c_str(),
                    ok_ ? "PASS" : "FAIL");
        for (const std::string& f : failures_) std::printf("    %s\n", f.c_str());
        if (!ok_) ++g_failed_criteria;
        std::fflush(stdout);
    }

private:
    int number_;
    std::string name_;
    bool ok_ = true;
    std::vector<std::string> failures_;
};

std::vector<std::uint8_t> digits_of(const std::string& s, std::uint32_t base = 3) {
    const DigitVec v = DigitVec::parse(s, base);
    return {v.digits().begin(), v.digits().end()};
}

void criterion1_golden_vectors() {
    Criterion c(1, "golden vectors");

    // Digit-indexed prototype, base 3, r = 3.
    const PrototypeCode proto(3, 3);
    const Codeword proto_word = proto.encode(digits_of("20111020010201200120012"));
    c.expect_eq(serialize(proto_word), std::string("122001110220010201200120012"),
                "prototype encode");
    {
        Codeword corrupted = proto_word;
        corrupted.set_symbol(7, 2);  // index (0,2,1): 1 -> 2
        const DecodeResult r = proto.decode(corrupted);
        c.expect(r.outcome.status == DecodeStatus::CorrectedSingle, "prototype decode status");
        c.expect(!r.outcome.corrections.empty() &&
                     proto.spec().describe_position(r.outcome.corrections[0].position) == "021",
                 "prototype decode location (0,2,1)");
        c.expect(r.word == proto_word && r.word[7] == 1, "prototype decode restores value 1");
    }

    // A1, r = 3, ten message trits.
    const A1Code a1(3, 10);
    const Codeword a1_word = a1.encode(digits_of("0211112102"));
    c.expect_eq(serialize(a1_word), std::string("2002011112102"), "a1 encode");
    {
        const std::size_t at100 = *a1.spec().ordinal_of_index(DigitVec::parse("100", 3));
        const std::size_t at010 = *a1.spec().ordinal_of_index(DigitVec::parse("010", 3));
        const std::size_t at001 = *a1.spec().ordinal_of_index(DigitVec::parse("001", 3));
        c.expect(a1_word[at100] == 0 && a1_word[at010] == 0 && a1_word[at001] == 2,
                 "a1 redundant digits (0,0,2)");
        Codeword message_only = a1_word;
        message_only.set_symbol(at100, 0);
        message_only.set_symbol(at010, 0);
        message_only.set_symbol(at001, 0);
        c.expect_eq(a1.syndrome(message_only).str(), std::string("001"), "a1 message sum");
    }

    // A2, r = 4, sixteen message trits.
    const A2Code a2(4, 16);
    const Codeword a2_word = a2.encode(digits_of("0211001022101122"));
    c.expect_eq(serialize(a2_word), std::string("2020211001022210112220"), "a2 encode");
    c.expect(a2_word[*a2.spec().ordinal_of_kind(PositionKind::OddAdjust)] == 2 &&
                 a2_word[*a2.spec().ordinal_of_kind(PositionKind::EvenAdjust)] == 0,
             "a2 adjust symbols O=2, E=0");
    {
        Codeword corrupted = a2_word;
        corrupted.set_symbol(*a2.spec().ordinal_of_index(DigitVec::parse("1101", 3)), 0);
        corrupted.set_symbol(*a2.spec().ordinal_of_kind(PositionKind::OddAdjust), 1);
        const A2Syndromes s = a2.syndromes(corrupted);
        c.expect(s.p_all == DigitVec::parse("1101", 3), "a2 double corruption P_all = 1101");
        c.expect(a2.decode(corrupted).outcome.status == DecodeStatus::DetectedMultiple,
                 "a2 double corruption detected");
    }

    // Ternary Golay.
    const NwxliCode golay = NwxliCode::golay();
    c.expect_eq(serialize(golay.encode(digits_of("012210"))), std::string("10122012210"),
                "golay encode");
    {
        const DecodeResult r = golay.decode(parse_word(golay.spec_ptr(), "10122012222"));
        c.expect(r.outcome.status == DecodeStatus::CorrectedMulti, "golay decode status");
        bool corrections_ok = r.outcome.corrections.size() == 2;
        if (corrections_ok) {
            corrections_ok =
                golay.spec().describe_position(r.outcome.corrections[0].position) == "22110" &&
                r.outcome.corrections[0].delta == 1 &&
                golay.spec().describe_position(r.outcome.corrections[1].position) == "22222" &&
                r.outcome.corrections[1].delta == 2;
        }
        c.expect(corrections_ok, "golay corrections (22110,-1), (22222,-2)");
        c.expect_eq(serialize(r.word), std::string("10122012210"), "golay repaired word");
    }
}

void criterion2_parameter_tables() {
    Criterion c(2, "parameter tables");
    const std::uint64_t expected_f[] = {4, 10, 20, 41, 91, 182, 372};
    const char* expected_rate[] = {"0.500", "0.727", "0.833", "0.905", "0.951", "0.973", "0.985"};
    for (unsigned r = 3; r <= 9; ++r) {
        const std::uint64_t f = family_size(r);
        c.expect_eq(f, expected_f[r - 3], "f(" + std::to_string(r) + ")");
        const std::uint64_t block = 2 * f + 2;
        const std::uint64_t msg = 2 * f - r;
        c.expect_eq(block, 2 * expected_f[r - 3] + 2, "block(" + std::to_string(r) + ")");
        c.expect_eq(msg, 2 * expected_f[r - 3] - r, "message(" + std::to_string(r) + ")");
        char rate[16];
        std::snprintf(rate, sizeof rate, "%.3f",
                      static_cast<double>(msg) / static_cast<double>(block));
        c.expect_eq(std::string(rate), std::string(expected_rate[r - 3]),
                    "rate(" + std::to_string(r) + ")");
    }
}

void criterion3_distance_certification() {
    Criterion c(3, "distance certification");

    // Prototype r=2: both oracles plus the explicit weight-3 word.
    {
        const PrototypeCode proto(3, 2);
        const auto deps = min_distance_column_search(check_matrix_of(proto.spec()), 2);
        c.expect(!deps[0] && !deps[1], "prototype r=2: no dependency below weight 3");
        c.expect_eq(min_weight_enumeration(proto), 3u, "prototype r=2 minimum weight");
        c.expect(proto.syndromes(proto.weight3_codeword(DigitVec::zero(3, 2))).all_zero(),
                 "prototype r=2 weight-3 witness");
    }
    // Prototype r=3: column search below 3, witness at 3 (enumeration is out
    // of budget there).
    {
        const PrototypeCode proto(3, 3);
        const auto deps = min_distance_column_search(check_matrix_of(proto.spec()), 2);
        c.expect(!deps[0] && !deps[1], "prototype r=3: no dependency below weight 3");
        const Codeword witness = proto.weight3_codeword(DigitVec::parse("012", 3));
        unsigned weight = 0;
        for (std::uint8_t s : witness.symbols()) weight += s != 0;
        c.expect(weight == 3 && proto.syndromes(witness).all_zero(),
                 "prototype r=3 weight-3 witness");
    }
    // A1 r=3.
    {
        const A1Code a1(3, 10);
        const auto deps = min_distance_column_search(check_matrix_of(a1.spec()), 2);
        c.expect(!deps[0] && !deps[1], "a1 r=3: no dependency below weight 3");
        c.expect_eq(min_weight_enumeration(a1), 3u, "a1 r=3 minimum weight");
    }
    // A2 r=3 and r=4.
    {
        const A2Code a2r3(3, 5);
        const auto deps3 = min_distance_column_search(check_matrix_of(a2r3.spec()), 3);
        c.expect(!deps3[0] && !deps3[1] && !deps3[2], "a2 r=3: no dependency below weight 4");
        c.expect_eq(min_weight_enumeration(a2r3), 4u, "a2 r=3 minimum weight");

        const A2Code a2r4(4, 16);
        const auto deps4 = min_distance_column_search(check_matrix_of(a2r4.spec()), 3);
        c.expect(!deps4[0] && !deps4[1] && !deps4[2], "a2 r=4: no dependency below weight 4");
        // Upper bound: two encoded messages at Hamming distance exactly 4.
        const Codeword x = a2r4.encode(digits_of("0211001022101122"));
        const Codeword y = a2r4.encode(digits_of("0021021022001122"));
        unsigned distance = 0;
        for (std::size_t i = 0; i < x.size(); ++i) distance += x[i] != y[i];
        c.expect_eq(distance, 4u, "a2 r=4 distance-4 codeword pair");
    }
    // A2 sparse r=4.
    {
        const A2SparseCode sparse(4, 6);
        const auto deps = min_distance_column_search(check_matrix_of(sparse.spec()), 3);
        c.expect(!deps[0] && !deps[1] && !deps[2], "a2sparse r=4: no dependency below weight 4");
        c.expect_eq(min_weight_enumeration(sparse), 4u, "a2sparse r=4 minimum weight (729 words)");
    }
    // Golay.
    {
        const NwxliCode golay = NwxliCode::golay();
        const auto deps = min_distance_column_search(check_matrix_of(golay.spec()), 4);
        c.expect(!deps[0] && !deps[1] && !deps[2] && !deps[3],
                 "golay: no dependency below weight 5");
        c.expect_eq(min_weight_enumeration(golay), 5u, "golay minimum weight (729 words)");
    }
}

void criterion4_behavioral_sweeps() {
    Criterion c(4, "exhaustive behavioral sweeps");
    SplitMix64 rng(20240);

    auto single_error_sweep = [&](const Codec& codec, const std::string& label) {
        SweepStats stats = exhaustive_error_sweep(
            codec, codec.encode(std::vector<std::uint8_t>(codec.spec().message_length(), 0)), 1);
        for (int i = 0; i < 20; ++i) {
            stats += exhaustive_error_sweep(codec, random_codeword(codec, rng), 1);
        }
        c.expect(stats.corrected_ok == stats.trials,
                 label + ": single-error correction must be total");
    };
    single_error_sweep(PrototypeCode(3, 2), "prototype r=2");
    single_error_sweep(PrototypeCode(3, 3), "prototype r=3");
    single_error_sweep(A1Code(3, 10), "a1 r=3");
    single_error_sweep(A2Code(3, 5), "a2 r=3");
    single_error_sweep(A2Code(4, 16), "a2 r=4");
    single_error_sweep(A2SparseCode(4, 6), "a2sparse r=4");
    single_error_sweep(A2SparseCode(4, 6, true), "a2sparse+sum r=4");
    single_error_sweep(NwxliCode::golay(), "golay");

    // A2 r=4 double errors: nothing silent, nothing miscorrected.
    {
        const A2Code a2(4, 16);
        SweepStats stats;
        stats += exhaustive_error_sweep(a2, a2.encode(std::vector<std::uint8_t>(16, 0)), 2);
        for (int i = 0; i < 10; ++i) {
            stats += exhaustive_error_sweep(a2, random_codeword(a2, rng), 2);
        }
        c.expect_eq(stats.trials, 11u * 924u, "a2 r=4 double-error pattern count");
        c.expect(stats.silent == 0, "a2 r=4 doubles: silent = 0");
        c.expect(stats.miscorrected == 0, "a2 r=4 doubles: miscorrected = 0");
        c.expect(stats.detected == stats.trials, "a2 r=4 doubles: all detected");
    }
    // Prototype r=2 double errors: never silent (miscorrection allowed).
    {
        const PrototypeCode proto(3, 2);
        SweepStats stats;
        stats += exhaustive_error_sweep(proto, proto.encode(std::vector<std::uint8_t>(6, 0)), 2);
        for (int i = 0; i < 10; ++i) {
            stats += exhaustive_error_sweep(proto, random_codeword(proto, rng), 2);
        }
        c.expect(stats.silent == 0, "prototype r=2 doubles: silent = 0");
    }
    // Golay doubles all corrected; triples never silent.
    {
        const NwxliCode golay = NwxliCode::golay();
        SweepStats doubles;
        SweepStats singles;
        SweepStats triples;
        for (int i = 0; i < 10; ++i) {
            const Codeword word = random_codeword(golay, rng);
            singles += exhaustive_error_sweep(golay, word, 1);
            doubles += exhaustive_error_sweep(golay, word, 2);
            triples += exhaustive_error_sweep(golay, word, 3);
        }
        c.expect_eq(singles.trials / 10, 22u, "golay weight-1 patterns per word");
        c.expect_eq(doubles.trials / 10, 220u, "golay weight-2 patterns per word");
        c.expect(singles.corrected_ok == singles.trials &&
                     doubles.corrected_ok == doubles.trials,
                 "golay: all 242 patterns of weight <= 2 corrected");
        c.expect(triples.silent == 0, "golay triples: silent = 0");
    }
}

void criterion5_unique_solution() {
    Criterion c(5, "unique-solution theorem");
    std::uint64_t checked = 0;
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
        for (std::uint32_t z = 1; z < p; ++z) {
            for (std::uint32_t y = 1; y < p; ++y) {
                unsigned count = 0;
                std::uint32_t found = 0;
                for (std::uint32_t l = 1; l < p; ++l) {
                    if (l * z % p == y) {
                        ++count;
                        found = l;
                    }
                }
                ++checked;
                if (count != 1 || solve_unique(p, z, y) != found) {
                    c.expect(false, "solution count or value wrong at p=" + std::to_string(p) +
                                        " z=" + std::to_string(z) + " y=" + std::to_string(y));
                    return;
                }
            }
        }
    }
    c.expect(checked == 1 + 4 + 16 + 36 + 100, "pair coverage");
}

void criterion6_independence() {
    Criterion c(6, "independence certification");
    for (unsigned r = 3; r <= 8; ++r) {
        const WxliFamily family = build_family(r);
        c.expect(certify_kwise_independent(family.i1, 3).independent,
                 "I1 r=" + std::to_string(r) + " is 3-wise independent");
    }
    const NwxliCode golay = NwxliCode::golay();  // construction re-certifies order 4
    std::vector<DigitVec> golay_set;
    for (std::size_t i = 0; i < golay.spec().block_length(); ++i) {
        golay_set.push_back(*golay.spec().active(i).index);
    }
    c.expect(certify_kwise_independent(golay_set, 4).independent,
             "golay set is 4-wise independent");

    const std::vector<DigitVec> bad = {DigitVec::parse("001", 3), DigitVec::parse("010", 3),
                                       DigitVec::parse("011", 3)};
    const IndependenceReport report = certify_kwise_independent(bad, 3);
    c.expect(!report.independent, "negative witness set rejected");
    if (report.witness) {
        DigitVec sum = DigitVec::zero(3, 3);
        for (const auto& [v, coeff] : report.witness->terms) {
            sum = xor_add(sum, scalar_mul(coeff, v));
        }
        c.expect(sum.is_zero() && report.witness->terms.size() >= 2, "witness re-evaluates to zero");
    } else {
        c.expect(false, "witness missing");
    }
}

void criterion7_add_count() {
    Criterion c(7, "instrumented add count");
    const PrototypeCode proto(3, 5);
    const Codeword word = proto.encode(std::vector<std::uint8_t>(proto.spec().message_length(), 0));
    std::uint64_t adds = 0;
    proto.syndromes(word, &adds);
    c.expect_eq(adds, 1458u, "syndrome additions at p=3, r=5");
}

void criterion8_monte_carlo() {
    Criterion c(8, "Monte Carlo consistency");
    const A2Code a2(4, 16);

    ChannelConfig config;
    config.forced_weight = 1;
    config.trials = 100000;
    config.seed = 0x5eed;
    config.workers = 1;
    const ChannelReport serial = simulate(a2, config);
    c.expect_eq(serial.stats.corrected_ok, config.trials,
                "forced weight-1: corrected_ok = 100%");

    config.workers = 4;
    const ChannelReport parallel = simulate(a2, config);
    c.expect(serial.stats == parallel.stats, "bit-identical stats across worker counts");
}

}  // namespace

int main() {
    criterion1_golden_vectors();
    criterion2_parameter_tables();
    criterion3_distance_certification();
    criterion4_behavioral_sweeps();
    criterion5_unique_solution();
    criterion6_independence();
    criterion7_add_count();
    criterion8_monte_carlo();

    if (g_failed_criteria != 0) {
        std::printf("%d criterion(s) FAILED\n", g_failed_criteria);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
