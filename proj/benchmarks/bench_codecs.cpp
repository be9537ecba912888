#include <benchmark/benchmark.h>

#include "qecc/a2.hpp"
#include "qecc/nwxli.hpp"
#include "qecc/prototype.hpp"
#include "qecc/rng.hpp"
#include "qecc/wxli.hpp"

using namespace qecc;

namespace {

std::vector<std::uint8_t> random_message(const Codec& codec, SplitMix64& rng) {
    std::vector<std::uint8_t> m(codec.spec().message_length());
    for (auto& d : m) d = static_cast<std::uint8_t>(rng.below(codec.spec().base()));
    return m;
}

void BM_PrototypeEncode(benchmark::State& state) {
    const PrototypeCode code(3, static_cast<unsigned>(state.range(0)));
    SplitMix64 rng(1);
    const auto message = random_message(code, rng);
    for (auto _ : state) benchmark::DoNotOptimize(code.encode(message));
}
BENCHMARK(BM_PrototypeEncode)->Arg(3)->Arg(5);

void BM_PrototypeDecodeSingleError(benchmark::State& state) {
    const PrototypeCode code(3, static_cast<unsigned>(state.range(0)));
    SplitMix64 rng(2);
    Codeword word = code.encode(random_message(code, rng));
    word.add_at(7, 1);
    for (auto _ : state) benchmark::DoNotOptimize(code.decode(word));
}
BENCHMARK(BM_PrototypeDecodeSingleError)->Arg(3)->Arg(5);

void BM_A2Encode(benchmark::State& state) {
    const A2Code code(static_cast<unsigned>(state.range(0)),
                      static_cast<std::size_t>(A2Code::capacity(static_cast<unsigned>(state.range(0)))));
    SplitMix64 rng(3);
    const auto message = random_message(code, rng);
    for (auto _ : state) benchmark::DoNotOptimize(code.encode(message));
}
BENCHMARK(BM_A2Encode)->Arg(4)->Arg(6);

void BM_A2DecodeDoubleError(benchmark::State& state) {
    const A2Code code(4, 16);
    SplitMix64 rng(4);
    Codeword word = code.encode(random_message(code, rng));
    word.add_at(3, 1);
    word.add_at(11, 2);
    for (auto _ : state) benchmark::DoNotOptimize(code.decode(word));
}
BENCHMARK(BM_A2DecodeDoubleError);

void BM_GolayDecodeDoubleError(benchmark::State& state) {
    const NwxliCode code = NwxliCode::golay();
    SplitMix64 rng(5);
    Codeword word = code.encode(random_message(code, rng));
    word.add_at(2, 1);
    word.add_at(9, 2);
    for (auto _ : state) benchmark::DoNotOptimize(code.decode(word));
}
BENCHMARK(BM_GolayDecodeDoubleError);

void BM_IndependenceCertification(benchmark::State& state) {
    const WxliFamily family = build_family(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(certify_kwise_independent(family.i1, 3));
    }
}
BENCHMARK(BM_IndependenceCertification)->Arg(5)->Arg(7)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
