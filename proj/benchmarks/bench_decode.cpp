#include <benchmark/benchmark.h>

#include <random>

#include "frcodes/decoder.hpp"
#include "frcodes/semigroup.hpp"

using namespace frcodes;

namespace {

struct GridCode {
    AlgebraPtr alg;
    DecoderPtr setup;
    CodeHandle code;
    std::vector<Vec> received;
};

// Square grid over GF(16), improved index set of dimension n/2, weight-1
// errors on random codewords.
GridCode make_grid(std::size_t side) {
    auto f16 = Field::create(2, 4, {1, 1, 0, 0, 1});
    Vec coords(side);
    for (std::size_t k = 0; k < side; ++k) coords[k] = static_cast<Elem>(k);
    auto alg = MonomialAlgebra::build(f16, 2, MonomialOrder::graded_lex(2), {coords, coords});
    const std::size_t n = alg->n();
    const auto I = design_improved_code(*alg, n / 2, Side::Primary);
    WBTable part = semigroup_wb_table(*alg);
    auto setup = DecoderSetup::make(alg->eval_basis(), alg->eval_basis(), I, &part);
    auto code = construct_code(*alg, I, Side::Primary);

    std::mt19937_64 rng(1234 + side);
    std::uniform_int_distribution<Elem> el(0, 15);
    std::uniform_int_distribution<Elem> nz(1, 15);
    std::vector<Vec> received;
    for (int k = 0; k < 8; ++k) {
        Vec msg(I.size());
        for (auto& x : msg) x = el(rng);
        Vec r = encode(code, msg);
        r[rng() % n] = f16->add(r[rng() % n], nz(rng));
        received.push_back(std::move(r));
    }
    return GridCode{alg, setup, std::move(code), std::move(received)};
}

void BM_Decode(benchmark::State& state) {
    const auto grid = make_grid(static_cast<std::size_t>(state.range(0)));
    std::size_t k = 0;
    for (auto _ : state) {
        auto res = grid.setup->decode(grid.received[k++ % grid.received.size()]);
        benchmark::DoNotOptimize(res);
    }
    state.SetComplexityN(static_cast<benchmark::IterationCount>(grid.alg->n()));
}
BENCHMARK(BM_Decode)->Arg(4)->Arg(8)->Arg(12)->Arg(16)->Complexity();

void BM_DualizeSetup(benchmark::State& state) {
    auto f16 = Field::create(2, 4, {1, 1, 0, 0, 1});
    const auto side = static_cast<std::size_t>(state.range(0));
    Vec coords(side);
    for (std::size_t k = 0; k < side; ++k) coords[k] = static_cast<Elem>(k);
    auto alg = MonomialAlgebra::build(f16, 2, MonomialOrder::graded_lex(2), {coords, coords});
    for (auto _ : state) {
        auto h = dualize(*alg->eval_basis());
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_DualizeSetup)->Arg(8)->Arg(16);

void BM_ExhaustiveTable(benchmark::State& state) {
    auto f5 = Field::create(5, 1);
    const auto side = static_cast<std::size_t>(state.range(0));
    Vec coords(side);
    for (std::size_t k = 0; k < side; ++k) coords[k] = static_cast<Elem>(k);
    auto alg = MonomialAlgebra::build(f5, 2, MonomialOrder::graded_lex(2), {coords, coords});
    for (auto _ : state) {
        auto t = build_wb_table(alg->eval_basis(), alg->eval_basis());
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_ExhaustiveTable)->Arg(3)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
