#include <benchmark/benchmark.h>

#include "katal/fixed.hpp"
#include "katal/genesis.hpp"
#include "katal/objects.hpp"
#include "katal/runtime.hpp"

namespace {

using namespace katal;

void BM_FixedMul(benchmark::State& state) {
    const Fixed a = Fixed::parse("123456.789123456789");
    const Fixed b = Fixed::parse("0.987654321987654321");
    for (auto _ : state) benchmark::DoNotOptimize(Fixed::mul(a, b));
}
BENCHMARK(BM_FixedMul);

void BM_FixedDiv(benchmark::State& state) {
    const Fixed a = Fixed::parse("123456.789123456789");
    const Fixed b = Fixed::parse("3.333333333333333333");
    for (auto _ : state) benchmark::DoNotOptimize(Fixed::div(a, b));
}
BENCHMARK(BM_FixedDiv);

Runtime make_runtime(int accounts) {
    Runtime rt;
    register_builtin_templates(rt);
    GenesisConfig genesis;
    genesis.dictator = "acct0";
    for (int i = 0; i < accounts; ++i) {
        const std::string id = "acct" + std::to_string(i);
        genesis.accounts.push_back({id, "test-sig", Value(std::string(64, 'a'))});
        genesis.balances.push_back({id, Fixed(1000)});
    }
    apply_genesis(rt, genesis);
    return rt;
}

void BM_Transfer(benchmark::State& state) {
    Runtime rt = make_runtime(2);
    for (auto _ : state) {
        objects::issuance::transfer(rt, ids::kNativeIssuance, "acct0", "acct1", kNativeAsset,
                                    Fixed::parse("0.000000000000000001"));
    }
}
BENCHMARK(BM_Transfer);

void BM_StateDigest(benchmark::State& state) {
    Runtime rt = make_runtime(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(rt.state_digest());
}
BENCHMARK(BM_StateDigest)->Arg(10)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
