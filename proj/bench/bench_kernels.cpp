// OpenMP kernels against their serial references.
#include <benchmark/benchmark.h>

#include "raag/cube.hpp"
#include "raag/hyperbolic.hpp"
#include "raag/invariants.hpp"

using namespace raag;

namespace {

GraphPtr path3() { return make_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }
GraphPtr free2() { return make_graph({"a", "b"}, {}); }

template <HalfInteger (*F)(const GroupElement&, std::size_t, std::size_t)>
void delta(benchmark::State& state) {
    auto g = free2();
    const auto r = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(F(GroupElement(g), r, r));
}

template <ContactGraph (*F)(const GroupElement&, std::size_t, std::size_t)>
void contact(benchmark::State& state) {
    auto g = path3();
    const auto r = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(F(GroupElement(g), r, r));
}

template <FnVerdict (*F)(const std::vector<HyperplanePeriodicSeq>&, const std::vector<HyperplanePeriodicSeq>&,
                         std::size_t)>
void fn_search(benchmark::State& state) {
    auto g = path3();
    auto hp = [&](const char* label, const char* base) { return Hyperplane(g->index(label), parse_element(g, base)); };
    HyperplanePeriodicSeq a({hp("b", "1")}, {hp("a", "1"), hp("c", "a")});
    // no witness exists, so the whole ball is searched
    HyperplanePeriodicSeq b({hp("b", "1")}, {hp("a", "1"), hp("c", "b")});
    const auto r = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(F({a, a}, {a, b}, r));
}

} // namespace

BENCHMARK(delta<delta_estimate>)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(delta<delta_estimate_serial>)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(contact<contact_graph_ball>)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(contact<contact_graph_ball_serial>)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(fn_search<decide_Fn>)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(fn_search<decide_Fn_serial>)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
