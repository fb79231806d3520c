#include <benchmark/benchmark.h>

#include "symdet/gram.hpp"
#include "symdet/refined.hpp"

using namespace symdet;

namespace {

Partition shape_of(std::int64_t code) {
    std::vector<int> parts;
    for (; code > 0; code /= 10) parts.push_back(int(code % 10));
    return Partition(parts);
}

// Shapes encoded as decimal digits, largest part last: 123 is (3,2,1).
void BM_SymmetrizerImage(benchmark::State& state) {
    const TableauFrame frame(shape_of(state.range(0)));
    Word w;
    for (int i = 0; i < frame.shape.n(); ++i) w.push_back(1 + i % 3);
    for (auto _ : state) benchmark::DoNotOptimize(apply_symmetrizer(frame, w));
}
BENCHMARK(BM_SymmetrizerImage)->Arg(12)->Arg(123)->Arg(1123)->Arg(1223);

void BM_GramBlockDistinct(benchmark::State& state) {
    const Partition shape = shape_of(state.range(0));
    const Composition pattern(std::vector<int>(std::size_t(shape.n()), 1));
    for (auto _ : state) benchmark::DoNotOptimize(gram_block(shape, pattern));
}
BENCHMARK(BM_GramBlockDistinct)->Arg(123)->Arg(1123)->Arg(1223)->Unit(benchmark::kMillisecond);

void BM_SymDet(benchmark::State& state) {
    const Partition shape = shape_of(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(symmetrization_determinant(shape, 1));
}
BENCHMARK(BM_SymDet)->Arg(123)->Arg(1123)->Arg(1114)->Unit(benchmark::kMillisecond);

void BM_Table7(benchmark::State& state) {
    for (auto _ : state)
        for (const auto& p : partitions_of(7)) benchmark::DoNotOptimize(symmetrization_determinant(p, 1));
}
BENCHMARK(BM_Table7)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_RefinedDecomposition(benchmark::State& state) {
    const Partition shape = shape_of(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(refined_decomposition(shape, 1));
}
BENCHMARK(BM_RefinedDecomposition)->Arg(12)->Arg(13)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_Interpolate(benchmark::State& state) {
    const IntPoly p = IntPoly::binomial(unsigned(state.range(0)), 3);
    std::vector<std::pair<BigInt, BigRat>> pts;
    for (long x = 0; x <= state.range(0) + 2; ++x) pts.emplace_back(x, p.eval(x));
    for (auto _ : state) benchmark::DoNotOptimize(interpolate(pts, unsigned(state.range(0))));
}
BENCHMARK(BM_Interpolate)->Arg(4)->Arg(8);

}  // namespace
BENCHMARK_MAIN();
