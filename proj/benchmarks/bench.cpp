#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "dltk/braid.hpp"
#include "dltk/cells.hpp"
#include "dltk/dlpoints.hpp"
#include "dltk/unipotent.hpp"
#include "dltk/weyl.hpp"

namespace {

using namespace dltk;

std::vector<braid::BraidWord> random_words(int n, int count, int length) {
  std::mt19937_64 rng(9001);
  std::vector<braid::BraidWord> words;
  words.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    std::string text;
    for (int j = 0; j < length; ++j) {
      text += "s" + std::to_string(1 + rng() % (n - 1));
      if (rng() % 2) text += "'";
      text += " ";
    }
    words.push_back(braid::BraidWord::parse(n, text));
  }
  return words;
}

void BM_GarsideNormalForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto words = random_words(n, 64, 40);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(braid::normal_form(words[i]));
    i = (i + 1) % words.size();
  }
}
BENCHMARK(BM_GarsideNormalForm)->Arg(4)->Arg(6)->Arg(8);

void BM_SuperSummitSet(benchmark::State& state) {
  const auto b =
      braid::normal_form(braid::BraidWord::parse(4, "s1 s2 s3 s1'"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(braid::super_summit_set(b));
  }
}
BENCHMARK(BM_SuperSummitSet);

// Cold-cache cost of the longest-element Kazhdan-Lusztig polynomial; a
// fresh context forces the whole recursion tree.
void BM_KLLongestElement(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto e = weyl::Permutation(n);
  const auto w0 = weyl::longest_element(n);
  for (auto _ : state) {
    cells::KLContext ctx(n);
    benchmark::DoNotOptimize(ctx.kl(e, w0));
  }
}
BENCHMARK(BM_KLLongestElement)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_TwoSidedCells(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cells::two_sided_cells(n));
  }
}
BENCHMARK(BM_TwoSidedCells)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_UnipotentCharacters(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(unipotent::all_unipotent_characters(n));
  }
}
BENCHMARK(BM_UnipotentCharacters)
    ->Arg(12)
    ->Arg(20)
    ->Unit(benchmark::kMillisecond);

void BM_CountPoints(benchmark::State& state) {
  const auto gallery = braid::EnrichedWord::parse(3, "s1 s2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(dlpoints::count_points(gallery, 2, 2));
  }
}
BENCHMARK(BM_CountPoints)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
