// Serial reference vs OpenMP kernels on synthetic mixed-script corpora.
//   cstts_bench --benchmark_filter=Build

#include <benchmark/benchmark.h>

#include "cstts/parallel.h"
#include "fuzz.h"
#include "test_util.h"

namespace cstts {

const std::vector<std::string>& Lines() {
  static const std::vector<std::string> lines = [] {
    const fuzz::CoveredPools pools(testing::BundledLexicons());
    fuzz::Rng rng(1);
    std::vector<std::string> out;
    for (int i = 0; i < 20000; ++i) out.push_back(fuzz::RandomCoveredText(rng, pools, 24));
    return out;
  }();
  return lines;
}

const std::vector<TaggedSequence>& Corpus() {
  static const std::vector<TaggedSequence> corpus = [] {
    std::vector<TaggedSequence> out;
    for (auto& o : BuildSequencesSerial(Lines(), testing::BundledLexicons(), OovMode::kStrict)) {
      out.push_back(std::move(o.sequence));
    }
    return out;
  }();
  return corpus;
}

void BM_BuildSequencesSerial(benchmark::State& state) {
  const auto& lex = testing::BundledLexicons();
  for (auto _ : state) {
    benchmark::DoNotOptimize(BuildSequencesSerial(Lines(), lex, OovMode::kStrict));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(Lines().size()));
}
BENCHMARK(BM_BuildSequencesSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_BuildSequencesParallel(benchmark::State& state) {
  const auto& lex = testing::BundledLexicons();
  for (auto _ : state) {
    benchmark::DoNotOptimize(BuildSequencesParallel(Lines(), lex, OovMode::kStrict,
                                                    static_cast<int>(state.range(0))));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(Lines().size()));
}
BENCHMARK(BM_BuildSequencesParallel)
    ->Arg(1)->Arg(2)->Arg(4)->Arg(8)
    ->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_CountPhonemesSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(CountPhonemesSerial(Corpus(), "c"));
}
BENCHMARK(BM_CountPhonemesSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_CountPhonemesParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        CountPhonemesParallel(Corpus(), "c", static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_CountPhonemesParallel)
    ->Arg(1)->Arg(2)->Arg(4)->Arg(8)
    ->Unit(benchmark::kMillisecond)->UseRealTime();

struct AssembleInputs {
  std::vector<EncodedSequence> batch;
  EmbeddingTable phoneme;
  EmbeddingTable language;
};

const AssembleInputs& Assemble() {
  static const AssembleInputs inputs = [] {
    std::vector<TaggedSequence> corpus(Corpus().begin(), Corpus().begin() + 2000);
    corpus.push_back(TaggedSequence{{"AA"}, {0}, ""});
    const auto vocab = SymbolVocabulary::Build(corpus);
    std::vector<EncodedSequence> batch;
    for (const auto& s : corpus) batch.push_back(Encode(s, vocab, true));
    return AssembleInputs{
        std::move(batch),
        EmbeddingTable::Initialize(vocab.size(), kDefaultPhonemeEmbeddingDim, 1),
        EmbeddingTable::Initialize(kLanguageTableRows, kLanguageEmbeddingDim, 2)};
  }();
  return inputs;
}

void BM_AssembleBatchSerial(benchmark::State& state) {
  const auto& in = Assemble();
  for (auto _ : state) {
    benchmark::DoNotOptimize(AssembleBatchSerial(in.batch, in.phoneme, in.language, nullptr));
  }
}
BENCHMARK(BM_AssembleBatchSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_AssembleBatchParallel(benchmark::State& state) {
  const auto& in = Assemble();
  for (auto _ : state) {
    benchmark::DoNotOptimize(AssembleBatchParallel(in.batch, in.phoneme, in.language, nullptr,
                                                   static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_AssembleBatchParallel)
    ->Arg(1)->Arg(2)->Arg(4)->Arg(8)
    ->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace cstts

int main(int argc, char** argv) {
  // Build the shared inputs up front so no benchmark times their construction.
  cstts::Assemble();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
