#include <benchmark/benchmark.h>

#include "eslab/domain.hpp"
#include "eslab/generate.hpp"
#include "eslab/graph.hpp"
#include "eslab/io.hpp"
#include "eslab/labelling.hpp"

using namespace eslab;

namespace {

EventStructureSpec sweep_spec(int events, Shape shape) {
  GenParams params;
  params.event_count = events;
  params.shape = shape;
  params.conflict_density = 0.3;
  params.seed = 1234;
  return generate_spec(params);
}

void BM_Build(benchmark::State& state) {
  const EventStructureSpec spec = sweep_spec(static_cast<int>(state.range(0)), Shape::General);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_event_structure(spec));
  }
}
BENCHMARK(BM_Build)->Arg(10)->Arg(30)->Arg(60);

void BM_CliqueNumber(benchmark::State& state) {
  const EventStructure es =
      build_event_structure(sweep_spec(static_cast<int>(state.range(0)), Shape::General));
  const OrthoGraph graph = ortho_graph(es);
  for (auto _ : state) {
    benchmark::DoNotOptimize(clique_number(graph));
  }
}
BENCHMARK(BM_CliqueNumber)->Arg(15)->Arg(30)->Arg(60);

void BM_ChromaticNumber(benchmark::State& state) {
  const EventStructure es =
      build_event_structure(sweep_spec(static_cast<int>(state.range(0)), Shape::General));
  const OrthoGraph graph = ortho_graph(es);
  for (auto _ : state) {
    benchmark::DoNotOptimize(chromatic_number(graph));
  }
}
BENCHMARK(BM_ChromaticNumber)->Arg(15)->Arg(30);

void BM_LabelForest3(benchmark::State& state) {
  const EventStructure es =
      build_event_structure(sweep_spec(static_cast<int>(state.range(0)), Shape::Forest));
  for (auto _ : state) {
    benchmark::DoNotOptimize(label_forest3(es));
  }
}
BENCHMARK(BM_LabelForest3)->Arg(15)->Arg(40);

void BM_EnumerateDomain(benchmark::State& state) {
  // k concurrent chains of length 3: the domain grows geometrically with k
  const int chains = static_cast<int>(state.range(0));
  EventStructureSpec spec;
  for (int c = 0; c < chains; ++c) {
    std::string previous;
    for (int i = 0; i < 3; ++i) {
      std::string name = "c" + std::to_string(c) + "_" + std::to_string(i);
      spec.events.push_back(name);
      if (!previous.empty()) spec.covers.emplace_back(previous, name);
      previous = name;
    }
  }
  const EventStructure es = build_event_structure(spec);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_domain(es, 500000));
  }
}
BENCHMARK(BM_EnumerateDomain)->Arg(3)->Arg(5)->Arg(7);

void BM_ParseSerialize(benchmark::State& state) {
  const std::string text = serialize_es(sweep_spec(40, Shape::General));
  for (auto _ : state) {
    benchmark::DoNotOptimize(serialize_es(parse_es(text)));
  }
}
BENCHMARK(BM_ParseSerialize);

}  // namespace

BENCHMARK_MAIN();
