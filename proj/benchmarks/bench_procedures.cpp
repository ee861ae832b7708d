#include <benchmark/benchmark.h>

#include <string>

#include "mfpt/gth.hpp"
#include "mfpt/matrix_io.hpp"
#include "mfpt/oracle.hpp"
#include "mfpt/problems.hpp"
#include "mfpt/procedures.hpp"

namespace {

using namespace mfpt;

const TransitionMatrix<double>& sparse100() {
  static const auto p = load_matrix(std::string(MFPT_DATA_DIR) + "/sparse100.mtx");
  return p;
}

// Args: procedure id, problem (0..6 built-ins, 7 the m=100 instance).
template <Real T>
void BM_Procedure(benchmark::State& state) {
  const auto proc = *procedure_from_id(static_cast<int>(state.range(0)));
  const auto idx = static_cast<std::size_t>(state.range(1));
  const auto& ids = builtin_ids();
  const auto p = (idx < ids.size() ? builtin(ids[idx]) : sparse100()).template cast<T>();
  if (idx < ids.size()) {
    ProblemSpec spec;
    spec.id = ids[idx];
    state.SetLabel(spec.name());
  } else {
    state.SetLabel("sparse100");
  }
  for (auto _ : state) {
    try {
      auto sol = run_procedure(proc, p);
      benchmark::DoNotOptimize(sol.m.mfpt.data().data());
    } catch (const Error& e) {
      state.SkipWithError(e.what());
      break;
    }
  }
}

void procedure_grid(benchmark::internal::Benchmark* b) {
  for (int proc = 1; proc <= kProcedureCount; ++proc) {
    for (int prob = 0; prob < 8; ++prob) b->Args({proc, prob});
  }
}

BENCHMARK(BM_Procedure<double>)->Apply(procedure_grid)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Procedure<float>)->Apply(procedure_grid)->Unit(benchmark::kMicrosecond);

void BM_GthStationary(benchmark::State& state) {
  const auto p = generate_sparse(static_cast<std::size_t>(state.range(0)), 0.6, 1);
  for (auto _ : state) {
    auto pi = gth_stationary(p);
    benchmark::DoNotOptimize(pi.pi.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GthStationary)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oNCubed);

void BM_Oracle(benchmark::State& state) {
  for (auto _ : state) {
    auto m = mfpt_oracle(sparse100());
    benchmark::DoNotOptimize(m.mfpt.data().data());
  }
}
BENCHMARK(BM_Oracle)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
