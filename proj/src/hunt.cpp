#include "treepack/hunt.hpp"

#include <atomic>
#include <fstream>
#include <thread>

#include "treepack/errors.hpp"

namespace treepack {

HuntSummary hunt(const HuntSpec& spec,
                 const std::function<void(const GraphRecord&)>& sink) {
  const long long count = spec.gen.count;
  std::vector<std::optional<GraphRecord>> records(count);

  auto work = [&](long long index) {
    GenSlot slot = generate_one(spec.gen, static_cast<std::uint64_t>(index));
    if (!slot.graph) return;
    GraphRecord r = spec.theorem == TheoremSel::Main2
                        ? check_main2(*slot.graph, spec.m, spec.k)
                        : check_main1(*slot.graph);
    r.graph_id = index;
    r.seed = slot.seed;
    r.runtime_ms.reset();  // keep reports byte-identical across runs
    records[index] = std::move(r);
  };

  int jobs = std::max(1, spec.jobs);
  if (jobs == 1 || count <= 1) {
    for (long long i = 0; i < count; ++i) work(i);
  } else {
    std::atomic<long long> next{0};
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) {
      pool.emplace_back([&] {
        while (true) {
          long long i = next.fetch_add(1);
          if (i >= count) break;
          work(i);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  std::ofstream out;
  if (!spec.out_path.empty()) {
    out.open(spec.out_path, std::ios::binary);
    if (!out) throw input_error("hunt: cannot open output file " + spec.out_path);
  }

  HuntSummary summary;
  for (long long i = 0; i < count; ++i) {
    if (!records[i]) {
      ++summary.gave_up;
      continue;
    }
    const GraphRecord& r = *records[i];
    ++summary.generated;
    if (r.hypotheses_met) {
      ++summary.hypothesis_hits;
      if (r.conclusion) ++summary.conclusion_holds;
    }
    if (r.counterexample) ++summary.counterexamples;
    if (out.is_open()) out << record_to_json(r).dump() << "\n";
    if (sink) sink(r);
  }
  if (out.is_open() && !out)
    throw input_error("hunt: failed writing " + spec.out_path);
  return summary;
}

nlohmann::json summary_to_json(const HuntSummary& s) {
  return nlohmann::json{{"generated", s.generated},
                        {"gave_up", s.gave_up},
                        {"hypothesis_hits", s.hypothesis_hits},
                        {"conclusion_holds", s.conclusion_holds},
                        {"counterexamples", s.counterexamples}};
}

}  // namespace treepack
