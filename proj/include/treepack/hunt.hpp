#pragma once

#include <iosfwd>
#include <string>

#include "treepack/generate.hpp"
#include "treepack/records.hpp"

namespace treepack {

enum class TheoremSel { Main1, Main2 };

struct HuntSpec {
  GenSpec gen;
  TheoremSel theorem = TheoremSel::Main1;
  int m = 3;  // main2 parameters
  int k = 2;
  int jobs = 1;
  std::string out_path;  // empty: no report file
};

struct HuntSummary {
  long long generated = 0;
  long long gave_up = 0;
  long long hypothesis_hits = 0;
  long long conclusion_holds = 0;  // among hypothesis hits
  long long counterexamples = 0;
};

// Streams generated graphs through the selected checker. Records are
// computed per slot from (master_seed, slot), so the report (one JSON
// object per line, ordered by graph_id) is byte-identical for any job
// count. Throws on unwritable output. Optionally hands each finished
// record to `sink` (ordered by graph_id).
HuntSummary hunt(const HuntSpec& spec,
                 const std::function<void(const GraphRecord&)>& sink = nullptr);

nlohmann::json summary_to_json(const HuntSummary& s);

}  // namespace treepack
