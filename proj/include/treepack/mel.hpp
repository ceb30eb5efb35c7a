#pragma once

#include <string>

#include "treepack/multigraph.hpp"

namespace treepack {

// MEL text format, bit-exact:
//   line 1:  "mel <n> <m>"
//   then exactly m lines "<u> <v>" with 0-based indices.
// Lines starting with '#' and blank lines are ignored; edge ids follow the
// order of the edge lines; emitted files use '\n' and carry no comments.
// parse(emit(g)) reproduces g including edge order and ids. Parse errors
// name the offending line.
MultiGraph parse_mel(const std::string& text);
std::string emit_mel(const MultiGraph& g);

}  // namespace treepack
