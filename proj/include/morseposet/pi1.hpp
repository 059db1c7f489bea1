#pragma once

#include "morseposet/complex.hpp"
#include "morseposet/tristate.hpp"

namespace morseposet {

/// Heuristic check that the edge-path group of a connected complex is
/// trivial: spanning-tree presentation plus bounded Tietze simplification
/// (at most 10 * |relators| rewrite steps). Triviality of the group is
/// undecidable in general, so the answer is Yes or Unknown, never No.
TriState edge_path_group_trivial(const SimplicialComplex& k);

}  // namespace morseposet
