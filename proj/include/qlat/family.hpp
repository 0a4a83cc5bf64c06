#pragma once

#include <vector>

#include "qlat/graph.hpp"

namespace qlat {

/**
 * All connected bridgeless multigraphs with 1..max_edges edges, one
 * representative per isomorphism class (vertex relabelings; orientation is
 * ignored). Each representative is oriented tail <= head with edge ids in
 * lexicographic (tail, head) order. The order of the result is deterministic.
 */
std::vector<OrientedMultigraph> bridgeless_family(int max_edges, bool allow_loops = true);

}  // namespace qlat
