#pragma once

#include <map>
#include <vector>

#include "cellci/grid.hpp"

namespace cellci {

// Translation-normalized representative: the componentwise minimum of the
// lower-left corners is moved to (0,0). Idempotent; collections equal up to
// translation map to the same form.
// Throws std::invalid_argument("empty collection") when C is empty.
CellCollection canonical_form(const CellCollection& c);

// The representative that is minimal over all eight rotations/reflections
// followed by canonical translation; used for symmetry-reduced counting.
CellCollection d4_canonical_form(const CellCollection& c);

// Every weakly connected collection of rank 1..max_rank, exactly once up to
// translation, grown by attaching vertex-adjacent cells and deduplicated by
// canonical form. Rank-major, lexicographic within each rank.
std::vector<CellCollection> enumerate_connected(int max_rank);

// Counts per rank, optionally identifying collections up to the full
// symmetry group of the square.
std::map<int, long long> connected_counts(int max_rank, bool d4_reduce = false);

}  // namespace cellci
