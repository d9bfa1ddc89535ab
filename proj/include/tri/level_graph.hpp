#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tri/census.hpp"

namespace tri {

// Result of the expanding component search over one level of the restricted
// Pachner graph. components[0] counts the connected components induced by
// the level nodes alone; components[k] counts them again after k expansion
// sweeps, where sweep k adds every node k levels higher reachable by 2-3
// moves and all arcs into it. height is set to the number of sweeps needed
// if a single component was reached, and empty if the sweep budget ran out
// first.
struct HeightReport {
    int level = 0;
    std::vector<long long> components;
    std::optional<int> height;
    bool two_phase = false;
};

HeightReport height_bound(int level, const std::vector<std::string>& level_nodes,
                          int max_height = 8, int jobs = 1);

// Memory-light variant for heights up to 2: one full expansion sweep, then
// a second phase that walks 2-3 + 3-2 move pairs out of each first-sweep
// node and records only the arcs landing back on known first-sweep nodes,
// never storing the top level. Agrees with height_bound whenever both
// conclude.
HeightReport height_bound_two_phase(int level, const std::vector<std::string>& level_nodes,
                                    int jobs = 1);

// Result of the simplification length search over one level. simplifiable
// counts the nodes admitting a 3-2 move directly; remaining[k] counts the
// nodes still not known to reach such a move after k rounds of jump
// expansion. If remaining hits zero after j rounds, every node simplifies
// within length = 4*j + 1 moves.
struct LengthReport {
    int level = 0;
    long long simplifiable = 0;
    std::vector<long long> remaining;
    std::optional<int> rounds;
    std::optional<int> length;
};

LengthReport length_bound(int level, const std::vector<std::string>& level_nodes,
                          int max_rounds = 64, int jobs = 1);

// Known worst-case bound on the number of Pachner moves needed to connect
// two triangulations of the same 3-manifold with n tetrahedra each:
// 6*10^6 * n^2 * 2^(2*10^4 * n^2). The height form halves it, since a path
// of that length stays within that many 2-3 moves above its endpoints.
BigInt mijatovic_moves_bound(int tetrahedra);
BigInt mijatovic_height_bound(int tetrahedra);

} // namespace tri
