#pragma once

#include <string>
#include <vector>

#include "tri/triangulation.hpp"

namespace tri {

enum class MoveKind { Move23, Move32, Move14, Move41 };

// A legal move site, identified by a deterministic representative:
//   Move23: sub = face f0 of tet; (tet, f0) is the lexicographically smaller
//           side of a face joining two distinct tetrahedra.
//   Move32: sub = edge index 0..5; (tet, sub) is the smallest slot of a
//           valid degree-3 edge class meeting three distinct tetrahedra.
//   Move14: sub = 0; tet is the tetrahedron to subdivide.
//   Move41: sub = vertex 0..3; (tet, sub) is the smallest slot of a
//           degree-4 vertex class matching the inverse 1-4 pattern.
struct MoveSite {
    MoveKind kind;
    int tet = 0;
    int sub = 0;

    friend bool operator==(const MoveSite& a, const MoveSite& b) {
        return a.kind == b.kind && a.tet == b.tet && a.sub == b.sub;
    }
};

// All legal sites of one kind, ordered by (tet, sub). A 2-3 site is listed
// only if its result passes is_closed_3manifold (safety net; no failing case
// is known, but the move definition alone does not rule it out).
std::vector<MoveSite> list_moves(const Triangulation& t, MoveKind kind);

// Applies one move. New tetrahedra are appended at the highest indices and
// surviving tetrahedra are compacted downward, preserving relative order.
// The replacement complexes use fixed labelling conventions, so the output
// table is fully determined by (t, site). Throws Err::IllegalMove if the
// site does not satisfy its legality condition on t.
Triangulation apply_move(const Triangulation& t, const MoveSite& site);

// Deduplicated, sorted signatures of all results of single moves of the
// given kinds: the Pachner-graph neighbours of t (restricted-graph
// neighbours for kinds {Move23, Move32}).
std::vector<std::string> neighbors(const Triangulation& t, const std::vector<MoveKind>& kinds);

// Sorted signatures of all endpoints of (2-3, 2-3, 3-2, 3-2) move sequences.
// Intermediate stages are deduplicated by signature, keeping the candidate
// set O(n^4). Every endpoint has the size and vertex count of t.
std::vector<std::string> jumps(const Triangulation& t);

struct SimplifyResult {
    Triangulation result;
    std::vector<std::string> trace;
};

// Applies the first available 3-2 (then 4-1) move repeatedly; when stuck,
// searches up to max_rounds breadth-first rounds of jumps for a
// configuration admitting a 3-2 and continues from there. Returns the last
// reduced triangulation (the input if no reduction was ever found).
SimplifyResult greedy_simplify(const Triangulation& t, int max_rounds);

} // namespace tri
