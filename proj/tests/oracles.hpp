#pragma once

// Slow reference implementations used to validate the library. Everything
// here recomputes its answer from the gluing table by a different route than
// the corresponding library code: isomorphism by seeded label propagation,
// tiny censuses by direct enumeration of face pairings, and first homology
// from the dual-graph group presentation.

#include <random>
#include <vector>

#include "tri/triangulation.hpp"

namespace oracle {

// True iff some relabelling of a equals b, found by propagating a seed
// assignment (image of tetrahedron 0) across gluings.
bool isomorphic(const tri::Triangulation& a, const tri::Triangulation& b);

// One representative per isomorphism class of closed 3-manifold
// triangulations with exactly n tetrahedra, n <= 2, by brute force over all
// face pairings and gluing permutations.
std::vector<tri::Triangulation> tiny_census(int n);

// Invariant factors of first homology (same convention as HomologyProfile:
// torsion factors in divisibility order, then one 0 per infinite factor),
// computed from the abelianized dual-graph presentation.
std::vector<long long> h1_invariants(const tri::Triangulation& t);

// Uniformly random relabelling: shuffled tetrahedron order, independent
// vertex permutations.
tri::Triangulation random_relabel(const tri::Triangulation& t, std::mt19937& rng);

} // namespace oracle
