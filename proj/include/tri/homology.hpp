#pragma once

#include <string>
#include <vector>

#include "tri/skeleton.hpp"
#include "tri/triangulation.hpp"

namespace tri {

// First homology of the underlying closed 3-manifold, as invariant factors in
// divisibility order; 0 denotes an infinite (Z) factor, and an empty list is
// the trivial group. Example: Z/2 + Z/6 + Z -> {2, 6, 0}.
struct HomologyProfile {
    std::vector<long long> invariant_factors;

    bool trivial() const { return invariant_factors.empty(); }
    std::string to_string() const;

    friend bool operator==(const HomologyProfile& a, const HomologyProfile& b) {
        return a.invariant_factors == b.invariant_factors;
    }
};

// Throws Err::NotAManifold unless the triangulation is a closed 3-manifold.
HomologyProfile homology_h1(const Triangulation& t);

namespace detail {

using Matrix = std::vector<std::vector<long long>>; // row-major, possibly empty

// Diagonal entries of the Smith normal form (nonzero ones only), each dividing
// the next.
std::vector<long long> smith_invariant_factors(Matrix m);

// Boundary maps of the quotient cell structure: d1 is V x E, d2 is E x F.
// Column j of d1 is the boundary of edge class j (head - tail, using the
// orientation of the class representative); column j of d2 is the boundary of
// face class j expanded over edge classes with signs.
void boundary_matrices(const Triangulation& t, const Skeleton& sk, Matrix& d1, Matrix& d2);

} // namespace detail

} // namespace tri
