#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tri/triangulation.hpp"

namespace tri {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

struct CensusSpec {
    int size = 1;
    bool one_vertex_only = false;
    int jobs = 1;
    // Guard against accidental huge runs: sizes above the ceiling throw
    // Err::SizeAboveCeiling unless explicitly overridden.
    int size_ceiling = 6;
    bool override_ceiling = false;
};

// Signatures of all closed 3-manifold triangulations of exactly spec.size
// tetrahedra, one per isomorphism class, sorted. Deterministic for any job
// count.
std::vector<std::string> enumerate_closed(const CensusSpec& spec);

// Number of raw gluing tables on n tetrahedra adjusted for the average
// labelling redundancy: (4n-1)!! * 6^(2n) / (n! * 24^n).
BigRational raw_gluing_count(int n);

// Leading decimal digits and exponent, as "d.dddddde+EE". Values overflow
// double quickly, so this formats from the exact integer parts.
std::string approx_scientific(const BigRational& value, int digits = 6);

struct SphereClosure {
    int max_level = 0;        // report levels 1..max_level
    int height_allowance = 0; // expansion permitted up to max_level + this
    // levels[k] holds the sorted signatures discovered at k+1 tetrahedra.
    std::vector<std::vector<std::string>> levels;
};

// All one-vertex 3-sphere triangulations with at most max_level tetrahedra,
// computed by closing a small seed set under Pachner moves inside levels
// 1..max_level+height_allowance. Levels above max_level are explored but
// not reported.
SphereClosure sphere_closure(int max_level, int height_allowance, int jobs = 1);

} // namespace tri
