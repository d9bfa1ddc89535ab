#pragma once

// Hand-checked triangulations shared across the test files.

#include "tri/triangulation.hpp"

namespace fixtures {

inline tri::Perm4 P(int a, int b, int c, int d) { return tri::Perm4::from_images(a, b, c, d); }

// Three tetrahedra, one vertex, H1 = Z/3. The table is walk-consistent:
// reading faces (0,0)..(2,3), tetrahedra appear in index order and every
// first gluing is the identity, so the table equals its own canonical
// labelling with start (0, identity).
inline tri::Triangulation sample3() {
    tri::GluingTable t(3);
    t[0][0] = {0, P(3, 1, 2, 0)};
    t[0][1] = {1, P(0, 1, 2, 3)};
    t[0][2] = {2, P(0, 1, 2, 3)};
    t[0][3] = {0, P(3, 1, 2, 0)};
    t[1][0] = {2, P(1, 2, 3, 0)};
    t[1][1] = {0, P(0, 1, 2, 3)};
    t[1][2] = {1, P(0, 1, 3, 2)};
    t[1][3] = {1, P(0, 1, 3, 2)};
    t[2][0] = {2, P(3, 0, 1, 2)};
    t[2][1] = {1, P(3, 0, 1, 2)};
    t[2][2] = {0, P(0, 1, 2, 3)};
    t[2][3] = {2, P(1, 2, 3, 0)};
    return tri::Triangulation::from_table(std::move(t));
}

inline const char* SAMPLE3_SIG = "dagagbacabjbsaacjbsccccaa";

// Closed but with an edge identified with itself in reverse: a valid gluing
// table whose quotient is not a manifold.
inline tri::Triangulation bad_edge() {
    tri::GluingTable t(1);
    tri::Perm4 a = P(1, 0, 2, 3);
    tri::Perm4 b = P(0, 2, 3, 1);
    t[0][0] = {0, a};
    t[0][1] = {0, a.inverse()};
    t[0][2] = {0, b};
    t[0][3] = {0, b.inverse()};
    return tri::Triangulation::from_table(std::move(t));
}

// All edges valid but one vertex link is not a sphere.
inline tri::Triangulation bad_link() {
    tri::GluingTable t(1);
    tri::Perm4 a = P(1, 2, 0, 3);
    tri::Perm4 b = P(0, 2, 3, 1);
    t[0][0] = {0, a};
    t[0][1] = {0, a.inverse()};
    t[0][2] = {0, b};
    t[0][3] = {0, b.inverse()};
    return tri::Triangulation::from_table(std::move(t));
}

} // namespace fixtures
