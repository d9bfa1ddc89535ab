#pragma once

#include <vector>

#include "tri/triangulation.hpp"

namespace tri {

// Identified vertices, edges and faces of a closed triangulation, with the
// data needed for manifold recognition. Slots are
//   vertex slot  4*tet + v,
//   edge slot    6*tet + e        (edge numbering from detail::EDGE_ENDS),
//   face slot    4*tet + f.
// Classes are numbered consecutively in order of their smallest slot.
struct Skeleton {
    int n = 0;
    int vertex_count = 0;
    int edge_count = 0;
    int face_count = 0;

    std::vector<int> vertex_class; // per vertex slot
    std::vector<int> edge_class;   // per edge slot
    std::vector<int> face_class;   // per face slot

    std::vector<int> vertex_degree; // per vertex class: number of slots
    std::vector<int> edge_degree;   // per edge class: number of slots
    std::vector<char> edge_valid;   // per edge class: false if some slot is
                                    // identified with itself orientation-reversed
    std::vector<char> edge_parity;  // per edge slot: orientation relative to the
                                    // class representative (its smallest slot)
    std::vector<int> link_euler;    // per vertex class: Euler characteristic of
                                    // the boundary surface of a small neighbourhood

    bool all_edges_valid = true;
    bool all_links_spheres = true;

    // V - E + F - n; zero for every closed 3-manifold.
    int euler() const { return vertex_count - edge_count + face_count - n; }

    int min_edge_degree() const;
    bool is_one_vertex() const { return vertex_count == 1; }
    bool is_manifold() const { return all_edges_valid && all_links_spheres; }
};

Skeleton skeleton(const Triangulation& t);

// True iff every edge is valid and every vertex link is a 2-sphere, i.e. the
// quotient space is a closed 3-manifold.
bool is_closed_3manifold(const Triangulation& t);

} // namespace tri
