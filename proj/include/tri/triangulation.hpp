#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tri/errors.hpp"
#include "tri/perm4.hpp"

namespace tri {

// One face gluing: face f of some tetrahedron is glued to face perm[f] of
// tetrahedron `tet`, with `perm` carrying vertex labels across the gluing.
// Face f is the face opposite vertex f.
struct Gluing {
    int tet = -1;
    Perm4 perm;

    friend bool operator==(const Gluing& a, const Gluing& b) {
        return a.tet == b.tet && a.perm == b.perm;
    }
};

using GluingTable = std::vector<std::array<Gluing, 4>>;

struct GluingEntry {
    int tet;
    int face;
    int adj_tet;
    Perm4 perm;
};

// A closed connected triangulation of n tetrahedra: all 4n faces are glued in
// 2n pairs. Self-identifications (two faces of one tetrahedron, or distinct
// faces along shared edges/vertices) are allowed; a face may not be glued to
// itself. Instances are immutable and always satisfy the involution condition
//   gluing(t,f) == (t',p)  =>  gluing(t',p[f]) == (t, p^-1),
// which is checked on construction together with closedness and connectedness.
class Triangulation {
public:
    // Validates and takes ownership of a complete gluing table.
    static Triangulation from_table(GluingTable table);

    int size() const { return static_cast<int>(table_.size()); }

    const Gluing& gluing(int tet, int face) const { return table_[tet][face]; }
    int adjacent_tet(int tet, int face) const { return table_[tet][face].tet; }
    Perm4 adjacent_perm(int tet, int face) const { return table_[tet][face].perm; }
    int adjacent_face(int tet, int face) const { return table_[tet][face].perm[face]; }

    const GluingTable& table() const { return table_; }

    // Relabelled copy: old tetrahedron t becomes tet_order[t], and its vertex
    // labels are mapped through vertex_perms[t].
    Triangulation relabel(const std::vector<int>& tet_order,
                          const std::vector<Perm4>& vertex_perms) const;

    friend bool operator==(const Triangulation& a, const Triangulation& b) {
        return a.table_ == b.table_;
    }

private:
    explicit Triangulation(GluingTable t) : table_(std::move(t)) {}
    GluingTable table_;
};

// Builds a triangulation from explicit entries. Every face must be covered by
// exactly one entry; entries must agree with their partner entries.
Triangulation build_triangulation(const std::vector<GluingEntry>& entries);

// The standard one-vertex one-tetrahedron sphere (n == 1) or the canonical
// two-tetrahedron sphere gluing each face of one tetrahedron to the matching
// face of the other by the identity (n == 2).
Triangulation canonical_sphere(int n);

namespace detail {

// Edge e of a tetrahedron joins EDGE_ENDS[e][0] < EDGE_ENDS[e][1];
// edges are numbered 01, 02, 03, 12, 13, 23.
constexpr std::array<std::array<int, 2>, 6> EDGE_ENDS = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

constexpr std::array<std::array<int, 4>, 4> make_edge_of() {
    std::array<std::array<int, 4>, 4> out{};
    for (int a = 0; a < 4; ++a) out[a][a] = -1;
    for (int e = 0; e < 6; ++e) {
        out[EDGE_ENDS[e][0]][EDGE_ENDS[e][1]] = e;
        out[EDGE_ENDS[e][1]][EDGE_ENDS[e][0]] = e;
    }
    return out;
}

constexpr auto EDGE_OF = make_edge_of();

} // namespace detail

} // namespace tri
