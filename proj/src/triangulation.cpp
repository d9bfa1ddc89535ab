#include "tri/triangulation.hpp"

#include <string>

namespace tri {

namespace {

void check_involution(const GluingTable& table) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw TriError(Err::BadInput, "empty triangulation");
    for (int t = 0; t < n; ++t) {
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = table[t][f];
            if (g.tet < 0)
                throw TriError(Err::NotClosed, "face " + std::to_string(t) + ":" +
                                                   std::to_string(f) + " is unglued");
            if (g.tet >= n)
                throw TriError(Err::BadInput, "gluing target out of range");
            int f2 = g.perm[f];
            if (g.tet == t && f2 == f)
                throw TriError(Err::InvolutionViolation,
                               "face " + std::to_string(t) + ":" + std::to_string(f) +
                                   " is glued to itself");
            const Gluing& back = table[g.tet][f2];
            if (back.tet != t || back.perm != g.perm.inverse())
                throw TriError(Err::InvolutionViolation,
                               "gluing of face " + std::to_string(t) + ":" + std::to_string(f) +
                                   " is not mirrored by its partner");
        }
    }
}

void check_connected(const GluingTable& table) {
    const int n = static_cast<int>(table.size());
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int f = 0; f < 4; ++f) {
            int u = table[t][f].tet;
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    if (reached != n) throw TriError(Err::Disconnected, "triangulation is not connected");
}

} // namespace

Triangulation Triangulation::from_table(GluingTable table) {
    check_involution(table);
    check_connected(table);
    return Triangulation(std::move(table));
}

Triangulation Triangulation::relabel(const std::vector<int>& tet_order,
                                     const std::vector<Perm4>& vertex_perms) const {
    const int n = size();
    if (static_cast<int>(tet_order.size()) != n || static_cast<int>(vertex_perms.size()) != n)
        throw TriError(Err::BadInput, "relabel arguments must have one entry per tetrahedron");
    std::vector<char> hit(n, 0);
    for (int t = 0; t < n; ++t) {
        if (tet_order[t] < 0 || tet_order[t] >= n || hit[tet_order[t]])
            throw TriError(Err::BadInput, "tet_order is not a permutation");
        hit[tet_order[t]] = 1;
    }
    GluingTable out(n);
    for (int t = 0; t < n; ++t) {
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = table_[t][f];
            int nt = tet_order[t];
            int nf = vertex_perms[t][f];
            out[nt][nf].tet = tet_order[g.tet];
            out[nt][nf].perm = vertex_perms[g.tet] * g.perm * vertex_perms[t].inverse();
        }
    }
    return from_table(std::move(out));
}

Triangulation build_triangulation(const std::vector<GluingEntry>& entries) {
    int n = 0;
    for (const GluingEntry& e : entries) n = std::max(n, e.tet + 1);
    if (n == 0) throw TriError(Err::BadInput, "no gluing entries");
    GluingTable table(n);
    std::vector<std::array<char, 4>> set(n, {0, 0, 0, 0});
    for (const GluingEntry& e : entries) {
        if (e.tet < 0 || e.face < 0 || e.face > 3 || e.adj_tet < 0 || e.adj_tet >= n)
            throw TriError(Err::BadInput, "gluing entry out of range");
        if (set[e.tet][e.face])
            throw TriError(Err::BadInput, "face " + std::to_string(e.tet) + ":" +
                                              std::to_string(e.face) + " glued twice");
        set[e.tet][e.face] = 1;
        table[e.tet][e.face] = {e.adj_tet, e.perm};
    }
    return Triangulation::from_table(std::move(table));
}

Triangulation canonical_sphere(int n) {
    if (n == 2) {
        GluingTable table(2);
        for (int f = 0; f < 4; ++f) {
            table[0][f] = {1, Perm4()};
            table[1][f] = {0, Perm4()};
        }
        return Triangulation::from_table(std::move(table));
    }
    if (n == 1) {
        // One tetrahedron, one vertex: faces 0 and 1 are swapped onto each
        // other, faces 2 and 3 are glued with a cyclic twist. This is the
        // table of the unique one-vertex entry in the size-1 sphere census
        // (checked by the test suite).
        GluingTable table(1);
        Perm4 p = Perm4::from_images(1, 0, 2, 3); // face 0 -> face 1
        Perm4 q = Perm4::from_images(1, 2, 3, 0); // face 2 -> face 3
        table[0][0] = {0, p};
        table[0][1] = {0, p.inverse()};
        table[0][2] = {0, q};
        table[0][3] = {0, q.inverse()};
        return Triangulation::from_table(std::move(table));
    }
    throw TriError(Err::UnsupportedSize, "canonical_sphere supports sizes 1 and 2");
}

} // namespace tri
