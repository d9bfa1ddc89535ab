#include "tri/skeleton.hpp"

#include <algorithm>
#include <map>

#include "tri/dsu.hpp"

namespace tri {

using detail::EDGE_ENDS;
using detail::EDGE_OF;

namespace {

// Corner slot (t, v, w): the corner of the vertex-link triangle at vertex v of
// tetrahedron t that touches edge vw. 12 slots per tetrahedron.
inline int corner_slot(int t, int v, int w) {
    return 12 * t + 3 * v + (w > v ? w - 1 : w);
}

// Numbers classes by smallest slot; returns the number of classes.
template <typename FindRoot>
int number_classes(int slots, FindRoot find_root, std::vector<int>& out) {
    out.assign(slots, -1);
    std::vector<int> root_to_class(slots, -1);
    int next = 0;
    for (int s = 0; s < slots; ++s) {
        int r = find_root(s);
        if (root_to_class[r] < 0) root_to_class[r] = next++;
        out[s] = root_to_class[r];
    }
    return next;
}

} // namespace

int Skeleton::min_edge_degree() const {
    return *std::min_element(edge_degree.begin(), edge_degree.end());
}

Skeleton skeleton(const Triangulation& tri) {
    const int n = tri.size();
    Skeleton sk;
    sk.n = n;

    AggDSU<0> vertices(4 * n, {});
    ParityDSU edges(6 * n);
    AggDSU<0> corners(12 * n, {});
    std::vector<char> edge_slot_invalid(6 * n, 0); // marks one slot of each offending class

    for (int t = 0; t < n; ++t) {
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = tri.gluing(t, f);
            const Perm4 p = g.perm;
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                vertices.unite(4 * t + v, 4 * g.tet + p[v]);
                for (int w = 0; w < 4; ++w) {
                    if (w == f || w == v) continue;
                    corners.unite(corner_slot(t, v, w), corner_slot(g.tet, p[v], p[w]));
                    if (w > v) {
                        int rel = p[v] > p[w];
                        if (!edges.unite(6 * t + EDGE_OF[v][w], 6 * g.tet + EDGE_OF[p[v]][p[w]], rel))
                            edge_slot_invalid[6 * t + EDGE_OF[v][w]] = 1;
                    }
                }
            }
        }
    }

    sk.vertex_count = number_classes(4 * n, [&](int s) { return vertices.find(s); }, sk.vertex_class);
    sk.edge_count = number_classes(6 * n, [&](int s) { return edges.find(s).first; }, sk.edge_class);

    // Faces pair off: class per unordered pair of glued face slots.
    sk.face_class.assign(4 * n, -1);
    int next_face = 0;
    for (int t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f) {
            if (sk.face_class[4 * t + f] >= 0) continue;
            const Gluing& g = tri.gluing(t, f);
            sk.face_class[4 * t + f] = next_face;
            sk.face_class[4 * g.tet + g.perm[f]] = next_face;
            ++next_face;
        }
    sk.face_count = next_face;

    sk.vertex_degree.assign(sk.vertex_count, 0);
    for (int s = 0; s < 4 * n; ++s) ++sk.vertex_degree[sk.vertex_class[s]];

    sk.edge_degree.assign(sk.edge_count, 0);
    sk.edge_valid.assign(sk.edge_count, 1);
    for (int s = 0; s < 6 * n; ++s) {
        ++sk.edge_degree[sk.edge_class[s]];
        if (edge_slot_invalid[s]) sk.edge_valid[sk.edge_class[s]] = 0;
    }
    for (char v : sk.edge_valid)
        if (!v) sk.all_edges_valid = false;

    // Slot parity relative to the class representative (smallest slot).
    sk.edge_parity.assign(6 * n, 0);
    {
        std::vector<int> rep_parity(sk.edge_count, -1);
        for (int s = 0; s < 6 * n; ++s) {
            auto [root, par] = edges.find(s);
            (void)root;
            int c = sk.edge_class[s];
            if (rep_parity[c] < 0) rep_parity[c] = par; // first slot in class = representative
            sk.edge_parity[s] = static_cast<char>(par ^ rep_parity[c]);
        }
    }

    // Vertex links: per class, F = #corner triangles (= vertex degree),
    // E = 3F/2 (all triangle sides are glued in pairs since the triangulation
    // is closed and no face is glued to itself), V = #corner classes.
    {
        std::vector<int> link_vertices(sk.vertex_count, 0);
        std::vector<char> seen_corner_root(12 * n, 0);
        for (int t = 0; t < n; ++t)
            for (int v = 0; v < 4; ++v)
                for (int w = 0; w < 4; ++w) {
                    if (w == v) continue;
                    int r = corners.find(corner_slot(t, v, w));
                    if (seen_corner_root[r]) continue;
                    seen_corner_root[r] = 1;
                    ++link_vertices[sk.vertex_class[4 * t + v]];
                }
        sk.link_euler.assign(sk.vertex_count, 0);
        for (int c = 0; c < sk.vertex_count; ++c) {
            sk.link_euler[c] = link_vertices[c] - sk.vertex_degree[c] / 2;
            if (sk.link_euler[c] != 2) sk.all_links_spheres = false;
        }
    }

    return sk;
}

bool is_closed_3manifold(const Triangulation& t) {
    Skeleton sk = skeleton(t);
    return sk.is_manifold();
}

} // namespace tri
