#include "tri/moves.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <unordered_set>

#include "tri/isosig.hpp"
#include "tri/skeleton.hpp"

namespace tri {

namespace {

const Perm4 SWAP01 = Perm4::transposition(0, 1);

// The 2-3 move replaces tetrahedra t0, t1 (joined along face f0 of t0) by
// three tetrahedra N_0, N_1, N_2 arranged around a new central edge. With
// the base triangle of the bipyramid written b[0] < b[1] < b[2] (in t0's
// labels), tetrahedron N_k carries
//   label 0 = base b[k], label 1 = base b[k+1],
//   label 2 = the apex of t0 (vertex f0), label 3 = the apex of t1,
// so the central edge is 23 in every N_k, with degree three. Internally
// face 0 of N_k is glued to face 1 of N_{k+1} by the transposition (0 1);
// boundary faces of the bipyramid keep their old gluings, rerouted through
// the label maps below. New tetrahedra are appended after the survivors.
Triangulation apply_23_raw(const Triangulation& t, int t0, int f0) {
    const Gluing& g = t.gluing(t0, f0);
    const int t1 = g.tet;
    const Perm4 p01 = g.perm;
    const int n = t.size();

    std::array<int, 3> b{};
    for (int v = 0, i = 0; v < 4; ++v)
        if (v != f0) b[i++] = v;

    auto compact = [&](int s) { return s - (s > t0) - (s > t1); };
    const int base = n - 2; // N_k = base + k

    GluingTable tbl(n + 1);
    for (int s = 0; s < n; ++s) {
        if (s == t0 || s == t1) continue;
        for (int f = 0; f < 4; ++f) {
            const Gluing& og = t.gluing(s, f);
            if (og.tet != t0 && og.tet != t1)
                tbl[compact(s)][f] = {compact(og.tet), og.perm};
        }
    }

    for (int k = 0; k < 3; ++k) {
        tbl[base + k][0] = {base + (k + 1) % 3, SWAP01};
        tbl[base + (k + 1) % 3][1] = {base + k, SWAP01};
    }

    // Per boundary face: (old tet, old face) -> (new tet, new face, mu),
    // where mu maps the new tetrahedron's labels to the old tetrahedron's.
    struct BoundaryFace {
        int new_tet, new_face;
        Perm4 mu;
    };
    std::map<std::pair<int, int>, BoundaryFace> bmap;
    for (int k = 0; k < 3; ++k) {
        Perm4 mu0 = Perm4::from_images(b[k], b[(k + 1) % 3], f0, b[(k + 2) % 3]);
        Perm4 mu1 = Perm4::from_images(p01[b[k]], p01[b[(k + 1) % 3]], p01[b[(k + 2) % 3]],
                                       p01[f0]);
        bmap[{t0, b[(k + 2) % 3]}] = {base + k, 3, mu0};
        bmap[{t1, p01[b[(k + 2) % 3]]}] = {base + k, 2, mu1};
    }

    for (const auto& [slot, nf] : bmap) {
        const Gluing& og = t.gluing(slot.first, slot.second);
        if (og.tet == t0 || og.tet == t1) {
            const BoundaryFace& partner = bmap.at({og.tet, og.perm[slot.second]});
            tbl[nf.new_tet][nf.new_face] = {partner.new_tet,
                                            partner.mu.inverse() * og.perm * nf.mu};
        } else {
            tbl[nf.new_tet][nf.new_face] = {compact(og.tet), og.perm * nf.mu};
            tbl[compact(og.tet)][og.perm[slot.second]] = {nf.new_tet,
                                                          nf.mu.inverse() * og.perm.inverse()};
        }
    }
    return Triangulation::from_table(std::move(tbl));
}

// A matched 3-2 pattern: tets[k] relabelled by psi[k] becomes the N_k of the
// 2-3 replacement complex above (central edge at 23, face 0 of N_k glued to
// face 1 of N_{k+1} by (0 1)).
struct Pattern32 {
    std::array<int, 3> tets;
    std::array<Perm4, 3> psi; // old labels -> pattern labels
};

std::optional<Pattern32> match_32(const Triangulation& t, int tet, int edge) {
    const int a = detail::EDGE_ENDS[edge][0];
    const int b = detail::EDGE_ENDS[edge][1];
    std::array<int, 2> other{};
    for (int v = 0, i = 0; v < 4; ++v)
        if (v != a && v != b) other[i++] = v;

    for (int ea = 0; ea < 2; ++ea)
        for (int eo = 0; eo < 2; ++eo) {
            std::array<int, 4> img{};
            img[a] = ea ? 3 : 2;
            img[b] = ea ? 2 : 3;
            img[other[0]] = eo ? 1 : 0;
            img[other[1]] = eo ? 0 : 1;
            Pattern32 pat;
            pat.tets[0] = tet;
            pat.psi[0] = Perm4::from_images(img[0], img[1], img[2], img[3]);

            bool ok = true;
            for (int k = 0; k < 2 && ok; ++k) {
                const Gluing& g = t.gluing(pat.tets[k], pat.psi[k].inverse()[0]);
                if (g.tet == pat.tets[0] || (k == 1 && g.tet == pat.tets[1])) {
                    ok = false;
                    break;
                }
                pat.tets[k + 1] = g.tet;
                pat.psi[k + 1] = SWAP01 * pat.psi[k] * g.perm.inverse();
            }
            if (!ok) continue;
            const Gluing& back = t.gluing(pat.tets[2], pat.psi[2].inverse()[0]);
            if (back.tet != pat.tets[0]) continue;
            if (!(SWAP01 * pat.psi[2] * back.perm.inverse() == pat.psi[0])) continue;
            return pat;
        }
    return std::nullopt;
}

// Inverse of apply_23_raw: the matched cluster is replaced by P0 (apex of
// t0's side at label 3) and P1 (apex of t1's side at label 3), base vertices
// at labels 0,1,2, glued to each other along face 3 by the identity.
Triangulation apply_32_raw(const Triangulation& t, const Pattern32& pat) {
    const int n = t.size();
    auto in_cluster = [&](int s) {
        return s == pat.tets[0] || s == pat.tets[1] || s == pat.tets[2];
    };
    auto compact = [&](int s) {
        return s - (s > pat.tets[0]) - (s > pat.tets[1]) - (s > pat.tets[2]);
    };
    const int p0 = n - 3, p1 = n - 2;

    GluingTable tbl(n - 1);
    for (int s = 0; s < n; ++s) {
        if (in_cluster(s)) continue;
        for (int f = 0; f < 4; ++f) {
            const Gluing& og = t.gluing(s, f);
            if (!in_cluster(og.tet)) tbl[compact(s)][f] = {compact(og.tet), og.perm};
        }
    }

    tbl[p0][3] = {p1, Perm4()};
    tbl[p1][3] = {p0, Perm4()};

    struct BoundaryFace {
        int new_tet, new_face;
        Perm4 tau; // new labels -> old labels
    };
    std::map<std::pair<int, int>, BoundaryFace> bmap;
    for (int k = 0; k < 3; ++k) {
        // nu maps pattern N_k labels to P0 labels, nu' to P1 labels.
        Perm4 nu0 = Perm4::from_images(k, (k + 1) % 3, 3, (k + 2) % 3);
        Perm4 nu1 = Perm4::from_images(k, (k + 1) % 3, (k + 2) % 3, 3);
        Perm4 inv = pat.psi[k].inverse();
        bmap[{pat.tets[k], inv[3]}] = {p0, (k + 2) % 3, inv * nu0.inverse()};
        bmap[{pat.tets[k], inv[2]}] = {p1, (k + 2) % 3, inv * nu1.inverse()};
    }

    for (const auto& [slot, nf] : bmap) {
        const Gluing& og = t.gluing(slot.first, slot.second);
        if (in_cluster(og.tet)) {
            const BoundaryFace& partner = bmap.at({og.tet, og.perm[slot.second]});
            tbl[nf.new_tet][nf.new_face] = {partner.new_tet,
                                            partner.tau.inverse() * og.perm * nf.tau};
        } else {
            tbl[nf.new_tet][nf.new_face] = {compact(og.tet), og.perm * nf.tau};
            tbl[compact(og.tet)][og.perm[slot.second]] = {nf.new_tet,
                                                          nf.tau.inverse() * og.perm.inverse()};
        }
    }
    return Triangulation::from_table(std::move(tbl));
}

// The 1-4 move replaces tetrahedron t0 by M_0..M_3 meeting at a new internal
// vertex. M_v keeps t0's labels except that the new vertex sits at label v,
// so its face v is t0's face v and keeps the old outer gluing verbatim.
// Internally face w of M_v is glued to face v of M_w by the transposition
// (v w).
Triangulation apply_14_raw(const Triangulation& t, int t0) {
    const int n = t.size();
    auto compact = [&](int s) { return s - (s > t0); };
    const int base = n - 1; // M_v = base + v

    GluingTable tbl(n + 3);
    for (int s = 0; s < n; ++s) {
        if (s == t0) continue;
        for (int f = 0; f < 4; ++f) {
            const Gluing& og = t.gluing(s, f);
            if (og.tet != t0) tbl[compact(s)][f] = {compact(og.tet), og.perm};
        }
    }

    for (int v = 0; v < 4; ++v) {
        const Gluing& og = t.gluing(t0, v);
        if (og.tet == t0) {
            tbl[base + v][v] = {base + og.perm[v], og.perm};
        } else {
            tbl[base + v][v] = {compact(og.tet), og.perm};
            tbl[compact(og.tet)][og.perm[v]] = {base + v, og.perm.inverse()};
        }
        for (int w = 0; w < 4; ++w)
            if (w != v) tbl[base + v][w] = {base + w, Perm4::transposition(v, w)};
    }
    return Triangulation::from_table(std::move(tbl));
}

// A matched 4-1 pattern: tets[v] relabelled by psi[v] becomes the M_v of the
// 1-4 replacement complex above, with the shared degree-4 vertex at label v
// of M_v.
struct Pattern41 {
    std::array<int, 4> tets;
    std::array<Perm4, 4> psi; // old labels -> pattern labels
};

std::optional<Pattern41> match_41(const Triangulation& t, int tet, int corner) {
    std::array<int, 3> rest{};
    for (int v = 0, i = 0; v < 4; ++v)
        if (v != corner) rest[i++] = v;

    std::array<std::array<int, 3>, 6> assigns = {{{1, 2, 3}, {1, 3, 2}, {2, 1, 3},
                                                  {2, 3, 1}, {3, 1, 2}, {3, 2, 1}}};
    for (const auto& as : assigns) {
        std::array<int, 4> img{};
        img[corner] = 0;
        for (int i = 0; i < 3; ++i) img[rest[i]] = as[i];
        Pattern41 pat;
        pat.tets[0] = tet;
        pat.psi[0] = Perm4::from_images(img[0], img[1], img[2], img[3]);

        bool ok = true;
        for (int w = 1; w < 4 && ok; ++w) {
            const Gluing& g = t.gluing(tet, pat.psi[0].inverse()[w]);
            pat.tets[w] = g.tet;
            pat.psi[w] = Perm4::transposition(0, w) * pat.psi[0] * g.perm.inverse();
            for (int u = 0; u < w; ++u)
                if (pat.tets[u] == pat.tets[w]) ok = false;
        }
        if (!ok) continue;
        for (int a = 1; a < 4 && ok; ++a)
            for (int bb = a + 1; bb < 4 && ok; ++bb) {
                const Gluing& g = t.gluing(pat.tets[a], pat.psi[a].inverse()[bb]);
                if (g.tet != pat.tets[bb] ||
                    !(pat.psi[bb] * g.perm * pat.psi[a].inverse() == Perm4::transposition(a, bb)))
                    ok = false;
            }
        if (ok) return pat;
    }
    return std::nullopt;
}

Triangulation apply_41_raw(const Triangulation& t, const Pattern41& pat) {
    const int n = t.size();
    auto cluster_index = [&](int s) {
        for (int v = 0; v < 4; ++v)
            if (pat.tets[v] == s) return v;
        return -1;
    };
    auto compact = [&](int s) {
        int d = 0;
        for (int v = 0; v < 4; ++v) d += (s > pat.tets[v]);
        return s - d;
    };
    const int nt = n - 4; // the single replacement tetrahedron

    GluingTable tbl(n - 3);
    for (int s = 0; s < n; ++s) {
        if (cluster_index(s) >= 0) continue;
        for (int f = 0; f < 4; ++f) {
            const Gluing& og = t.gluing(s, f);
            if (cluster_index(og.tet) < 0) tbl[compact(s)][f] = {compact(og.tet), og.perm};
        }
    }

    for (int v = 0; v < 4; ++v) {
        int fold = pat.psi[v].inverse()[v];
        const Gluing& og = t.gluing(pat.tets[v], fold);
        int x = cluster_index(og.tet);
        if (x >= 0) {
            if (og.perm[fold] != pat.psi[x].inverse()[x])
                throw TriError(Err::IllegalMove, "vertex neighbourhood is not a 1-4 pattern");
            tbl[nt][v] = {nt, pat.psi[x] * og.perm * pat.psi[v].inverse()};
        } else {
            tbl[nt][v] = {compact(og.tet), og.perm * pat.psi[v].inverse()};
            tbl[compact(og.tet)][og.perm[fold]] = {nt, pat.psi[v] * og.perm.inverse()};
        }
    }
    return Triangulation::from_table(std::move(tbl));
}

// Slots of the edge (vertex) class containing the given slot, ascending.
std::vector<int> class_slots(const std::vector<int>& cls, int slot, int per_tet_count) {
    std::vector<int> out;
    for (int s = 0; s < static_cast<int>(cls.size()); ++s)
        if (cls[s] == cls[slot]) out.push_back(s);
    (void)per_tet_count;
    return out;
}

bool distinct_tets(const std::vector<int>& slots, int per_tet) {
    for (std::size_t i = 0; i + 1 < slots.size(); ++i)
        for (std::size_t j = i + 1; j < slots.size(); ++j)
            if (slots[i] / per_tet == slots[j] / per_tet) return false;
    return true;
}

} // namespace

std::vector<MoveSite> list_moves(const Triangulation& t, MoveKind kind) {
    const int n = t.size();
    std::vector<MoveSite> out;

    switch (kind) {
    case MoveKind::Move23:
        for (int t0 = 0; t0 < n; ++t0)
            for (int f0 = 0; f0 < 4; ++f0) {
                const Gluing& g = t.gluing(t0, f0);
                if (g.tet == t0) continue;
                if (std::make_pair(g.tet, g.perm[f0]) < std::make_pair(t0, f0)) continue;
                if (is_closed_3manifold(apply_23_raw(t, t0, f0)))
                    out.push_back({MoveKind::Move23, t0, f0});
            }
        break;

    case MoveKind::Move32: {
        Skeleton sk = skeleton(t);
        std::vector<char> seen(sk.edge_count, 0);
        for (int slot = 0; slot < 6 * n; ++slot) {
            int c = sk.edge_class[slot];
            if (seen[c]) continue;
            seen[c] = 1;
            if (sk.edge_degree[c] != 3 || !sk.edge_valid[c]) continue;
            std::vector<int> slots = class_slots(sk.edge_class, slot, 6);
            if (!distinct_tets(slots, 6)) continue;
            if (match_32(t, slot / 6, slot % 6))
                out.push_back({MoveKind::Move32, slot / 6, slot % 6});
        }
        break;
    }

    case MoveKind::Move14:
        for (int t0 = 0; t0 < n; ++t0) out.push_back({MoveKind::Move14, t0, 0});
        break;

    case MoveKind::Move41: {
        Skeleton sk = skeleton(t);
        std::vector<char> seen(sk.vertex_count, 0);
        for (int slot = 0; slot < 4 * n; ++slot) {
            int c = sk.vertex_class[slot];
            if (seen[c]) continue;
            seen[c] = 1;
            if (sk.vertex_degree[c] != 4) continue;
            std::vector<int> slots = class_slots(sk.vertex_class, slot, 4);
            if (!distinct_tets(slots, 4)) continue;
            if (match_41(t, slot / 4, slot % 4))
                out.push_back({MoveKind::Move41, slot / 4, slot % 4});
        }
        break;
    }
    }
    return out;
}

Triangulation apply_move(const Triangulation& t, const MoveSite& site) {
    if (site.tet < 0 || site.tet >= t.size())
        throw TriError(Err::IllegalMove, "move site tetrahedron out of range");

    switch (site.kind) {
    case MoveKind::Move23: {
        if (site.sub < 0 || site.sub >= 4)
            throw TriError(Err::IllegalMove, "face index out of range");
        if (t.adjacent_tet(site.tet, site.sub) == site.tet)
            throw TriError(Err::IllegalMove, "2-3 move needs two distinct tetrahedra");
        Triangulation result = apply_23_raw(t, site.tet, site.sub);
        if (!is_closed_3manifold(result))
            throw TriError(Err::IllegalMove, "2-3 move result is not a closed 3-manifold");
        return result;
    }
    case MoveKind::Move32: {
        if (site.sub < 0 || site.sub >= 6)
            throw TriError(Err::IllegalMove, "edge index out of range");
        Skeleton sk = skeleton(t);
        int c = sk.edge_class[6 * site.tet + site.sub];
        if (sk.edge_degree[c] != 3 || !sk.edge_valid[c])
            throw TriError(Err::IllegalMove, "3-2 move needs a valid degree-3 edge");
        auto pat = match_32(t, site.tet, site.sub);
        if (!pat) throw TriError(Err::IllegalMove, "edge neighbourhood is not a 2-3 pattern");
        return apply_32_raw(t, *pat);
    }
    case MoveKind::Move14:
        return apply_14_raw(t, site.tet);
    case MoveKind::Move41: {
        if (site.sub < 0 || site.sub >= 4)
            throw TriError(Err::IllegalMove, "vertex index out of range");
        Skeleton sk = skeleton(t);
        int c = sk.vertex_class[4 * site.tet + site.sub];
        if (sk.vertex_degree[c] != 4)
            throw TriError(Err::IllegalMove, "4-1 move needs a degree-4 vertex");
        auto pat = match_41(t, site.tet, site.sub);
        if (!pat) throw TriError(Err::IllegalMove, "vertex neighbourhood is not a 1-4 pattern");
        return apply_41_raw(t, *pat);
    }
    }
    throw TriError(Err::IllegalMove, "unknown move kind");
}

std::vector<std::string> neighbors(const Triangulation& t, const std::vector<MoveKind>& kinds) {
    std::unordered_set<std::string> seen;
    for (MoveKind kind : kinds)
        for (const MoveSite& site : list_moves(t, kind))
            seen.insert(isosig(apply_move(t, site)));
    std::vector<std::string> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// One expansion stage for jump enumeration: all single moves of one kind
// from every input, deduplicated by signature.
std::vector<Triangulation> jump_stage(const std::vector<Triangulation>& in, MoveKind kind,
                                      std::vector<std::string>* sigs_out) {
    std::unordered_set<std::string> seen;
    std::vector<Triangulation> out;
    for (const Triangulation& t : in)
        for (const MoveSite& site : list_moves(t, kind)) {
            Triangulation r = apply_move(t, site);
            std::string sig = isosig(r);
            if (seen.insert(sig).second) {
                out.push_back(std::move(r));
                if (sigs_out) sigs_out->push_back(std::move(sig));
            }
        }
    return out;
}

} // namespace

std::vector<std::string> jumps(const Triangulation& t) {
    std::vector<Triangulation> cur{t};
    cur = jump_stage(cur, MoveKind::Move23, nullptr);
    cur = jump_stage(cur, MoveKind::Move23, nullptr);
    cur = jump_stage(cur, MoveKind::Move32, nullptr);
    std::vector<std::string> sigs;
    jump_stage(cur, MoveKind::Move32, &sigs);
    std::sort(sigs.begin(), sigs.end());
    return sigs;
}

SimplifyResult greedy_simplify(const Triangulation& t, int max_rounds) {
    SimplifyResult res{t, {}};
    for (;;) {
        std::vector<MoveSite> down = list_moves(res.result, MoveKind::Move32);
        MoveKind kind = MoveKind::Move32;
        if (down.empty()) {
            down = list_moves(res.result, MoveKind::Move41);
            kind = MoveKind::Move41;
        }
        if (!down.empty()) {
            const MoveSite& site = down.front();
            res.result = apply_move(res.result, site);
            res.trace.push_back(std::string(kind == MoveKind::Move32 ? "3-2" : "4-1") +
                                " tet " + std::to_string(site.tet) + " sub " +
                                std::to_string(site.sub) + " -> size " +
                                std::to_string(res.result.size()));
            continue;
        }

        // Stuck: breadth-first over jumps, looking for any configuration
        // that admits a 3-2 move.
        std::unordered_set<std::string> visited{isosig(res.result)};
        std::vector<std::string> frontier{isosig(res.result)};
        bool moved = false;
        for (int round = 1; round <= max_rounds && !frontier.empty() && !moved; ++round) {
            std::vector<std::string> next;
            for (const std::string& sig : frontier)
                for (const std::string& target : jumps(decode(sig)))
                    if (visited.insert(target).second) next.push_back(target);
            std::sort(next.begin(), next.end());
            for (const std::string& sig : next) {
                Triangulation cand = decode(sig);
                if (!list_moves(cand, MoveKind::Move32).empty()) {
                    res.trace.push_back("jumps x" + std::to_string(round) + " -> " + sig);
                    res.result = std::move(cand);
                    moved = true;
                    break;
                }
            }
            frontier = std::move(next);
        }
        if (!moved) return res;
    }
}

} // namespace tri
