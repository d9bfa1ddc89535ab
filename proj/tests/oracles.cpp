#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>

#include "tri/skeleton.hpp"

namespace oracle {

using tri::Gluing;
using tri::GluingTable;
using tri::Perm4;
using tri::Triangulation;

namespace {

// Tries to extend the seed phi(0) = (tet0, perm0) to a full isomorphism
// a -> b by walking a's gluings. Returns false on any clash.
bool try_seed(const Triangulation& a, const Triangulation& b, int tet0, Perm4 perm0) {
    const int n = a.size();
    std::vector<int> img_tet(n, -1);
    std::vector<Perm4> img_perm(n);
    std::vector<char> used(n, 0);
    img_tet[0] = tet0;
    img_perm[0] = perm0;
    used[tet0] = 1;

    std::vector<int> stack = {0};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int f = 0; f < 4; ++f) {
            const Gluing& ga = a.gluing(x, f);
            const Gluing& gb = b.gluing(img_tet[x], img_perm[x][f]);
            // phi must carry the gluing at (x, f) onto the gluing at the
            // image face, which pins down phi on the neighbour:
            //   phi_perm(y) = gb.perm * phi_perm(x) * ga.perm^-1.
            Perm4 want = gb.perm * img_perm[x] * ga.perm.inverse();
            int y = ga.tet;
            if (img_tet[y] == -1) {
                if (used[gb.tet]) return false;
                img_tet[y] = gb.tet;
                img_perm[y] = want;
                used[gb.tet] = 1;
                stack.push_back(y);
            } else if (img_tet[y] != gb.tet || img_perm[y] != want) {
                return false;
            }
        }
    }

    // Connectedness means everything was assigned; re-verify the whole table.
    for (int x = 0; x < n; ++x) {
        for (int f = 0; f < 4; ++f) {
            const Gluing& ga = a.gluing(x, f);
            const Gluing& gb = b.gluing(img_tet[x], img_perm[x][f]);
            if (gb.tet != img_tet[ga.tet]) return false;
            if (gb.perm != img_perm[ga.tet] * ga.perm * img_perm[x].inverse()) return false;
        }
    }
    return true;
}

// Recursively match the free slots of a partial face pairing, then try all
// gluing permutations for each matched pair.
void enumerate_tables(int n, std::vector<int>& partner, int slot,
                      std::vector<Triangulation>& classes) {
    const int slots = 4 * n;
    while (slot < slots && partner[slot] != -1) ++slot;
    if (slot == slots) {
        // Pairing complete; assign one of the 6 permutations per pair.
        std::vector<std::array<int, 2>> pairs;
        for (int s = 0; s < slots; ++s)
            if (partner[s] > s) pairs.push_back({s, partner[s]});
        std::vector<int> choice(pairs.size(), 0);
        for (;;) {
            GluingTable table(n);
            bool ok = true;
            for (std::size_t i = 0; i < pairs.size() && ok; ++i) {
                int t1 = pairs[i][0] / 4, f1 = pairs[i][0] % 4;
                int t2 = pairs[i][1] / 4, f2 = pairs[i][1] % 4;
                int seen = 0;
                for (int pi = 0; pi < 24; ++pi) {
                    Perm4 p = Perm4::from_index(pi);
                    if (p[f1] != f2) continue;
                    if (seen++ == choice[i]) {
                        table[t1][f1] = {t2, p};
                        table[t2][f2] = {t1, p.inverse()};
                        break;
                    }
                }
                if (seen <= choice[i]) ok = false;
            }
            if (ok) {
                try {
                    Triangulation t = Triangulation::from_table(table);
                    if (tri::is_closed_3manifold(t)) {
                        bool fresh = true;
                        for (const Triangulation& rep : classes)
                            if (isomorphic(rep, t)) {
                                fresh = false;
                                break;
                            }
                        if (fresh) classes.push_back(t);
                    }
                } catch (const tri::TriError&) {
                }
            }
            // Advance the mixed-radix permutation choice (6 options per pair).
            std::size_t i = 0;
            while (i < choice.size() && ++choice[i] == 6) choice[i++] = 0;
            if (i == choice.size()) break;
        }
        return;
    }
    for (int other = slot + 1; other < slots; ++other) {
        if (partner[other] != -1) continue;
        partner[slot] = other;
        partner[other] = slot;
        enumerate_tables(n, partner, slot + 1, classes);
        partner[slot] = -1;
        partner[other] = -1;
    }
}

// Smith normal form diagonal of a small integer matrix, by repeated pivoting
// on a minimal nonzero entry. Entries stay tiny for the matrices tested here.
std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> m) {
    std::vector<long long> diag;
    std::size_t top = 0;
    while (top < m.size() && top < (m.empty() ? 0 : m[0].size())) {
        std::size_t rows = m.size(), cols = m[0].size();
        // Find the nonzero entry of least magnitude in the remaining block.
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = top; i < rows; ++i)
            for (std::size_t j = top; j < cols; ++j)
                if (m[i][j] != 0 &&
                    (pr == rows || std::llabs(m[i][j]) < std::llabs(m[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr == rows) break;
        std::swap(m[top], m[pr]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][top], m[i][pc]);

        bool clean = true;
        for (std::size_t i = top + 1; i < rows && clean; ++i)
            if (m[i][top] % m[top][top] != 0) clean = false;
        for (std::size_t j = top + 1; j < cols && clean; ++j)
            if (m[top][j] % m[top][top] != 0) clean = false;
        if (!clean) {
            // Knock the offending entries down and re-pivot.
            for (std::size_t i = top + 1; i < rows; ++i) {
                long long q = m[i][top] / m[top][top];
                for (std::size_t j = top; j < cols; ++j) m[i][j] -= q * m[top][j];
            }
            for (std::size_t j = top + 1; j < cols; ++j) {
                long long q = m[top][j] / m[top][top];
                for (std::size_t i = top; i < rows; ++i) m[i][j] -= q * m[i][top];
            }
            continue;
        }
        for (std::size_t i = top + 1; i < rows; ++i) {
            long long q = m[i][top] / m[top][top];
            for (std::size_t j = top; j < cols; ++j) m[i][j] -= q * m[top][j];
        }
        for (std::size_t j = top + 1; j < cols; ++j) m[top][j] = 0;
        // The pivot must divide the rest of the block; if not, fold the
        // offending row in and redo this step.
        bool divides = true;
        for (std::size_t i = top + 1; i < rows && divides; ++i)
            for (std::size_t j = top + 1; j < cols && divides; ++j)
                if (m[i][j] % m[top][top] != 0) {
                    for (std::size_t k = top; k < cols; ++k) m[top][k] += m[i][k];
                    divides = false;
                }
        if (!divides) continue;
        diag.push_back(std::llabs(m[top][top]));
        ++top;
    }
    return diag;
}

} // namespace

bool isomorphic(const Triangulation& a, const Triangulation& b) {
    if (a.size() != b.size()) return false;
    for (int t = 0; t < b.size(); ++t)
        for (int pi = 0; pi < 24; ++pi)
            if (try_seed(a, b, t, Perm4::from_index(pi))) return true;
    return false;
}

std::vector<Triangulation> tiny_census(int n) {
    std::vector<Triangulation> classes;
    std::vector<int> partner(4 * n, -1);
    enumerate_tables(n, partner, 0, classes);
    return classes;
}

std::vector<long long> h1_invariants(const Triangulation& t) {
    const int n = t.size();

    // Face classes double as dual-graph arcs. Identify each class by its
    // smaller slot (4*tet + face).
    std::vector<int> arc_of_slot(4 * n, -1);
    std::vector<std::array<int, 2>> arc_ends; // tet on each side
    std::vector<int> arc_primary;             // the smaller slot
    for (int tet = 0; tet < n; ++tet)
        for (int f = 0; f < 4; ++f) {
            int slot = 4 * tet + f;
            if (arc_of_slot[slot] != -1) continue;
            const Gluing& g = t.gluing(tet, f);
            int mate = 4 * g.tet + g.perm[f];
            int id = static_cast<int>(arc_ends.size());
            arc_of_slot[slot] = id;
            arc_of_slot[mate] = id;
            arc_ends.push_back({tet, g.tet});
            arc_primary.push_back(slot);
        }

    // Spanning tree of the dual graph; arcs outside it generate pi_1.
    std::vector<char> in_tree(arc_ends.size(), 0);
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    std::vector<int> stack = {0};
    while (!stack.empty()) {
        int tet = stack.back();
        stack.pop_back();
        for (int f = 0; f < 4; ++f) {
            int arc = arc_of_slot[4 * tet + f];
            int other = arc_ends[arc][0] == tet ? arc_ends[arc][1] : arc_ends[arc][0];
            if (!seen[other]) {
                seen[other] = 1;
                in_tree[arc] = 1;
                stack.push_back(other);
            }
        }
    }
    std::vector<int> gen_of_arc(arc_ends.size(), -1);
    int gens = 0;
    for (std::size_t a = 0; a < arc_ends.size(); ++a)
        if (!in_tree[a]) gen_of_arc[a] = gens++;

    // One abelianized relation per edge class: walk around the edge and sum
    // the generator crossings, signed by crossing direction.
    std::vector<char> edge_done(6 * n, 0);
    std::vector<std::vector<long long>> rel;
    for (int tet = 0; tet < n; ++tet)
        for (int e = 0; e < 6; ++e) {
            if (edge_done[6 * tet + e]) continue;
            int u = tri::detail::EDGE_ENDS[e][0];
            int v = tri::detail::EDGE_ENDS[e][1];
            // Leave through one of the two faces containing the edge.
            int leave = -1;
            for (int f = 0; f < 4; ++f)
                if (f != u && f != v) {
                    leave = f;
                    break;
                }
            std::vector<long long> row(gens, 0);
            int ct = tet, cu = u, cv = v, cf = leave;
            const int cap = 24 * n + 4;
            for (int step = 0; step <= cap; ++step) {
                if (step == cap) return {-1}; // walk failed to close: not a manifold
                edge_done[6 * ct + tri::detail::EDGE_OF[cu][cv]] = 1;
                int slot = 4 * ct + cf;
                int arc = arc_of_slot[slot];
                if (gen_of_arc[arc] != -1)
                    row[gen_of_arc[arc]] += (slot == arc_primary[arc]) ? 1 : -1;
                const Gluing& g = t.gluing(ct, cf);
                int nu = g.perm[cu], nv = g.perm[cv], enter = g.perm[cf];
                int nf = 6 - nu - nv - enter; // the other face containing the edge
                ct = g.tet;
                cu = nu;
                cv = nv;
                cf = nf;
                if (ct == tet && cu == u && cv == v && cf == leave) break;
            }
            rel.push_back(std::move(row));
        }

    std::vector<long long> out;
    if (gens == 0) return out;
    if (rel.empty()) rel.push_back(std::vector<long long>(gens, 0));
    std::vector<long long> diag = smith_diagonal(rel);
    int rank = 0;
    for (long long d : diag)
        if (d != 0) {
            ++rank;
            if (d > 1) out.push_back(d);
        }
    for (int i = rank; i < gens; ++i) out.push_back(0);
    return out;
}

Triangulation random_relabel(const Triangulation& t, std::mt19937& rng) {
    std::vector<int> order(t.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Perm4> perms(t.size());
    std::uniform_int_distribution<int> pick(0, 23);
    for (Perm4& p : perms) p = Perm4::from_index(pick(rng));
    return t.relabel(order, perms);
}

} // namespace oracle
