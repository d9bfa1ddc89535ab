#include "tri/homology.hpp"

#include <cassert>
#include <cstdlib>
#include <numeric>

namespace tri {

namespace detail {

namespace {

int rows_of(const Matrix& m) { return static_cast<int>(m.size()); }
int cols_of(const Matrix& m) { return m.empty() ? 0 : static_cast<int>(m[0].size()); }

// In-place SNF reduction. If col_ops is non-null, every elementary column
// operation is mirrored on *col_ops (as column ops) and inverted on
// *col_ops_inv (as row ops), so that m_new = m_old * Q with Q = *col_ops and
// Q^-1 = *col_ops_inv throughout.
void smith_reduce(Matrix& m, Matrix* col_ops, Matrix* col_ops_inv) {
    const int R = rows_of(m), C = cols_of(m);

    auto swap_rows = [&](int a, int b) { std::swap(m[a], m[b]); };
    auto negate_row = [&](int a) {
        for (auto& x : m[a]) x = -x;
    };
    auto add_row = [&](int src, int dst, long long k) { // row dst += k * row src
        for (int j = 0; j < C; ++j) m[dst][j] += k * m[src][j];
    };
    auto swap_cols = [&](int a, int b) {
        for (int i = 0; i < R; ++i) std::swap(m[i][a], m[i][b]);
        if (col_ops)
            for (auto& row : *col_ops) std::swap(row[a], row[b]);
        if (col_ops_inv) std::swap((*col_ops_inv)[a], (*col_ops_inv)[b]);
    };
    auto add_col = [&](int src, int dst, long long k) { // col dst += k * col src
        for (int i = 0; i < R; ++i) m[i][dst] += k * m[i][src];
        if (col_ops)
            for (auto& row : *col_ops) row[dst] += k * row[src];
        if (col_ops_inv) // inverse: row src -= k * row dst
            for (int j = 0; j < cols_of(*col_ops_inv); ++j)
                (*col_ops_inv)[src][j] -= k * (*col_ops_inv)[dst][j];
    };

    int k = 0;
    const int limit = std::min(R, C);
    while (k < limit) {
        // Smallest nonzero entry in the remaining block becomes the pivot.
        int pi = -1, pj = -1;
        long long best = 0;
        for (int i = k; i < R; ++i)
            for (int j = k; j < C; ++j) {
                long long a = std::llabs(m[i][j]);
                if (a != 0 && (best == 0 || a < best)) {
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        if (pi != k) swap_rows(pi, k);
        if (pj != k) swap_cols(pj, k);
        if (m[k][k] < 0) negate_row(k);

        bool dirty = false;
        for (int i = k + 1; i < R; ++i) {
            if (m[i][k] == 0) continue;
            long long q = m[i][k] / m[k][k];
            add_row(k, i, -q);
            if (m[i][k] != 0) dirty = true;
        }
        for (int j = k + 1; j < C; ++j) {
            if (m[k][j] == 0) continue;
            long long q = m[k][j] / m[k][k];
            add_col(k, j, -q);
            if (m[k][j] != 0) dirty = true;
        }
        if (dirty) continue; // remainders became new, smaller pivot candidates

        // Pivot must divide the rest of the block for the divisibility chain.
        bool fixed = true;
        for (int i = k + 1; i < R && fixed; ++i)
            for (int j = k + 1; j < C && fixed; ++j)
                if (m[i][j] % m[k][k] != 0) {
                    add_row(i, k, 1); // pulls the offending row into play
                    fixed = false;
                }
        if (!fixed) continue;
        ++k;
    }
}

} // namespace

std::vector<long long> smith_invariant_factors(Matrix m) {
    smith_reduce(m, nullptr, nullptr);
    std::vector<long long> out;
    const int limit = std::min(rows_of(m), cols_of(m));
    for (int i = 0; i < limit; ++i) {
        if (m[i][i] == 0) break;
        out.push_back(m[i][i]);
    }
    return out;
}

void boundary_matrices(const Triangulation& t, const Skeleton& sk, Matrix& d1, Matrix& d2) {
    using tri::detail::EDGE_ENDS;
    using tri::detail::EDGE_OF;
    const int n = t.size();

    d1.assign(sk.vertex_count, std::vector<long long>(sk.edge_count, 0));
    {
        std::vector<char> done(sk.edge_count, 0);
        for (int s = 0; s < 6 * n; ++s) {
            int c = sk.edge_class[s];
            if (done[c]) continue; // first slot of the class = representative
            done[c] = 1;
            int tet = s / 6, e = s % 6;
            int tail = sk.vertex_class[4 * tet + EDGE_ENDS[e][0]];
            int head = sk.vertex_class[4 * tet + EDGE_ENDS[e][1]];
            d1[head][c] += 1;
            d1[tail][c] -= 1;
        }
    }

    d2.assign(sk.edge_count, std::vector<long long>(sk.face_count, 0));
    {
        std::vector<char> done(sk.face_count, 0);
        for (int tet = 0; tet < n; ++tet)
            for (int f = 0; f < 4; ++f) {
                int c = sk.face_class[4 * tet + f];
                if (done[c]) continue;
                done[c] = 1;
                int v[3], k = 0;
                for (int x = 0; x < 4; ++x)
                    if (x != f) v[k++] = x;
                // d [v0,v1,v2] = [v1,v2] - [v0,v2] + [v0,v1]
                const int pairs[3][2] = {{v[1], v[2]}, {v[0], v[2]}, {v[0], v[1]}};
                const int signs[3] = {1, -1, 1};
                for (int i = 0; i < 3; ++i) {
                    int slot = 6 * tet + EDGE_OF[pairs[i][0]][pairs[i][1]];
                    int orient = sk.edge_parity[slot] ? -1 : 1;
                    d2[sk.edge_class[slot]][c] += signs[i] * orient;
                }
            }
    }
}

} // namespace detail

std::string HomologyProfile::to_string() const {
    if (invariant_factors.empty()) return "0";
    std::string out;
    for (long long d : invariant_factors) {
        if (!out.empty()) out += " + ";
        out += (d == 0) ? "Z" : ("Z/" + std::to_string(d));
    }
    return out;
}

HomologyProfile homology_h1(const Triangulation& t) {
    Skeleton sk = skeleton(t);
    if (!sk.is_manifold())
        throw TriError(Err::NotAManifold, "homology_h1 requires a closed 3-manifold");

    detail::Matrix d1, d2;
    detail::boundary_matrices(t, sk, d1, d2);

    const int E = sk.edge_count;

    // Column basis change on d1: columns r1..E-1 of Q then span ker d1, and
    // Qinv rewrites d2's columns in that basis.
    detail::Matrix q(E, std::vector<long long>(E, 0)), qinv(E, std::vector<long long>(E, 0));
    for (int i = 0; i < E; ++i) q[i][i] = qinv[i][i] = 1;
    {
        detail::Matrix d1copy = d1;
        // smith_reduce applies row ops freely; they do not affect the kernel.
        detail::smith_reduce(d1copy, &q, &qinv);
        int r1 = 0;
        const int lim = std::min(detail::rows_of(d1copy), E);
        while (r1 < lim && d1copy[r1][r1] != 0) ++r1;

        // B = (Qinv * d2) restricted to rows r1..E-1.
        const int F = sk.face_count;
        detail::Matrix b(E - r1, std::vector<long long>(F, 0));
        for (int i = r1; i < E; ++i)
            for (int j = 0; j < F; ++j) {
                long long acc = 0;
                for (int k = 0; k < E; ++k) acc += qinv[i][k] * d2[k][j];
                b[i - r1][j] = acc;
            }

        std::vector<long long> factors = detail::smith_invariant_factors(std::move(b));
        HomologyProfile h;
        for (long long d : factors)
            if (d != 1) h.invariant_factors.push_back(d);
        int free_rank = (E - r1) - static_cast<int>(factors.size());
        for (int i = 0; i < free_rank; ++i) h.invariant_factors.push_back(0);
        return h;
    }
}

} // namespace tri
