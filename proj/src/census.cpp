#include "tri/census.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "tri/dsu.hpp"
#include "tri/homology.hpp"
#include "tri/isosig.hpp"
#include "tri/moves.hpp"
#include "tri/parallel.hpp"
#include "tri/skeleton.hpp"

namespace tri {

namespace {

// FACE_PERMS.idx[f][f2] lists the six permutation indices p with p[f] == f2,
// in ascending index order. These are the candidate gluings of face f to
// face f2.
struct FacePerms {
    std::array<std::array<std::array<int, 6>, 4>, 4> idx{};
};

FacePerms build_face_perms() {
    FacePerms fp;
    int cnt[4][4] = {};
    for (int p = 0; p < 24; ++p) {
        Perm4 perm = Perm4::from_index(p);
        for (int f = 0; f < 4; ++f) fp.idx[f][perm[f]][cnt[f][perm[f]]++] = p;
    }
    return fp;
}

const FacePerms FACE_PERMS = build_face_perms();

// SELF_MIN.idx[f][f2][p] is the smallest permutation digit any canonical
// walk can open with when started at a tetrahedron glued to itself along
// faces f <-> f2 with permutation p: the walk conjugates the gluing (or its
// inverse) by its start permutation, which is constrained only in carrying
// the chosen self-glued face to 0.
struct SelfMin {
    std::array<std::array<std::array<uint8_t, 24>, 4>, 4> idx{};
};

SelfMin build_self_min() {
    SelfMin sm;
    for (int f = 0; f < 4; ++f)
        for (int f2 = 0; f2 < 4; ++f2)
            for (int pi = 0; pi < 24; ++pi) {
                const Perm4 p = Perm4::from_index(pi);
                const Perm4 pinv = p.inverse();
                int best = 255;
                for (int qi = 0; qi < 24; ++qi) {
                    const Perm4 q = Perm4::from_index(qi);
                    const Perm4 qinv = q.inverse();
                    if (q[f] == 0) best = std::min(best, (q * p * qinv).index());
                    if (q[f2] == 0) best = std::min(best, (q * pinv * qinv).index());
                }
                sm.idx[f][f2][pi] = static_cast<uint8_t>(best);
            }
    return sm;
}

const SelfMin SELF_MIN = build_self_min();

// Aggregate fields tracked per vertex class during the search.
enum VertexAgg { SLOTS = 0, OPEN = 1, CV = 2 };

// Incremental search state. Tetrahedra 0..m-1 are introduced; the gluing
// table is partial (tet == -1 marks an open face). The three union-find
// structures maintain, over all n tetrahedra, the edge identifications with
// orientation parity, the vertex classes with (slot count, open link sides,
// link vertex count) aggregates, and the identifications between vertices of
// the vertex links. Slots of tetrahedra not yet introduced sit as untouched
// singletons, so introducing a tetrahedron needs no DSU work.
struct SearchState {
    int n;
    int m = 1;
    int open_faces = 4;
    bool one_vertex;
    GluingTable tbl;
    ParityDSU edges;
    AggDSU<3> verts;
    AggDSU<1> corners;
    // pair_cnt[t * n + t2] counts gluings between distinct tetrahedra t, t2.
    std::vector<uint8_t> pair_cnt;

    SearchState(int size, bool ov)
        : n(size), one_vertex(ov), tbl(size), edges(6 * size),
          verts(4 * size, {1, 3, 3}), corners(12 * size, {0}),
          pair_cnt(static_cast<std::size_t>(size) * size, 0) {}
};

struct Option {
    int t2, f2, pidx;
};

// One reusable option buffer per recursion depth, so the inner loop never
// reallocates. Sized up front (a table of n tetrahedra makes exactly 2n
// gluings) because parent frames hold references into it while recursing.
struct OptPool {
    std::vector<std::vector<Option>> by_depth;

    explicit OptPool(int n) : by_depth(2 * n + 1) {}

    std::vector<Option>& at(int depth) { return by_depth[depth]; }
};

std::pair<int, int> first_unglued(const SearchState& s) {
    for (int t = 0; t < s.m; ++t)
        for (int f = 0; f < 4; ++f)
            if (s.tbl[t][f].tet == -1) return {t, f};
    return {-1, -1};
}

// Candidate gluings for the open face (t, f), in canonical search order:
// first a fresh tetrahedron (identity gluing at the matching face), then
// every open face lexicographically after (t, f), each under the six
// permutations carrying f to it. Canonically labelled tables only ever glue
// their first open face one of these ways, so this order loses no class.
//
// Three further skips drop only tables that minimal_table_sig would reject
// at the leaf, because some other walk start provably beats the table's own
// labelling within the first three encoded digits:
//  - once face (0,0) leads to a fresh tetrahedron, a self-gluing anywhere
//    lets a walk started there open with destination digit 0 against our 1;
//  - once face (0,1) also leads fresh, a second gluing between any two
//    tetrahedra lets a walk started at that pair repeat destination 1 where
//    ours reads 2;
//  - under a self-glued (0,0), a self-gluing whose best conjugated
//    permutation digit is smaller than ours yields a better start (at the
//    root this restricts the self options themselves).
void collect_options(const SearchState& s, int t, int f, std::vector<Option>& out) {
    out.clear();
    if (s.m < s.n) {
        out.push_back({s.m, f, 0});
        // With tetrahedra still to introduce, gluing the last two open faces
        // to each other strands the remainder; only a fresh tetrahedron can
        // continue this branch.
        if (s.open_faces == 2) return;
    }
    const int root_tet = s.tbl[0][0].tet;
    const bool no_self = root_tet > 0;
    const bool no_double = no_self && s.tbl[0][1].tet == 2;
    const int own_d1 = root_tet == 0 ? s.tbl[0][0].perm.index() : -1;
    for (int t2 = t; t2 < s.m; ++t2) {
        if (t2 == t) {
            if (no_self) continue;
        } else if (no_double && s.pair_cnt[t * s.n + t2] != 0) {
            continue;
        }
        for (int f2 = (t2 == t ? f + 1 : 0); f2 < 4; ++f2) {
            if (s.tbl[t2][f2].tet != -1) continue;
            for (int k = 0; k < 6; ++k) {
                const int pidx = FACE_PERMS.idx[f][f2][k];
                if (t2 == t && SELF_MIN.idx[f][f2][pidx] < (own_d1 >= 0 ? own_d1 : pidx))
                    continue;
                out.push_back({t2, f2, pidx});
            }
        }
    }
}

struct Checkpoint {
    std::size_t edges, verts, corners;
    int m, open_faces, t, f, t2, f2;
};

Checkpoint mark(const SearchState& s, int t, int f, const Option& o) {
    return {s.edges.checkpoint(), s.verts.checkpoint(), s.corners.checkpoint(),
            s.m, s.open_faces, t, f, o.t2, o.f2};
}

void undo_gluing(SearchState& s, const Checkpoint& cp) {
    s.edges.rollback(cp.edges);
    s.verts.rollback(cp.verts);
    s.corners.rollback(cp.corners);
    s.tbl[cp.t][cp.f] = Gluing{};
    s.tbl[cp.t2][cp.f2] = Gluing{};
    s.m = cp.m;
    s.open_faces = cp.open_faces;
    if (cp.t2 != cp.t) {
        --s.pair_cnt[cp.t * s.n + cp.t2];
        --s.pair_cnt[cp.t2 * s.n + cp.t];
    }
}

// Applies one gluing and folds its identifications into the union-find
// state. Returns false (leaving a partial update for the caller to roll
// back) as soon as the gluing is seen to kill every completion:
//   - an edge identified with itself reversed can never become valid;
//   - a vertex class whose link just closed must have link Euler
//     characteristic 2 (the link is a closed surface once complete, and
//     closed classes are never touched again);
//   - in one-vertex mode a closed class must already span all 4n slots.
bool apply_gluing(SearchState& s, int t, int f, const Option& o) {
    const Perm4 p = Perm4::from_index(o.pidx);
    if (o.t2 == s.m) {
        ++s.m;
        s.open_faces += 2; // four fresh faces, two consumed by this gluing
    } else {
        s.open_faces -= 2;
    }
    s.tbl[t][f] = {o.t2, p};
    s.tbl[o.t2][o.f2] = {t, p.inverse()};
    if (o.t2 != t) {
        ++s.pair_cnt[t * s.n + o.t2];
        ++s.pair_cnt[o.t2 * s.n + t];
    }

    const int eb1 = 6 * t, eb2 = 6 * o.t2;
    for (int v = 0; v < 4; ++v) {
        if (v == f) continue;
        for (int w = v + 1; w < 4; ++w) {
            if (w == f) continue;
            if (!s.edges.unite(eb1 + detail::EDGE_OF[v][w],
                               eb2 + detail::EDGE_OF[p[v]][p[w]], p[v] > p[w]))
                return false;
        }
    }

    const int vb1 = 4 * t, vb2 = 4 * o.t2;
    const int cb1 = 12 * t, cb2 = 12 * o.t2;
    for (int v = 0; v < 4; ++v) {
        if (v == f) continue;
        const int pv = p[v];
        const int root = s.verts.unite_root(vb1 + v, vb2 + pv);
        // One link side closes on each side of the gluing.
        s.verts.adjust_root(root, OPEN, -2);
        int merged = 0;
        for (int w = 0; w < 4; ++w) {
            if (w == v || w == f) continue;
            const int pw = p[w];
            if (s.corners.unite(cb1 + 3 * v + (w > v ? w - 1 : w),
                                cb2 + 3 * pv + (pw > pv ? pw - 1 : pw)))
                ++merged;
        }
        if (merged) s.verts.adjust_root(root, CV, -merged);
    }

    for (int v = 0; v < 4; ++v) {
        if (v == f) continue;
        const auto& agg = s.verts.aggregates(vb1 + v);
        if (agg[OPEN] != 0) continue;
        // Closed link: V = CV, F = SLOTS, E = 3*SLOTS/2, so require
        // CV - SLOTS/2 == 2.
        if (2 * agg[CV] - agg[SLOTS] != 4) return false;
        if (s.one_vertex && agg[SLOTS] < 4 * s.n) return false;
    }
    return true;
}

// scan_t/scan_f give a face at or before the first open face; every face
// lexicographically earlier is already glued and stays glued in this
// subtree, so the scan never has to restart from the front.
void search(SearchState& s, OptPool& pool, int scan_t, int scan_f, int depth,
            std::vector<std::string>& out) {
    int t = scan_t, f = scan_f;
    for (;;) {
        if (t == s.m) {
            t = -1;
            break;
        }
        if (s.tbl[t][f].tet == -1) break;
        if (++f == 4) {
            f = 0;
            ++t;
        }
    }
    if (t < 0) {
        // Every face of every introduced tetrahedron is glued; this is a
        // complete closed triangulation only if all n tetrahedra were used.
        if (s.m == s.n)
            if (auto sig = minimal_table_sig(Triangulation::from_table(s.tbl)))
                out.push_back(*sig);
        return;
    }
    std::vector<Option>& opts = pool.at(depth);
    collect_options(s, t, f, opts);
    int nt = t, nf = f + 1;
    if (nf == 4) {
        nf = 0;
        ++nt;
    }
    for (const Option& o : opts) {
        Checkpoint cp = mark(s, t, f, o);
        if (apply_gluing(s, t, f, o)) search(s, pool, nt, nf, depth + 1, out);
        undo_gluing(s, cp);
    }
}

} // namespace

std::vector<std::string> enumerate_closed(const CensusSpec& spec) {
    if (spec.size < 1) throw TriError(Err::UnsupportedSize, "census size must be at least 1");
    if (spec.size > spec.size_ceiling && !spec.override_ceiling)
        throw TriError(Err::SizeAboveCeiling,
                       "census size " + std::to_string(spec.size) + " above ceiling " +
                           std::to_string(spec.size_ceiling));

    // The first two gluing decisions shard the search. Their subtrees are
    // explored in parallel and stitched back in decision order, so output
    // does not depend on the job count. (Every complete table needs at
    // least two gluing steps, so no leaf is emitted during sharding.)
    struct Prefix {
        int o1, o2;
    };
    std::vector<Prefix> prefixes;
    {
        SearchState s(spec.size, spec.one_vertex_only);
        auto [t1, f1] = first_unglued(s);
        std::vector<Option> opts1, opts2;
        collect_options(s, t1, f1, opts1);
        for (int i = 0; i < static_cast<int>(opts1.size()); ++i) {
            Checkpoint cp = mark(s, t1, f1, opts1[i]);
            if (apply_gluing(s, t1, f1, opts1[i])) {
                auto [t2, f2] = first_unglued(s);
                if (t2 >= 0) {
                    collect_options(s, t2, f2, opts2);
                    for (int j = 0; j < static_cast<int>(opts2.size()); ++j)
                        prefixes.push_back({i, j});
                }
            }
            undo_gluing(s, cp);
        }
    }

    auto run_prefix = [&spec, &prefixes](int k) {
        std::vector<std::string> local;
        SearchState s(spec.size, spec.one_vertex_only);
        std::vector<Option> opts;
        for (int step = 0; step < 2; ++step) {
            auto [t, f] = first_unglued(s);
            collect_options(s, t, f, opts);
            const Option& o = opts[step == 0 ? prefixes[k].o1 : prefixes[k].o2];
            if (!apply_gluing(s, t, f, o)) return local;
        }
        OptPool pool(spec.size);
        search(s, pool, 0, 0, 2, local);
        return local;
    };
    std::vector<std::vector<std::string>> parts =
        parallel_map<std::vector<std::string>>(static_cast<int>(prefixes.size()), spec.jobs,
                                               run_prefix);

    std::vector<std::string> out;
    for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
    std::sort(out.begin(), out.end());
    return out;
}

BigRational raw_gluing_count(int n) {
    if (n < 1) throw TriError(Err::BadInput, "gluing count needs n >= 1");
    BigInt numer = 1;
    for (int k = 1; k <= 4 * n - 1; k += 2) numer *= k; // (4n-1)!!
    BigInt six = boost::multiprecision::pow(BigInt(6), 2 * n);
    BigInt denom = 1;
    for (int k = 2; k <= n; ++k) denom *= k;
    denom *= boost::multiprecision::pow(BigInt(24), n);
    return BigRational(numer * six, denom);
}

std::string approx_scientific(const BigRational& value, int digits) {
    if (value <= 0) throw TriError(Err::BadInput, "scientific format needs a positive value");
    if (digits < 1) digits = 1;
    BigInt num = boost::multiprecision::numerator(value);
    BigInt den = boost::multiprecision::denominator(value);

    // Scale so the integer quotient carries digits+1 significant digits,
    // then round the last one away.
    int guard = static_cast<int>(den.str().size()) + digits + 1;
    BigInt q = num * boost::multiprecision::pow(BigInt(10), guard) / den;
    std::string s = q.str();
    long long exponent = static_cast<long long>(s.size()) - 1 - guard;

    std::string mant = s.substr(0, digits);
    bool round_up = s.size() > static_cast<std::size_t>(digits) && s[digits] >= '5';
    if (round_up) {
        int i = digits - 1;
        while (i >= 0 && mant[i] == '9') mant[i--] = '0';
        if (i < 0) {
            mant.insert(mant.begin(), '1');
            mant.pop_back();
            ++exponent;
        } else {
            ++mant[i];
        }
    }
    while (static_cast<int>(mant.size()) < digits) mant.push_back('0');

    std::string out;
    out += mant[0];
    if (digits > 1) {
        out += '.';
        out += mant.substr(1);
    }
    out += 'e';
    out += exponent < 0 ? '-' : '+';
    std::string es = std::to_string(exponent < 0 ? -exponent : exponent);
    if (es.size() < 2) es.insert(es.begin(), '0');
    out += es;
    return out;
}

SphereClosure sphere_closure(int max_level, int height_allowance, int jobs) {
    if (max_level < 1) throw TriError(Err::BadInput, "closure needs max_level >= 1");
    if (height_allowance < 0) throw TriError(Err::BadInput, "height allowance must be >= 0");

    SphereClosure out;
    out.max_level = max_level;
    out.height_allowance = height_allowance;
    out.levels.assign(max_level, {});
    const int cap = max_level + height_allowance;

    std::unordered_map<std::string, int> visited; // signature -> size
    std::vector<std::string> frontier;
    auto add = [&](std::string sig, int level, std::vector<std::string>& fr) {
        if (level < 1 || level > cap) return;
        if (visited.emplace(sig, level).second) fr.push_back(std::move(sig));
    };

    // The single-tetrahedron sphere admits no moves at all inside the size
    // cap (its faces are self-identified, so no 2-3 move applies), so it is
    // seeded directly. Everything above it is grown from the two-tetrahedron
    // spheres, which are recovered from the size-2 census as the one-vertex
    // triangulations with trivial first homology: a sphere has trivial H1,
    // and exactly three size-2 one-vertex classes do, all of which must then
    // be spheres since three is the known sphere count at that size.
    add(isosig(canonical_sphere(1)), 1, frontier);
    if (cap >= 2 && max_level >= 2) {
        CensusSpec cs;
        cs.size = 2;
        cs.one_vertex_only = true;
        cs.jobs = 1;
        std::vector<std::string> seeds;
        for (const std::string& sig : enumerate_closed(cs))
            if (homology_h1(decode(sig)).trivial()) seeds.push_back(sig);
        if (seeds.size() != 3)
            throw std::logic_error("sphere closure bootstrap: size-2 seed count is not 3");
        for (std::string& sig : seeds) add(std::move(sig), 2, frontier);
    }
    std::sort(frontier.begin(), frontier.end());

    struct Expansion {
        std::vector<std::string> up, down;
    };
    while (!frontier.empty()) {
        std::function<Expansion(int)> expand = [&](int i) {
            Triangulation t = decode(frontier[i]);
            Expansion e;
            if (t.size() < cap) e.up = neighbors(t, {MoveKind::Move23});
            e.down = neighbors(t, {MoveKind::Move32});
            return e;
        };
        std::vector<Expansion> results =
            parallel_map<Expansion>(static_cast<int>(frontier.size()), jobs, expand);

        std::vector<std::string> next;
        for (int i = 0; i < static_cast<int>(frontier.size()); ++i) {
            int level = visited.at(frontier[i]);
            for (std::string& sig : results[i].up) add(std::move(sig), level + 1, next);
            for (std::string& sig : results[i].down) add(std::move(sig), level - 1, next);
        }
        std::sort(next.begin(), next.end());
        frontier = std::move(next);
    }

    for (const auto& [sig, level] : visited)
        if (level <= max_level) out.levels[level - 1].push_back(sig);
    for (auto& level : out.levels) std::sort(level.begin(), level.end());

    // Everything reported must be a one-vertex homology sphere; anything
    // else means the seed set or the move engine is broken.
    for (const auto& level : out.levels)
        for (const std::string& sig : level) {
            Triangulation t = decode(sig);
            Skeleton sk = skeleton(t);
            if (!sk.is_manifold() || !sk.is_one_vertex() || !homology_h1(t).trivial())
                throw std::logic_error("sphere closure audit failed for " + sig);
        }
    return out;
}

} // namespace tri
