#include "tri/level_graph.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "tri/isosig.hpp"
#include "tri/moves.hpp"
#include "tri/parallel.hpp"

namespace tri {

namespace {

class UnionFind {
public:
    int add() {
        parent_.push_back(static_cast<int>(parent_.size()));
        rank_.push_back(0);
        ++components_;
        return static_cast<int>(parent_.size()) - 1;
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx == ry) return;
        if (rank_[rx] < rank_[ry]) std::swap(rx, ry);
        parent_[ry] = rx;
        if (rank_[rx] == rank_[ry]) ++rank_[rx];
        --components_;
    }

    long long components() const { return components_; }

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
    long long components_ = 0;
};

// Sorted, deduplicated level nodes, each checked to be the canonical
// signature of a triangulation of the stated size. Canonicality matters:
// nodes are keyed by signature string, and move expansions produce
// canonical signatures.
std::vector<std::string> normalize_level(int level, const std::vector<std::string>& nodes) {
    if (nodes.empty()) throw TriError(Err::EmptyLevel, "level node set is empty");
    std::vector<std::string> out(nodes);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (const std::string& sig : out) {
        Triangulation t = decode(sig);
        if (t.size() != level)
            throw TriError(Err::BadInput, "node " + sig + " does not have " +
                                              std::to_string(level) + " tetrahedra");
        if (isosig(t) != sig)
            throw TriError(Err::BadInput, "node " + sig + " is not a canonical signature");
    }
    return out;
}

std::vector<std::vector<std::string>> expand_up(const std::vector<std::string>& frontier,
                                                int jobs) {
    std::function<std::vector<std::string>(int)> up = [&frontier](int i) {
        return neighbors(decode(frontier[i]), {MoveKind::Move23});
    };
    return parallel_map<std::vector<std::string>>(static_cast<int>(frontier.size()), jobs, up);
}

} // namespace

HeightReport height_bound(int level, const std::vector<std::string>& level_nodes, int max_height,
                          int jobs) {
    std::vector<std::string> base = normalize_level(level, level_nodes);

    HeightReport rep;
    rep.level = level;

    std::unordered_map<std::string, int> id;
    UnionFind uf;
    for (const std::string& sig : base) id.emplace(sig, uf.add());
    rep.components.push_back(uf.components());

    std::vector<std::string> frontier = base;
    int height = 0;
    while (uf.components() > 1 && height < max_height && !frontier.empty()) {
        std::vector<std::vector<std::string>> ups = expand_up(frontier, jobs);
        std::vector<std::string> next;
        for (int i = 0; i < static_cast<int>(frontier.size()); ++i) {
            int vid = id.at(frontier[i]);
            for (std::string& sig : ups[i]) {
                auto [it, inserted] = id.emplace(std::move(sig), -1);
                if (inserted) {
                    it->second = uf.add();
                    next.push_back(it->first);
                }
                uf.unite(vid, it->second);
            }
        }
        ++height;
        rep.components.push_back(uf.components());
        frontier = std::move(next);
    }
    if (uf.components() == 1) rep.height = height;
    return rep;
}

HeightReport height_bound_two_phase(int level, const std::vector<std::string>& level_nodes,
                                    int jobs) {
    std::vector<std::string> base = normalize_level(level, level_nodes);

    HeightReport rep;
    rep.level = level;
    rep.two_phase = true;

    std::unordered_map<std::string, int> id;
    UnionFind uf;
    for (const std::string& sig : base) id.emplace(sig, uf.add());
    rep.components.push_back(uf.components());
    if (uf.components() == 1) {
        rep.height = 0;
        return rep;
    }

    // Phase 1: one ordinary expansion sweep into the next level up.
    std::vector<std::string> mid;
    {
        std::vector<std::vector<std::string>> ups = expand_up(base, jobs);
        for (int i = 0; i < static_cast<int>(base.size()); ++i) {
            int vid = id.at(base[i]);
            for (std::string& sig : ups[i]) {
                auto [it, inserted] = id.emplace(std::move(sig), -1);
                if (inserted) {
                    it->second = uf.add();
                    mid.push_back(it->first);
                }
                uf.unite(vid, it->second);
            }
        }
    }
    rep.components.push_back(uf.components());
    if (uf.components() == 1) {
        rep.height = 1;
        return rep;
    }

    // Phase 2: walk 2-3 + 3-2 pairs out of each stored mid-level node. The
    // far endpoints land back on the mid level; arcs to nodes we already
    // store are recorded, everything else is discarded, and the level above
    // mid is never kept.
    std::function<std::vector<std::string>(int)> pairs = [&mid](int i) {
        std::unordered_set<std::string> targets;
        Triangulation t = decode(mid[i]);
        for (const std::string& up_sig : neighbors(t, {MoveKind::Move23}))
            for (std::string& down_sig : neighbors(decode(up_sig), {MoveKind::Move32}))
                targets.insert(std::move(down_sig));
        std::vector<std::string> out(targets.begin(), targets.end());
        std::sort(out.begin(), out.end());
        return out;
    };
    std::vector<std::vector<std::string>> lists =
        parallel_map<std::vector<std::string>>(static_cast<int>(mid.size()), jobs, pairs);
    for (int i = 0; i < static_cast<int>(mid.size()); ++i) {
        int vid = id.at(mid[i]);
        for (const std::string& sig : lists[i]) {
            auto it = id.find(sig);
            if (it != id.end()) uf.unite(vid, it->second);
        }
    }
    rep.components.push_back(uf.components());
    if (uf.components() == 1) rep.height = 2;
    return rep;
}

LengthReport length_bound(int level, const std::vector<std::string>& level_nodes, int max_rounds,
                          int jobs) {
    std::vector<std::string> base = normalize_level(level, level_nodes);

    LengthReport rep;
    rep.level = level;
    const long long total = static_cast<long long>(base.size());

    std::unordered_set<std::string> node_set(base.begin(), base.end());
    std::unordered_set<std::string> reached;
    std::vector<std::string> frontier;

    std::function<char(int)> direct = [&base](int i) {
        return static_cast<char>(!list_moves(decode(base[i]), MoveKind::Move32).empty());
    };
    std::vector<char> flags = parallel_map<char>(static_cast<int>(base.size()), jobs, direct);
    for (int i = 0; i < static_cast<int>(base.size()); ++i)
        if (flags[i]) {
            reached.insert(base[i]);
            frontier.push_back(base[i]);
        }
    rep.simplifiable = static_cast<long long>(reached.size());
    rep.remaining.push_back(total - rep.simplifiable);

    int round = 0;
    while (total > static_cast<long long>(reached.size()) && round < max_rounds &&
           !frontier.empty()) {
        std::function<std::vector<std::string>(int)> jump = [&frontier](int i) {
            return jumps(decode(frontier[i]));
        };
        std::vector<std::vector<std::string>> lists =
            parallel_map<std::vector<std::string>>(static_cast<int>(frontier.size()), jobs, jump);
        std::vector<std::string> next;
        for (int i = 0; i < static_cast<int>(frontier.size()); ++i)
            for (std::string& sig : lists[i]) {
                if (!node_set.count(sig))
                    throw TriError(Err::BadInput, "jump target " + sig +
                                                      " is missing from the level set; the "
                                                      "supplied census is incomplete");
                if (reached.insert(sig).second) next.push_back(std::move(sig));
            }
        ++round;
        rep.remaining.push_back(total - static_cast<long long>(reached.size()));
        frontier = std::move(next);
    }
    if (total == static_cast<long long>(reached.size())) {
        rep.rounds = round;
        rep.length = 4 * round + 1;
    }
    return rep;
}

BigInt mijatovic_moves_bound(int tetrahedra) {
    if (tetrahedra < 1) throw TriError(Err::BadInput, "bound needs at least one tetrahedron");
    if (tetrahedra > 100)
        throw TriError(Err::UnsupportedSize, "bound exponent too large to materialize");
    long long n = tetrahedra;
    unsigned exponent = static_cast<unsigned>(20000 * n * n);
    return BigInt(6000000) * n * n * boost::multiprecision::pow(BigInt(2), exponent);
}

BigInt mijatovic_height_bound(int tetrahedra) { return mijatovic_moves_bound(tetrahedra) / 2; }

} // namespace tri
