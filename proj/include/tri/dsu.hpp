#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace tri {

// Union-find over a fixed slot range with an explicit undo journal. No path
// compression, union by rank, so rollback only has to restore the edits made
// by unite(). Used for incremental state inside the census search as well as
// for one-shot skeleton computations.
//
// The parity variant tracks a bit per slot giving the orientation of the slot
// relative to its root. unite(x, y, rel) identifies x and y where rel says
// whether their orientations disagree. A contradictory union (x and y already
// together with the other parity) performs no edit and returns false.
class ParityDSU {
public:
    explicit ParityDSU(int n) : parent_(n), rank_(n, 0), parity_(n, 0) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }

    // (root, parity of x relative to root)
    std::pair<int, int> find(int x) const {
        int par = 0;
        while (parent_[x] != x) {
            par ^= parity_[x];
            x = parent_[x];
        }
        return {x, par};
    }

    bool unite(int x, int y, int rel) {
        auto [rx, px] = find(x);
        auto [ry, py] = find(y);
        if (rx == ry) return (px ^ py) == rel;
        if (rank_[rx] < rank_[ry]) {
            std::swap(rx, ry);
            std::swap(px, py);
        }
        journal_.push_back({ry, rank_[rx]});
        parent_[ry] = rx;
        parity_[ry] = static_cast<uint8_t>(px ^ py ^ rel);
        if (rank_[rx] == rank_[ry]) ++rank_[rx];
        return true;
    }

    std::size_t checkpoint() const { return journal_.size(); }

    void rollback(std::size_t mark) {
        while (journal_.size() > mark) {
            const Entry& e = journal_.back();
            int root = parent_[e.child];
            rank_[root] = e.old_root_rank;
            parent_[e.child] = e.child;
            parity_[e.child] = 0;
            journal_.pop_back();
        }
    }

private:
    struct Entry {
        int child;
        int old_root_rank;
    };
    std::vector<int> parent_;
    std::vector<int> rank_;
    std::vector<uint8_t> parity_;
    std::vector<Entry> journal_;
};

// Union-find with K int aggregates per class, merged additively on union and
// adjustable in place. Journaled like ParityDSU.
template <int K>
class AggDSU {
public:
    AggDSU(int n, std::array<int, K> init) : parent_(n), rank_(n, 0), agg_(n, init), components_(n) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }

    int find(int x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }

    // Returns false if x and y were already in one class.
    bool unite(int x, int y) {
        int before = components_;
        unite_root(x, y);
        return components_ != before;
    }

    // Like unite, but hands back the surviving root so the caller can issue
    // follow-up adjustments without repeating the find.
    int unite_root(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx == ry) return rx;
        if (rank_[rx] < rank_[ry]) std::swap(rx, ry);
        journal_.push_back({JOIN, ry, rank_[rx], 0});
        parent_[ry] = rx;
        if (rank_[rx] == rank_[ry]) ++rank_[rx];
        for (int i = 0; i < K; ++i) agg_[rx][i] += agg_[ry][i];
        --components_;
        return rx;
    }

    int components() const { return components_; }

    int aggregate(int x, int field) const { return agg_[find(x)][field]; }

    // All aggregates of x's class at once, at the cost of a single find.
    const std::array<int, K>& aggregates(int x) const { return agg_[find(x)]; }

    void adjust(int x, int field, int delta) { adjust_root(find(x), field, delta); }

    // root must be the current root of its class (e.g. from unite_root).
    void adjust_root(int root, int field, int delta) {
        journal_.push_back({ADJUST, root, field, delta});
        agg_[root][field] += delta;
    }

    std::size_t checkpoint() const { return journal_.size(); }

    void rollback(std::size_t mark) {
        while (journal_.size() > mark) {
            const Entry& e = journal_.back();
            if (e.op == JOIN) {
                int root = parent_[e.a];
                rank_[root] = e.b;
                parent_[e.a] = e.a;
                for (int i = 0; i < K; ++i) agg_[root][i] -= agg_[e.a][i];
                ++components_;
            } else {
                agg_[e.a][e.b] -= e.c;
            }
            journal_.pop_back();
        }
    }

private:
    enum Op : uint8_t { JOIN, ADJUST };
    struct Entry {
        Op op;
        int a; // JOIN: child root; ADJUST: root
        int b; // JOIN: old rank of new root; ADJUST: field
        int c; // ADJUST: delta
    };
    std::vector<int> parent_;
    std::vector<int> rank_;
    std::vector<std::array<int, K>> agg_;
    std::vector<Entry> journal_;
    int components_;
};

} // namespace tri
