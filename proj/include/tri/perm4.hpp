#pragma once

#include <array>
#include <cstdint>

#include "tri/errors.hpp"

namespace tri {

namespace detail {

// All 24 permutations of {0,1,2,3} as image tuples, ordered lexicographically.
// Index 0 is the identity, index 23 is (3,2,1,0).
constexpr std::array<std::array<uint8_t, 4>, 24> make_perm_images() {
    std::array<std::array<uint8_t, 4>, 24> out{};
    int k = 0;
    for (uint8_t a = 0; a < 4; ++a)
        for (uint8_t b = 0; b < 4; ++b) {
            if (b == a) continue;
            for (uint8_t c = 0; c < 4; ++c) {
                if (c == a || c == b) continue;
                uint8_t d = static_cast<uint8_t>(6 - a - b - c);
                out[k++] = {a, b, c, d};
            }
        }
    return out;
}

constexpr auto PERM_IMAGES = make_perm_images();

constexpr int rank_of_images(const std::array<uint8_t, 4>& im) {
    for (int i = 0; i < 24; ++i)
        if (PERM_IMAGES[i] == im) return i;
    return -1;
}

constexpr std::array<uint8_t, 24> make_inverse_table() {
    std::array<uint8_t, 24> out{};
    for (int i = 0; i < 24; ++i) {
        std::array<uint8_t, 4> inv{};
        for (uint8_t x = 0; x < 4; ++x) inv[PERM_IMAGES[i][x]] = x;
        out[i] = static_cast<uint8_t>(rank_of_images(inv));
    }
    return out;
}

// COMPOSE[p][q] is the index of x -> p(q(x)).
constexpr std::array<std::array<uint8_t, 24>, 24> make_compose_table() {
    std::array<std::array<uint8_t, 24>, 24> out{};
    for (int p = 0; p < 24; ++p)
        for (int q = 0; q < 24; ++q) {
            std::array<uint8_t, 4> im{};
            for (uint8_t x = 0; x < 4; ++x) im[x] = PERM_IMAGES[p][PERM_IMAGES[q][x]];
            out[p][q] = static_cast<uint8_t>(rank_of_images(im));
        }
    return out;
}

constexpr auto PERM_INVERSE = make_inverse_table();
constexpr auto PERM_COMPOSE = make_compose_table();

} // namespace detail

// Permutation of the four vertex labels of a tetrahedron. Stored as an index
// in [0,24) under the published ordering: lexicographic by image tuple,
// index 0 = identity. Composition and inversion are table lookups.
class Perm4 {
public:
    constexpr Perm4() : index_(0) {}

    static constexpr Perm4 from_index(int i) {
        Perm4 p;
        p.index_ = static_cast<uint8_t>(i);
        return p;
    }

    static Perm4 from_images(int i0, int i1, int i2, int i3) {
        std::array<uint8_t, 4> im = {static_cast<uint8_t>(i0), static_cast<uint8_t>(i1),
                                     static_cast<uint8_t>(i2), static_cast<uint8_t>(i3)};
        int r = detail::rank_of_images(im);
        if (r < 0) throw TriError(Err::BadInput, "not a permutation of {0,1,2,3}");
        return from_index(r);
    }

    // Transposition swapping a and b (a != b).
    static Perm4 transposition(int a, int b) {
        std::array<int, 4> im = {0, 1, 2, 3};
        im[a] = b;
        im[b] = a;
        return from_images(im[0], im[1], im[2], im[3]);
    }

    constexpr int index() const { return index_; }
    constexpr int operator[](int x) const { return detail::PERM_IMAGES[index_][x]; }
    constexpr bool is_identity() const { return index_ == 0; }

    constexpr Perm4 inverse() const { return from_index(detail::PERM_INVERSE[index_]); }

    // (p * q)[x] == p[q[x]]: q is applied first.
    friend constexpr Perm4 operator*(Perm4 p, Perm4 q) {
        return from_index(detail::PERM_COMPOSE[p.index_][q.index_]);
    }

    friend constexpr bool operator==(Perm4 a, Perm4 b) { return a.index_ == b.index_; }
    friend constexpr bool operator!=(Perm4 a, Perm4 b) { return a.index_ != b.index_; }

private:
    uint8_t index_;
};

} // namespace tri
