#include "tri/isosig.hpp"

#include <algorithm>
#include <array>

namespace tri {

namespace {

constexpr char ALPHABET[65] = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789+-";

int digit_of_char(char c) {
    if (c >= 'a' && c <= 'z') return c - 'a';
    if (c >= 'A' && c <= 'Z') return 26 + (c - 'A');
    if (c >= '0' && c <= '9') return 52 + (c - '0');
    if (c == '+') return 62;
    if (c == '-') return 63;
    return -1;
}

int adj_width(int n) {
    int w = 1;
    long long cap = 64;
    while (cap < n) {
        ++w;
        cap *= 64;
    }
    return w;
}

void append_vlq(std::vector<uint8_t>& out, long long v) {
    while (v >= 32) {
        out.push_back(static_cast<uint8_t>((v & 31) | 32));
        v >>= 5;
    }
    out.push_back(static_cast<uint8_t>(v));
}

// Extends (start, start_perm) to the full canonical labelling. Walks the new
// tetrahedra in order; the first unlabelled tetrahedron met through a face
// receives the next index, with its vertex map forced by requiring the gluing
// onto it to become the identity.
void extend_labelling(const Triangulation& t, CanonicalLabelling& lab) {
    const int n = t.size();
    lab.tet_image.assign(n, -1);
    lab.vertex_map.assign(n, Perm4());
    std::vector<int> preimage(n, -1);

    lab.tet_image[lab.start_tet] = 0;
    lab.vertex_map[lab.start_tet] = lab.start_perm;
    preimage[0] = lab.start_tet;
    int next = 1;

    for (int nt = 0; nt < n; ++nt) {
        int o = preimage[nt];
        Perm4 inv = lab.vertex_map[o].inverse();
        for (int nf = 0; nf < 4; ++nf) {
            const Gluing& g = t.gluing(o, inv[nf]);
            if (lab.tet_image[g.tet] < 0) {
                lab.tet_image[g.tet] = next;
                preimage[next] = g.tet;
                lab.vertex_map[g.tet] = lab.vertex_map[o] * g.perm.inverse();
                ++next;
            }
        }
    }
}

// Streams the encoding of one canonical labelling while comparing it against
// `best` (ignoring the shared VLQ prefix, at digit offset `skip`).
// Returns -1/0/+1; on -1 the full encoding is left in `out`. Stops early the
// moment the candidate is known to be larger.
int encode_compare(const Triangulation& t, int start, Perm4 start_perm,
                   const std::vector<uint8_t>& best, int skip, int w,
                   std::vector<uint8_t>& out, std::vector<int>& tet_image,
                   std::vector<Perm4>& vertex_map, std::vector<int>& preimage) {
    const int n = t.size();
    tet_image.assign(n, -1);
    out.clear();

    tet_image[start] = 0;
    vertex_map[start] = start_perm;
    preimage[0] = start;
    int next = 1;

    bool smaller = false;
    int pos = 0;
    auto push = [&](uint8_t d) {
        if (!smaller) {
            uint8_t b = best[skip + pos];
            if (d > b) return false;
            if (d < b) smaller = true;
        }
        out.push_back(d);
        ++pos;
        return true;
    };

    for (int nt = 0; nt < n; ++nt) {
        int o = preimage[nt];
        Perm4 inv = vertex_map[o].inverse();
        for (int nf = 0; nf < 4; ++nf) {
            const Gluing& g = t.gluing(o, inv[nf]);
            if (tet_image[g.tet] < 0) {
                tet_image[g.tet] = next;
                preimage[next] = g.tet;
                vertex_map[g.tet] = vertex_map[o] * g.perm.inverse();
                ++next;
            }
            int adj = tet_image[g.tet];
            Perm4 rel = vertex_map[g.tet] * g.perm * inv;
            for (int d = w - 1; d >= 0; --d)
                if (!push(static_cast<uint8_t>((adj >> (6 * d)) & 63))) return 1;
            if (!push(static_cast<uint8_t>(rel.index()))) return 1;
        }
    }
    return smaller ? -1 : 0;
}

std::vector<uint8_t> encode_table(const Triangulation& t) {
    const int n = t.size();
    const int w = adj_width(n);
    std::vector<uint8_t> out;
    out.reserve(2 + 4 * n * (w + 1));
    append_vlq(out, n);
    for (int tet = 0; tet < n; ++tet)
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = t.gluing(tet, f);
            for (int d = w - 1; d >= 0; --d)
                out.push_back(static_cast<uint8_t>((g.tet >> (6 * d)) & 63));
            out.push_back(static_cast<uint8_t>(g.perm.index()));
        }
    return out;
}

// Shared minimisation core. If own_only is true, returns nullopt as soon as
// any labelling beats the triangulation's own table; otherwise returns the
// minimal encoding over all 24n labellings.
std::optional<std::vector<uint8_t>> minimise(const Triangulation& t, bool own_only) {
    const int n = t.size();
    const int w = adj_width(n);

    std::vector<uint8_t> best;
    if (own_only) {
        best = encode_table(t);
    } else {
        CanonicalLabelling lab;
        lab.start_tet = 0;
        lab.start_perm = Perm4();
        extend_labelling(t, lab);
        best = encode_labelled(t, lab);
    }
    std::vector<uint8_t> prefix;
    append_vlq(prefix, n);
    const int skip = static_cast<int>(prefix.size());

    std::vector<uint8_t> cand;
    cand.reserve(best.size());
    std::vector<int> tet_image(n), preimage(n);
    std::vector<Perm4> vertex_map(n);

    for (int s = 0; s < n; ++s)
        for (int pi = 0; pi < 24; ++pi) {
            if (own_only && s == 0 && pi == 0) continue;
            int cmp = encode_compare(t, s, Perm4::from_index(pi), best, skip, w, cand, tet_image,
                                     vertex_map, preimage);
            if (cmp < 0) {
                if (own_only) return std::nullopt;
                best.resize(skip);
                best.insert(best.end(), cand.begin(), cand.end());
            }
        }
    return best;
}

} // namespace

std::vector<CanonicalLabelling> canonical_labellings(const Triangulation& t) {
    std::vector<CanonicalLabelling> out;
    out.reserve(24 * t.size());
    for (int s = 0; s < t.size(); ++s)
        for (int pi = 0; pi < 24; ++pi) {
            CanonicalLabelling lab;
            lab.start_tet = s;
            lab.start_perm = Perm4::from_index(pi);
            extend_labelling(t, lab);
            out.push_back(std::move(lab));
        }
    return out;
}

std::vector<uint8_t> encode_labelled(const Triangulation& t, const CanonicalLabelling& lab) {
    const int n = t.size();
    const int w = adj_width(n);
    std::vector<int> preimage(n);
    for (int o = 0; o < n; ++o) preimage[lab.tet_image[o]] = o;

    std::vector<uint8_t> out;
    out.reserve(2 + 4 * n * (w + 1));
    append_vlq(out, n);
    for (int nt = 0; nt < n; ++nt) {
        int o = preimage[nt];
        Perm4 inv = lab.vertex_map[o].inverse();
        for (int nf = 0; nf < 4; ++nf) {
            const Gluing& g = t.gluing(o, inv[nf]);
            int adj = lab.tet_image[g.tet];
            Perm4 rel = lab.vertex_map[g.tet] * g.perm * inv;
            for (int d = w - 1; d >= 0; --d)
                out.push_back(static_cast<uint8_t>((adj >> (6 * d)) & 63));
            out.push_back(static_cast<uint8_t>(rel.index()));
        }
    }
    return out;
}

std::string sig_to_string(const std::vector<uint8_t>& digits) {
    std::string out;
    out.reserve(digits.size());
    for (uint8_t d : digits) out.push_back(ALPHABET[d]);
    return out;
}

std::string isosig(const Triangulation& t) {
    return sig_to_string(*minimise(t, false));
}

std::optional<std::string> minimal_table_sig(const Triangulation& t) {
    auto digits = minimise(t, true);
    if (!digits) return std::nullopt;
    return sig_to_string(*digits);
}

Triangulation decode(const std::string& sig) {
    std::vector<int> digits;
    digits.reserve(sig.size());
    for (char c : sig) {
        int d = digit_of_char(c);
        if (d < 0) throw TriError(Err::MalformedSignature, "character outside signature alphabet");
        digits.push_back(d);
    }

    std::size_t pos = 0;
    long long n = 0;
    int shift = 0;
    for (;;) {
        if (pos >= digits.size() || shift > 30)
            throw TriError(Err::MalformedSignature, "truncated tetrahedron count");
        int d = digits[pos++];
        n |= static_cast<long long>(d & 31) << shift;
        shift += 5;
        if (!(d & 32)) break;
    }
    if (n < 1) throw TriError(Err::MalformedSignature, "tetrahedron count must be positive");
    if (n > static_cast<long long>(digits.size()))
        throw TriError(Err::MalformedSignature, "signature too short for its size header");

    const int w = adj_width(static_cast<int>(n));
    if (digits.size() - pos != static_cast<std::size_t>(4 * n * (w + 1)))
        throw TriError(Err::MalformedSignature, "signature length does not match its size header");

    GluingTable table(n);
    for (int tet = 0; tet < n; ++tet)
        for (int f = 0; f < 4; ++f) {
            long long adj = 0;
            for (int d = 0; d < w; ++d) adj = (adj << 6) | digits[pos++];
            int p = digits[pos++];
            if (adj >= n) throw TriError(Err::MalformedSignature, "adjacent tetrahedron out of range");
            if (p >= 24) throw TriError(Err::MalformedSignature, "permutation index out of range");
            table[tet][f] = {static_cast<int>(adj), Perm4::from_index(p)};
        }
    try {
        return Triangulation::from_table(std::move(table));
    } catch (const TriError& e) {
        throw TriError(Err::MalformedSignature, std::string("signature decodes to no valid triangulation: ") + e.what());
    }
}

bool is_isomorphic(const Triangulation& a, const Triangulation& b) {
    if (a.size() != b.size()) return false;
    return isosig(a) == isosig(b);
}

} // namespace tri
