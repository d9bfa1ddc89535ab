#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tri/triangulation.hpp"

namespace tri {

// A canonical labelling of a connected triangulation: reading the adjacent
// tetrahedra of faces (0,0), (0,1), ..., (n-1,3) in the relabelled table,
// (i) tetrahedra first appear in increasing index order, and (ii) when a
// tetrahedron first appears, the gluing onto it is the identity. Each choice
// of start tetrahedron and start permutation extends to exactly one canonical
// labelling, giving 24n in total.
struct CanonicalLabelling {
    int start_tet = 0;
    Perm4 start_perm;
    std::vector<int> tet_image;    // old tet -> new index
    std::vector<Perm4> vertex_map; // old tet labels -> new labels
};

std::vector<CanonicalLabelling> canonical_labellings(const Triangulation& t);

// Signature byte encoding of one labelled gluing table, as base-64 digit
// values 0..63:
//   [n as a variable-length quantity]  [adj digits, perm digit] x 4n
// The VLQ uses 5 payload bits per digit, least significant group first, with
// digit bit 5 (value 32) set on every group except the last. Each adjacent
// tetrahedron index is written big-endian in w digits where w is the smallest
// positive integer with 64^w >= n; each permutation index is one digit.
// Entries follow the relabelled table in row-major (tet, face) order.
std::vector<uint8_t> encode_labelled(const Triangulation& t, const CanonicalLabelling& lab);

// Digit values 0..63 mapped onto 'a'..'z', 'A'..'Z', '0'..'9', '+', '-'.
std::string sig_to_string(const std::vector<uint8_t>& digits);

// Isomorphism signature: the lexicographically smallest of the 24n canonical
// encodings (compared as digit sequences), rendered as a string. Two
// triangulations have equal signatures iff they are isomorphic.
std::string isosig(const Triangulation& t);

// If the triangulation's own table (which must already be a canonical
// labelling, start (0, identity)) is the lexicographic minimum over all 24n
// canonical encodings, returns its signature; otherwise nullopt. Used by the
// census to emit each isomorphism class exactly once.
std::optional<std::string> minimal_table_sig(const Triangulation& t);

// Inverse of isosig on its image; accepts any structurally well-formed
// signature string. Throws Err::MalformedSignature otherwise.
Triangulation decode(const std::string& sig);

bool is_isomorphic(const Triangulation& a, const Triangulation& b);

} // namespace tri
