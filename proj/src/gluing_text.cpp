#include "tri/gluing_text.hpp"

#include <sstream>
#include <vector>

namespace tri {

std::string write_gluing_text(const Triangulation& t) {
    std::ostringstream out;
    out << t.size() << "\n";
    for (int tet = 0; tet < t.size(); ++tet)
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = t.gluing(tet, f);
            out << tet << " " << f << " " << g.tet << " " << g.perm.index() << "\n";
        }
    return out.str();
}

Triangulation read_gluing_text(std::istream& in) {
    std::vector<long long> tokens;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long v;
        while (ls >> v) tokens.push_back(v);
        if (!ls.eof())
            throw TriError(Err::BadInput, "gluing table contains a non-integer token");
    }
    if (tokens.empty()) throw TriError(Err::BadInput, "empty gluing table");
    long long n = tokens[0];
    if (n < 1 || n > 1'000'000) throw TriError(Err::BadInput, "bad tetrahedron count");
    if (static_cast<long long>(tokens.size()) != 1 + 16 * n)
        throw TriError(Err::BadInput, "gluing table must have exactly 4n rows of 4 integers");
    std::vector<GluingEntry> entries;
    entries.reserve(4 * n);
    for (long long i = 0; i < 4 * n; ++i) {
        long long t = tokens[1 + 4 * i], f = tokens[2 + 4 * i];
        long long adj = tokens[3 + 4 * i], p = tokens[4 + 4 * i];
        if (t < 0 || t >= n || f < 0 || f > 3 || adj < 0 || adj >= n || p < 0 || p > 23)
            throw TriError(Err::BadInput, "gluing row out of range");
        entries.push_back({static_cast<int>(t), static_cast<int>(f), static_cast<int>(adj),
                           Perm4::from_index(static_cast<int>(p))});
    }
    return build_triangulation(entries);
}

Triangulation read_gluing_text(const std::string& text) {
    std::istringstream in(text);
    return read_gluing_text(in);
}

} // namespace tri
