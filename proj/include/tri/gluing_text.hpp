#pragma once

#include <iosfwd>
#include <string>

#include "tri/triangulation.hpp"

namespace tri {

// Plain-text gluing tables. First non-comment line holds the tetrahedron
// count n; the following 4n lines each hold "t f t' p", meaning face f of
// tetrahedron t is glued to tetrahedron t' under the permutation with index p.
// '#' starts a comment running to the end of the line. write_gluing_text
// emits rows in (t, f) order, and reading its output back reproduces the
// triangulation exactly.
std::string write_gluing_text(const Triangulation& t);
Triangulation read_gluing_text(std::istream& in);
Triangulation read_gluing_text(const std::string& text);

} // namespace tri
