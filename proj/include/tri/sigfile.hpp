#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tri {

// Signature list files: '#' comment lines first (generator version and run
// parameters), then one signature per line, sorted. Readers skip comments
// and blank lines, so the files round-trip through these two calls.
void write_sig_file(std::ostream& out, const std::vector<std::string>& sigs,
                    const std::vector<std::string>& header);
void write_sig_file(const std::string& path, const std::vector<std::string>& sigs,
                    const std::vector<std::string>& header);

std::vector<std::string> read_sig_file(std::istream& in);
std::vector<std::string> read_sig_file(const std::string& path);

} // namespace tri
