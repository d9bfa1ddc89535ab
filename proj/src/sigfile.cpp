#include "tri/sigfile.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "tri/errors.hpp"

namespace tri {

void write_sig_file(std::ostream& out, const std::vector<std::string>& sigs,
                    const std::vector<std::string>& header) {
    for (const std::string& line : header) out << "# " << line << "\n";
    for (const std::string& sig : sigs) out << sig << "\n";
}

void write_sig_file(const std::string& path, const std::vector<std::string>& sigs,
                    const std::vector<std::string>& header) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw TriError(Err::BadInput, "cannot open " + path + " for writing");
    write_sig_file(out, sigs, header);
    out.flush();
    if (!out) throw TriError(Err::BadInput, "failed writing " + path);
}

std::vector<std::string> read_sig_file(std::istream& in) {
    std::vector<std::string> sigs;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        sigs.push_back(line);
    }
    return sigs;
}

std::vector<std::string> read_sig_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw TriError(Err::BadInput, "cannot open " + path);
    return read_sig_file(in);
}

} // namespace tri
