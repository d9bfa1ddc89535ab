#include "tri/cli.hpp"

#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "tri/census.hpp"
#include "tri/gluing_text.hpp"
#include "tri/isosig.hpp"
#include "tri/moves.hpp"
#include "tri/sigfile.hpp"

namespace {

namespace fs = std::filesystem;

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args, const std::string& input = "") {
    std::vector<const char*> argv = {"pachner"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = tri::run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& tag) {
    fs::path dir = fs::temp_directory_path() / ("pachner-test-" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("version banner") {
    CliResult r = cli({"--version"});
    CHECK(r.code == 0);
    CHECK(r.out == "pachner 1.0.0 (signature format 1)\n");
}

TEST_CASE("census prints the class count") {
    CHECK(cli({"census", "--size", "1"}).out == "4\n");
    CHECK(cli({"census", "--size", "1", "--one-vertex"}).out == "3\n");
    CHECK(cli({"census", "--size", "2"}).out == "17\n");
}

TEST_CASE("census failures map to exit codes") {
    CliResult guard = cli({"census", "--size", "7"});
    CHECK(guard.code == 1);
    CHECK(guard.err.find("error:") != std::string::npos);
    CHECK(cli({"census", "--size", "0"}).code == 1);
    CHECK(cli({"census"}).code == 2);
    CHECK(cli({"bogus"}).code == 2);
    CHECK(cli({}).code == 2);
}

TEST_CASE("census writes a readable signature file") {
    fs::path dir = fresh_dir("census");
    fs::path file = dir / "size2.sigs";
    CliResult r = cli({"census", "--size", "2", "-o", file.string()});
    CHECK(r.code == 0);
    std::vector<std::string> sigs = tri::read_sig_file(file.string());
    CHECK(sigs.size() == 17);
    std::string raw = slurp(file);
    CHECK(raw.find("# pachner 1.0.0 (signature format 1)\n") == 0);
    CHECK(raw.find("# run: census --size 2\n") != std::string::npos);
    CHECK(raw.find("# count: 17\n") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("signature files round-trip and skip decoration") {
    std::ostringstream out;
    tri::write_sig_file(out, {"abc", "def"}, {"v1", "run: x"});
    std::istringstream in(out.str());
    CHECK(tri::read_sig_file(in) == std::vector<std::string>{"abc", "def"});

    std::istringstream crlf("# c\r\nabc\r\n\r\n  \ndef\n");
    CHECK(tri::read_sig_file(crlf) == std::vector<std::string>{"abc", "def"});

    CHECK_THROWS_AS(tri::read_sig_file(std::string("/nonexistent/nowhere.sigs")),
                    tri::TriError);
}

TEST_CASE("isosig decode and encode invert each other") {
    CliResult dec = cli({"isosig", "decode", "bagagajas"});
    CHECK(dec.code == 0);
    CHECK(dec.out == tri::write_gluing_text(tri::decode("bagagajas")));

    CliResult enc = cli({"isosig", "encode"}, dec.out);
    CHECK(enc.code == 0);
    CHECK(enc.out == "bagagajas\n");

    // A non-minimal labelling still encodes to the class signature.
    CliResult enc2 = cli({"isosig", "encode"}, tri::write_gluing_text(fixtures::sample3()));
    CHECK(enc2.out == std::string(fixtures::SAMPLE3_SIG) + "\n");
}

TEST_CASE("isosig rejects garbage") {
    CHECK(cli({"isosig", "decode", "!!"}).code == 1);
    CHECK(cli({"isosig", "encode"}, "not a table").code == 1);
    CHECK(cli({"isosig"}).code == 2);
}

TEST_CASE("simplify reports the reduced triangulation") {
    // A three-tetrahedron sphere that admits no direct 3-2 move still
    // reaches the two-tetrahedron floor through jumps.
    std::string start;
    tri::SphereClosure closure = tri::sphere_closure(3, 2);
    for (const std::string& sig : closure.levels[2])
        if (tri::list_moves(tri::decode(sig), tri::MoveKind::Move32).empty()) {
            start = sig;
            break;
        }
    REQUIRE(!start.empty());
    CliResult r = cli({"simplify", start});
    CHECK(r.code == 0);
    CHECK(r.out.find("size=2\n") != std::string::npos);
    CHECK(r.out.find("result=") != std::string::npos);
}

TEST_CASE("spheres reports level counts and writes level files") {
    fs::path dir = fresh_dir("spheres");
    CliResult r = cli({"spheres", "--max-level", "2", "-o", dir.string()});
    CHECK(r.code == 0);
    CHECK(r.out == "level=1 count=1\nlevel=2 count=3\n");
    CHECK(tri::read_sig_file((dir / "level-1.sigs").string()) ==
          std::vector<std::string>{"bagagajas"});
    CHECK(tri::read_sig_file((dir / "level-2.sigs").string()).size() == 3);
    fs::remove_all(dir);
}

TEST_CASE("height and length consume sphere level files") {
    fs::path dir = fresh_dir("graph");
    CHECK(cli({"spheres", "--max-level", "3", "-o", dir.string()}).code == 0);

    CliResult h = cli({"height", "--level", "3", "--spheres", dir.string()});
    CHECK(h.code == 0);
    CHECK(h.out.find("trace=20,8,1\n") != std::string::npos);
    CHECK(h.out.find("height=2\n") != std::string::npos);
    CHECK(h.out.find("method=expand\n") != std::string::npos);

    CliResult h2 = cli({"height", "--level", "3", "--two-phase", "--spheres", dir.string()});
    CHECK(h2.out.find("method=two-phase\n") != std::string::npos);
    CHECK(h2.out.find("trace=20,8,1\n") != std::string::npos);
    CHECK(h2.out.find("height=2\n") != std::string::npos);

    CliResult l = cli({"length", "--level", "3", "--spheres", dir.string()});
    CHECK(l.code == 0);
    CHECK(l.out.find("simplifiable=3\n") != std::string::npos);
    CHECK(l.out.find("remaining=17,3,0\n") != std::string::npos);
    CHECK(l.out.find("rounds=2\n") != std::string::npos);
    CHECK(l.out.find("length=9\n") != std::string::npos);
    CHECK(l.out.find("mijatovic_ratio=") != std::string::npos);

    CliResult missing = cli({"height", "--level", "3", "--spheres", "/nonexistent"});
    CHECK(missing.code == 1);
    fs::remove_all(dir);
}

TEST_CASE("job count never changes output bytes") {
    for (auto args : std::vector<std::vector<std::string>>{
             {"census", "--size", "3"},
             {"census", "--size", "3", "--one-vertex"},
             {"spheres", "--max-level", "3"},
         }) {
        auto with_jobs = [&](const std::string& jobs) {
            auto a = args;
            a.push_back("--jobs");
            a.push_back(jobs);
            return cli(a);
        };
        CliResult one = with_jobs("1");
        CliResult eight = with_jobs("8");
        CHECK(one.code == 0);
        CHECK(one.out == eight.out);
        CHECK(one.err == eight.err);
    }

    // Signature files must match byte for byte, including headers.
    fs::path dir = fresh_dir("jobs");
    fs::path f1 = dir / "j1.sigs", f8 = dir / "j8.sigs";
    CHECK(cli({"census", "--size", "3", "--jobs", "1", "-o", f1.string()}).code == 0);
    CHECK(cli({"census", "--size", "3", "--jobs", "8", "-o", f8.string()}).code == 0);
    CHECK(slurp(f1) == slurp(f8));
    fs::remove_all(dir);
}
