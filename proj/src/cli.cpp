#include "tri/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tri/census.hpp"
#include "tri/gluing_text.hpp"
#include "tri/isosig.hpp"
#include "tri/level_graph.hpp"
#include "tri/moves.hpp"
#include "tri/sigfile.hpp"

namespace tri {

namespace {

const char* const TOOL_VERSION = "1.0.0";
const int SIGNATURE_FORMAT = 1;

int default_jobs() {
    if (const char* env = std::getenv("PACHNER_JOBS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

std::string version_line() {
    return std::string("pachner ") + TOOL_VERSION + " (signature format " +
           std::to_string(SIGNATURE_FORMAT) + ")";
}

std::vector<std::string> file_header(const std::string& run, std::size_t count) {
    return {version_line(), "run: " + run, "count: " + std::to_string(count)};
}

std::string join_counts(const std::vector<long long>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    return out;
}

std::vector<std::string> level_file(const std::string& dir, int level) {
    return read_sig_file(dir + "/level-" + std::to_string(level) + ".sigs");
}

void print_height(std::ostream& out, const HeightReport& rep) {
    out << "Excess height search at level " << rep.level
        << (rep.two_phase ? " (two-phase)" : "") << "\n";
    for (std::size_t k = 0; k < rep.components.size(); ++k)
        out << "  components over levels " << rep.level << ".." << rep.level + (int)k << ": "
            << rep.components[k] << "\n";
    if (rep.height)
        out << "  excess height bound: " << *rep.height << "\n";
    else
        out << "  excess height bound: inconclusive\n";
    out << "level=" << rep.level << "\n";
    out << "method=" << (rep.two_phase ? "two-phase" : "expand") << "\n";
    out << "trace=" << join_counts(rep.components) << "\n";
    if (rep.height)
        out << "height=" << *rep.height << "\n";
    else
        out << "height=inconclusive\n";
}

void print_length(std::ostream& out, const LengthReport& rep) {
    long long total = rep.simplifiable + (rep.remaining.empty() ? 0 : rep.remaining.front());
    out << "Simplification length search at level " << rep.level << "\n";
    out << "  level size: " << total << "\n";
    out << "  nodes with an immediate 3-2 move: " << rep.simplifiable << "\n";
    for (std::size_t k = 0; k < rep.remaining.size(); ++k)
        out << "  not yet reached after " << k << " jump rounds: " << rep.remaining[k] << "\n";
    if (rep.length) {
        out << "  jump rounds needed: " << *rep.rounds << "\n";
        out << "  simplification length bound: " << *rep.length << "\n";
        BigRational ratio(mijatovic_moves_bound(rep.level), BigInt(*rep.length));
        out << "  theoretical move bound / measured bound: " << approx_scientific(ratio) << "\n";
    } else {
        out << "  simplification length bound: inconclusive\n";
    }
    out << "level=" << rep.level << "\n";
    out << "simplifiable=" << rep.simplifiable << "\n";
    out << "remaining=" << join_counts(rep.remaining) << "\n";
    if (rep.length) {
        out << "rounds=" << *rep.rounds << "\n";
        out << "length=" << *rep.length << "\n";
        BigRational ratio(mijatovic_moves_bound(rep.level), BigInt(*rep.length));
        out << "mijatovic_ratio=" << approx_scientific(ratio) << "\n";
    } else {
        out << "rounds=inconclusive\n";
        out << "length=inconclusive\n";
    }
}

} // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Closed 3-manifold triangulations: census, signatures, Pachner moves,"
                 " and Pachner-graph analyses"};
    app.set_version_flag("--version", version_line());
    app.require_subcommand(1);

    // census
    auto* census = app.add_subcommand("census", "Enumerate closed triangulations of one size");
    int census_size = 1;
    bool census_one_vertex = false;
    bool census_force = false;
    int census_jobs = default_jobs();
    std::string census_out;
    census->add_option("--size", census_size, "Number of tetrahedra")->required();
    census->add_flag("--one-vertex", census_one_vertex, "Only one-vertex triangulations");
    census->add_option("--jobs", census_jobs, "Worker threads")->check(CLI::Range(1, 512));
    census->add_option("-o,--output", census_out, "Write sorted signatures to this file");
    census->add_flag("--force", census_force, "Allow sizes above the built-in guard ceiling");
    census->callback([&] {
        CensusSpec spec;
        spec.size = census_size;
        spec.one_vertex_only = census_one_vertex;
        spec.jobs = census_jobs;
        spec.override_ceiling = census_force;
        std::vector<std::string> sigs = enumerate_closed(spec);
        if (!census_out.empty()) {
            std::string run = "census --size " + std::to_string(census_size) +
                              (census_one_vertex ? " --one-vertex" : "");
            write_sig_file(census_out, sigs, file_header(run, sigs.size()));
        }
        out << sigs.size() << "\n";
    });

    // spheres
    auto* spheres = app.add_subcommand(
        "spheres", "One-vertex sphere triangulations up to a level, by move closure");
    int spheres_max_level = 1;
    int spheres_height = 2;
    int spheres_jobs = default_jobs();
    std::string spheres_dir;
    spheres->add_option("--max-level", spheres_max_level, "Largest reported level")->required();
    spheres->add_option("--height", spheres_height, "Extra levels explored above max-level");
    spheres->add_option("--jobs", spheres_jobs, "Worker threads")->check(CLI::Range(1, 512));
    spheres->add_option("-o,--out-dir", spheres_dir, "Directory for level-<k>.sigs files");
    spheres->callback([&] {
        SphereClosure closure = sphere_closure(spheres_max_level, spheres_height, spheres_jobs);
        if (!spheres_dir.empty()) std::filesystem::create_directories(spheres_dir);
        for (int level = 1; level <= closure.max_level; ++level) {
            const std::vector<std::string>& sigs = closure.levels[level - 1];
            if (!spheres_dir.empty()) {
                std::string run = "spheres --max-level " + std::to_string(spheres_max_level) +
                                  " --height " + std::to_string(spheres_height) + " (level " +
                                  std::to_string(level) + ")";
                write_sig_file(spheres_dir + "/level-" + std::to_string(level) + ".sigs", sigs,
                               file_header(run, sigs.size()));
            }
            out << "level=" << level << " count=" << sigs.size() << "\n";
        }
    });

    // isosig encode / decode
    auto* isosig_cmd = app.add_subcommand("isosig", "Signature encoding and decoding");
    isosig_cmd->require_subcommand(1);
    auto* enc = isosig_cmd->add_subcommand(
        "encode", "Read a gluing table from standard input, print its signature");
    enc->callback([&] { out << isosig(read_gluing_text(in)) << "\n"; });
    auto* dec =
        isosig_cmd->add_subcommand("decode", "Print the gluing table behind a signature");
    std::string dec_sig;
    dec->add_option("signature", dec_sig, "Signature to decode")->required();
    dec->callback([&] { out << write_gluing_text(decode(dec_sig)); });

    // simplify
    auto* simplify = app.add_subcommand("simplify", "Greedily reduce a triangulation");
    std::string simplify_sig;
    int simplify_rounds = 6;
    simplify->add_option("signature", simplify_sig, "Starting signature")->required();
    simplify->add_option("--max-rounds", simplify_rounds,
                         "Jump search rounds allowed when no reducing move applies");
    simplify->callback([&] {
        SimplifyResult res = greedy_simplify(decode(simplify_sig), simplify_rounds);
        for (const std::string& line : res.trace) out << line << "\n";
        out << "result=" << isosig(res.result) << "\n";
        out << "size=" << res.result.size() << "\n";
    });

    // height
    auto* height = app.add_subcommand("height", "Excess height of one level of the sphere graph");
    int height_level = 3;
    int height_max = 8;
    int height_jobs = default_jobs();
    bool height_two_phase = false;
    std::string height_dir;
    height->add_option("--level", height_level, "Level to analyse")->required();
    height->add_flag("--two-phase", height_two_phase, "Use the memory-light two-phase variant");
    height->add_option("--max-height", height_max, "Expansion sweep budget");
    height->add_option("--jobs", height_jobs, "Worker threads")->check(CLI::Range(1, 512));
    height->add_option("--spheres", height_dir, "Directory holding level-<k>.sigs files")
        ->required();
    height->callback([&] {
        std::vector<std::string> nodes = level_file(height_dir, height_level);
        HeightReport rep = height_two_phase
                               ? height_bound_two_phase(height_level, nodes, height_jobs)
                               : height_bound(height_level, nodes, height_max, height_jobs);
        print_height(out, rep);
    });

    // length
    auto* length =
        app.add_subcommand("length", "Simplification length of one level of the sphere graph");
    int length_level = 3;
    int length_rounds = 64;
    int length_jobs = default_jobs();
    std::string length_dir;
    length->add_option("--level", length_level, "Level to analyse")->required();
    length->add_option("--max-rounds", length_rounds, "Jump round budget");
    length->add_option("--jobs", length_jobs, "Worker threads")->check(CLI::Range(1, 512));
    length->add_option("--spheres", length_dir, "Directory holding level-<k>.sigs files")
        ->required();
    length->callback([&] {
        std::vector<std::string> nodes = level_file(length_dir, length_level);
        print_length(out, length_bound(length_level, nodes, length_rounds, length_jobs));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Help and version requests carry exit code 0; real usage errors
        // map to exit code 2.
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const TriError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace tri
