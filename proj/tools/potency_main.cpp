// potency: build the prism/Barnette complexes, compute their invariants, and
// run the verification suite.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "potency/potency.hpp"

namespace {

using namespace potency;

SimplicialComplex builtin_complex(const std::string& name) {
    if (name == "prism") return prism_complex();
    if (name == "barnette") return barnette_complex();
    if (name == "mobius") return mobius_complex();
    if (name == "knot") return knot_cycle_complex();
    throw UnknownName("unknown complex name: " + name +
                      " (expected prism, barnette, mobius or knot)");
}

int cmd_emit(const std::string& name, const std::string& out) {
    SimplicialComplex K = builtin_complex(name);
    if (out.empty()) {
        write_complex(std::cout, K);
    } else {
        write_complex_file(out, K);
    }
    return 0;
}

int cmd_homology(const std::string& path) {
    SimplicialComplex K = read_complex_file(path);
    std::vector<HomologyGroup> h = homology_groups(K);
    for (std::size_t d = 0; d < h.size(); ++d)
        std::cout << "H" << d << " " << h[d].to_string() << "\n";
    return 0;
}

int cmd_links(const std::string& path) {
    SimplicialComplex K = read_complex_file(path);
    ManifoldReport rep = check_closed_3_manifold(K);
    for (const auto& e : rep.entries) {
        std::cout << "CHECK " << e.name << " " << (e.pass ? "PASS" : "FAIL");
        if (!e.detail.empty()) std::cout << " " << e.detail;
        std::cout << "\n";
    }
    return rep.all_pass() ? 0 : 1;
}

int cmd_fvector(const std::string& path) {
    SimplicialComplex K = read_complex_file(path);
    std::cout << "f_vector";
    for (long x : f_vector(K)) std::cout << " " << x;
    std::cout << "\n";
    std::cout << "euler_characteristic " << euler_characteristic(K) << "\n";
    return 0;
}

int cmd_alexander(const std::string& complex_path, const std::string& knot_path,
                  long long budget) {
    SimplicialComplex K = read_complex_file(complex_path);
    SimplicialComplex L = read_complex_file(knot_path);
    run_knot_pipeline(K, L, budget, [](const std::string& line) { std::cout << line << "\n"; });
    return 0;
}

int cmd_verify_paper(int grid, long long budget, const std::string& prism_path) {
    VerifyOptions opt;
    opt.grid = grid;
    opt.tietze_budget = budget;
    if (!prism_path.empty()) opt.prism_override = read_complex_file(prism_path);
    CheckReport rep = run_verify_paper(opt);
    rep.print(std::cout);
    return rep.all_pass() ? 0 : 1;
}

int cmd_export_prism(const std::string& off_path, const std::string& segments_path) {
    if (off_path.empty() && segments_path.empty())
        throw UnknownName("export-prism needs --off and/or --segments");
    if (!off_path.empty()) {
        std::ofstream os(off_path, std::ios::binary);
        if (!os) throw IoError("cannot open " + off_path + " for writing");
        write_prism_off(os);
    }
    if (!segments_path.empty()) {
        std::ofstream os(segments_path, std::ios::binary);
        if (!os) throw IoError("cannot open " + segments_path + " for writing");
        write_d_segments(os);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"simplicial verification of the prism model of the third symmetric potency "
                 "of the circle"};
    app.require_subcommand(1);

    std::string emit_name, emit_out;
    auto* emit = app.add_subcommand("emit", "write a built-in complex in the sc text format");
    emit->add_option("name", emit_name, "prism | barnette | mobius | knot")->required();
    emit->add_option("-o,--out", emit_out, "output path (default: stdout)");

    std::string file_homology;
    auto* homology = app.add_subcommand("homology", "integral homology of a complex file");
    homology->add_option("file", file_homology, "complex file")->required();

    std::string file_links;
    auto* links = app.add_subcommand("links", "closed-3-manifold link checks for a complex file");
    links->add_option("file", file_links, "complex file")->required();

    std::string file_fvector;
    auto* fvector = app.add_subcommand("fvector", "f-vector and Euler characteristic");
    fvector->add_option("file", file_fvector, "complex file")->required();

    std::string alex_complex, alex_knot;
    long long alex_budget = 1'000'000;
    auto* alexander = app.add_subcommand(
        "alexander", "knot detection pipeline: complement, group, Alexander polynomial");
    alexander->add_option("file", alex_complex, "closed 3-manifold complex file")->required();
    alexander->add_option("--knot", alex_knot, "1-dimensional subcomplex file")->required();
    alexander->add_option("--budget", alex_budget, "Tietze move budget");

    int verify_grid = 12;
    long long verify_budget = 1'000'000;
    std::string verify_prism;
    auto* verify = app.add_subcommand("verify-paper", "run the full verification suite");
    verify->add_option("--grid", verify_grid, "geometry sampling grid")->check(CLI::PositiveNumber);
    verify->add_option("--budget", verify_budget, "Tietze move budget");
    verify->add_option("--prism", verify_prism,
                       "complex file overriding the built-in prism table (negative-control hook)");

    std::string off_path, segments_path;
    auto* export_prism =
        app.add_subcommand("export-prism", "exact rational OFF mesh / D-segment export");
    export_prism->add_option("--off", off_path, "OFF mesh output path");
    export_prism->add_option("--segments", segments_path, "D-segments output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (emit->parsed()) return cmd_emit(emit_name, emit_out);
        if (homology->parsed()) return cmd_homology(file_homology);
        if (links->parsed()) return cmd_links(file_links);
        if (fvector->parsed()) return cmd_fvector(file_fvector);
        if (alexander->parsed()) return cmd_alexander(alex_complex, alex_knot, alex_budget);
        if (verify->parsed()) return cmd_verify_paper(verify_grid, verify_budget, verify_prism);
        if (export_prism->parsed()) return cmd_export_prism(off_path, segments_path);
    } catch (const potency::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
