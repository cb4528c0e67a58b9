#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "potency/complex_io.hpp"
#include "potency/quotient.hpp"

namespace fs = std::filesystem;
using namespace potency;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    fs::path dir = fs::temp_directory_path() / "potency_cli_tests";
    fs::create_directories(dir);
    fs::path out = dir / ("out" + std::to_string(counter));
    fs::path err = dir / ("err" + std::to_string(counter));
    ++counter;
    std::string cmd = std::string("\"") + POTENCY_BIN + "\" " + args + " > \"" + out.string() +
                      "\" 2> \"" + err.string() + "\"";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

fs::path scratch_dir() {
    fs::path dir = fs::temp_directory_path() / "potency_cli_tests";
    fs::create_directories(dir);
    return dir;
}

std::string fixture(const std::string& name) {
    return (fs::path(POTENCY_FIXTURES) / name).string();
}

}  // namespace

TEST_CASE("emit writes deterministic complexes that round-trip", "[cli]") {
    fs::path a = scratch_dir() / "barnette_a.sc";
    fs::path b = scratch_dir() / "barnette_b.sc";
    REQUIRE(run_cli("emit barnette -o \"" + a.string() + "\"").exit_code == 0);
    REQUIRE(run_cli("emit barnette -o \"" + b.string() + "\"").exit_code == 0);
    REQUIRE(slurp(a) == slurp(b));
    REQUIRE(read_complex_file(a.string()) == barnette_complex());

    std::string text = slurp(a);
    REQUIRE(text.find("dim 3\n") != std::string::npos);
    int f_lines = 0;
    for (std::size_t pos = 0; (pos = text.find("\nf ", pos)) != std::string::npos; ++pos)
        ++f_lines;
    REQUIRE(f_lines == 19);

    RunResult knot = run_cli("emit knot");
    REQUIRE(knot.exit_code == 0);
    REQUIRE(knot.out == "sc v1\ndim 1\nf 0 9\nf 0 10\nf 1 8\nf 1 10\nf 2 8\nf 2 9\n");

    REQUIRE(run_cli("emit dodecahedron").exit_code == 2);
}

TEST_CASE("command output is deterministic", "[cli]") {
    fs::path b = scratch_dir() / "det.sc";
    run_cli("emit barnette -o \"" + b.string() + "\"");
    RunResult h1 = run_cli("homology \"" + b.string() + "\"");
    RunResult h2 = run_cli("homology \"" + b.string() + "\"");
    REQUIRE(h1.out == h2.out);
    RunResult a1 = run_cli("alexander \"" + fixture("sphere_delta4.sc") + "\" --knot \"" +
                           fixture("unknot_cycle.sc") + "\"");
    RunResult a2 = run_cli("alexander \"" + fixture("sphere_delta4.sc") + "\" --knot \"" +
                           fixture("unknot_cycle.sc") + "\"");
    REQUIRE(a1.out == a2.out);
}

TEST_CASE("homology and fvector commands", "[cli]") {
    fs::path b = scratch_dir() / "b.sc";
    fs::path m = scratch_dir() / "m.sc";
    run_cli("emit barnette -o \"" + b.string() + "\"");
    run_cli("emit mobius -o \"" + m.string() + "\"");

    RunResult hb = run_cli("homology \"" + b.string() + "\"");
    REQUIRE(hb.exit_code == 0);
    REQUIRE(hb.out.find("H0 rank=1 torsion=[]") != std::string::npos);
    REQUIRE(hb.out.find("H1 rank=0 torsion=[]") != std::string::npos);
    REQUIRE(hb.out.find("H3 rank=1 torsion=[]") != std::string::npos);

    RunResult hm = run_cli("homology \"" + m.string() + "\"");
    REQUIRE(hm.out.find("H1 rank=1 torsion=[]") != std::string::npos);

    RunResult fv = run_cli("fvector \"" + b.string() + "\"");
    REQUIRE(fv.out.find("f_vector 8 27 38 19") != std::string::npos);
    REQUIRE(fv.out.find("euler_characteristic 0") != std::string::npos);
}

TEST_CASE("parse errors surface with line numbers and exit code 2", "[cli]") {
    fs::path bad = scratch_dir() / "bad.sc";
    std::ofstream(bad) << "sc v1\ndim 2\nf 0 1 2\nf 1 1 2\n";
    RunResult r = run_cli("homology \"" + bad.string() + "\"");
    REQUIRE(r.exit_code == 2);
    REQUIRE(r.err.find("line 4") != std::string::npos);

    REQUIRE(run_cli("homology /nonexistent/path.sc").exit_code == 2);
    REQUIRE(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("links command distinguishes closed manifolds", "[cli]") {
    fs::path b = scratch_dir() / "lb.sc";
    fs::path p = scratch_dir() / "lp.sc";
    run_cli("emit barnette -o \"" + b.string() + "\"");
    run_cli("emit prism -o \"" + p.string() + "\"");
    REQUIRE(run_cli("links \"" + b.string() + "\"").exit_code == 0);
    RunResult rp = run_cli("links \"" + p.string() + "\"");
    REQUIRE(rp.exit_code == 1);
    REQUIRE(rp.out.find("FAIL") != std::string::npos);
}

TEST_CASE("alexander pipeline on the trefoil instance", "[cli]") {
    fs::path b = scratch_dir() / "ab.sc";
    fs::path k = scratch_dir() / "ak.sc";
    run_cli("emit barnette -o \"" + b.string() + "\"");
    run_cli("emit knot -o \"" + k.string() + "\"");
    RunResult r = run_cli("alexander \"" + b.string() + "\" --knot \"" + k.string() + "\"");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("alexander 1 -1 1") != std::string::npos);
    REQUIRE(r.out.find("s3_nonabelian true") != std::string::npos);
    REQUIRE(r.out.find("abelianization rank=1 torsion=[]") != std::string::npos);
}

TEST_CASE("alexander pipeline on the bundled unknot fixture", "[cli]") {
    RunResult r = run_cli("alexander \"" + fixture("sphere_delta4.sc") + "\" --knot \"" +
                          fixture("unknot_cycle.sc") + "\"");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("alexander 1\n") != std::string::npos);
    REQUIRE(r.out.find("s3_nonabelian false") != std::string::npos);

    // knot file that is not a subcomplex is rejected
    fs::path k = scratch_dir() / "notsub.sc";
    std::ofstream(k) << "sc v1\ndim 1\nf 0 5\nf 5 6\nf 0 6\n";
    RunResult bad = run_cli("alexander \"" + fixture("sphere_delta4.sc") + "\" --knot \"" +
                            k.string() + "\"");
    REQUIRE(bad.exit_code == 2);
    REQUIRE(bad.err.find("complement") != std::string::npos);
}

TEST_CASE("verify-paper passes and the corrupted table fails", "[cli]") {
    RunResult ok = run_cli("verify-paper --grid 2");
    REQUIRE(ok.exit_code == 0);
    REQUIRE(ok.out.find("FAIL") == std::string::npos);
    REQUIRE(ok.out.find("CHECK quotient_isomorphism PASS") != std::string::npos);
    REQUIRE(ok.out.find("CHECK trefoil_pipeline PASS") != std::string::npos);

    // corrupt one prism facet: <4,5,7,9> -> <4,5,7,11>
    SimplicialComplex corrupted = SimplicialComplex::from_facets({
        {4, 5, 7, 11},  {5, 6, 7, 10}, {4, 6, 7, 8},  {4, 7, 8, 9},  {5, 7, 9, 10},
        {6, 7, 8, 10},  {4, 1, 8, 9},  {5, 2, 9, 10}, {0, 6, 8, 10}, {0, 8, 10, 11},
        {1, 8, 9, 11},  {2, 9, 10, 11}, {0, 1, 8, 11}, {1, 2, 9, 11}, {0, 2, 10, 11},
        {7, 8, 9, 10},  {8, 9, 10, 11}, {0, 1, 2, 11}, {0, 1, 2, 3},
    });
    fs::path bad = scratch_dir() / "corrupted_prism.sc";
    write_complex_file(bad.string(), corrupted);
    RunResult fail = run_cli("verify-paper --grid 2 --prism \"" + bad.string() + "\"");
    REQUIRE(fail.exit_code == 1);
    REQUIRE(fail.out.find("CHECK quotient_isomorphism FAIL") != std::string::npos);
}

TEST_CASE("export-prism writes exact rational mesh files", "[cli]") {
    fs::path off = scratch_dir() / "prism.off";
    fs::path seg = scratch_dir() / "d.segments";
    REQUIRE(run_cli("export-prism --off \"" + off.string() + "\" --segments \"" +
                    seg.string() + "\"").exit_code == 0);
    std::string off_text = slurp(off);
    REQUIRE(off_text.rfind("OFF\n6 8 0\n", 0) == 0);
    REQUIRE(off_text.find("-1/2") == std::string::npos);  // only corner vertices
    REQUIRE(slurp(seg).find("seg 0/1 0/1 0/1  1/3 1/3 1/3") != std::string::npos);
    REQUIRE(run_cli("export-prism").exit_code == 2);
}
