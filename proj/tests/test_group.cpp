#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "potency/complement.hpp"
#include "potency/presentation.hpp"
#include "potency/quotient.hpp"
#include "potency/words.hpp"

using namespace potency;

TEST_CASE("word reduction", "[group]") {
    REQUIRE(free_reduce({1, -1, 2}) == Word{2});
    REQUIRE(free_reduce({1, 2, -2, -1}) == Word{});
    REQUIRE(cyclically_reduce({1, 2, 3, -1}) == Word{2, 3});
    REQUIRE(inverse_word({1, -2, 3}) == Word{-3, 2, -1});
    REQUIRE(canonical_relator({2, 1}) == canonical_relator({1, 2}));
    REQUIRE(canonical_relator({1, 2}) == canonical_relator({-2, -1}));
    REQUIRE(substitute_generator({1, 2, -1}, 1, {3, 3}) == Word{3, 3, 2, -3, -3});
}

TEST_CASE("edge-path presentation of small complexes", "[group]") {
    SimplicialComplex hollow = SimplicialComplex::from_facets({{0, 1}, {0, 2}, {1, 2}});
    Presentation circle = edge_path_presentation(hollow, 0);
    REQUIRE(circle.n_generators == 1);
    REQUIRE(circle.relators.empty());

    SimplicialComplex tet_bd = boundary_subcomplex(SimplicialComplex::from_facets({{0, 1, 2, 3}}));
    TietzeResult sphere = tietze_simplify(edge_path_presentation(tet_bd, 0));
    REQUIRE(sphere.presentation.n_generators == 0);
    REQUIRE(sphere.presentation.relators.empty());

    TietzeResult barnette = tietze_simplify(edge_path_presentation(barnette_complex(), 0));
    REQUIRE(barnette.presentation.n_generators == 0);
    REQUIRE(barnette.presentation.relators.empty());
    REQUIRE_FALSE(barnette.budget_exceeded);

    SimplicialComplex two = SimplicialComplex::from_facets({{0, 1}, {2, 3}});
    REQUIRE_THROWS_AS(edge_path_presentation(two, 0), Disconnected);
    REQUIRE_THROWS_AS(edge_path_presentation(hollow, 9), UnknownBase);
}

TEST_CASE("the Moebius band has fundamental group Z", "[group]") {
    TietzeResult t = tietze_simplify(edge_path_presentation(mobius_complex(), 0));
    REQUIRE(t.presentation.n_generators == 1);
    REQUIRE(t.presentation.relators.empty());
}

TEST_CASE("tietze moves", "[group]") {
    // <a | a> is trivial
    TietzeResult t1 = tietze_simplify({1, {{1}}});
    REQUIRE(t1.presentation.n_generators == 0);
    REQUIRE(t1.presentation.relators.empty());

    // <a, b | a b^-1> identifies the generators
    TietzeResult t2 = tietze_simplify({2, {{1, -2}}});
    REQUIRE(t2.presentation.n_generators == 1);
    REQUIRE(t2.presentation.relators.empty());

    // single-occurrence generator elimination
    TietzeResult t3 = tietze_simplify({2, {{1, 1, 2}}});
    REQUIRE(t3.presentation.n_generators == 1);
    REQUIRE(t3.presentation.relators.empty());

    // duplicate relators (up to rotation and inversion) collapse
    TietzeResult t4 = tietze_simplify({2, {{1, 2, -1, -2}, {2, -1, -2, 1}, {-2, -1, 2, 1}}});
    REQUIRE(t4.presentation.relators.size() == 1);

    // torsion relator a^2 survives (not an identification)
    TietzeResult t5 = tietze_simplify({1, {{1, 1}}});
    REQUIRE(t5.presentation.n_generators == 1);
    REQUIRE(t5.presentation.relators == std::vector<Word>{{1, 1}});

    // zero budget returns best-so-far with the flag set
    TietzeResult t6 = tietze_simplify({1, {{1}}}, 0);
    REQUIRE(t6.budget_exceeded);
    REQUIRE(t6.presentation.n_generators == 1);

    REQUIRE_THROWS_AS(tietze_simplify({1, {{2}}}), Error);  // letter out of range
}

TEST_CASE("abelianization invariants", "[group]") {
    // trefoil: aba b^-1 a^-1 b^-1
    AbelianizationResult tre = abelianization_invariants({2, {{1, 2, 1, -2, -1, -2}}});
    REQUIRE(tre.rank == 1);
    REQUIRE(tre.torsion.empty());
    REQUIRE(tre.exponents == std::vector<Int>{1, 1});

    AbelianizationResult free1 = abelianization_invariants({1, {}});
    REQUIRE(free1.rank == 1);
    REQUIRE(free1.exponents == std::vector<Int>{1});

    AbelianizationResult z2 = abelianization_invariants({1, {{1, 1}}});
    REQUIRE(z2.rank == 0);
    REQUIRE(z2.torsion == std::vector<Int>{2});
    REQUIRE_FALSE(z2.exponents.has_value());

    // (3,2) torus knot form x^2 y^-3: kernel of (2,-3) is spanned by (3,2)
    AbelianizationResult torus = abelianization_invariants({2, {{1, 1, -2, -2, -2}}});
    REQUIRE(torus.rank == 1);
    REQUIRE(torus.exponents == std::vector<Int>{3, 2});
}

TEST_CASE("tietze preserves abelianization", "[group][property]") {
    std::vector<Presentation> cases = {
        {2, {{1, 2, 1, -2, -1, -2}}},
        {3, {{1, 2, -3}, {3, 1, -2}}},
        {2, {{1, 1}, {2, 2}, {1, 2, -1, -2}}},
    };
    for (const Presentation& P : cases) {
        AbelianizationResult before = abelianization_invariants(P);
        TietzeResult after = tietze_simplify(P);
        AbelianizationResult ab = abelianization_invariants(after.presentation);
        REQUIRE(ab.rank == before.rank);
        REQUIRE(ab.torsion == before.torsion);
    }
}

TEST_CASE("tietze preserves abelianization on random presentations", "[group][property]") {
    std::mt19937 rng(271828);
    std::uniform_int_distribution<int> gens(1, 5);
    std::uniform_int_distribution<int> rels(0, 6);
    std::uniform_int_distribution<int> len(1, 8);
    for (int trial = 0; trial < 150; ++trial) {
        Presentation P;
        P.n_generators = gens(rng);
        std::uniform_int_distribution<int> letter(1, P.n_generators);
        std::uniform_int_distribution<int> sign(0, 1);
        const int nr = rels(rng);
        for (int i = 0; i < nr; ++i) {
            Word w;
            const int L = len(rng);
            for (int j = 0; j < L; ++j) w.push_back(letter(rng) * (sign(rng) ? 1 : -1));
            P.relators.push_back(std::move(w));
        }
        AbelianizationResult before = abelianization_invariants(P);
        AbelianizationResult after = abelianization_invariants(tietze_simplify(P).presentation);
        REQUIRE(after.rank == before.rank);
        REQUIRE(after.torsion == before.torsion);
    }
}

TEST_CASE("presentation text format", "[group][io]") {
    Presentation P{3, {{1, 2, -3}, {3, 3}}};
    std::ostringstream os;
    write_presentation(os, P);
    std::istringstream is(os.str());
    Presentation back = read_presentation(is);
    REQUIRE(back.n_generators == P.n_generators);
    REQUIRE(back.relators == P.relators);

    std::istringstream bad("gp v1\ngens 2\nr 0\n");
    REQUIRE_THROWS_AS(read_presentation(bad), ParseError);
    std::istringstream bad2("gp v1\ngens 2\nr 3\n");
    REQUIRE_THROWS_AS(read_presentation(bad2), ParseError);
}

TEST_CASE("knot complement preconditions", "[group]") {
    SimplicialComplex B = barnette_complex();
    REQUIRE_THROWS_AS(knot_complement_complex(B, SimplicialComplex()), NotSubcomplex);
    REQUIRE_THROWS_AS(knot_complement_complex(B, mobius_complex()), NotSubcomplex);
    // a cycle that is not a subcomplex of B
    SimplicialComplex other = SimplicialComplex::from_facets({{0, 3}, {3, 11}, {0, 11}});
    REQUIRE_THROWS_AS(knot_complement_complex(B, other), NotSubcomplex);
    // ambient complex not a closed 3-manifold (cycle <8,9,10> does lie in the prism)
    SimplicialComplex in_prism = SimplicialComplex::from_facets({{8, 9}, {8, 10}, {9, 10}});
    REQUIRE_THROWS_AS(knot_complement_complex(prism_complex(), in_prism), NotClosed3Manifold);
}

TEST_CASE("unknot control pipeline", "[group][pipeline]") {
    KnotPipelineResult r = run_knot_pipeline(unknot_control_sphere(), unknot_control_cycle());
    REQUIRE(r.complement.is_pure());
    REQUIRE(r.complement.dim() == 3);
    REQUIRE(connected_components(r.complement) == 1);
    REQUIRE(r.h0 == HomologyGroup{1, {}});
    REQUIRE(r.h1 == HomologyGroup{1, {}});
    REQUIRE(r.group.n_generators == 1);
    REQUIRE(r.group.relators.empty());
    REQUIRE(r.alexander == LaurentPolynomial::one());
    REQUIRE_FALSE(r.s3_nonabelian);
    REQUIRE_FALSE(r.budget_exceeded);

    // the exterior of a cycle in a 3-sphere is bounded by a torus
    SimplicialComplex bd = boundary_subcomplex(r.complement);
    REQUIRE(bd.dim() == 2);
    REQUIRE(connected_components(bd) == 1);
    REQUIRE(euler_characteristic(bd) == 0);
    REQUIRE(boundary_subcomplex(bd).empty());
    REQUIRE(orientability(bd).orientable);
}
