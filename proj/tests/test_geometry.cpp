#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <sstream>

#include "potency/geometry.hpp"

using namespace potency;

namespace {

Point3 pt(long xn, long xd, long yn, long yd, long zn, long zd) {
    return {Rational(xn, xd), Rational(yn, yd), Rational(zn, zd)};
}

CircleSubset cs(std::initializer_list<Rational> vals) {
    return CircleSubset::canonical(std::vector<Rational>(vals));
}

}  // namespace

TEST_CASE("membership predicates", "[geometry]") {
    Point3 origin{0, 0, 0};
    REQUIRE(in_P(origin));
    REQUIRE(in_S(origin));
    REQUIRE(in_D(origin));

    Point3 bary = pt(-1, 3, 0, 1, 1, 3);  // barycenter of the bottom face
    REQUIRE(in_P(bary));
    REQUIRE_FALSE(in_S(bary));
    REQUIRE_FALSE(in_D(bary));

    Point3 diag = pt(1, 6, 1, 6, 1, 6);
    REQUIRE(in_D(diag));

    Point3 outside = pt(1, 1, 0, 1, 0, 1);
    REQUIRE_FALSE(in_P(outside));
}

TEST_CASE("p and pi maps", "[geometry]") {
    REQUIRE(p_map({0, 0, 1}) == cs({0}));
    REQUIRE(p_map(pt(-2, 3, 1, 3, 1, 3)) == cs({Rational(1, 3)}));
    REQUIRE(p_map(pt(-1, 3, 0, 1, 1, 3)) ==
            cs({0, Rational(1, 3), Rational(2, 3)}));

    REQUIRE(pi_map({Rational(1, 2), Rational(1, 2), Rational(1, 2)}) == cs({Rational(1, 2)}));
    REQUIRE(pi_map({0, 1, 2}) == cs({0}));
    REQUIRE(pi_map({Rational(2, 3), Rational(1, 3), 0}) ==
            cs({0, Rational(1, 3), Rational(2, 3)}));

    REQUIRE_THROWS_AS(pi_map({}), EmptyInput);
    REQUIRE_THROWS_AS(pi_map({0, Rational(1, 4), Rational(1, 2), Rational(3, 4)}), TooMany);
}

TEST_CASE("circle subset invariants", "[geometry][property]") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<long> num(-24, 24);
    std::uniform_int_distribution<long> den(1, 12);
    std::uniform_int_distribution<int> count(1, 3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Rational> vals;
        for (int i = 0, n = count(rng); i < n; ++i) vals.emplace_back(num(rng), den(rng));
        CircleSubset s = pi_map(vals);
        REQUIRE(s.size() >= 1);
        REQUIRE(s.size() <= 3);
        for (std::size_t i = 0; i < s.size(); ++i) {
            REQUIRE(s.elements()[i] >= 0);
            REQUIRE(s.elements()[i] < 1);
            if (i) REQUIRE(s.elements()[i - 1] < s.elements()[i]);
        }
        // invariance under permutation and integer shifts
        std::vector<Rational> shifted(vals.rbegin(), vals.rend());
        shifted[0] += 3;
        REQUIRE(pi_map(shifted) == s);
    }
}

TEST_CASE("prism vertex coordinates", "[geometry]") {
    const auto& coords = prism_vertex_coordinates();
    REQUIRE(coords.size() == 12);
    REQUIRE(coords.at(5) == pt(1, 3, 1, 3, 1, 3));
    REQUIRE(coords.at(3) == pt(-1, 3, 0, 1, 1, 3));
    REQUIRE(coords.at(7) == pt(0, 1, 1, 3, 2, 3));
    REQUIRE(coords.at(8) == pt(-1, 2, 1, 2, 1, 2));
    REQUIRE(coords.at(9) == pt(-1, 6, -1, 6, 5, 6));
    REQUIRE(coords.at(10) == pt(1, 6, 1, 6, 1, 6));
    REQUIRE(coords.at(11) == pt(-1, 6, 1, 6, 1, 2));

    // vertex 8 sits on D, so its circle subset is a single point
    REQUIRE(p_map(coords.at(8)).size() == 1);
    REQUIRE(in_D(coords.at(8)));
    // vertex 11 is interior
    REQUIRE(in_P(coords.at(11)));
    REQUIRE_FALSE(in_S(coords.at(11)));
    REQUIRE(strictly_interior_P(coords.at(11)));
    // every vertex lies in the prism
    for (const auto& [v, p] : coords) REQUIRE(in_P(p));
}

TEST_CASE("D inside S inside P on a grid", "[geometry][property]") {
    const int n = 6;
    for (int i = -n; i <= n; ++i)
        for (int j = -n; j <= n; ++j)
            for (int k = 0; k <= n; ++k) {
                Point3 p{Rational(i, n), Rational(j, n), Rational(k, n)};
                if (in_D(p)) REQUIRE(in_S(p));
                if (in_S(p)) REQUIRE(in_P(p));
            }
}

TEST_CASE("lemma identification sampling", "[geometry]") {
    // the bottom/top pair carries the barycenter to the same circle subset
    const auto& coords = prism_vertex_coordinates();
    REQUIRE(p_map(coords.at(3)) == cs({0, Rational(1, 3), Rational(2, 3)}));
    REQUIRE(p_map(coords.at(3)) == p_map(coords.at(7)));
    // side pair at its corner vertices
    REQUIRE(p_map(coords.at(0)) == p_map(coords.at(4)));

    SamplingReport rep = verify_lemma_identifications(12);
    REQUIRE(rep.checked == 4 * (14 * 13) / 2);  // 4 * C(14,2)
    REQUIRE(rep.failures == 0);
    REQUIRE(rep.pass());

    // the degenerate grid still passes (vertex-only sampling)
    REQUIRE(verify_lemma_identifications(1).pass());
    REQUIRE_THROWS_AS(verify_lemma_identifications(0), Error);
}

TEST_CASE("stratification sampling", "[geometry]") {
    REQUIRE(p_map(pt(0, 1, 0, 1, 1, 2)).size() == 2);
    REQUIRE(in_S(pt(0, 1, 0, 1, 1, 2)));
    REQUIRE_FALSE(in_D(pt(0, 1, 0, 1, 1, 2)));

    SamplingReport rep = verify_stratification(6);
    REQUIRE(rep.checked == 66);
    REQUIRE(rep.failures == 0);

    REQUIRE(verify_stratification(12).pass());
    REQUIRE(verify_stratification(1).pass());
}

TEST_CASE("vertex q consistency", "[geometry]") {
    SamplingReport rep = verify_vertex_q_consistency();
    REQUIRE(rep.checked == 12);
    REQUIRE(rep.failures == 0);
}

TEST_CASE("p is injective on interior points off the strata", "[geometry][property]") {
    const int n = 6;
    std::set<CircleSubset> seen;
    long count = 0;
    for (int i = -n; i <= n; ++i)
        for (int j = -n; j <= n; ++j)
            for (int k = 0; k <= n; ++k) {
                Point3 p{Rational(i, n), Rational(j, n), Rational(k, n)};
                if (!strictly_interior_P(p) || in_S(p)) continue;
                ++count;
                CircleSubset s = p_map(p);
                REQUIRE(seen.insert(s).second);  // pairwise distinct
            }
    REQUIRE(count > 0);
}

TEST_CASE("exact OFF and segment export", "[geometry][io]") {
    std::ostringstream off;
    write_prism_off(off);
    std::string text = off.str();
    REQUIRE(text.rfind("OFF\n6 8 0\n", 0) == 0);
    REQUIRE(text.find("1/3 1/3 1/3") != std::string::npos);
    REQUIRE(text.find("-2/3 1/3 1/3") != std::string::npos);
    // no floating point anywhere: every coordinate is num/den
    REQUIRE(text.find('.') == std::string::npos);

    std::ostringstream seg;
    write_d_segments(seg);
    std::string segs = seg.str();
    REQUIRE(segs.find("seg 0/1 0/1 0/1  1/3 1/3 1/3") != std::string::npos);
    REQUIRE(segs.find("seg -1/3 -1/3 2/3  0/1 0/1 1/1") != std::string::npos);
    REQUIRE(segs.find("seg -2/3 1/3 1/3  -1/3 2/3 2/3") != std::string::npos);

    // deterministic output
    std::ostringstream off2;
    write_prism_off(off2);
    REQUIRE(off2.str() == text);
}
