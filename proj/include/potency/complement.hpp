#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "potency/alexander.hpp"
#include "potency/complex.hpp"
#include "potency/errors.hpp"
#include "potency/homology.hpp"
#include "potency/presentation.hpp"

namespace potency {

/**
 * Simplicial model of the complement of a knotted cycle L in a closed
 * 3-manifold K.
 *
 * K is subdivided once so that the induced copy L1 of L becomes a full
 * subcomplex of K1, and once more; the result is the full subcomplex of
 * bary(K1) spanned by the barycenters of the K1-faces that do not belong to
 * L1. This is the simplicial exterior of the knot: a pure, connected
 * 3-complex that deformation-retracts |K| - |L|.
 */
inline SimplicialComplex knot_complement_complex(const SimplicialComplex& K,
                                                 const SimplicialComplex& L) {
    if (L.empty() || L.dim() != 1 || !L.is_pure())
        throw NotSubcomplex("knot must be a pure 1-dimensional complex");
    if (!is_subcomplex(L, K)) throw NotSubcomplex("knot is not a subcomplex of the manifold");
    if (!check_closed_3_manifold(K).all_pass())
        throw NotClosed3Manifold("ambient complex is not a closed 3-manifold");

    Subdivision sub1 = barycentric_subdivision(K);
    std::set<Simplex> L_faces;
    for (const Simplex& f : all_faces(L)) L_faces.insert(f);
    // K1-vertex u subdivides a face of L iff its underlying K-face is in L
    std::vector<bool> vertex_in_L1(sub1.face_of_vertex.size(), false);
    for (std::size_t u = 0; u < sub1.face_of_vertex.size(); ++u)
        vertex_in_L1[u] = L_faces.count(sub1.face_of_vertex[u]) != 0;

    Subdivision sub2 = barycentric_subdivision(sub1.complex);
    std::vector<Vertex> allowed;
    for (std::size_t lab = 0; lab < sub2.face_of_vertex.size(); ++lab) {
        // the underlying K1-face lies in L1 iff all its vertices subdivide L
        const Simplex& chain = sub2.face_of_vertex[lab];
        bool in_L1 = true;
        for (Vertex u : chain.vertices())
            if (!vertex_in_L1[static_cast<std::size_t>(u)]) {
                in_L1 = false;
                break;
            }
        if (!in_L1) allowed.push_back(static_cast<Vertex>(lab));
    }
    return full_subcomplex(sub2.complex, allowed);
}

/// Stage-by-stage record of the knot detection pipeline.
struct KnotPipelineResult {
    SimplicialComplex complement;
    std::vector<long> complement_f_vector;
    HomologyGroup h0, h1;
    int raw_generators = 0;
    std::size_t raw_relators = 0;
    int simplified_generators = 0;
    std::size_t simplified_relators = 0;
    long long tietze_steps = 0;
    bool budget_exceeded = false;
    Presentation group;  ///< the simplified presentation
    long abelianization_rank = 0;
    std::vector<Int> abelianization_torsion;
    LaurentPolynomial alexander;
    bool s3_nonabelian = false;
};

/// Called with a one-line summary after each pipeline stage completes.
using StageNote = std::function<void(const std::string&)>;

/**
 * Complement -> edge-path group -> Tietze simplification -> abelianization
 * -> Alexander polynomial -> S3 representation search. Abelianization
 * invariants are recomputed before and after simplification and must agree.
 * Errors are rethrown with the failing stage name prefixed.
 */
inline KnotPipelineResult run_knot_pipeline(const SimplicialComplex& K,
                                            const SimplicialComplex& L,
                                            long long tietze_budget = 1'000'000,
                                            const StageNote& note = {}) {
    KnotPipelineResult out;
    std::string stage = "complement";
    try {
        out.complement = knot_complement_complex(K, L);
        out.complement_f_vector = f_vector(out.complement);
        if (note) {
            std::string fv;
            for (long x : out.complement_f_vector) fv += (fv.empty() ? "" : ",") + std::to_string(x);
            note("complement facets=" + std::to_string(out.complement.n_facets()) +
                 " f_vector=" + fv);
        }

        stage = "homology";
        std::vector<HomologyGroup> h = homology_groups(out.complement, false, 1);
        out.h0 = h.at(0);
        out.h1 = h.at(1);
        if (note) note("homology H0 " + out.h0.to_string() + " H1 " + out.h1.to_string());

        stage = "presentation";
        Presentation raw =
            edge_path_presentation(out.complement, out.complement.vertex_set().front());
        out.raw_generators = raw.n_generators;
        out.raw_relators = raw.relators.size();
        if (note)
            note("presentation raw generators=" + std::to_string(out.raw_generators) +
                 " relators=" + std::to_string(out.raw_relators));
        AbelianizationResult ab_before = abelianization_invariants(raw);

        stage = "simplify";
        TietzeResult simplified = tietze_simplify(raw, tietze_budget);
        out.tietze_steps = simplified.steps;
        out.budget_exceeded = simplified.budget_exceeded;
        out.group = std::move(simplified.presentation);
        out.simplified_generators = out.group.n_generators;
        out.simplified_relators = out.group.relators.size();
        if (note)
            note("presentation simplified generators=" +
                 std::to_string(out.simplified_generators) +
                 " relators=" + std::to_string(out.simplified_relators) +
                 (out.budget_exceeded ? " budget_exceeded" : ""));

        stage = "abelianization";
        AbelianizationResult ab_after = abelianization_invariants(out.group);
        if (ab_before.rank != ab_after.rank || ab_before.torsion != ab_after.torsion)
            throw Error("Tietze simplification changed the abelianization");
        out.abelianization_rank = ab_after.rank;
        out.abelianization_torsion = ab_after.torsion;
        if (note) {
            std::string tors;
            for (const Int& t : out.abelianization_torsion)
                tors += (tors.empty() ? "" : ",") + t.str();
            note("abelianization rank=" + std::to_string(out.abelianization_rank) + " torsion=[" +
                 tors + "]");
        }

        stage = "alexander";
        out.alexander = alexander_polynomial(out.group);
        if (note) {
            std::string line = "alexander";
            for (const Int& c : out.alexander.coefficients_from_zero()) line += " " + c.str();
            if (out.alexander.is_zero()) line += " 0";
            note(line);
        }

        stage = "s3";
        out.s3_nonabelian = exists_nonabelian_s3_rep(out.group);
        if (note) note(std::string("s3_nonabelian ") + (out.s3_nonabelian ? "true" : "false"));
    } catch (const Error& e) {
        throw Error(stage + ": " + e.what());
    }
    return out;
}

// --------------------------------------------------------------------------
// Negative-control fixture: a visibly unknotted cycle in a small 3-sphere.
// --------------------------------------------------------------------------

/// The boundary of the 4-simplex: the smallest triangulated 3-sphere.
inline SimplicialComplex unknot_control_sphere() {
    return SimplicialComplex::from_facets({
        {0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 4}, {1, 2, 3, 4},
    });
}

/// A 3-cycle bounding the disk <0,1,2>: an unknot.
inline SimplicialComplex unknot_control_cycle() {
    return SimplicialComplex::from_facets({{0, 1}, {1, 2}, {0, 2}});
}

}  // namespace potency
