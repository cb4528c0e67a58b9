#pragma once

#include <optional>
#include <string>
#include <vector>

#include "potency/alexander.hpp"
#include "potency/complement.hpp"
#include "potency/complex.hpp"
#include "potency/geometry.hpp"
#include "potency/homology.hpp"
#include "potency/quotient.hpp"
#include "potency/report.hpp"

namespace potency {

struct VerifyOptions {
    int grid = 12;
    long long tietze_budget = 1'000'000;
    /// Replaces the built-in prism table in the shape and quotient checks;
    /// a negative-control hook for corrupted tables.
    std::optional<SimplicialComplex> prism_override;
};

/// The normalized Alexander polynomial of the trefoil, 1 - t + t^2.
inline LaurentPolynomial trefoil_alexander_polynomial() {
    return LaurentPolynomial::monomial(0, Int(1)) + LaurentPolynomial::monomial(1, Int(-1)) +
           LaurentPolynomial::monomial(2, Int(1));
}

namespace detail {

inline std::string fv_string(const std::vector<long>& fv) {
    std::string s;
    for (long x : fv) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

inline std::string homology_string(const std::vector<HomologyGroup>& h) {
    std::string s;
    for (std::size_t d = 0; d < h.size(); ++d)
        s += (d ? " " : "") + ("H" + std::to_string(d) + " " + h[d].to_string());
    return s;
}

}  // namespace detail

/**
 * Runs the whole verification suite: table shapes, the quotient isomorphism,
 * the sphere checks, the Moebius checks, the trefoil pipeline with its
 * negative control, and the exact geometry sampling. One report entry per
 * check; the suite passes iff every entry does.
 */
inline CheckReport run_verify_paper(const VerifyOptions& opt = {}) {
    CheckReport rep;
    SimplicialComplex prism = opt.prism_override ? *opt.prism_override : prism_complex();
    SimplicialComplex barnette = barnette_complex();
    SimplicialComplex mobius = mobius_complex();
    SimplicialComplex knot = knot_cycle_complex();

    // --- table shapes ---
    {
        std::vector<long> fv = f_vector(prism);
        bool ok = prism.n_vertices() == 12 && fv.size() == 4 && fv[0] == 12 && fv[3] == 19;
        rep.add("table_prism", ok, "f_vector=" + detail::fv_string(fv));
    }
    {
        std::vector<long> fv = f_vector(barnette);
        bool ok = barnette.vertex_set() == std::vector<Vertex>{0, 1, 2, 3, 8, 9, 10, 11} &&
                  fv.size() == 4 && fv[3] == 19;
        rep.add("table_barnette", ok, "f_vector=" + detail::fv_string(fv));
    }
    {
        std::vector<long> fv = f_vector(mobius);
        bool ok = fv == std::vector<long>{6, 12, 6};
        rep.add("table_mobius", ok, "f_vector=" + detail::fv_string(fv));
    }
    rep.add("table_knot_cycle", knot.n_facets() == 6 && is_single_cycle(knot),
            "6 edges, single cycle");

    // --- quotient isomorphism ---
    {
        bool ok = false;
        std::string detail_msg;
        try {
            VertexMapImage img = apply_vertex_map(prism, q_map());
            std::set<Simplex> images(img.facet_image.begin(), img.facet_image.end());
            ok = img.complex == barnette && images.size() == prism.n_facets() &&
                 img.complex.n_facets() == 19;
            detail_msg = "facet images " + std::to_string(images.size()) + "/19";
        } catch (const Error& e) {
            detail_msg = e.what();
        }
        rep.add("quotient_isomorphism", ok, detail_msg);
    }

    // --- sphere checks on the Barnette complex ---
    {
        ManifoldReport m = check_closed_3_manifold(barnette);
        std::string detail_msg;
        for (const auto& e : m.entries)
            if (!e.pass) detail_msg += (detail_msg.empty() ? "" : "; ") + e.name;
        rep.add("barnette_closed_3_manifold", m.all_pass(), detail_msg);
    }
    rep.add("barnette_orientable", orientability(barnette).orientable, "");
    {
        std::vector<HomologyGroup> h = homology_groups(barnette);
        bool ok = h.size() == 4 && h[0] == HomologyGroup{1, {}} && h[1] == HomologyGroup{0, {}} &&
                  h[2] == HomologyGroup{0, {}} && h[3] == HomologyGroup{1, {}};
        rep.add("barnette_homology", ok, detail::homology_string(h));
    }
    {
        TietzeResult t =
            tietze_simplify(edge_path_presentation(barnette, 0), opt.tietze_budget);
        bool ok = t.presentation.n_generators == 0 && t.presentation.relators.empty() &&
                  !t.budget_exceeded;
        rep.add("barnette_trivial_pi1", ok,
                "generators=" + std::to_string(t.presentation.n_generators));
    }

    // --- Moebius checks ---
    rep.add("mobius_euler", euler_characteristic(mobius) == 0,
            "chi=" + std::to_string(euler_characteristic(mobius)));
    rep.add("mobius_nonorientable", !orientability(mobius).orientable, "");
    {
        std::vector<HomologyGroup> h = homology_groups(mobius);
        bool ok = h.size() == 3 && h[1] == HomologyGroup{1, {}};
        rep.add("mobius_h1", ok, detail::homology_string(h));
    }
    {
        SimplicialComplex bd = boundary_subcomplex(mobius);
        rep.add("mobius_boundary", bd == knot && is_single_cycle(bd),
                "boundary edges=" + std::to_string(bd.n_facets()));
    }

    // --- trefoil pipeline ---
    {
        bool ok = false;
        std::string detail_msg;
        try {
            KnotPipelineResult r = run_knot_pipeline(barnette, knot, opt.tietze_budget);
            ok = r.h0 == HomologyGroup{1, {}} && r.h1 == HomologyGroup{1, {}} &&
                 r.alexander == trefoil_alexander_polynomial() && r.s3_nonabelian &&
                 !r.budget_exceeded;
            detail_msg = "alexander=" + r.alexander.to_string() +
                         " s3=" + (r.s3_nonabelian ? std::string("true") : std::string("false"));
        } catch (const Error& e) {
            detail_msg = e.what();
        }
        rep.add("trefoil_pipeline", ok, detail_msg);
    }
    {
        bool ok = false;
        std::string detail_msg;
        try {
            KnotPipelineResult r = run_knot_pipeline(unknot_control_sphere(),
                                                     unknot_control_cycle(), opt.tietze_budget);
            ok = r.alexander == LaurentPolynomial::one() && !r.s3_nonabelian &&
                 r.h1 == HomologyGroup{1, {}};
            detail_msg = "alexander=" + r.alexander.to_string();
        } catch (const Error& e) {
            detail_msg = e.what();
        }
        rep.add("trefoil_negative_control", ok, detail_msg);
    }

    // --- geometry ---
    {
        SamplingReport g = verify_lemma_identifications(opt.grid);
        rep.add("lemma_identifications", g.pass(),
                "checked=" + std::to_string(g.checked) +
                    " failures=" + std::to_string(g.failures) +
                    (g.failures ? " first: " + g.first_failure : ""));
    }
    {
        SamplingReport g = verify_stratification(opt.grid);
        rep.add("stratification", g.pass(),
                "checked=" + std::to_string(g.checked) +
                    " failures=" + std::to_string(g.failures) +
                    (g.failures ? " first: " + g.first_failure : ""));
    }
    {
        SamplingReport g = verify_vertex_q_consistency();
        rep.add("vertex_q_consistency", g.pass(),
                "checked=" + std::to_string(g.checked) +
                    " failures=" + std::to_string(g.failures) +
                    (g.failures ? " first: " + g.first_failure : ""));
    }
    return rep;
}

}  // namespace potency
