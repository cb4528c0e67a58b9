#pragma once

#include <algorithm>
#include <array>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

#include "potency/complex.hpp"
#include "potency/errors.hpp"

namespace potency {

/// Total map between finite vertex label sets; induces simplicial quotients.
class VertexMap {
  public:
    VertexMap() = default;
    explicit VertexMap(std::map<Vertex, Vertex> entries) : entries_(std::move(entries)) {}

    Vertex operator()(Vertex v) const {
        auto it = entries_.find(v);
        if (it == entries_.end())
            throw UnknownVertex("vertex " + std::to_string(v) + " not in map domain");
        return it->second;
    }

    bool defined_on(Vertex v) const { return entries_.count(v) != 0; }
    const std::map<Vertex, Vertex>& entries() const { return entries_; }

    static VertexMap identity_on(const std::vector<Vertex>& vs) {
        std::map<Vertex, Vertex> m;
        for (Vertex v : vs) m[v] = v;
        return VertexMap(std::move(m));
    }

    /// g ∘ f (apply f first).
    friend VertexMap compose(const VertexMap& g, const VertexMap& f) {
        std::map<Vertex, Vertex> m;
        for (const auto& [src, mid] : f.entries()) m[src] = g(mid);
        return VertexMap(std::move(m));
    }

  private:
    std::map<Vertex, Vertex> entries_;
};

/// Two boundary triangles of the prism with the vertex bijection gluing them.
struct IdentificationPair {
    std::array<Vertex, 3> source;
    std::array<Vertex, 3> target;  ///< target[i] is glued to source[i]
};

// ---------------------------------------------------------------------------
// The tabulated complexes: the triangulated prism P, the Barnette sphere,
// the Moebius band quotient of the 2-stratum, and its boundary cycle.
// ---------------------------------------------------------------------------

/// 12-vertex, 19-facet triangulation of the prism.
inline SimplicialComplex prism_complex() {
    return SimplicialComplex::from_facets({
        {4, 5, 7, 9},   {5, 6, 7, 10}, {4, 6, 7, 8},
        {4, 7, 8, 9},   {5, 7, 9, 10}, {6, 7, 8, 10},
        {4, 1, 8, 9},   {5, 2, 9, 10}, {0, 6, 8, 10},
        {0, 8, 10, 11}, {1, 8, 9, 11}, {2, 9, 10, 11},
        {0, 1, 8, 11},  {1, 2, 9, 11}, {0, 2, 10, 11},
        {7, 8, 9, 10},  {8, 9, 10, 11}, {0, 1, 2, 11},
        {0, 1, 2, 3},
    });
}

/// 8-vertex {0,1,2,3,8,9,10,11}, 19-facet Barnette sphere.
inline SimplicialComplex barnette_complex() {
    return SimplicialComplex::from_facets({
        {0, 1, 3, 9},   {1, 2, 3, 10}, {0, 2, 3, 8},
        {0, 3, 8, 9},   {1, 3, 9, 10}, {2, 3, 8, 10},
        {0, 1, 8, 9},   {1, 2, 9, 10}, {0, 2, 8, 10},
        {0, 8, 10, 11}, {1, 8, 9, 11}, {2, 9, 10, 11},
        {0, 1, 8, 11},  {1, 2, 9, 11}, {0, 2, 10, 11},
        {3, 8, 9, 10},  {8, 9, 10, 11}, {0, 1, 2, 11},
        {0, 1, 2, 3},
    });
}

/// 6-vertex, 6-triangle Moebius band (the quotient of the 2-stratum).
inline SimplicialComplex mobius_complex() {
    return SimplicialComplex::from_facets({
        {0, 1, 8}, {0, 2, 8},
        {0, 1, 9}, {1, 2, 9},
        {0, 2, 10}, {1, 2, 10},
    });
}

/// The 6-edge boundary cycle of the Moebius band (the knotted circle).
inline SimplicialComplex knot_cycle_complex() {
    return SimplicialComplex::from_facets({
        {1, 8}, {2, 8},
        {0, 9}, {2, 9},
        {0, 10}, {1, 10},
    });
}

/// The quotient map on labels: q(i) = i-4 for 4 <= i <= 7, identity otherwise.
inline VertexMap q_map() {
    std::map<Vertex, Vertex> m;
    for (Vertex i = 0; i <= 11; ++i) m[i] = (i >= 4 && i <= 7) ? i - 4 : i;
    return VertexMap(std::move(m));
}

/**
 * The four boundary-triangle identifications of the prism, with vertex
 * correspondences fixed as the unique affine identifications consistent with
 * the circle-subset map on vertices (validated exactly by the geometry
 * sampling verifier).
 */
inline std::vector<IdentificationPair> lemma_identification_pairs() {
    return {
        {{0, 1, 2}, {4, 5, 6}},
        {{0, 1, 6}, {4, 1, 6}},
        {{1, 2, 4}, {5, 2, 4}},
        {{2, 0, 5}, {6, 0, 5}},
    };
}

/**
 * Image complex under a vertex map: facets are the images of K's facets,
 * sorted, deduplicated and re-maximalized. The per-facet image is recorded.
 * A facet two of whose vertices share an image is a DegenerateFacet error:
 * the map is not admissible for this complex.
 */
struct VertexMapImage {
    SimplicialComplex complex;
    std::vector<Simplex> facet_image;  ///< aligned with K.facets()
};

inline VertexMapImage apply_vertex_map(const SimplicialComplex& K, const VertexMap& f) {
    for (Vertex v : K.vertex_set())
        if (!f.defined_on(v))
            throw UnknownVertex("map not total on complex: missing vertex " + std::to_string(v));
    VertexMapImage out;
    std::vector<Simplex> images;
    for (const auto& fac : K.facets()) {
        std::vector<Vertex> img;
        img.reserve(fac.size());
        for (Vertex v : fac.vertices()) img.push_back(f(v));
        std::sort(img.begin(), img.end());
        if (std::adjacent_find(img.begin(), img.end()) != img.end())
            throw DegenerateFacet("facet " + fac.to_string() + " degenerates under the map");
        Simplex s = Simplex::from_sorted(std::move(img));
        out.facet_image.push_back(s);
        images.push_back(std::move(s));
    }
    // re-maximalize (a no-op for the quotient map this artifact uses)
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    std::vector<Simplex> maximal;
    for (const auto& a : images) {
        bool contained = false;
        for (const auto& b : images)
            if (a.size() < b.size() && b.has_face(a)) {
                contained = true;
                break;
            }
        if (!contained) maximal.push_back(a);
    }
    out.complex = SimplicialComplex::from_maximal(std::move(maximal));
    return out;
}

namespace detail {

/// Per-vertex invariant used to prune the isomorphism search: the number of
/// incident faces of each dimension (the f-vector of the vertex link, plus
/// the facet-size multiset).
inline std::vector<long> vertex_signature(const SimplicialComplex& K, Vertex v) {
    std::vector<long> sig;
    SimplicialComplex lk = link(K, Simplex{v});
    sig.push_back(lk.dim());
    if (!lk.empty())
        for (long x : f_vector(lk)) sig.push_back(x);
    return sig;
}

inline bool extend_isomorphism(const std::vector<Vertex>& v1, std::size_t next,
                               const SimplicialComplex& K1, const SimplicialComplex& K2,
                               const std::vector<std::vector<long>>& sig1,
                               const std::map<Vertex, std::vector<long>>& sig2,
                               const std::set<Simplex>& facets2, std::map<Vertex, Vertex>& partial,
                               std::set<Vertex>& used) {
    if (next == v1.size()) {
        // verify all facets map onto facets of K2, bijectively
        std::set<Simplex> mapped;
        for (const auto& f : K1.facets()) {
            std::vector<Vertex> img;
            for (Vertex v : f.vertices()) img.push_back(partial.at(v));
            std::sort(img.begin(), img.end());
            if (std::adjacent_find(img.begin(), img.end()) != img.end()) return false;
            Simplex s = Simplex::from_sorted(std::move(img));
            if (!facets2.count(s)) return false;
            mapped.insert(std::move(s));
        }
        return mapped.size() == facets2.size();
    }
    Vertex a = v1[next];
    for (Vertex b : K2.vertex_set()) {
        if (used.count(b)) continue;
        if (sig1[next] != sig2.at(b)) continue;
        partial[a] = b;
        used.insert(b);
        if (extend_isomorphism(v1, next + 1, K1, K2, sig1, sig2, facets2, partial, used))
            return true;
        partial.erase(a);
        used.erase(b);
    }
    return false;
}

}  // namespace detail

/**
 * Backtracking search for a simplicial isomorphism (a vertex bijection
 * carrying facets onto facets), pruned by vertex link signatures. Instances
 * in this artifact have at most 12 vertices. Returns the bijection if one
 * exists.
 */
inline std::optional<VertexMap> is_isomorphic(const SimplicialComplex& K1,
                                              const SimplicialComplex& K2) {
    if (K1.n_vertices() != K2.n_vertices() || K1.n_facets() != K2.n_facets() ||
        K1.dim() != K2.dim())
        return std::nullopt;
    if (K1.empty()) return VertexMap();
    std::vector<Vertex> v1 = K1.vertex_set();
    std::vector<std::vector<long>> sig1;
    for (Vertex v : v1) sig1.push_back(detail::vertex_signature(K1, v));
    std::map<Vertex, std::vector<long>> sig2;
    for (Vertex v : K2.vertex_set()) sig2[v] = detail::vertex_signature(K2, v);
    std::set<Simplex> facets2(K2.facets().begin(), K2.facets().end());
    std::map<Vertex, Vertex> partial;
    std::set<Vertex> used;
    if (detail::extend_isomorphism(v1, 0, K1, K2, sig1, sig2, facets2, partial, used))
        return VertexMap(partial);
    return std::nullopt;
}

// Vertex map text format: header `vm v1`, then one line per entry `m <src> <dst>`.

inline void write_vertex_map(std::ostream& os, const VertexMap& f) {
    os << "vm v1\n";
    for (const auto& [src, dst] : f.entries()) os << "m " << src << " " << dst << "\n";
}

inline VertexMap read_vertex_map(std::istream& is) {
    std::string raw;
    int lineno = 0;
    bool saw_header = false;
    std::map<Vertex, Vertex> m;
    while (std::getline(is, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (raw.empty() || raw[0] == '#') continue;
        std::istringstream ss(raw);
        std::string tok;
        ss >> tok;
        if (!saw_header) {
            std::string ver;
            ss >> ver;
            if (tok != "vm" || ver != "v1") throw ParseError(lineno, "expected header `vm v1`");
            saw_header = true;
            continue;
        }
        if (tok != "m") throw ParseError(lineno, "expected map line `m <src> <dst>`");
        Vertex src, dst;
        if (!(ss >> src >> dst)) throw ParseError(lineno, "bad map entry");
        if (m.count(src)) throw ParseError(lineno, "duplicate source vertex");
        m[src] = dst;
    }
    if (!saw_header) throw ParseError(lineno ? lineno : 1, "missing `vm v1` header");
    return VertexMap(std::move(m));
}

}  // namespace potency
