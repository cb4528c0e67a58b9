#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "potency/errors.hpp"
#include "potency/simplex.hpp"

namespace potency {

/**
 * An abstract simplicial complex stored as its facet list (maximal faces).
 *
 * Invariants: facets are pairwise distinct, sorted lexicographically, and no
 * facet is a face of another facet. The vertex set is the union of facet
 * vertices. Complexes are immutable after construction; all operations are
 * pure functions.
 */
class SimplicialComplex {
  public:
    /// The empty complex (no facets, no vertices, dimension -1).
    SimplicialComplex() = default;

    /**
     * Builds a complex from raw vertex tuples (need not be sorted).
     * Exact duplicates are merged; a facet strictly contained in another is an
     * error, because every table this artifact consumes lists exactly the
     * maximal faces, so containment signals a transcription error.
     */
    static SimplicialComplex from_facets(const std::vector<std::vector<Vertex>>& tuples) {
        std::vector<Simplex> fs;
        fs.reserve(tuples.size());
        for (const auto& t : tuples) fs.emplace_back(t);
        std::sort(fs.begin(), fs.end());
        fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
        for (const auto& a : fs)
            for (const auto& b : fs)
                if (a.size() < b.size() && b.has_face(a))
                    throw NonMaximalFacet("facet " + a.to_string() +
                                          " is contained in facet " + b.to_string());
        return SimplicialComplex(std::move(fs));
    }

    /// Trusted path for internally built complexes whose facets are known to
    /// be pairwise non-nested. Sorts and deduplicates only.
    static SimplicialComplex from_maximal(std::vector<Simplex> fs) {
        std::sort(fs.begin(), fs.end());
        fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
        return SimplicialComplex(std::move(fs));
    }

    const std::vector<Simplex>& facets() const { return facets_; }
    const std::vector<Vertex>& vertex_set() const { return vertices_; }
    int dim() const { return dim_; }
    std::size_t n_facets() const { return facets_.size(); }
    std::size_t n_vertices() const { return vertices_.size(); }
    bool empty() const { return facets_.empty(); }

    bool has_vertex(Vertex v) const {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }

    /// Face membership: some facet contains s.
    bool has_face(const Simplex& s) const {
        for (const auto& f : facets_)
            if (f.has_face(s)) return true;
        return false;
    }

    bool is_pure() const {
        for (const auto& f : facets_)
            if (f.dimension() != dim_) return false;
        return true;
    }

    bool operator==(const SimplicialComplex& other) const { return facets_ == other.facets_; }

  private:
    explicit SimplicialComplex(std::vector<Simplex> fs) : facets_(std::move(fs)) {
        std::set<Vertex> vs;
        for (const auto& f : facets_) {
            vs.insert(f.vertices().begin(), f.vertices().end());
            dim_ = std::max(dim_, f.dimension());
        }
        vertices_.assign(vs.begin(), vs.end());
    }

    std::vector<Simplex> facets_;
    std::vector<Vertex> vertices_;
    int dim_ = -1;
};

/// All d-faces, deduplicated, in lexicographic order.
inline std::vector<Simplex> faces(const SimplicialComplex& K, int d) {
    if (d < 0 || d > K.dim())
        throw DimensionOutOfRange("face dimension " + std::to_string(d) +
                                  " out of range for complex of dim " + std::to_string(K.dim()));
    std::vector<Simplex> out;
    for (const auto& f : K.facets())
        if (f.dimension() >= d)
            for_each_subface(f, static_cast<std::size_t>(d) + 1,
                             [&](Simplex s) { out.push_back(std::move(s)); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// All faces of every dimension, in lexicographic order.
inline std::vector<Simplex> all_faces(const SimplicialComplex& K) {
    std::vector<Simplex> out;
    for (const auto& f : K.facets())
        for (std::size_t k = 1; k <= f.size(); ++k)
            for_each_subface(f, k, [&](Simplex s) { out.push_back(std::move(s)); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::vector<long> f_vector(const SimplicialComplex& K) {
    std::vector<long> fv(static_cast<std::size_t>(K.dim() + 1), 0);
    for (const auto& f : all_faces(K)) fv[static_cast<std::size_t>(f.dimension())]++;
    return fv;
}

inline long euler_characteristic(const SimplicialComplex& K) {
    long chi = 0;
    int sign = 1;
    for (long fd : f_vector(K)) {
        chi += sign * fd;
        sign = -sign;
    }
    return chi;
}

/// Link of a simplex: all faces tau disjoint from sigma with tau ∪ sigma in K.
inline SimplicialComplex link(const SimplicialComplex& K, const Simplex& sigma) {
    if (!K.has_face(sigma))
        throw SimplexNotInComplex("simplex " + sigma.to_string() + " not in complex");
    // Facets of the link are f \ sigma over facets f containing sigma; these
    // are pairwise non-nested because the f themselves are.
    std::vector<Simplex> out;
    for (const auto& f : K.facets()) {
        if (!f.has_face(sigma)) continue;
        auto rest = f.difference(sigma);
        if (!rest.empty()) out.push_back(Simplex::from_sorted(std::move(rest)));
    }
    return SimplicialComplex::from_maximal(std::move(out));
}

/// Subcomplex generated by the (d-1)-faces lying in exactly one facet.
/// Empty result means the complex is closed.
inline SimplicialComplex boundary_subcomplex(const SimplicialComplex& K) {
    if (K.empty()) return {};
    if (!K.is_pure())
        throw NotPure("boundary_subcomplex requires a pure complex");
    const int d = K.dim();
    if (d == 0) return {};
    std::map<Simplex, int> ridge_count;
    for (const auto& f : K.facets())
        for_each_subface(f, static_cast<std::size_t>(d),
                         [&](Simplex r) { ridge_count[std::move(r)]++; });
    std::vector<Simplex> bd;
    for (const auto& [r, c] : ridge_count)
        if (c == 1) bd.push_back(r);
    return SimplicialComplex::from_maximal(std::move(bd));
}

/// All faces of K spanned entirely by V', re-maximalized.
inline SimplicialComplex full_subcomplex(const SimplicialComplex& K,
                                         const std::vector<Vertex>& subset) {
    std::vector<Vertex> V(subset);
    std::sort(V.begin(), V.end());
    V.erase(std::unique(V.begin(), V.end()), V.end());
    for (Vertex v : V)
        if (!K.has_vertex(v))
            throw UnknownVertex("vertex " + std::to_string(v) + " not in complex");
    // Allowed faces are the subsets of facet ∩ V'; the family is closed under
    // taking faces, so a face is maximal iff no allowed face covers it.
    std::set<Simplex> allowed;
    for (const auto& f : K.facets()) {
        std::vector<Vertex> kept;
        for (Vertex v : f.vertices())
            if (std::binary_search(V.begin(), V.end(), v)) kept.push_back(v);
        if (kept.empty()) continue;
        Simplex base = Simplex::from_sorted(std::move(kept));
        for (std::size_t k = 1; k <= base.size(); ++k)
            for_each_subface(base, k, [&](Simplex s) { allowed.insert(std::move(s)); });
    }
    std::set<Simplex> covered;
    for (const auto& g : allowed)
        if (g.size() >= 2)
            for_each_subface(g, g.size() - 1, [&](Simplex s) { covered.insert(std::move(s)); });
    std::vector<Simplex> maximal;
    for (const auto& g : allowed)
        if (!covered.count(g)) maximal.push_back(g);
    return SimplicialComplex::from_maximal(std::move(maximal));
}

/**
 * Barycentric subdivision. New vertices are the faces of K, labeled by rank
 * in the lexicographic order of faces; facets are the maximal chains of faces
 * ordered by inclusion. The face-to-label dictionary is recorded so that
 * derived constructions (knot complements) can recover what each new vertex
 * subdivides.
 */
struct Subdivision {
    SimplicialComplex complex;
    std::vector<Simplex> face_of_vertex;  ///< new label -> original face (lex order)

    int label_of(const Simplex& face) const {
        auto it = std::lower_bound(face_of_vertex.begin(), face_of_vertex.end(), face);
        if (it == face_of_vertex.end() || !(*it == face))
            throw SimplexNotInComplex("face " + face.to_string() + " not in subdivided complex");
        return static_cast<int>(it - face_of_vertex.begin());
    }
};

inline Subdivision barycentric_subdivision(const SimplicialComplex& K) {
    Subdivision sub;
    sub.face_of_vertex = all_faces(K);
    std::map<Simplex, int> label;
    for (std::size_t i = 0; i < sub.face_of_vertex.size(); ++i)
        label[sub.face_of_vertex[i]] = static_cast<int>(i);
    std::vector<Simplex> facets;
    for (const auto& f : K.facets()) {
        // Maximal chains below f correspond to orderings of its vertices:
        // the chain elements are the prefixes of the ordering.
        std::vector<Vertex> perm = f.vertices();
        std::sort(perm.begin(), perm.end());
        do {
            std::vector<Vertex> chain_labels;
            std::vector<Vertex> prefix;
            for (Vertex v : perm) {
                prefix.push_back(v);
                std::vector<Vertex> sorted_prefix = prefix;
                std::sort(sorted_prefix.begin(), sorted_prefix.end());
                chain_labels.push_back(label.at(Simplex::from_sorted(std::move(sorted_prefix))));
            }
            std::sort(chain_labels.begin(), chain_labels.end());
            facets.push_back(Simplex::from_sorted(std::move(chain_labels)));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    sub.complex = SimplicialComplex::from_maximal(std::move(facets));
    return sub;
}

/// Number of connected components of the 1-skeleton (vertices count alone).
inline int connected_components(const SimplicialComplex& K) {
    const auto& vs = K.vertex_set();
    if (vs.empty()) return 0;
    std::map<Vertex, Vertex> parent;
    for (Vertex v : vs) parent[v] = v;
    auto find = [&](Vertex x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& f : K.facets()) {
        const auto& v = f.vertices();
        for (std::size_t i = 1; i < v.size(); ++i) {
            Vertex a = find(v[0]), b = find(v[i]);
            if (a != b) parent[a] = b;
        }
    }
    std::set<Vertex> roots;
    for (Vertex v : vs) roots.insert(find(v));
    return static_cast<int>(roots.size());
}

/// True iff K is a single closed cycle: pure 1-dimensional, connected, all
/// vertex degrees exactly 2.
inline bool is_single_cycle(const SimplicialComplex& K) {
    if (K.empty() || K.dim() != 1 || !K.is_pure()) return false;
    std::map<Vertex, int> deg;
    for (const auto& e : K.facets()) {
        deg[e[0]]++;
        deg[e[1]]++;
    }
    for (const auto& [v, d] : deg)
        if (d != 2) return false;
    return connected_components(K) == 1;
}

/**
 * Attempts a coherent orientation by propagating induced orientations across
 * shared ridges from a seed facet per connected component.
 * Returns the success flag and, on success, a ±1 sign per facet (aligned with
 * K.facets() order).
 */
struct Orientability {
    bool orientable = false;
    std::optional<std::vector<int>> facet_signs;
};

inline Orientability orientability(const SimplicialComplex& K) {
    if (K.empty()) return {true, std::vector<int>{}};
    if (!K.is_pure())
        throw NotPure("orientability requires a pure complex");
    const int d = K.dim();
    const auto& facets = K.facets();
    if (d == 0) return {true, std::vector<int>(facets.size(), 1)};

    // ridge -> incident facet indices
    std::map<Simplex, std::vector<int>> ridge_facets;
    for (std::size_t i = 0; i < facets.size(); ++i)
        for_each_subface(facets[i], static_cast<std::size_t>(d), [&](Simplex r) {
            auto& lst = ridge_facets[std::move(r)];
            lst.push_back(static_cast<int>(i));
            if (lst.size() > 2)
                throw NotPseudomanifold("ridge in more than two facets");
        });

    auto drop_position = [&](const Simplex& f, const Simplex& ridge) {
        const auto& v = f.vertices();
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!ridge.contains(v[i])) return static_cast<int>(i);
        return -1;
    };

    std::vector<int> sign(facets.size(), 0);
    for (std::size_t seed = 0; seed < facets.size(); ++seed) {
        if (sign[seed]) continue;
        sign[seed] = 1;
        std::deque<int> queue{static_cast<int>(seed)};
        while (!queue.empty()) {
            int i = queue.front();
            queue.pop_front();
            const Simplex& f = facets[static_cast<std::size_t>(i)];
            for (std::size_t pos = 0; pos < f.size(); ++pos) {
                Simplex r = f.drop_vertex(pos);
                for (int j : ridge_facets.at(r)) {
                    if (j == i) continue;
                    // Coherence: the two induced ridge orientations must be
                    // opposite: (-1)^pos_i * s_i = -(-1)^pos_j * s_j.
                    int pos_j = drop_position(facets[static_cast<std::size_t>(j)], r);
                    int want = -((pos % 2) ? -1 : 1) * sign[static_cast<std::size_t>(i)];
                    int sj = want * ((pos_j % 2) ? -1 : 1);
                    if (sign[static_cast<std::size_t>(j)] == 0) {
                        sign[static_cast<std::size_t>(j)] = sj;
                        queue.push_back(j);
                    } else if (sign[static_cast<std::size_t>(j)] != sj) {
                        return {false, std::nullopt};
                    }
                }
            }
        }
    }
    return {true, sign};
}

/// One named result line of a structural check.
struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ManifoldReport {
    std::vector<CheckLine> entries;
    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
};

/**
 * Necessary combinatorial conditions for a closed 3-manifold:
 * every triangle in exactly two facets, every edge link a single cycle,
 * every vertex link a connected closed surface with Euler characteristic 2,
 * and the complex connected. Failures are report entries, not errors.
 */
inline ManifoldReport check_closed_3_manifold(const SimplicialComplex& K) {
    ManifoldReport rep;
    bool pure3 = !K.empty() && K.dim() == 3 && K.is_pure();
    rep.entries.push_back({"pure_dimension_3", pure3, ""});
    if (!pure3) return rep;

    std::map<Simplex, int> tri_count;
    for (const auto& f : K.facets())
        for_each_subface(f, 3, [&](Simplex t) { tri_count[std::move(t)]++; });
    int bad = 0;
    for (const auto& [t, c] : tri_count)
        if (c != 2) bad++;
    rep.entries.push_back({"triangles_in_two_facets", bad == 0,
                           bad ? std::to_string(bad) + " exceptions" : ""});

    int bad_edges = 0;
    for (const auto& e : faces(K, 1))
        if (!is_single_cycle(link(K, e))) bad_edges++;
    rep.entries.push_back({"edge_links_single_cycles", bad_edges == 0,
                           bad_edges ? std::to_string(bad_edges) + " exceptions" : ""});

    int bad_verts = 0;
    for (const auto& v : faces(K, 0)) {
        SimplicialComplex lk = link(K, v);
        bool ok = lk.dim() == 2 && lk.is_pure() && connected_components(lk) == 1 &&
                  euler_characteristic(lk) == 2 && boundary_subcomplex(lk).empty();
        if (!ok) bad_verts++;
    }
    rep.entries.push_back({"vertex_links_2_spheres", bad_verts == 0,
                           bad_verts ? std::to_string(bad_verts) + " exceptions" : ""});

    rep.entries.push_back({"connected", connected_components(K) == 1, ""});
    return rep;
}

/// Every facet of L is a face of K.
inline bool is_subcomplex(const SimplicialComplex& L, const SimplicialComplex& K) {
    for (const auto& f : L.facets())
        if (!K.has_face(f)) return false;
    return true;
}

}  // namespace potency
