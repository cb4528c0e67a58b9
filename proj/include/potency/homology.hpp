#pragma once

#include <string>
#include <vector>

#include "potency/complex.hpp"
#include "potency/errors.hpp"
#include "potency/matrix.hpp"

namespace potency {

/**
 * Boundary matrix of K in degree d: rows indexed by (d-1)-faces, columns by
 * d-faces, both in lexicographic order. The entry for dropping the i-th
 * vertex (0-based, sorted order) of a d-face is (-1)^i.
 */
inline IntMatrix boundary_matrix(const SimplicialComplex& K, int d) {
    if (d < 1 || d > K.dim())
        throw DimensionOutOfRange("boundary degree " + std::to_string(d) +
                                  " out of range for complex of dim " + std::to_string(K.dim()));
    std::vector<Simplex> rows = faces(K, d - 1);
    std::vector<Simplex> cols = faces(K, d);
    std::map<Simplex, int> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = static_cast<int>(i);
    IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const Simplex& c = cols[j];
        for (std::size_t i = 0; i < c.size(); ++i)
            m.set(row_index.at(c.drop_vertex(i)), static_cast<int>(j), (i % 2) ? Int(-1) : Int(1));
    }
    return m;
}

/// H_d = Z^betti ⊕ Z/t_1 ⊕ ... with t_i | t_{i+1}.
struct HomologyGroup {
    long betti = 0;
    std::vector<Int> torsion;

    bool operator==(const HomologyGroup&) const = default;

    std::string to_string() const {
        std::string s = "rank=" + std::to_string(betti) + " torsion=[";
        for (std::size_t i = 0; i < torsion.size(); ++i) {
            if (i) s += ",";
            s += torsion[i].str();
        }
        return s + "]";
    }
};

/**
 * Integral homology in dimensions 0..min(dim K, up_to) via Smith normal form:
 * betti_d = nullity(∂_d) - rank(∂_{d+1}), torsion_d = invariant factors > 1
 * of ∂_{d+1}. Unreduced by default; the reduced flag subtracts one from the
 * rank of H_0.
 */
inline std::vector<HomologyGroup> homology_groups(const SimplicialComplex& K,
                                                  bool reduced = false, int up_to = -1) {
    if (K.empty()) return {};
    const int D = K.dim();
    const int top = (up_to < 0 || up_to > D) ? D : up_to;
    std::vector<long> fv = f_vector(K);
    // rank of ∂_d for d = 1 .. top+1 (∂_{D+1} = 0)
    std::vector<int> rank(static_cast<std::size_t>(top) + 2, 0);
    std::vector<std::vector<Int>> tors(static_cast<std::size_t>(top) + 2);
    for (int d = 1; d <= top + 1 && d <= D; ++d) {
        SNFResult snf = smith_normal_form(boundary_matrix(K, d));
        rank[static_cast<std::size_t>(d)] = snf.rank();
        for (const Int& f : snf.invariant_factors)
            if (f > 1) tors[static_cast<std::size_t>(d)].push_back(f);
    }
    std::vector<HomologyGroup> out;
    for (int d = 0; d <= top; ++d) {
        HomologyGroup h;
        h.betti = fv[static_cast<std::size_t>(d)] - rank[static_cast<std::size_t>(d)] -
                  rank[static_cast<std::size_t>(d) + 1];
        h.torsion = tors[static_cast<std::size_t>(d) + 1];
        if (d == 0 && reduced) h.betti -= 1;
        out.push_back(std::move(h));
    }
    return out;
}

}  // namespace potency
