#pragma once

#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "potency/errors.hpp"
#include "potency/integer.hpp"
#include "potency/quotient.hpp"

namespace potency {

/// A point of the prism chart, with exact rational coordinates. Membership
/// in the prism or its strata is a predicate, not an invariant.
struct Point3 {
    Rational x, y, z;
    bool operator==(const Point3&) const = default;
};

/**
 * A canonical non-empty subset of the circle with at most three elements.
 * Each element is the rational angle theta of e^{2*pi*i*theta}, reduced
 * mod 1 into [0,1); elements are strictly increasing. Circle points are kept
 * as rationals mod 1 rather than complex exponentials so every equality test
 * in this module is exact.
 */
class CircleSubset {
  public:
    /// Canonical form: reduce mod 1, deduplicate, sort.
    static CircleSubset canonical(std::vector<Rational> values) {
        if (values.empty()) throw EmptyInput("circle subset needs at least one point");
        if (values.size() > 3) throw TooMany("circle subset holds at most three points");
        for (Rational& v : values) v = mod_one(v);
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        CircleSubset s;
        s.elements_ = std::move(values);
        return s;
    }

    const std::vector<Rational>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }

    bool operator==(const CircleSubset&) const = default;
    auto operator<=>(const CircleSubset&) const = default;

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            if (i) s += ",";
            std::ostringstream os;
            os << boost::multiprecision::numerator(elements_[i]) << "/"
               << boost::multiprecision::denominator(elements_[i]);
            s += os.str();
        }
        return s + "}";
    }

  private:
    std::vector<Rational> elements_;
};

// ---------------------------------------------------------------------------
// The prism P and its strata S and D, by their defining (in)equalities:
//   P: x <= y <= z <= x+1  and  0 <= x+y+z <= 1
//   S: points of P with x = y or y = z or z = x+1
//   D: points of P with x = y = z or x = y = z-1 or x+1 = y = z
// ---------------------------------------------------------------------------

inline bool in_P(const Point3& p) {
    return p.x <= p.y && p.y <= p.z && p.z <= p.x + 1 && 0 <= p.x + p.y + p.z &&
           p.x + p.y + p.z <= 1;
}

inline bool in_S(const Point3& p) {
    return in_P(p) && (p.x == p.y || p.y == p.z || p.z == p.x + 1);
}

inline bool in_D(const Point3& p) {
    return in_P(p) && ((p.x == p.y && p.y == p.z) || (p.x == p.y && p.z == p.x + 1) ||
                       (p.y == p.x + 1 && p.y == p.z));
}

/// All defining inequalities strict: the interior of the solid prism.
inline bool strictly_interior_P(const Point3& p) {
    return p.x < p.y && p.y < p.z && p.z < p.x + 1 && 0 < p.x + p.y + p.z &&
           p.x + p.y + p.z < 1;
}

/// The subset {e^{2*pi*i*x}, e^{2*pi*i*y}, e^{2*pi*i*z}} of the circle.
inline CircleSubset p_map(const Point3& p) { return CircleSubset::canonical({p.x, p.y, p.z}); }

/// Canonical subset formation for 1..3 circle points given as angles.
inline CircleSubset pi_map(const std::vector<Rational>& points) {
    return CircleSubset::canonical(points);
}

/**
 * Coordinates for the twelve vertices of the triangulated prism. The six
 * prism corners carry the tabulated coordinates; vertex 3 and 7 are the
 * barycenters of the bottom and top faces, 8/9/10 the midpoints of the three
 * D segments (1-6, 2-4, 0-5), and 11 the centroid of the six corners (any
 * interior point is combinatorially equivalent; the centroid is canonical
 * and rational).
 */
inline const std::map<Vertex, Point3>& prism_vertex_coordinates() {
    static const std::map<Vertex, Point3> coords = [] {
        auto third = [](long a, long b, long c) {
            return Point3{Rational(a, 3), Rational(b, 3), Rational(c, 3)};
        };
        std::map<Vertex, Point3> m;
        m[0] = {0, 0, 0};
        m[1] = third(-2, 1, 1);
        m[2] = third(-1, -1, 2);
        m[4] = {0, 0, 1};
        m[5] = third(1, 1, 1);
        m[6] = third(-1, 2, 2);
        auto avg3 = [&](Vertex a, Vertex b, Vertex c) {
            return Point3{(m[a].x + m[b].x + m[c].x) / 3, (m[a].y + m[b].y + m[c].y) / 3,
                          (m[a].z + m[b].z + m[c].z) / 3};
        };
        auto mid = [&](Vertex a, Vertex b) {
            return Point3{(m[a].x + m[b].x) / 2, (m[a].y + m[b].y) / 2, (m[a].z + m[b].z) / 2};
        };
        m[3] = avg3(0, 1, 2);
        m[7] = avg3(4, 5, 6);
        m[8] = mid(1, 6);
        m[9] = mid(2, 4);
        m[10] = mid(0, 5);
        Point3 centroid{0, 0, 0};
        for (Vertex v : {0, 1, 2, 4, 5, 6}) {
            centroid.x += m[v].x;
            centroid.y += m[v].y;
            centroid.z += m[v].z;
        }
        m[11] = {centroid.x / 6, centroid.y / 6, centroid.z / 6};
        return m;
    }();
    return coords;
}

/// Outcome of an exact sampling verification.
struct SamplingReport {
    long long checked = 0;
    long long failures = 0;
    std::string first_failure;

    bool pass() const { return failures == 0 && checked > 0; }

    void record_failure(const std::string& detail) {
        if (failures == 0) first_failure = detail;
        ++failures;
    }
};

/**
 * Checks the four affine boundary identifications of the prism exactly: for
 * every barycentric rational point (i/n, j/n, k/n) of each source triangle,
 * the circle subsets of the corresponding source and target points agree.
 */
inline SamplingReport verify_lemma_identifications(int grid_n) {
    if (grid_n < 1) throw Error("grid must be positive");
    const auto& coords = prism_vertex_coordinates();
    SamplingReport rep;
    for (const IdentificationPair& pair : lemma_identification_pairs()) {
        for (int i = 0; i <= grid_n; ++i)
            for (int j = 0; j + i <= grid_n; ++j) {
                int k = grid_n - i - j;
                Rational bi(i, grid_n), bj(j, grid_n), bk(k, grid_n);
                auto affine = [&](const std::array<Vertex, 3>& tri) {
                    const Point3& a = coords.at(tri[0]);
                    const Point3& b = coords.at(tri[1]);
                    const Point3& c = coords.at(tri[2]);
                    return Point3{bi * a.x + bj * b.x + bk * c.x,
                                  bi * a.y + bj * b.y + bk * c.y,
                                  bi * a.z + bj * b.z + bk * c.z};
                };
                Point3 src = affine(pair.source);
                Point3 dst = affine(pair.target);
                ++rep.checked;
                if (!(p_map(src) == p_map(dst)))
                    rep.record_failure("pair source " + p_map(src).to_string() + " vs target " +
                                       p_map(dst).to_string());
            }
    }
    return rep;
}

/**
 * Checks the stratification exactly on the 1/n grid over the bounding box of
 * the prism: for every grid point inside P, the circle subset has at most two
 * elements iff the point lies in S, and exactly one element iff it lies in D.
 */
inline SamplingReport verify_stratification(int grid_n) {
    if (grid_n < 1) throw Error("grid must be positive");
    SamplingReport rep;
    // bounding box of P: x in [-2/3, 1/3], y in [-1/3, 2/3], z in [0, 1]
    for (int i = -grid_n; i <= grid_n; ++i)
        for (int j = -grid_n; j <= grid_n; ++j)
            for (int k = 0; k <= grid_n; ++k) {
                Point3 p{Rational(i, grid_n), Rational(j, grid_n), Rational(k, grid_n)};
                if (!in_P(p)) continue;
                ++rep.checked;
                std::size_t sz = p_map(p).size();
                if ((sz <= 2) != in_S(p))
                    rep.record_failure("|p|<=2 vs in_S mismatch at grid point " +
                                       std::to_string(i) + "," + std::to_string(j) + "," +
                                       std::to_string(k));
                if ((sz == 1) != in_D(p))
                    rep.record_failure("|p|=1 vs in_D mismatch at grid point " +
                                       std::to_string(i) + "," + std::to_string(j) + "," +
                                       std::to_string(k));
            }
    return rep;
}

/**
 * Vertex-level consistency of the quotient map: p agrees on v and q(v) for
 * all twelve vertices, the nine vertices on the D strata have one-element
 * circle subsets, and the three interior/barycenter vertices have three.
 */
inline SamplingReport verify_vertex_q_consistency() {
    const auto& coords = prism_vertex_coordinates();
    VertexMap q = q_map();
    SamplingReport rep;
    for (const auto& [v, pt] : coords) {
        ++rep.checked;
        CircleSubset pv = p_map(pt);
        CircleSubset pq = p_map(coords.at(q(v)));
        if (!(pv == pq))
            rep.record_failure("p differs on vertex " + std::to_string(v) + " and its image");
        bool on_D = (v != 3 && v != 7 && v != 11);
        std::size_t expect = on_D ? 1 : 3;
        if (pv.size() != expect)
            rep.record_failure("vertex " + std::to_string(v) + " has |p| = " +
                               std::to_string(pv.size()) + ", expected " +
                               std::to_string(expect));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Exact mesh export: the prism as an OFF file (quads fan-triangulated from
// their lowest vertex label) and the three D segments as polylines.
// Rationals are serialized as `num/den`.
// ---------------------------------------------------------------------------

namespace detail {
inline std::string rat_str(const Rational& r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r) << "/" << boost::multiprecision::denominator(r);
    return os.str();
}
}  // namespace detail

inline void write_prism_off(std::ostream& os) {
    const auto& coords = prism_vertex_coordinates();
    const std::vector<Vertex> corners = {0, 1, 2, 4, 5, 6};
    // faces of the prism: bottom, top, and the three side quads in cyclic
    // order, fan-triangulated from their lowest label
    const std::vector<std::vector<int>> triangles = {
        {0, 1, 2},           // bottom <0,1,2>
        {3, 4, 5},           // top <4,5,6>
        {0, 2, 3}, {0, 3, 4},  // quad 0-2-4-5 on x = y
        {0, 1, 5}, {0, 5, 4},  // quad 0-1-6-5 on y = z
        {1, 2, 3}, {1, 3, 5},  // quad 1-2-4-6 on z = x+1
    };
    os << "OFF\n";
    os << corners.size() << " " << triangles.size() << " 0\n";
    for (Vertex v : corners) {
        const Point3& p = coords.at(v);
        os << detail::rat_str(p.x) << " " << detail::rat_str(p.y) << " " << detail::rat_str(p.z)
           << "\n";
    }
    for (const auto& t : triangles) os << "3 " << t[0] << " " << t[1] << " " << t[2] << "\n";
}

inline void write_d_segments(std::ostream& os) {
    const auto& coords = prism_vertex_coordinates();
    os << "# D strata of the prism: three segments, exact rational endpoints\n";
    for (const auto& [a, b] : std::vector<std::pair<Vertex, Vertex>>{{0, 5}, {2, 4}, {1, 6}}) {
        const Point3& p = coords.at(a);
        const Point3& q = coords.at(b);
        os << "seg " << detail::rat_str(p.x) << " " << detail::rat_str(p.y) << " "
           << detail::rat_str(p.z) << "  " << detail::rat_str(q.x) << " " << detail::rat_str(q.y)
           << " " << detail::rat_str(q.z) << "\n";
    }
}

}  // namespace potency
