#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "potency/errors.hpp"

namespace potency {

/// Vertex labels are arbitrary non-negative integers, not necessarily contiguous.
using Vertex = int;

/**
 * An abstract simplex: a strictly increasing sequence of vertex labels.
 * Dimension = number of vertices - 1.
 */
class Simplex {
  public:
    /// Sorts the labels and validates: non-empty, non-negative, no duplicates.
    explicit Simplex(std::vector<Vertex> labels) : verts_(std::move(labels)) {
        if (verts_.empty())
            throw EmptyInput("empty vertex tuple");
        std::sort(verts_.begin(), verts_.end());
        if (verts_.front() < 0)
            throw Error("negative vertex label");
        if (std::adjacent_find(verts_.begin(), verts_.end()) != verts_.end())
            throw DuplicateVertexInFacet("duplicate vertex label in simplex");
    }

    Simplex(std::initializer_list<Vertex> labels) : Simplex(std::vector<Vertex>(labels)) {}

    /// Trusted constructor: `labels` must already be strictly increasing.
    static Simplex from_sorted(std::vector<Vertex> labels) {
        Simplex s;
        s.verts_ = std::move(labels);
        return s;
    }

    int dimension() const { return static_cast<int>(verts_.size()) - 1; }
    std::size_t size() const { return verts_.size(); }
    const std::vector<Vertex>& vertices() const { return verts_; }
    Vertex operator[](std::size_t i) const { return verts_[i]; }

    bool contains(Vertex v) const {
        return std::binary_search(verts_.begin(), verts_.end(), v);
    }

    /// Subset test (is `other` a face of this simplex).
    bool has_face(const Simplex& other) const {
        return std::includes(verts_.begin(), verts_.end(),
                             other.verts_.begin(), other.verts_.end());
    }

    /// The face obtained by dropping the i-th vertex (0-based, sorted order).
    Simplex drop_vertex(std::size_t i) const {
        std::vector<Vertex> v = verts_;
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        return from_sorted(std::move(v));
    }

    /// Set difference this \ other, as sorted labels (possibly empty).
    std::vector<Vertex> difference(const Simplex& other) const {
        std::vector<Vertex> out;
        std::set_difference(verts_.begin(), verts_.end(),
                            other.verts_.begin(), other.verts_.end(),
                            std::back_inserter(out));
        return out;
    }

    bool intersects(const Simplex& other) const {
        auto a = verts_.begin();
        auto b = other.verts_.begin();
        while (a != verts_.end() && b != other.verts_.end()) {
            if (*a == *b) return true;
            if (*a < *b) ++a; else ++b;
        }
        return false;
    }

    auto operator<=>(const Simplex&) const = default;

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < verts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(verts_[i]);
        }
        return s + ")";
    }

  private:
    Simplex() = default;
    std::vector<Vertex> verts_;
};

inline std::ostream& operator<<(std::ostream& os, const Simplex& s) {
    return os << s.to_string();
}

/// Calls fn(Simplex) for every k-element subface of s, in lexicographic order.
template <typename Fn>
void for_each_subface(const Simplex& s, std::size_t k, Fn&& fn) {
    const auto& v = s.vertices();
    const std::size_t n = v.size();
    if (k == 0 || k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::vector<Vertex> face(k);
        for (std::size_t i = 0; i < k; ++i) face[i] = v[idx[i]];
        fn(Simplex::from_sorted(std::move(face)));
        // next combination
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - k) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

}  // namespace potency
