#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "potency/complex.hpp"
#include "potency/errors.hpp"

namespace potency {

// Text format for complexes:
//   line 1: `sc v1`
//   line 2: `dim <D>`
//   then one line per facet: `f v0 v1 ... vD` (strictly increasing labels)
// `#` starts a comment line; facets are written in lexicographic order.

inline void write_complex(std::ostream& os, const SimplicialComplex& K) {
    os << "sc v1\n";
    os << "dim " << K.dim() << "\n";
    for (const auto& f : K.facets()) {
        os << "f";
        for (Vertex v : f.vertices()) os << " " << v;
        os << "\n";
    }
}

inline void write_complex_file(const std::string& path, const SimplicialComplex& K) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open " + path + " for writing");
    write_complex(os, K);
    if (!os) throw IoError("write failure on " + path);
}

inline SimplicialComplex read_complex(std::istream& is) {
    std::string raw;
    int lineno = 0;
    bool saw_header = false, saw_dim = false;
    int declared_dim = 0;
    std::vector<std::vector<Vertex>> tuples;
    std::vector<int> tuple_lines;
    while (std::getline(is, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::string line = raw;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string tok;
        ss >> tok;
        if (!saw_header) {
            std::string ver;
            ss >> ver;
            if (tok != "sc" || ver != "v1")
                throw ParseError(lineno, "expected header `sc v1`");
            saw_header = true;
            continue;
        }
        if (!saw_dim) {
            if (tok != "dim") throw ParseError(lineno, "expected `dim <D>`");
            if (!(ss >> declared_dim)) throw ParseError(lineno, "bad dimension value");
            saw_dim = true;
            continue;
        }
        if (tok != "f") throw ParseError(lineno, "expected facet line `f ...`");
        std::vector<Vertex> vs;
        long long v;
        while (ss >> v) {
            if (v < 0) throw ParseError(lineno, "negative vertex label");
            vs.push_back(static_cast<Vertex>(v));
        }
        if (!ss.eof()) throw ParseError(lineno, "non-integer vertex label");
        if (vs.empty()) throw ParseError(lineno, "empty facet");
        for (std::size_t i = 1; i < vs.size(); ++i)
            if (vs[i] <= vs[i - 1])
                throw ParseError(lineno, "vertex labels not strictly increasing");
        tuples.push_back(std::move(vs));
        tuple_lines.push_back(lineno);
    }
    if (!saw_header) throw ParseError(lineno ? lineno : 1, "missing `sc v1` header");
    if (!saw_dim) throw ParseError(lineno ? lineno : 1, "missing `dim` line");
    SimplicialComplex K;
    try {
        K = SimplicialComplex::from_facets(tuples);
    } catch (const Error& e) {
        throw ParseError(tuple_lines.empty() ? lineno : tuple_lines.back(), e.what());
    }
    if (K.dim() != declared_dim)
        throw ParseError(lineno, "declared dim " + std::to_string(declared_dim) +
                                     " does not match facet dimension " + std::to_string(K.dim()));
    return K;
}

inline SimplicialComplex read_complex_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open " + path);
    return read_complex(is);
}

}  // namespace potency
