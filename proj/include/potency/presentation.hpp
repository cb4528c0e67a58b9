#pragma once

#include <deque>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "potency/complex.hpp"
#include "potency/errors.hpp"
#include "potency/matrix.hpp"
#include "potency/words.hpp"

namespace potency {

/// A finitely presented group: generator count plus relator words.
struct Presentation {
    int n_generators = 0;
    std::vector<Word> relators;

    void validate() const {
        for (const Word& r : relators)
            for (int x : r)
                if (x == 0 || std::abs(x) > n_generators)
                    throw Error("relator letter out of range");
    }
};

/**
 * Edge-path presentation of the fundamental group of a connected complex.
 *
 * The spanning tree of the 1-skeleton is grown breadth-first from `base` in
 * vertex-label order. Each non-tree edge, in lexicographic order, becomes a
 * generator; each 2-face <a<b<c> contributes the relator
 * g(a,b)·g(b,c)·g(a,c)^-1 with tree edges reading as the empty word.
 * Relators are freely reduced; empty relators are dropped. Output is a
 * deterministic function of the input.
 */
inline Presentation edge_path_presentation(const SimplicialComplex& K, Vertex base) {
    if (K.empty()) throw EmptyInput("empty complex has no presentation");
    if (!K.has_vertex(base))
        throw UnknownBase("base vertex " + std::to_string(base) + " not in complex");
    if (connected_components(K) != 1)
        throw Disconnected("edge-path presentation requires a connected complex");

    std::map<Vertex, std::vector<Vertex>> adj;
    std::vector<Simplex> edges = K.dim() >= 1 ? faces(K, 1) : std::vector<Simplex>{};
    for (const auto& e : edges) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    for (auto& [v, nb] : adj) std::sort(nb.begin(), nb.end());

    std::set<std::pair<Vertex, Vertex>> tree;
    std::set<Vertex> seen{base};
    std::deque<Vertex> queue{base};
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex v : adj[u]) {
            if (seen.count(v)) continue;
            seen.insert(v);
            tree.insert({std::min(u, v), std::max(u, v)});
            queue.push_back(v);
        }
    }

    std::map<std::pair<Vertex, Vertex>, int> gen;
    int n = 0;
    for (const auto& e : edges) {
        std::pair<Vertex, Vertex> key{e[0], e[1]};
        if (!tree.count(key)) gen[key] = ++n;
    }
    // letter for the directed edge a->b; 0 when it lies in the tree
    auto letter = [&](Vertex a, Vertex b) -> int {
        std::pair<Vertex, Vertex> key{std::min(a, b), std::max(a, b)};
        auto it = gen.find(key);
        if (it == gen.end()) return 0;
        return a < b ? it->second : -it->second;
    };

    Presentation P;
    P.n_generators = n;
    if (K.dim() >= 2) {
        for (const auto& t : faces(K, 2)) {
            Word w;
            if (int x = letter(t[0], t[1])) w.push_back(x);
            if (int x = letter(t[1], t[2])) w.push_back(x);
            if (int x = letter(t[0], t[2])) w.push_back(-x);
            w = free_reduce(w);
            if (!w.empty()) P.relators.push_back(std::move(w));
        }
    }
    return P;
}

/// Result of Tietze simplification; `budget_exceeded` marks a best-so-far
/// return after the move budget ran out.
struct TietzeResult {
    Presentation presentation;
    long long steps = 0;
    bool budget_exceeded = false;
};

/**
 * Deterministic Tietze simplification loop, applied to fixpoint or budget:
 * free+cyclic reduction and dropping of empty relators, then the first
 * applicable of: a length-1 relator kills its generator; a length-2 relator
 * identifies two generators (the higher index is eliminated); a generator
 * occurring exactly once across all relators, in a relator of length <= 16,
 * is eliminated together with that relator (shortest such relator first,
 * ties by index); duplicate relators (up to rotation and inversion) are
 * dropped. Every move preserves the group up to isomorphism.
 */
inline TietzeResult tietze_simplify(const Presentation& P, long long budget = 1'000'000) {
    P.validate();
    std::set<int> live;
    for (int g = 1; g <= P.n_generators; ++g) live.insert(g);
    std::vector<Word> rel;
    for (const Word& r : P.relators) {
        Word w = cyclically_reduce(r);
        if (!w.empty()) rel.push_back(std::move(w));
    }

    TietzeResult result;
    auto substitute_all = [&](int g, const Word& repl) {
        std::vector<Word> next;
        next.reserve(rel.size());
        for (Word& r : rel) {
            bool touches = false;
            for (int x : r)
                if (std::abs(x) == g) {
                    touches = true;
                    break;
                }
            if (!touches) {
                next.push_back(std::move(r));
                continue;
            }
            Word w = cyclically_reduce(substitute_generator(r, g, repl));
            if (!w.empty()) next.push_back(std::move(w));
        }
        rel = std::move(next);
        live.erase(g);
    };

    while (true) {
        if (result.steps >= budget) {
            result.budget_exceeded = true;
            break;
        }
        // length-1 relator: its generator is trivial
        bool moved = false;
        for (const Word& r : rel) {
            if (r.size() == 1) {
                substitute_all(std::abs(r[0]), {});
                moved = true;
                break;
            }
        }
        if (moved) {
            ++result.steps;
            continue;
        }
        // length-2 relator on two distinct generators: identify them,
        // eliminating the higher index
        for (const Word& r : rel) {
            if (r.size() != 2 || std::abs(r[0]) == std::abs(r[1])) continue;
            int x = r[0], y = r[1];
            if (std::abs(x) < std::abs(y)) std::swap(x, y);
            // relator x*y (as reordered): solve for the generator |x|
            int g = std::abs(x);
            Word repl = (x > 0) ? Word{-y} : Word{y};
            substitute_all(g, repl);
            moved = true;
            break;
        }
        if (moved) {
            ++result.steps;
            continue;
        }
        // generator occurring exactly once across all relators, inside a
        // relator of length <= 16: drop generator and relator together
        {
            std::map<int, int> count;
            for (const Word& r : rel)
                for (int x : r) count[std::abs(x)]++;
            std::size_t best_idx = rel.size();
            int best_gen = 0;
            std::size_t best_len = 17;
            for (std::size_t idx = 0; idx < rel.size(); ++idx) {
                const Word& r = rel[idx];
                if (r.size() > 16 || r.size() >= best_len) continue;
                int g = 0;
                for (int x : r)
                    if (count[std::abs(x)] == 1 && (g == 0 || std::abs(x) < g)) g = std::abs(x);
                if (g) {
                    best_len = r.size();
                    best_idx = idx;
                    best_gen = g;
                }
            }
            if (best_idx < rel.size()) {
                rel.erase(rel.begin() + static_cast<std::ptrdiff_t>(best_idx));
                live.erase(best_gen);
                ++result.steps;
                continue;
            }
        }
        // deduplicate relators up to cyclic rotation and inversion
        {
            std::set<Word> seen;
            std::vector<Word> ded;
            for (const Word& r : rel) {
                Word c = canonical_relator(r);
                if (seen.count(c)) continue;
                seen.insert(std::move(c));
                ded.push_back(r);
            }
            if (ded.size() != rel.size()) {
                rel = std::move(ded);
                ++result.steps;
                continue;
            }
        }
        break;
    }

    // renumber surviving generators consecutively, preserving order
    std::map<int, int> remap;
    int n = 0;
    for (int g : live) remap[g] = ++n;
    result.presentation.n_generators = n;
    for (const Word& r : rel) {
        Word w;
        w.reserve(r.size());
        for (int x : r) w.push_back(x > 0 ? remap.at(x) : -remap.at(-x));
        result.presentation.relators.push_back(std::move(w));
    }
    return result;
}

/// Abelianization of a presentation: free rank, torsion chain, and (when the
/// free part is Z and there is no torsion) the primitive exponent vector of
/// the map onto Z.
struct AbelianizationResult {
    long rank = 0;
    std::vector<Int> torsion;
    std::optional<std::vector<Int>> exponents;
};

inline IntMatrix exponent_matrix(const Presentation& P) {
    IntMatrix m(static_cast<int>(P.relators.size()), P.n_generators);
    for (std::size_t i = 0; i < P.relators.size(); ++i) {
        std::map<int, long long> sums;
        for (int x : P.relators[i]) sums[std::abs(x)] += (x > 0) ? 1 : -1;
        for (const auto& [g, e] : sums)
            if (e) m.set(static_cast<int>(i), g - 1, Int(e));
    }
    return m;
}

inline AbelianizationResult abelianization_invariants(const Presentation& P) {
    P.validate();
    AbelianizationResult out;
    IntMatrix m = exponent_matrix(P);
    SNFResult snf = smith_normal_form(m);
    out.rank = P.n_generators - snf.rank();
    for (const Int& f : snf.invariant_factors)
        if (f > 1) out.torsion.push_back(f);
    if (out.rank == 1 && out.torsion.empty() && P.n_generators <= 512) {
        if (P.relators.empty()) {
            out.exponents = std::vector<Int>{Int(1)};
        } else {
            // kernel of the exponent matrix: columns of V past the rank
            TrackedSNF tracked = smith_normal_form_tracked(m);
            int rank = static_cast<int>(tracked.diagonal.size());
            std::vector<Int> e(static_cast<std::size_t>(P.n_generators));
            for (int i = 0; i < P.n_generators; ++i)
                e[static_cast<std::size_t>(i)] =
                    tracked.V[static_cast<std::size_t>(i)][static_cast<std::size_t>(rank)];
            Int g = 0;
            for (const Int& x : e) g = boost::multiprecision::gcd(g, x);
            if (g > 1)
                for (Int& x : e) x /= g;
            for (const Int& x : e) {
                if (x == 0) continue;
                if (x < 0)
                    for (Int& y : e) y = -y;
                break;
            }
            out.exponents = std::move(e);
        }
    }
    return out;
}

// Presentation text format: `gp v1`, `gens <n>`, then one `r <letters...>`
// line per relator with signed 1-based integers.

inline void write_presentation(std::ostream& os, const Presentation& P) {
    os << "gp v1\n";
    os << "gens " << P.n_generators << "\n";
    for (const Word& r : P.relators) {
        os << "r";
        for (int x : r) os << " " << x;
        os << "\n";
    }
}

inline Presentation read_presentation(std::istream& is) {
    std::string raw;
    int lineno = 0;
    bool saw_header = false, saw_gens = false;
    Presentation P;
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
            if (tok != "gp" || ver != "v1") throw ParseError(lineno, "expected header `gp v1`");
            saw_header = true;
            continue;
        }
        if (!saw_gens) {
            if (tok != "gens") throw ParseError(lineno, "expected `gens <n>`");
            if (!(ss >> P.n_generators) || P.n_generators < 0)
                throw ParseError(lineno, "bad generator count");
            saw_gens = true;
            continue;
        }
        if (tok != "r") throw ParseError(lineno, "expected relator line `r ...`");
        Word w;
        int x;
        while (ss >> x) {
            if (x == 0 || std::abs(x) > P.n_generators)
                throw ParseError(lineno, "relator letter out of range");
            w.push_back(x);
        }
        if (!ss.eof()) throw ParseError(lineno, "non-integer relator letter");
        P.relators.push_back(std::move(w));
    }
    if (!saw_header) throw ParseError(lineno ? lineno : 1, "missing `gp v1` header");
    if (!saw_gens) throw ParseError(lineno ? lineno : 1, "missing `gens` line");
    return P;
}

}  // namespace potency
