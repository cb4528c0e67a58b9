#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "potency/errors.hpp"
#include "potency/laurent.hpp"
#include "potency/presentation.hpp"

namespace potency {

/**
 * Fox free derivative of a relator with respect to generator g, specialized
 * along the abelianization g_i -> t^{e_i}: the sum of +t^{e(prefix)} for each
 * +g letter and -t^{e(prefix) - e_g} for each -g letter.
 */
inline LaurentPolynomial fox_derivative(const Word& relator, int g,
                                        const std::vector<Int>& exponents) {
    LaurentPolynomial out;
    long long prefix = 0;
    auto expo = [&](int letter) {
        long long e = exponents[static_cast<std::size_t>(std::abs(letter)) - 1]
                          .convert_to<long long>();
        return letter > 0 ? e : -e;
    };
    for (int x : relator) {
        if (x == g)
            out += LaurentPolynomial::monomial(prefix, Int(1));
        else if (x == -g)
            out += LaurentPolynomial::monomial(prefix + expo(x), Int(-1));
        prefix += expo(x);
    }
    return out;
}

namespace detail {

/// Determinant of a square matrix of Laurent polynomials, up to a unit
/// ±t^k (each row is cleared by its minimal exponent first). Fraction-free
/// Bareiss elimination over Z[t].
inline Poly laurent_minor_det_cleared(std::vector<std::vector<LaurentPolynomial>> m) {
    const std::size_t k = m.size();
    if (k == 0) return Poly{Int(1)};
    std::vector<std::vector<Poly>> a(k, std::vector<Poly>(k));
    for (std::size_t i = 0; i < k; ++i) {
        bool any = false;
        long long shift = 0;
        for (const auto& e : m[i])
            if (!e.is_zero()) {
                shift = any ? std::min(shift, e.min_exponent()) : e.min_exponent();
                any = true;
            }
        if (!any) return {};  // zero row
        for (std::size_t j = 0; j < k; ++j) {
            Poly p;
            if (!m[i][j].is_zero()) {
                const auto& cs = m[i][j].coefficients();
                p.assign(static_cast<std::size_t>(m[i][j].max_exponent() - shift) + 1, Int(0));
                for (const auto& [e, c] : cs) p[static_cast<std::size_t>(e - shift)] = c;
            }
            a[i][j] = std::move(p);
        }
    }
    Poly prev{Int(1)};
    int sign = 1;
    for (std::size_t t = 0; t + 1 < k; ++t) {
        if (poly_is_zero(a[t][t])) {
            std::size_t swap_row = t + 1;
            while (swap_row < k && poly_is_zero(a[swap_row][t])) ++swap_row;
            if (swap_row == k) return {};
            std::swap(a[t], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = t + 1; i < k; ++i) {
            for (std::size_t j = t + 1; j < k; ++j) {
                Poly num = poly_sub(poly_mul(a[i][j], a[t][t]), poly_mul(a[i][t], a[t][j]));
                a[i][j] = poly_exact_div(std::move(num), prev);
            }
            a[i][t].clear();
        }
        prev = a[t][t];
    }
    Poly det = a[k - 1][k - 1];
    if (sign < 0)
        for (Int& c : det) c = -c;
    return det;
}

}  // namespace detail

/**
 * Alexander polynomial of a presentation whose abelianization is Z.
 *
 * The Alexander matrix holds the Fox derivatives of each relator by each
 * generator, specialized along the abelianization; one column whose
 * generator has nonzero exponent is deleted (the lowest index by default),
 * and the result is the gcd of all maximal minors, normalized so the minimal
 * exponent is 0 and the constant term positive.
 *
 * `delete_column` (0-based) overrides the deleted column; it must have
 * nonzero abelianized exponent. Any valid choice yields the same normalized
 * polynomial.
 */
inline LaurentPolynomial alexander_polynomial(const Presentation& P, int generator_cap = 24,
                                              int delete_column = -1) {
    P.validate();
    AbelianizationResult ab = abelianization_invariants(P);
    if (ab.rank != 1 || !ab.torsion.empty() || !ab.exponents)
        throw AbelianizationNotZ("abelianization is not infinite cyclic");
    if (P.n_generators > generator_cap)
        throw MatrixTooLarge("presentation has " + std::to_string(P.n_generators) +
                             " generators after simplification; raise the Tietze budget");
    const std::vector<Int>& e = *ab.exponents;
    const int n = P.n_generators;
    if (delete_column < 0) {
        for (int j = 0; j < n; ++j)
            if (e[static_cast<std::size_t>(j)] != 0) {
                delete_column = j;
                break;
            }
    } else if (delete_column >= n || e[static_cast<std::size_t>(delete_column)] == 0) {
        throw Error("deleted column must have nonzero abelianized exponent");
    }

    const int k = n - 1;
    if (k == 0) return LaurentPolynomial::one();
    const int r = static_cast<int>(P.relators.size());
    if (r < k) return {};  // too few relators: the elementary ideal is zero

    std::vector<std::vector<LaurentPolynomial>> mat(
        static_cast<std::size_t>(r), std::vector<LaurentPolynomial>(static_cast<std::size_t>(k)));
    for (int i = 0; i < r; ++i) {
        int jj = 0;
        for (int j = 0; j < n; ++j) {
            if (j == delete_column) continue;
            mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj++)] =
                fox_derivative(P.relators[static_cast<std::size_t>(i)], j + 1, e);
        }
    }

    // gcd over all k-row minors
    unsigned long long n_minors = 1;
    for (int i = 0; i < k; ++i) {
        n_minors = n_minors * static_cast<unsigned long long>(r - i) /
                   static_cast<unsigned long long>(i + 1);
        if (n_minors > 2'000'000ULL)
            throw MatrixTooLarge("too many maximal minors to enumerate");
    }

    Poly g;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    bool done = false;
    while (!done) {
        std::vector<std::vector<LaurentPolynomial>> sub;
        sub.reserve(static_cast<std::size_t>(k));
        for (int i : idx) sub.push_back(mat[static_cast<std::size_t>(i)]);
        Poly det = detail::laurent_minor_det_cleared(std::move(sub));
        if (!poly_is_zero(det)) {
            g = poly_gcd(std::move(g), std::move(det));
            if (g.size() == 1 && (g[0] == 1 || g[0] == -1)) break;  // unit: gcd settled
        }
        // next combination of k rows out of r
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == i + r - k) --i;
        if (i < 0) {
            done = true;
        } else {
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return laurent_from_poly(g).normalized();
}

// --------------------------------------------------------------------------
// Brute-force representations into the symmetric group on 3 letters: the
// second, independent trefoil detector.
// --------------------------------------------------------------------------

namespace s3 {

/// The six permutations of {0,1,2}, identity first.
inline constexpr std::array<std::array<int, 3>, 6> elements = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

inline int multiply(int a, int b) {
    // (a*b)(x) = a(b(x))
    std::array<int, 3> p{};
    for (int i = 0; i < 3; ++i) p[static_cast<std::size_t>(i)] =
        elements[static_cast<std::size_t>(a)][static_cast<std::size_t>(
            elements[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)])];
    for (int k = 0; k < 6; ++k)
        if (elements[static_cast<std::size_t>(k)] == p) return k;
    return -1;
}

inline int inverse(int a) {
    for (int k = 0; k < 6; ++k)
        if (multiply(a, k) == 0) return k;
    return -1;
}

}  // namespace s3

/**
 * True iff some assignment of the generators to elements of the symmetric
 * group on 3 letters satisfies every relator and has non-cyclic image.
 * Requires at most 6 generators (brute force over 6^n assignments).
 */
inline bool exists_nonabelian_s3_rep(const Presentation& P) {
    P.validate();
    if (P.n_generators > 6)
        throw TooManyGenerators("S3 search requires at most 6 generators");
    const int n = P.n_generators;
    if (n < 2) return false;  // image of fewer than two generators is cyclic

    // multiplication and inverse tables
    int mul[6][6], inv[6];
    for (int a = 0; a < 6; ++a) {
        for (int b = 0; b < 6; ++b) mul[a][b] = s3::multiply(a, b);
        inv[a] = s3::inverse(a);
    }

    std::vector<int> assign(static_cast<std::size_t>(n), 0);
    while (true) {
        bool ok = true;
        for (const Word& r : P.relators) {
            int m = 0;
            for (int x : r) {
                int g = assign[static_cast<std::size_t>(std::abs(x)) - 1];
                m = mul[m][x > 0 ? g : inv[g]];
            }
            if (m != 0) {
                ok = false;
                break;
            }
        }
        if (ok) {
            bool noncyclic = false;
            for (int i = 0; i < n && !noncyclic; ++i)
                for (int j = i + 1; j < n; ++j) {
                    int a = assign[static_cast<std::size_t>(i)],
                        b = assign[static_cast<std::size_t>(j)];
                    if (mul[a][b] != mul[b][a]) {
                        noncyclic = true;
                        break;
                    }
                }
            if (noncyclic) return true;
        }
        // next assignment in base 6
        int pos = 0;
        while (pos < n && assign[static_cast<std::size_t>(pos)] == 5) {
            assign[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == n) return false;
        ++assign[static_cast<std::size_t>(pos)];
    }
}

}  // namespace potency
