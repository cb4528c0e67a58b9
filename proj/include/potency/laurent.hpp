#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "potency/errors.hpp"
#include "potency/integer.hpp"

namespace potency {

/**
 * Integer-coefficient Laurent polynomial in one variable t. Zero
 * coefficients are never stored. The normalized form has minimal exponent 0
 * and positive constant term.
 */
class LaurentPolynomial {
  public:
    LaurentPolynomial() = default;

    static LaurentPolynomial monomial(long long exponent, Int coeff) {
        LaurentPolynomial p;
        if (coeff != 0) p.coeffs_[exponent] = std::move(coeff);
        return p;
    }

    static LaurentPolynomial one() { return monomial(0, Int(1)); }

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<long long, Int>& coefficients() const { return coeffs_; }

    Int coefficient(long long e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? Int(0) : it->second;
    }

    long long min_exponent() const { return coeffs_.begin()->first; }
    long long max_exponent() const { return coeffs_.rbegin()->first; }

    LaurentPolynomial operator-() const {
        LaurentPolynomial out;
        for (const auto& [e, c] : coeffs_) out.coeffs_[e] = -c;
        return out;
    }

    LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
        for (const auto& [e, c] : o.coeffs_) {
            Int& x = coeffs_[e];
            x += c;
            if (x == 0) coeffs_.erase(e);
        }
        return *this;
    }

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
        a += b;
        return a;
    }

    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
        a += -b;
        return a;
    }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        LaurentPolynomial out;
        for (const auto& [e1, c1] : a.coeffs_)
            for (const auto& [e2, c2] : b.coeffs_) {
                Int& x = out.coeffs_[e1 + e2];
                x += c1 * c2;
                if (x == 0) out.coeffs_.erase(e1 + e2);
            }
        return out;
    }

    bool operator==(const LaurentPolynomial&) const = default;

    /// Divides by ±t^k so the minimal exponent is 0 and the constant term is
    /// positive. The zero polynomial normalizes to itself.
    LaurentPolynomial normalized() const {
        if (is_zero()) return {};
        LaurentPolynomial out;
        long long shift = min_exponent();
        int sign = coeffs_.begin()->second > 0 ? 1 : -1;
        for (const auto& [e, c] : coeffs_) out.coeffs_[e - shift] = sign * c;
        return out;
    }

    Int evaluate_at_one() const {
        Int s = 0;
        for (const auto& [e, c] : coeffs_) s += c;
        return s;
    }

    /// Dense coefficients from exponent 0 upward (requires min exponent >= 0).
    std::vector<Int> coefficients_from_zero() const {
        std::vector<Int> out;
        if (is_zero()) return out;
        if (min_exponent() < 0) throw Error("polynomial has negative exponents");
        out.assign(static_cast<std::size_t>(max_exponent()) + 1, Int(0));
        for (const auto& [e, c] : coeffs_) out[static_cast<std::size_t>(e)] = c;
        return out;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : coeffs_) {
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            Int a = boost::multiprecision::abs(c);
            if (a != 1 || e == 0) os << a.str();
            if (e != 0) {
                if (a != 1) os << "*";
                os << "t";
                if (e != 1) os << "^" << e;
            }
            first = false;
        }
        return os.str();
    }

  private:
    std::map<long long, Int> coeffs_;
};

// --------------------------------------------------------------------------
// Ordinary integer polynomials (dense, trailing zeros trimmed): the gcd
// arithmetic behind Alexander polynomials. Laurent values are cleared to
// ordinary polynomials by shifting out t^min first.
// --------------------------------------------------------------------------

using Poly = std::vector<Int>;  ///< coefficient of t^i at index i

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline bool poly_is_zero(const Poly& p) { return p.empty(); }

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    poly_trim(out);
    return out;
}

inline Poly poly_scale(Poly p, const Int& c) {
    for (Int& x : p) x *= c;
    poly_trim(p);
    return p;
}

inline Poly poly_sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    poly_trim(a);
    return a;
}

inline Int poly_content(const Poly& p) {
    Int g = 0;
    for (const Int& c : p) g = boost::multiprecision::gcd(g, c);
    return g;
}

inline Poly poly_primitive(Poly p) {
    Int g = poly_content(p);
    if (g > 1)
        for (Int& c : p) c /= g;
    if (!p.empty() && p.back() < 0)
        for (Int& c : p) c = -c;
    return p;
}

/// Exact division a / b in Z[t]; throws if the division is not exact.
inline Poly poly_exact_div(Poly a, const Poly& b) {
    if (b.empty()) throw Error("polynomial division by zero");
    if (a.empty()) return {};
    if (a.size() < b.size()) throw Error("polynomial division not exact");
    Poly q(a.size() - b.size() + 1, Int(0));
    const Int& lead = b.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        Int top = a.size() > k + b.size() - 1 ? a[k + b.size() - 1] : Int(0);
        if (top == 0) continue;
        if (top % lead != 0) throw Error("polynomial division not exact");
        Int coef = top / lead;
        q[k] = coef;
        for (std::size_t i = 0; i < b.size(); ++i) a[k + i] -= coef * b[i];
    }
    poly_trim(a);
    if (!a.empty()) throw Error("polynomial division not exact");
    return q;
}

/// Pseudo-remainder of a by b: lead(b)^(deg a - deg b + 1) * a mod b.
inline Poly poly_pseudo_rem(Poly a, const Poly& b) {
    const Int& lead = b.back();
    long long steps = static_cast<long long>(a.size()) - static_cast<long long>(b.size()) + 1;
    for (long long s = 0; s < steps && a.size() >= b.size(); ++s) {
        Int top = a.back();
        for (Int& c : a) c *= lead;
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= top * b[i];
        poly_trim(a);
        if (a.empty()) break;
    }
    return a;
}

/// Gcd in Z[t] via the primitive polynomial remainder sequence, with the
/// integer contents handled separately. Result has positive leading
/// coefficient; gcd(0, 0) = 0.
inline Poly poly_gcd(Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    auto positive = [](Poly p) {
        if (!p.empty() && p.back() < 0)
            for (Int& c : p) c = -c;
        return p;
    };
    if (a.empty()) return positive(std::move(b));
    if (b.empty()) return positive(std::move(a));
    Int cont = boost::multiprecision::gcd(poly_content(a), poly_content(b));
    Poly pa = poly_primitive(std::move(a));
    Poly pb = poly_primitive(std::move(b));
    while (!pb.empty()) {
        Poly r = poly_pseudo_rem(pa, pb);
        pa = std::move(pb);
        pb = poly_primitive(std::move(r));
    }
    return poly_scale(std::move(pa), cont);
}

/// Clears t^min and returns the ordinary polynomial part of p.
inline Poly laurent_cleared(const LaurentPolynomial& p) {
    Poly out;
    if (p.is_zero()) return out;
    long long shift = p.min_exponent();
    out.assign(static_cast<std::size_t>(p.max_exponent() - shift) + 1, Int(0));
    for (const auto& [e, c] : p.coefficients()) out[static_cast<std::size_t>(e - shift)] = c;
    return out;
}

inline LaurentPolynomial laurent_from_poly(const Poly& p) {
    LaurentPolynomial out;
    for (std::size_t i = 0; i < p.size(); ++i)
        out += LaurentPolynomial::monomial(static_cast<long long>(i), p[i]);
    return out;
}

}  // namespace potency
