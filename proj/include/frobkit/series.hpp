#pragma once

#include "frobkit/algebra.hpp"

#include <string>
#include <vector>

namespace frobkit {

/// Power series in z truncated at a fixed order, with coefficients in an
/// arbitrary coefficient algebra. coeffs[k] is the coefficient of z^k.
struct TruncatedSeries {
    AlgebraPtr algebra;
    int order = 0;
    std::vector<Element> coeffs;  // size order + 1

    const Element& coeff(int k) const { return coeffs[static_cast<std::size_t>(k)]; }
};

inline TruncatedSeries make_series(const AlgebraPtr& alg, int order) {
    if (order < 0) throw Error("series order must be nonnegative");
    return TruncatedSeries{alg, order, std::vector<Element>(order + 1, zero_element(alg))};
}

inline TruncatedSeries series_one(const AlgebraPtr& alg, int order) {
    TruncatedSeries s = make_series(alg, order);
    s.coeffs[0] = unit_element(alg);
    return s;
}

/// The series unit + a z (the argument of the logarithm in the characteristic
/// function).
inline TruncatedSeries series_one_plus_az(const Element& a, int order) {
    TruncatedSeries s = series_one(a.algebra, order);
    if (order >= 1) s.coeffs[1] = a;
    return s;
}

inline bool operator==(const TruncatedSeries& s, const TruncatedSeries& t) {
    return same_algebra(s.algebra, t.algebra) && s.order == t.order && s.coeffs == t.coeffs;
}
inline bool operator!=(const TruncatedSeries& s, const TruncatedSeries& t) { return !(s == t); }

inline void require_same_algebra(const TruncatedSeries& s, const TruncatedSeries& t) {
    if (!same_algebra(s.algebra, t.algebra)) throw Error("algebra mismatch");
}

inline TruncatedSeries series_add(const TruncatedSeries& s, const TruncatedSeries& t) {
    require_same_algebra(s, t);
    TruncatedSeries r = make_series(s.algebra, std::min(s.order, t.order));
    for (int k = 0; k <= r.order; ++k) r.coeffs[k] = s.coeffs[k] + t.coeffs[k];
    return r;
}

inline TruncatedSeries series_sub(const TruncatedSeries& s, const TruncatedSeries& t) {
    require_same_algebra(s, t);
    TruncatedSeries r = make_series(s.algebra, std::min(s.order, t.order));
    for (int k = 0; k <= r.order; ++k) r.coeffs[k] = s.coeffs[k] - t.coeffs[k];
    return r;
}

/// Cauchy product truncated at the smaller operand order.
inline TruncatedSeries series_mul(const TruncatedSeries& s, const TruncatedSeries& t) {
    require_same_algebra(s, t);
    TruncatedSeries r = make_series(s.algebra, std::min(s.order, t.order));
    for (int i = 0; i <= r.order; ++i) {
        if (s.coeffs[i].is_zero()) continue;
        for (int j = 0; i + j <= r.order; ++j) {
            if (t.coeffs[j].is_zero()) continue;
            r.coeffs[i + j] = r.coeffs[i + j] + mul(s.coeffs[i], t.coeffs[j]);
        }
    }
    return r;
}

inline TruncatedSeries series_scale(const Scalar& c, const TruncatedSeries& s) {
    TruncatedSeries r = s;
    for (auto& e : r.coeffs) e = c * e;
    return r;
}

/// exp of a series with zero constant term: sum_m s^m / m! up to the order.
/// Computed through the coefficient recurrence of exp(s)' = s' exp(s).
inline TruncatedSeries series_exp(const TruncatedSeries& s) {
    if (!s.coeffs[0].is_zero()) throw Error("exp requires zero constant term");
    TruncatedSeries r = make_series(s.algebra, s.order);
    r.coeffs[0] = unit_element(s.algebra);
    for (int m = 1; m <= s.order; ++m) {
        Element acc = zero_element(s.algebra);
        for (int j = 1; j <= m; ++j) {
            if (s.coeffs[j].is_zero()) continue;
            acc = acc + Scalar(j) * mul(s.coeffs[j], r.coeffs[m - j]);
        }
        r.coeffs[m] = Scalar(1, m) * acc;
    }
    return r;
}

/// log of a series with unit constant term: sum_k (-1)^(k-1) (s-1)^k / k.
/// Computed through the coefficient recurrence of s' = (log s)' s.
inline TruncatedSeries series_log(const TruncatedSeries& s) {
    if (s.coeffs[0] != unit_element(s.algebra)) throw Error("log requires unit constant term");
    TruncatedSeries r = make_series(s.algebra, s.order);
    for (int m = 1; m <= s.order; ++m) {
        Element acc = s.coeffs[m];
        for (int j = 1; j < m; ++j) {
            if (r.coeffs[j].is_zero() || s.coeffs[m - j].is_zero()) continue;
            acc = acc - Scalar(j, m) * mul(r.coeffs[j], s.coeffs[m - j]);
        }
        r.coeffs[m] = acc;
    }
    return r;
}

/// Multiplicative inverse: s * result = 1 up to the order. Requires the
/// constant term to be invertible in the coefficient algebra.
inline TruncatedSeries series_invert(const TruncatedSeries& s) {
    const Element c0inv = invert(s.coeffs[0]);  // throws "element not invertible"
    TruncatedSeries r = make_series(s.algebra, s.order);
    r.coeffs[0] = c0inv;
    for (int m = 1; m <= s.order; ++m) {
        Element acc = zero_element(s.algebra);
        for (int j = 1; j <= m; ++j) {
            if (s.coeffs[j].is_zero()) continue;
            acc = acc + mul(s.coeffs[j], r.coeffs[m - j]);
        }
        r.coeffs[m] = -mul(c0inv, acc);
    }
    return r;
}

/// Applies a linear map to every coefficient.
inline TruncatedSeries map_coefficients(const LinearMap& f, const TruncatedSeries& s) {
    if (!same_algebra(f.domain, s.algebra)) throw Error("algebra mismatch");
    TruncatedSeries r = make_series(f.codomain, s.order);
    for (int k = 0; k <= s.order; ++k) r.coeffs[k] = apply(f, s.coeffs[k]);
    return r;
}

/// Evaluates the truncated series at a scalar point, coefficientwise.
inline Element series_eval(const TruncatedSeries& s, const Scalar& z) {
    Element acc = s.coeffs[s.order];
    for (int k = s.order - 1; k >= 0; --k) acc = z * acc + s.coeffs[k];
    return acc;
}

inline std::string element_to_string(const Element& e) {
    if (e.algebra->dim() == 1) return scalar_to_string(e.coords[0]);
    std::string out = "[";
    for (int i = 0; i < e.algebra->dim(); ++i) {
        if (i) out += ", ";
        out += scalar_to_string(e.coords[i]);
    }
    out += "]";
    return out;
}

/// "c0 + c1 z + c2 z^2 + ..." with rationals in lowest terms.
inline std::string series_to_string(const TruncatedSeries& s, const std::string& var = "z") {
    std::string out;
    for (int k = 0; k <= s.order; ++k) {
        if (s.coeffs[k].is_zero() && !(k == 0 && s.order == 0)) continue;
        if (!out.empty()) out += " + ";
        out += element_to_string(s.coeffs[k]);
        if (k >= 1) out += " " + var;
        if (k >= 2) out += "^" + std::to_string(k);
    }
    if (out.empty()) out = "0";
    return out;
}

} // namespace frobkit
