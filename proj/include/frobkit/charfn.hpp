#pragma once

#include "frobkit/ratrecon.hpp"
#include "frobkit/series.hpp"

#include <algorithm>
#include <vector>

namespace frobkit {

/// The characteristic series of a linear map f at an element a:
/// exp(f log(1 + a z)), truncated. psis[k] is the z^k coefficient.
struct CharFnExpansion {
    LinearMap map;
    Element element;
    int order = 0;
    TruncatedSeries series;
    std::vector<Element> psis;
};

inline CharFnExpansion char_function(const LinearMap& f, const Element& a, int order) {
    if (order < 0) throw Error("char_function: order must be nonnegative");
    if (!same_algebra(f.domain, a.algebra)) throw Error("algebra mismatch");
    TruncatedSeries series =
        series_exp(map_coefficients(f, series_log(series_one_plus_az(a, order))));
    CharFnExpansion r{f, a, order, std::move(series), {}};
    r.psis = r.series.coeffs;
    return r;
}

/// psi_k(f, a): the z^k coefficient of the characteristic series.
inline Element psi(const LinearMap& f, const Element& a, int k) {
    if (k < 0) throw Error("psi: k must be nonnegative");
    return char_function(f, a, k).series.coeff(k);
}

namespace detail {

inline bool all_integer(const std::vector<Scalar>& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return is_integer(x); });
}

} // namespace detail

/// psi_0..psi_order as one vector. Same values as char_function(f, a, order);
/// integral scalar-valued instances run the exp recurrence in denominator-
/// cleared integer arithmetic (E_m = m! psi_m) for speed.
inline std::vector<Element> psi_vector(const LinearMap& f, const Element& a, int order) {
    bool integral = f.codomain->dim() == 1 && detail::all_integer(a.coords);
    for (int r = 0; integral && r < f.matrix.rows(); ++r)
        for (int c = 0; c < f.matrix.cols(); ++c)
            if (!is_integer(f.matrix(r, c))) integral = false;
    if (!integral) return char_function(f, a, order).psis;

    // Integer moments c_j = f(a^j). Non-integer structure constants can still
    // break integrality; fall back to the generic path if they do.
    std::vector<BigInt> moments(order + 1);
    Element p = unit_element(a.algebra);
    for (int j = 1; j <= order; ++j) {
        p = mul(p, a);
        const Scalar value = f.matrix.apply(p.coords)[0];
        if (!is_integer(value)) return char_function(f, a, order).psis;
        moments[j] = numerator(value);
    }
    // Scaled exp recurrence: with s_j = (-1)^(j-1) c_j / j the series exp
    // recurrence m e_m = sum_j j s_j e_{m-j} becomes, for E_m = m! e_m,
    //   E_m = sum_j (-1)^(j-1) c_j E_{m-j} (m-1)!/(m-j)!.
    std::vector<BigInt> fact(order + 1);
    fact[0] = 1;
    for (int j = 1; j <= order; ++j) fact[j] = fact[j - 1] * j;
    std::vector<BigInt> scaled(order + 1);
    scaled[0] = 1;
    for (int m = 1; m <= order; ++m) {
        BigInt acc = 0;
        for (int j = 1; j <= m; ++j) {
            if (moments[j].is_zero()) continue;
            const BigInt term = moments[j] * scaled[m - j] * (fact[m - 1] / fact[m - j]);
            acc += (j % 2) ? term : -term;
        }
        scaled[m] = acc;
    }
    std::vector<Element> psis(order + 1, unit_element(f.codomain));
    for (int m = 1; m <= order; ++m) psis[m] = Element{f.codomain, {Scalar(scaled[m]) / Scalar(fact[m])}};
    return psis;
}

/// psi_k through the Newton-polynomial determinant: (1/k!) times the k x k
/// determinant with f(a^(i-j+1)) below the diagonal and i on the
/// superdiagonal. Evaluated by the Hessenberg minor recurrence
///   D_m = f(a) D_{m-1} + sum_r (-1)^(m-r) f(a^(m-r+1)) ((m-1)!/(r-1)!) D_{r-1},
/// an independent route from the series exponential.
inline Element psi_newton(const LinearMap& f, const Element& a, int k) {
    if (k < 1) throw Error("psi_newton: k must be positive");
    std::vector<Element> moments(k + 1, zero_element(f.codomain));  // moments[j] = f(a^j)
    {
        Element p = a;
        for (int j = 1; j <= k; ++j) {
            moments[j] = apply(f, p);
            if (j < k) p = mul(p, a);
        }
    }
    std::vector<Element> minors(k + 1, zero_element(f.codomain));
    minors[0] = unit_element(f.codomain);
    for (int m = 1; m <= k; ++m) {
        Element acc = mul(moments[1], minors[m - 1]);
        BigInt falling = 1;  // (m-1)!/(r-1)! for the current r
        for (int r = m - 1; r >= 1; --r) {
            falling *= r;
            const Element term = Scalar(falling) * mul(moments[m - r + 1], minors[r - 1]);
            acc = ((m - r) % 2 == 0) ? acc + term : acc - term;
        }
        minors[m] = acc;
    }
    return Scalar(BigInt(1), factorial(k)) * minors[k];
}

/// The explicit Newton determinant matrix (used to cross-check the recurrence).
inline std::vector<std::vector<Element>> newton_matrix(const LinearMap& f, const Element& a, int k) {
    std::vector<std::vector<Element>> m(k, std::vector<Element>(k, zero_element(f.codomain)));
    Element p = unit_element(a.algebra);
    std::vector<Element> moments(k + 1, zero_element(f.codomain));
    for (int j = 1; j <= k; ++j) {
        p = mul(p, a);
        moments[j] = apply(f, p);
    }
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            if (j <= i) m[i - 1][j - 1] = moments[i - j + 1];
            else if (j == i + 1) m[i - 1][j - 1] = Scalar(i) * unit_element(f.codomain);
        }
    return m;
}

/// The character f(1), with the integrality flag required whenever the
/// characteristic function is asserted rational.
struct CharacterInfo {
    Element value;
    bool integral = false;  // value == chi * unit with integer chi
    BigInt chi = 0;
};

inline CharacterInfo character(const LinearMap& f) {
    CharacterInfo info{apply(f, unit_element(f.domain)), false, 0};
    const std::vector<Scalar>& u = f.codomain->unit_coords();
    int pivot = -1;
    for (int i = 0; i < f.codomain->dim(); ++i)
        if (!u[i].is_zero()) { pivot = i; break; }
    if (pivot < 0) throw Error("codomain unit is zero");
    const Scalar ratio = info.value.coords[pivot] / u[pivot];
    if (is_integer(ratio) && info.value == ratio * unit_element(f.codomain)) {
        info.integral = true;
        info.chi = numerator(ratio);
    }
    return info;
}

enum class BerezinianMethod { nilpotent, reconstruction, automatic };

namespace detail {

inline Element log_unipotent(const Element& a) {
    const Element n = a - unit_element(a.algebra);
    const int idx = nilpotency_index(n);
    if (idx < 0) throw Error("Berezinian undefined by available methods");
    Element acc = zero_element(a.algebra);
    Element p = unit_element(a.algebra);
    for (int k = 1; k < idx; ++k) {
        p = mul(p, n);
        const Scalar c = Scalar(1, k);
        acc = acc + ((k % 2) ? c : -c) * p;
    }
    return acc;
}

inline Element exp_nilpotent(const Element& b) {
    const int idx = nilpotency_index(b);
    if (idx < 0) throw Error("Berezinian undefined by available methods");
    Element acc = unit_element(b.algebra);
    Element p = unit_element(b.algebra);
    for (int k = 1; k < idx; ++k) {
        p = mul(p, b);
        acc = acc + Scalar(BigInt(1), factorial(k)) * p;
    }
    return acc;
}

inline RationalForm reconstruct_char_function(const LinearMap& f, const Element& a) {
    int order = 12;
    const int max_deg = (order - 1) / 2;
    auto series = char_function(f, a, order).series;
    const auto degrees = detect_degrees(series, max_deg, max_deg);
    if (!degrees) throw Error("Berezinian undefined by available methods");
    const auto [p, q] = *degrees;
    if (order < p + q + 6) {
        order = p + q + 6;
        series = char_function(f, a, order).series;
    }
    return reconstruct_rational(series, p, q);
}

} // namespace detail

/// The leading coefficient of the characteristic function at infinity,
/// exp(f log a). Two exact regimes: unipotent argument (both logarithm and
/// exponential terminate) and split codomain (certified rational
/// reconstruction, then the ratio of leading coefficients).
inline Element berezinian(const LinearMap& f, const Element& a,
                          BerezinianMethod method = BerezinianMethod::automatic) {
    if (!same_algebra(f.domain, a.algebra)) throw Error("algebra mismatch");
    if (method == BerezinianMethod::nilpotent || method == BerezinianMethod::automatic) {
        try {
            return detail::exp_nilpotent(apply(f, detail::log_unipotent(a)));
        } catch (const Error&) {
            if (method == BerezinianMethod::nilpotent) throw;
        }
    }
    if (!is_function_algebra(*f.codomain)) throw Error("Berezinian undefined by available methods");
    return rational_form_leading_ratio(detail::reconstruct_char_function(f, a));
}

/// Expansion of the characteristic function at infinity:
/// z^chi * Ber * (1 + psi_1(f, a^-1) z^-1 + ...). The tail is a series in the
/// variable z^-1.
struct InfinityExpansion {
    BigInt character = 0;
    Element berezinian;
    TruncatedSeries tail;
};

inline InfinityExpansion infinity_expansion(const LinearMap& f, const Element& a, int order) {
    const Element ainv = invert(a);
    const CharacterInfo ch = character(f);
    if (!ch.integral) throw Error("character not integral");
    Element ber = berezinian(f, a);
    TruncatedSeries tail = char_function(f, ainv, order).series;
    return InfinityExpansion{ch.chi, std::move(ber), std::move(tail)};
}

/// Coefficients (ascending in t) of the monic polynomial t^n R(f, a, -1/t),
/// defined when the characteristic series is a polynomial of degree <= n at
/// the expansion's order. The t^(n-k) coefficient is (-1)^k psi_k.
inline std::vector<Element> monic_polynomial_form(const CharFnExpansion& r, int n) {
    if (n < 0 || n > r.order) throw Error("monic_polynomial_form: need 0 <= n <= order");
    for (int k = n + 1; k <= r.order; ++k)
        if (!r.psis[k].is_zero()) throw Error("series not polynomial of degree n at this order");
    std::vector<Element> coeffs(n + 1, zero_element(r.map.codomain));
    for (int k = 0; k <= n; ++k)
        coeffs[n - k] = (k % 2 == 0) ? r.psis[k] : -r.psis[k];
    return coeffs;
}

} // namespace frobkit
