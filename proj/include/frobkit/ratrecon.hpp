#pragma once

#include "frobkit/series.hpp"

#include <optional>
#include <utility>

namespace frobkit {

/// A reconstructed rational function P/Q with deg P <= p, deg Q <= q and
/// Q(0) = unit, matching a source series through z^certified_through exactly.
/// Coefficients live in a split coefficient algebra (a function algebra).
struct RationalForm {
    AlgebraPtr algebra;
    int p = 0;
    int q = 0;
    std::vector<Element> numerator;    // degrees 0..p
    std::vector<Element> denominator;  // degrees 0..q, denominator[0] = unit
    int certified_through = 0;
};

namespace detail {

// Componentwise denominator fit: find q_1..q_q with q_0 = 1 such that the
// product s*Q has zero coefficients in degrees p+1..p+q.
inline std::optional<std::vector<Scalar>> fit_denominator(const std::vector<Scalar>& s, int p, int q) {
    const auto coeff = [&](int k) { return k >= 0 ? s[static_cast<std::size_t>(k)] : Scalar(0); };
    Mat a(q, q);
    std::vector<Scalar> rhs(q);
    for (int r = 0; r < q; ++r) {
        const int m = p + 1 + r;
        for (int j = 1; j <= q; ++j) a(r, j - 1) = coeff(m - j);
        rhs[r] = -coeff(m);
    }
    auto x = solve_any(a, rhs);
    if (!x) return std::nullopt;
    std::vector<Scalar> qcoeffs(q + 1);
    qcoeffs[0] = 1;
    for (int j = 1; j <= q; ++j) qcoeffs[j] = (*x)[j - 1];
    return qcoeffs;
}

} // namespace detail

/// Padé-style reconstruction of the series as P/Q of bidegree (p, q), verified
/// against every available coefficient. Throws "not a p|q rational series"
/// when the denominator fit has no solution and "rational form inconsistent
/// with tail" when the fit fails beyond degree p+q.
inline RationalForm reconstruct_rational(const TruncatedSeries& s, int p, int q) {
    if (p < 0 || q < 0) throw Error("reconstruct_rational: degrees must be nonnegative");
    if (!is_function_algebra(*s.algebra))
        throw Error("rational reconstruction requires a split coefficient algebra");
    if (s.order < p + q + 1) throw Error("reconstruct_rational: series order must be at least p+q+1");

    const int d = s.algebra->dim();
    RationalForm form;
    form.algebra = s.algebra;
    form.p = p;
    form.q = q;
    form.numerator.assign(p + 1, zero_element(s.algebra));
    form.denominator.assign(q + 1, zero_element(s.algebra));
    form.certified_through = s.order;

    for (int comp = 0; comp < d; ++comp) {
        std::vector<Scalar> sc(s.order + 1);
        for (int k = 0; k <= s.order; ++k) sc[k] = s.coeffs[k].coords[comp];
        auto qc = detail::fit_denominator(sc, p, q);
        if (!qc) throw Error("not a p|q rational series");
        const auto coeff = [&](int k) { return k >= 0 ? sc[static_cast<std::size_t>(k)] : Scalar(0); };
        const auto convolve = [&](int m) {
            Scalar acc(0);
            for (int j = 0; j <= std::min(q, m); ++j)
                if (!(*qc)[j].is_zero()) acc += (*qc)[j] * coeff(m - j);
            return acc;
        };
        for (int m = 0; m <= p; ++m) form.numerator[m].coords[comp] = convolve(m);
        for (int m = p + q + 1; m <= s.order; ++m)
            if (!convolve(m).is_zero()) throw Error("rational form inconsistent with tail");
        for (int j = 0; j <= q; ++j) form.denominator[j].coords[comp] = (*qc)[j];
    }
    return form;
}

/// Scans bidegrees by increasing p+q (ties broken by smaller q) and returns the
/// first pair whose reconstruction is certified through the full series order.
inline std::optional<std::pair<int, int>> detect_degrees(const TruncatedSeries& s, int max_p, int max_q) {
    if (s.order < max_p + max_q + 1) throw Error("detect_degrees: series order must be at least max_p+max_q+1");
    for (int total = 0; total <= max_p + max_q; ++total) {
        for (int q = 0; q <= std::min(total, max_q); ++q) {
            const int p = total - q;
            if (p > max_p) continue;
            try {
                reconstruct_rational(s, p, q);
                return std::make_pair(p, q);
            } catch (const Error&) {
                continue;
            }
        }
    }
    return std::nullopt;
}

/// Evaluates P/Q at a scalar point, componentwise. Fails on denominator zeros.
inline Element rational_form_eval(const RationalForm& form, const Scalar& z) {
    const int d = form.algebra->dim();
    Element out = zero_element(form.algebra);
    for (int comp = 0; comp < d; ++comp) {
        Scalar num(0), den(0);
        for (int m = static_cast<int>(form.numerator.size()) - 1; m >= 0; --m)
            num = num * z + form.numerator[m].coords[comp];
        for (int m = static_cast<int>(form.denominator.size()) - 1; m >= 0; --m)
            den = den * z + form.denominator[m].coords[comp];
        if (den.is_zero()) throw Error("rational form evaluated at a pole");
        out.coords[comp] = num / den;
    }
    return out;
}

/// True when z is a root of some component of the denominator.
inline bool rational_form_has_pole_at(const RationalForm& form, const Scalar& z) {
    for (int comp = 0; comp < form.algebra->dim(); ++comp) {
        Scalar den(0);
        for (int m = static_cast<int>(form.denominator.size()) - 1; m >= 0; --m)
            den = den * z + form.denominator[m].coords[comp];
        if (den.is_zero()) return true;
    }
    return false;
}

/// Componentwise ratio of the top nonzero numerator and denominator
/// coefficients (the value of z^(deg Q - deg P) P/Q at infinity).
inline Element rational_form_leading_ratio(const RationalForm& form) {
    const int d = form.algebra->dim();
    Element out = zero_element(form.algebra);
    for (int comp = 0; comp < d; ++comp) {
        Scalar pl(0), ql(0);
        for (int m = static_cast<int>(form.numerator.size()) - 1; m >= 0; --m)
            if (!form.numerator[m].coords[comp].is_zero()) { pl = form.numerator[m].coords[comp]; break; }
        for (int m = static_cast<int>(form.denominator.size()) - 1; m >= 0; --m)
            if (!form.denominator[m].coords[comp].is_zero()) { ql = form.denominator[m].coords[comp]; break; }
        if (pl.is_zero() || ql.is_zero()) throw Error("rational form has a vanishing component");
        out.coords[comp] = pl / ql;
    }
    return out;
}

/// Re-expands P/Q as a truncated series (for soundness checks).
inline TruncatedSeries rational_form_expand(const RationalForm& form, int order) {
    TruncatedSeries pnum = make_series(form.algebra, order);
    TruncatedSeries pden = make_series(form.algebra, order);
    for (std::size_t m = 0; m < form.numerator.size() && static_cast<int>(m) <= order; ++m)
        pnum.coeffs[m] = form.numerator[m];
    for (std::size_t m = 0; m < form.denominator.size() && static_cast<int>(m) <= order; ++m)
        pden.coeffs[m] = form.denominator[m];
    return series_mul(pnum, series_invert(pden));
}

} // namespace frobkit
