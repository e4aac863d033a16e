#pragma once

#include "frobkit/charfn.hpp"
#include "frobkit/frobenius.hpp"

#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace frobkit {

/// Enumeration cap shared by the exhaustive strategies and the finite-space
/// quotients. Overridable through the FROBKIT_BUDGET environment variable.
inline long long enumeration_budget() {
    if (const char* env = std::getenv("FROBKIT_BUDGET")) {
        const long long v = std::atoll(env);
        if (v > 0) return v;
    }
    return 1000000;
}

/// How "for all a" conditions are decided. The basis strategy evaluates on the
/// lattice simplex face {sum m_i = D, m_i >= 0 integers}, which determines
/// every homogeneous polynomial condition of degree <= D exactly. The
/// randomized strategy samples rational elements from a seeded generator.
struct Strategy {
    enum class Kind { basis, randomized };
    Kind kind = Kind::basis;
    int samples = 200;
    std::uint64_t seed = 1;
    bool require_certainty = false;

    static Strategy basis() { return Strategy{}; }
    static Strategy randomized(int samples, std::uint64_t seed, bool require_certainty = false) {
        return Strategy{Kind::randomized, samples, seed, require_certainty};
    }
};

struct Witness {
    Element a;
    int k = 0;
    Element value;  // the nonvanishing psi_k or Hankel determinant
};

struct HomTestReport {
    enum class Verdict { pass, fail, inconclusive };
    Verdict verdict = Verdict::inconclusive;
    int checked_bound = 0;
    std::vector<Witness> witnesses;
    long long failure_count = 0;  // witnesses beyond the stored cap included
    Strategy strategy;
    std::string note;

    bool passed() const { return verdict == Verdict::pass; }
};

/// The (q+1) x (q+1) Hankel window at base index k: entry (i, j) holds
/// psi_(k+i+j), with negative indices read as zero.
struct HankelWitness {
    int base_index = 0;
    int size = 0;
    std::vector<std::vector<Element>> matrix;
    Element determinant;
};

namespace detail {

/// Fraction-free integer determinant (Bareiss); all divisions are exact.
inline BigInt integer_bareiss_det(std::vector<std::vector<BigInt>> m) {
    const int n = static_cast<int>(m.size());
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k].is_zero()) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) { pivot = i; break; }
            if (pivot < 0) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

} // namespace detail

inline HankelWitness hankel_witness(const std::vector<Element>& psis, const AlgebraPtr& codomain, int k,
                                    int q) {
    HankelWitness w;
    w.base_index = k;
    w.size = q + 1;
    w.matrix.assign(q + 1, std::vector<Element>(q + 1, zero_element(codomain)));
    for (int i = 0; i <= q; ++i)
        for (int j = 0; j <= q; ++j) {
            const int idx = k + i + j;
            if (idx >= 0) {
                if (idx >= static_cast<int>(psis.size())) throw Error("hankel_witness: psi index out of range");
                w.matrix[i][j] = psis[idx];
            }
        }
    if (codomain->dim() == 1) {
        // Clear each row's denominators and run the integer Bareiss; the
        // rational determinant is the integer one divided by the row scalings.
        std::vector<std::vector<BigInt>> num(q + 1, std::vector<BigInt>(q + 1));
        Scalar scaling(1);
        for (int i = 0; i <= q; ++i) {
            BigInt row_lcm = 1;
            for (int j = 0; j <= q; ++j) {
                const BigInt d = denominator(w.matrix[i][j].coords[0]);
                row_lcm = row_lcm / gcd(row_lcm, d) * d;
            }
            for (int j = 0; j <= q; ++j) {
                const Scalar& x = w.matrix[i][j].coords[0];
                num[i][j] = numerator(x) * (row_lcm / denominator(x));
            }
            scaling *= Scalar(row_lcm);
        }
        w.determinant = Element{codomain, {Scalar(detail::integer_bareiss_det(std::move(num))) / scaling}};
    } else {
        w.determinant = element_det_division_free(w.matrix);
    }
    return w;
}

namespace detail {

/// All lattice points of {m in N^d : sum m_i = total}, as elements sum m_i e_i.
inline void for_each_simplex_point(const AlgebraPtr& alg, int total,
                                   const std::function<bool(const Element&)>& visit) {
    const int d = alg->dim();
    if (binomial(total + d - 1, d - 1) > enumeration_budget())
        throw Error("basis strategy enumeration exceeds budget (set FROBKIT_BUDGET to raise)");
    std::vector<Scalar> coords(d);
    std::function<bool(int, int)> rec = [&](int pos, int remaining) -> bool {
        if (pos == d - 1) {
            coords[pos] = remaining;
            return visit(Element{alg, coords});
        }
        for (int v = 0; v <= remaining; ++v) {
            coords[pos] = v;
            if (!rec(pos + 1, remaining - v)) return false;
        }
        return true;
    };
    rec(0, total);
}

inline Element random_element(const AlgebraPtr& alg, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    std::vector<Scalar> coords(alg->dim());
    for (auto& c : coords) c = Scalar(num(rng)) / Scalar(den(rng));
    return Element{alg, std::move(coords)};
}

/// Runs `test` on the strategy's elements, collecting witnesses; returns the
/// verdict. `test` returns witnesses for one probe element.
inline HomTestReport run_strategy(const LinearMap& f, int bound, const Strategy& strategy,
                                  int homogeneous_degree,
                                  const std::function<std::vector<Witness>(const Element&)>& test) {
    HomTestReport report;
    report.checked_bound = bound;
    report.strategy = strategy;
    constexpr std::size_t witness_cap = 25;
    const auto probe = [&](const Element& a) {
        for (Witness& w : test(a)) {
            ++report.failure_count;
            if (report.witnesses.size() < witness_cap) report.witnesses.push_back(std::move(w));
        }
        return true;  // keep scanning so failure_count is complete
    };
    if (strategy.kind == Strategy::Kind::basis) {
        for_each_simplex_point(f.domain, homogeneous_degree, probe);
        report.verdict =
            report.failure_count ? HomTestReport::Verdict::fail : HomTestReport::Verdict::pass;
    } else {
        std::mt19937_64 rng(strategy.seed);
        for (int s = 0; s < strategy.samples; ++s) probe(random_element(f.domain, rng));
        if (report.failure_count)
            report.verdict = HomTestReport::Verdict::fail;
        else
            report.verdict = strategy.require_certainty ? HomTestReport::Verdict::inconclusive
                                                        : HomTestReport::Verdict::pass;
    }
    return report;
}

} // namespace detail

/// Decides whether f is an n-homomorphism up to the bound: f(1) = n and
/// psi_k(f, a) = 0 for n < k <= bound, for all a (per strategy). psi_k is
/// homogeneous of degree k in the coordinates of a, so the basis strategy
/// evaluates on the simplex face of degree `bound`.
inline HomTestReport is_n_hom(const LinearMap& f, int n, int bound,
                              const Strategy& strategy = Strategy::basis()) {
    if (n < 0) throw Error("is_n_hom: n must be nonnegative");
    if (bound < n + 1) throw Error("is_n_hom: bound must be at least n+1");

    const Element expected = Scalar(n) * unit_element(f.codomain);
    const CharacterInfo ch = character(f);
    if (ch.value != expected) {
        HomTestReport report;
        report.checked_bound = bound;
        report.strategy = strategy;
        report.verdict = HomTestReport::Verdict::fail;
        report.witnesses.push_back(Witness{unit_element(f.domain), 0, ch.value});
        report.failure_count = 1;
        report.note = "character is not n";
        return report;
    }

    return detail::run_strategy(f, bound, strategy, bound, [&](const Element& a) {
        std::vector<Witness> found;
        const std::vector<Element> psis = psi_vector(f, a, bound);
        for (int k = n + 1; k <= bound; ++k)
            if (!psis[k].is_zero()) found.push_back(Witness{a, k, psis[k]});
        return found;
    });
}

/// Decides whether f is a p|q-homomorphism up to the bound: f(1) = p - q and
/// every (q+1) x (q+1) Hankel determinant with base index p-q+1 <= k <=
/// bound-2q vanishes for all a (per strategy). The determinant at base k is
/// homogeneous of degree (q+1)(k+q) in the coordinates of a.
inline HomTestReport is_pq_hom(const LinearMap& f, int p, int q, int bound,
                               const Strategy& strategy = Strategy::basis()) {
    if (p < 0 || q < 0) throw Error("is_pq_hom: p and q must be nonnegative");
    if (bound < p + q + 2) throw Error("bound too small for any Hankel window");

    const Element expected = Scalar(p - q) * unit_element(f.codomain);
    const CharacterInfo ch = character(f);
    if (ch.value != expected) {
        HomTestReport report;
        report.checked_bound = bound;
        report.strategy = strategy;
        report.verdict = HomTestReport::Verdict::fail;
        report.witnesses.push_back(Witness{unit_element(f.domain), 0, ch.value});
        report.failure_count = 1;
        report.note = "character is not p-q";
        return report;
    }

    const int k_lo = p - q + 1;
    const int k_hi = bound - 2 * q;
    const int max_degree = (q + 1) * (bound - q);
    return detail::run_strategy(f, bound, strategy, max_degree, [&](const Element& a) {
        std::vector<Witness> found;
        const std::vector<Element> psis = psi_vector(f, a, bound);
        for (int k = k_lo; k <= k_hi; ++k) {
            const HankelWitness w = hankel_witness(psis, f.codomain, k, q);
            if (!w.determinant.is_zero()) found.push_back(Witness{a, k, w.determinant});
        }
        return found;
    });
}

} // namespace frobkit
