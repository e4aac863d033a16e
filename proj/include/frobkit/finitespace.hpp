#pragma once

#include "frobkit/homclass.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace frobkit {

struct FiniteSpace {
    std::vector<std::string> points;
};

inline FiniteSpace make_finite_space(std::vector<std::string> points) {
    if (points.empty()) throw Error("finite space needs at least one point");
    if (std::set<std::string>(points.begin(), points.end()).size() != points.size())
        throw Error("finite space points must be distinct");
    return FiniteSpace{std::move(points)};
}

/// A point of X^(p+q): p positive slots followed by q negative slots
/// (point indices into the space).
struct SignedConfiguration {
    std::vector<int> positive;
    std::vector<int> negative;
};

/// One equivalence class of the quotient, with its lexicographically least
/// member as canonical representative and all members as flat tuple codes.
struct SymPQClass {
    SignedConfiguration canonical;
    std::vector<std::uint64_t> members;

    long long class_members() const { return static_cast<long long>(members.size()); }
};

struct SymPQSpace {
    FiniteSpace space;
    int p = 0;
    int q = 0;
    std::vector<SymPQClass> classes;
};

namespace detail {

struct UnionFind {
    std::vector<std::uint32_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

inline std::vector<int> decode_tuple(std::uint64_t code, int npoints, int len) {
    std::vector<int> t(len);
    for (int i = len - 1; i >= 0; --i) {
        t[i] = static_cast<int>(code % npoints);
        code /= npoints;
    }
    return t;
}

inline std::uint64_t encode_tuple(const std::vector<int>& t, int npoints) {
    std::uint64_t code = 0;
    for (int v : t) code = code * npoints + static_cast<std::uint64_t>(v);
    return code;
}

} // namespace detail

/// Enumerates Sym^{p|q}(X) for a finite space: the quotient of X^{p+q} by the
/// product of symmetric groups on the positive and negative slots, together
/// with the cancellation relation replacing a value shared by slot p and slot
/// p+q with an arbitrary point. Computes the closure of exactly those
/// generators with union-find; no closed-form normal form is assumed.
inline SymPQSpace enumerate_sym_pq(const FiniteSpace& space, int p, int q,
                                   long long budget = enumeration_budget()) {
    if (p < 0 || q < 0) throw Error("enumerate_sym_pq: p and q must be nonnegative");
    const int npoints = static_cast<int>(space.points.size());
    const int len = p + q;
    long long count = 1;
    for (int i = 0; i < len; ++i) {
        count *= npoints;
        if (count > budget)
            throw Error("enumeration budget exceeded; required budget " + std::to_string(count) +
                        " (set FROBKIT_BUDGET)");
    }

    detail::UnionFind uf(static_cast<std::size_t>(count));
    std::vector<int> t;
    for (std::uint64_t code = 0; code < static_cast<std::uint64_t>(count); ++code) {
        t = detail::decode_tuple(code, npoints, len);
        // Adjacent transpositions generate each slot group's permutations.
        for (int i = 0; i + 1 < p; ++i) {
            std::swap(t[i], t[i + 1]);
            uf.unite(static_cast<std::uint32_t>(code),
                     static_cast<std::uint32_t>(detail::encode_tuple(t, npoints)));
            std::swap(t[i], t[i + 1]);
        }
        for (int i = p; i + 1 < len; ++i) {
            std::swap(t[i], t[i + 1]);
            uf.unite(static_cast<std::uint32_t>(code),
                     static_cast<std::uint32_t>(detail::encode_tuple(t, npoints)));
            std::swap(t[i], t[i + 1]);
        }
        // Cancellation at slot p and slot p+q (1-based), when both exist.
        if (p >= 1 && q >= 1 && t[p - 1] == t[len - 1]) {
            const int saved = t[p - 1];
            for (int z = 0; z < npoints; ++z) {
                t[p - 1] = t[len - 1] = z;
                uf.unite(static_cast<std::uint32_t>(code),
                         static_cast<std::uint32_t>(detail::encode_tuple(t, npoints)));
            }
            t[p - 1] = t[len - 1] = saved;
        }
    }

    std::vector<std::vector<std::uint64_t>> groups(static_cast<std::size_t>(count));
    for (std::uint64_t code = 0; code < static_cast<std::uint64_t>(count); ++code)
        groups[uf.find(static_cast<std::uint32_t>(code))].push_back(code);

    SymPQSpace result{space, p, q, {}};
    for (auto& members : groups) {
        if (members.empty()) continue;
        // Codes order tuples lexicographically, so the least code is the
        // lexicographically least member.
        const std::vector<int> rep = detail::decode_tuple(members.front(), npoints, len);
        SymPQClass cls;
        cls.canonical.positive.assign(rep.begin(), rep.begin() + p);
        cls.canonical.negative.assign(rep.begin() + p, rep.end());
        cls.members = std::move(members);
        result.classes.push_back(std::move(cls));
    }
    return result;
}

/// The signed evaluation functional of a configuration: +1 on positive slots,
/// -1 on negative slots.
inline LinearMap ev_map(const SignedConfiguration& config, const AlgebraPtr& fn_algebra) {
    Mat m(1, fn_algebra->dim());
    for (int i : config.positive) m(0, i) += 1;
    for (int i : config.negative) m(0, i) -= 1;
    return LinearMap{fn_algebra, ground_field(), std::move(m)};
}

inline LinearMap ev_map(const SymPQClass& cls, const FiniteSpace& space) {
    return ev_map(cls.canonical, function_algebra(space.points));
}

/// True iff every member of every class defines the same functional.
inline bool verify_ev_well_defined(const SymPQSpace& s) {
    const AlgebraPtr alg = function_algebra(s.space.points);
    const int npoints = static_cast<int>(s.space.points.size());
    for (const SymPQClass& cls : s.classes) {
        const LinearMap reference = ev_map(cls.canonical, alg);
        for (std::uint64_t code : cls.members) {
            const std::vector<int> t = detail::decode_tuple(code, npoints, s.p + s.q);
            SignedConfiguration member;
            member.positive.assign(t.begin(), t.begin() + s.p);
            member.negative.assign(t.begin() + s.p, t.end());
            if (!same_map(ev_map(member, alg), reference)) return false;
        }
    }
    return true;
}

/// Delegates the variety equations (character and Hankel determinants) for a
/// class's evaluation functional to the p|q classification test.
inline HomTestReport verify_variety_equations(const SymPQClass& cls, const FiniteSpace& space, int p,
                                              int q, int bound,
                                              const Strategy& strategy = Strategy::basis()) {
    return is_pq_hom(ev_map(cls, space), p, q, bound, strategy);
}

/// All n-homomorphisms C(X) -> field with nonnegative integer values on the
/// point idempotents summing to n, i.e. the evaluation maps of the multisets
/// of n points. Each returned map is verified to pass the n-homomorphism test.
inline std::vector<LinearMap> enumerate_n_homs(const FiniteSpace& space, int n, int bound = 12) {
    const AlgebraPtr alg = function_algebra(space.points);
    const int d = alg->dim();
    if (binomial(d + n - 1, n) > enumeration_budget())
        throw Error("enumeration budget exceeded (set FROBKIT_BUDGET)");
    std::vector<LinearMap> out;
    std::vector<int> m(d);
    const auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == d - 1) {
            m[pos] = remaining;
            Mat matrix(1, d);
            for (int i = 0; i < d; ++i) matrix(0, i) = m[i];
            LinearMap f{alg, ground_field(), std::move(matrix)};
            if (!is_n_hom(f, n, std::max(bound, n + 1)).passed())
                throw Error("enumerate_n_homs: multiset functional failed the n-homomorphism test");
            out.push_back(std::move(f));
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            m[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, n);
    return out;
}

// ---------------------------------------------------------------------------
// Experimental probe of the open identification question
// ---------------------------------------------------------------------------

/// A functional that passed the p|q test but was not matched against the
/// evaluation image, kept with full replay data.
struct ProbeCandidate {
    std::vector<Scalar> values;  // f(e_x) per point
    std::uint64_t trial = 0;
    std::uint64_t trial_seed = 0;
};

/// Report of the randomized search for functionals satisfying the variety
/// equations outside the evaluation image. Reporting only: the converse
/// identification is not decided either way.
struct ProbeReport {
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    int bound = 0;
    int samples_per_test = 0;
    long long filtered_non_integral = 0;
    long long failed_test = 0;
    long long inside_image = 0;
    std::vector<ProbeCandidate> candidates_outside_image;
    bool ev_image_all_pass = false;  // soundness self-check on the known image
};

inline ProbeReport open_question_probe(const FiniteSpace& space, int p, int q, std::uint64_t trials,
                                       std::uint64_t seed, int bound = 12,
                                       const std::vector<Scalar>& value_grid = {}) {
    const AlgebraPtr alg = function_algebra(space.points);
    const int d = alg->dim();

    std::vector<Scalar> grid = value_grid;
    if (grid.empty())
        for (int v = -(q + 1); v <= p + 1; ++v) grid.push_back(v);

    // The finite evaluation image, as functional value vectors.
    const SymPQSpace sym = enumerate_sym_pq(space, p, q);
    std::set<std::vector<Scalar>> image;
    for (const SymPQClass& cls : sym.classes) {
        const LinearMap f = ev_map(cls.canonical, alg);
        std::vector<Scalar> values(d);
        for (int i = 0; i < d; ++i) values[i] = f.matrix(0, i);
        image.insert(std::move(values));
    }

    ProbeReport report;
    report.trials = trials;
    report.seed = seed;
    report.bound = bound;
    report.samples_per_test = 64;

    report.ev_image_all_pass = true;
    for (const SymPQClass& cls : sym.classes)
        if (!is_pq_hom(ev_map(cls.canonical, alg), p, q, bound).passed()) report.ev_image_all_pass = false;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, grid.size() - 1);
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        std::vector<Scalar> values(d);
        for (int i = 0; i < d; ++i) values[i] = grid[pick(rng)];
        Mat matrix(1, d);
        for (int i = 0; i < d; ++i) matrix(0, i) = values[i];
        const LinearMap f{alg, ground_field(), matrix};

        const CharacterInfo ch = character(f);
        if (!ch.integral) {
            ++report.filtered_non_integral;
            continue;
        }
        const std::uint64_t trial_seed = seed ^ (0x9e3779b97f4a7c15ULL * (trial + 1));
        if (!is_pq_hom(f, p, q, bound, Strategy::randomized(report.samples_per_test, trial_seed)).passed()) {
            ++report.failed_test;
            continue;
        }
        if (image.count(values)) {
            ++report.inside_image;
        } else {
            report.candidates_outside_image.push_back(ProbeCandidate{values, trial, trial_seed});
        }
    }
    return report;
}

} // namespace frobkit
