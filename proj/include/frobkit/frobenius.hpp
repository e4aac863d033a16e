#pragma once

#include "frobkit/charfn.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace frobkit {

/// Memoization policy for the Frobenius recursion. The multiset key relies on
/// the symmetry of the maps in their arguments; the ordered key does not, and
/// is what the symmetry check itself uses. none forces the raw recursion.
enum class MemoMode { multiset, ordered, none };

namespace detail {

using FrobKey = std::vector<std::vector<Scalar>>;
using FrobCache = std::map<FrobKey, Element>;

inline Element frobenius_recurse(const LinearMap& f, const std::vector<Element>& args, MemoMode memo,
                                 FrobCache& cache) {
    const std::size_t k = args.size();
    if (k == 1) return apply(f, args[0]);

    FrobKey key;
    if (memo != MemoMode::none) {
        key.reserve(k);
        for (const Element& a : args) key.push_back(a.coords);
        if (memo == MemoMode::multiset) std::sort(key.begin(), key.end());
        if (const auto it = cache.find(key); it != cache.end()) return it->second;
    }

    //   F_{k}(f, a_1, ..., a_k) = f(a_1) F_{k-1}(f, a_2, ..., a_k)
    //       - sum_i F_{k-1}(f, a_2, ..., a_1 a_i, ..., a_k)
    std::vector<Element> rest(args.begin() + 1, args.end());
    Element result = mul(apply(f, args[0]), frobenius_recurse(f, rest, memo, cache));
    for (std::size_t i = 0; i < rest.size(); ++i) {
        const Element saved = rest[i];
        rest[i] = mul(args[0], rest[i]);
        result = result - frobenius_recurse(f, rest, memo, cache);
        rest[i] = saved;
    }

    if (memo != MemoMode::none) cache.emplace(std::move(key), result);
    return result;
}

} // namespace detail

/// The Frobenius map F_k(f, a_1, ..., a_k), computed by the defining
/// recursion from F_1(f, a) = f(a). The cache is per call.
inline Element frobenius_map(const LinearMap& f, const std::vector<Element>& args,
                             MemoMode memo = MemoMode::multiset) {
    if (args.empty()) throw Error("frobenius_map requires at least one argument");
    for (const Element& a : args)
        if (!same_algebra(f.domain, a.algebra)) throw Error("algebra mismatch");
    detail::FrobCache cache;
    return detail::frobenius_recurse(f, args, memo, cache);
}

/// True iff F_k agrees on all k! argument orders, exactly. Evaluations share
/// an ordered-key cache, so equal ordered subtuples are reused but no
/// symmetry is assumed. Guarded against factorial blowup.
inline bool check_symmetry(const LinearMap& f, const std::vector<Element>& args, int guard = 7,
                           bool override_guard = false) {
    if (args.empty()) throw Error("check_symmetry requires at least one argument");
    if (static_cast<int>(args.size()) > guard && !override_guard)
        throw Error("symmetry check budget exceeded (override to force)");
    detail::FrobCache cache;
    std::vector<int> perm(args.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    const Element reference = detail::frobenius_recurse(f, args, MemoMode::ordered, cache);
    std::vector<Element> permuted(args.size(), zero_element(f.domain));
    while (std::next_permutation(perm.begin(), perm.end())) {
        for (std::size_t i = 0; i < perm.size(); ++i) permuted[i] = args[perm[i]];
        if (detail::frobenius_recurse(f, permuted, MemoMode::ordered, cache) != reference) return false;
    }
    return true;
}

/// True iff F_k(f, a, ..., a) = k! psi_k(f, a), exactly.
inline bool check_polarization(const LinearMap& f, const Element& a, int k) {
    if (k < 1) throw Error("check_polarization: k must be positive");
    const Element diagonal = frobenius_map(f, std::vector<Element>(k, a));
    return diagonal == Scalar(factorial(k)) * psi(f, a, k);
}

} // namespace frobkit
