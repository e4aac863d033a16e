#pragma once

#include "frobkit/homclass.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace frobkit {

/// The subalgebra of symmetric tensors inside the n-th tensor power of a base
/// algebra. Basis vectors are indexed by size-n multisets of base indices and
/// realized as orbit averages (coefficient 1/orbit size on each tensor basis
/// vector of the orbit), which makes the embedding unital and aligns the
/// {a, ..., a} direction with a x ... x a.
struct SymPowerAlgebra {
    AlgebraPtr base;
    int n = 0;
    AlgebraPtr algebra;                      // S^n(base) on the multiset basis
    AlgebraPtr tensor;                       // tensor_power(base, n)
    std::vector<std::vector<int>> multisets; // nondecreasing index tuples, one per basis vector
    Mat embedding;                           // dim(tensor) x dim(S^n)
};

namespace detail {

inline std::vector<std::vector<int>> multisets_of_size(int d, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n);
    const auto rec = [&](auto&& self, int pos, int lo) -> void {
        if (pos == n) {
            out.push_back(cur);
            return;
        }
        for (int i = lo; i < d; ++i) {
            cur[pos] = i;
            self(self, pos + 1, i);
        }
    };
    rec(rec, 0, 0);
    return out;
}

inline BigInt orbit_size(const std::vector<int>& multiset) {
    BigInt size = factorial(static_cast<int>(multiset.size()));
    int run = 1;
    for (std::size_t i = 1; i <= multiset.size(); ++i) {
        if (i < multiset.size() && multiset[i] == multiset[i - 1]) {
            ++run;
        } else {
            size /= factorial(run);
            run = 1;
        }
    }
    return size;
}

/// Coordinates in the tensor power of the orbit average of a multiset.
inline std::vector<Scalar> orbit_average_coords(int base_dim, int tensor_dim,
                                                const std::vector<int>& multiset) {
    std::vector<Scalar> coords(tensor_dim);
    std::vector<int> perm = multiset;  // sorted, so next_permutation walks the orbit
    const Scalar weight = Scalar(1) / Scalar(orbit_size(multiset));
    do {
        coords[tensor_flat_index(base_dim, perm)] = weight;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return coords;
}

} // namespace detail

/// Builds S^n(A) with its multiset basis, structure constants obtained by
/// multiplying orbit averages inside the tensor power and re-expressing the
/// (symmetric) product in the orbit-average basis. Validates the algebra
/// axioms and the multiplicativity of the embedding.
inline SymPowerAlgebra sym_power_algebra(const AlgebraPtr& base, int n) {
    if (n < 1) throw Error("sym_power_algebra needs n >= 1");
    SymPowerAlgebra sp;
    sp.base = base;
    sp.n = n;
    sp.tensor = tensor_power(base, n);
    sp.multisets = detail::multisets_of_size(base->dim(), n);

    const int d = base->dim();
    const int dim_s = static_cast<int>(sp.multisets.size());
    const int dim_t = sp.tensor->dim();

    sp.embedding = Mat(dim_t, dim_s);
    for (int m = 0; m < dim_s; ++m) {
        const auto coords = detail::orbit_average_coords(d, dim_t, sp.multisets[m]);
        for (int t = 0; t < dim_t; ++t) sp.embedding(t, m) = coords[t];
    }

    // Indexing of symmetric tensors: a symmetric w has w = sum_M c_M s_M with
    // c_M = |orbit(M)| * (coefficient of w on any orbit member of M).
    const auto symmetric_to_s_coords = [&](const Element& w) {
        std::vector<Scalar> c(dim_s);
        for (int m = 0; m < dim_s; ++m)
            c[m] = Scalar(detail::orbit_size(sp.multisets[m])) *
                   w.coords[tensor_flat_index(d, sp.multisets[m])];
        return c;
    };

    std::vector<Element> s_basis_in_tensor;
    s_basis_in_tensor.reserve(dim_s);
    for (int m = 0; m < dim_s; ++m) {
        std::vector<Scalar> coords(dim_t);
        for (int t = 0; t < dim_t; ++t) coords[t] = sp.embedding(t, m);
        s_basis_in_tensor.push_back(Element{sp.tensor, std::move(coords)});
    }

    std::vector<Scalar> structure(static_cast<std::size_t>(dim_s) * dim_s * dim_s);
    std::vector<std::vector<Scalar>> product_coords(dim_s);
    for (int i = 0; i < dim_s; ++i)
        for (int j = i; j < dim_s; ++j) {
            const Element prod = mul(s_basis_in_tensor[i], s_basis_in_tensor[j]);
            const auto c = symmetric_to_s_coords(prod);
            // The product of symmetric tensors must itself be symmetric.
            Element reassembled = zero_element(sp.tensor);
            for (int m = 0; m < dim_s; ++m)
                if (!c[m].is_zero()) reassembled = reassembled + c[m] * s_basis_in_tensor[m];
            if (reassembled != prod) throw Error("sym_power_algebra: product left the symmetric subspace");
            for (int k = 0; k < dim_s; ++k) {
                structure[(static_cast<std::size_t>(i) * dim_s + j) * dim_s + k] = c[k];
                structure[(static_cast<std::size_t>(j) * dim_s + i) * dim_s + k] = c[k];
            }
        }

    std::vector<std::string> labels(dim_s);
    for (int m = 0; m < dim_s; ++m) {
        std::string label = "{";
        for (std::size_t r = 0; r < sp.multisets[m].size(); ++r) {
            if (r) label += ',';
            label += base->basis_labels()[sp.multisets[m][r]];
        }
        label += "}";
        labels[m] = label;
    }
    const std::vector<Scalar> unit = symmetric_to_s_coords(unit_element(sp.tensor));
    sp.algebra = make_algebra(dim_s, std::move(labels), unit, std::move(structure));

    if (!check_algebra_axioms(*sp.algebra).empty())
        throw Error("sym_power_algebra: constructed algebra violates the axioms");
    return sp;
}

inline Element embed(const SymPowerAlgebra& sp, const Element& s) {
    return Element{sp.tensor, sp.embedding.apply(s.coords)};
}

/// Solves the embedding for a symmetric tensor; errors when the tensor lies
/// outside the symmetric subalgebra.
inline Element embedding_preimage(const SymPowerAlgebra& sp, const Element& w) {
    const auto x = solve_any(sp.embedding, w.coords);
    if (!x) throw Error("tensor is outside the symmetric subalgebra");
    Element s{sp.algebra, *x};
    if (embed(sp, s) != w) throw Error("tensor is outside the symmetric subalgebra");
    return s;
}

/// a x 1 x ... x 1 + 1 x a x ... x 1 + ... + 1 x ... x 1 x a, in the tensor power.
inline Element insertion_sum(const SymPowerAlgebra& sp, const Element& a) {
    Element acc = zero_element(sp.tensor);
    for (int slot = 0; slot < sp.n; ++slot) {
        std::vector<Scalar> coords(sp.tensor->dim());
        std::vector<int> idx(sp.n);
        const int d = sp.base->dim();
        // Tensor of a in `slot` and the unit elsewhere.
        const std::function<void(int, Scalar)> rec = [&](int pos, Scalar w) {
            if (w.is_zero()) return;
            if (pos == sp.n) {
                coords[tensor_flat_index(d, idx)] += w;
                return;
            }
            const std::vector<Scalar>& factor =
                (pos == slot) ? a.coords : sp.base->unit_coords();
            for (int i = 0; i < d; ++i) {
                if (factor[i].is_zero()) continue;
                idx[pos] = i;
                rec(pos + 1, w * factor[i]);
            }
        };
        rec(0, Scalar(1));
        acc = acc + Element{sp.tensor, std::move(coords)};
    }
    return acc;
}

/// From an n-homomorphism f : A -> B to the algebra map F : S^n(A) -> B with
/// F = (1/n!) F_n(f, -, ..., -) extended multilinearly over the multiset basis.
inline LinearMap br_F_from_f(const SymPowerAlgebra& sp, const LinearMap& f, int bound = 12,
                             const Strategy& strategy = Strategy::basis()) {
    if (!same_algebra(f.domain, sp.base)) throw Error("algebra mismatch");
    if (!is_n_hom(f, sp.n, bound, strategy).passed()) throw Error("map is not an n-homomorphism");
    const int dim_s = sp.algebra->dim();
    Mat matrix(f.codomain->dim(), dim_s);
    const Scalar inv_nfact = Scalar(1) / Scalar(factorial(sp.n));
    for (int m = 0; m < dim_s; ++m) {
        std::vector<Element> args;
        args.reserve(sp.n);
        for (int idx : sp.multisets[m]) args.push_back(basis_element(sp.base, idx));
        const Element value = inv_nfact * frobenius_map(f, args);
        for (int r = 0; r < f.codomain->dim(); ++r) matrix(r, m) = value.coords[r];
    }
    return LinearMap{sp.algebra, f.codomain, std::move(matrix)};
}

/// True iff F respects products on all multiset basis pairs and the units.
inline bool is_algebra_hom_on_sym(const SymPowerAlgebra& sp, const LinearMap& F) {
    if (apply(F, unit_element(sp.algebra)) != unit_element(F.codomain)) return false;
    const int dim_s = sp.algebra->dim();
    for (int i = 0; i < dim_s; ++i)
        for (int j = i; j < dim_s; ++j) {
            const Element lhs = apply(F, mul(basis_element(sp.algebra, i), basis_element(sp.algebra, j)));
            const Element rhs = mul(apply(F, basis_element(sp.algebra, i)), apply(F, basis_element(sp.algebra, j)));
            if (lhs != rhs) return false;
        }
    return true;
}

/// From an algebra map F : S^n(A) -> B back to f(a) = F(a x 1 ... 1 + ... +
/// 1 ... 1 x a).
inline LinearMap br_f_from_F(const SymPowerAlgebra& sp, const LinearMap& F) {
    if (!same_algebra(F.domain, sp.algebra)) throw Error("algebra mismatch");
    if (!is_algebra_hom_on_sym(sp, F)) throw Error("F is not an algebra homomorphism");
    Mat matrix(F.codomain->dim(), sp.base->dim());
    for (int j = 0; j < sp.base->dim(); ++j) {
        const Element s = embedding_preimage(sp, insertion_sum(sp, basis_element(sp.base, j)));
        const Element value = apply(F, s);
        for (int r = 0; r < F.codomain->dim(); ++r) matrix(r, j) = value.coords[r];
    }
    return LinearMap{sp.base, F.codomain, std::move(matrix)};
}

/// Coefficients of det(1 + L(a) z) in the tensor power, where L(a) is the
/// diagonal matrix of the slot insertions of a: the z^k coefficient is the
/// k-th elementary symmetric polynomial of the n commuting slot tensors.
inline std::vector<Element> lambda_char_poly(const SymPowerAlgebra& sp, const Element& a) {
    std::vector<Element> coeffs(sp.n + 1, zero_element(sp.tensor));
    coeffs[0] = unit_element(sp.tensor);
    for (int slot = 0; slot < sp.n; ++slot) {
        // One tensor factor at a time: multiply the polynomial by (1 + a_(slot) z).
        std::vector<Scalar> coords(sp.tensor->dim());
        std::vector<int> idx(sp.n);
        const int d = sp.base->dim();
        const std::function<void(int, Scalar)> rec = [&](int pos, Scalar w) {
            if (w.is_zero()) return;
            if (pos == sp.n) {
                coords[tensor_flat_index(d, idx)] += w;
                return;
            }
            const std::vector<Scalar>& factor = (pos == slot) ? a.coords : sp.base->unit_coords();
            for (int i = 0; i < d; ++i) {
                if (factor[i].is_zero()) continue;
                idx[pos] = i;
                rec(pos + 1, w * factor[i]);
            }
        };
        rec(0, Scalar(1));
        const Element slot_tensor{sp.tensor, std::move(coords)};
        for (int k = slot + 1; k >= 1; --k)
            coeffs[k] = coeffs[k] + mul(slot_tensor, coeffs[k - 1]);
    }
    return coeffs;
}

/// Convenience overload constructing the symmetric power internally.
inline std::vector<Element> lambda_char_poly(const Element& a, int n) {
    return lambda_char_poly(sym_power_algebra(a.algebra, n), a);
}

/// Checks F(det(1 + L(a) z)) = R(f, a, z) coefficientwise for k = 0..n.
inline bool verify_key_formula(const SymPowerAlgebra& sp, const LinearMap& f, const Element& a,
                               int bound = 12, const Strategy& strategy = Strategy::basis()) {
    const LinearMap F = br_F_from_f(sp, f, bound, strategy);
    const std::vector<Element> lambda = lambda_char_poly(sp, a);
    const CharFnExpansion expansion = char_function(f, a, sp.n);
    for (int k = 0; k <= sp.n; ++k) {
        const Element s = embedding_preimage(sp, lambda[k]);
        if (apply(F, s) != expansion.psis[k]) return false;
    }
    return true;
}

} // namespace frobkit
