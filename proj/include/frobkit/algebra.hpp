#pragma once

#include "frobkit/linalg.hpp"
#include "frobkit/rational.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace frobkit {

/// A finite-dimensional commutative unital algebra over the rationals, given by
/// structure constants: e_i * e_j = sum_k c(i,j,k) e_k.
class Algebra {
public:
    Algebra(int dim, std::vector<std::string> basis_labels, std::vector<Scalar> unit,
            std::vector<Scalar> structure_constants)
        : dim_(dim),
          labels_(std::move(basis_labels)),
          unit_(std::move(unit)),
          c_(std::move(structure_constants)) {
        if (dim_ <= 0) throw Error("algebra dimension must be positive");
        if (static_cast<int>(labels_.size()) != dim_) throw Error("basis label count does not match dim");
        if (static_cast<int>(unit_.size()) != dim_) throw Error("unit vector length does not match dim");
        if (c_.size() != static_cast<std::size_t>(dim_) * dim_ * dim_)
            throw Error("structure constant array must have dim^3 entries");
    }

    int dim() const { return dim_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    const std::vector<Scalar>& unit_coords() const { return unit_; }

    const Scalar& c(int i, int j, int k) const {
        return c_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
    }

    /// Structural identity; basis labels are display-only and ignored.
    bool structurally_equal(const Algebra& o) const {
        return dim_ == o.dim_ && unit_ == o.unit_ && c_ == o.c_;
    }

private:
    int dim_;
    std::vector<std::string> labels_;
    std::vector<Scalar> unit_;
    std::vector<Scalar> c_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

inline AlgebraPtr make_algebra(int dim, std::vector<std::string> labels, std::vector<Scalar> unit,
                               std::vector<Scalar> structure_constants) {
    return std::make_shared<Algebra>(dim, std::move(labels), std::move(unit), std::move(structure_constants));
}

inline bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    return a == b || (a && b && a->structurally_equal(*b));
}

// ---------------------------------------------------------------------------
// Axiom checking
// ---------------------------------------------------------------------------

struct AxiomReport {
    std::vector<std::array<int, 3>> commutativity;  // (i, j, k) with c(i,j,k) != c(j,i,k)
    std::vector<std::array<int, 4>> associativity;  // (i, j, k, l) with (e_i e_j) e_k != e_i (e_j e_k) at l
    std::vector<int> unit_law;                      // j with unit * e_j != e_j

    bool empty() const { return commutativity.empty() && associativity.empty() && unit_law.empty(); }
};

inline AxiomReport check_algebra_axioms(const Algebra& alg) {
    AxiomReport report;
    const int d = alg.dim();
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int k = 0; k < d; ++k)
                if (alg.c(i, j, k) != alg.c(j, i, k)) report.commutativity.push_back({i, j, k});
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    Scalar lhs(0), rhs(0);
                    for (int m = 0; m < d; ++m) {
                        if (!alg.c(i, j, m).is_zero()) lhs += alg.c(i, j, m) * alg.c(m, k, l);
                        if (!alg.c(j, k, m).is_zero()) rhs += alg.c(j, k, m) * alg.c(i, m, l);
                    }
                    if (lhs != rhs) report.associativity.push_back({i, j, k, l});
                }
    for (int j = 0; j < d; ++j) {
        // unit * e_j, coordinate k: sum_i unit_i c(i,j,k)
        bool ok = true;
        for (int k = 0; k < d && ok; ++k) {
            Scalar s(0);
            for (int i = 0; i < d; ++i)
                if (!alg.unit_coords()[i].is_zero()) s += alg.unit_coords()[i] * alg.c(i, j, k);
            if (s != Scalar(k == j ? 1 : 0)) ok = false;
        }
        if (!ok) report.unit_law.push_back(j);
    }
    return report;
}

// ---------------------------------------------------------------------------
// Elements
// ---------------------------------------------------------------------------

struct Element {
    AlgebraPtr algebra;
    std::vector<Scalar> coords;

    bool is_zero() const {
        return std::all_of(coords.begin(), coords.end(), [](const Scalar& x) { return x.is_zero(); });
    }
};

inline Element make_element(AlgebraPtr alg, std::vector<Scalar> coords) {
    if (static_cast<int>(coords.size()) != alg->dim()) throw Error("coordinate vector length does not match dim");
    return Element{std::move(alg), std::move(coords)};
}

inline Element zero_element(const AlgebraPtr& alg) { return Element{alg, std::vector<Scalar>(alg->dim())}; }

inline Element unit_element(const AlgebraPtr& alg) { return Element{alg, alg->unit_coords()}; }

inline Element basis_element(const AlgebraPtr& alg, int i) {
    Element e = zero_element(alg);
    e.coords[i] = 1;
    return e;
}

inline void require_same_algebra(const Element& a, const Element& b) {
    if (!same_algebra(a.algebra, b.algebra)) throw Error("algebra mismatch");
}

inline bool operator==(const Element& a, const Element& b) {
    return same_algebra(a.algebra, b.algebra) && a.coords == b.coords;
}
inline bool operator!=(const Element& a, const Element& b) { return !(a == b); }

inline Element operator+(const Element& a, const Element& b) {
    require_same_algebra(a, b);
    Element r = a;
    for (int k = 0; k < r.algebra->dim(); ++k) r.coords[k] += b.coords[k];
    return r;
}

inline Element operator-(const Element& a, const Element& b) {
    require_same_algebra(a, b);
    Element r = a;
    for (int k = 0; k < r.algebra->dim(); ++k) r.coords[k] -= b.coords[k];
    return r;
}

inline Element operator-(const Element& a) {
    Element r = a;
    for (auto& x : r.coords) x = -x;
    return r;
}

inline Element operator*(const Scalar& s, const Element& a) {
    Element r = a;
    for (auto& x : r.coords) x *= s;
    return r;
}

/// Product via structure constants: coords_k = sum_{i,j} a_i b_j c(i,j,k).
inline Element mul(const Element& a, const Element& b) {
    require_same_algebra(a, b);
    const Algebra& alg = *a.algebra;
    const int d = alg.dim();
    Element r = zero_element(a.algebra);
    for (int i = 0; i < d; ++i) {
        if (a.coords[i].is_zero()) continue;
        for (int j = 0; j < d; ++j) {
            if (b.coords[j].is_zero()) continue;
            const Scalar ab = a.coords[i] * b.coords[j];
            for (int k = 0; k < d; ++k)
                if (!alg.c(i, j, k).is_zero()) r.coords[k] += ab * alg.c(i, j, k);
        }
    }
    return r;
}

inline Element power(const Element& a, int k) {
    if (k < 0) throw Error("power expects a nonnegative exponent");
    Element r = unit_element(a.algebra);
    for (int i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

/// Matrix of multiplication by a: column j holds the coordinates of a * e_j.
inline Mat multiplication_operator(const Element& a) {
    const Algebra& alg = *a.algebra;
    const int d = alg.dim();
    Mat m(d, d);
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
            Scalar s(0);
            for (int i = 0; i < d; ++i)
                if (!a.coords[i].is_zero()) s += a.coords[i] * alg.c(i, j, k);
            m(k, j) = s;
        }
    return m;
}

/// Multiplicative inverse, by solving (mult. operator) x = unit fraction-free.
inline Element invert(const Element& a) {
    auto x = solve_fraction_free(multiplication_operator(a), a.algebra->unit_coords());
    if (!x) throw Error("element not invertible");
    return Element{a.algebra, std::move(*x)};
}

/// Returns the least k >= 0 with a^(k) = 0, or -1 when a is not nilpotent.
/// In a dim-d commutative algebra a nilpotent element satisfies a^d = 0.
inline int nilpotency_index(const Element& a) {
    Element p = unit_element(a.algebra);
    for (int k = 0; k <= a.algebra->dim() + 1; ++k) {
        if (p.is_zero()) return k;
        p = mul(p, a);
    }
    return -1;
}

// ---------------------------------------------------------------------------
// Linear maps
// ---------------------------------------------------------------------------

struct LinearMap {
    AlgebraPtr domain;
    AlgebraPtr codomain;
    Mat matrix;  // dim(codomain) x dim(domain)
};

inline LinearMap make_linear_map(AlgebraPtr domain, AlgebraPtr codomain, Mat matrix) {
    if (matrix.rows() != codomain->dim() || matrix.cols() != domain->dim())
        throw Error("linear map matrix shape does not match domain/codomain dimensions");
    return LinearMap{std::move(domain), std::move(codomain), std::move(matrix)};
}

inline Element apply(const LinearMap& f, const Element& a) {
    if (!same_algebra(f.domain, a.algebra)) throw Error("algebra mismatch");
    return Element{f.codomain, f.matrix.apply(a.coords)};
}

inline LinearMap identity_map(const AlgebraPtr& alg) {
    return LinearMap{alg, alg, Mat::identity(alg->dim())};
}

inline LinearMap compose(const LinearMap& g, const LinearMap& f) {
    if (!same_algebra(g.domain, f.codomain)) throw Error("algebra mismatch");
    return LinearMap{f.domain, g.codomain, g.matrix * f.matrix};
}

inline LinearMap operator+(const LinearMap& f, const LinearMap& g) {
    if (!same_algebra(f.domain, g.domain) || !same_algebra(f.codomain, g.codomain))
        throw Error("algebra mismatch");
    return LinearMap{f.domain, f.codomain, f.matrix + g.matrix};
}

inline LinearMap scale_map(const Scalar& s, const LinearMap& f) {
    return LinearMap{f.domain, f.codomain, f.matrix.scaled(s)};
}

inline bool same_map(const LinearMap& f, const LinearMap& g) {
    return same_algebra(f.domain, g.domain) && same_algebra(f.codomain, g.codomain) && f.matrix == g.matrix;
}

/// sum_alpha coeffs_alpha * maps_alpha, all maps sharing domain and codomain.
inline LinearMap integer_combination(const std::vector<LinearMap>& maps, const std::vector<long long>& coeffs) {
    if (maps.empty()) throw Error("integer_combination requires at least one map");
    if (maps.size() != coeffs.size()) throw Error("integer_combination: list length mismatch");
    Mat acc(maps.front().codomain->dim(), maps.front().domain->dim());
    for (std::size_t i = 0; i < maps.size(); ++i) {
        if (!same_algebra(maps[i].domain, maps.front().domain) ||
            !same_algebra(maps[i].codomain, maps.front().codomain) ||
            maps[i].matrix.rows() != acc.rows() || maps[i].matrix.cols() != acc.cols())
            throw Error("integer_combination: mismatched map shapes");
        acc = acc + maps[i].matrix.scaled(Scalar(coeffs[i]));
    }
    return LinearMap{maps.front().domain, maps.front().codomain, std::move(acc)};
}

// ---------------------------------------------------------------------------
// Concrete algebras
// ---------------------------------------------------------------------------

/// The algebra of rational-valued functions on a finite point set, with the
/// pointwise product: e_i e_j = [i == j] e_i, unit = (1, ..., 1).
inline AlgebraPtr function_algebra(const std::vector<std::string>& labels) {
    if (labels.empty()) throw Error("function algebra needs at least one point");
    if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size())
        throw Error("function algebra point labels must be distinct");
    const int d = static_cast<int>(labels.size());
    std::vector<Scalar> c(static_cast<std::size_t>(d) * d * d);
    for (int i = 0; i < d; ++i) c[(static_cast<std::size_t>(i) * d + i) * d + i] = 1;
    return make_algebra(d, labels, std::vector<Scalar>(d, Scalar(1)), std::move(c));
}

inline bool is_function_algebra(const Algebra& alg) {
    const int d = alg.dim();
    for (int k = 0; k < d; ++k)
        if (alg.unit_coords()[k] != 1) return false;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                if (alg.c(i, j, k) != Scalar((i == j && j == k) ? 1 : 0)) return false;
    return true;
}

/// The ground field as a 1-dimensional algebra. One shared instance.
inline const AlgebraPtr& ground_field() {
    static const AlgebraPtr q = function_algebra({"1"});
    return q;
}

inline Element scalar_element(const Scalar& s) {
    return Element{ground_field(), {s}};
}

/// Evaluation at a point of a function algebra: the coordinate-extracting row.
inline LinearMap evaluation_hom(const AlgebraPtr& alg, const std::string& point) {
    const auto& labels = alg->basis_labels();
    const auto it = std::find(labels.begin(), labels.end(), point);
    if (it == labels.end()) throw Error("unknown point '" + point + "'");
    Mat m(1, alg->dim());
    m(0, static_cast<int>(it - labels.begin())) = 1;
    return LinearMap{alg, ground_field(), std::move(m)};
}

/// n-fold tensor power with factorwise structure constants. Basis is indexed by
/// index tuples (i_1, ..., i_n), flattened with i_1 most significant.
inline AlgebraPtr tensor_power(const AlgebraPtr& alg, int n) {
    if (n < 1) throw Error("tensor power needs n >= 1");
    const int d = alg->dim();
    std::size_t dim_t = 1;
    for (int r = 0; r < n; ++r) {
        dim_t *= static_cast<std::size_t>(d);
        if (dim_t > 4096) throw Error("tensor power dimension too large");
    }
    const int dt = static_cast<int>(dim_t);

    const auto decode = [&](int flat) {
        std::vector<int> idx(n);
        for (int r = n - 1; r >= 0; --r) {
            idx[r] = flat % d;
            flat /= d;
        }
        return idx;
    };

    std::vector<std::string> labels(dt);
    std::vector<Scalar> unit(dt);
    for (int f = 0; f < dt; ++f) {
        const auto idx = decode(f);
        std::string label;
        Scalar u(1);
        for (int r = 0; r < n; ++r) {
            if (r) label += ',';
            label += alg->basis_labels()[idx[r]];
            u *= alg->unit_coords()[idx[r]];
        }
        labels[f] = label;
        unit[f] = u;
    }

    std::vector<Scalar> c(dim_t * dim_t * dim_t);
    for (int i = 0; i < dt; ++i) {
        const auto ii = decode(i);
        for (int j = 0; j < dt; ++j) {
            const auto jj = decode(j);
            for (int k = 0; k < dt; ++k) {
                const auto kk = decode(k);
                Scalar prod(1);
                for (int r = 0; r < n && !prod.is_zero(); ++r) prod *= alg->c(ii[r], jj[r], kk[r]);
                if (!prod.is_zero()) c[(static_cast<std::size_t>(i) * dt + j) * dt + k] = prod;
            }
        }
    }
    return make_algebra(dt, std::move(labels), std::move(unit), std::move(c));
}

/// Index tuple -> flat index of tensor_power(alg, n), i_1 most significant.
inline int tensor_flat_index(int base_dim, const std::vector<int>& idx) {
    int flat = 0;
    for (int i : idx) flat = flat * base_dim + i;
    return flat;
}

// ---------------------------------------------------------------------------
// Division-free determinant over an algebra
// ---------------------------------------------------------------------------

/// Determinant of a square matrix of algebra elements, by expansion with
/// dynamic programming over column subsets. No divisions, so zero divisors in
/// the coefficient algebra are fine. O(2^n n) algebra products.
inline Element element_det_division_free(const std::vector<std::vector<Element>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) throw Error("empty matrix");
    const AlgebraPtr alg = m[0][0].algebra;
    std::vector<Element> det_by_subset(std::size_t(1) << n, zero_element(alg));
    det_by_subset[0] = unit_element(alg);
    for (std::size_t s = 1; s < det_by_subset.size(); ++s) {
        // det of the submatrix on rows 0..|s|-1 and columns s, expanded along
        // its last row; the cofactor sign is (-1)^(row + column position).
        const int row = __builtin_popcountll(s) - 1;
        Element acc = zero_element(alg);
        int pos = 0;
        for (int j = 0; j < n; ++j) {
            if (!(s & (std::size_t(1) << j))) continue;
            if (!m[row][j].is_zero()) {
                const Element term = mul(m[row][j], det_by_subset[s ^ (std::size_t(1) << j)]);
                acc = ((row + pos) % 2 == 0) ? acc + term : acc - term;
            }
            ++pos;
        }
        det_by_subset[s] = acc;
    }
    return det_by_subset.back();
}

} // namespace frobkit
