#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "quasipack/embedding.hpp"
#include "quasipack/errors.hpp"

namespace quasipack {

/// A strictly increasing (n+1)-tuple of column indices, 1-based as in the
/// mathematical statement of the face labelling.
struct IndexTuple {
    std::vector<int> indices;
};

/// All strictly increasing (n+1)-tuples with values in 1..k, lexicographic.
inline std::vector<IndexTuple> index_tuples(int n, int k) {
    if (n < 1 || n >= k) throw ValidationError("index tuples require 1 <= n < k");
    const int r = n + 1;
    std::vector<IndexTuple> out;
    std::vector<int> cur(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        out.push_back(IndexTuple{cur});
        int i = r - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == k - (r - 1 - i)) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

/// One face family constraint. Membership in the strip requires
/// |sum_j cofactors[j] * x_{i_j} - center| <= bound for every constraint; the
/// cofactors are the signed n x n minors of the cluster rows restricted to the
/// tuple columns (first-row expansion of the orthogonal-vector determinant),
/// and bound = 0.5 * sum |cofactors| is the determinant's maximum over the
/// vertices of the unit hypercube, i.e. over the sign choices
/// alpha_j in {-0.5, +0.5}.
struct StripConstraint {
    IndexTuple tuple;
    std::vector<double> cofactors;
    double bound = 0.0;
    double center = 0.0;  // nonzero only for strips around a shifted origin
};

/// Precomputed constraint system for fast strip membership.
struct StripConstraintSet {
    int n = 0;
    int k = 0;
    std::vector<StripConstraint> constraints;     // in tuple-lexicographic order
    std::vector<std::size_t> evaluation_order;    // most discriminating first
    Vector offset;                                // strip anchor; empty means origin

    // flattened tables in evaluation order, 0-based column indices
    std::vector<std::int32_t> eval_idx;
    std::vector<double> eval_cof;
    std::vector<double> eval_center;
    std::vector<double> eval_bound;
    std::vector<double> eval_tol;  // bound + boundary tolerance

    static double boundary_tolerance(double bound) { return 1e-9 * std::max(1.0, bound); }
};

namespace detail {

inline double minor_det(const Embedding& e, const std::vector<int>& cols, int skip) {
    // determinant of the n x n block of w rows over the tuple columns with
    // column `skip` removed; cols are 1-based
    const int n = e.n;
    int c[3];
    int q = 0;
    for (int j = 0; j < n + 1; ++j)
        if (j != skip) c[q++] = cols[static_cast<std::size_t>(j)] - 1;
    auto w = [&](int i, int j) { return e.w[static_cast<std::size_t>(i)][static_cast<std::size_t>(c[j])]; };
    switch (n) {
        case 1: return w(0, 0);
        case 2: return det2(w(0, 0), w(0, 1), w(1, 0), w(1, 1));
        case 3:
            return det3(w(0, 0), w(0, 1), w(0, 2), w(1, 0), w(1, 1), w(1, 2), w(2, 0), w(2, 1),
                        w(2, 2));
        default: throw ValidationError("physical dimension must be 1, 2 or 3");
    }
}

}  // namespace detail

/// Precomputes the full constraint system of the strip for an embedding.
/// Degenerate tuples (all minors numerically zero) are dropped; a nonempty
/// offset anchors the strip at that point instead of the origin.
inline StripConstraintSet build_constraints(const Embedding& e, Vector offset = {}) {
    if (!offset.empty() && offset.size() != static_cast<std::size_t>(e.k))
        throw ValidationError("strip offset dimension does not match superspace");

    StripConstraintSet cs;
    cs.n = e.n;
    cs.k = e.k;
    cs.offset = std::move(offset);

    const double drop_eps = 1e-12 * std::pow(e.kappa, e.n);
    for (IndexTuple& t : index_tuples(e.n, e.k)) {
        StripConstraint c;
        c.cofactors.resize(static_cast<std::size_t>(e.n) + 1);
        double abs_sum = 0.0;
        for (int j = 0; j <= e.n; ++j) {
            const double minor = detail::minor_det(e, t.indices, j);
            const double cof = (j % 2 == 0) ? minor : -minor;
            c.cofactors[static_cast<std::size_t>(j)] = cof;
            abs_sum += std::abs(cof);
        }
        c.bound = 0.5 * abs_sum;
        if (c.bound < drop_eps) continue;  // identically satisfied
        if (!cs.offset.empty()) {
            double s = 0.0;
            for (int j = 0; j <= e.n; ++j)
                s += c.cofactors[static_cast<std::size_t>(j)] *
                     cs.offset[static_cast<std::size_t>(t.indices[static_cast<std::size_t>(j)] - 1)];
            c.center = s;
        }
        c.tuple = std::move(t);
        cs.constraints.push_back(std::move(c));
    }

    // Most discriminating constraints first: large cofactor relative to the
    // bound rejects outside points after few dot products.
    cs.evaluation_order.resize(cs.constraints.size());
    std::iota(cs.evaluation_order.begin(), cs.evaluation_order.end(), std::size_t{0});
    std::vector<double> key(cs.constraints.size());
    for (std::size_t i = 0; i < cs.constraints.size(); ++i) {
        const StripConstraint& c = cs.constraints[i];
        double cmax = 0.0;
        for (double v : c.cofactors) cmax = std::max(cmax, std::abs(v));
        key[i] = cmax / c.bound;
    }
    std::stable_sort(cs.evaluation_order.begin(), cs.evaluation_order.end(),
                     [&key](std::size_t a, std::size_t b) { return key[a] > key[b]; });

    const std::size_t np1 = static_cast<std::size_t>(cs.n) + 1;
    cs.eval_idx.reserve(cs.constraints.size() * np1);
    cs.eval_cof.reserve(cs.constraints.size() * np1);
    for (std::size_t oi : cs.evaluation_order) {
        const StripConstraint& c = cs.constraints[oi];
        for (std::size_t j = 0; j < np1; ++j) {
            cs.eval_idx.push_back(c.tuple.indices[j] - 1);
            cs.eval_cof.push_back(c.cofactors[j]);
        }
        cs.eval_center.push_back(c.center);
        cs.eval_bound.push_back(c.bound);
        cs.eval_tol.push_back(c.bound + StripConstraintSet::boundary_tolerance(c.bound));
    }
    return cs;
}

namespace detail {

template <int NP1, class T>
inline bool in_strip_impl(const StripConstraintSet& cs, std::span<const T> x) {
    const std::int32_t* idx = cs.eval_idx.data();
    const double* cof = cs.eval_cof.data();
    const std::size_t count = cs.eval_bound.size();
    for (std::size_t c = 0; c < count; ++c) {
        double s = 0.0;
        for (int j = 0; j < NP1; ++j) s += cof[j] * static_cast<double>(x[static_cast<std::size_t>(idx[j])]);
        s -= cs.eval_center[c];
        if (std::abs(s) > cs.eval_tol[c]) return false;
        idx += NP1;
        cof += NP1;
    }
    return true;
}

template <class T>
inline bool in_strip_dispatch(const StripConstraintSet& cs, std::span<const T> x) {
    if (x.size() != static_cast<std::size_t>(cs.k))
        throw ValidationError("vector dimension does not match constraint set");
    switch (cs.n) {
        case 1: return in_strip_impl<2>(cs, x);
        case 2: return in_strip_impl<3>(cs, x);
        case 3: return in_strip_impl<4>(cs, x);
        default: throw ValidationError("physical dimension must be 1, 2 or 3");
    }
}

}  // namespace detail

/// Strip membership: true iff every constraint determinant stays within its
/// bound (closed, with a small boundary tolerance). Constraints are evaluated
/// most-discriminating-first and exit on the first violation.
inline bool in_strip(const StripConstraintSet& cs, std::span<const double> x) {
    return detail::in_strip_dispatch(cs, x);
}

inline bool in_strip(const StripConstraintSet& cs, const Vector& x) {
    return detail::in_strip_dispatch(cs, std::span<const double>(x));
}

inline bool in_strip(const StripConstraintSet& cs, std::span<const std::int32_t> x) {
    return detail::in_strip_dispatch(cs, x);
}

inline bool in_strip(const StripConstraintSet& cs, const LatticeVector& x) {
    return detail::in_strip_dispatch(cs, std::span<const std::int32_t>(x));
}

/// True when some constraint value lies within the boundary tolerance of its
/// bound, i.e. the point sits on the knife edge where tolerance-based
/// deciders may legitimately differ.
template <class T>
inline bool near_strip_boundary(const StripConstraintSet& cs, std::span<const T> x) {
    const std::size_t np1 = static_cast<std::size_t>(cs.n) + 1;
    for (std::size_t c = 0; c < cs.eval_bound.size(); ++c) {
        double s = 0.0;
        for (std::size_t j = 0; j < np1; ++j)
            s += cs.eval_cof[c * np1 + j] *
                 static_cast<double>(x[static_cast<std::size_t>(cs.eval_idx[c * np1 + j])]);
        s -= cs.eval_center[c];
        const double eps = StripConstraintSet::boundary_tolerance(cs.eval_bound[c]);
        if (std::abs(std::abs(s) - cs.eval_bound[c]) <= eps) return true;
    }
    return false;
}

inline bool near_strip_boundary(const StripConstraintSet& cs, const LatticeVector& x) {
    return near_strip_boundary<std::int32_t>(cs, std::span<const std::int32_t>(x));
}

}  // namespace quasipack
