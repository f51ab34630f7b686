#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quasipack/embedding.hpp"
#include "quasipack/enumerate.hpp"
#include "quasipack/errors.hpp"
#include "quasipack/rng.hpp"
#include "quasipack/strip.hpp"

namespace quasipack {

namespace detail {

// Incremental linear programming in dimension <= 4 (Seidel). Maximizes c.y
// subject to a.y <= b rows plus the implicit box |y_i| <= box_i. Infeasible
// systems return nullopt. Constraint order is randomized by the caller's rng;
// the order affects running time only.
struct LpRow {
    std::vector<double> a;
    double b;
};

inline std::optional<Vector> seidel_max(std::vector<LpRow> rows, Vector c, Vector box,
                                        SplitMix64& rng) {
    const std::size_t d = c.size();
    constexpr double kCoefEps = 1e-13;

    if (d == 1) {
        double lo = -box[0], hi = box[0];
        for (const LpRow& r : rows) {
            const double a = r.a[0];
            if (a > kCoefEps)
                hi = std::min(hi, r.b / a);
            else if (a < -kCoefEps)
                lo = std::max(lo, r.b / a);
            else if (r.b < -1e-11)
                return std::nullopt;
        }
        if (lo > hi + 1e-11) return std::nullopt;
        return Vector{c[0] >= 0.0 ? std::max(lo, hi) : std::min(lo, hi)};
    }

    // random processing order (Fisher-Yates with the deterministic generator)
    std::vector<std::size_t> order(rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(i) - 1))]);

    Vector y(d);
    for (std::size_t i = 0; i < d; ++i) y[i] = (c[i] >= 0.0) ? box[i] : -box[i];

    std::vector<std::size_t> seen;
    seen.reserve(rows.size());
    for (std::size_t oi : order) {
        const LpRow& row = rows[oi];
        double val = -row.b;
        double scale = 1.0 + std::abs(row.b);
        for (std::size_t q = 0; q < d; ++q) {
            val += row.a[q] * y[q];
            scale += std::abs(row.a[q] * y[q]);
        }
        if (val <= 1e-11 * scale) {
            seen.push_back(oi);
            continue;
        }

        // the optimum of the subsystem lies on this row's hyperplane; solve
        // the (d-1)-dimensional problem with y_p eliminated
        std::size_t p = 0;
        for (std::size_t q = 1; q < d; ++q)
            if (std::abs(row.a[q]) > std::abs(row.a[p])) p = q;
        if (std::abs(row.a[p]) <= kCoefEps) {
            if (row.b < -1e-11) return std::nullopt;
            seen.push_back(oi);
            continue;
        }
        const double ap = row.a[p];

        auto project_row = [&](const LpRow& g) {
            LpRow h;
            h.a.reserve(d - 1);
            const double f = g.a[p] / ap;
            for (std::size_t q = 0; q < d; ++q)
                if (q != p) h.a.push_back(g.a[q] - f * row.a[q]);
            h.b = g.b - f * row.b;
            return h;
        };

        std::vector<LpRow> sub;
        sub.reserve(seen.size() + 2);
        for (std::size_t si : seen) sub.push_back(project_row(rows[si]));
        // box bounds of the eliminated variable become ordinary rows
        LpRow up, dn;
        up.a.assign(d, 0.0);
        up.a[p] = 1.0;
        up.b = box[p];
        dn.a.assign(d, 0.0);
        dn.a[p] = -1.0;
        dn.b = box[p];
        sub.push_back(project_row(up));
        sub.push_back(project_row(dn));

        Vector sub_c, sub_box;
        const double fc = c[p] / ap;
        for (std::size_t q = 0; q < d; ++q)
            if (q != p) {
                sub_c.push_back(c[q] - fc * row.a[q]);
                sub_box.push_back(box[q]);
            }

        auto sol = seidel_max(std::move(sub), std::move(sub_c), std::move(sub_box), rng);
        if (!sol) return std::nullopt;

        double yp = row.b;
        std::size_t si = 0;
        for (std::size_t q = 0; q < d; ++q)
            if (q != p) {
                y[q] = (*sol)[si++];
                yp -= row.a[q] * y[q];
            }
        y[p] = yp / ap;
        seen.push_back(oi);
    }
    return y;
}

}  // namespace detail

/// Decides strip membership from first principles: x lies in the strip iff
/// some physical translate t brings every coordinate of x within half a unit,
/// |x_j - offset_j - sum_i t_i w_ij| <= 0.5 + tol for all j.
///
/// n = 1 intersects intervals directly; n = 2 and 3 solve the largest-margin
/// (Chebyshev center) linear program over the slab system. Deliberately small
/// and independent of the determinant formulation it validates. Rejects n > 3.
inline bool lp_strip_membership(const Embedding& emb, std::span<const double> x, double tol,
                                const Vector& offset = {}) {
    if (emb.n > 3) throw ValidationError("feasibility oracle supports n <= 3 only");
    if (x.size() != static_cast<std::size_t>(emb.k))
        throw ValidationError("vector dimension does not match superspace");
    if (!offset.empty() && offset.size() != x.size())
        throw ValidationError("offset dimension does not match superspace");

    const std::size_t k = static_cast<std::size_t>(emb.k);
    const double slack = 0.5 + tol;
    auto coord = [&](std::size_t j) {
        return x[j] - (offset.empty() ? 0.0 : offset[j]);
    };

    if (emb.n == 1) {
        double lo = -std::numeric_limits<double>::infinity();
        double hi = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < k; ++j) {
            const double v = emb.w[0][j];
            if (std::abs(v) < 1e-300) continue;
            double a = (coord(j) - slack) / v;
            double b = (coord(j) + slack) / v;
            if (a > b) std::swap(a, b);
            lo = std::max(lo, a);
            hi = std::min(hi, b);
        }
        return lo <= hi + 1e-12;
    }

    // Chebyshev formulation: maximize r subject to
    //   <t, v_j> + ||v_j|| r <=  coord_j + slack
    //  -<t, v_j> + ||v_j|| r <= -coord_j + slack
    // feasible slab system  <=>  optimal r >= 0
    const std::size_t d = static_cast<std::size_t>(emb.n) + 1;
    double max_abs = 1.0;
    for (std::size_t j = 0; j < k; ++j) max_abs = std::max(max_abs, std::abs(coord(j)));
    const double bound = 4.0 * std::sqrt(static_cast<double>(k)) * (max_abs + 1.0) / emb.kappa + 16.0;

    std::vector<detail::LpRow> rows;
    rows.reserve(2 * k);
    for (std::size_t j = 0; j < k; ++j) {
        double vn = 0.0;
        detail::LpRow pos, neg;
        pos.a.resize(d);
        neg.a.resize(d);
        for (int i = 0; i < emb.n; ++i) {
            const double v = emb.w[static_cast<std::size_t>(i)][j];
            pos.a[static_cast<std::size_t>(i)] = v;
            neg.a[static_cast<std::size_t>(i)] = -v;
            vn += v * v;
        }
        vn = std::sqrt(vn);
        pos.a[d - 1] = vn;
        neg.a[d - 1] = vn;
        pos.b = coord(j) + slack;
        neg.b = -coord(j) + slack;
        rows.push_back(std::move(pos));
        rows.push_back(std::move(neg));
    }

    Vector c(d, 0.0);
    c[d - 1] = 1.0;
    Vector box(d, bound);
    detail::SplitMix64 rng(0x5EED0FACADEull ^ (static_cast<std::uint64_t>(k) << 32));
    auto sol = detail::seidel_max(std::move(rows), std::move(c), std::move(box), rng);
    if (!sol) return false;  // cannot happen: r -> -inf always satisfies the slabs
    return (*sol)[d - 1] >= 0.0;
}

inline bool lp_strip_membership(const Embedding& emb, const LatticeVector& x, double tol,
                                const Vector& offset = {}) {
    Vector xd(x.begin(), x.end());
    return lp_strip_membership(emb, std::span<const double>(xd), tol, offset);
}

/// Outcome of sampling-based cross-validation of the determinant membership
/// against the linear-feasibility oracle.
struct AgreementReport {
    std::size_t samples = 0;
    std::size_t agreements = 0;
    std::size_t disagreements = 0;              // total classifier mismatches
    std::size_t out_of_band_disagreements = 0;  // mismatches away from the boundary band
    std::size_t boundary_band_cases = 0;
    std::vector<LatticeVector> first_disagreements;  // up to 10

    std::string to_string() const {
        std::ostringstream os;
        os << "samples=" << samples << " agreements=" << agreements
           << " disagreements=" << disagreements
           << " out_of_band_disagreements=" << out_of_band_disagreements
           << " boundary_band_cases=" << boundary_band_cases << "\n";
        if (!first_disagreements.empty()) {
            os << "disagreeing vectors (first " << first_disagreements.size() << "):\n";
            for (const LatticeVector& v : first_disagreements) {
                os << "  (";
                for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
                os << ")\n";
            }
        }
        return os.str();
    }
};

/// Samples integer vectors uniformly in [-range, range]^k, classifies each
/// with both deciders and reports the outcome. Deterministic for a fixed
/// seed. Disagreements inside the boundary band are counted but are expected;
/// out-of-band disagreements indicate a defect in the constraint system.
inline AgreementReport agreement_report(const StripConstraintSet& cs, const Embedding& emb,
                                        std::size_t sample_count, int coordinate_range,
                                        std::uint64_t seed) {
    if (emb.n > 3) throw ValidationError("feasibility oracle supports n <= 3 only");
    detail::SplitMix64 rng(seed);
    AgreementReport rep;
    rep.samples = sample_count;

    LatticeVector x(static_cast<std::size_t>(emb.k));
    for (std::size_t s = 0; s < sample_count; ++s) {
        for (auto& c : x)
            c = static_cast<std::int32_t>(rng.uniform_int(-coordinate_range, coordinate_range));
        const bool fast = in_strip(cs, x);
        const bool slow = lp_strip_membership(emb, x, 0.0, cs.offset);
        const bool band = near_strip_boundary(cs, x);
        if (band) ++rep.boundary_band_cases;
        if (fast == slow) {
            ++rep.agreements;
        } else {
            ++rep.disagreements;
            if (!band) {
                ++rep.out_of_band_disagreements;
                if (rep.first_disagreements.size() < 10) rep.first_disagreements.push_back(x);
            }
        }
    }
    return rep;
}

}  // namespace quasipack
