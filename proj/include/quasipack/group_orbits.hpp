#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "quasipack/errors.hpp"
#include "quasipack/linalg.hpp"

namespace quasipack {

enum class GroupKind { dihedral, icosahedral, linear };

inline const char* to_string(GroupKind g) {
    switch (g) {
        case GroupKind::dihedral: return "dihedral";
        case GroupKind::icosahedral: return "icosahedral";
        case GroupKind::linear: return "linear";
    }
    return "?";
}

/// Golden ratio, the irrationality underlying fivefold symmetry.
inline constexpr double golden_ratio = 1.6180339887498948482;

struct Relation {
    std::string word;  // over the generator names "a", "b"
    int order;
};

/// A finite matrix group given by its generators.
///
/// Three families are supported:
///   dihedral(m):  rotation a by pi/m and reflection b in the plane,
///                 a^(2m) = b^2 = (ab)^2 = e
///   icosahedral:  the order-60 rotation group acting irreducibly on R^3,
///                 a^5 = b^2 = (ab)^3 = e
///   linear:       the inversion group {+1, -1} acting on R^1
struct GeneratorSet {
    int n = 0;
    GroupKind kind = GroupKind::dihedral;
    int m = 0;  // dihedral only
    std::vector<Matrix> generators;
    std::vector<Relation> relation_orders;

    std::size_t group_order() const {
        switch (kind) {
            case GroupKind::dihedral: return static_cast<std::size_t>(4 * m);
            case GroupKind::icosahedral: return 60;
            case GroupKind::linear: return 2;
        }
        return 0;
    }
};

namespace detail {

inline Matrix word_product(const GeneratorSet& g, const std::string& word) {
    Matrix r = Matrix::identity(g.n);
    for (char c : word) {
        const std::size_t gi = (c == 'a') ? 0 : 1;
        if (gi >= g.generators.size()) throw ValidationError("unknown generator in relation word");
        r = r * g.generators[gi];
    }
    return r;
}

inline void verify_generators(const GeneratorSet& g) {
    const Matrix id = Matrix::identity(g.n);
    for (const Matrix& mat : g.generators) {
        if (max_abs_diff(mat.transposed() * mat, id) > 1e-12)
            throw ValidationError("generator is not orthogonal");
    }
    for (const Relation& rel : g.relation_orders) {
        const Matrix w = word_product(g, rel.word);
        if (max_abs_diff(matrix_power(w, rel.order), id) > 1e-10)
            throw ValidationError("group relation " + rel.word + "^" +
                                  std::to_string(rel.order) + " = e fails");
    }
}

}  // namespace detail

/// Generators of the dihedral group acting on R^2: a rotates by pi/m,
/// b(x, y) = (x, -y). Requires m >= 2.
inline GeneratorSet dihedral_generators(int m) {
    if (m < 2) throw ValidationError("dihedral order parameter m must be >= 2");
    GeneratorSet g;
    g.n = 2;
    g.kind = GroupKind::dihedral;
    g.m = m;
    const double t = M_PI / static_cast<double>(m);
    Matrix a;
    a.n = 2;
    a.at(0, 0) = std::cos(t);
    a.at(0, 1) = -std::sin(t);
    a.at(1, 0) = std::sin(t);
    a.at(1, 1) = std::cos(t);
    Matrix b;
    b.n = 2;
    b.at(0, 0) = 1.0;
    b.at(1, 1) = -1.0;
    g.generators = {a, b};
    g.relation_orders = {{"a", 2 * m}, {"b", 2}, {"ab", 2}};
    detail::verify_generators(g);
    return g;
}

/// Generators of the icosahedral rotation group acting on R^3. The order-5
/// generator mixes coordinates through the golden ratio; b is the half turn
/// about the z axis.
inline GeneratorSet icosahedral_generators() {
    GeneratorSet g;
    g.n = 3;
    g.kind = GroupKind::icosahedral;
    const double tau = golden_ratio;
    Matrix a;
    a.n = 3;
    a.at(0, 0) = (tau - 1.0) / 2.0;
    a.at(0, 1) = -tau / 2.0;
    a.at(0, 2) = 0.5;
    a.at(1, 0) = tau / 2.0;
    a.at(1, 1) = 0.5;
    a.at(1, 2) = (tau - 1.0) / 2.0;
    a.at(2, 0) = -0.5;
    a.at(2, 1) = (tau - 1.0) / 2.0;
    a.at(2, 2) = tau / 2.0;
    Matrix b;
    b.n = 3;
    b.at(0, 0) = -1.0;
    b.at(1, 1) = -1.0;
    b.at(2, 2) = 1.0;
    g.generators = {a, b};
    g.relation_orders = {{"a", 5}, {"b", 2}, {"ab", 3}};
    detail::verify_generators(g);
    return g;
}

/// The inversion group {+1, -1} on the line. Its orbits {x, -x} make
/// one-dimensional clusters, the desk-scale case of the construction.
inline GeneratorSet inversion_generators() {
    GeneratorSet g;
    g.n = 1;
    g.kind = GroupKind::linear;
    Matrix a;
    a.n = 1;
    a.at(0, 0) = -1.0;
    g.generators = {a};
    g.relation_orders = {{"a", 2}};
    detail::verify_generators(g);
    return g;
}

/// One group orbit: the set of images of a seed point, deduplicated to
/// dedup_tolerance and sorted lexicographically.
struct OrbitPoints {
    std::vector<Vector> points;
    Vector seed;
    double dedup_tolerance = 1e-9;
};

namespace detail {

inline bool same_point(const Vector& a, const Vector& b, double tol) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

inline bool contains_point(const std::vector<Vector>& pts, const Vector& p, double tol) {
    for (const Vector& q : pts)
        if (same_point(p, q, tol)) return true;
    return false;
}

}  // namespace detail

/// Computes the orbit of a seed under the group.
///
/// Dihedral orbits are the 2m rotation images of the seed (the vertices of a
/// regular 2m-gon); icosahedral and linear orbits are the closure under all
/// generators. Deduplication is per coordinate, absolute, with the given
/// tolerance. Fails if the closure exceeds four times the group order, which
/// signals a tolerance inconsistent with the seed's scale.
inline OrbitPoints orbit(const GeneratorSet& gens, const Vector& seed, double tol = 1e-9) {
    if (tol <= 0.0) throw ValidationError("orbit dedup tolerance must be positive");
    if (seed.size() != static_cast<std::size_t>(gens.n))
        throw ValidationError("seed dimension does not match group dimension");
    for (double c : seed)
        if (!std::isfinite(c)) throw ValidationError("seed coordinates must be finite");

    const std::size_t cap = 4 * gens.group_order();
    std::vector<Vector> pts;
    if (gens.kind == GroupKind::dihedral) {
        // the 2m rotation images a^i s, i = 0 .. 2m-1
        Vector p = seed;
        for (int i = 0; i < 2 * gens.m; ++i) {
            if (!detail::contains_point(pts, p, tol)) pts.push_back(p);
            p = gens.generators[0].apply(p);
        }
    } else {
        pts.push_back(seed);
        std::vector<Vector> frontier{seed};
        while (!frontier.empty()) {
            std::vector<Vector> next;
            for (const Vector& p : frontier) {
                for (const Matrix& g : gens.generators) {
                    Vector q = g.apply(p);
                    if (!detail::contains_point(pts, q, tol)) {
                        pts.push_back(q);
                        next.push_back(std::move(q));
                        if (pts.size() > cap)
                            throw ValidationError(
                                "orbit closure exceeds safety cap; tolerance inconsistent");
                    }
                }
            }
            frontier = std::move(next);
        }
    }
    std::sort(pts.begin(), pts.end());
    OrbitPoints o;
    o.points = std::move(pts);
    o.seed = seed;
    o.dedup_tolerance = tol;
    return o;
}

/// An origin-symmetric multi-shell cluster, stored as one representative per
/// antipodal pair. The full cluster is { +v_j } union { -v_j }.
struct Cluster {
    int n = 0;
    std::vector<Vector> half_points;  // v_1 .. v_k
    std::vector<std::pair<std::size_t, std::size_t>> shell_boundaries;  // [begin, end) per shell

    int k() const { return static_cast<int>(half_points.size()); }
};

namespace detail {

inline Vector negated(const Vector& v) {
    Vector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

inline bool first_nonzero_positive(const Vector& v, double tol) {
    for (double c : v) {
        if (c > tol) return true;
        if (c < -tol) return false;
    }
    return false;  // all-zero: no representative sign
}

}  // namespace detail

/// Builds the half-point list of a cluster from its shells.
///
/// Every shell must be origin symmetric as a set; from each antipodal pair the
/// representative whose first nonzero coordinate is positive is kept. Shells
/// are concatenated in input order; collisions (equal or antipodal points
/// within or across shells) are rejected.
inline Cluster build_cluster(const std::vector<OrbitPoints>& shells) {
    if (shells.empty()) throw ValidationError("cluster needs at least one shell");
    const std::size_t n = shells.front().points.front().size();

    Cluster c;
    c.n = static_cast<int>(n);
    const double pair_tol = 1e-9;
    for (const OrbitPoints& shell : shells) {
        const std::size_t begin = c.half_points.size();
        for (const Vector& p : shell.points) {
            if (p.size() != n) throw ValidationError("shells have mixed dimensions");
            if (!detail::contains_point(shell.points, detail::negated(p), shell.dedup_tolerance))
                throw ValidationError("shell is not symmetric with respect to the origin");
            if (detail::first_nonzero_positive(p, pair_tol)) c.half_points.push_back(p);
        }
        if (c.half_points.size() - begin != shell.points.size() / 2)
            throw ValidationError("shell has an unpaired or zero point");
        c.shell_boundaries.emplace_back(begin, c.half_points.size());
    }

    for (std::size_t i = 0; i < c.half_points.size(); ++i)
        for (std::size_t j = i + 1; j < c.half_points.size(); ++j) {
            if (detail::same_point(c.half_points[i], c.half_points[j], pair_tol) ||
                detail::same_point(c.half_points[i], detail::negated(c.half_points[j]), pair_tol))
                throw ValidationError("cluster points collide across shells");
        }
    return c;
}

}  // namespace quasipack
