#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <span>
#include <vector>

#include "quasipack/errors.hpp"
#include "quasipack/group_orbits.hpp"

namespace quasipack {

/// The superspace embedding of a cluster: n orthogonal equal-norm vectors
/// w_1 .. w_n in R^k whose j-th coordinates are the coordinates of the
/// cluster point v_j. Their span is the physical subspace; kappa is the
/// common norm.
struct Embedding {
    int n = 0;
    int k = 0;
    std::vector<Vector> w;  // w[i][j] = i-th coordinate of v_j
    double kappa = 0.0;
    Cluster cluster;
};

/// Assembles and validates the embedding of a cluster. Rows are validated to
/// be pairwise orthogonal with equal norms (relative tolerance 1e-9); a
/// violation means the shells do not come from a representation for which the
/// construction is available, and EmbeddingInvalid is thrown.
inline Embedding build_embedding(Cluster cluster) {
    const int n = cluster.n;
    const int k = cluster.k();
    if (k == 0) throw ValidationError("cluster is empty");
    if (k < n + 1) throw ValidationError("superspace dimension must exceed physical dimension");

    Embedding e;
    e.n = n;
    e.k = k;
    e.w.assign(static_cast<std::size_t>(n), Vector(static_cast<std::size_t>(k), 0.0));
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i)
            e.w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                cluster.half_points[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];

    double kappa2 = 0.0;
    for (int i = 0; i < n; ++i) kappa2 += norm_squared(e.w[static_cast<std::size_t>(i)]);
    kappa2 /= static_cast<double>(n);
    if (kappa2 <= 0.0) throw EmbeddingInvalid("superspace vectors have zero norm");
    e.kappa = std::sqrt(kappa2);

    for (int i = 0; i < n; ++i) {
        if (std::abs(std::sqrt(norm_squared(e.w[static_cast<std::size_t>(i)])) - e.kappa) >
            1e-9 * e.kappa)
            throw EmbeddingInvalid("superspace vectors differ in norm");
        for (int j = i + 1; j < n; ++j) {
            if (std::abs(dot(e.w[static_cast<std::size_t>(i)], e.w[static_cast<std::size_t>(j)])) >
                1e-9 * kappa2)
                throw EmbeddingInvalid("superspace vectors are not orthogonal");
        }
    }
    e.cluster = std::move(cluster);
    return e;
}

/// Physical projection (<x, w_1>, ..., <x, w_n>). These are the unnormalized
/// coordinates in which the j-th lattice basis vector maps exactly onto the
/// cluster point v_j.
template <class T>
inline Vector project_physical(const Embedding& e, std::span<const T> x) {
    if (x.size() != static_cast<std::size_t>(e.k))
        throw ValidationError("vector dimension does not match superspace");
    Vector out(static_cast<std::size_t>(e.n));
    for (int i = 0; i < e.n; ++i) {
        const Vector& wi = e.w[static_cast<std::size_t>(i)];
        long double s = 0.0L;
        for (std::size_t j = 0; j < x.size(); ++j)
            s += static_cast<long double>(x[j]) * static_cast<long double>(wi[j]);
        out[static_cast<std::size_t>(i)] = static_cast<double>(s);
    }
    return out;
}

inline Vector project_physical(const Embedding& e, const Vector& x) {
    return project_physical<double>(e, std::span<const double>(x));
}

inline Vector project_physical(const Embedding& e, const LatticeVector& x) {
    return project_physical<std::int32_t>(e, std::span<const std::int32_t>(x));
}

/// Component of x orthogonal to the physical subspace:
/// x - sum_i <x, w_i/kappa> w_i/kappa.
inline Vector internal_residual(const Embedding& e, const Vector& x) {
    const Vector p = project_physical(e, x);
    const double kappa2 = e.kappa * e.kappa;
    Vector r = x;
    for (int i = 0; i < e.n; ++i) {
        const double coef = p[static_cast<std::size_t>(i)] / kappa2;
        const Vector& wi = e.w[static_cast<std::size_t>(i)];
        for (std::size_t j = 0; j < r.size(); ++j) r[j] -= coef * wi[j];
    }
    return r;
}

/// Order-insensitive provenance hash of an embedding: dimensions plus the
/// exact bit patterns of the w rows. FNV-1a, stable across platforms.
inline std::uint64_t fingerprint(const Embedding& e) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    auto mix = [&h](const void* data, std::size_t len) {
        const unsigned char* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < len; ++i) {
            h ^= p[i];
            h *= 0x100000001B3ull;
        }
    };
    const std::int32_t dims[2] = {e.n, e.k};
    mix(dims, sizeof(dims));
    for (const Vector& row : e.w) mix(row.data(), row.size() * sizeof(double));
    return h;
}

}  // namespace quasipack
