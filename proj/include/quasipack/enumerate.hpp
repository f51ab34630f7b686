#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <thread>
#include <unordered_map>
#include <vector>

#include "quasipack/embedding.hpp"
#include "quasipack/errors.hpp"
#include "quasipack/strip.hpp"

namespace quasipack {

/// Stopping rules for lattice enumeration. At least one of max_points and
/// max_physical_radius must be finite; max_coordinate is a safety cap on
/// individual lattice coordinates.
struct EnumerationLimits {
    std::size_t max_points = 100000;
    double max_physical_radius = std::numeric_limits<double>::infinity();
    std::int32_t max_coordinate = 1000000;

    void validate() const {
        if (max_points == 0) throw ValidationError("max_points must be positive");
        if (!(max_physical_radius > 0.0)) throw ValidationError("max_radius must be positive");
        if (max_coordinate <= 0) throw ValidationError("max_coordinate must be positive");
        if (max_points == std::numeric_limits<std::size_t>::max() &&
            std::isinf(max_physical_radius))
            throw ValidationError("either max_points or max_radius must be finite");
    }
};

enum class LimitHit { none, max_points, max_coordinate };

/// One selected lattice point with its physical projection and the membership
/// pattern of its 2k unit-step neighbors. occupancy[2j] refers to x + e_j,
/// occupancy[2j+1] to x - e_j; a set entry means that neighbor lies in the
/// strip (regardless of enumeration limits).
struct PackingPoint {
    LatticeVector lattice;
    Vector physical;
    std::vector<std::uint8_t> occupancy;

    int occupancy_count() const {
        int c = 0;
        for (std::uint8_t b : occupancy) c += b;
        return c;
    }
};

/// The enumerated fragment of the packing, sorted lexicographically by
/// lattice vector. limit_hit records whether a stopping rule truncated the
/// enumeration while selectable points remained.
struct Packing {
    int n = 0;
    int k = 0;
    std::vector<PackingPoint> points;
    std::uint64_t emb_fingerprint = 0;
    LimitHit limit_hit = LimitHit::none;

    bool complete() const { return limit_hit == LimitHit::none; }
};

/// Strip membership of the 2k unit-step neighbors of x. Requires x itself to
/// be a strip member.
inline std::vector<std::uint8_t> occupancy_profile(const StripConstraintSet& cs,
                                                   const LatticeVector& x) {
    if (!in_strip(cs, x)) throw ValidationError("occupancy profile requires a strip member");
    std::vector<std::uint8_t> occ(2 * x.size(), 0);
    LatticeVector y = x;
    for (std::size_t j = 0; j < x.size(); ++j) {
        y[j] = x[j] + 1;
        occ[2 * j] = in_strip(cs, y) ? 1 : 0;
        y[j] = x[j] - 1;
        occ[2 * j + 1] = in_strip(cs, y) ? 1 : 0;
        y[j] = x[j];
    }
    return occ;
}

namespace detail {

struct LatticeHash {
    std::size_t operator()(const LatticeVector& v) const {
        std::uint64_t h = 0xCBF29CE484222325ull;
        for (std::int32_t c : v) {
            h ^= static_cast<std::uint32_t>(c);
            h *= 0x100000001B3ull;
        }
        return static_cast<std::size_t>(h);
    }
};

using MembershipCache = std::unordered_map<LatticeVector, bool, LatticeHash>;

inline void parallel_for(std::size_t count, unsigned threads, auto&& body) {
    if (threads <= 1 || count < 64) {
        body(std::size_t{0}, count);
        return;
    }
    const std::size_t chunk = (count + threads - 1) / threads;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        const std::size_t lo = std::min(count, t * chunk);
        const std::size_t hi = std::min(count, lo + chunk);
        if (lo < hi) pool.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (std::thread& th : pool) th.join();
}

struct RetentionRule {
    const StripConstraintSet& cs;
    const Embedding& emb;
    const EnumerationLimits& limits;

    bool within_box(const LatticeVector& x) const {
        for (std::int32_t c : x)
            if (c > limits.max_coordinate || c < -limits.max_coordinate) return false;
        return true;
    }

    bool within_radius(const LatticeVector& x) const {
        if (std::isinf(limits.max_physical_radius)) return true;
        return norm(project_physical(emb, x)) <= limits.max_physical_radius;
    }
};

inline Packing finalize_packing(const StripConstraintSet& cs, const Embedding& emb,
                                std::vector<LatticeVector> accepted, LimitHit hit,
                                MembershipCache& cache) {
    std::sort(accepted.begin(), accepted.end());

    Packing p;
    p.n = emb.n;
    p.k = emb.k;
    p.emb_fingerprint = fingerprint(emb);
    p.limit_hit = hit;
    p.points.resize(accepted.size());

    auto member = [&cs, &cache](const LatticeVector& v) {
        auto it = cache.find(v);
        if (it != cache.end()) return it->second;
        const bool r = in_strip(cs, v);
        cache.emplace(v, r);
        return r;
    };

    for (std::size_t i = 0; i < accepted.size(); ++i) {
        PackingPoint& pt = p.points[i];
        pt.lattice = std::move(accepted[i]);
        pt.physical = project_physical(emb, pt.lattice);
        pt.occupancy.assign(2 * static_cast<std::size_t>(emb.k), 0);
        LatticeVector y = pt.lattice;
        for (std::size_t j = 0; j < y.size(); ++j) {
            y[j] = pt.lattice[j] + 1;
            pt.occupancy[2 * j] = member(y) ? 1 : 0;
            y[j] = pt.lattice[j] - 1;
            pt.occupancy[2 * j + 1] = member(y) ? 1 : 0;
            y[j] = pt.lattice[j];
        }
    }
    return p;
}

}  // namespace detail

/// Enumerates the strip's lattice points reachable from the origin by unit
/// steps that stay inside the strip, breadth first, level-synchronous.
///
/// A point is retained when it is a strip member, its physical projection is
/// within max_physical_radius, and every coordinate is within max_coordinate.
/// Candidate membership tests of one level may run on several threads; the
/// result is identical for every thread count. max_points truncates in
/// lexicographic order within the level where the cap is reached.
inline Packing enumerate_packing(const StripConstraintSet& cs, const Embedding& emb,
                                 const EnumerationLimits& limits, unsigned threads = 1) {
    limits.validate();
    const std::size_t k = static_cast<std::size_t>(emb.k);
    detail::RetentionRule rule{cs, emb, limits};
    detail::MembershipCache cache;

    LatticeVector origin(k, 0);
    if (!in_strip(cs, origin))
        throw ValidationError("enumeration origin lies outside the strip");
    cache.emplace(origin, true);

    std::vector<LatticeVector> accepted;
    LimitHit hit = LimitHit::none;
    std::vector<LatticeVector> level;
    if (rule.within_box(origin) && rule.within_radius(origin)) {
        accepted.push_back(origin);
        level.push_back(origin);
    }

    // the coordinate-cap flag marks the result partial but does not stop the
    // search: the rest of the box region is still enumerated
    while (!level.empty() && hit != LimitHit::max_points) {
        // gather unvisited neighbor candidates of the current level
        std::vector<LatticeVector> candidates;
        candidates.reserve(level.size() * 2 * k);
        for (const LatticeVector& p : level) {
            LatticeVector q = p;
            for (std::size_t j = 0; j < k; ++j) {
                q[j] = p[j] + 1;
                if (!cache.contains(q)) candidates.push_back(q);
                q[j] = p[j] - 1;
                if (!cache.contains(q)) candidates.push_back(q);
                q[j] = p[j];
            }
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

        std::vector<std::uint8_t> member(candidates.size(), 0);
        detail::parallel_for(candidates.size(), threads, [&](std::size_t lo, std::size_t hi) {
            for (std::size_t i = lo; i < hi; ++i)
                member[i] = in_strip(cs, candidates[i]) ? 1 : 0;
        });

        level.clear();
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            cache.emplace(candidates[i], member[i] != 0);
            if (!member[i]) continue;
            if (!rule.within_radius(candidates[i])) continue;
            if (!rule.within_box(candidates[i])) {
                // an in-strip point inside the requested radius was cut by the
                // coordinate safety cap: the radius region is not fully covered
                if (!std::isinf(limits.max_physical_radius)) hit = LimitHit::max_coordinate;
                continue;
            }
            if (accepted.size() >= limits.max_points) {
                hit = LimitHit::max_points;
                break;
            }
            accepted.push_back(candidates[i]);
            level.push_back(candidates[i]);
        }
    }
    return detail::finalize_packing(cs, emb, std::move(accepted), hit, cache);
}

/// Exhaustive scan of the whole box |x_j| <= max_coordinate, the desk-scale
/// reference enumerator used to validate that breadth-first search misses
/// nothing. Retention matches enumerate_packing exactly.
inline Packing enumerate_box_scan(const StripConstraintSet& cs, const Embedding& emb,
                                  const EnumerationLimits& limits) {
    limits.validate();
    const std::size_t k = static_cast<std::size_t>(emb.k);
    const std::int64_t side = 2 * static_cast<std::int64_t>(limits.max_coordinate) + 1;
    double total = 1.0;
    for (std::size_t j = 0; j < k; ++j) total *= static_cast<double>(side);
    if (total > 2e8) throw ValidationError("box scan volume too large; reduce max_coordinate");

    detail::RetentionRule rule{cs, emb, limits};
    std::vector<LatticeVector> accepted;
    LimitHit hit = LimitHit::none;

    LatticeVector x(k, -limits.max_coordinate);
    while (true) {
        if (in_strip(cs, x) && rule.within_radius(x)) {
            if (accepted.size() >= limits.max_points) {
                hit = LimitHit::max_points;
                break;
            }
            accepted.push_back(x);
        }
        // odometer increment in lexicographic order
        std::size_t j = k;
        while (j > 0) {
            --j;
            if (x[j] < limits.max_coordinate) {
                ++x[j];
                for (std::size_t l = j + 1; l < k; ++l) x[l] = -limits.max_coordinate;
                break;
            }
            if (j == 0) goto done;
        }
    }
done:
    detail::MembershipCache cache;
    return detail::finalize_packing(cs, emb, std::move(accepted), hit, cache);
}

}  // namespace quasipack
