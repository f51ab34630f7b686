#pragma once

#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "quasipack/enumerate.hpp"
#include "quasipack/errors.hpp"
#include "quasipack/export_io.hpp"
#include "quasipack/group_orbits.hpp"

namespace quasipack {

/// How to map packing points onto the drawing plane.
struct RenderView {
    enum class Projection { direct, axis };

    Projection projection = Projection::direct;
    std::array<double, 3> axis{0.0, 0.0, 1.0};  // unit, used when projection == axis
    double point_radius = 2.5;                  // circle radius in pixels
    int canvas_width = 800;
    int canvas_height = 800;
    double scale = 0.0;  // pixels per unit; 0 selects a deterministic auto fit
};

/// Rotation axis of the order-5 icosahedral generator: the unit solution of
/// a u = u, sign fixed so the first nonzero coordinate is positive. This is
/// the viewing direction for axis projections of three-dimensional packings.
inline std::array<double, 3> fivefold_axis(const GeneratorSet& gens) {
    if (gens.kind != GroupKind::icosahedral)
        throw ValidationError("fivefold axis requires the icosahedral group");
    const Matrix& a = gens.generators[0];
    // (a - I) u = 0: the fixed line is orthogonal to two independent rows of
    // a - I, so a cross product of rows recovers it
    double m[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = a.at(i, j) - (i == j ? 1.0 : 0.0);
    std::array<double, 3> best{0, 0, 0};
    double best_norm = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const std::array<double, 3> c = {m[i][1] * m[j][2] - m[i][2] * m[j][1],
                                             m[i][2] * m[j][0] - m[i][0] * m[j][2],
                                             m[i][0] * m[j][1] - m[i][1] * m[j][0]};
            const double nn = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
            if (nn > best_norm) {
                best_norm = nn;
                best = c;
            }
        }
    if (best_norm < 1e-9) throw ValidationError("generator has no one-dimensional fixed space");
    for (double& c : best) c /= best_norm;
    for (double c : best) {
        if (c > 1e-9) break;
        if (c < -1e-9) {
            for (double& x : best) x = -x;
            break;
        }
    }
    // defining property check
    Vector u{best[0], best[1], best[2]};
    Vector au = a.apply(u);
    for (int i = 0; i < 3; ++i)
        if (std::abs(au[static_cast<std::size_t>(i)] - u[static_cast<std::size_t>(i)]) > 1e-9)
            throw ValidationError("generator has no one-dimensional fixed space");
    return best;
}

namespace detail {

/// Deterministic orthonormal in-plane basis {b1, b2} completing the axis:
/// Gram-Schmidt applied to the axis followed by the global x, y (z) axes,
/// skipping candidates that are nearly parallel to vectors already chosen.
inline void plane_basis(const std::array<double, 3>& axis, std::array<double, 3>& b1,
                        std::array<double, 3>& b2) {
    const std::array<std::array<double, 3>, 3> candidates = {
        {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}};
    std::vector<std::array<double, 3>> basis{axis};
    for (const auto& cand : candidates) {
        if (basis.size() == 3) break;
        std::array<double, 3> v = cand;
        for (const auto& b : basis) {
            const double d = v[0] * b[0] + v[1] * b[1] + v[2] * b[2];
            for (int i = 0; i < 3; ++i) v[static_cast<std::size_t>(i)] -= d * b[static_cast<std::size_t>(i)];
        }
        const double nn = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        if (nn < 1e-6) continue;
        for (double& c : v) c /= nn;
        basis.push_back(v);
    }
    if (basis.size() < 3) throw ValidationError("axis basis construction failed");
    b1 = basis[1];
    b2 = basis[2];
}

}  // namespace detail

/// Maps the packing's physical points onto the drawing plane: identity for
/// two-dimensional packings, coordinates along the orthonormal pair
/// completing the axis for three-dimensional ones.
inline std::vector<std::array<double, 2>> project_to_plane(const Packing& p,
                                                           const RenderView& view) {
    std::vector<std::array<double, 2>> out;
    out.reserve(p.points.size());
    if (view.projection == RenderView::Projection::direct) {
        if (p.n != 2) throw ValidationError("direct rendering requires a two-dimensional packing");
        for (const PackingPoint& pt : p.points) out.push_back({pt.physical[0], pt.physical[1]});
        return out;
    }
    if (p.n != 3) throw ValidationError("axis rendering requires a three-dimensional packing");
    const double an = std::sqrt(view.axis[0] * view.axis[0] + view.axis[1] * view.axis[1] +
                                view.axis[2] * view.axis[2]);
    if (std::abs(an - 1.0) > 1e-9) throw ValidationError("projection axis must be unit length");
    std::array<double, 3> b1{}, b2{};
    detail::plane_basis(view.axis, b1, b2);
    for (const PackingPoint& pt : p.points) {
        const Vector& q = pt.physical;
        out.push_back({q[0] * b1[0] + q[1] * b1[1] + q[2] * b1[2],
                       q[0] * b2[0] + q[1] * b2[1] + q[2] * b2[2]});
    }
    return out;
}

/// Renders a packing as a static SVG scatter plot, one filled circle per
/// point, origin at the canvas center, y axis pointing up. Output bytes are
/// a pure function of the inputs.
inline void render_svg(const Packing& p, const RenderView& view, std::ostream& os) {
    const auto pts = project_to_plane(p, view);
    double scale = view.scale;
    if (scale <= 0.0) {
        double rmax = 0.0;
        for (const auto& q : pts) rmax = std::max(rmax, std::hypot(q[0], q[1]));
        scale = rmax > 0.0
                    ? 0.45 * static_cast<double>(std::min(view.canvas_width, view.canvas_height)) /
                          rmax
                    : 1.0;
    }
    const double cx = 0.5 * view.canvas_width;
    const double cy = 0.5 * view.canvas_height;

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << view.canvas_width
       << "\" height=\"" << view.canvas_height << "\" viewBox=\"0 0 " << view.canvas_width << " "
       << view.canvas_height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto& q : pts) {
        os << "<circle cx=\"" << detail::format_double(cx + q[0] * scale) << "\" cy=\""
           << detail::format_double(cy - q[1] * scale) << "\" r=\""
           << detail::format_double(view.point_radius) << "\" fill=\"black\"/>\n";
    }
    os << "</svg>\n";
}

inline void render_svg(const Packing& p, const RenderView& view,
                       const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + path.string());
    render_svg(p, view, out);
    out.flush();
    if (!out) throw Error("write failed: " + path.string());
}

}  // namespace quasipack
