#pragma once

#include <cmath>
#include <cstdint>

#include "quasipack/config.hpp"
#include "quasipack/quasipack.hpp"
#include "quasipack/rng.hpp"

namespace qptest {

inline constexpr double tau = quasipack::golden_ratio;

/// Fibonacci chain configuration: inversion shells {1} and {tau}, so the
/// single superspace row is (1, tau).
inline quasipack::ClusterSpec fibonacci_spec() {
    quasipack::ClusterSpec s;
    s.group = quasipack::GroupKind::linear;
    s.shells = {{1.0}, {tau}};
    return s;
}

/// Three-scale linear chain, superspace row (1, tau, tau^2).
inline quasipack::ClusterSpec linear3_spec() {
    quasipack::ClusterSpec s;
    s.group = quasipack::GroupKind::linear;
    s.shells = {{1.0}, {tau}, {tau * tau}};
    return s;
}

/// Single-shell decagon (n=2, k=5).
inline quasipack::ClusterSpec decagon_spec() {
    quasipack::ClusterSpec s;
    s.group = quasipack::GroupKind::dihedral;
    s.m = 5;
    s.shells = {{1.0, 0.0}};
    return s;
}

/// Two-shell decagonal cluster (n=2, k=10). The strip anchor of magnitude
/// 0.3 per coordinate (signs follow the reference orientation of the half
/// points) reproduces the stored reference fragment.
inline quasipack::ClusterSpec decagonal_two_shell_spec(bool with_offset = true) {
    quasipack::ClusterSpec s;
    s.group = quasipack::GroupKind::dihedral;
    s.m = 5;
    s.shells = {{1.1, 1.3}, {1.0, 0.0}};
    if (with_offset)
        s.offset = {0.3, 0.3, -0.3, -0.3, 0.3, -0.3, -0.3, 0.3, 0.3, -0.3};
    return s;
}

/// Three-shell icosahedral cluster (n=3, k=31): icosahedron, dodecahedron
/// and icosidodecahedron shells.
inline quasipack::ClusterSpec icosahedral_three_shell_spec() {
    quasipack::ClusterSpec s;
    s.group = quasipack::GroupKind::icosahedral;
    const double r1 = 1.0 / std::sqrt(2.0 + tau);
    const double r2 = 2.0 / std::sqrt(3.0);
    s.shells = {{r1, r1 * tau, 0.0}, {r2, r2, r2}, {3.0, 0.0, 0.0}};
    return s;
}

}  // namespace qptest
