#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "quasipack/oracle.hpp"
#include "quasipack/rng.hpp"
#include "quasipack/strip.hpp"
#include "test_util.hpp"

using namespace quasipack;

namespace {

std::size_t binomial(int n, int r) {
    long double v = 1.0L;
    for (int i = 1; i <= r; ++i) v = v * (n - r + i) / i;
    return static_cast<std::size_t>(v + 0.5L);
}

}  // namespace

TEST_CASE("index_tuples: counts and ordering") {
    CHECK(index_tuples(2, 10).size() == binomial(10, 3));
    CHECK(index_tuples(2, 10).size() == 120);
    CHECK(index_tuples(3, 31).size() == binomial(31, 4));
    CHECK(index_tuples(3, 31).size() == 31465);

    const auto single = index_tuples(1, 2);
    REQUIRE(single.size() == 1);
    CHECK(single[0].indices == std::vector<int>{1, 2});

    const auto t = index_tuples(2, 5);
    REQUIRE(t.size() == 10);
    CHECK(t.front().indices == std::vector<int>{1, 2, 3});
    CHECK(t.back().indices == std::vector<int>{3, 4, 5});
    for (std::size_t i = 1; i < t.size(); ++i) CHECK(t[i - 1].indices < t[i].indices);
    for (const IndexTuple& tt : t) {
        CHECK(tt.indices[0] >= 1);
        CHECK(tt.indices[0] < tt.indices[1]);
        CHECK(tt.indices[1] < tt.indices[2]);
        CHECK(tt.indices[2] <= 5);
    }

    CHECK_THROWS_AS(index_tuples(2, 2), ValidationError);
    CHECK_THROWS_AS(index_tuples(0, 5), ValidationError);
}

TEST_CASE("fibonacci constraint: cofactors and bound") {
    const Pipeline p = build_pipeline(qptest::fibonacci_spec());
    REQUIRE(p.cs.constraints.size() == 1);
    const StripConstraint& c = p.cs.constraints[0];
    CHECK(c.cofactors[0] == Catch::Approx(qptest::tau).margin(1e-12));
    CHECK(c.cofactors[1] == Catch::Approx(-1.0).margin(1e-12));
    CHECK(c.bound == Catch::Approx((1.0 + qptest::tau) / 2.0).margin(1e-12));
    CHECK(c.bound == Catch::Approx(1.3090170).margin(1e-7));
}

TEST_CASE("bound equals the maximum over hypercube vertex sign choices") {
    // re-derive each bound by enumerating alpha in {-1/2, +1/2}^(n+1)
    for (const ClusterSpec& spec :
         {qptest::fibonacci_spec(), qptest::decagon_spec(), qptest::decagonal_two_shell_spec(false)}) {
        const Pipeline p = build_pipeline(spec);
        for (const StripConstraint& c : p.cs.constraints) {
            const std::size_t np1 = c.cofactors.size();
            double best = 0.0;
            for (std::size_t mask = 0; mask < (std::size_t{1} << np1); ++mask) {
                double s = 0.0;
                for (std::size_t j = 0; j < np1; ++j)
                    s += ((mask >> j) & 1 ? 0.5 : -0.5) * c.cofactors[j];
                best = std::max(best, std::abs(s));
            }
            CHECK(c.bound == Catch::Approx(best).epsilon(1e-12));
        }
    }
}

TEST_CASE("repeated-row determinants vanish on every retained constraint") {
    const Pipeline p = build_pipeline(qptest::decagonal_two_shell_spec(false));
    const double scale = std::pow(p.emb.kappa, p.emb.n);
    for (const StripConstraint& c : p.cs.constraints) {
        for (int row = 0; row < p.emb.n; ++row) {
            double s = 0.0;
            for (std::size_t j = 0; j < c.cofactors.size(); ++j)
                s += c.cofactors[j] *
                     p.emb.w[static_cast<std::size_t>(row)]
                            [static_cast<std::size_t>(c.tuple.indices[j] - 1)];
            CHECK(std::abs(s) < 1e-9 * scale);
        }
    }
}

TEST_CASE("two-shell decagonal constraints: all bounds positive, at most C(10,3)") {
    const Pipeline p = build_pipeline(qptest::decagonal_two_shell_spec(false));
    CHECK(p.cs.constraints.size() <= 120);
    for (const StripConstraint& c : p.cs.constraints) CHECK(c.bound > 0.0);
}

TEST_CASE("degenerate tuples are dropped for the icosahedral cluster") {
    const Pipeline p = build_pipeline(qptest::icosahedral_three_shell_spec());
    // coplanar half-point quadruples exist, so some of the 31465 tuples are
    // identically satisfied and must be dropped
    CHECK(p.cs.constraints.size() < 31465);
    CHECK(p.cs.constraints.size() > 30000);
    const double drop_eps = 1e-12 * std::pow(p.emb.kappa, 3);
    for (const StripConstraint& c : p.cs.constraints) CHECK(c.bound >= drop_eps);
}

TEST_CASE("in_strip: membership hand cases") {
    const Pipeline p = build_pipeline(qptest::fibonacci_spec());
    CHECK(in_strip(p.cs, LatticeVector{0, 0}));
    CHECK(in_strip(p.cs, LatticeVector{1, 1}));       // |tau - 1| = 0.618 <= 1.309
    CHECK_FALSE(in_strip(p.cs, LatticeVector{2, 0}));  // |2 tau| = 3.236 > 1.309

    const Pipeline d = build_pipeline(qptest::decagon_spec());
    CHECK(in_strip(d.cs, LatticeVector{0, 0, 0, 0, 0}));
}

TEST_CASE("in_strip symmetry under negation") {
    const Pipeline p = build_pipeline(qptest::decagon_spec());
    detail::SplitMix64 rng(11);
    LatticeVector x(5), nx(5);
    for (int trial = 0; trial < 2000; ++trial) {
        for (std::size_t j = 0; j < 5; ++j) {
            x[j] = static_cast<std::int32_t>(rng.uniform_int(-6, 6));
            nx[j] = -x[j];
        }
        CHECK(in_strip(p.cs, x) == in_strip(p.cs, nx));
    }
}

TEST_CASE("evaluation order is a permutation and does not change the predicate") {
    const Pipeline p = build_pipeline(qptest::decagonal_two_shell_spec(false));
    std::vector<bool> seen(p.cs.constraints.size(), false);
    for (std::size_t i : p.cs.evaluation_order) {
        REQUIRE(i < seen.size());
        CHECK_FALSE(seen[i]);
        seen[i] = true;
    }

    // reference evaluation in canonical order
    detail::SplitMix64 rng(23);
    LatticeVector x(10);
    for (int trial = 0; trial < 500; ++trial) {
        for (auto& c : x) c = static_cast<std::int32_t>(rng.uniform_int(-3, 3));
        bool ref = true;
        for (const StripConstraint& c : p.cs.constraints) {
            double s = 0.0;
            for (std::size_t j = 0; j < c.cofactors.size(); ++j)
                s += c.cofactors[j] * x[static_cast<std::size_t>(c.tuple.indices[j] - 1)];
            if (std::abs(s) > c.bound + StripConstraintSet::boundary_tolerance(c.bound)) {
                ref = false;
                break;
            }
        }
        CHECK(in_strip(p.cs, x) == ref);
    }
}

TEST_CASE("offset strip: anchor membership and effect") {
    // anchored far from the origin, the origin leaves the strip
    const Pipeline centered = build_pipeline(qptest::fibonacci_spec());
    ClusterSpec shifted_spec = qptest::fibonacci_spec();
    shifted_spec.offset = {5.0, 3.0};
    const Pipeline shifted = build_pipeline(shifted_spec);

    CHECK_FALSE(in_strip(shifted.cs, LatticeVector{0, 0}));
    CHECK(in_strip(shifted.cs, LatticeVector{5, 3}));
    // translation equivariance: x in shifted strip iff x - anchor in centered strip
    detail::SplitMix64 rng(3);
    LatticeVector x(2), t(2);
    for (int trial = 0; trial < 500; ++trial) {
        x[0] = static_cast<std::int32_t>(rng.uniform_int(-10, 10));
        x[1] = static_cast<std::int32_t>(rng.uniform_int(-10, 10));
        t[0] = x[0] - 5;
        t[1] = x[1] - 3;
        Vector td{static_cast<double>(t[0]), static_cast<double>(t[1])};
        CHECK(in_strip(shifted.cs, x) == in_strip(centered.cs, td));
    }
}
