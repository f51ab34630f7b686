#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "quasipack/embedding.hpp"
#include "quasipack/rng.hpp"
#include "test_util.hpp"

using namespace quasipack;

namespace {

Embedding make_embedding(const ClusterSpec& spec) {
    return build_pipeline(spec).emb;
}

Vector random_vector(detail::SplitMix64& rng, std::size_t k, double span) {
    Vector x(k);
    for (double& c : x) c = (2.0 * rng.uniform() - 1.0) * span;
    return x;
}

}  // namespace

TEST_CASE("two-shell decagonal embedding: orthogonal rows, equal norms") {
    const Embedding e = make_embedding(qptest::decagonal_two_shell_spec(false));
    REQUIRE(e.k == 10);
    const double kappa2 = e.kappa * e.kappa;
    CHECK(std::abs(dot(e.w[0], e.w[1])) < 1e-9 * kappa2);
    CHECK(norm(e.w[0]) == Catch::Approx(e.kappa).margin(1e-9 * e.kappa));
    CHECK(norm(e.w[1]) == Catch::Approx(e.kappa).margin(1e-9 * e.kappa));
}

TEST_CASE("single-shell decagon: kappa^2 = 2.5") {
    // independent route: kappa^2 is the sum of squared first coordinates of
    // the five kept decagon vertices, i.e. a plain cosine sum
    double expect = 0.0;
    for (int i = 0; i < 5; ++i) {
        const double c = std::cos(M_PI / 5.0 * i);
        expect += c * c;
    }
    CHECK(expect == Catch::Approx(2.5).margin(1e-12));

    const Embedding e = make_embedding(qptest::decagon_spec());
    REQUIRE(e.k == 5);
    CHECK(e.kappa * e.kappa == Catch::Approx(2.5).margin(1e-12));
}

TEST_CASE("icosahedral three-shell embedding is valid in R^31") {
    const Embedding e = make_embedding(qptest::icosahedral_three_shell_spec());
    REQUIRE(e.n == 3);
    REQUIRE(e.k == 31);
    const double kappa2 = e.kappa * e.kappa;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double g = dot(e.w[static_cast<std::size_t>(i)], e.w[static_cast<std::size_t>(j)]);
            const double expect = (i == j) ? kappa2 : 0.0;
            CHECK(std::abs(g - expect) < 1e-9 * kappa2);
        }
}

TEST_CASE("column j of the rows equals the cluster point v_j exactly") {
    const Embedding e = make_embedding(qptest::decagonal_two_shell_spec(false));
    for (int j = 0; j < e.k; ++j)
        for (int i = 0; i < e.n; ++i)
            CHECK(e.w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                  e.cluster.half_points[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
}

TEST_CASE("embedding rejects malformed clusters") {
    Cluster bad;
    bad.n = 2;
    bad.half_points = {{1.0, 0.0}, {0.5, 0.5}, {0.0, 1.0}};
    bad.shell_boundaries = {{0, 3}};
    CHECK_THROWS_AS(build_embedding(bad), EmbeddingInvalid);

    Cluster empty;
    empty.n = 2;
    CHECK_THROWS_AS(build_embedding(empty), ValidationError);

    Cluster thin;  // k < n + 1
    thin.n = 2;
    thin.half_points = {{1.0, 0.0}};
    thin.shell_boundaries = {{0, 1}};
    CHECK_THROWS_AS(build_embedding(thin), ValidationError);
}

TEST_CASE("project_physical: zero, basis exactness, linearity") {
    const Embedding e = make_embedding(qptest::decagonal_two_shell_spec(false));
    const std::size_t k = static_cast<std::size_t>(e.k);

    const Vector zero(k, 0.0);
    for (double c : project_physical(e, zero)) CHECK(c == 0.0);

    // basis vectors map to cluster points with zero floating-point error
    for (std::size_t j = 0; j < k; ++j) {
        Vector ej(k, 0.0);
        ej[j] = 1.0;
        const Vector p = project_physical(e, ej);
        CHECK(p[0] == e.cluster.half_points[j][0]);
        CHECK(p[1] == e.cluster.half_points[j][1]);
    }

    Vector e12(k, 0.0);
    e12[0] = 1.0;
    e12[1] = 1.0;
    const Vector p12 = project_physical(e, e12);
    const Vector& v1 = e.cluster.half_points[0];
    const Vector& v2 = e.cluster.half_points[1];
    CHECK(p12[0] == Catch::Approx(v1[0] + v2[0]).margin(1e-12));
    CHECK(p12[1] == Catch::Approx(v1[1] + v2[1]).margin(1e-12));
}

TEST_CASE("internal_residual: annihilates rows, orthogonality, reconstruction") {
    const Embedding e = make_embedding(qptest::decagonal_two_shell_spec(false));
    const double kappa2 = e.kappa * e.kappa;

    const Vector r1 = internal_residual(e, e.w[0]);
    CHECK(norm(r1) < 1e-10 * e.kappa);

    detail::SplitMix64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Vector x = random_vector(rng, static_cast<std::size_t>(e.k), 10.0);
        const Vector r = internal_residual(e, x);
        for (int i = 0; i < e.n; ++i)
            CHECK(std::abs(dot(r, e.w[static_cast<std::size_t>(i)])) <
                  1e-9 * kappa2 * (norm(x) + 1.0));

        // residual plus reconstructed physical part recovers x
        const Vector p = project_physical(e, x);
        Vector recon = r;
        for (int i = 0; i < e.n; ++i)
            for (std::size_t j = 0; j < recon.size(); ++j)
                recon[j] += p[static_cast<std::size_t>(i)] / kappa2 *
                            e.w[static_cast<std::size_t>(i)][j];
        for (std::size_t j = 0; j < recon.size(); ++j)
            CHECK(recon[j] == Catch::Approx(x[j]).margin(1e-10 * (norm(x) + 1.0)));

        // idempotence
        const Vector rr = internal_residual(e, r);
        for (std::size_t j = 0; j < rr.size(); ++j)
            CHECK(rr[j] == Catch::Approx(r[j]).margin(1e-9 * (norm(r) + 1.0)));

        // Pythagoras with the unnormalized projection
        double pphys2 = 0.0;
        for (double c : p) pphys2 += c * c / kappa2;
        CHECK(norm_squared(x) ==
              Catch::Approx(pphys2 + norm_squared(r)).epsilon(1e-9));
    }
}

TEST_CASE("fingerprint distinguishes embeddings and is stable") {
    const Embedding a = make_embedding(qptest::decagonal_two_shell_spec(false));
    const Embedding b = make_embedding(qptest::decagon_spec());
    CHECK(fingerprint(a) == fingerprint(a));
    CHECK(fingerprint(a) != fingerprint(b));
}
