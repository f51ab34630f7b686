#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "quasipack/oracle.hpp"
#include "quasipack/rng.hpp"
#include "test_util.hpp"

using namespace quasipack;

TEST_CASE("interval oracle: fibonacci hand cases") {
    const Pipeline p = build_pipeline(qptest::fibonacci_spec());

    CHECK(lp_strip_membership(p.emb, LatticeVector{0, 0}, 0.0));
    // feasible t interval [1 - 0.5, 1 + 0.5] intersect [0.5/tau, 1.5/tau]
    CHECK(lp_strip_membership(p.emb, LatticeVector{1, 1}, 0.0));
    // [1.5, 2.5] intersect [-0.5/tau, 0.5/tau] is empty
    CHECK_FALSE(lp_strip_membership(p.emb, LatticeVector{2, 0}, 0.0));
}

TEST_CASE("lp oracle: zero vector is always a member") {
    for (const ClusterSpec& spec : {qptest::decagon_spec(), qptest::decagonal_two_shell_spec(false)}) {
        const Pipeline p = build_pipeline(spec);
        CHECK(lp_strip_membership(p.emb, LatticeVector(static_cast<std::size_t>(p.emb.k), 0), 0.0));
    }
    const Pipeline ico = build_pipeline(qptest::icosahedral_three_shell_spec());
    CHECK(lp_strip_membership(ico.emb, LatticeVector(31, 0), 0.0));
}

TEST_CASE("lp oracle: monotone in the tolerance") {
    const Pipeline p = build_pipeline(qptest::decagon_spec());
    detail::SplitMix64 rng(101);
    LatticeVector x(5);
    for (int trial = 0; trial < 300; ++trial) {
        for (auto& c : x) c = static_cast<std::int32_t>(rng.uniform_int(-8, 8));
        const bool t0 = lp_strip_membership(p.emb, x, 0.0);
        const bool t1 = lp_strip_membership(p.emb, x, 1e-6);
        const bool t2 = lp_strip_membership(p.emb, x, 1e-3);
        if (t0) CHECK(t1);
        if (t1) CHECK(t2);
    }
}

TEST_CASE("oracle rejects mismatched input dimensions") {
    const Pipeline p = build_pipeline(qptest::fibonacci_spec());
    CHECK_THROWS_AS(lp_strip_membership(p.emb, LatticeVector{1}, 0.0), ValidationError);
}

TEST_CASE("agreement: fibonacci, 10^4 samples, no out-of-band disagreement") {
    const Pipeline p = build_pipeline(qptest::fibonacci_spec());
    const AgreementReport rep = agreement_report(p.cs, p.emb, 10000, 10, 42);
    CHECK(rep.samples == 10000);
    CHECK(rep.out_of_band_disagreements == 0);
    CHECK(rep.agreements + rep.disagreements == rep.samples);
}

TEST_CASE("agreement: single-shell decagon, 10^4 samples") {
    const Pipeline p = build_pipeline(qptest::decagon_spec());
    const AgreementReport rep = agreement_report(p.cs, p.emb, 10000, 10, 42);
    CHECK(rep.out_of_band_disagreements == 0);
}

TEST_CASE("agreement with a strip anchor") {
    ClusterSpec spec = qptest::decagonal_two_shell_spec(true);
    const Pipeline p = build_pipeline(spec);
    const AgreementReport rep = agreement_report(p.cs, p.emb, 3000, 4, 7);
    CHECK(rep.out_of_band_disagreements == 0);
}

TEST_CASE("agreement across other dihedral families") {
    // octagonal two-shell
    ClusterSpec oct;
    oct.group = GroupKind::dihedral;
    oct.m = 4;
    oct.shells = {{1.0, 0.0}, {0.6, 1.1}};
    const Pipeline po = build_pipeline(oct);
    CHECK(agreement_report(po.cs, po.emb, 4000, 6, 17).out_of_band_disagreements == 0);

    // dodecagonal: half-integer matrix entries put some integer vectors
    // exactly on the window boundary; those must be classified as band
    // cases, never as out-of-band disagreements
    ClusterSpec dod;
    dod.group = GroupKind::dihedral;
    dod.m = 6;
    dod.shells = {{1.0, 0.0}, {0.9, 0.4}};
    const Pipeline pd = build_pipeline(dod);
    const AgreementReport rep = agreement_report(pd.cs, pd.emb, 4000, 5, 17);
    CHECK(rep.out_of_band_disagreements == 0);
    CHECK(rep.boundary_band_cases > 0);
}

TEST_CASE("agreement determinism: identical seed, identical report") {
    const Pipeline p = build_pipeline(qptest::decagon_spec());
    const AgreementReport a = agreement_report(p.cs, p.emb, 2000, 8, 1234);
    const AgreementReport b = agreement_report(p.cs, p.emb, 2000, 8, 1234);
    CHECK(a.to_string() == b.to_string());
    const AgreementReport c = agreement_report(p.cs, p.emb, 2000, 8, 99);
    CHECK(a.agreements + a.disagreements == c.agreements + c.disagreements);
}

TEST_CASE("icosahedral spot check: determinant route matches the oracle") {
    const Pipeline p = build_pipeline(qptest::icosahedral_three_shell_spec());

    // members: points found by the search itself
    EnumerationLimits lim;
    lim.max_points = 40;
    const Packing pack = enumerate_packing(p.cs, p.emb, lim, 2);
    int members = 0;
    for (const PackingPoint& pt : pack.points) {
        const bool slow = lp_strip_membership(p.emb, pt.lattice, 0.0);
        if (!slow) CHECK(near_strip_boundary(p.cs, pt.lattice));
        members += slow;
    }
    CHECK(members > 30);

    // random vectors: virtually all outside; both deciders must agree
    detail::SplitMix64 rng(5);
    LatticeVector x(31);
    for (int trial = 0; trial < 150; ++trial) {
        for (auto& c : x) c = static_cast<std::int32_t>(rng.uniform_int(-1, 1));
        const bool fast = in_strip(p.cs, x);
        const bool slow = lp_strip_membership(p.emb, x, 0.0);
        if (fast != slow) CHECK(near_strip_boundary(p.cs, x));
    }
}
