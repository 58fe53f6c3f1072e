#include <doctest.h>

#include "whitefox/certificates.hpp"
#include "whitefox/randgen.hpp"
#include "whitefox/textio.hpp"

using namespace wf;

namespace {

// One representative certificate per kind, in a deterministic family.
std::vector<json> representative_certs(Rng& rng) {
    std::vector<json> certs;

    // factorization
    const ModFactors d6 = ModFactors::of(6);
    ElemWord w = random_word(rng, d6, 2, 8);
    Matrix<Laurent> e = w.evaluate();
    certs.push_back(make_factorization_cert(6, e, factor_det_one(e, d6)));

    // snf
    const CoeffRing f3 = CoeffRing::prime_field(3);
    Matrix<Laurent> a(f3, 3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a.at(i, j) = random_laurent(rng, f3, 2, 3);
    certs.push_back(make_snf_cert(3, a, snf(a)));

    // reduction
    const CoeffRing z4 = CoeffRing::mod_n(4);
    const Laurent alpha = parse_laurent("1+2*t", z4);
    ElemWord lw = random_word(rng, ModFactors::of(4), 2, 5);
    ElemWord rw = random_word(rng, ModFactors::of(4), 2, 5);
    Matrix<Laurent> b = lw.evaluate() * pad_identity(Matrix<Laurent>::diagonal(z4, {alpha}), 1) * rw.evaluate();
    StableVerdict v = decide_scalar_stable_equiv(alpha, b);
    REQUIRE(v.kind == StableVerdict::Kind::Reduced);
    certs.push_back(make_reduction_cert(alpha, b, v));

    // iso-witness
    const CoeffRing r5 = CoeffRing::mod_n(5);
    Matrix<Laurent> ia(r5, 1, 1), ib(r5, 1, 1);
    ia.at(0, 0) = parse_laurent("t+4", r5);
    ib.at(0, 0) = parse_laurent("4*t^4+t^3", r5);
    IsoWitness iw{Matrix<Laurent>(CoeffRing::integers(), 1, 1), Matrix<NormQuotElem>::identity(5, 1)};
    iw.c_lift.at(0, 0) = parse_laurent("-t^3", CoeffRing::integers());
    REQUIRE(verify_iso_witness(ia, ib, iw).ok);
    certs.push_back(make_iso_witness_cert(ia, ib, iw));

    // chain-map
    certs.push_back(make_chain_map_cert(realize_unit(5, 3)));

    // ext3
    const GroupRingElem tau = unit_multiplier(5, 2);
    CocyclePair c{tau * parse_group_ring("x-1", 5), tau * parse_group_ring("t-1", 5)};
    certs.push_back(make_ext3_cert(c, ext3_class(c)));

    // swan
    SwanModule sm = build_swan_module(5, [&] {
        Matrix<Laurent> m(r5, 1, 1);
        m.at(0, 0) = parse_laurent("2", r5);
        return m;
    }());
    auto unit = find_swan_unit(5, 2, SearchConfig{4, 3, 3});
    REQUIRE(unit.has_value());
    Matrix<NormQuotElem> dl(5, 1, 1);
    dl.at(0, 0) = unit->element;
    SwanReport srep = verify_swan_freeness(sm, dl);
    REQUIRE(srep.ok);
    certs.push_back(make_swan_cert(sm, dl, *srep.d_inverse));

    // ideals
    certs.push_back(make_ideals_cert(6));

    return certs;
}

}  // namespace

TEST_CASE("every emitted certificate verifies") {
    Rng rng(127);
    for (const json& cert : representative_certs(rng)) {
        VerifyResult r = verify_envelope(cert);
        const std::string label = cert.at("kind").get<std::string>() + ": " + r.message;
        CHECK_MESSAGE(r.ok, label);
    }
}

TEST_CASE("single-coefficient mutations are rejected for every kind") {
    Rng rng(131);
    auto certs = representative_certs(rng);
    auto pick = [&rng](i64 bound) { return bound <= 0 ? 0 : rand_below(rng, bound); };
    for (const json& cert : certs) {
        auto sites = mutation_sites(cert);
        REQUIRE(!sites.empty());
        int rejected = 0;
        const int trials = 50;
        for (int i = 0; i < trials; ++i) {
            const MutationSite& site = sites[static_cast<size_t>(rand_below(rng, static_cast<i64>(sites.size())))];
            json mutated = mutate_at(cert, site, pick);
            REQUIRE(mutated != cert);
            bool ok;
            try {
                ok = verify_envelope(mutated).ok;
            } catch (const Error&) {
                ok = false;  // malformed mutants count as rejected
            }
            if (!ok) ++rejected;
        }
        CHECK_MESSAGE(rejected == trials, cert.at("kind").get<std::string>());
    }
}

TEST_CASE("closed loop: 100 random emissions per kind all verify") {
    Rng rng(137);
    auto check_ok = [](const json& cert) {
        VerifyResult r = verify_envelope(cert);
        const std::string label = cert.at("kind").get<std::string>() + ": " + r.message;
        CHECK_MESSAGE(r.ok, label);
    };

    for (int i = 0; i < 100; ++i) {
        // factorization over a rotating modulus
        const i64 ns[] = {2, 3, 4, 6, 9, 12};
        const ModFactors d = ModFactors::of(ns[i % 6]);
        ElemWord w = random_word(rng, d, 2 + (i % 2), 8);
        Matrix<Laurent> e = w.evaluate();
        check_ok(make_factorization_cert(d.n, e, factor_det_one(e, d)));

        // snf
        const i64 ps[] = {2, 3, 5};
        const CoeffRing field = CoeffRing::prime_field(ps[i % 3]);
        const int k = 2 + (i % 3);
        Matrix<Laurent> a(field, k, k);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) a.at(r, c) = random_laurent(rng, field, 2, 3);
        check_ok(make_snf_cert(field.mod, a, snf(a)));

        // reduction (constructed equivalent instance)
        const i64 rn = (i % 2 == 0) ? 4 : 9;
        const ModFactors rd = ModFactors::of(rn);
        const CoeffRing ring = CoeffRing::mod_n(rn);
        const Laurent alpha = random_unit(rng, rd, 2).element;
        Matrix<Laurent> blk = pad_identity(Matrix<Laurent>::diagonal(ring, {alpha}), 1);
        Matrix<Laurent> b = random_word(rng, rd, 2, 5).evaluate() * blk * random_word(rng, rd, 2, 5).evaluate();
        StableVerdict v = decide_scalar_stable_equiv(alpha, b);
        REQUIRE(v.kind == StableVerdict::Kind::Reduced);
        check_ok(make_reduction_cert(alpha, b, v));

        // chain-map (every unit of a rotating order)
        const i64 cn = 2 + (i % 11);
        i64 cw = 1 + rand_below(rng, cn - 1);
        i64 gx, gy;
        while (ext_gcd(cw, cn, gx, gy) != 1) cw = 1 + rand_below(rng, cn - 1);
        check_ok(make_chain_map_cert(realize_unit(cn, cw)));

        // ext3 on a random cocycle
        const i64 en = 3 + (i % 10);
        GroupRingElem a1 = random_group_ring(rng, en, 2, 4);
        GroupRingElem a2 = GroupRingElem::from_laurent(en, random_laurent(rng, CoeffRing::integers(), 2, 3));
        const GroupRingElem xm1 = parse_group_ring("x-1", en);
        const GroupRingElem tm1 = parse_group_ring("t-1", en);
        CocyclePair c{a1 * xm1, (a1 + a2 * GroupRingElem::norm_element(en)) * tm1};
        check_ok(make_ext3_cert(c, ext3_class(c)));

        // ideals over a rotating order
        check_ok(make_ideals_cert(2 + (i % 11)));
    }

    // iso-witness and swan loop on unit scalars (smaller count: each case
    // runs a bounded search).
    for (int i = 0; i < 100; ++i) {
        const i64 n = 5;
        const CoeffRing ring = CoeffRing::mod_n(n);
        const ModFactors d = ModFactors::of(n);
        Matrix<Laurent> ia(ring, 1, 1);
        ia.at(0, 0) = random_laurent(rng, ring, 2, 3);
        const i64 j = rand_below(rng, 7) - 3;
        const i64 sign = rand_below(rng, 2) == 0 ? 1 : -1;
        Matrix<Laurent> ib = ia.scaled(Laurent::monomial(ring, sign, j));
        IsoWitness w{Matrix<Laurent>(CoeffRing::integers(), 1, 1), Matrix<NormQuotElem>::identity(n, 1)};
        w.c_lift.at(0, 0) = Laurent::monomial(CoeffRing::integers(), sign, j);
        REQUIRE(verify_iso_witness(ia, ib, w).ok);
        check_ok(make_iso_witness_cert(ia, ib, w));

        const i64 rs[] = {1, 2, 3, 4};
        const i64 r = rs[i % 4];
        Matrix<Laurent> sa(ring, 1, 1);
        sa.at(0, 0) = Laurent(ring, r);
        SwanModule sm = build_swan_module(n, sa);
        auto unit = find_swan_unit(n, r, SearchConfig{4, 3, 3});
        REQUIRE(unit.has_value());
        Matrix<NormQuotElem> dl(n, 1, 1);
        dl.at(0, 0) = unit->element;
        SwanReport rep = verify_swan_freeness(sm, dl);
        REQUIRE(rep.ok);
        check_ok(make_swan_cert(sm, dl, *rep.d_inverse));
        (void)d;
    }
}

TEST_CASE("unknown kinds and malformed envelopes are parse errors") {
    json bad;
    bad["kind"] = "nonsense";
    bad["claim"] = json::object();
    bad["payload"] = json::object();
    CHECK_THROWS_AS(verify_envelope(bad), Error);
    CHECK_THROWS_AS(verify_envelope(json::object()), Error);
}
