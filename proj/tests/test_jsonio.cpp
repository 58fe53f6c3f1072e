#include <doctest.h>

#include "whitefox/jsonio.hpp"
#include "whitefox/randgen.hpp"

using namespace wf;

TEST_CASE("matrix json round trips") {
    Rng rng(173);
    // Laurent matrices over each coefficient ring.
    for (const CoeffRing ring : {CoeffRing::integers(), CoeffRing::mod_n(6), CoeffRing::prime_field(3)}) {
        for (int i = 0; i < 30; ++i) {
            Matrix<Laurent> m(ring, 2, 3);
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 3; ++c) m.at(r, c) = random_laurent(rng, ring, 3);
            CHECK(laurent_matrix_from_json(matrix_to_json(m)) == m);
        }
    }
    // Group ring and norm quotient.
    for (int i = 0; i < 30; ++i) {
        Matrix<GroupRingElem> g(7, 2, 2);
        Matrix<NormQuotElem> s(7, 2, 2);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                g.at(r, c) = random_group_ring(rng, 7, 2, 4);
                s.at(r, c) = NormQuotElem::from_group_ring(random_group_ring(rng, 7, 2, 4));
            }
        CHECK(group_matrix_from_json(matrix_to_json(g)) == g);
        CHECK(norm_quot_matrix_from_json(matrix_to_json(s)) == s);
    }
    // Shape mismatches are parse errors.
    json bad = matrix_to_json(Matrix<Laurent>(CoeffRing::mod_n(4), 2, 2));
    bad["rows"] = 3;
    CHECK_THROWS_AS(laurent_matrix_from_json(bad), Error);
}

TEST_CASE("word json round trips, including whitehead blocks") {
    Rng rng(179);
    const ModFactors d = ModFactors::of(12);
    for (int i = 0; i < 50; ++i) {
        ElemWord w = random_word(rng, d, 3, 10);
        ElemWord back = word_from_json(word_to_json(w));
        CHECK(back.k == w.k);
        CHECK(back.ring == w.ring);
        REQUIRE(back.size() == w.size());
        CHECK(back.evaluate() == w.evaluate());
        for (size_t o = 0; o < w.ops.size(); ++o) {
            CHECK(back.ops[o].kind == w.ops[o].kind);
            CHECK(back.ops[o].side == w.ops[o].side);
            CHECK(back.ops[o].i == w.ops[o].i);
            CHECK(back.ops[o].j == w.ops[o].j);
        }
    }
}

TEST_CASE("complex json round trips with presentation") {
    FoxComplex c = stabilize_complex(build_complex(standard_presentation(6)), 1);
    FoxComplex back = complex_from_json(complex_to_json(c));
    CHECK(back.n == c.n);
    CHECK(back.d2 == c.d2);
    CHECK(back.d1 == c.d1);
    REQUIRE(back.pres.has_value());
    CHECK(build_complex(*back.pres).d2 == c.d2);
}
