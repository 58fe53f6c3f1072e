#include <doctest.h>

#include "whitefox/ideals.hpp"
#include "whitefox/textio.hpp"

using namespace wf;

namespace {

Laurent X(const std::string& s, i64 p) { return parse_laurent(s, CoeffRing::prime_field(p), 'x'); }

Laurent xn_minus_1(i64 n, i64 p) {
    Laurent f = Laurent::monomial(CoeffRing::prime_field(p), 1, n);
    f.add_term(0, -1);
    return f;
}

// Irreducibility oracle: no monic divisor of degree 1..deg-1 at all.
// Divisors with zero constant term are skipped: they cannot divide a
// polynomial with nonzero constant term, which all divisors of x^n - 1 have.
bool irreducible_oracle(const Laurent& f, i64 p) {
    const CoeffRing field = CoeffRing::prime_field(p);
    const i64 deg = f.max_exp();
    for (i64 d = 1; d < deg; ++d) {
        std::vector<i64> digits(static_cast<size_t>(d), 0);
        for (;;) {
            Laurent g = Laurent::monomial(field, 1, d);
            for (size_t i = 0; i < digits.size(); ++i) g.add_term(static_cast<i64>(i), digits[i]);
            if (g.coeff(0) != 0 && laurent_divmod(f, g).second.is_zero()) return false;
            size_t i = 0;
            while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
            if (i == digits.size()) break;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("factor_xn_minus_1: worked factorizations") {
    // n=6, p=2: (x+1)^2 (x^2+x+1)^2.
    auto f62 = factor_xn_minus_1(6, 2);
    REQUIRE(f62.size() == 2);
    CHECK(f62[0].factor == X("x+1", 2));
    CHECK(f62[0].multiplicity == 2);
    CHECK(f62[1].factor == X("x^2+x+1", 2));
    CHECK(f62[1].multiplicity == 2);

    // n=6, p=3: (x-1)^3 (x+1)^3.
    auto f63 = factor_xn_minus_1(6, 3);
    REQUIRE(f63.size() == 2);
    CHECK(f63[0].factor == X("x+1", 3));
    CHECK(f63[0].multiplicity == 3);
    CHECK(f63[1].factor == X("x-1", 3));  // canonical form x+2
    CHECK(f63[1].multiplicity == 3);

    // n=2, p=2: (x+1)^2 by the Frobenius.
    auto f22 = factor_xn_minus_1(2, 2);
    REQUIRE(f22.size() == 1);
    CHECK(f22[0].factor == X("x+1", 2));
    CHECK(f22[0].multiplicity == 2);
}

TEST_CASE("factor products reconstruct x^n - 1 and factors are irreducible") {
    for (i64 n = 2; n <= 30; ++n) {
        for (const auto& [p, e] : ModFactors::of(n).factors) {
            (void)e;
            auto factors = factor_xn_minus_1(n, p);
            Laurent prod = Laurent::one(CoeffRing::prime_field(p));
            for (const auto& f : factors) {
                for (int m = 0; m < f.multiplicity; ++m) prod *= f.factor;
                CHECK(irreducible_oracle(f.factor, p));
                CHECK(f.factor.coeff(f.factor.max_exp()) == 1);  // monic
            }
            CHECK(prod == xn_minus_1(n, p));
        }
    }
}

TEST_CASE("squarefree exactly when p does not divide n") {
    // gcd(f, f') = 1 iff p does not divide n; checked structurally through
    // the factor multiplicities.
    for (i64 n = 2; n <= 20; ++n) {
        for (i64 p : {2, 3, 5, 7}) {
            auto factors = factor_xn_minus_1(n, p);
            bool squarefree = true;
            for (const auto& f : factors) squarefree = squarefree && f.multiplicity == 1;
            CHECK(squarefree == (n % p != 0));
        }
    }
}

TEST_CASE("enumerate_max_ideal_candidates: exact sets") {
    auto c6 = enumerate_max_ideal_candidates(6);
    REQUIRE(c6.size() == 4);
    CHECK(c6[0].p == 2);
    CHECK(c6[0].omega == X("x+1", 2));
    CHECK(c6[1].p == 2);
    CHECK(c6[1].omega == X("x^2+x+1", 2));
    CHECK(c6[2].p == 3);
    CHECK(c6[2].omega == X("x+1", 3));
    CHECK(c6[3].p == 3);
    CHECK(c6[3].omega == X("x-1", 3));

    auto c2 = enumerate_max_ideal_candidates(2);
    REQUIRE(c2.size() == 1);
    CHECK(c2[0].p == 2);
    CHECK(c2[0].omega == X("x+1", 2));

    auto c4 = enumerate_max_ideal_candidates(4);
    REQUIRE(c4.size() == 1);
    CHECK(c4[0].p == 2);
    CHECK(c4[0].omega == X("x+1", 2));

    // Candidate count is the sum over p | n of distinct factor counts, and
    // candidates are pairwise distinct.
    for (i64 n = 2; n <= 20; ++n) {
        auto cands = enumerate_max_ideal_candidates(n);
        size_t expected = 0;
        for (const auto& [p, e] : ModFactors::of(n).factors) {
            (void)e;
            expected += factor_xn_minus_1(n, p).size();
        }
        CHECK(cands.size() == expected);
        for (size_t i = 0; i < cands.size(); ++i)
            for (size_t j = i + 1; j < cands.size(); ++j)
                CHECK((cands[i].p != cands[j].p || !(cands[i].omega == cands[j].omega)));
    }
}
