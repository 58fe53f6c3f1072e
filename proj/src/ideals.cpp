#include "whitefox/ideals.hpp"

#include <algorithm>

namespace wf {

namespace {

// Enumerates monic polynomials of the given degree over Fp by counting in
// base p over the lower coefficients.
class MonicEnumerator {
public:
    MonicEnumerator(i64 p, i64 degree, CoeffRing ring) : p_(p), degree_(degree), ring_(ring) {
        digits_.assign(static_cast<size_t>(degree), 0);
        done_ = false;
    }

    bool next(Laurent& out) {
        if (done_) return false;
        out = Laurent::monomial(ring_, 1, degree_);
        for (size_t i = 0; i < digits_.size(); ++i) out.add_term(static_cast<i64>(i), digits_[i]);
        // increment
        size_t i = 0;
        while (i < digits_.size()) {
            if (++digits_[i] < p_) break;
            digits_[i] = 0;
            ++i;
        }
        if (i == digits_.size()) done_ = true;
        return true;
    }

private:
    i64 p_;
    i64 degree_;
    CoeffRing ring_;
    std::vector<i64> digits_;
    bool done_ = false;
};

bool poly_less(const Laurent& a, const Laurent& b) {
    const i64 da = a.is_zero() ? -1 : a.max_exp();
    const i64 db = b.is_zero() ? -1 : b.max_exp();
    if (da != db) return da < db;
    for (i64 e = da; e >= 0; --e) {
        if (a.coeff(e) != b.coeff(e)) return a.coeff(e) < b.coeff(e);
    }
    return false;
}

}  // namespace

std::vector<PolyFactor> factor_xn_minus_1(i64 n, i64 p) {
    if (n < 1) fail(Errc::ModulusMismatch, "exponent must be positive");
    const CoeffRing field = CoeffRing::prime_field(p);
    Laurent f = Laurent::monomial(field, 1, n);
    f.add_term(0, -1);

    std::vector<PolyFactor> factors;
    for (i64 d = 1; !f.is_zero() && f.max_exp() > 0 && d <= f.max_exp() / 2; ++d) {
        MonicEnumerator en(p, d, field);
        Laurent g(field);
        while (en.next(g)) {
            // Candidates with zero constant term cannot divide a polynomial
            // with nonzero constant term (and as Laurent divisors they would
            // be unit multiples of lower-degree ones).
            if (g.coeff(0) == 0) continue;
            int mult = 0;
            for (;;) {
                auto [q, r] = laurent_divmod(f, g);
                if (!r.is_zero()) break;
                f = q;
                ++mult;
            }
            if (mult > 0) factors.push_back({g, mult});
            if (f.max_exp() / 2 < d) break;
        }
    }
    if (!f.is_one()) {
        // Remainder is irreducible (no divisor of degree <= deg/2 survived).
        factors.push_back({f, 1});
    }
    std::sort(factors.begin(), factors.end(),
              [](const PolyFactor& a, const PolyFactor& b) { return poly_less(a.factor, b.factor); });
    return factors;
}

std::vector<MaxIdealCandidate> enumerate_max_ideal_candidates(i64 n) {
    if (n < 2) fail(Errc::ModulusMismatch, "group order must be at least 2");
    std::vector<MaxIdealCandidate> out;
    for (const auto& [p, e] : ModFactors::of(n).factors) {
        (void)e;
        for (const auto& pf : factor_xn_minus_1(n, p)) out.push_back({p, pf.factor});
    }
    return out;
}

}  // namespace wf
