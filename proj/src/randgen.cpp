#include "whitefox/randgen.hpp"

namespace wf {

Laurent random_laurent(Rng& rng, CoeffRing ring, int span, int max_terms, i64 coeff_bound) {
    Laurent f(ring);
    const int terms = 1 + static_cast<int>(rand_below(rng, max_terms));
    for (int i = 0; i < terms; ++i) {
        const i64 exp = rand_below(rng, 2 * span + 1) - span;
        i64 c = ring.is_modular() ? rand_below(rng, ring.mod) : rand_below(rng, 2 * coeff_bound + 1) - coeff_bound;
        f.add_term(exp, c);
    }
    return f;
}

UnitCert random_unit(Rng& rng, const ModFactors& d, int span) {
    std::vector<Laurent> parts;
    for (size_t i = 0; i < d.count(); ++i) {
        const i64 p = d.prime(i);
        const i64 q = d.prime_power(i);
        const CoeffRing ring = CoeffRing::mod_n(q);
        // monomial * (1 + p*g)
        i64 c = 1 + rand_below(rng, q - 1);
        while (c % p == 0) c = 1 + rand_below(rng, q - 1);
        Laurent u = Laurent::monomial(ring, c, rand_below(rng, 2 * span + 1) - span);
        if (q > p) {
            Laurent g = random_laurent(rng, ring, span, 3);
            u *= Laurent::one(ring) + g.scaled(p);
        }
        parts.push_back(u);
    }
    return invert_unit(crt_join(parts, d), d);
}

GroupRingElem random_group_ring(Rng& rng, i64 n, int span, int max_terms, i64 coeff_bound) {
    GroupRingElem a(n);
    const int terms = 1 + static_cast<int>(rand_below(rng, max_terms));
    for (int i = 0; i < terms; ++i) {
        const i64 c = rand_below(rng, 2 * coeff_bound + 1) - coeff_bound;
        a.add_term(rand_below(rng, n), rand_below(rng, 2 * span + 1) - span, c);
    }
    return a;
}

GroupRingElem random_augmentation_ideal(Rng& rng, i64 n, int span, int max_terms) {
    GroupRingElem a = random_group_ring(rng, n, span, max_terms);
    const i64 eps = a.augment();
    if (eps != 0) a = a - GroupRingElem::constant(n, eps);
    return a;
}

ElemWord random_word(Rng& rng, const ModFactors& d, int k, int max_ops, int span) {
    const CoeffRing ring = CoeffRing::mod_n(d.n);
    ElemWord w(k, ring);
    const int ops = 1 + static_cast<int>(rand_below(rng, max_ops));
    for (int o = 0; o < ops; ++o) {
        int i = static_cast<int>(rand_below(rng, k));
        int j = static_cast<int>(rand_below(rng, k));
        while (j == i) j = static_cast<int>(rand_below(rng, k));
        const i64 kind = rand_below(rng, k >= 2 ? 5 : 4);
        if (kind == 4) {
            w.ops.push_back(ElemOp::whitehead(i, j, random_unit(rng, d, span)));
        } else {
            const OpSide side = (kind % 2 == 0) ? OpSide::Left : OpSide::Right;
            Laurent r = random_laurent(rng, ring, span, 3);
            w.ops.push_back(ElemOp::transvection(side, i, j, r));
        }
    }
    return w;
}

Presentation random_presentation(Rng& rng, i64 n, int max_gens, int max_rels, int max_len) {
    Presentation p;
    p.n = n;
    // Generators 0 and 1 are anchored to (1,0) and (0,1) so every relator can
    // be corrected to map to the identity; the rest are random.
    const int g = 2 + static_cast<int>(rand_below(rng, max_gens - 1));
    p.gens.push_back("a");
    p.images.emplace_back(1, 0);
    p.gens.push_back("b");
    p.images.emplace_back(0, 1);
    for (int i = 2; i < g; ++i) {
        p.gens.push_back("g" + std::to_string(i));
        p.images.emplace_back(rand_below(rng, n), rand_below(rng, 3) - 1);
    }
    const int r = 1 + static_cast<int>(rand_below(rng, max_rels));
    for (int j = 0; j < r; ++j) {
        FreeWord w;
        const int len = static_cast<int>(rand_below(rng, max_len + 1));
        for (int l = 0; l < len; ++l)
            w.push_back(Letter{static_cast<int>(rand_below(rng, g)), rand_below(rng, 2) == 0 ? 1 : -1});
        auto [a, b] = p.evaluate(w);
        for (; b != 0; b += (b > 0 ? -1 : 1)) w.push_back(Letter{1, b > 0 ? -1 : 1});
        for (i64 e = floor_mod(-a, n); e > 0; --e) w.push_back(Letter{0, 1});
        if (!(p.evaluate(w) == std::pair<i64, i64>{0, 0})) fail(Errc::Internal, "relator correction failed");
        p.relators.push_back(std::move(w));
    }
    return p;
}

}  // namespace wf
