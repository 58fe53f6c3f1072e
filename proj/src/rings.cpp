#include "whitefox/rings.hpp"

#include <algorithm>

namespace wf {

// --------------------------- CoeffRing ------------------------------------

CoeffRing CoeffRing::mod_n(i64 n) {
    if (n < 2) fail(Errc::ModulusMismatch, "modulus must be at least 2");
    return {CoeffKind::Zn, n};
}

CoeffRing CoeffRing::prime_field(i64 p) {
    if (!is_prime(p)) fail(Errc::ModulusMismatch, "field characteristic must be prime");
    return {CoeffKind::Fp, p};
}

std::string CoeffRing::name() const {
    switch (kind) {
        case CoeffKind::Z: return "Z";
        case CoeffKind::Zn: return "Z/" + std::to_string(mod);
        case CoeffKind::Fp: return "F" + std::to_string(mod);
    }
    return "?";
}

bool is_prime(i64 p) {
    if (p < 2) return false;
    for (i64 d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// ---------------------------- Laurent -------------------------------------

Laurent::Laurent(CoeffRing r, i64 constant) : ring_(r) { add_term(0, constant); }

Laurent Laurent::monomial(CoeffRing r, i64 coeff, i64 exp) {
    Laurent f(r);
    f.add_term(exp, coeff);
    return f;
}

bool Laurent::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

i64 Laurent::coeff(i64 exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? 0 : it->second;
}

void Laurent::add_term(i64 exp, i64 c) {
    c = ring_.normalize(c);
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exp, c);
    if (!inserted) {
        it->second = ring_.normalize(checked_add(it->second, c));
        if (it->second == 0) terms_.erase(it);
    }
}

i64 Laurent::min_exp() const {
    if (is_zero()) fail(Errc::Internal, "min_exp of zero polynomial");
    return terms_.begin()->first;
}

i64 Laurent::max_exp() const {
    if (is_zero()) fail(Errc::Internal, "max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

i64 Laurent::span() const { return max_exp() - min_exp(); }

i64 Laurent::eval_at_one() const {
    i64 s = 0;
    for (const auto& [e, c] : terms_) s = checked_add(s, c);
    return ring_.normalize(s);
}

void Laurent::require_same_ring(const Laurent& o) const {
    if (!(ring_ == o.ring_)) fail(Errc::ModulusMismatch, "coefficient ring mismatch");
}

Laurent Laurent::operator-() const {
    Laurent r(ring_);
    for (const auto& [e, c] : terms_) r.add_term(e, checked_neg(c));
    return r;
}

Laurent Laurent::operator+(const Laurent& o) const {
    require_same_ring(o);
    Laurent r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
    require_same_ring(o);
    Laurent r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, checked_neg(c));
    return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
    require_same_ring(o);
    Laurent r(ring_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(checked_add(e1, e2), checked_mul(c1, c2));
    return r;
}

Laurent Laurent::scaled(i64 c) const {
    Laurent r(ring_);
    for (const auto& [e, k] : terms_) r.add_term(e, checked_mul(k, c));
    return r;
}

Laurent Laurent::shifted(i64 dexp) const {
    Laurent r(ring_);
    for (const auto& [e, c] : terms_) r.add_term(checked_add(e, dexp), c);
    return r;
}

Laurent Laurent::reduce_to(CoeffRing target) const {
    if (!target.is_modular()) fail(Errc::ModulusMismatch, "reduction target must be modular");
    if (ring_.is_modular() && ring_.mod % target.mod != 0)
        fail(Errc::ModulusMismatch, "reduction requires target modulus dividing source modulus");
    Laurent r(target);
    for (const auto& [e, c] : terms_) r.add_term(e, c);
    return r;
}

Laurent Laurent::lift_to(CoeffRing target) const {
    if (!ring_.is_modular()) fail(Errc::ModulusMismatch, "lift source must be modular");
    if (target.is_modular() && target.mod % ring_.mod != 0)
        fail(Errc::ModulusMismatch, "lift requires source modulus dividing target modulus");
    Laurent r(target);
    for (const auto& [e, c] : terms_) r.add_term(e, c);  // canonical residues
    return r;
}

std::pair<Laurent, Laurent> laurent_divmod(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) fail(Errc::DivisionByZero, "division by zero polynomial");
    const CoeffRing ring = a.ring();
    if (!(ring == b.ring())) fail(Errc::ModulusMismatch, "coefficient ring mismatch");

    Laurent q(ring);
    Laurent r = a;
    const i64 blead = b.max_exp();
    const i64 bcoef = b.coeff(blead);
    while (!r.is_zero() && r.span() >= b.span()) {
        const i64 rlead = r.max_exp();
        const i64 rcoef = r.coeff(rlead);
        i64 factor;
        if (ring.is_field()) {
            factor = floor_mod(checked_mul(rcoef, inverse_mod(bcoef, ring.mod)), ring.mod);
        } else if (rcoef % bcoef == 0) {
            factor = rcoef / bcoef;
        } else {
            fail(Errc::NotDivisible, "leading coefficient not divisible");
        }
        Laurent step = Laurent::monomial(ring, factor, rlead - blead);
        q += step;
        r -= step * b;
        if (!r.is_zero() && r.max_exp() >= rlead)
            fail(Errc::Internal, "polynomial division failed to reduce degree");
    }
    return {q, r};
}

Laurent laurent_divexact(const Laurent& a, const Laurent& b) {
    auto [q, r] = laurent_divmod(a, b);
    if (!r.is_zero()) fail(Errc::NotDivisible, "polynomial division leaves a remainder");
    return q;
}

// --------------------------- ModFactors ------------------------------------

ModFactors ModFactors::of(i64 n) {
    if (n < 2) fail(Errc::ModulusMismatch, "modulus must be at least 2");
    ModFactors d;
    d.n = n;
    i64 m = n;
    for (i64 p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            d.factors.emplace_back(p, e);
        }
    }
    if (m > 1) d.factors.emplace_back(m, 1);
    return d;
}

i64 ModFactors::prime_power(size_t i) const {
    i64 q = 1;
    for (int k = 0; k < factors[i].second; ++k) q = checked_mul(q, factors[i].first);
    return q;
}

i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    i64 x1, y1;
    i64 g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

i64 inverse_mod(i64 a, i64 m) {
    i64 x, y;
    i64 g = ext_gcd(floor_mod(a, m), m, x, y);
    if (g != 1 && g != -1) fail(Errc::NotAUnit, "element is not invertible modulo " + std::to_string(m));
    if (g == -1) x = -x;
    return floor_mod(x, m);
}

std::vector<Laurent> crt_split(const Laurent& f, const ModFactors& d) {
    if (!(f.ring() == CoeffRing::mod_n(d.n)))
        fail(Errc::ModulusMismatch, "polynomial modulus does not match decomposition");
    std::vector<Laurent> parts;
    parts.reserve(d.count());
    for (size_t i = 0; i < d.count(); ++i) parts.push_back(f.reduce_to(CoeffRing::mod_n(d.prime_power(i))));
    return parts;
}

Laurent crt_join(const std::vector<Laurent>& parts, const ModFactors& d) {
    if (parts.size() != d.count()) fail(Errc::ModulusMismatch, "component count mismatch");
    Laurent out(CoeffRing::mod_n(d.n));
    for (size_t i = 0; i < d.count(); ++i) {
        const i64 q = d.prime_power(i);
        if (!(parts[i].ring() == CoeffRing::mod_n(q)))
            fail(Errc::ModulusMismatch, "component ring mismatch");
        const i64 rest = d.n / q;
        // Idempotent-style recombination: rest * inv(rest mod q) is 1 mod q, 0 elsewhere.
        const i64 e = checked_mul(rest, inverse_mod(rest % q, q));
        for (const auto& [exp, c] : parts[i].terms()) out.add_term(exp, checked_mul(c, e));
    }
    return out;
}

Laurent crt_embed(const Laurent& part, size_t idx, const ModFactors& d, i64 elsewhere) {
    std::vector<Laurent> parts;
    for (size_t i = 0; i < d.count(); ++i) {
        if (i == idx)
            parts.push_back(part);
        else
            parts.push_back(Laurent(CoeffRing::mod_n(d.prime_power(i)), elsewhere));
    }
    return crt_join(parts, d);
}

// ------------------------------ Units --------------------------------------

namespace {

// Per prime-power component: u is a unit iff its mod-p image is a nonzero
// monomial c*t^k.
std::optional<std::pair<i64, i64>> monomial_image_mod_p(const Laurent& u, i64 p) {
    Laurent up = u.reduce_to(CoeffRing::prime_field(p));
    if (!up.is_monomial()) return std::nullopt;
    return std::make_pair(up.coeff(up.min_exp()), up.min_exp());
}

Laurent invert_unit_prime_power(const Laurent& u, i64 p, int e, i64 q) {
    auto mono = monomial_image_mod_p(u, p);
    if (!mono) fail(Errc::NotAUnit, "image mod " + std::to_string(p) + " is not a monomial");
    const auto [cp, k] = *mono;
    (void)cp;
    const CoeffRing ring = CoeffRing::mod_n(q);
    const i64 c0 = u.coeff(k);  // lifts cp, hence invertible mod q
    const Laurent m_inv = Laurent::monomial(ring, inverse_mod(c0, q), -k);
    // u = m * (1 + h) with every coefficient of h divisible by p, so h is
    // nilpotent and the geometric series for (1 + h)^-1 terminates.
    const Laurent h = m_inv * u - Laurent::one(ring);
    Laurent series = Laurent::one(ring);
    Laurent power = Laurent::one(ring);
    for (int i = 1; i < e; ++i) {
        power *= -h;
        if (power.is_zero()) break;
        series += power;
    }
    return series * m_inv;
}

}  // namespace

bool is_unit(const Laurent& u, const ModFactors& d) {
    if (!(u.ring() == CoeffRing::mod_n(d.n))) fail(Errc::ModulusMismatch, "unit test in the wrong ring");
    if (u.is_zero()) return false;
    for (size_t i = 0; i < d.count(); ++i)
        if (!monomial_image_mod_p(u, d.prime(i))) return false;
    return true;
}

UnitCert invert_unit(const Laurent& u, const ModFactors& d) {
    if (!(u.ring() == CoeffRing::mod_n(d.n))) fail(Errc::ModulusMismatch, "inversion in the wrong ring");
    if (u.is_zero()) fail(Errc::NotAUnit, "zero is not a unit");
    std::vector<Laurent> parts;
    for (size_t i = 0; i < d.count(); ++i) {
        const i64 q = d.prime_power(i);
        parts.push_back(invert_unit_prime_power(u.reduce_to(CoeffRing::mod_n(q)), d.prime(i),
                                                d.factors[i].second, q));
    }
    UnitCert cert{u, crt_join(parts, d)};
    if (!(cert.element * cert.inverse).is_one()) fail(Errc::Internal, "unit inversion self-check failed");
    return cert;
}

// --------------------------- GroupRingElem ---------------------------------

GroupRingElem::GroupRingElem(i64 n) : n_(n), rows_(static_cast<size_t>(n), Laurent(CoeffRing::integers())) {
    if (n < 2) fail(Errc::ModulusMismatch, "cyclic order must be at least 2");
}

GroupRingElem::GroupRingElem(i64 n, std::vector<Laurent> rows) : GroupRingElem(n) {
    if (rows.size() != static_cast<size_t>(n)) fail(Errc::DimensionMismatch, "row count must equal the cyclic order");
    for (auto& r : rows)
        if (!(r.ring() == CoeffRing::integers())) fail(Errc::ModulusMismatch, "rows must have integer coefficients");
    rows_ = std::move(rows);
}

GroupRingElem GroupRingElem::constant(i64 n, i64 c) {
    GroupRingElem a(n);
    a.add_term(0, 0, c);
    return a;
}

GroupRingElem GroupRingElem::monomial(i64 n, i64 coeff, i64 x_exp, i64 t_exp) {
    GroupRingElem a(n);
    a.add_term(x_exp, t_exp, coeff);
    return a;
}

GroupRingElem GroupRingElem::norm_element(i64 n) {
    GroupRingElem a(n);
    for (i64 i = 0; i < n; ++i) a.add_term(i, 0, 1);
    return a;
}

GroupRingElem GroupRingElem::from_laurent(i64 n, const Laurent& f) {
    if (!(f.ring() == CoeffRing::integers())) fail(Errc::ModulusMismatch, "embedding requires integer coefficients");
    GroupRingElem a(n);
    a.rows_[0] = f;
    return a;
}

void GroupRingElem::set_row(i64 i, Laurent f) {
    if (!(f.ring() == CoeffRing::integers())) fail(Errc::ModulusMismatch, "rows must have integer coefficients");
    rows_[static_cast<size_t>(floor_mod(i, n_))] = std::move(f);
}

void GroupRingElem::add_term(i64 x_exp, i64 t_exp, i64 c) {
    rows_[static_cast<size_t>(floor_mod(x_exp, n_))].add_term(t_exp, c);
}

i64 GroupRingElem::coeff(i64 x_exp, i64 t_exp) const {
    return rows_[static_cast<size_t>(floor_mod(x_exp, n_))].coeff(t_exp);
}

bool GroupRingElem::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const Laurent& r) { return r.is_zero(); });
}

void GroupRingElem::require_same_order(const GroupRingElem& o) const {
    if (n_ != o.n_) fail(Errc::ModulusMismatch, "group ring order mismatch");
}

GroupRingElem GroupRingElem::operator-() const {
    GroupRingElem r(n_);
    for (i64 i = 0; i < n_; ++i) r.rows_[static_cast<size_t>(i)] = -rows_[static_cast<size_t>(i)];
    return r;
}

GroupRingElem GroupRingElem::operator+(const GroupRingElem& o) const {
    require_same_order(o);
    GroupRingElem r(n_);
    for (i64 i = 0; i < n_; ++i)
        r.rows_[static_cast<size_t>(i)] = rows_[static_cast<size_t>(i)] + o.rows_[static_cast<size_t>(i)];
    return r;
}

GroupRingElem GroupRingElem::operator-(const GroupRingElem& o) const {
    require_same_order(o);
    GroupRingElem r(n_);
    for (i64 i = 0; i < n_; ++i)
        r.rows_[static_cast<size_t>(i)] = rows_[static_cast<size_t>(i)] - o.rows_[static_cast<size_t>(i)];
    return r;
}

GroupRingElem GroupRingElem::operator*(const GroupRingElem& o) const {
    require_same_order(o);
    GroupRingElem r(n_);
    for (i64 i = 0; i < n_; ++i) {
        if (rows_[static_cast<size_t>(i)].is_zero()) continue;
        for (i64 j = 0; j < n_; ++j) {
            if (o.rows_[static_cast<size_t>(j)].is_zero()) continue;
            const i64 k = floor_mod(i + j, n_);
            r.rows_[static_cast<size_t>(k)] += rows_[static_cast<size_t>(i)] * o.rows_[static_cast<size_t>(j)];
        }
    }
    return r;
}

i64 GroupRingElem::augment() const {
    i64 s = 0;
    for (const auto& row : rows_) s = checked_add(s, row.eval_at_one());
    return s;
}

Laurent GroupRingElem::augment_x() const {
    Laurent s(CoeffRing::integers());
    for (const auto& row : rows_) s += row;
    return s;
}

Laurent GroupRingElem::augment_mod_n() const { return augment_x().reduce_to(CoeffRing::mod_n(n_)); }

GroupRingElem divide_by_x_minus_1(const GroupRingElem& a) {
    if (!a.augment_x().is_zero())
        fail(Errc::NotDivisible, "element is not in the kernel of the x-collapse");
    const i64 n = a.order();
    // q * (x - 1) has rows q[i-1] - q[i]; fix q[0] = 0 and telescope, then
    // shift by a multiple of the norm element to zero the x^(n-1) row, which
    // makes the returned representative canonical.
    GroupRingElem q(n);
    Laurent acc(CoeffRing::integers());
    for (i64 i = 1; i < n; ++i) {
        acc -= a.row(i);
        q.set_row(i, acc);
    }
    const Laurent top = q.row(n - 1);
    if (!top.is_zero()) {
        GroupRingElem shift = GroupRingElem::norm_element(n) * GroupRingElem::from_laurent(n, top);
        q = q - shift;
    }
    return q;
}

// --------------------------- NormQuotElem ----------------------------------

NormQuotElem::NormQuotElem(i64 n) : n_(n), rows_(static_cast<size_t>(n - 1), Laurent(CoeffRing::integers())) {
    if (n < 2) fail(Errc::ModulusMismatch, "cyclic order must be at least 2");
}

NormQuotElem NormQuotElem::from_group_ring(const GroupRingElem& a) {
    NormQuotElem s(a.order());
    const Laurent& top = a.row(a.order() - 1);
    for (i64 i = 0; i + 1 < a.order(); ++i) s.rows_[static_cast<size_t>(i)] = a.row(i) - top;
    return s;
}

NormQuotElem NormQuotElem::one(i64 n) { return from_group_ring(GroupRingElem::one(n)); }

GroupRingElem NormQuotElem::lift() const {
    GroupRingElem a(n_);
    for (i64 i = 0; i + 1 < n_; ++i) a.set_row(i, rows_[static_cast<size_t>(i)]);
    return a;
}

bool NormQuotElem::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const Laurent& r) { return r.is_zero(); });
}

NormQuotElem NormQuotElem::operator-() const { return from_group_ring(-lift()); }

NormQuotElem NormQuotElem::operator+(const NormQuotElem& o) const { return from_group_ring(lift() + o.lift()); }

NormQuotElem NormQuotElem::operator-(const NormQuotElem& o) const { return from_group_ring(lift() - o.lift()); }

NormQuotElem NormQuotElem::operator*(const NormQuotElem& o) const { return from_group_ring(lift() * o.lift()); }

Laurent NormQuotElem::augment_mod_n() const { return lift().augment_mod_n(); }

}  // namespace wf
