#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "whitefox/checked.hpp"
#include "whitefox/errors.hpp"

namespace wf {

// ---------------------------------------------------------------------------
// Coefficient rings: Z, Z/n, F_p.
// ---------------------------------------------------------------------------

enum class CoeffKind { Z, Zn, Fp };

struct CoeffRing {
    CoeffKind kind = CoeffKind::Z;
    i64 mod = 0;  // n for Zn, p for Fp, 0 for Z

    static CoeffRing integers() { return {CoeffKind::Z, 0}; }
    static CoeffRing mod_n(i64 n);
    static CoeffRing prime_field(i64 p);

    bool operator==(const CoeffRing&) const = default;
    bool is_field() const { return kind == CoeffKind::Fp; }
    bool is_modular() const { return kind != CoeffKind::Z; }

    // Canonical representative: Z unchanged, modular rings in [0, mod).
    i64 normalize(i64 c) const { return is_modular() ? floor_mod(c, mod) : c; }
    std::string name() const;
};

bool is_prime(i64 p);

// ---------------------------------------------------------------------------
// One-variable Laurent polynomials with sparse exponent->coefficient storage.
// ---------------------------------------------------------------------------

class Laurent {
public:
    using Terms = std::map<i64, i64>;

    Laurent() = default;
    explicit Laurent(CoeffRing r) : ring_(r) {}
    Laurent(CoeffRing r, i64 constant);

    static Laurent monomial(CoeffRing r, i64 coeff, i64 exp);
    static Laurent zero(CoeffRing r) { return Laurent(r); }
    static Laurent one(CoeffRing r) { return Laurent(r, 1); }

    const CoeffRing& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    size_t term_count() const { return terms_.size(); }

    i64 coeff(i64 exp) const;
    void add_term(i64 exp, i64 c);  // accumulate, keeping canonical form

    i64 min_exp() const;  // requires nonzero
    i64 max_exp() const;  // requires nonzero
    i64 span() const;     // max_exp - min_exp, requires nonzero

    bool is_monomial() const { return terms_.size() == 1; }
    // Sum of coefficients (the image under t -> 1), in the coefficient ring.
    i64 eval_at_one() const;

    Laurent operator-() const;
    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
    Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    bool operator==(const Laurent& o) const = default;

    Laurent scaled(i64 c) const;
    Laurent shifted(i64 dexp) const;  // multiply by t^dexp

    // Coefficientwise ring change. Reduction requires target modulus dividing
    // the source modulus (or source = Z); lifting maps canonical residues to
    // plain integers (or into a larger modulus).
    Laurent reduce_to(CoeffRing target) const;
    Laurent lift_to(CoeffRing target) const;

private:
    void require_same_ring(const Laurent& o) const;

    CoeffRing ring_ = CoeffRing::integers();
    Terms terms_;  // exponent -> nonzero canonical coefficient
};

// Quotient and remainder with span(r) < span(b) or r = 0. Requires b != 0 and
// each leading-coefficient division to be exact in the coefficient ring; over
// F_p this is ordinary Euclidean division with degree function = span.
std::pair<Laurent, Laurent> laurent_divmod(const Laurent& a, const Laurent& b);
// Exact division; throws NotDivisible if a remainder survives.
Laurent laurent_divexact(const Laurent& a, const Laurent& b);

// ---------------------------------------------------------------------------
// CRT decomposition of Z/n.
// ---------------------------------------------------------------------------

struct ModFactors {
    i64 n = 0;
    std::vector<std::pair<i64, int>> factors;  // (p, e), primes ascending

    static ModFactors of(i64 n);
    size_t count() const { return factors.size(); }
    i64 prime(size_t i) const { return factors[i].first; }
    i64 prime_power(size_t i) const;
};

// Extended gcd: returns g = gcd(a, b) and x, y with a*x + b*y = g.
i64 ext_gcd(i64 a, i64 b, i64& x, i64& y);
i64 inverse_mod(i64 a, i64 m);  // throws NotAUnit if gcd(a, m) != 1

std::vector<Laurent> crt_split(const Laurent& f, const ModFactors& d);
Laurent crt_join(const std::vector<Laurent>& parts, const ModFactors& d);
// Embeds one component: the returned polynomial reduces to `part` modulo
// prime_power(idx) and to `elsewhere` (a constant) modulo every other factor.
Laurent crt_embed(const Laurent& part, size_t idx, const ModFactors& d, i64 elsewhere);

// ---------------------------------------------------------------------------
// Units of Zn[t, 1/t].
// ---------------------------------------------------------------------------

struct UnitCert {
    Laurent element;  // over Zn
    Laurent inverse;  // element * inverse == 1 exactly
};

bool is_unit(const Laurent& u, const ModFactors& d);
UnitCert invert_unit(const Laurent& u, const ModFactors& d);  // throws NotAUnit

// ---------------------------------------------------------------------------
// The group ring of the product of a cyclic group of order n (generator x)
// with an infinite cyclic group (generator t). Elements are stored as n rows
// of integer Laurent polynomials; rows[i] is the coefficient series of x^i.
// ---------------------------------------------------------------------------

class GroupRingElem {
public:
    GroupRingElem() = default;
    explicit GroupRingElem(i64 n);
    GroupRingElem(i64 n, std::vector<Laurent> rows);

    static GroupRingElem constant(i64 n, i64 c);
    static GroupRingElem monomial(i64 n, i64 coeff, i64 x_exp, i64 t_exp);
    static GroupRingElem zero(i64 n) { return GroupRingElem(n); }
    static GroupRingElem one(i64 n) { return constant(n, 1); }
    // N = 1 + x + ... + x^(n-1); kills (x-1) and squares to n*N.
    static GroupRingElem norm_element(i64 n);
    static GroupRingElem from_laurent(i64 n, const Laurent& f);  // x-free embed

    i64 order() const { return n_; }
    const Laurent& row(i64 i) const { return rows_[static_cast<size_t>(i)]; }
    void set_row(i64 i, Laurent f);
    void add_term(i64 x_exp, i64 t_exp, i64 c);
    i64 coeff(i64 x_exp, i64 t_exp) const;
    bool is_zero() const;

    GroupRingElem operator-() const;
    GroupRingElem operator+(const GroupRingElem& o) const;
    GroupRingElem operator-(const GroupRingElem& o) const;
    GroupRingElem operator*(const GroupRingElem& o) const;
    bool operator==(const GroupRingElem& o) const = default;

    // Full augmentation (x -> 1, t -> 1).
    i64 augment() const;
    // Partial augmentation x -> 1, landing in Z[t, 1/t]. Its kernel is the
    // ideal generated by (x - 1), which makes it the divisibility test used
    // by the extension-class calculi.
    Laurent augment_x() const;
    // Coefficientwise reduction mod n of the x-collapsed image: lands in
    // Zn[t, 1/t]. Factors through the norm quotient.
    Laurent augment_mod_n() const;

private:
    void require_same_order(const GroupRingElem& o) const;

    i64 n_ = 0;
    std::vector<Laurent> rows_;  // size n, integer coefficients
};

// Solves q * (x - 1) = a. Requires augment_x(a) = 0 (throws NotDivisible
// otherwise). The solution is unique modulo multiples of the norm element,
// so augment(q) is well defined mod n.
GroupRingElem divide_by_x_minus_1(const GroupRingElem& a);

// ---------------------------------------------------------------------------
// The quotient of the group ring by the ideal generated by the norm element.
// Canonical representatives eliminate the x^(n-1) row (subtract rows[n-1]*N),
// so equality is a syntactic check.
// ---------------------------------------------------------------------------

class NormQuotElem {
public:
    NormQuotElem() = default;
    explicit NormQuotElem(i64 n);

    static NormQuotElem from_group_ring(const GroupRingElem& a);
    static NormQuotElem zero(i64 n) { return NormQuotElem(n); }
    static NormQuotElem one(i64 n);

    i64 order() const { return n_; }
    const Laurent& row(i64 i) const { return rows_[static_cast<size_t>(i)]; }
    // Canonical lift: the representative with zero x^(n-1) row.
    GroupRingElem lift() const;
    bool is_zero() const;

    NormQuotElem operator-() const;
    NormQuotElem operator+(const NormQuotElem& o) const;
    NormQuotElem operator-(const NormQuotElem& o) const;
    NormQuotElem operator*(const NormQuotElem& o) const;
    bool operator==(const NormQuotElem& o) const = default;

    // The induced surjective augmentation onto Zn[t, 1/t] (x -> 1, mod n);
    // well defined because the norm element maps to n = 0.
    Laurent augment_mod_n() const;

private:
    i64 n_ = 0;
    std::vector<Laurent> rows_;  // size n-1, integer coefficients
};

}  // namespace wf
