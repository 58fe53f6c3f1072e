#include "whitefox/snf.hpp"

namespace wf {

std::pair<Laurent, Laurent> euclid_divide(const Laurent& a, const Laurent& b) {
    if (!a.ring().is_field() || !(a.ring() == b.ring()))
        fail(Errc::ModulusMismatch, "euclidean division requires matching prime-field coefficients");
    if (b.is_zero()) fail(Errc::DivisionByZero, "euclidean division by zero");
    return laurent_divmod(a, b);
}

namespace {

// Unit certificate for a monomial c*t^e over a field.
UnitCert monomial_unit(const Laurent& m) {
    const CoeffRing ring = m.ring();
    const i64 e = m.min_exp();
    const i64 c = m.coeff(e);
    return {m, Laurent::monomial(ring, inverse_mod(c, ring.mod), -e)};
}

// Normalizing unit: u such that u*f is monic with nonzero constant term.
UnitCert normalizing_unit(const Laurent& f) {
    const CoeffRing ring = f.ring();
    const i64 lead = f.coeff(f.max_exp());
    Laurent u = Laurent::monomial(ring, inverse_mod(lead, ring.mod), -f.min_exp());
    return monomial_unit(u);
}

bool divides(const Laurent& d, const Laurent& a) {
    if (a.is_zero()) return true;
    if (d.is_zero()) return false;
    return euclid_divide(a, d).second.is_zero();
}

}  // namespace

SnfResult snf(const Matrix<Laurent>& A) {
    const CoeffRing ring = A.ring();
    if (!ring.is_field()) fail(Errc::ModulusMismatch, "smith normal form requires prime-field coefficients");

    Matrix<Laurent> m = A;
    WordBuilder w(std::max(A.rows(), A.cols()), ring);
    // WordBuilder tracks ops for a square word size; require equal dims to
    // keep the witness words square. Rectangular input is not needed here.
    if (A.rows() != A.cols()) fail(Errc::NonSquare, "witnessed smith normal form requires a square matrix");
    const int k = A.rows();

    for (int s = 0; s < k; ++s) {
        // Locate the minimal-span nonzero entry in the trailing submatrix.
        auto find_pivot = [&]() -> std::pair<int, int> {
            int pi = -1, pj = -1;
            i64 best = -1;
            for (int i = s; i < k; ++i)
                for (int j = s; j < k; ++j) {
                    if (m.at(i, j).is_zero()) continue;
                    const i64 sp = m.at(i, j).span();
                    if (best < 0 || sp < best) {
                        best = sp;
                        pi = i;
                        pj = j;
                    }
                }
            return {pi, pj};
        };

        auto [pi, pj] = find_pivot();
        if (pi < 0) break;  // trailing block is zero

        for (;;) {
            if (pi != s) w.row_swap_signed(m, s, pi);
            if (pj != s) w.col_swap_signed(m, s, pj);

            // Clear the pivot column and row by euclidean steps.
            bool dirty = false;
            for (int i = s + 1; i < k; ++i) {
                if (m.at(i, s).is_zero()) continue;
                auto [q, rem] = euclid_divide(m.at(i, s), m.at(s, s));
                w.row_transvection(m, i, s, -q);
                if (!rem.is_zero()) dirty = true;
            }
            for (int j = s + 1; j < k; ++j) {
                if (m.at(s, j).is_zero()) continue;
                auto [q, rem] = euclid_divide(m.at(s, j), m.at(s, s));
                w.col_transvection(m, j, s, -q);
                if (!rem.is_zero()) dirty = true;
            }
            if (dirty) {
                std::tie(pi, pj) = find_pivot();
                continue;
            }
            // Pivot row and column are clear; enforce pivot | submatrix.
            int bi = -1, bj = -1;
            for (int i = s + 1; i < k && bi < 0; ++i)
                for (int j = s + 1; j < k; ++j)
                    if (!divides(m.at(s, s), m.at(i, j))) {
                        bi = i;
                        bj = j;
                        break;
                    }
            if (bi < 0) break;
            w.col_transvection(m, s, bj, Laurent::one(ring));
            std::tie(pi, pj) = find_pivot();
        }
    }

    // Normalize all but the last nonzero diagonal entry to monic polynomials
    // with nonzero constant term; Whitehead blocks keep the words det-one.
    int last_nonzero = -1;
    for (int s = 0; s < k; ++s)
        if (!m.at(s, s).is_zero()) last_nonzero = s;
    for (int s = 0; s < last_nonzero; ++s) {
        const Laurent& d = m.at(s, s);
        UnitCert u = normalizing_unit(d);
        if (u.element.is_one()) continue;
        w.row_whitehead(m, s, s + 1, u);
    }

    SnfResult out;
    out.left = w.left();
    out.right = w.right();
    out.diag.reserve(static_cast<size_t>(k));
    for (int s = 0; s < k; ++s) out.diag.push_back(m.at(s, s));
    return out;
}

}  // namespace wf
