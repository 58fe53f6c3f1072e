#include "whitefox/factor.hpp"

#include <sstream>

#include "whitefox/textio.hpp"

namespace wf {

namespace {

Laurent lift_coeffs(const Laurent& f, CoeffRing target) { return f.lift_to(target); }

// Lifts an op word from Fp to Z_(p^e); Whitehead units are re-certified in
// the larger modulus.
ElemWord lift_word(const ElemWord& w, const ModFactors& comp) {
    const CoeffRing target = CoeffRing::mod_n(comp.n);
    ElemWord out(w.k, target);
    out.ops.reserve(w.ops.size());
    for (const auto& op : w.ops) {
        if (op.kind == ElemOp::Kind::Transvection) {
            out.ops.push_back(ElemOp::transvection(op.side, op.i, op.j, lift_coeffs(op.r, target)));
        } else {
            out.ops.push_back(ElemOp::whitehead(op.i, op.j, invert_unit(lift_coeffs(op.u.element, target), comp)));
        }
    }
    return out;
}

// Embeds a component word over Z_(p^e) into Zn: transvection entries become 0
// and Whitehead units become 1 in every other component, so each embedded op
// acts as the identity there.
ElemWord embed_word(const ElemWord& w, size_t idx, const ModFactors& d) {
    const CoeffRing target = CoeffRing::mod_n(d.n);
    ElemWord out(w.k, target);
    out.ops.reserve(w.ops.size());
    for (const auto& op : w.ops) {
        if (op.kind == ElemOp::Kind::Transvection) {
            out.ops.push_back(ElemOp::transvection(op.side, op.i, op.j, crt_embed(op.r, idx, d, 0)));
        } else {
            UnitCert u{crt_embed(op.u.element, idx, d, 1), crt_embed(op.u.inverse, idx, d, 1)};
            out.ops.push_back(ElemOp::whitehead(op.i, op.j, u));
        }
    }
    return out;
}

Matrix<Laurent> reduce_matrix(const Matrix<Laurent>& A, CoeffRing target) {
    return A.map([&](const Laurent& f) { return f.reduce_to(target); }, target);
}

struct ComponentWords {
    ElemWord left;
    ElemWord right;
};

// Core of both algorithms: finds det-one words L, R over Z_(p^e) with
// L * E * R = Diag(det(E), 1, ..., 1), assuming the mod-p smith form of E is
// Diag(1, ..., 1, unit-associate). `alpha_label` names the target scalar in
// obstruction reports.
ComponentWords reduce_component_to_scalar_block(const Matrix<Laurent>& E, const ModFactors& comp, i64 p,
                                                const std::string& alpha_label, bool require_unit_chain) {
    const int k = E.rows();
    const CoeffRing ring = CoeffRing::mod_n(comp.n);
    const CoeffRing field = CoeffRing::prime_field(p);

    // Mod-p elimination with witness words.
    SnfResult s = snf(reduce_matrix(E, field));
    for (int i = 0; i + 1 < k; ++i) {
        if (s.diag[static_cast<size_t>(i)].is_one()) continue;
        if (require_unit_chain) {
            std::ostringstream msg;
            msg << "smith form mod " << p << " is not Diag(1,...,1," << alpha_label << "): diag = (";
            for (int j = 0; j < k; ++j) msg << (j ? ", " : "") << to_string(s.diag[static_cast<size_t>(j)]);
            msg << ")";
            fail(Errc::SnfObstruction, msg.str());
        }
        fail(Errc::Internal, "determinant-one matrix has non-unit smith entries mod " + std::to_string(p));
    }

    // Lift the mod-p words and apply them to E over Z_(p^e).
    ElemWord left = lift_word(s.left, comp);
    ElemWord right = lift_word(s.right, comp);
    Matrix<Laurent> F = left.evaluate() * E * right.evaluate();

    WordBuilder w(k, ring);
    // Move the scalar slot from position k-1 to position 0 by a signed swap
    // conjugation (the signs cancel), so the unit diagonal occupies 1..k-1.
    if (k >= 2) {
        w.row_swap_signed(F, 0, k - 1);
        w.col_swap_signed(F, 0, k - 1);
    }
    // F is now congruent mod p to Diag(alpha_p, 1, ..., 1): diagonal entries
    // 2..k are units of the form 1 + cp.
    for (int j = 1; j < k; ++j) {
        UnitCert pivot = invert_unit(F.at(j, j), comp);
        for (int i = 0; i < k; ++i) {
            if (i == j || F.at(i, j).is_zero()) continue;
            w.row_transvection(F, i, j, -(F.at(i, j) * pivot.inverse));
        }
        for (int i = 0; i < k; ++i) {
            if (i == j || F.at(j, i).is_zero()) continue;
            w.col_transvection(F, i, j, -(F.at(j, i) * pivot.inverse));
        }
    }
    // Collapse Diag(a, u2, ..., uk) to Diag(a * u2 * ... * uk, 1, ..., 1).
    for (int j = k - 1; j >= 1; --j) {
        if (F.at(j, j).is_one()) continue;
        UnitCert u = invert_unit(F.at(j, j), comp);
        w.row_whitehead(F, j - 1, j, u);
    }

    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && !F.at(i, j).is_zero()) fail(Errc::Internal, "scalar-block reduction left off-diagonal residue");

    // Total transforms: w.left() * lifted-left and lifted-right * w.right().
    return {w.left().concat(left), right.concat(w.right())};
}

}  // namespace

ElemWord factor_det_one(const Matrix<Laurent>& E, const ModFactors& d) {
    if (!E.is_square()) fail(Errc::NonSquare, "factorization requires a square matrix");
    const CoeffRing ring = CoeffRing::mod_n(d.n);
    if (!(E.ring() == ring)) fail(Errc::ModulusMismatch, "matrix ring does not match the decomposition");
    const int k = E.rows();

    const Laurent delta = det(E);
    if (!delta.is_one()) {
        if (is_unit(delta, d)) fail(Errc::DetNotOne, "determinant is a unit but not 1: " + to_string(delta));
        fail(Errc::NotInvertible, "determinant is not a unit: " + to_string(delta));
    }

    ElemWord word(k, ring);
    if (E == Matrix<Laurent>::identity(ring, k)) return word;
    for (size_t c = 0; c < d.count(); ++c) {
        const ModFactors comp = ModFactors::of(d.prime_power(c));
        Matrix<Laurent> Ec = reduce_matrix(E, CoeffRing::mod_n(comp.n));
        ComponentWords cw =
            reduce_component_to_scalar_block(Ec, comp, d.prime(c), "1", /*require_unit_chain=*/false);
        // L * Ec * R = Diag(det, 1, ...) = I (det = 1), so Ec = L^-1 * R^-1.
        Matrix<Laurent> finalc = cw.left.evaluate() * Ec * cw.right.evaluate();
        if (!(finalc == Matrix<Laurent>::identity(CoeffRing::mod_n(comp.n), k)))
            fail(Errc::Internal, "component reduction did not reach the identity");
        ElemWord component = cw.left.inverse().concat(cw.right.inverse());
        word = word.concat(embed_word(component, c, d));
    }

    if (!(word.evaluate() == E)) fail(Errc::Internal, "factorization self-check failed");
    return word;
}

std::pair<ElemWord, ElemWord> reduce_to_alpha_block(const Matrix<Laurent>& B, const Laurent& alpha,
                                                    const ModFactors& d) {
    if (!B.is_square()) fail(Errc::NonSquare, "reduction requires a square matrix");
    const CoeffRing ring = CoeffRing::mod_n(d.n);
    if (!(B.ring() == ring) || !(alpha.ring() == ring))
        fail(Errc::ModulusMismatch, "matrix or scalar ring does not match the decomposition");
    const int k = B.rows();

    const Laurent delta = det(B);
    if (!(delta == alpha))
        fail(Errc::DetMismatch, "det(B) = " + to_string(delta) + " differs from " + to_string(alpha));

    ElemWord left(k, ring), right(k, ring);
    if (B == pad_identity(Matrix<Laurent>::diagonal(ring, {alpha}), k - 1)) return {left, right};
    for (size_t c = 0; c < d.count(); ++c) {
        const ModFactors comp = ModFactors::of(d.prime_power(c));
        Matrix<Laurent> Bc = reduce_matrix(B, CoeffRing::mod_n(comp.n));
        ComponentWords cw = reduce_component_to_scalar_block(Bc, comp, d.prime(c), to_string(alpha),
                                                             /*require_unit_chain=*/true);
        left = embed_word(cw.left, c, d).concat(left);
        right = right.concat(embed_word(cw.right, c, d));
    }

    Matrix<Laurent> target = pad_identity(Matrix<Laurent>::diagonal(ring, {alpha}), k - 1);
    if (!(left.evaluate() * B * right.evaluate() == target))
        fail(Errc::Internal, "scalar-block reduction self-check failed");
    return {left, right};
}

Matrix<Laurent> normalize_by_determinants(const Matrix<Laurent>& B, const Matrix<Laurent>& C,
                                          const Matrix<Laurent>& D) {
    if (!B.is_square() || !C.is_square() || !D.is_square())
        fail(Errc::NonSquare, "determinant normalization requires square matrices");
    return normalize_by_scalars(B, det(C), det(D));
}

Matrix<Laurent> normalize_by_scalars(const Matrix<Laurent>& B, const Laurent& c, const Laurent& d) {
    const int k = B.rows();
    if (k < 1) fail(Errc::DimensionMismatch, "empty matrix");
    Matrix<Laurent> left = pad_identity(Matrix<Laurent>::diagonal(B.ring(), {c}), k - 1);
    Matrix<Laurent> right = pad_identity(Matrix<Laurent>::diagonal(B.ring(), {d}), k - 1);
    return left * B * right;
}

}  // namespace wf
