#include "whitefox/words.hpp"

namespace wf {

ElemOp ElemOp::transvection(OpSide side, int i, int j, Laurent r) {
    if (i == j) fail(Errc::Internal, "transvection requires distinct indices");
    ElemOp op;
    op.kind = Kind::Transvection;
    op.side = side;
    op.i = i;
    op.j = j;
    op.r = std::move(r);
    return op;
}

ElemOp ElemOp::whitehead(int i, int j, UnitCert u) {
    if (i == j) fail(Errc::Internal, "whitehead block requires distinct indices");
    ElemOp op;
    op.kind = Kind::Whitehead;
    op.side = OpSide::Left;
    op.i = i;
    op.j = j;
    op.u = std::move(u);
    return op;
}

Matrix<Laurent> ElemOp::to_matrix(const CoeffRing& ring, int k) const {
    Matrix<Laurent> m = Matrix<Laurent>::identity(ring, k);
    if (kind == Kind::Transvection) {
        if (side == OpSide::Left)
            m.at(i, j) = r;
        else
            m.at(j, i) = r;
    } else {
        m.at(i, i) = u.element;
        m.at(j, j) = u.inverse;
    }
    return m;
}

ElemOp ElemOp::inverse() const {
    ElemOp inv = *this;
    if (kind == Kind::Transvection)
        inv.r = -r;
    else
        std::swap(inv.u.element, inv.u.inverse);
    return inv;
}

bool ElemOp::is_det_one() const {
    if (i == j) return false;
    if (kind == Kind::Transvection) return true;
    return (u.element * u.inverse).is_one();
}

std::vector<ElemOp> ElemOp::expand(const CoeffRing& ring) const {
    if (kind == Kind::Transvection) return {*this};
    const Laurent minus_one = -Laurent::one(ring);
    return {
        transvection(OpSide::Left, i, j, u.element),
        transvection(OpSide::Left, j, i, -u.inverse),
        transvection(OpSide::Left, i, j, u.element),
        transvection(OpSide::Left, i, j, minus_one),
        transvection(OpSide::Left, j, i, Laurent::one(ring)),
        transvection(OpSide::Left, i, j, minus_one),
    };
}

Matrix<Laurent> ElemWord::evaluate() const {
    Matrix<Laurent> m = Matrix<Laurent>::identity(ring, k);
    for (const auto& op : ops) m = m * op.to_matrix(ring, k);
    return m;
}

ElemWord ElemWord::inverse() const {
    ElemWord inv(k, ring);
    inv.ops.reserve(ops.size());
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) inv.ops.push_back(it->inverse());
    return inv;
}

ElemWord ElemWord::concat(const ElemWord& tail) const {
    if (k != tail.k || !(ring == tail.ring)) fail(Errc::DimensionMismatch, "word concat mismatch");
    ElemWord out = *this;
    out.ops.insert(out.ops.end(), tail.ops.begin(), tail.ops.end());
    return out;
}

bool ElemWord::all_det_one() const {
    for (const auto& op : ops)
        if (!op.is_det_one() || op.i < 0 || op.i >= k || op.j < 0 || op.j >= k) return false;
    return true;
}

void WordBuilder::row_swap_signed(Matrix<Laurent>& m, int i, int j) {
    const Laurent one = Laurent::one(m.ring());
    row_transvection(m, i, j, one);
    row_transvection(m, j, i, -one);
    row_transvection(m, i, j, one);
}

void WordBuilder::col_swap_signed(Matrix<Laurent>& m, int i, int j) {
    const Laurent one = Laurent::one(m.ring());
    col_transvection(m, i, j, one);
    col_transvection(m, j, i, -one);
    col_transvection(m, i, j, one);
}

void WordBuilder::row_whitehead(Matrix<Laurent>& m, int i, int j, const UnitCert& u) {
    m.scale_row(i, u.element);
    m.scale_row(j, u.inverse);
    push_row(ElemOp::whitehead(i, j, u));
}

}  // namespace wf
