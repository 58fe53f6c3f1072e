#pragma once

#include <vector>

#include "whitefox/matrix.hpp"

namespace wf {

// Certified elementary operations over a Laurent coefficient ring. Every op
// has determinant one:
//   - Transvection(i, j, r): as a row op adds r*(row j) to row i, matrix
//     I + r*E[i][j]; as a column op adds r*(col j) to col i, matrix
//     I + r*E[j][i].
//   - Whitehead(i, j, u): the block Diag(1,...,u,...,1/u,...,1) with u at i
//     and 1/u at j, carried as a macro with its unit certificate.
enum class OpSide { Left, Right };

struct ElemOp {
    enum class Kind { Transvection, Whitehead };

    Kind kind = Kind::Transvection;
    OpSide side = OpSide::Left;
    int i = 0;
    int j = 0;
    Laurent r;   // transvection entry
    UnitCert u;  // whitehead unit

    static ElemOp transvection(OpSide side, int i, int j, Laurent r);
    static ElemOp whitehead(int i, int j, UnitCert u);

    Matrix<Laurent> to_matrix(const CoeffRing& ring, int k) const;
    ElemOp inverse() const;
    // Structural determinant-one check (i != j; whitehead unit certified).
    bool is_det_one() const;
    // The fixed expansion of the Whitehead block into six transvections:
    // Diag(u, 1/u) = T_ij(u) T_ji(-1/u) T_ij(u) * T_ij(-1) T_ji(1) T_ij(-1),
    // the second triple being the signed permutation.
    std::vector<ElemOp> expand(const CoeffRing& ring) const;
};

// An ordered list of elementary ops; evaluates to the product of the ops'
// matrices in list order.
struct ElemWord {
    int k = 0;
    CoeffRing ring;
    std::vector<ElemOp> ops;

    ElemWord() = default;
    ElemWord(int k, CoeffRing ring) : k(k), ring(ring) {}

    Matrix<Laurent> evaluate() const;
    ElemWord inverse() const;
    ElemWord concat(const ElemWord& tail) const;
    bool all_det_one() const;
    size_t size() const { return ops.size(); }
};

// Accumulates the left and right transforms of an in-place reduction:
// applying a row op o maps M to mat(o)*M (prepended on the left), a column
// op maps M to M*mat(o) (appended on the right).
class WordBuilder {
public:
    WordBuilder(int k, CoeffRing ring) : left_(k, ring), right_(k, ring) {}

    void push_row(const ElemOp& op) { left_.ops.insert(left_.ops.begin(), op); }
    void push_col(const ElemOp& op) { right_.ops.push_back(op); }

    void row_transvection(Matrix<Laurent>& m, int i, int j, const Laurent& r) {
        m.row_op(i, j, r);
        push_row(ElemOp::transvection(OpSide::Left, i, j, r));
    }

    void col_transvection(Matrix<Laurent>& m, int i, int j, const Laurent& r) {
        m.col_op(i, j, r);
        push_col(ElemOp::transvection(OpSide::Right, i, j, r));
    }

    // Signed swap (row i <- row j, row j <- -row i) as three transvections.
    void row_swap_signed(Matrix<Laurent>& m, int i, int j);
    void col_swap_signed(Matrix<Laurent>& m, int i, int j);

    // Left-multiplies by Diag(..., u at i, ..., 1/u at j, ...).
    void row_whitehead(Matrix<Laurent>& m, int i, int j, const UnitCert& u);

    const ElemWord& left() const { return left_; }
    const ElemWord& right() const { return right_; }

private:
    ElemWord left_;
    ElemWord right_;
};

}  // namespace wf
