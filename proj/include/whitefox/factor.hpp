#pragma once

#include "whitefox/snf.hpp"

namespace wf {

// Factors a determinant-one matrix over Zn[t, 1/t] into a certified word of
// elementary operations whose evaluation reproduces the input exactly.
// Per prime power p^e dividing n: reduce mod p, eliminate to the identity by
// euclidean operations, lift the word, clear the remaining (I mod p) matrix
// using the unit diagonal, collapse the diagonal with Whitehead blocks, and
// finally recombine the component words through the CRT embedding.
// Throws DetNotOne when det != 1 but is a unit, NotInvertible otherwise.
ElemWord factor_det_one(const Matrix<Laurent>& E, const ModFactors& d);

// Reduces B (with det(B) = alpha exactly) to the block alpha + I_(k-1) by
// determinant-one words: evaluate(left) * B * evaluate(right) equals the
// block exactly. Requires the mod-p smith form of B to be all units except a
// single entry associate to alpha mod p for every p | n; otherwise throws
// SnfObstruction naming the offending prime and diagonal. Throws DetMismatch
// when det(B) != alpha.
std::pair<ElemWord, ElemWord> reduce_to_alpha_block(const Matrix<Laurent>& B, const Laurent& alpha,
                                                    const ModFactors& d);

// B_new = (det(C) + I_(k-1)) * B * (det(D) + I_(k-1)).
Matrix<Laurent> normalize_by_determinants(const Matrix<Laurent>& B, const Matrix<Laurent>& C,
                                          const Matrix<Laurent>& D);

// Scalar variant used when the normalizing determinants are known directly.
Matrix<Laurent> normalize_by_scalars(const Matrix<Laurent>& B, const Laurent& c, const Laurent& d);

}  // namespace wf
