#pragma once

#include "whitefox/words.hpp"

namespace wf {

// Euclidean division in Fp[t, 1/t] with degree function = span: a = q*b + r
// with r = 0 or span(r) < span(b). Throws DivisionByZero when b = 0.
std::pair<Laurent, Laurent> euclid_divide(const Laurent& a, const Laurent& b);

struct SnfResult {
    ElemWord left;
    std::vector<Laurent> diag;
    ElemWord right;
};

// Smith normal form over Fp[t, 1/t] with determinant-one witness words:
// evaluate(left) * A * evaluate(right) = Diag(diag), with the ascending
// divisibility chain diag[i] | diag[i+1] (zeros trailing). All nonzero
// diagonal entries except the last are normalized to monic polynomials with
// nonzero constant term; the last nonzero entry absorbs the unit so that the
// product equals det(A) exactly.
SnfResult snf(const Matrix<Laurent>& A);

}  // namespace wf
