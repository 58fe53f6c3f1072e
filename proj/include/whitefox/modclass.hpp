#pragma once

#include <optional>

#include "whitefox/factor.hpp"

namespace wf {

// The central module of the extension classified by a matrix A over Zn[t,1/t]:
// generated by the columns of ((A_lift, N*I), ((x-1)*I, 0)) inside the rank-2k
// free module over the group ring.
struct MModule {
    int k = 0;
    Matrix<Laurent> a_class;        // over Zn[t, 1/t]
    Matrix<GroupRingElem> a_lift;   // canonical lift: coefficients in [0, n), x-free
    Matrix<GroupRingElem> gen_matrix;  // 2k x 2k
};

MModule build_m_module(const Matrix<Laurent>& A);

// Entrywise augmentation of a matrix over the norm quotient into Zn[t, 1/t];
// zero exactly on the matrices representing the trivial extension class.
Matrix<Laurent> ext1_class(const Matrix<NormQuotElem>& F);

// Witness that M(A) and M(B) are isomorphic: C from the integer Laurent side
// (det must be a signed power of t) and D from the norm-quotient side (its
// augmentation image must have unit determinant); the images must satisfy
// image(C) * A * image(D) = B.
struct IsoWitness {
    Matrix<Laurent> c_lift;      // integer Laurent coefficients
    Matrix<NormQuotElem> d_lift;
};

struct IsoReport {
    bool ok = false;
    std::string failed_clause;  // empty when ok
};

IsoReport verify_iso_witness(const Matrix<Laurent>& A, const Matrix<Laurent>& B, const IsoWitness& w);

// Bounded search configuration for normalizer units (images of units of the
// t-free norm quotient, times signed powers of t).
struct SearchConfig {
    int t_span = 4;       // powers of t tried: |j| <= t_span
    int coeff_box = 4;    // coefficients searched in [-coeff_box, coeff_box]
    int max_support = 3;  // nonzero coefficients per candidate
};

// Certified unit of the t-free norm quotient Z[x]/(1 + x + ... + x^(n-1)).
struct SUnitCert {
    NormQuotElem element;
    NormQuotElem inverse;
};

// Exact unit test via the integer multiplication matrix: s is a unit iff
// det = +-1; the inverse is recovered by Cramer solves.
std::optional<SUnitCert> invert_in_norm_quot(const NormQuotElem& s);

// Sparse bounded search for a unit whose augmentation image is r mod n.
std::optional<SUnitCert> find_swan_unit(i64 n, i64 r, const SearchConfig& cfg = {});

struct StableVerdict {
    enum class Kind { Reduced, Obstructed };
    Kind kind = Kind::Obstructed;
    // Reduced: evaluate(left) * (mu + I) * B * (sigma_image + I) * evaluate(right)
    // equals alpha + I_(k-1); mu is a signed power of t and sigma comes with a
    // certified norm-quotient unit.
    ElemWord left;
    ElemWord right;
    Laurent mu;
    Laurent sigma_image;
    std::optional<SUnitCert> sigma;
    std::string reason;  // set when obstructed
};

StableVerdict decide_scalar_stable_equiv(const Laurent& alpha, const Matrix<Laurent>& B,
                                         const SearchConfig& cfg = {});

// Swan-module analogue over the finite cyclic group alone (no t): the
// generator matrix stacks the lift block over one (g - 1)-block per group
// element, paired with the norm column block.
struct SwanModule {
    i64 n = 0;
    int k = 0;
    Matrix<Laurent> a_class;           // constants over Zn
    Matrix<GroupRingElem> a_lift;      // t-free
    Matrix<GroupRingElem> gen_matrix;  // k(n+1) x 2k
};

SwanModule build_swan_module(i64 n, const Matrix<Laurent>& A);

struct SwanReport {
    bool ok = false;
    std::string detail;
    std::optional<Matrix<NormQuotElem>> d_inverse;  // certificate when ok
};

// Freeness witness check: the augmentation image of d_lift must equal the
// class matrix and d_lift must be invertible over the t-free norm quotient.
SwanReport verify_swan_freeness(const SwanModule& m, const Matrix<NormQuotElem>& d_lift);

}  // namespace wf
