#pragma once

#include "whitefox/ideals.hpp"
#include "whitefox/jsonio.hpp"

namespace wf {

inline constexpr const char* kToolchain = "whitefox 0.1.0";

// Self-describing certificates: the claim states an equation, the payload
// carries the witness data, and `verify_envelope` recomputes the claim from
// the payload without trusting any cached results.
json make_factorization_cert(i64 n, const Matrix<Laurent>& E, const ElemWord& word);
json make_snf_cert(i64 p, const Matrix<Laurent>& A, const SnfResult& r);
json make_reduction_cert(const Laurent& alpha, const Matrix<Laurent>& B, const StableVerdict& v);
json make_iso_witness_cert(const Matrix<Laurent>& A, const Matrix<Laurent>& B, const IsoWitness& w);
json make_chain_map_cert(const Realization& r);
json make_ext3_cert(const CocyclePair& c, const Ext3Class& cls);
json make_swan_cert(const SwanModule& m, const Matrix<NormQuotElem>& d_lift,
                    const Matrix<NormQuotElem>& d_inverse);
json make_ideals_cert(i64 n);

struct VerifyResult {
    bool ok = false;
    std::string message;  // names the discrepancy on failure
};

VerifyResult verify_envelope(const json& envelope);

// Every polynomial-valued location inside an envelope, for mutation testing:
// the verifier must reject any single-coefficient change at any site.
struct MutationSite {
    std::string pointer;  // JSON pointer to a polynomial string
    enum class Kind { LaurentT, LaurentX, GroupRing, NormQuot } kind;
    CoeffRing ring;  // for the laurent kinds
    i64 n = 0;       // for the group-ring kinds
};

std::vector<MutationSite> mutation_sites(const json& envelope);

// Adds a nonzero multiple of a fresh monomial to the polynomial at the given
// site. `pick` supplies pseudo-random nonneg integers.
json mutate_at(const json& envelope, const MutationSite& site, const std::function<i64(i64)>& pick);

}  // namespace wf
