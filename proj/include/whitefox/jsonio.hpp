#pragma once

#include <json.hpp>

#include "whitefox/modclass.hpp"
#include "whitefox/complexes.hpp"

namespace wf {

using json = nlohmann::ordered_json;

// Ring descriptors.
json ring_to_json(const CoeffRing& r);
CoeffRing ring_from_json(const json& j);

// Matrices carry their ring, shape, and entries in the canonical text
// encoding.
json matrix_to_json(const Matrix<Laurent>& m);
json matrix_to_json(const Matrix<GroupRingElem>& m);
json matrix_to_json(const Matrix<NormQuotElem>& m);
Matrix<Laurent> laurent_matrix_from_json(const json& j);
Matrix<GroupRingElem> group_matrix_from_json(const json& j);
Matrix<NormQuotElem> norm_quot_matrix_from_json(const json& j);

json word_to_json(const ElemWord& w);
ElemWord word_from_json(const json& j);

json snf_to_json(const Matrix<Laurent>& A, const SnfResult& r);
json mmodule_to_json(const MModule& m);
json swan_to_json(const SwanModule& m);
json complex_to_json(const FoxComplex& c);
FoxComplex complex_from_json(const json& j);
json realization_to_json(const Realization& r);

}  // namespace wf
