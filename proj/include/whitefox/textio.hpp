#pragma once

#include <string>

#include "whitefox/rings.hpp"

namespace wf {

// Canonical text encoding of ring elements. A term is c*x^a*t^b with the
// usual omissions (unit coefficients, zero exponents, ^1); terms are joined
// with +/- and ordered by descending (x-exponent, t-exponent). Parsing is
// permissive about order and whitespace; encoding is canonical.

std::string to_string(const Laurent& f, char var = 't');
std::string to_string(const GroupRingElem& a);
std::string to_string(const NormQuotElem& s);

// `var` names the only variable the polynomial may use.
Laurent parse_laurent(const std::string& text, CoeffRing ring, char var = 't');
// Accepts x (exponents reduced mod n) and t terms.
GroupRingElem parse_group_ring(const std::string& text, i64 n);
NormQuotElem parse_norm_quot(const std::string& text, i64 n);

}  // namespace wf
