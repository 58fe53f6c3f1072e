#pragma once

#include <vector>

#include "whitefox/rings.hpp"

namespace wf {

struct PolyFactor {
    Laurent factor;  // monic irreducible over Fp, nonnegative exponents
    int multiplicity = 0;
};

// Complete factorization of x^n - 1 over Fp by trial division (irreducibility
// of what remains is certified by exhausting divisors up to half the degree).
// Factors are sorted by degree, then by coefficient order.
std::vector<PolyFactor> factor_xn_minus_1(i64 n, i64 p);

// Candidate non-projective maximal ideals (p, omega) of the integral group
// ring of the cyclic group: p runs over primes dividing n and omega over the
// distinct irreducible factors of x^n - 1 mod p.
struct MaxIdealCandidate {
    i64 p = 0;
    Laurent omega;
};

std::vector<MaxIdealCandidate> enumerate_max_ideal_candidates(i64 n);

}  // namespace wf
