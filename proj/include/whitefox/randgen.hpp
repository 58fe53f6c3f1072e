#pragma once

#include <random>

#include "whitefox/complexes.hpp"
#include "whitefox/words.hpp"

namespace wf {

// Seeded generators for the randomized suites. Everything is driven by a
// caller-owned engine so batches stay reproducible.
using Rng = std::mt19937_64;

inline i64 rand_below(Rng& rng, i64 bound) {
    return static_cast<i64>(rng() % static_cast<unsigned long long>(bound));
}

Laurent random_laurent(Rng& rng, CoeffRing ring, int span, int max_terms = 4, i64 coeff_bound = 5);
// A certified unit: monomial times (1 + p * g) per prime-power component.
UnitCert random_unit(Rng& rng, const ModFactors& d, int span = 2);
GroupRingElem random_group_ring(Rng& rng, i64 n, int span = 2, int max_terms = 5, i64 coeff_bound = 4);
// Element of the augmentation ideal (augments to zero by construction).
GroupRingElem random_augmentation_ideal(Rng& rng, i64 n, int span = 2, int max_terms = 5);

// Random word of det-one ops (transvections plus occasional Whitehead
// blocks) over Zn[t, 1/t].
ElemWord random_word(Rng& rng, const ModFactors& d, int k, int max_ops, int span = 3);

// Random presentation of the product group whose relators genuinely map to
// the identity (correction letters are appended as needed).
Presentation random_presentation(Rng& rng, i64 n, int max_gens = 4, int max_rels = 4, int max_len = 12);

}  // namespace wf
