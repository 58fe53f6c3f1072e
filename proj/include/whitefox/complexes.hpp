#pragma once

#include <optional>
#include <string>
#include <vector>

#include "whitefox/matrix.hpp"

namespace wf {

// Words in the free group on the presentation's generators: letters carry a
// generator index and exponent +-1.
struct Letter {
    int gen = 0;
    int exp = 1;
};
using FreeWord = std::vector<Letter>;

// Presentation of the product of a cyclic group of order n with an infinite
// cyclic group; each generator maps to (a mod n, b).
struct Presentation {
    i64 n = 0;
    std::vector<std::string> gens;
    std::vector<std::pair<i64, i64>> images;
    std::vector<FreeWord> relators;

    int gen_index(const std::string& name) const;  // throws UnknownGenerator
    // (a mod n, b) image of a word under the assignment.
    std::pair<i64, i64> evaluate(const FreeWord& w) const;
};

// Text format: gens: x,t; n: 5; map: x=(1,0), t=(0,1); rels: x^5, x t x^-1 t^-1
Presentation parse_presentation(const std::string& text);
std::string format_presentation(const Presentation& p);
FreeWord parse_word(const std::string& text, const Presentation& p);
std::string format_word(const FreeWord& w, const Presentation& p);

// The two built-in presentations: the standard one and the variant whose
// cyclic generator maps to x^v. Relator order is commutator first, power
// second (a flag flips it).
Presentation standard_presentation(i64 n);
Presentation power_presentation(i64 n, i64 v, bool power_relator_first = false);

// Free differential of a word with respect to one generator, pushed to the
// group ring: d(uv) = du + image(u)*dv, dg/dg = 1, dg^-1/dg = -image(g^-1).
GroupRingElem fox_derivative(const FreeWord& w, int gen, const Presentation& p);

// Boundary data of the 2-complex attached to a presentation: d2 columns are
// the Fox derivative vectors of the relators, d1 rows are image(gen) - 1.
struct FoxComplex {
    i64 n = 0;
    Matrix<GroupRingElem> d2;  // gens x relators
    Matrix<GroupRingElem> d1;  // 1 x gens
    std::optional<Presentation> pres;
};

FoxComplex build_complex(const Presentation& p);  // throws RelatorNotTrivial
// Appends m trivial relators (zero columns of d2).
FoxComplex stabilize_complex(const FoxComplex& c, int m);
// d1 * d2 = 0 and augmentation of every d1 entry = 0.
bool complex_boundary_ok(const FoxComplex& c, std::string* detail = nullptr);

// The geometric-sum multiplier 1 + x^v + ... + x^(v(w-1)) with w the inverse
// of v mod n; satisfies (1 - x^v) * tau = 1 - x and augment(tau) = w.
GroupRingElem unit_multiplier(i64 n, i64 v);

// Chain map from the standard complex to the power-presentation complex:
// f3 acts on the second homotopy module as multiplication, f2 and f1 are the
// displayed diagonal matrices.
struct ChainMapWitness {
    FoxComplex source;
    FoxComplex target;
    GroupRingElem f3;
    Matrix<GroupRingElem> f2;
    Matrix<GroupRingElem> f1;
};

ChainMapWitness make_power_chain_map(i64 n, i64 v);

struct ChainMapReport {
    bool ok = false;
    std::string failing_square;  // empty when ok
};

// Exact commuting-square checks: the inclusion square on the two generators
// (0, x-1) and (N, t-1) of the second homotopy module, the middle square
// f1 * d2_src = d2_tgt * f2, and the d1 square d1_src = d1_tgt * f1.
ChainMapReport verify_chain_map(const ChainMapWitness& w);

// Cochains (a b) with both entries in the augmentation ideal.
struct CocyclePair {
    GroupRingElem a;
    GroupRingElem b;
};

// Cocycle test against the periodic resolution; throws
// NotInAugmentationIdeal when the entries do not augment to zero.
bool is_cocycle(const CocyclePair& c);

struct Ext3Class {
    i64 n = 0;
    i64 value = 0;  // residue mod n
};

// The classifier: value = augment(q) mod n where q * (x-1) = a. Coboundaries
// map to zero; the standard complex's class is one.
Ext3Class ext3_class(const CocyclePair& c);

// Realizes the congruence class of a unit w mod n by the presentation whose
// cyclic generator is the inverse power: returns the presentation, complex,
// verified chain-map witness, classifying cocycle and its class (= w).
struct Realization {
    Presentation pres;
    FoxComplex complex;
    ChainMapWitness witness;
    CocyclePair cocycle;
    Ext3Class cls;
};

Realization realize_unit(i64 n, i64 w);

// Boundary identity of the rank-two free abelian group's 2-complex,
// verified over the two-variable integer Laurent ring.
bool check_cinf_squared();

}  // namespace wf
