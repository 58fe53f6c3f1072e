#include "whitefox/complexes.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "whitefox/textio.hpp"

namespace wf {

// ------------------------------ presentations -------------------------------

int Presentation::gen_index(const std::string& name) const {
    for (size_t i = 0; i < gens.size(); ++i)
        if (gens[i] == name) return static_cast<int>(i);
    fail(Errc::UnknownGenerator, "unknown generator '" + name + "'");
}

std::pair<i64, i64> Presentation::evaluate(const FreeWord& w) const {
    i64 a = 0, b = 0;
    for (const Letter& l : w) {
        const auto& [ga, gb] = images[static_cast<size_t>(l.gen)];
        a = floor_mod(a + l.exp * ga, n);
        b += l.exp * gb;
    }
    return {a, b};
}

namespace {

std::string strip(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

// Letters are generator names with optional ^exponent; whitespace optional
// when names are unambiguous prefixes (longest match wins). A standalone `1`
// denotes the empty word (trivial relator).
FreeWord tokenize_word(const std::string& text, const Presentation& p) {
    FreeWord w;
    size_t pos = 0;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '1') {
            ++pos;
            continue;
        }
        int best = -1;
        size_t best_len = 0;
        for (size_t g = 0; g < p.gens.size(); ++g) {
            const std::string& name = p.gens[g];
            if (name.size() > best_len && text.compare(pos, name.size(), name) == 0) {
                best = static_cast<int>(g);
                best_len = name.size();
            }
        }
        if (best < 0) fail(Errc::ParseError, "unknown generator in word near '" + text.substr(pos, 8) + "'");
        pos += best_len;
        i64 exp = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            i64 sign = 1;
            if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
                if (text[pos] == '-') sign = -1;
                ++pos;
            }
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) fail(Errc::ParseError, "missing exponent in word");
            exp = sign * std::stoll(text.substr(start, pos - start));
        }
        const int step = exp >= 0 ? 1 : -1;
        for (i64 i = 0; i != exp; i += step) w.push_back(Letter{best, step});
    }
    return w;
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
    Presentation p;
    std::vector<std::string> rel_texts;
    std::map<std::string, std::pair<i64, i64>> assigned;
    for (const std::string& raw : split(text, ';')) {
        const std::string section = strip(raw);
        if (section.empty()) continue;
        const size_t colon = section.find(':');
        if (colon == std::string::npos) fail(Errc::ParseError, "presentation section missing ':'");
        const std::string key = strip(section.substr(0, colon));
        const std::string value = strip(section.substr(colon + 1));
        if (key == "gens") {
            for (const std::string& g : split(value, ',')) p.gens.push_back(strip(g));
        } else if (key == "n") {
            p.n = std::stoll(value);
        } else if (key == "map") {
            // entries g=(a,b) separated by commas; split on ')' to keep pairs whole
            std::string rest = value;
            while (true) {
                const size_t close = rest.find(')');
                if (close == std::string::npos) break;
                std::string item = strip(rest.substr(0, close));
                rest = rest.substr(close + 1);
                if (!rest.empty() && strip(rest)[0] == ',') rest = strip(rest).substr(1);
                if (item.empty()) continue;
                const size_t eq = item.find('=');
                const size_t open = item.find('(');
                if (eq == std::string::npos || open == std::string::npos)
                    fail(Errc::ParseError, "malformed generator assignment '" + item + "'");
                const std::string g = strip(item.substr(0, eq));
                const auto nums = split(item.substr(open + 1), ',');
                if (nums.size() != 2) fail(Errc::ParseError, "assignment needs two components");
                assigned[g] = {std::stoll(strip(nums[0])), std::stoll(strip(nums[1]))};
            }
        } else if (key == "rels") {
            for (const std::string& r : split(value, ',')) rel_texts.push_back(strip(r));
        } else {
            fail(Errc::ParseError, "unknown presentation section '" + key + "'");
        }
    }
    if (p.n < 2) fail(Errc::ParseError, "presentation needs n >= 2");
    if (p.gens.empty()) fail(Errc::ParseError, "presentation needs generators");
    for (const std::string& g : p.gens) {
        auto it = assigned.find(g);
        if (it == assigned.end()) fail(Errc::ParseError, "generator '" + g + "' has no assignment");
        p.images.emplace_back(floor_mod(it->second.first, p.n), it->second.second);
    }
    for (const std::string& r : rel_texts)
        if (!r.empty()) p.relators.push_back(tokenize_word(r, p));
    return p;
}

std::string format_presentation(const Presentation& p) {
    std::ostringstream out;
    out << "gens: ";
    for (size_t i = 0; i < p.gens.size(); ++i) out << (i ? "," : "") << p.gens[i];
    out << "; n: " << p.n << "; map: ";
    for (size_t i = 0; i < p.gens.size(); ++i)
        out << (i ? ", " : "") << p.gens[i] << "=(" << p.images[i].first << "," << p.images[i].second << ")";
    out << "; rels: ";
    for (size_t i = 0; i < p.relators.size(); ++i) out << (i ? ", " : "") << format_word(p.relators[i], p);
    return out.str();
}

FreeWord parse_word(const std::string& text, const Presentation& p) { return tokenize_word(text, p); }

std::string format_word(const FreeWord& w, const Presentation& p) {
    if (w.empty()) return "1";
    std::ostringstream out;
    // Run-length collapse of repeated letters.
    size_t i = 0;
    bool first = true;
    while (i < w.size()) {
        size_t j = i;
        i64 exp = 0;
        while (j < w.size() && w[j].gen == w[i].gen && w[j].exp == w[i].exp) {
            exp += w[j].exp;
            ++j;
        }
        if (!first) out << " ";
        out << p.gens[static_cast<size_t>(w[i].gen)];
        if (exp != 1) out << "^" << exp;
        first = false;
        i = j;
    }
    return out.str();
}

Presentation standard_presentation(i64 n) { return power_presentation(n, 1); }

Presentation power_presentation(i64 n, i64 v, bool power_relator_first) {
    if (n < 2) fail(Errc::ParseError, "presentation needs n >= 2");
    i64 x, y;
    if (ext_gcd(floor_mod(v, n), n, x, y) != 1) fail(Errc::NotCoprime, "power must be coprime to n");
    Presentation p;
    p.n = n;
    p.gens = {v == 1 ? "x" : "y", "t"};
    p.images = {{floor_mod(v, n), 0}, {0, 1}};
    FreeWord commutator = {{0, 1}, {1, 1}, {0, -1}, {1, -1}};
    FreeWord power(static_cast<size_t>(n), Letter{0, 1});
    if (power_relator_first) {
        p.relators = {power, commutator};
    } else {
        p.relators = {commutator, power};
    }
    return p;
}

// ------------------------------ fox calculus --------------------------------

GroupRingElem fox_derivative(const FreeWord& w, int gen, const Presentation& p) {
    if (gen < 0 || static_cast<size_t>(gen) >= p.gens.size())
        fail(Errc::UnknownGenerator, "fox derivative with respect to an unknown generator");
    GroupRingElem acc = GroupRingElem::zero(p.n);
    i64 pa = 0, pb = 0;  // image of the prefix
    for (const Letter& l : w) {
        const auto& [ga, gb] = p.images[static_cast<size_t>(l.gen)];
        if (l.gen == gen) {
            if (l.exp == 1) {
                // prefix * 1
                acc.add_term(pa, pb, 1);
            } else {
                // prefix * (-g^-1)
                acc.add_term(floor_mod(pa - ga, p.n), pb - gb, -1);
            }
        }
        pa = floor_mod(pa + l.exp * ga, p.n);
        pb += l.exp * gb;
    }
    return acc;
}

FoxComplex build_complex(const Presentation& p) {
    for (size_t r = 0; r < p.relators.size(); ++r) {
        const auto [a, b] = p.evaluate(p.relators[r]);
        if (a != 0 || b != 0) {
            std::ostringstream msg;
            msg << "relator '" << format_word(p.relators[r], p) << "' maps to (" << a << "," << b
                << "), not the identity";
            fail(Errc::RelatorNotTrivial, msg.str());
        }
    }
    const int g = static_cast<int>(p.gens.size());
    const int r = static_cast<int>(p.relators.size());
    FoxComplex c;
    c.n = p.n;
    c.pres = p;
    c.d2 = Matrix<GroupRingElem>(p.n, g, r);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < r; ++j) c.d2.at(i, j) = fox_derivative(p.relators[static_cast<size_t>(j)], i, p);
    c.d1 = Matrix<GroupRingElem>(p.n, 1, g);
    for (int i = 0; i < g; ++i) {
        const auto& [ga, gb] = p.images[static_cast<size_t>(i)];
        c.d1.at(0, i) = GroupRingElem::monomial(p.n, 1, ga, gb) - GroupRingElem::one(p.n);
    }
    return c;
}

FoxComplex stabilize_complex(const FoxComplex& c, int m) {
    if (m < 0) fail(Errc::DimensionMismatch, "negative stabilization");
    FoxComplex out = c;
    Matrix<GroupRingElem> d2(c.n, c.d2.rows(), c.d2.cols() + m);
    for (int i = 0; i < c.d2.rows(); ++i)
        for (int j = 0; j < c.d2.cols(); ++j) d2.at(i, j) = c.d2.at(i, j);
    out.d2 = std::move(d2);
    if (out.pres) {
        for (int i = 0; i < m; ++i) out.pres->relators.push_back(FreeWord{});
    }
    return out;
}

bool complex_boundary_ok(const FoxComplex& c, std::string* detail) {
    if (!(c.d1 * c.d2).is_zero()) {
        if (detail) *detail = "d1 * d2 is not zero";
        return false;
    }
    for (int i = 0; i < c.d1.cols(); ++i) {
        if (c.d1.at(0, i).augment() != 0) {
            if (detail) *detail = "augmentation of d1 entry " + std::to_string(i) + " is not zero";
            return false;
        }
    }
    return true;
}

// ------------------------------- chain maps ---------------------------------

GroupRingElem unit_multiplier(i64 n, i64 v) {
    v = floor_mod(v, n);
    i64 xx, yy;
    if (v < 1 || ext_gcd(v, n, xx, yy) != 1) fail(Errc::NotCoprime, "power must be coprime to n");
    const i64 w = inverse_mod(v, n);
    GroupRingElem tau(n);
    for (i64 i = 0; i < w; ++i) tau.add_term(floor_mod(i * v, n), 0, 1);
    return tau;
}

ChainMapWitness make_power_chain_map(i64 n, i64 v) {
    ChainMapWitness w;
    w.source = build_complex(standard_presentation(n));
    w.target = build_complex(power_presentation(n, v));
    w.f3 = unit_multiplier(n, v);
    w.f2 = Matrix<GroupRingElem>(n, 2, 2);
    w.f2.at(0, 0) = w.f3;
    w.f2.at(1, 1) = w.f3;
    w.f1 = Matrix<GroupRingElem>(n, 2, 2);
    w.f1.at(0, 0) = w.f3;
    w.f1.at(1, 1) = GroupRingElem::one(n);
    return w;
}

namespace {

// The second homotopy module's generators inside the rank-two free module.
std::vector<Matrix<GroupRingElem>> pi2_generators(i64 n) {
    const GroupRingElem xm1 = GroupRingElem::monomial(n, 1, 1, 0) - GroupRingElem::one(n);
    const GroupRingElem tm1 = GroupRingElem::monomial(n, 1, 0, 1) - GroupRingElem::one(n);
    Matrix<GroupRingElem> u1(n, 2, 1), u2(n, 2, 1);
    u1.at(1, 0) = xm1;
    u2.at(0, 0) = GroupRingElem::norm_element(n);
    u2.at(1, 0) = tm1;
    return {u1, u2};
}

}  // namespace

ChainMapReport verify_chain_map(const ChainMapWitness& w) {
    const i64 n = w.source.n;
    if (w.target.n != n || w.source.d2.rows() != 2 || w.source.d2.cols() != 2 || w.target.d2.rows() != 2 ||
        w.target.d2.cols() != 2 || w.f2.rows() != 2 || w.f2.cols() != 2 || w.f1.rows() != 2 || w.f1.cols() != 2 ||
        w.source.d1.rows() != 1 || w.source.d1.cols() != 2 || w.target.d1.rows() != 1 || w.target.d1.cols() != 2)
        return {false, "shape"};

    // Both boundaries must kill the generators of the second homotopy module.
    for (const auto& u : pi2_generators(n)) {
        if (!(w.source.d2 * u).is_zero() || !(w.target.d2 * u).is_zero()) return {false, "pi2-kernel"};
        if (!(w.f2 * u == u.scaled(w.f3))) return {false, "pi2-generators"};
    }
    if (!(w.source.d1 == w.target.d1 * w.f1)) return {false, "d1-square"};
    if (!(w.f1 * w.source.d2 == w.target.d2 * w.f2)) return {false, "d2-square"};
    return {true, ""};
}

// ------------------------------ ext3 classifier -----------------------------

namespace {

Matrix<GroupRingElem> periodic_d2(i64 n) {
    Matrix<GroupRingElem> d2(n, 2, 2);
    d2.at(0, 0) = GroupRingElem::one(n) - GroupRingElem::monomial(n, 1, 0, 1);  // 1 - t
    d2.at(0, 1) = GroupRingElem::norm_element(n);
    d2.at(1, 0) = GroupRingElem::monomial(n, 1, 1, 0) - GroupRingElem::one(n);  // x - 1
    return d2;
}

}  // namespace

bool is_cocycle(const CocyclePair& c) {
    if (c.a.augment() != 0 || c.b.augment() != 0)
        fail(Errc::NotInAugmentationIdeal, "cochain entries must augment to zero");
    const i64 n = c.a.order();
    if (c.b.order() != n) fail(Errc::ModulusMismatch, "cochain entries live over different group rings");
    // Composition with the incoming boundary of the periodic resolution: the
    // row (a b) applied to the columns of d2.
    Matrix<GroupRingElem> row(n, 1, 2);
    row.at(0, 0) = c.a;
    row.at(0, 1) = c.b;
    return (row * periodic_d2(n)).is_zero();
}

Ext3Class ext3_class(const CocyclePair& c) {
    if (!is_cocycle(c)) fail(Errc::NotDivisible, "pair is not a cocycle");
    const i64 n = c.a.order();
    const GroupRingElem q = divide_by_x_minus_1(c.a);
    return {n, floor_mod(q.augment(), n)};
}

// ------------------------------- realization --------------------------------

Realization realize_unit(i64 n, i64 w) {
    w = floor_mod(w, n);
    i64 xx, yy;
    if (w < 1 || ext_gcd(w, n, xx, yy) != 1) fail(Errc::NotCoprime, "class must be a unit mod n");
    const i64 v = inverse_mod(w, n);

    Realization r;
    r.pres = power_presentation(n, v);
    r.complex = build_complex(r.pres);
    r.witness = make_power_chain_map(n, v);
    ChainMapReport rep = verify_chain_map(r.witness);
    if (!rep.ok) fail(Errc::Internal, "chain-map witness failed at square " + rep.failing_square);

    const GroupRingElem tau = r.witness.f3;
    const GroupRingElem xm1 = GroupRingElem::monomial(n, 1, 1, 0) - GroupRingElem::one(n);
    const GroupRingElem tm1 = GroupRingElem::monomial(n, 1, 0, 1) - GroupRingElem::one(n);
    r.cocycle = {tau * xm1, tau * tm1};
    r.cls = ext3_class(r.cocycle);
    if (r.cls.value != w) fail(Errc::Internal, "realized class differs from the requested unit");
    return r;
}

// ---------------------- rank-two free abelian check --------------------------

namespace {

// Minimal two-variable integer Laurent ring, only what the boundary identity
// needs.
struct Biv {
    std::map<std::pair<i64, i64>, i64> terms;  // (x-exp, t-exp) -> coeff

    static Biv monomial(i64 c, i64 xe, i64 te) {
        Biv f;
        f.add(xe, te, c);
        return f;
    }

    void add(i64 xe, i64 te, i64 c) {
        if (c == 0) return;
        auto key = std::make_pair(xe, te);
        auto [it, inserted] = terms.try_emplace(key, c);
        if (!inserted) {
            it->second = checked_add(it->second, c);
            if (it->second == 0) terms.erase(it);
        }
    }

    Biv operator+(const Biv& o) const {
        Biv r = *this;
        for (const auto& [k, c] : o.terms) r.add(k.first, k.second, c);
        return r;
    }

    Biv operator*(const Biv& o) const {
        Biv r;
        for (const auto& [k1, c1] : terms)
            for (const auto& [k2, c2] : o.terms)
                r.add(k1.first + k2.first, k1.second + k2.second, checked_mul(c1, c2));
        return r;
    }

    bool is_zero() const { return terms.empty(); }
};

}  // namespace

bool check_cinf_squared() {
    const Biv one = Biv::monomial(1, 0, 0);
    const Biv x = Biv::monomial(1, 1, 0);
    const Biv t = Biv::monomial(1, 0, 1);
    const Biv neg = Biv::monomial(-1, 0, 0);
    const Biv one_minus_t = one + neg * t;
    const Biv x_minus_1 = x + neg;
    const Biv t_minus_1 = t + neg;
    // d2 = (1-t, x-1)^T, d1 = (x-1, t-1): the composite must vanish, and both
    // d1 entries must augment to zero.
    const Biv composite = x_minus_1 * one_minus_t + t_minus_1 * x_minus_1;
    if (!composite.is_zero()) return false;
    auto augments_to_zero = [](const Biv& f) {
        i64 s = 0;
        for (const auto& [k, c] : f.terms) s = checked_add(s, c);
        return s == 0;
    };
    return augments_to_zero(x_minus_1) && augments_to_zero(t_minus_1);
}

}  // namespace wf
