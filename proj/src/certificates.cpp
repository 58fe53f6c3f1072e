#include "whitefox/certificates.hpp"

#include <sstream>

#include "whitefox/textio.hpp"

namespace wf {

namespace {

json envelope(const char* kind, json claim, json payload) {
    json j;
    j["kind"] = kind;
    j["toolchain"] = kToolchain;
    j["claim"] = std::move(claim);
    j["payload"] = std::move(payload);
    return j;
}

}  // namespace

json make_factorization_cert(i64 n, const Matrix<Laurent>& E, const ElemWord& word) {
    json claim;
    claim["n"] = n;
    claim["matrix"] = matrix_to_json(E);
    json payload;
    payload["word"] = word_to_json(word);
    return envelope("factorization", std::move(claim), std::move(payload));
}

json make_snf_cert(i64 p, const Matrix<Laurent>& A, const SnfResult& r) {
    json claim;
    claim["p"] = p;
    claim["matrix"] = matrix_to_json(A);
    json diag = json::array();
    for (const Laurent& d : r.diag) diag.push_back(to_string(d));
    claim["diag"] = std::move(diag);
    json payload;
    payload["left"] = word_to_json(r.left);
    payload["right"] = word_to_json(r.right);
    return envelope("snf", std::move(claim), std::move(payload));
}

json make_reduction_cert(const Laurent& alpha, const Matrix<Laurent>& B, const StableVerdict& v) {
    if (v.kind != StableVerdict::Kind::Reduced) fail(Errc::Internal, "only reduced verdicts are certifiable");
    json claim;
    claim["n"] = B.ring().mod;
    claim["alpha"] = to_string(alpha);
    claim["matrix"] = matrix_to_json(B);
    json payload;
    payload["left"] = word_to_json(v.left);
    payload["right"] = word_to_json(v.right);
    payload["mu"] = to_string(v.mu);
    if (v.sigma) {
        json sigma;
        sigma["image"] = to_string(v.sigma_image);
        sigma["lift"] = to_string(v.sigma->element);
        sigma["lift_inverse"] = to_string(v.sigma->inverse);
        payload["sigma"] = std::move(sigma);
    }
    return envelope("reduction", std::move(claim), std::move(payload));
}

json make_iso_witness_cert(const Matrix<Laurent>& A, const Matrix<Laurent>& B, const IsoWitness& w) {
    json claim;
    claim["n"] = A.ring().mod;
    claim["k"] = A.rows();
    claim["a"] = matrix_to_json(A);
    claim["b"] = matrix_to_json(B);
    json payload;
    payload["c_lift"] = matrix_to_json(w.c_lift);
    payload["d_lift"] = matrix_to_json(w.d_lift);
    return envelope("iso-witness", std::move(claim), std::move(payload));
}

json make_chain_map_cert(const Realization& r) {
    json claim;
    claim["n"] = r.cls.n;
    claim["w"] = r.cls.value;
    claim["class"] = r.cls.value;
    json payload;
    payload["presentation"] = format_presentation(r.pres);
    payload["f3"] = to_string(r.witness.f3);
    payload["f2"] = matrix_to_json(r.witness.f2);
    payload["f1"] = matrix_to_json(r.witness.f1);
    payload["cocycle"] = {{"a", to_string(r.cocycle.a)}, {"b", to_string(r.cocycle.b)}};
    return envelope("chain-map", std::move(claim), std::move(payload));
}

json make_ext3_cert(const CocyclePair& c, const Ext3Class& cls) {
    json claim;
    claim["n"] = cls.n;
    claim["class"] = cls.value;
    json payload;
    payload["a"] = to_string(c.a);
    payload["b"] = to_string(c.b);
    return envelope("ext3", std::move(claim), std::move(payload));
}

json make_swan_cert(const SwanModule& m, const Matrix<NormQuotElem>& d_lift,
                    const Matrix<NormQuotElem>& d_inverse) {
    json claim;
    claim["n"] = m.n;
    claim["k"] = m.k;
    claim["a"] = matrix_to_json(m.a_class);
    claim["free"] = true;
    json payload;
    payload["d_lift"] = matrix_to_json(d_lift);
    payload["d_inverse"] = matrix_to_json(d_inverse);
    return envelope("swan", std::move(claim), std::move(payload));
}

json make_ideals_cert(i64 n) {
    json claim;
    claim["n"] = n;
    json cands = json::array();
    for (const auto& c : enumerate_max_ideal_candidates(n)) {
        json item;
        item["p"] = c.p;
        item["omega"] = to_string(c.omega, 'x');
        cands.push_back(std::move(item));
    }
    claim["candidates"] = std::move(cands);
    json payload;
    json facts = json::array();
    for (const auto& [p, e] : ModFactors::of(n).factors) {
        (void)e;
        json fp;
        fp["p"] = p;
        json fs = json::array();
        for (const auto& f : factor_xn_minus_1(n, p)) {
            json item;
            item["omega"] = to_string(f.factor, 'x');
            item["mult"] = f.multiplicity;
            fs.push_back(std::move(item));
        }
        fp["factors"] = std::move(fs);
        facts.push_back(std::move(fp));
    }
    payload["factorizations"] = std::move(facts);
    return envelope("ideals", std::move(claim), std::move(payload));
}

// ------------------------------ verification --------------------------------

namespace {

VerifyResult fail_with(const std::string& msg) { return {false, msg}; }

VerifyResult verify_factorization(const json& env) {
    const json& claim = env.at("claim");
    const i64 n = claim.at("n").get<i64>();
    Matrix<Laurent> E = laurent_matrix_from_json(claim.at("matrix"));
    if (!(E.ring() == CoeffRing::mod_n(n))) return fail_with("matrix ring differs from the claimed modulus");
    ElemWord word = word_from_json(env.at("payload").at("word"));
    if (word.k != E.rows() || !(word.ring == E.ring())) return fail_with("word shape differs from the matrix");
    if (!word.all_det_one()) return fail_with("word contains an op without determinant one");
    if (!(word.evaluate() == E)) return fail_with("word evaluation differs from the claimed matrix");
    return {true, ""};
}

bool divisibility_chain_ok(const std::vector<Laurent>& diag) {
    // Either orientation of the chain is accepted.
    auto divides = [](const Laurent& d, const Laurent& a) {
        if (a.is_zero()) return true;
        if (d.is_zero()) return false;
        return laurent_divmod(a, d).second.is_zero();
    };
    bool asc = true, desc = true;
    for (size_t i = 0; i + 1 < diag.size(); ++i) {
        if (!divides(diag[i], diag[i + 1])) asc = false;
        if (!divides(diag[i + 1], diag[i])) desc = false;
    }
    return asc || desc;
}

VerifyResult verify_snf(const json& env) {
    const json& claim = env.at("claim");
    const i64 p = claim.at("p").get<i64>();
    Matrix<Laurent> A = laurent_matrix_from_json(claim.at("matrix"));
    if (!(A.ring() == CoeffRing::prime_field(p))) return fail_with("matrix ring differs from the claimed field");
    std::vector<Laurent> diag;
    for (const json& d : claim.at("diag")) diag.push_back(parse_laurent(d.get<std::string>(), A.ring()));
    if (static_cast<int>(diag.size()) != A.rows()) return fail_with("diagonal length differs from the matrix size");
    ElemWord left = word_from_json(env.at("payload").at("left"));
    ElemWord right = word_from_json(env.at("payload").at("right"));
    if (!left.all_det_one() || !right.all_det_one()) return fail_with("witness op without determinant one");
    if (!(left.evaluate() * A * right.evaluate() == Matrix<Laurent>::diagonal(A.ring(), diag)))
        return fail_with("left * A * right differs from the claimed diagonal");
    if (!divisibility_chain_ok(diag)) return fail_with("diagonal divisibility chain fails in both orders");
    return {true, ""};
}

VerifyResult verify_reduction(const json& env) {
    const json& claim = env.at("claim");
    const i64 n = claim.at("n").get<i64>();
    const CoeffRing ring = CoeffRing::mod_n(n);
    const Laurent alpha = parse_laurent(claim.at("alpha").get<std::string>(), ring);
    Matrix<Laurent> B = laurent_matrix_from_json(claim.at("matrix"));
    if (!(B.ring() == ring)) return fail_with("matrix ring differs from the claimed modulus");
    const json& payload = env.at("payload");
    ElemWord left = word_from_json(payload.at("left"));
    ElemWord right = word_from_json(payload.at("right"));
    if (!left.all_det_one() || !right.all_det_one()) return fail_with("witness op without determinant one");
    Laurent mu = parse_laurent(payload.value("mu", "1"), ring);
    Laurent sigma = Laurent::one(ring);
    if (payload.contains("sigma")) {
        const json& s = payload.at("sigma");
        sigma = parse_laurent(s.at("image").get<std::string>(), ring);
        NormQuotElem lift = parse_norm_quot(s.at("lift").get<std::string>(), n);
        NormQuotElem inv = parse_norm_quot(s.at("lift_inverse").get<std::string>(), n);
        if (!((lift * inv) == NormQuotElem::one(n))) return fail_with("sigma lift and inverse do not multiply to one");
        if (!(lift.augment_mod_n() == sigma)) return fail_with("sigma image differs from its lift's augmentation");
    }
    if (!mu.is_monomial() || (mu.coeff(mu.min_exp()) != 1 && mu.coeff(mu.min_exp()) != n - 1))
        return fail_with("mu is not a signed power of t");
    Matrix<Laurent> Bn = normalize_by_scalars(B, mu, sigma);
    const int k = B.rows();
    Matrix<Laurent> target = pad_identity(Matrix<Laurent>::diagonal(ring, {alpha}), k - 1);
    if (!(left.evaluate() * Bn * right.evaluate() == target))
        return fail_with("left * normalized(B) * right differs from the alpha block");
    return {true, ""};
}

VerifyResult verify_iso(const json& env) {
    const json& claim = env.at("claim");
    Matrix<Laurent> A = laurent_matrix_from_json(claim.at("a"));
    Matrix<Laurent> B = laurent_matrix_from_json(claim.at("b"));
    IsoWitness w{laurent_matrix_from_json(env.at("payload").at("c_lift")),
                 norm_quot_matrix_from_json(env.at("payload").at("d_lift"))};
    IsoReport rep = verify_iso_witness(A, B, w);
    if (!rep.ok) return fail_with("witness rejected: " + rep.failed_clause);
    return {true, ""};
}

VerifyResult verify_chain_map_env(const json& env) {
    const json& claim = env.at("claim");
    const i64 n = claim.at("n").get<i64>();
    const i64 w = claim.at("w").get<i64>();
    const json& payload = env.at("payload");
    Presentation pres = parse_presentation(payload.at("presentation").get<std::string>());
    if (pres.n != n) return fail_with("presentation order differs from the claim");

    ChainMapWitness wit;
    wit.source = build_complex(standard_presentation(n));
    wit.target = build_complex(pres);
    wit.f3 = parse_group_ring(payload.at("f3").get<std::string>(), n);
    wit.f2 = group_matrix_from_json(payload.at("f2"));
    wit.f1 = group_matrix_from_json(payload.at("f1"));
    ChainMapReport rep = verify_chain_map(wit);
    if (!rep.ok) return fail_with("chain map fails at square: " + rep.failing_square);

    CocyclePair c{parse_group_ring(payload.at("cocycle").at("a").get<std::string>(), n),
                  parse_group_ring(payload.at("cocycle").at("b").get<std::string>(), n)};
    Ext3Class cls{};
    try {
        cls = ext3_class(c);
    } catch (const Error& e) {
        return fail_with(std::string("cocycle rejected: ") + e.what());
    }
    if (cls.value != floor_mod(w, n)) return fail_with("classifier value differs from the claimed unit");
    // The cocycle must be the one induced by f3 on the identified module.
    const GroupRingElem xm1 = GroupRingElem::monomial(n, 1, 1, 0) - GroupRingElem::one(n);
    const GroupRingElem tm1 = GroupRingElem::monomial(n, 1, 0, 1) - GroupRingElem::one(n);
    if (!(c.a == wit.f3 * xm1) || !(c.b == wit.f3 * tm1))
        return fail_with("cocycle differs from the one induced by f3");
    return {true, ""};
}

VerifyResult verify_ext3(const json& env) {
    const json& claim = env.at("claim");
    const i64 n = claim.at("n").get<i64>();
    const i64 value = claim.at("class").get<i64>();
    CocyclePair c{parse_group_ring(env.at("payload").at("a").get<std::string>(), n),
                  parse_group_ring(env.at("payload").at("b").get<std::string>(), n)};
    try {
        if (!is_cocycle(c)) return fail_with("pair is not a cocycle");
        Ext3Class cls = ext3_class(c);
        if (cls.value != floor_mod(value, n)) return fail_with("classifier value differs from the claim");
    } catch (const Error& e) {
        return fail_with(std::string("cocycle rejected: ") + e.what());
    }
    return {true, ""};
}

VerifyResult verify_swan(const json& env) {
    const json& claim = env.at("claim");
    const i64 n = claim.at("n").get<i64>();
    Matrix<Laurent> A = laurent_matrix_from_json(claim.at("a"));
    SwanModule m = build_swan_module(n, A);
    Matrix<NormQuotElem> d_lift = norm_quot_matrix_from_json(env.at("payload").at("d_lift"));
    SwanReport rep = verify_swan_freeness(m, d_lift);
    if (!rep.ok) return fail_with("freeness witness rejected: " + rep.detail);
    if (env.at("payload").contains("d_inverse")) {
        Matrix<NormQuotElem> inv = norm_quot_matrix_from_json(env.at("payload").at("d_inverse"));
        if (!(d_lift * inv == Matrix<NormQuotElem>::identity(n, m.k)))
            return fail_with("provided inverse fails to invert the witness");
    }
    return {true, ""};
}

VerifyResult verify_ideals(const json& env) {
    const json& claim = env.at("claim");
    const i64 n = claim.at("n").get<i64>();
    auto expected = enumerate_max_ideal_candidates(n);
    const json& cands = claim.at("candidates");
    if (cands.size() != expected.size()) return fail_with("candidate count differs from recomputation");
    for (size_t i = 0; i < expected.size(); ++i) {
        const json& item = cands[i];
        const i64 p = item.at("p").get<i64>();
        if (p != expected[i].p) return fail_with("candidate prime differs from recomputation");
        Laurent omega = parse_laurent(item.at("omega").get<std::string>(), CoeffRing::prime_field(p), 'x');
        if (!(omega == expected[i].omega)) return fail_with("candidate omega differs from recomputation");
    }
    // Payload factorizations must reconstruct x^n - 1 exactly.
    for (const json& fp : env.at("payload").at("factorizations")) {
        const i64 p = fp.at("p").get<i64>();
        const CoeffRing field = CoeffRing::prime_field(p);
        Laurent prod = Laurent::one(field);
        for (const json& f : fp.at("factors")) {
            Laurent omega = parse_laurent(f.at("omega").get<std::string>(), field, 'x');
            for (int m2 = 0; m2 < f.at("mult").get<int>(); ++m2) prod *= omega;
        }
        Laurent target = Laurent::monomial(field, 1, n);
        target.add_term(0, -1);
        if (!(prod == target)) return fail_with("factor product does not reconstruct x^n - 1");
    }
    return {true, ""};
}

}  // namespace

VerifyResult verify_envelope(const json& env) {
    if (!env.is_object() || !env.contains("kind") || !env.contains("claim") || !env.contains("payload"))
        fail(Errc::ParseError, "malformed certificate envelope");
    const std::string kind = env.at("kind").get<std::string>();
    try {
        if (kind == "factorization") return verify_factorization(env);
        if (kind == "snf") return verify_snf(env);
        if (kind == "reduction") return verify_reduction(env);
        if (kind == "iso-witness") return verify_iso(env);
        if (kind == "chain-map") return verify_chain_map_env(env);
        if (kind == "ext3") return verify_ext3(env);
        if (kind == "swan") return verify_swan(env);
        if (kind == "ideals") return verify_ideals(env);
    } catch (const Error& e) {
        if (e.code() == Errc::ParseError) throw;
        return fail_with(std::string(errc_name(e.code())) + ": " + e.what());
    }
    fail(Errc::ParseError, "unknown certificate kind '" + kind + "'");
}

// ------------------------------ mutations -----------------------------------

namespace {

void add_matrix_sites(std::vector<MutationSite>& out, const json& env, const std::string& pointer) {
    const json& m = env.at(json::json_pointer(pointer));
    const json& ring = m.at("ring");
    MutationSite proto;
    if (ring.value("type", "") == "laurent") {
        proto.kind = MutationSite::Kind::LaurentT;
        proto.ring = ring_from_json(ring);
    } else if (ring.value("type", "") == "group_ring") {
        proto.kind = MutationSite::Kind::GroupRing;
        proto.n = ring.at("n").get<i64>();
    } else {
        proto.kind = MutationSite::Kind::NormQuot;
        proto.n = ring.at("n").get<i64>();
    }
    const int rows = m.at("rows").get<int>();
    const int cols = m.at("cols").get<int>();
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            MutationSite s = proto;
            s.pointer = pointer + "/entries/" + std::to_string(i) + "/" + std::to_string(j);
            out.push_back(std::move(s));
        }
}

void add_word_sites(std::vector<MutationSite>& out, const json& env, const std::string& pointer) {
    const json& w = env.at(json::json_pointer(pointer));
    const CoeffRing ring = ring_from_json(w.at("ring"));
    const json& ops = w.at("ops");
    for (size_t i = 0; i < ops.size(); ++i) {
        const std::string base = pointer + "/ops/" + std::to_string(i);
        MutationSite s;
        s.kind = MutationSite::Kind::LaurentT;
        s.ring = ring;
        if (ops[i].at("kind").get<std::string>() == "T") {
            s.pointer = base + "/r";
            out.push_back(s);
        } else {
            s.pointer = base + "/u";
            out.push_back(s);
            s.pointer = base + "/u_inv";
            out.push_back(s);
        }
    }
}

void add_scalar_site(std::vector<MutationSite>& out, MutationSite::Kind kind, const std::string& pointer,
                     CoeffRing ring, i64 n) {
    MutationSite s;
    s.kind = kind;
    s.pointer = pointer;
    s.ring = ring;
    s.n = n;
    out.push_back(std::move(s));
}

}  // namespace

std::vector<MutationSite> mutation_sites(const json& env) {
    std::vector<MutationSite> out;
    const std::string kind = env.at("kind").get<std::string>();
    if (kind == "factorization") {
        add_matrix_sites(out, env, "/claim/matrix");
        add_word_sites(out, env, "/payload/word");
    } else if (kind == "snf") {
        add_matrix_sites(out, env, "/claim/matrix");
        const CoeffRing field = CoeffRing::prime_field(env.at("claim").at("p").get<i64>());
        for (size_t i = 0; i < env.at("claim").at("diag").size(); ++i)
            add_scalar_site(out, MutationSite::Kind::LaurentT, "/claim/diag/" + std::to_string(i), field, 0);
        add_word_sites(out, env, "/payload/left");
        add_word_sites(out, env, "/payload/right");
    } else if (kind == "reduction") {
        const CoeffRing ring = CoeffRing::mod_n(env.at("claim").at("n").get<i64>());
        add_matrix_sites(out, env, "/claim/matrix");
        add_scalar_site(out, MutationSite::Kind::LaurentT, "/claim/alpha", ring, 0);
        add_word_sites(out, env, "/payload/left");
        add_word_sites(out, env, "/payload/right");
    } else if (kind == "iso-witness") {
        add_matrix_sites(out, env, "/claim/a");
        add_matrix_sites(out, env, "/claim/b");
        add_matrix_sites(out, env, "/payload/c_lift");
        add_matrix_sites(out, env, "/payload/d_lift");
    } else if (kind == "chain-map") {
        const i64 n = env.at("claim").at("n").get<i64>();
        add_scalar_site(out, MutationSite::Kind::GroupRing, "/payload/f3", CoeffRing::integers(), n);
        add_matrix_sites(out, env, "/payload/f2");
        add_matrix_sites(out, env, "/payload/f1");
        add_scalar_site(out, MutationSite::Kind::GroupRing, "/payload/cocycle/a", CoeffRing::integers(), n);
        add_scalar_site(out, MutationSite::Kind::GroupRing, "/payload/cocycle/b", CoeffRing::integers(), n);
    } else if (kind == "ext3") {
        const i64 n = env.at("claim").at("n").get<i64>();
        add_scalar_site(out, MutationSite::Kind::GroupRing, "/payload/a", CoeffRing::integers(), n);
        add_scalar_site(out, MutationSite::Kind::GroupRing, "/payload/b", CoeffRing::integers(), n);
    } else if (kind == "swan") {
        add_matrix_sites(out, env, "/claim/a");
        add_matrix_sites(out, env, "/payload/d_lift");
    } else if (kind == "ideals") {
        const json& cands = env.at("claim").at("candidates");
        for (size_t i = 0; i < cands.size(); ++i) {
            const i64 p = cands[i].at("p").get<i64>();
            MutationSite s;
            s.kind = MutationSite::Kind::LaurentX;
            s.ring = CoeffRing::prime_field(p);
            s.pointer = "/claim/candidates/" + std::to_string(i) + "/omega";
            out.push_back(std::move(s));
        }
    } else {
        fail(Errc::ParseError, "unknown certificate kind for mutation");
    }
    return out;
}

json mutate_at(const json& env, const MutationSite& site, const std::function<i64(i64)>& pick) {
    json out = env;
    json::json_pointer ptr{site.pointer};
    const std::string text = out.at(ptr).get<std::string>();
    const i64 t_exp = pick(5) - 2;  // small window around 0
    switch (site.kind) {
        case MutationSite::Kind::LaurentT: {
            Laurent f = parse_laurent(text, site.ring);
            const i64 c = site.ring.is_modular() ? 1 + pick(site.ring.mod - 1) : 1 + pick(3);
            f.add_term(t_exp, c);
            out.at(ptr) = to_string(f);
            break;
        }
        case MutationSite::Kind::LaurentX: {
            Laurent f = parse_laurent(text, site.ring, 'x');
            const i64 deg = f.is_zero() ? 1 : f.max_exp();
            f.add_term(pick(deg + 1), 1 + pick(site.ring.mod - 1));
            out.at(ptr) = to_string(f, 'x');
            break;
        }
        case MutationSite::Kind::GroupRing: {
            GroupRingElem a = parse_group_ring(text, site.n);
            a.add_term(pick(site.n), t_exp, 1 + pick(site.n - 1));
            out.at(ptr) = to_string(a);
            break;
        }
        case MutationSite::Kind::NormQuot: {
            NormQuotElem s = parse_norm_quot(text, site.n);
            GroupRingElem lift = s.lift();
            lift.add_term(pick(site.n - 1), t_exp, 1 + pick(site.n - 1));
            out.at(ptr) = to_string(NormQuotElem::from_group_ring(lift));
            break;
        }
    }
    return out;
}

}  // namespace wf
