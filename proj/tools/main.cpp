// Command-line front end: JSON in/out, deterministic seeds, and a `verify`
// mode that re-checks any emitted certificate without trusting its producer.
//
// Exit codes: 0 ok, 1 input error, 2 mathematical precondition failure,
// 3 verification failure.

#include <CLI11.hpp>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "whitefox/certificates.hpp"
#include "whitefox/randgen.hpp"
#include "whitefox/textio.hpp"

using namespace wf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitVerification = 3;

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case Errc::ParseError:
            return kExitInput;
        default:
            return kExitPrecondition;
    }
}

std::string read_input(const std::string& path) {
    if (path == "-" || path.empty()) {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_json(const std::string& path) {
    try {
        return json::parse(read_input(path));
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::ParseError, std::string("invalid JSON: ") + e.what());
    }
}

void write_output(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) fail(Errc::ParseError, "cannot open '" + out_path + "' for writing");
        out << j.dump(2) << "\n";
    }
}

// Accepts a file path or inline presentation text.
Presentation load_presentation(const std::string& arg) {
    std::ifstream in(arg);
    if (in) {
        std::ostringstream ss;
        ss << in.rdbuf();
        return parse_presentation(ss.str());
    }
    return parse_presentation(arg);
}

unsigned long long effective_seed(unsigned long long cli_seed) {
    if (const char* env = std::getenv("WF_SEED")) return std::strtoull(env, nullptr, 10);
    return cli_seed;
}

// ----------------------------- selftest -------------------------------------

struct Battery {
    std::string name;
    int cases = 0;
    int failures = 0;
};

// Runs `total` independent cases, optionally across threads; case i uses a
// seed derived from (seed, i) so results do not depend on scheduling.
template <class Fn>
Battery run_battery(const std::string& name, int total, int jobs, unsigned long long seed, Fn&& fn) {
    std::vector<char> ok(static_cast<size_t>(total), 0);
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= total) return;
            Rng rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<unsigned long long>(i) + 1);
            bool pass = false;
            try {
                pass = fn(rng, i);
            } catch (const std::exception&) {
                pass = false;
            }
            ok[static_cast<size_t>(i)] = pass ? 1 : 0;
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    Battery b{name, total, 0};
    for (char c : ok)
        if (!c) ++b.failures;
    return b;
}

int cmd_selftest(unsigned long long seed, int cases, int jobs) {
    std::vector<Battery> batteries;

    batteries.push_back(run_battery("ring-laws", cases, jobs, seed ^ 1, [](Rng& rng, int) {
        const i64 n = 2 + rand_below(rng, 11);
        GroupRingElem a = random_group_ring(rng, n), b = random_group_ring(rng, n), c = random_group_ring(rng, n);
        return a * b == b * a && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c;
    }));

    batteries.push_back(run_battery("crt-roundtrip", cases, jobs, seed ^ 2, [](Rng& rng, int i) {
        const i64 ns[] = {4, 6, 12, 36};
        const ModFactors d = ModFactors::of(ns[i % 4]);
        Laurent f = random_laurent(rng, CoeffRing::mod_n(d.n), 5);
        return crt_join(crt_split(f, d), d) == f;
    }));

    batteries.push_back(run_battery("unit-inversion", cases, jobs, seed ^ 3, [](Rng& rng, int i) {
        const i64 ns[] = {4, 8, 9, 12};
        const ModFactors d = ModFactors::of(ns[i % 4]);
        UnitCert u = random_unit(rng, d, 3);
        return (u.element * u.inverse).is_one();
    }));

    batteries.push_back(run_battery("factor-roundtrip", cases, jobs, seed ^ 4, [](Rng& rng, int i) {
        const i64 ns[] = {2, 3, 4, 6, 9, 12};
        const ModFactors d = ModFactors::of(ns[i % 6]);
        const int k = 2 + (i % 2);
        ElemWord w = random_word(rng, d, k, 10);
        Matrix<Laurent> e = w.evaluate();
        ElemWord f = factor_det_one(e, d);
        return f.evaluate() == e && f.all_det_one();
    }));

    batteries.push_back(run_battery("snf-witness", cases, jobs, seed ^ 5, [](Rng& rng, int i) {
        const i64 ps[] = {2, 3, 5};
        const CoeffRing field = CoeffRing::prime_field(ps[i % 3]);
        const int k = 2 + (i % 3);
        Matrix<Laurent> a(field, k, k);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) a.at(r, c) = random_laurent(rng, field, 2, 3);
        SnfResult s = snf(a);
        return s.left.evaluate() * a * s.right.evaluate() == Matrix<Laurent>::diagonal(field, s.diag);
    }));

    batteries.push_back(run_battery("realize-units", cases, jobs, seed ^ 6, [](Rng& rng, int) {
        const i64 n = 2 + rand_below(rng, 11);
        i64 w = 1 + rand_below(rng, n - 1);
        i64 x, y;
        while (ext_gcd(w, n, x, y) != 1) w = 1 + rand_below(rng, n - 1);
        Realization r = realize_unit(n, w);
        return r.cls.value == w && verify_chain_map(r.witness).ok;
    }));

    batteries.push_back(run_battery("ext3-classifier", cases, jobs, seed ^ 7, [](Rng& rng, int) {
        const i64 n = 3 + rand_below(rng, 10);
        GroupRingElem a1 = random_group_ring(rng, n);
        GroupRingElem a2 = GroupRingElem::from_laurent(n, random_laurent(rng, CoeffRing::integers(), 2, 3));
        const GroupRingElem xm1 = GroupRingElem::monomial(n, 1, 1, 0) - GroupRingElem::one(n);
        const GroupRingElem tm1 = GroupRingElem::monomial(n, 1, 0, 1) - GroupRingElem::one(n);
        CocyclePair c{a1 * xm1, (a1 + a2 * GroupRingElem::norm_element(n)) * tm1};
        return ext3_class(c).value == floor_mod(a1.augment(), n);
    }));

    batteries.push_back(run_battery("certificate-loop", std::max(1, cases / 10), jobs, seed ^ 8, [](Rng& rng, int) {
        const ModFactors d = ModFactors::of(6);
        ElemWord w = random_word(rng, d, 2, 8);
        Matrix<Laurent> e = w.evaluate();
        json cert = make_factorization_cert(6, e, factor_det_one(e, d));
        if (!verify_envelope(cert).ok) return false;
        auto sites = mutation_sites(cert);
        auto pick = [&rng](i64 bound) { return bound <= 0 ? 0 : rand_below(rng, bound); };
        json mutated =
            mutate_at(cert, sites[static_cast<size_t>(rand_below(rng, static_cast<i64>(sites.size())))], pick);
        try {
            return !verify_envelope(mutated).ok;
        } catch (const Error&) {
            return true;
        }
    }));

    bool all_ok = true;
    for (const Battery& b : batteries) {
        const bool ok = b.failures == 0;
        all_ok = all_ok && ok;
        std::cout << (ok ? "ok   " : "FAIL ") << b.name << " (" << (b.cases - b.failures) << "/" << b.cases
                  << " cases)\n";
    }
    std::cout << (all_ok ? "selftest passed" : "selftest FAILED") << "\n";
    return all_ok ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact algebra toolkit for cyclic-by-infinite group rings"};
    app.require_subcommand(1);

    // factor-sl
    std::string fs_matrix{"-"}, fs_out;
    i64 fs_n = 0;
    auto* factor_sl = app.add_subcommand("factor-sl", "factor a determinant-one matrix into elementary ops");
    factor_sl->add_option("--n", fs_n, "modulus")->required();
    factor_sl->add_option("matrix", fs_matrix, "matrix JSON file (or - for stdin)");
    factor_sl->add_option("--out", fs_out, "output file");

    // snf
    std::string snf_matrix{"-"}, snf_out;
    auto* snf_cmd = app.add_subcommand("snf", "smith normal form with witness words over Fp[t,1/t]");
    snf_cmd->add_option("matrix", snf_matrix, "matrix JSON file (or - for stdin)");
    snf_cmd->add_option("--out", snf_out, "output file");

    // reduce-alpha
    std::string ra_matrix{"-"}, ra_alpha, ra_out;
    i64 ra_n = 0;
    auto* reduce_alpha = app.add_subcommand("reduce-alpha", "reduce a matrix to the alpha block by elementary ops");
    reduce_alpha->add_option("--n", ra_n, "modulus")->required();
    reduce_alpha->add_option("--alpha", ra_alpha, "scalar in the polynomial text encoding")->required();
    reduce_alpha->add_option("matrix", ra_matrix, "matrix JSON file (or - for stdin)");
    reduce_alpha->add_option("--out", ra_out, "output file");

    // module build | iso-verify | stable-decide
    auto* module_cmd = app.add_subcommand("module", "extension-class module calculus");
    module_cmd->require_subcommand(1);
    std::string mb_matrix{"-"}, mb_out;
    auto* module_build = module_cmd->add_subcommand("build", "generator matrix of the classified module");
    module_build->add_option("matrix", mb_matrix, "classifier matrix JSON (over Zn[t,1/t])");
    module_build->add_option("--out", mb_out, "output file");
    std::string mi_a, mi_b, mi_c, mi_d, mi_out;
    auto* module_iso = module_cmd->add_subcommand("iso-verify", "verify an isomorphism witness");
    module_iso->add_option("--a", mi_a, "classifier A JSON file")->required();
    module_iso->add_option("--b", mi_b, "classifier B JSON file")->required();
    module_iso->add_option("--c", mi_c, "C lift JSON file (integer laurent)")->required();
    module_iso->add_option("--d", mi_d, "D lift JSON file (norm quotient)")->required();
    module_iso->add_option("--out", mi_out, "write the witness certificate here");
    std::string ms_matrix{"-"}, ms_alpha, ms_out;
    i64 ms_n = 0;
    auto* module_stable = module_cmd->add_subcommand("stable-decide", "decide stable equivalence with a scalar");
    module_stable->add_option("--n", ms_n, "modulus")->required();
    module_stable->add_option("--alpha", ms_alpha, "scalar in the polynomial text encoding")->required();
    module_stable->add_option("matrix", ms_matrix, "matrix JSON file (or - for stdin)");
    module_stable->add_option("--out", ms_out, "output file");

    // swan build | verify
    auto* swan_cmd = app.add_subcommand("swan", "swan modules over the finite cyclic group");
    swan_cmd->require_subcommand(1);
    i64 sb_n = 0, sb_r = 0;
    std::string sb_matrix, sb_out;
    auto* swan_build = swan_cmd->add_subcommand("build", "generator matrix of a swan module");
    swan_build->add_option("--n", sb_n, "group order")->required();
    swan_build->add_option("--r", sb_r, "rank-one classifier residue");
    swan_build->add_option("matrix", sb_matrix, "classifier matrix JSON (over Zn, constants)");
    swan_build->add_option("--out", sb_out, "output file");
    i64 sv_n = 0, sv_r = 0;
    std::string sv_matrix, sv_d, sv_out;
    bool sv_search = false;
    auto* swan_verify = swan_cmd->add_subcommand("verify", "verify (or search) a freeness witness");
    swan_verify->add_option("--n", sv_n, "group order")->required();
    swan_verify->add_option("--r", sv_r, "rank-one classifier residue");
    swan_verify->add_option("--a", sv_matrix, "classifier matrix JSON file");
    swan_verify->add_option("--d", sv_d, "witness matrix JSON file (norm quotient)");
    swan_verify->add_flag("--search", sv_search, "search for a rank-one witness by bounded enumeration");
    swan_verify->add_option("--out", sv_out, "write the freeness certificate here");

    // fox
    std::string fox_pres, fox_word, fox_gen;
    auto* fox_cmd = app.add_subcommand("fox", "free differential of a word with respect to a generator");
    fox_cmd->add_option("--presentation", fox_pres, "presentation file or inline text")->required();
    fox_cmd->add_option("--word", fox_word, "word in the generators")->required();
    fox_cmd->add_option("--gen", fox_gen, "generator name")->required();

    // complex build | verify
    auto* complex_cmd = app.add_subcommand("complex", "boundary complexes of presentations");
    complex_cmd->require_subcommand(1);
    std::string cb_pres, cb_out;
    i64 cb_standard = 0, cb_power_n = 0, cb_power_v = 0;
    int cb_stabilize = 0;
    bool cb_power_first = false;
    auto* complex_build = complex_cmd->add_subcommand("build", "compile a presentation into boundary matrices");
    complex_build->add_option("--presentation", cb_pres, "presentation file or inline text");
    complex_build->add_option("--standard-n", cb_standard, "use the standard presentation of this order");
    complex_build->add_option("--power-n", cb_power_n, "power presentation order");
    complex_build->add_option("--power-v", cb_power_v, "power presentation exponent");
    complex_build->add_flag("--power-relator-first", cb_power_first,
                            "swap the built-in relator columns (power before commutator)");
    complex_build->add_option("--stabilize", cb_stabilize, "append this many trivial relators");
    complex_build->add_option("--out", cb_out, "output file");
    std::string cv_file{"-"};
    auto* complex_verify = complex_cmd->add_subcommand("verify", "re-check boundary identities of a complex");
    complex_verify->add_option("complex", cv_file, "complex JSON file (or - for stdin)");
    // Spelled-out alias.
    std::string vc_file{"-"};
    auto* verify_complex = app.add_subcommand("verify-complex", "alias of `complex verify`");
    verify_complex->add_option("complex", vc_file, "complex JSON file (or - for stdin)");

    // ext3
    std::string e3_cocycle{"-"}, e3_out;
    auto* ext3_cmd = app.add_subcommand("ext3", "classify a cocycle pair");
    ext3_cmd->add_option("--cocycle", e3_cocycle, "JSON file {n, a, b} (or - for stdin)");
    ext3_cmd->add_option("--out", e3_out, "output file");

    // realize
    i64 rz_n = 0, rz_w = 0;
    std::string rz_emit;
    auto* realize_cmd = app.add_subcommand("realize", "realize a unit class by a presentation");
    realize_cmd->add_option("--n", rz_n, "cyclic order")->required();
    realize_cmd->add_option("--w", rz_w, "unit mod n")->required();
    realize_cmd->add_option("--emit-witness", rz_emit, "write the certificate envelope here");

    // ideals
    i64 id_n = 0;
    bool id_cert = false;
    std::string id_out;
    auto* ideals_cmd = app.add_subcommand("ideals", "candidate non-projective maximal ideals");
    ideals_cmd->add_option("--n", id_n, "group order")->required();
    ideals_cmd->add_flag("--cert", id_cert, "emit the full certificate envelope");
    ideals_cmd->add_option("--out", id_out, "output file");

    // verify
    std::string vf_file{"-"};
    auto* verify_cmd = app.add_subcommand("verify", "independently re-check a certificate envelope");
    verify_cmd->add_option("cert", vf_file, "certificate JSON file (or - for stdin)");

    // selftest
    unsigned long long st_seed = 0;
    int st_cases = 100, st_jobs = 1;
    auto* selftest_cmd = app.add_subcommand("selftest", "randomized property batteries");
    selftest_cmd->add_option("--seed", st_seed, "seed (WF_SEED overrides)");
    selftest_cmd->add_option("--cases", st_cases, "cases per battery");
    selftest_cmd->add_option("--jobs", st_jobs, "worker threads for independent cases");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*factor_sl) {
            Matrix<Laurent> e = laurent_matrix_from_json(read_json(fs_matrix));
            ElemWord w = factor_det_one(e, ModFactors::of(fs_n));
            write_output(make_factorization_cert(fs_n, e, w), fs_out);
            return kExitOk;
        }
        if (*snf_cmd) {
            Matrix<Laurent> a = laurent_matrix_from_json(read_json(snf_matrix));
            if (!a.ring().is_field()) fail(Errc::ModulusMismatch, "snf expects a prime-field matrix");
            write_output(make_snf_cert(a.ring().mod, a, snf(a)), snf_out);
            return kExitOk;
        }
        if (*reduce_alpha) {
            const CoeffRing ring = CoeffRing::mod_n(ra_n);
            Matrix<Laurent> b = laurent_matrix_from_json(read_json(ra_matrix));
            const Laurent alpha = parse_laurent(ra_alpha, ring);
            auto [left, right] = reduce_to_alpha_block(b, alpha, ModFactors::of(ra_n));
            StableVerdict v;
            v.kind = StableVerdict::Kind::Reduced;
            v.left = std::move(left);
            v.right = std::move(right);
            v.mu = Laurent::one(ring);
            v.sigma_image = Laurent::one(ring);
            write_output(make_reduction_cert(alpha, b, v), ra_out);
            return kExitOk;
        }
        if (*module_build) {
            MModule m = build_m_module(laurent_matrix_from_json(read_json(mb_matrix)));
            write_output(mmodule_to_json(m), mb_out);
            return kExitOk;
        }
        if (*module_iso) {
            Matrix<Laurent> a = laurent_matrix_from_json(read_json(mi_a));
            Matrix<Laurent> b = laurent_matrix_from_json(read_json(mi_b));
            IsoWitness w{laurent_matrix_from_json(read_json(mi_c)), norm_quot_matrix_from_json(read_json(mi_d))};
            IsoReport rep = verify_iso_witness(a, b, w);
            json out;
            out["ok"] = rep.ok;
            if (!rep.ok) out["failed_clause"] = rep.failed_clause;
            if (rep.ok && !mi_out.empty()) write_output(make_iso_witness_cert(a, b, w), mi_out);
            std::cout << out.dump(2) << "\n";
            return rep.ok ? kExitOk : kExitVerification;
        }
        if (*module_stable) {
            const CoeffRing ring = CoeffRing::mod_n(ms_n);
            Matrix<Laurent> b = laurent_matrix_from_json(read_json(ms_matrix));
            StableVerdict v = decide_scalar_stable_equiv(parse_laurent(ms_alpha, ring), b);
            json out;
            if (v.kind == StableVerdict::Kind::Reduced) {
                out["verdict"] = "reduced";
                out["certificate"] = make_reduction_cert(parse_laurent(ms_alpha, ring), b, v);
            } else {
                out["verdict"] = "obstructed";
                out["reason"] = v.reason;
            }
            write_output(out, ms_out);
            return kExitOk;
        }
        if (*swan_build || *swan_verify) {
            const bool building = static_cast<bool>(*swan_build);
            const i64 n = building ? sb_n : sv_n;
            const std::string mat = building ? sb_matrix : sv_matrix;
            const i64 r = building ? sb_r : sv_r;
            Matrix<Laurent> a(CoeffRing::mod_n(n), 1, 1);
            if (!mat.empty()) {
                a = laurent_matrix_from_json(read_json(mat));
            } else {
                a.at(0, 0) = Laurent(CoeffRing::mod_n(n), r);
            }
            SwanModule m = build_swan_module(n, a);
            if (building) {
                write_output(swan_to_json(m), sb_out);
                return kExitOk;
            }
            Matrix<NormQuotElem> d_lift(n, 0, 0);
            if (sv_search) {
                if (m.k != 1) fail(Errc::ParseError, "--search handles rank-one classifiers only");
                auto unit = find_swan_unit(n, a.at(0, 0).is_zero() ? 0 : a.at(0, 0).coeff(0));
                if (!unit) {
                    json out;
                    out["ok"] = false;
                    out["detail"] = "bounded search found no witness";
                    std::cout << out.dump(2) << "\n";
                    return kExitVerification;
                }
                d_lift = Matrix<NormQuotElem>(n, 1, 1);
                d_lift.at(0, 0) = unit->element;
            } else {
                if (sv_d.empty()) fail(Errc::ParseError, "provide --d or --search");
                d_lift = norm_quot_matrix_from_json(read_json(sv_d));
            }
            SwanReport rep = verify_swan_freeness(m, d_lift);
            json out;
            out["ok"] = rep.ok;
            if (!rep.ok) out["detail"] = rep.detail;
            if (rep.ok && !sv_out.empty()) write_output(make_swan_cert(m, d_lift, *rep.d_inverse), sv_out);
            std::cout << out.dump(2) << "\n";
            return rep.ok ? kExitOk : kExitVerification;
        }
        if (*fox_cmd) {
            Presentation p = load_presentation(fox_pres);
            FreeWord w = parse_word(fox_word, p);
            GroupRingElem d = fox_derivative(w, p.gen_index(fox_gen), p);
            json out;
            out["element"] = to_string(d);
            std::cout << out.dump(2) << "\n";
            return kExitOk;
        }
        if (*complex_build) {
            FoxComplex c;
            if (cb_standard > 0) {
                c = build_complex(power_presentation(cb_standard, 1, cb_power_first));
            } else if (cb_power_n > 0) {
                c = build_complex(power_presentation(cb_power_n, cb_power_v, cb_power_first));
            } else if (!cb_pres.empty()) {
                c = build_complex(load_presentation(cb_pres));
            } else {
                fail(Errc::ParseError, "provide --presentation, --standard-n, or --power-n/--power-v");
            }
            if (cb_stabilize > 0) c = stabilize_complex(c, cb_stabilize);
            write_output(complex_to_json(c), cb_out);
            return kExitOk;
        }
        if (*complex_verify || *verify_complex) {
            const std::string path = *complex_verify ? cv_file : vc_file;
            FoxComplex c = complex_from_json(read_json(path));
            std::string why;
            bool ok = complex_boundary_ok(c, &why);
            if (ok && c.pres) {
                FoxComplex rebuilt = build_complex(*c.pres);
                if (!(rebuilt.d2 == c.d2) || !(rebuilt.d1 == c.d1)) {
                    ok = false;
                    why = "boundary matrices differ from the presentation's";
                }
            }
            json out;
            out["ok"] = ok;
            if (!ok) out["detail"] = why;
            std::cout << out.dump(2) << "\n";
            return ok ? kExitOk : kExitVerification;
        }
        if (*ext3_cmd) {
            json in = read_json(e3_cocycle);
            const i64 n = in.at("n").get<i64>();
            CocyclePair c{parse_group_ring(in.at("a").get<std::string>(), n),
                          parse_group_ring(in.at("b").get<std::string>(), n)};
            Ext3Class cls = ext3_class(c);
            write_output(make_ext3_cert(c, cls), e3_out);
            return kExitOk;
        }
        if (*realize_cmd) {
            Realization r = realize_unit(rz_n, rz_w);
            json cert = make_chain_map_cert(r);
            if (rz_emit.empty()) {
                write_output(cert, "");
            } else {
                write_output(cert, rz_emit);
                std::cout << "presentation: " << format_presentation(r.pres) << "\n";
                std::cout << "class: " << r.cls.value << " mod " << r.cls.n << "\n";
            }
            return kExitOk;
        }
        if (*ideals_cmd) {
            if (id_cert) {
                write_output(make_ideals_cert(id_n), id_out);
            } else {
                json out = json::array();
                for (const auto& c : enumerate_max_ideal_candidates(id_n)) {
                    json item;
                    item["p"] = c.p;
                    item["omega"] = to_string(c.omega, 'x');
                    out.push_back(std::move(item));
                }
                write_output(out, id_out);
            }
            return kExitOk;
        }
        if (*verify_cmd) {
            VerifyResult r = verify_envelope(read_json(vf_file));
            json out;
            out["ok"] = r.ok;
            if (!r.ok) out["discrepancy"] = r.message;
            std::cout << out.dump(2) << "\n";
            return r.ok ? kExitOk : kExitVerification;
        }
        if (*selftest_cmd) {
            return cmd_selftest(effective_seed(st_seed), st_cases, st_jobs);
        }
    } catch (const Error& e) {
        std::cerr << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error (json): " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
