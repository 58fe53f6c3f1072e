// Python bindings: the main operations exposed over the same JSON encodings
// the CLI uses, so certificates can flow between both front ends.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "whitefox/certificates.hpp"
#include "whitefox/textio.hpp"

namespace py = pybind11;
using namespace wf;

namespace {

json parse_json_arg(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::ParseError, std::string("invalid JSON: ") + e.what());
    }
}

std::string factor_det_one_json(const std::string& matrix_json, i64 n) {
    Matrix<Laurent> e = laurent_matrix_from_json(parse_json_arg(matrix_json));
    ElemWord w = factor_det_one(e, ModFactors::of(n));
    return make_factorization_cert(n, e, w).dump();
}

std::string snf_json(const std::string& matrix_json) {
    Matrix<Laurent> a = laurent_matrix_from_json(parse_json_arg(matrix_json));
    if (!a.ring().is_field()) fail(Errc::ModulusMismatch, "snf expects a prime-field matrix");
    return make_snf_cert(a.ring().mod, a, snf(a)).dump();
}

std::string reduce_to_alpha_block_json(const std::string& matrix_json, const std::string& alpha, i64 n) {
    const CoeffRing ring = CoeffRing::mod_n(n);
    Matrix<Laurent> b = laurent_matrix_from_json(parse_json_arg(matrix_json));
    auto [left, right] = reduce_to_alpha_block(b, parse_laurent(alpha, ring), ModFactors::of(n));
    StableVerdict v;
    v.kind = StableVerdict::Kind::Reduced;
    v.left = std::move(left);
    v.right = std::move(right);
    v.mu = Laurent::one(ring);
    v.sigma_image = Laurent::one(ring);
    return make_reduction_cert(parse_laurent(alpha, ring), b, v).dump();
}

std::string decide_stable_json(const std::string& alpha, const std::string& matrix_json, i64 n) {
    const CoeffRing ring = CoeffRing::mod_n(n);
    Matrix<Laurent> b = laurent_matrix_from_json(parse_json_arg(matrix_json));
    StableVerdict v = decide_scalar_stable_equiv(parse_laurent(alpha, ring), b);
    json out;
    if (v.kind == StableVerdict::Kind::Reduced) {
        out["verdict"] = "reduced";
        out["certificate"] = make_reduction_cert(parse_laurent(alpha, ring), b, v);
    } else {
        out["verdict"] = "obstructed";
        out["reason"] = v.reason;
    }
    return out.dump();
}

std::string build_m_module_json(const std::string& matrix_json) {
    return mmodule_to_json(build_m_module(laurent_matrix_from_json(parse_json_arg(matrix_json)))).dump();
}

std::string build_swan_module_json(i64 n, const std::string& matrix_json) {
    return swan_to_json(build_swan_module(n, laurent_matrix_from_json(parse_json_arg(matrix_json)))).dump();
}

std::pair<bool, std::string> verify_swan_json(i64 n, const std::string& a_json, const std::string& d_json) {
    SwanModule m = build_swan_module(n, laurent_matrix_from_json(parse_json_arg(a_json)));
    SwanReport rep = verify_swan_freeness(m, norm_quot_matrix_from_json(parse_json_arg(d_json)));
    return {rep.ok, rep.detail};
}

std::string fox_derivative_json(const std::string& presentation, const std::string& word, const std::string& gen) {
    Presentation p = parse_presentation(presentation);
    return to_string(fox_derivative(parse_word(word, p), p.gen_index(gen), p));
}

std::string build_complex_json(const std::string& presentation) {
    return complex_to_json(build_complex(parse_presentation(presentation))).dump();
}

std::pair<bool, std::string> verify_complex_json(const std::string& complex_json) {
    FoxComplex c = complex_from_json(parse_json_arg(complex_json));
    std::string why;
    bool ok = complex_boundary_ok(c, &why);
    if (ok && c.pres) {
        FoxComplex rebuilt = build_complex(*c.pres);
        if (!(rebuilt.d2 == c.d2) || !(rebuilt.d1 == c.d1)) {
            ok = false;
            why = "boundary matrices differ from the presentation's";
        }
    }
    return {ok, why};
}

std::string realize_unit_json(i64 n, i64 w) { return make_chain_map_cert(realize_unit(n, w)).dump(); }

i64 ext3_class_py(i64 n, const std::string& a, const std::string& b) {
    return ext3_class({parse_group_ring(a, n), parse_group_ring(b, n)}).value;
}

bool is_cocycle_py(i64 n, const std::string& a, const std::string& b) {
    return is_cocycle({parse_group_ring(a, n), parse_group_ring(b, n)});
}

std::string unit_multiplier_py(i64 n, i64 v) { return to_string(unit_multiplier(n, v)); }

std::string ideals_json(i64 n) {
    json out = json::array();
    for (const auto& c : enumerate_max_ideal_candidates(n)) {
        json item;
        item["p"] = c.p;
        item["omega"] = to_string(c.omega, 'x');
        out.push_back(std::move(item));
    }
    return out.dump();
}

std::pair<bool, std::string> verify_certificate_json(const std::string& cert) {
    VerifyResult r = verify_envelope(parse_json_arg(cert));
    return {r.ok, r.message};
}

std::pair<std::string, std::string> invert_unit_py(const std::string& u, i64 n) {
    UnitCert c = invert_unit(parse_laurent(u, CoeffRing::mod_n(n)), ModFactors::of(n));
    return {to_string(c.element), to_string(c.inverse)};
}

bool is_unit_py(const std::string& u, i64 n) {
    return is_unit(parse_laurent(u, CoeffRing::mod_n(n)), ModFactors::of(n));
}

std::string canonical_group_ring(const std::string& text, i64 n) { return to_string(parse_group_ring(text, n)); }

}  // namespace

PYBIND11_MODULE(_whitefox, m) {
    m.doc() = "exact algebra for cyclic-by-infinite group rings: witnessed smith forms, "
              "elementary factorizations, boundary complexes and their certificates";

    py::register_exception<Error>(m, "WhitefoxError");

    m.attr("__version__") = "0.1.0";
    m.attr("toolchain") = kToolchain;

    m.def("factor_det_one", &factor_det_one_json, py::arg("matrix_json"), py::arg("n"),
          "Factor a determinant-one matrix over Zn[t,1/t]; returns a certificate JSON string.");
    m.def("snf", &snf_json, py::arg("matrix_json"),
          "Witnessed smith normal form over Fp[t,1/t]; returns a certificate JSON string.");
    m.def("reduce_to_alpha_block", &reduce_to_alpha_block_json, py::arg("matrix_json"), py::arg("alpha"),
          py::arg("n"), "Reduce a matrix with det = alpha to the scalar block; returns a certificate.");
    m.def("decide_scalar_stable_equiv", &decide_stable_json, py::arg("alpha"), py::arg("matrix_json"), py::arg("n"),
          "Decide stable equivalence against a scalar classifier; returns a verdict JSON string.");
    m.def("build_m_module", &build_m_module_json, py::arg("matrix_json"));
    m.def("build_swan_module", &build_swan_module_json, py::arg("n"), py::arg("matrix_json"));
    m.def("verify_swan_freeness", &verify_swan_json, py::arg("n"), py::arg("a_json"), py::arg("d_json"));
    m.def("fox_derivative", &fox_derivative_json, py::arg("presentation"), py::arg("word"), py::arg("gen"),
          "Free differential of a word, in the canonical text encoding.");
    m.def("build_complex", &build_complex_json, py::arg("presentation"));
    m.def("verify_complex", &verify_complex_json, py::arg("complex_json"));
    m.def("realize_unit", &realize_unit_json, py::arg("n"), py::arg("w"),
          "Realize a unit class mod n; returns the chain-map certificate JSON string.");
    m.def("ext3_class", &ext3_class_py, py::arg("n"), py::arg("a"), py::arg("b"));
    m.def("is_cocycle", &is_cocycle_py, py::arg("n"), py::arg("a"), py::arg("b"));
    m.def("unit_multiplier", &unit_multiplier_py, py::arg("n"), py::arg("v"));
    m.def("max_ideal_candidates", &ideals_json, py::arg("n"));
    m.def("verify_certificate", &verify_certificate_json, py::arg("cert_json"),
          "Independently re-check any emitted certificate; returns (ok, discrepancy).");
    m.def("invert_unit", &invert_unit_py, py::arg("u"), py::arg("n"));
    m.def("is_unit", &is_unit_py, py::arg("u"), py::arg("n"));
    m.def("canonical", &canonical_group_ring, py::arg("text"), py::arg("n"),
          "Canonical text encoding of a group-ring element.");
    m.def("check_cinf_squared", &check_cinf_squared);
}
