#include "whitefox/jsonio.hpp"

#include "whitefox/textio.hpp"

namespace wf {

json ring_to_json(const CoeffRing& r) {
    json j;
    j["type"] = "laurent";
    switch (r.kind) {
        case CoeffKind::Z: j["coeff"] = "Z"; break;
        case CoeffKind::Zn: j["coeff"] = "Zn"; j["mod"] = r.mod; break;
        case CoeffKind::Fp: j["coeff"] = "Fp"; j["mod"] = r.mod; break;
    }
    return j;
}

CoeffRing ring_from_json(const json& j) {
    if (!j.is_object() || j.value("type", "") != "laurent") fail(Errc::ParseError, "expected a laurent ring");
    const std::string coeff = j.value("coeff", "");
    if (coeff == "Z") return CoeffRing::integers();
    if (coeff == "Zn") return CoeffRing::mod_n(j.at("mod").get<i64>());
    if (coeff == "Fp") return CoeffRing::prime_field(j.at("mod").get<i64>());
    fail(Errc::ParseError, "unknown coefficient ring '" + coeff + "'");
}

namespace {

template <class T, class ToText>
json matrix_to_json_impl(const Matrix<T>& m, json ring, ToText to_text) {
    json j;
    j["ring"] = std::move(ring);
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    json entries = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(to_text(m.at(i, c)));
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

template <class T, class Desc, class Parse>
Matrix<T> matrix_from_json_impl(const json& j, Desc desc, Parse parse) {
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    const json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != static_cast<size_t>(rows))
        fail(Errc::ParseError, "matrix row count mismatch");
    Matrix<T> m(desc, rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = entries[static_cast<size_t>(i)];
        if (!row.is_array() || row.size() != static_cast<size_t>(cols))
            fail(Errc::ParseError, "matrix column count mismatch");
        for (int c = 0; c < cols; ++c) m.at(i, c) = parse(row[static_cast<size_t>(c)].get<std::string>());
    }
    return m;
}

}  // namespace

json matrix_to_json(const Matrix<Laurent>& m) {
    return matrix_to_json_impl(m, ring_to_json(m.ring()), [](const Laurent& f) { return to_string(f); });
}

json matrix_to_json(const Matrix<GroupRingElem>& m) {
    json ring;
    ring["type"] = "group_ring";
    ring["n"] = m.ring();
    return matrix_to_json_impl(m, std::move(ring), [](const GroupRingElem& a) { return to_string(a); });
}

json matrix_to_json(const Matrix<NormQuotElem>& m) {
    json ring;
    ring["type"] = "norm_quotient";
    ring["n"] = m.ring();
    return matrix_to_json_impl(m, std::move(ring), [](const NormQuotElem& s) { return to_string(s); });
}

Matrix<Laurent> laurent_matrix_from_json(const json& j) {
    const CoeffRing ring = ring_from_json(j.at("ring"));
    return matrix_from_json_impl<Laurent>(j, ring, [&](const std::string& s) { return parse_laurent(s, ring); });
}

Matrix<GroupRingElem> group_matrix_from_json(const json& j) {
    const json& ring = j.at("ring");
    if (ring.value("type", "") != "group_ring") fail(Errc::ParseError, "expected a group-ring matrix");
    const i64 n = ring.at("n").get<i64>();
    return matrix_from_json_impl<GroupRingElem>(j, n, [&](const std::string& s) { return parse_group_ring(s, n); });
}

Matrix<NormQuotElem> norm_quot_matrix_from_json(const json& j) {
    const json& ring = j.at("ring");
    if (ring.value("type", "") != "norm_quotient") fail(Errc::ParseError, "expected a norm-quotient matrix");
    const i64 n = ring.at("n").get<i64>();
    return matrix_from_json_impl<NormQuotElem>(j, n, [&](const std::string& s) { return parse_norm_quot(s, n); });
}

json word_to_json(const ElemWord& w) {
    json j;
    j["k"] = w.k;
    j["ring"] = ring_to_json(w.ring);
    json ops = json::array();
    for (const ElemOp& op : w.ops) {
        json o;
        if (op.kind == ElemOp::Kind::Transvection) {
            o["kind"] = "T";
            o["side"] = op.side == OpSide::Left ? "L" : "R";
            o["i"] = op.i;
            o["j"] = op.j;
            o["r"] = to_string(op.r);
        } else {
            o["kind"] = "W";
            o["i"] = op.i;
            o["j"] = op.j;
            o["u"] = to_string(op.u.element);
            o["u_inv"] = to_string(op.u.inverse);
        }
        ops.push_back(std::move(o));
    }
    j["ops"] = std::move(ops);
    return j;
}

ElemWord word_from_json(const json& j) {
    const CoeffRing ring = ring_from_json(j.at("ring"));
    ElemWord w(j.at("k").get<int>(), ring);
    for (const json& o : j.at("ops")) {
        const std::string kind = o.at("kind").get<std::string>();
        const int i = o.at("i").get<int>();
        const int jj = o.at("j").get<int>();
        if (kind == "T") {
            const OpSide side = o.value("side", "L") == "R" ? OpSide::Right : OpSide::Left;
            w.ops.push_back(ElemOp::transvection(side, i, jj, parse_laurent(o.at("r").get<std::string>(), ring)));
        } else if (kind == "W") {
            UnitCert u{parse_laurent(o.at("u").get<std::string>(), ring),
                       parse_laurent(o.at("u_inv").get<std::string>(), ring)};
            w.ops.push_back(ElemOp::whitehead(i, jj, u));
        } else {
            fail(Errc::ParseError, "unknown op kind '" + kind + "'");
        }
    }
    return w;
}

json snf_to_json(const Matrix<Laurent>& A, const SnfResult& r) {
    json j;
    j["matrix"] = matrix_to_json(A);
    json diag = json::array();
    for (const Laurent& d : r.diag) diag.push_back(to_string(d));
    j["diag"] = std::move(diag);
    j["left"] = word_to_json(r.left);
    j["right"] = word_to_json(r.right);
    return j;
}

json mmodule_to_json(const MModule& m) {
    json j;
    j["k"] = m.k;
    j["a_class"] = matrix_to_json(m.a_class);
    j["a_lift"] = matrix_to_json(m.a_lift);
    j["gen_matrix"] = matrix_to_json(m.gen_matrix);
    return j;
}

json swan_to_json(const SwanModule& m) {
    json j;
    j["n"] = m.n;
    j["k"] = m.k;
    j["a_class"] = matrix_to_json(m.a_class);
    j["a_lift"] = matrix_to_json(m.a_lift);
    j["gen_matrix"] = matrix_to_json(m.gen_matrix);
    return j;
}

json complex_to_json(const FoxComplex& c) {
    json j;
    j["n"] = c.n;
    if (c.pres) j["presentation"] = format_presentation(*c.pres);
    j["d2"] = matrix_to_json(c.d2);
    j["d1"] = matrix_to_json(c.d1);
    return j;
}

FoxComplex complex_from_json(const json& j) {
    FoxComplex c;
    c.n = j.at("n").get<i64>();
    c.d2 = group_matrix_from_json(j.at("d2"));
    c.d1 = group_matrix_from_json(j.at("d1"));
    if (j.contains("presentation")) c.pres = parse_presentation(j.at("presentation").get<std::string>());
    return c;
}

json realization_to_json(const Realization& r) {
    json j;
    j["n"] = r.cls.n;
    j["class"] = r.cls.value;
    j["presentation"] = format_presentation(r.pres);
    j["complex"] = complex_to_json(r.complex);
    j["f3"] = to_string(r.witness.f3);
    j["f2"] = matrix_to_json(r.witness.f2);
    j["f1"] = matrix_to_json(r.witness.f1);
    j["cocycle"] = {{"a", to_string(r.cocycle.a)}, {"b", to_string(r.cocycle.b)}};
    return j;
}

}  // namespace wf
