#include "whitefox/modclass.hpp"

#include <algorithm>

#include "whitefox/textio.hpp"

namespace wf {

namespace {

// Canonical lift of a Zn[t,1/t] entry into the group ring: coefficients in
// [0, n) on the x^0 row.
GroupRingElem canonical_lift(const Laurent& f, i64 n) {
    return GroupRingElem::from_laurent(n, f.lift_to(CoeffRing::integers()));
}

bool is_t_free(const GroupRingElem& a) {
    for (i64 i = 0; i < a.order(); ++i) {
        const Laurent& row = a.row(i);
        if (!row.is_zero() && (row.min_exp() != 0 || row.max_exp() != 0)) return false;
    }
    return true;
}

}  // namespace

MModule build_m_module(const Matrix<Laurent>& A) {
    if (!A.is_square()) fail(Errc::NonSquare, "module classifier matrix must be square");
    if (!(A.ring().kind == CoeffKind::Zn)) fail(Errc::ModulusMismatch, "classifier matrix must live over Zn[t,1/t]");
    const i64 n = A.ring().mod;
    const int k = A.rows();

    MModule m;
    m.k = k;
    m.a_class = A;
    m.a_lift = Matrix<GroupRingElem>(n, k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m.a_lift.at(i, j) = canonical_lift(A.at(i, j), n);

    const GroupRingElem norm = GroupRingElem::norm_element(n);
    const GroupRingElem xm1 = GroupRingElem::monomial(n, 1, 1, 0) - GroupRingElem::one(n);
    m.gen_matrix = Matrix<GroupRingElem>(n, 2 * k, 2 * k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) m.gen_matrix.at(i, j) = m.a_lift.at(i, j);
        m.gen_matrix.at(i, k + i) = norm;
        m.gen_matrix.at(k + i, i) = xm1;
    }
    return m;
}

Matrix<Laurent> ext1_class(const Matrix<NormQuotElem>& F) {
    if (!F.is_square()) fail(Errc::NonSquare, "extension-class matrix must be square");
    const i64 n = F.ring();
    Matrix<Laurent> out(CoeffRing::mod_n(n), F.rows(), F.cols());
    for (int i = 0; i < F.rows(); ++i)
        for (int j = 0; j < F.cols(); ++j) out.at(i, j) = F.at(i, j).augment_mod_n();
    return out;
}

namespace {

Matrix<Laurent> reduce_mod_n(const Matrix<Laurent>& M, i64 n) {
    const CoeffRing target = CoeffRing::mod_n(n);
    return M.map([&](const Laurent& f) { return f.reduce_to(target); }, target);
}

bool is_signed_t_power(const Laurent& f) {
    if (!f.is_monomial()) return false;
    const i64 c = f.coeff(f.min_exp());
    return c == 1 || c == -1;
}

}  // namespace

IsoReport verify_iso_witness(const Matrix<Laurent>& A, const Matrix<Laurent>& B, const IsoWitness& w) {
    if (!(A.ring() == B.ring()) || A.rows() != B.rows() || A.cols() != B.cols())
        return {false, "shape: A and B must match"};
    if (!A.is_square()) return {false, "shape: matrices must be square"};
    const i64 n = A.ring().mod;
    const int k = A.rows();
    if (w.c_lift.rows() != k || w.c_lift.cols() != k || w.d_lift.rows() != k || w.d_lift.cols() != k)
        return {false, "shape: witness sizes must match"};
    if (!(w.c_lift.ring() == CoeffRing::integers())) return {false, "shape: C lift must have integer coefficients"};
    if (w.d_lift.ring() != n) return {false, "shape: D lift order mismatch"};

    if (!is_signed_t_power(det(w.c_lift))) return {false, "C: determinant is not a signed power of t"};

    Matrix<Laurent> d_img = ext1_class(w.d_lift);
    if (!is_unit(det(d_img), ModFactors::of(n))) return {false, "D: image determinant is not a unit"};

    Matrix<Laurent> c_img = reduce_mod_n(w.c_lift, n);
    if (!(c_img * A * d_img == B)) return {false, "CAD: product does not equal B"};
    return {true, ""};
}

// ------------------------- norm-quotient units ------------------------------

namespace {

// Coefficient vector of a t-free norm-quotient element in the power basis
// 1, x, ..., x^(n-2).
std::vector<i64> power_basis_coords(const NormQuotElem& s) {
    const i64 n = s.order();
    std::vector<i64> v(static_cast<size_t>(n - 1), 0);
    for (i64 i = 0; i + 1 < n; ++i) {
        const Laurent& row = s.row(i);
        if (row.is_zero()) continue;
        if (row.min_exp() != 0 || row.max_exp() != 0)
            fail(Errc::ModulusMismatch, "norm-quotient unit search requires t-free elements");
        v[static_cast<size_t>(i)] = row.coeff(0);
    }
    return v;
}

NormQuotElem from_power_basis(i64 n, const std::vector<i64>& v) {
    GroupRingElem a(n);
    for (size_t i = 0; i < v.size(); ++i) a.add_term(static_cast<i64>(i), 0, v[i]);
    return NormQuotElem::from_group_ring(a);
}

// Multiplication-by-x in the power basis: x^(n-1) = -(1 + x + ... + x^(n-2)).
std::vector<i64> mul_by_x(const std::vector<i64>& v) {
    const size_t d = v.size();
    std::vector<i64> out(d, 0);
    const i64 top = v[d - 1];
    for (size_t i = 0; i + 1 < d; ++i) out[i + 1] = v[i];
    for (size_t i = 0; i < d; ++i) out[i] = checked_sub(out[i], top);
    return out;
}

// Fraction-free integer determinant.
i64 int_det_bareiss(std::vector<std::vector<i64>> m) {
    const size_t d = m.size();
    if (d == 0) return 1;
    i64 prev = 1;
    int sign = 1;
    for (size_t s = 0; s + 1 < d; ++s) {
        if (m[s][s] == 0) {
            size_t swap_row = s;
            while (swap_row < d && m[swap_row][s] == 0) ++swap_row;
            if (swap_row == d) return 0;
            std::swap(m[s], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = s + 1; i < d; ++i)
            for (size_t j = s + 1; j < d; ++j) {
                const i64 num = checked_sub(checked_mul(m[i][j], m[s][s]), checked_mul(m[i][s], m[s][j]));
                if (num % prev != 0) fail(Errc::Internal, "bareiss division not exact");
                m[i][j] = num / prev;
            }
        prev = m[s][s];
    }
    return sign * m[d - 1][d - 1];
}

std::vector<std::vector<i64>> multiplication_matrix(const NormQuotElem& s) {
    const i64 n = s.order();
    const size_t d = static_cast<size_t>(n - 1);
    std::vector<i64> col = power_basis_coords(s);
    std::vector<std::vector<i64>> m(d, std::vector<i64>(d, 0));
    for (size_t j = 0; j < d; ++j) {
        for (size_t i = 0; i < d; ++i) m[i][j] = col[i];
        if (j + 1 < d) col = mul_by_x(col);
    }
    return m;
}

// Replaces column `cidx` with b and returns the determinant (Cramer).
i64 cramer_det(std::vector<std::vector<i64>> m, size_t cidx, const std::vector<i64>& b) {
    for (size_t i = 0; i < m.size(); ++i) m[i][cidx] = b[i];
    return int_det_bareiss(std::move(m));
}

}  // namespace

std::optional<SUnitCert> invert_in_norm_quot(const NormQuotElem& s) {
    const i64 n = s.order();
    const size_t d = static_cast<size_t>(n - 1);
    const auto m = multiplication_matrix(s);
    const i64 dm = int_det_bareiss(m);
    if (dm != 1 && dm != -1) return std::nullopt;
    // Solve m * y = e0 exactly; det is a unit so the solution is integral.
    std::vector<i64> e0(d, 0);
    e0[0] = 1;
    std::vector<i64> y(d, 0);
    for (size_t j = 0; j < d; ++j) y[j] = cramer_det(m, j, e0) / dm;
    SUnitCert cert{s, from_power_basis(n, y)};
    if (!((cert.element * cert.inverse) == NormQuotElem::one(n))) fail(Errc::Internal, "unit inverse self-check failed");
    return cert;
}

std::optional<SUnitCert> find_swan_unit(i64 n, i64 r, const SearchConfig& cfg) {
    const size_t d = static_cast<size_t>(n - 1);
    const i64 target = floor_mod(r, n);
    // Support-bounded enumeration of coefficient vectors in the box.
    std::vector<size_t> support;
    std::optional<SUnitCert> found;

    std::vector<i64> v(d, 0);
    auto try_candidate = [&]() {
        i64 sum = 0;
        for (i64 c : v) sum += c;
        if (floor_mod(sum, n) != target) return false;
        NormQuotElem s = from_power_basis(n, v);
        if (s.is_zero()) return false;
        std::optional<SUnitCert> cert;
        try {
            cert = invert_in_norm_quot(s);
        } catch (const Error& e) {
            // Oversized boxes can overflow the exact determinant; skip the
            // candidate and keep searching.
            if (e.code() != Errc::Overflow) throw;
            return false;
        }
        if (!cert) return false;
        found = std::move(cert);
        return true;
    };

    // Enumerate supports of size 1..max_support, then coefficients over the
    // box for each supported position.
    std::function<bool(size_t, size_t)> rec_support = [&](size_t start, size_t remaining) -> bool {
        if (remaining == 0) {
            std::function<bool(size_t)> rec_coeff = [&](size_t idx) -> bool {
                if (idx == support.size()) return try_candidate();
                for (i64 c = -cfg.coeff_box; c <= cfg.coeff_box; ++c) {
                    if (c == 0) continue;
                    v[support[idx]] = c;
                    if (rec_coeff(idx + 1)) return true;
                }
                v[support[idx]] = 0;
                return false;
            };
            return rec_coeff(0);
        }
        for (size_t pos = start; pos + remaining <= d; ++pos) {
            support.push_back(pos);
            if (rec_support(pos + 1, remaining - 1)) return true;
            support.pop_back();
        }
        return false;
    };

    const size_t max_support = std::min<size_t>(static_cast<size_t>(cfg.max_support), d);
    for (size_t sz = 1; sz <= max_support; ++sz) {
        support.clear();
        std::fill(v.begin(), v.end(), 0);
        if (rec_support(0, sz)) return found;
    }
    return std::nullopt;
}

// ------------------------ stable equivalence --------------------------------

StableVerdict decide_scalar_stable_equiv(const Laurent& alpha, const Matrix<Laurent>& B,
                                         const SearchConfig& cfg) {
    if (alpha.is_zero()) fail(Errc::DetMismatch, "scalar classifier must be nonzero");
    if (!B.is_square()) fail(Errc::NonSquare, "matrix must be square");
    const CoeffRing ring = B.ring();
    if (!(alpha.ring() == ring) || ring.kind != CoeffKind::Zn)
        fail(Errc::ModulusMismatch, "scalar and matrix must live over the same Zn[t,1/t]");
    const i64 n = ring.mod;
    const ModFactors d = ModFactors::of(n);

    const Laurent delta = det(B);
    StableVerdict verdict;
    verdict.mu = Laurent::one(ring);
    verdict.sigma_image = Laurent::one(ring);

    auto run_reduction = [&](const Matrix<Laurent>& Bn) -> bool {
        try {
            auto [left, right] = reduce_to_alpha_block(Bn, alpha, d);
            verdict.kind = StableVerdict::Kind::Reduced;
            verdict.left = std::move(left);
            verdict.right = std::move(right);
            return true;
        } catch (const Error& e) {
            if (e.code() == Errc::SnfObstruction) {
                verdict.kind = StableVerdict::Kind::Obstructed;
                verdict.reason = e.what();
                return true;  // decided: obstructed
            }
            throw;
        }
    };

    if (delta == alpha) {
        run_reduction(B);
        return verdict;
    }

    // det correction by trivial normalizers: mu a signed power of t (image of
    // the integer Laurent units), sigma the augmentation image of a certified
    // unit of the t-free norm quotient. Search mu * delta * sigma = alpha.
    std::vector<std::pair<Laurent, std::optional<SUnitCert>>> sigmas;
    sigmas.emplace_back(Laurent::one(ring), std::nullopt);
    for (i64 r = 2; r < n; ++r) {
        i64 x, y;
        if (ext_gcd(r, n, x, y) != 1) continue;
        if (auto cert = find_swan_unit(n, r, cfg)) {
            Laurent image = cert->element.augment_mod_n();
            // The t-free image is the constant r mod n.
            sigmas.emplace_back(std::move(image), std::move(cert));
        }
    }
    for (i64 j = -cfg.t_span; j <= cfg.t_span; ++j) {
        for (i64 sgn : {1LL, -1LL}) {
            const Laurent mu = Laurent::monomial(ring, sgn, j);
            for (const auto& [sigma, cert] : sigmas) {
                if (!(mu * delta * sigma == alpha)) continue;
                Matrix<Laurent> Bn = normalize_by_scalars(B, mu, sigma);
                verdict.mu = mu;
                verdict.sigma_image = sigma;
                if (cert) verdict.sigma = *cert;
                run_reduction(Bn);
                return verdict;
            }
        }
    }

    verdict.kind = StableVerdict::Kind::Obstructed;
    verdict.reason = "det(B) = " + to_string(delta) + " is not " + to_string(alpha) +
                     " times any known normalizer unit";
    return verdict;
}

// ------------------------------ Swan modules --------------------------------

SwanModule build_swan_module(i64 n, const Matrix<Laurent>& A) {
    if (!A.is_square()) fail(Errc::NonSquare, "swan classifier matrix must be square");
    if (!(A.ring() == CoeffRing::mod_n(n))) fail(Errc::ModulusMismatch, "swan classifier must live over Zn");
    const int k = A.rows();
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const Laurent& f = A.at(i, j);
            if (!f.is_zero() && (f.min_exp() != 0 || f.max_exp() != 0))
                fail(Errc::ModulusMismatch, "swan classifier entries must be constants");
        }

    SwanModule m;
    m.n = n;
    m.k = k;
    m.a_class = A;
    m.a_lift = Matrix<GroupRingElem>(n, k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            m.a_lift.at(i, j) = GroupRingElem::constant(n, A.at(i, j).is_zero() ? 0 : A.at(i, j).coeff(0));

    const GroupRingElem norm = GroupRingElem::norm_element(n);
    m.gen_matrix = Matrix<GroupRingElem>(n, static_cast<int>(k * (n + 1)), 2 * k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) m.gen_matrix.at(i, j) = m.a_lift.at(i, j);
        m.gen_matrix.at(i, k + i) = norm;
    }
    // One (g - 1) block per group element g = x^e, including the zero block
    // for the identity, matching the stacked layout exactly.
    for (i64 e = 0; e < n; ++e) {
        const GroupRingElem gm1 = GroupRingElem::monomial(n, 1, e, 0) - GroupRingElem::one(n);
        for (int i = 0; i < k; ++i) m.gen_matrix.at(static_cast<int>(k + e * k) + i, i) = gm1;
    }
    return m;
}

SwanReport verify_swan_freeness(const SwanModule& m, const Matrix<NormQuotElem>& d_lift) {
    if (d_lift.rows() != m.k || d_lift.cols() != m.k) return {false, "witness size mismatch", std::nullopt};
    if (d_lift.ring() != m.n) return {false, "witness order mismatch", std::nullopt};
    for (int i = 0; i < m.k; ++i)
        for (int j = 0; j < m.k; ++j)
            if (!is_t_free(d_lift.at(i, j).lift())) return {false, "witness must be t-free", std::nullopt};

    if (!(ext1_class(d_lift) == m.a_class)) return {false, "augmentation image differs from the class matrix", std::nullopt};

    // Invertibility over the t-free norm quotient: certified inverse of the
    // determinant, then the adjugate.
    const NormQuotElem dd = det(d_lift);
    auto unit = invert_in_norm_quot(dd);
    if (!unit) return {false, "witness determinant is not a unit", std::nullopt};

    Matrix<NormQuotElem> adj(m.n, m.k, m.k);
    if (m.k == 1) {
        adj.at(0, 0) = NormQuotElem::one(m.n);
    } else {
        for (int i = 0; i < m.k; ++i)
            for (int j = 0; j < m.k; ++j) {
                Matrix<NormQuotElem> minor(m.n, m.k - 1, m.k - 1);
                for (int r = 0, rr = 0; r < m.k; ++r) {
                    if (r == i) continue;
                    for (int c = 0, cc = 0; c < m.k; ++c) {
                        if (c == j) continue;
                        minor.at(rr, cc) = d_lift.at(r, c);
                        ++cc;
                    }
                    ++rr;
                }
                NormQuotElem cof = det(minor);
                adj.at(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
            }
    }
    Matrix<NormQuotElem> inv = adj.scaled(unit->inverse);
    if (!(d_lift * inv == Matrix<NormQuotElem>::identity(m.n, m.k)))
        return {false, "inverse self-check failed", std::nullopt};
    return {true, "", inv};
}

}  // namespace wf
