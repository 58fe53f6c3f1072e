#include "whitefox/textio.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace wf {

namespace {

struct Term {
    i64 coeff = 1;
    i64 x_exp = 0;
    i64 t_exp = 0;
};

void append_term(std::ostringstream& out, bool first, i64 coeff, const std::string& vars) {
    const bool neg = coeff < 0;
    const i64 abs = neg ? -coeff : coeff;
    if (first)
        out << (neg ? "-" : "");
    else
        out << (neg ? "-" : "+");
    if (vars.empty()) {
        out << abs;
        return;
    }
    if (abs != 1) out << abs << "*";
    out << vars;
}

std::string var_part(char var, i64 exp) {
    if (exp == 0) return "";
    std::string s(1, var);
    if (exp != 1) s += "^" + std::to_string(exp);
    return s;
}

// Shared scanner for the c*x^a*t^b term grammar.
class TermScanner {
public:
    TermScanner(const std::string& text, bool allow_x, bool allow_t, char var)
        : s_(text), allow_x_(allow_x), allow_t_(allow_t), var_(var) {}

    // Returns false once input is exhausted.
    bool next(Term& term) {
        skip_ws();
        if (pos_ >= s_.size()) return false;
        i64 sign = 1;
        if (!first_) {
            if (s_[pos_] == '+') {
                ++pos_;
            } else if (s_[pos_] == '-') {
                sign = -1;
                ++pos_;
            } else {
                fail(Errc::ParseError, "expected + or - between terms near '" + rest() + "'");
            }
        } else if (s_[pos_] == '-') {
            sign = -1;
            ++pos_;
        } else if (s_[pos_] == '+') {
            ++pos_;
        }
        first_ = false;
        term = Term{};
        bool any_factor = false;
        bool expect_factor = true;
        while (expect_factor) {
            skip_ws();
            if (pos_ >= s_.size()) break;
            const char c = s_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                term.coeff = checked_mul(term.coeff, scan_int());
            } else if (c == 'x' || c == 't') {
                if (c == 'x' && !allow_x_) fail(Errc::ParseError, "variable x is not allowed in this ring");
                if (c == 't' && !allow_t_) fail(Errc::ParseError, "variable t is not allowed in this ring");
                ++pos_;
                i64 e = 1;
                skip_ws();
                if (pos_ < s_.size() && s_[pos_] == '^') {
                    ++pos_;
                    e = scan_signed_int();
                }
                if (c == 'x')
                    term.x_exp = checked_add(term.x_exp, e);
                else
                    term.t_exp = checked_add(term.t_exp, e);
            } else {
                fail(Errc::ParseError, std::string("unexpected character '") + c + "' in polynomial");
            }
            any_factor = true;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                expect_factor = true;
            } else {
                expect_factor = false;
            }
        }
        if (!any_factor) fail(Errc::ParseError, "empty term in polynomial");
        term.coeff = checked_mul(term.coeff, sign);
        return true;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    i64 scan_int() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail(Errc::ParseError, "expected an integer near '" + rest() + "'");
        return std::stoll(s_.substr(start, pos_ - start));
    }

    i64 scan_signed_int() {
        skip_ws();
        i64 sign = 1;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            if (s_[pos_] == '-') sign = -1;
            ++pos_;
        }
        return sign * scan_int();
    }

    std::string rest() const { return s_.substr(pos_, 12); }

    const std::string& s_;
    size_t pos_ = 0;
    bool first_ = true;
    bool allow_x_;
    bool allow_t_;
    char var_;
};

}  // namespace

std::string to_string(const Laurent& f, char var) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    // Descending exponent order.
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        // Modular coefficients are canonical in [0, mod); print them as-is.
        append_term(out, first, it->second, var_part(var, it->first));
        first = false;
    }
    return out.str();
}

std::string to_string(const GroupRingElem& a) {
    if (a.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (i64 i = a.order() - 1; i >= 0; --i) {
        const Laurent& row = a.row(i);
        for (auto it = row.terms().rbegin(); it != row.terms().rend(); ++it) {
            std::string vars = var_part('x', i);
            std::string tpart = var_part('t', it->first);
            if (!vars.empty() && !tpart.empty()) vars += "*";
            vars += tpart;
            append_term(out, first, it->second, vars);
            first = false;
        }
    }
    return out.str();
}

std::string to_string(const NormQuotElem& s) { return to_string(s.lift()); }

Laurent parse_laurent(const std::string& text, CoeffRing ring, char var) {
    const bool var_is_t = (var == 't');
    TermScanner scan(text, /*allow_x=*/!var_is_t, /*allow_t=*/var_is_t, var);
    Laurent f(ring);
    Term term;
    while (scan.next(term)) f.add_term(var_is_t ? term.t_exp : term.x_exp, term.coeff);
    return f;
}

GroupRingElem parse_group_ring(const std::string& text, i64 n) {
    TermScanner scan(text, /*allow_x=*/true, /*allow_t=*/true, 't');
    GroupRingElem a(n);
    Term term;
    while (scan.next(term)) a.add_term(term.x_exp, term.t_exp, term.coeff);
    return a;
}

NormQuotElem parse_norm_quot(const std::string& text, i64 n) {
    return NormQuotElem::from_group_ring(parse_group_ring(text, n));
}

}  // namespace wf
