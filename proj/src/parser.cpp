#include "algseq/parser.hpp"

#include <cctype>

namespace algseq {

namespace {

struct Cursor {
    const std::string& s;
    const Field& f;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) throw parse_error(std::string("expected ") + what, pos);
    }

    long long nat() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw parse_error("expected a number", pos);
        long long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1000000000LL) throw parse_error("number too large", pos);
            ++pos;
        }
        return v;
    }
};

bool starts_base(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == 'z' ||
           c == '(' || c == '[';
}

BiPoly parse_expr(Cursor& cur);

BiPoly parse_base(Cursor& cur) {
    const Field& f = cur.f;
    char c = cur.peek();
    if (c == '(') {
        cur.accept('(');
        BiPoly inner = parse_expr(cur);
        cur.expect(')', "')'");
        return inner;
    }
    if (c == '[') {
        cur.accept('[');
        std::vector<long long> comps;
        comps.push_back(cur.nat());
        while (cur.accept(',')) comps.push_back(cur.nat());
        cur.expect(']', "']'");
        if (comps.size() > f.e())
            throw parse_error("coefficient has more components than the field degree", cur.pos);
        unsigned code = 0;
        for (size_t k = comps.size(); k-- > 0;)
            code = code * f.p() + static_cast<unsigned>(comps[k] % f.p());
        return BiPoly::monomial(f, 0, 0, code);
    }
    if (c == 'x') {
        cur.accept('x');
        return BiPoly::monomial(f, 1, 0);
    }
    if (c == 'y' || c == 'z') {
        cur.accept(c);
        return BiPoly::monomial(f, 0, 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
        long long v = cur.nat();
        return BiPoly::monomial(f, 0, 0, f.from_int(v).code());
    }
    if (std::isalpha(static_cast<unsigned char>(c)))
        throw parse_error(std::string("unknown variable '") + c + "'", cur.pos);
    throw parse_error("expected a coefficient, variable, or '('", cur.pos);
}

BiPoly bipow(const BiPoly& base, long long exp, Cursor& cur, size_t at) {
    if (exp >= 0) return pow(base, static_cast<unsigned>(exp));
    // negative exponents: only a pure power of y stays a Laurent polynomial
    if (base.terms().size() == 1 && base.terms()[0].i == 0 && base.terms()[0].j == 1 &&
        base.terms()[0].c == 1)
        return BiPoly::monomial(cur.f, 0, static_cast<int>(exp));
    throw parse_error("negative exponent is only allowed on y (or z)", at);
}

BiPoly parse_factor(Cursor& cur) {
    BiPoly base = parse_base(cur);
    if (cur.accept('^')) {
        size_t at = cur.pos;
        bool neg = cur.accept('-');
        long long e = cur.nat();
        if (e > 4096) throw parse_error("exponent too large", at);
        return bipow(base, neg ? -e : e, cur, at);
    }
    return base;
}

BiPoly parse_term(Cursor& cur) {
    BiPoly acc = parse_factor(cur);
    for (;;) {
        if (cur.accept('*')) {
            acc = acc * parse_factor(cur);
        } else if (starts_base(cur.peek())) {
            acc = acc * parse_factor(cur);
        } else {
            return acc;
        }
    }
}

BiPoly parse_expr(Cursor& cur) {
    BiPoly acc = parse_term(cur);
    for (;;) {
        if (cur.accept('+')) {
            acc = acc + parse_term(cur);
        } else if (cur.accept('-')) {
            acc = acc - parse_term(cur);
        } else {
            return acc;
        }
    }
}

}  // namespace

BiPoly parse_poly(const std::string& text, const Field& f) {
    Cursor cur{text, f};
    BiPoly p = parse_expr(cur);
    if (!cur.eof()) throw parse_error("unexpected input", cur.pos);
    return p;
}

UniLaurent parse_laurent(const std::string& text, const Field& f) {
    bool has_x = false, has_yz = false;
    for (char c : text) {
        if (c == 'x') has_x = true;
        if (c == 'y' || c == 'z') has_yz = true;
    }
    if (has_x && has_yz)
        throw parse_error("expected a univariate expression", 0);
    std::string t = text;
    if (has_x)
        for (char& c : t)
            if (c == 'x') c = 'y';
    BiPoly p = parse_poly(t, f);
    UniLaurent out(f);
    for (const auto& term : p.terms())
        out = out + UniLaurent::monomial(f, term.j, term.c);
    return out;
}

}  // namespace algseq
