#include "qforms/parse.hpp"

#include <nlohmann/json.hpp>

#include <cctype>

namespace qf {

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char take() {
        skip_ws();
        if (pos >= s.size()) throw ParseError("unexpected end of input", pos);
        return s[pos++];
    }
};

Int parse_integer(Cursor& c) {
    c.skip_ws();
    size_t start = c.pos;
    std::string digits;
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos])))
        digits += c.s[c.pos++];
    if (digits.empty()) throw ParseError("expected digits", start);
    return Int(digits);
}

int parse_exponent(Cursor& c) {
    if (c.peek() == '^') {
        c.take();
        Int e = parse_integer(c);
        if (e < 0 || e > 8) throw ParseError("exponent out of range", c.pos);
        return static_cast<int>(e);
    }
    return 1;
}

// One term: optional coefficient, then variable factors in any order.
void parse_term(Cursor& c, bool negative, std::map<Expo, Rat, TermOrder>& acc) {
    Rat coef(1);
    bool saw_coef = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        Int n = parse_integer(c);
        if (c.peek() == '/') {
            c.take();
            size_t at = c.pos;
            Int d = parse_integer(c);
            if (d == 0) throw ParseError("zero denominator", at);
            coef = Rat(n, d);
        } else {
            coef = Rat(n);
        }
        saw_coef = true;
    }
    Expo e{0, 0, 0};
    bool saw_var = false;
    for (;;) {
        char ch = c.peek();
        if (ch == '*') {
            c.take();
            ch = c.peek();
            if (ch != 'x' && ch != 'y' && ch != 'z')
                throw ParseError("expected variable after '*'", c.pos);
        }
        if (ch == 'x' || ch == 'y' || ch == 'z') {
            c.take();
            int v = ch == 'x' ? 0 : ch == 'y' ? 1 : 2;
            e[v] += parse_exponent(c);
            saw_var = true;
        } else {
            break;
        }
    }
    if (!saw_coef && !saw_var) throw ParseError("expected term", c.pos);
    if (negative) coef = -coef;
    auto it = acc.find(e);
    Rat v = (it == acc.end() ? Rat(0) : it->second) + coef;
    if (v == Rat(0)) {
        if (it != acc.end()) acc.erase(it);
    } else {
        acc[e] = v;
    }
}

Rat parse_rat_scalar(Cursor& c) {
    bool neg = false;
    if (c.peek() == '-') { c.take(); neg = true; }
    else if (c.peek() == '+') c.take();
    Int n = parse_integer(c);
    Rat r(n);
    if (c.peek() == '/') {
        c.take();
        size_t at = c.pos;
        Int d = parse_integer(c);
        if (d == 0) throw ParseError("zero denominator", at);
        r = Rat(n, d);
    }
    return neg ? -r : r;
}

Vec3Q parse_triple(const std::string& text) {
    Cursor c{text};
    bool parens = false;
    if (c.peek() == '(') { c.take(); parens = true; }
    Vec3Q v;
    for (int i = 0; i < 3; ++i) {
        v(i) = parse_rat_scalar(c);
        if (i < 2) {
            char sep = c.take();
            if (sep != ':' && sep != ',') throw ParseError("expected ':' or ','", c.pos - 1);
        }
    }
    if (parens) {
        if (c.take() != ')') throw ParseError("expected ')'", c.pos - 1);
    }
    if (!c.done()) throw ParseError("trailing input", c.pos);
    return v;
}

}  // namespace

TernaryForm parse_form(const std::string& text) {
    Cursor c{text};
    std::map<Expo, Rat, TermOrder> acc;
    bool neg = false;
    if (c.peek() == '-') { c.take(); neg = true; }
    else if (c.peek() == '+') c.take();
    parse_term(c, neg, acc);
    while (!c.done()) {
        char op = c.take();
        if (op != '+' && op != '-') throw ParseError("expected '+' or '-'", c.pos - 1);
        parse_term(c, op == '-', acc);
    }
    if (acc.empty()) return TernaryForm::zero(0);
    int deg = -1;
    for (const auto& [e, coef] : acc) {
        int d = e[0] + e[1] + e[2];
        if (deg < 0) deg = d;
        else if (d != deg) throw ParseError("form is not homogeneous", 0);
    }
    return TernaryForm(deg, std::move(acc));
}

ProjPoint parse_point(const std::string& text) { return ProjPoint(parse_triple(text)); }
ProjLine parse_line(const std::string& text) { return ProjLine(parse_triple(text)); }

std::string form_to_json(const TernaryForm& f) {
    nlohmann::json j;
    j["degree"] = f.degree();
    j["terms"] = nlohmann::json::array();
    for (const auto& [e, c] : f.terms()) {
        j["terms"].push_back({{"exp", {e[0], e[1], e[2]}}, {"coef", to_string(c)}});
    }
    return j.dump();
}

TernaryForm form_from_json(const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    TernaryForm f(j.at("degree").get<int>());
    for (const auto& t : j.at("terms")) {
        auto e = t.at("exp");
        Rat c(t.at("coef").get<std::string>());
        f.set_coeff({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()}, c);
    }
    return f;
}

}  // namespace qf
