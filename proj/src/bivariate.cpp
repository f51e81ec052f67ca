#include "qforms/bivariate.hpp"

#include <sstream>
#include <stdexcept>

namespace qf {

BivariatePoly BivariatePoly::monomial(int i, int j, const Rat& c) {
    BivariatePoly p;
    if (c != Rat(0)) p.terms_[{i, j}] = c;
    return p;
}

Rat BivariatePoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rat(0) : it->second;
}

void BivariatePoly::set_coeff(int i, int j, const Rat& v) {
    if (v == Rat(0)) terms_.erase({i, j});
    else terms_[{i, j}] = v;
}

BivariatePoly BivariatePoly::operator+(const BivariatePoly& o) const {
    BivariatePoly r = *this;
    for (const auto& [e, c] : o.terms_) r.set_coeff(e[0], e[1], r.coeff(e[0], e[1]) + c);
    return r;
}

BivariatePoly BivariatePoly::operator-(const BivariatePoly& o) const {
    return *this + o * Rat(-1);
}

BivariatePoly BivariatePoly::operator*(const BivariatePoly& o) const {
    BivariatePoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.set_coeff(e1[0] + e2[0], e1[1] + e2[1], r.coeff(e1[0] + e2[0], e1[1] + e2[1]) + c1 * c2);
    return r;
}

BivariatePoly BivariatePoly::operator*(const Rat& c) const {
    BivariatePoly r;
    if (c == Rat(0)) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

Rat BivariatePoly::operator()(const Rat& x, const Rat& y) const {
    Rat total(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < e[0]; ++i) t *= x;
        for (int i = 0; i < e[1]; ++i) t *= y;
        total += t;
    }
    return total;
}

BivariatePoly BivariatePoly::compose_blowup() const {
    BivariatePoly r;
    for (const auto& [e, c] : terms_)
        r.set_coeff(e[0] + e[1], e[1], r.coeff(e[0] + e[1], e[1]) + c);
    return r;
}

BivariatePoly BivariatePoly::divide_x2() const {
    BivariatePoly r;
    for (const auto& [e, c] : terms_) {
        if (e[0] < 2) throw std::invalid_argument("division by x^2 is not exact");
        r.terms_[{e[0] - 2, e[1]}] = c;
    }
    return r;
}

int BivariatePoly::degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

UniPoly BivariatePoly::at_x(const Rat& value) const {
    std::vector<Rat> c(static_cast<size_t>(std::max(0, degree_in(1) + 1)), Rat(0));
    for (const auto& [e, v] : terms_) {
        Rat t = v;
        for (int i = 0; i < e[0]; ++i) t *= value;
        c[e[1]] += t;
    }
    return UniPoly(std::move(c));
}

UniPoly BivariatePoly::x_coefficient(int i) const {
    std::vector<Rat> c(static_cast<size_t>(std::max(0, degree_in(1) + 1)), Rat(0));
    for (const auto& [e, v] : terms_)
        if (e[0] == i) c[e[1]] += v;
    return UniPoly(std::move(c));
}

int BivariatePoly::order_at_origin() const {
    int ord = -1;
    for (const auto& [e, c] : terms_) {
        int d = e[0] + e[1];
        if (ord < 0 || d < ord) ord = d;
    }
    return ord;
}

std::string BivariatePoly::str() const {
    if (is_zero()) return "0";
    // Graded-lex, largest first, for stable output.
    std::map<std::array<int, 3>, Rat> ordered;
    for (const auto& [e, c] : terms_) ordered[{-(e[0] + e[1]), -e[0], -e[1]}] = c;
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : ordered) {
        int i = -key[1], j = -key[2];
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        std::string mono;
        if (i > 0) { mono += "x"; if (i > 1) mono += "^" + std::to_string(i); }
        if (j > 0) {
            if (!mono.empty()) mono += "*";
            mono += "y";
            if (j > 1) mono += "^" + std::to_string(j);
        }
        if (mono.empty()) os << to_string(a);
        else {
            if (a != Rat(1)) os << to_string(a) << "*";
            os << mono;
        }
        first = false;
    }
    return os.str();
}

}  // namespace qf
