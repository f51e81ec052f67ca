#include "qforms/form.hpp"

#include <sstream>

namespace qf {

TernaryForm::TernaryForm(int degree, std::map<Expo, Rat, TermOrder> terms)
    : degree_(degree), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        const Expo& e = it->first;
        if (e[0] + e[1] + e[2] != degree_)
            throw std::invalid_argument("term degree mismatch");
        if (it->second == Rat(0)) it = terms_.erase(it);
        else ++it;
    }
}

TernaryForm TernaryForm::monomial(int a, int b, int c, const Rat& coef) {
    TernaryForm f(a + b + c);
    if (coef != Rat(0)) f.terms_[{a, b, c}] = coef;
    return f;
}

Rat TernaryForm::coeff(int a, int b, int c) const {
    auto it = terms_.find({a, b, c});
    return it == terms_.end() ? Rat(0) : it->second;
}

void TernaryForm::set_coeff(const Expo& e, const Rat& v) {
    if (e[0] + e[1] + e[2] != degree_) throw std::invalid_argument("term degree mismatch");
    if (v == Rat(0)) terms_.erase(e);
    else terms_[e] = v;
}

TernaryForm TernaryForm::operator+(const TernaryForm& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch in +");
    TernaryForm r = *this;
    for (const auto& [e, c] : o.terms_) {
        Rat v = r.coeff(e[0], e[1], e[2]) + c;
        r.set_coeff(e, v);
    }
    return r;
}

TernaryForm TernaryForm::operator-() const {
    TernaryForm r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

TernaryForm TernaryForm::operator-(const TernaryForm& o) const { return *this + (-o); }

TernaryForm TernaryForm::operator*(const TernaryForm& o) const {
    TernaryForm r(degree_ + o.degree_);
    if (is_zero() || o.is_zero()) return r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Expo e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]};
            Rat v = r.coeff(e[0], e[1], e[2]) + c1 * c2;
            r.set_coeff(e, v);
        }
    return r;
}

TernaryForm TernaryForm::operator*(const Rat& c) const {
    TernaryForm r(degree_);
    if (c == Rat(0)) return r;
    r.terms_ = terms_;
    for (auto& [e, v] : r.terms_) v *= c;
    return r;
}

bool TernaryForm::operator==(const TernaryForm& o) const {
    if (is_zero() && o.is_zero()) return true;
    return degree_ == o.degree_ && terms_ == o.terms_;
}

TernaryForm TernaryForm::pow(int k) const {
    TernaryForm r = TernaryForm::monomial(0, 0, 0);
    for (int i = 0; i < k; ++i) r = r * (*this);
    return r;
}

TernaryForm TernaryForm::derivative(int var) const {
    TernaryForm r(degree_ > 0 ? degree_ - 1 : 0);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Expo d = e;
        d[var] -= 1;
        r.set_coeff(d, r.coeff(d[0], d[1], d[2]) + c * Rat(e[var]));
    }
    return r;
}

Rat TernaryForm::operator()(const Rat& x, const Rat& y, const Rat& z) const {
    Rat total(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < e[0]; ++i) t *= x;
        for (int i = 0; i < e[1]; ++i) t *= y;
        for (int i = 0; i < e[2]; ++i) t *= z;
        total += t;
    }
    return total;
}

TernaryForm TernaryForm::substitute_linear(const Mat3Q& m) const {
    TernaryForm images[3];
    for (int v = 0; v < 3; ++v) {
        TernaryForm lin(1);
        for (int j = 0; j < 3; ++j) {
            Expo e{j == 0, j == 1, j == 2};
            if (m(v, j) != Rat(0)) lin.set_coeff(e, m(v, j));
        }
        images[v] = lin;
    }
    TernaryForm r(degree_);
    for (const auto& [e, c] : terms_) {
        TernaryForm t = TernaryForm::monomial(0, 0, 0, c);
        for (int v = 0; v < 3; ++v)
            for (int i = 0; i < e[v]; ++i) t = t * images[v];
        r = r.is_zero() && t.degree() == degree_ ? t : r + t;
    }
    return r;
}

TernaryForm TernaryForm::sign_normalized() const {
    if (is_zero()) return *this;
    return terms_.begin()->second < 0 ? -*this : *this;
}

namespace {
std::string monomial_str(const Expo& e) {
    static const char* names[3] = {"x", "y", "z"};
    std::string s;
    for (int v = 0; v < 3; ++v) {
        if (e[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[v];
        if (e[v] > 1) s += "^" + std::to_string(e[v]);
    }
    return s;
}
}  // namespace

std::string TernaryForm::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        std::string mono = monomial_str(e);
        if (mono.empty()) {
            os << to_string(a);
        } else {
            if (a != Rat(1)) os << to_string(a) << "*";
            os << mono;
        }
        first = false;
    }
    return os.str();
}

bool is_positive_multiple(const TernaryForm& f, const TernaryForm& g) {
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    if (f.degree() != g.degree() || f.terms().size() != g.terms().size()) return false;
    auto it = f.terms().begin();
    auto jt = g.terms().begin();
    Rat ratio = jt->second / it->second;
    if (ratio <= 0) return false;
    for (; it != f.terms().end(); ++it, ++jt)
        if (it->first != jt->first || it->second * ratio != jt->second) return false;
    return true;
}

namespace {
Vec3Q canonical_rep(Vec3Q v, const char* what) {
    int lead = -1;
    for (int i = 0; i < 3; ++i)
        if (v(i) != Rat(0)) { lead = i; break; }
    if (lead < 0) throw std::invalid_argument(std::string(what) + ": all coordinates zero");
    return v / v(lead);
}
}  // namespace

ProjPoint::ProjPoint(Vec3Q v) : coords(canonical_rep(std::move(v), "ProjPoint")) {}
ProjPoint::ProjPoint(const Rat& x, const Rat& y, const Rat& z)
    : ProjPoint(Vec3Q{(Vec3Q() << x, y, z).finished()}) {}

bool ProjPoint::operator<(const ProjPoint& o) const {
    for (int i = 0; i < 3; ++i) {
        if (coords(i) != o.coords(i)) return coords(i) < o.coords(i);
    }
    return false;
}

std::string ProjPoint::str() const {
    return "(" + to_string(coords(0)) + ":" + to_string(coords(1)) + ":" + to_string(coords(2)) + ")";
}

ProjLine::ProjLine(Vec3Q v) : coeffs(canonical_rep(std::move(v), "ProjLine")) {}
ProjLine::ProjLine(const Rat& a, const Rat& b, const Rat& c)
    : ProjLine(Vec3Q{(Vec3Q() << a, b, c).finished()}) {}

TernaryForm ProjLine::linear_form() const {
    TernaryForm f(1);
    for (int i = 0; i < 3; ++i) {
        Expo e{i == 0, i == 1, i == 2};
        if (coeffs(i) != Rat(0)) f.set_coeff(e, coeffs(i));
    }
    return f;
}

std::string ProjLine::str() const { return "Var(" + linear_form().str() + ")"; }

ProjPoint point_on_both(const ProjLine& l, const ProjLine& m) {
    return ProjPoint(cross(l.coeffs, m.coeffs));
}

ProjLine join(const ProjPoint& p, const ProjPoint& q) {
    if (p == q) throw std::invalid_argument("join of equal points");
    return ProjLine(cross(p.coords, q.coords));
}

bool incident(const ProjPoint& p, const ProjLine& l) {
    return p.coords.dot(l.coeffs) == Rat(0);
}

Rat eval(const TernaryForm& f, const ProjPoint& p) { return f(p.coords); }

Vec3Q gradient(const TernaryForm& f, const ProjPoint& p) {
    Vec3Q g;
    for (int v = 0; v < 3; ++v) g(v) = f.derivative(v)(p.coords);
    return g;
}

Mat3Q point_frame(const ProjPoint& p) {
    Mat3Q m;
    m.col(0) = p.coords;
    int got = 0;
    for (int i = 0; i < 3 && got < 2; ++i) {
        Mat3Q probe = m;
        probe.col(1 + got) = Vec3Q::Unit(i);
        // Keep e_i if the partial frame stays independent.
        if (got == 0) {
            if (cross(Vec3Q(m.col(0)), Vec3Q::Unit(i)).isZero()) continue;
        } else {
            Mat3Q full;
            full.col(0) = m.col(0);
            full.col(1) = m.col(1);
            full.col(2) = Vec3Q::Unit(i);
            if (full.determinant() == Rat(0)) continue;
        }
        m.col(1 + got) = Vec3Q::Unit(i);
        ++got;
    }
    return m;
}

std::vector<std::map<std::array<int, 2>, Rat>> affine_expansion(const TernaryForm& f,
                                                                const Mat3Q& frame) {
    // Substitute (x,y,z) = frame * (1, s, t) and collect by total degree in (s,t).
    std::vector<std::map<std::array<int, 2>, Rat>> parts(f.degree() + 1);
    // Bivariate polynomials in (s,t) for the three coordinates.
    std::array<std::map<std::array<int, 2>, Rat>, 3> coord;
    for (int r = 0; r < 3; ++r) {
        if (frame(r, 0) != Rat(0)) coord[r][{0, 0}] = frame(r, 0);
        if (frame(r, 1) != Rat(0)) coord[r][{1, 0}] = frame(r, 1);
        if (frame(r, 2) != Rat(0)) coord[r][{0, 1}] = frame(r, 2);
    }
    auto mul = [](const std::map<std::array<int, 2>, Rat>& a,
                  const std::map<std::array<int, 2>, Rat>& b) {
        std::map<std::array<int, 2>, Rat> r;
        for (const auto& [ea, ca] : a)
            for (const auto& [eb, cb] : b) {
                std::array<int, 2> e{ea[0] + eb[0], ea[1] + eb[1]};
                Rat v = (r.count(e) ? r[e] : Rat(0)) + ca * cb;
                if (v == Rat(0)) r.erase(e); else r[e] = v;
            }
        return r;
    };
    for (const auto& [e, c] : f.terms()) {
        std::map<std::array<int, 2>, Rat> t{{{0, 0}, c}};
        for (int v = 0; v < 3; ++v)
            for (int i = 0; i < e[v]; ++i) t = mul(t, coord[v]);
        for (const auto& [ee, cc] : t) {
            int d = ee[0] + ee[1];
            Rat v = (parts[d].count(ee) ? parts[d][ee] : Rat(0)) + cc;
            if (v == Rat(0)) parts[d].erase(ee); else parts[d][ee] = v;
        }
    }
    return parts;
}

int ord_at(const TernaryForm& f, const ProjPoint& p) {
    if (f.is_zero()) throw std::invalid_argument("ord_at of zero form");
    auto parts = affine_expansion(f, point_frame(p));
    for (int d = 0; d <= f.degree(); ++d)
        if (!parts[d].empty()) return d;
    return f.degree() + 1;  // unreachable for nonzero f
}

Transform::Transform(Mat3Q m) : matrix(std::move(m)) {
    if (matrix.determinant() == Rat(0)) throw std::invalid_argument("singular transform");
}

TernaryForm act(const Transform& sigma, const TernaryForm& f) {
    return f.substitute_linear(Mat3Q(sigma.matrix.inverse()));
}

std::optional<TernaryForm> divide_exact(const TernaryForm& f, const TernaryForm& g) {
    if (g.is_zero()) throw std::invalid_argument("division by zero form");
    if (f.is_zero()) return TernaryForm::zero(0);
    if (f.degree() < g.degree()) return std::nullopt;
    TernaryForm r = f;
    TernaryForm q(f.degree() - g.degree());
    const auto& glead = *g.terms().begin();
    while (!r.is_zero()) {
        const auto& rlead = *r.terms().begin();
        Expo d{rlead.first[0] - glead.first[0], rlead.first[1] - glead.first[1],
               rlead.first[2] - glead.first[2]};
        if (d[0] < 0 || d[1] < 0 || d[2] < 0) return std::nullopt;
        Rat c = rlead.second / glead.second;
        TernaryForm t = TernaryForm::monomial(d[0], d[1], d[2], c);
        q = q + t;
        r = r - t * g;
    }
    return q;
}

Transform frame_transform(const std::array<ProjPoint, 4>& targets) {
    Mat3Q base;
    for (int i = 0; i < 3; ++i) base.col(i) = targets[i].coords;
    if (base.determinant() == Rat(0))
        throw std::invalid_argument("frame_transform: first three targets collinear");
    auto lambda = base.inverse() * targets[3].coords;
    for (int i = 0; i < 3; ++i)
        if (lambda(i) == Rat(0))
            throw std::invalid_argument("frame_transform: three of the targets collinear");
    Mat3Q m;
    for (int i = 0; i < 3; ++i) m.col(i) = lambda(i) * base.col(i);
    return Transform(m);
}

}  // namespace qf
