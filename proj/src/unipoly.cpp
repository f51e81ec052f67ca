#include "qforms/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qf {

UniPoly::UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == Rat(0)) coeffs_.pop_back();
}

Rat UniPoly::operator()(const Rat& x) const {
    Rat r(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rat> c(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + o * Rat(-1); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rat> c(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const Rat& k) const {
    std::vector<Rat> c = coeffs_;
    for (auto& v : c) v *= k;
    return UniPoly(std::move(c));
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly();
    std::vector<Rat> c(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * Rat(static_cast<int>(i));
    return UniPoly(std::move(c));
}

UniPoly UniPoly::rem(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("polynomial division by zero");
    UniPoly r = *this;
    while (!r.is_zero() && r.degree() >= divisor.degree()) {
        Rat f = r.leading() / divisor.leading();
        int shift = r.degree() - divisor.degree();
        std::vector<Rat> t(shift + 1, Rat(0));
        t[shift] = f;
        r = r - divisor * UniPoly(std::move(t));
    }
    return r;
}

UniPoly UniPoly::quot(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("polynomial division by zero");
    UniPoly r = *this, q;
    std::vector<Rat> qc(std::max(0, degree() - divisor.degree() + 1), Rat(0));
    while (!r.is_zero() && r.degree() >= divisor.degree()) {
        Rat f = r.leading() / divisor.leading();
        int shift = r.degree() - divisor.degree();
        qc[shift] = f;
        std::vector<Rat> t(shift + 1, Rat(0));
        t[shift] = f;
        r = r - divisor * UniPoly(std::move(t));
    }
    return UniPoly(std::move(qc));
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.rem(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rat(1) / leading());
}

UniPoly UniPoly::squarefree_part() const {
    if (is_zero() || degree() == 0) return monic();
    UniPoly g = gcd(*this, derivative());
    return quot(g).monic();
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rat c = coeff(i);
        if (c == Rat(0)) continue;
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (i == 0) os << to_string(a);
        else {
            if (a != Rat(1)) os << to_string(a) << "*";
            os << "y";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain;
    if (p.is_zero()) return chain;
    chain.push_back(p);
    UniPoly d = p.derivative();
    if (!d.is_zero()) {
        chain.push_back(d);
        for (;;) {
            UniPoly r = chain[chain.size() - 2].rem(chain.back());
            if (r.is_zero()) break;
            chain.push_back(r * Rat(-1));
        }
    }
    return chain;
}

namespace {
int sign_variations_at(const std::vector<UniPoly>& chain, const Rat& x) {
    int vars = 0, prev = 0;
    for (const auto& q : chain) {
        int s = sign_of(q(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars;
}
}  // namespace

int count_roots_between(const std::vector<UniPoly>& chain, const Rat& a, const Rat& b) {
    if (chain.empty()) return 0;
    return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

Rat root_bound(const UniPoly& p) {
    Rat bound(1);
    for (int i = 0; i < p.degree(); ++i) {
        Rat v = abs(p.coeff(i) / p.leading());
        if (v > bound) bound = v;
    }
    return bound + 1;
}

int count_real_roots(const UniPoly& p) {
    if (p.is_zero() || p.degree() == 0) return 0;
    UniPoly sf = p.squarefree_part();
    auto chain = sturm_chain(sf);
    Rat b = root_bound(sf);
    return count_roots_between(chain, -b, b);
}

std::vector<Rat> rational_roots(const UniPoly& p) {
    std::vector<Rat> roots;
    if (p.is_zero() || p.degree() == 0) return roots;
    // Clear denominators to a primitive integer polynomial.
    Int lcm_den(1);
    for (const Rat& c : p.coeffs()) lcm_den = lcm(lcm_den, den(c));
    std::vector<Int> ic(p.coeffs().size());
    for (size_t i = 0; i < ic.size(); ++i) ic[i] = num(p.coeffs()[i] * Rat(lcm_den));
    size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    if (low > 0) roots.push_back(Rat(0));
    // Candidates n/d with n | ic[low], d | lead; enumerate divisors by trial
    // division (coefficients here are small).
    auto divisors = [](Int n) {
        std::vector<Int> ds;
        n = abs(n);
        for (Int i(1); i * i <= n; ++i) {
            if (n % i == 0) {
                ds.push_back(i);
                if (i * i != n) ds.push_back(n / i);
            }
        }
        return ds;
    };
    Int a0 = ic[low], lead = ic.back();
    for (const Int& n : divisors(a0))
        for (const Int& d : divisors(lead)) {
            for (int s = -1; s <= 1; s += 2) {
                Rat cand(s * n, d);
                if (p(cand) == Rat(0)) roots.push_back(cand);
            }
        }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<RealRoot> isolate_real_roots(const UniPoly& p) {
    std::vector<RealRoot> out;
    if (p.is_zero() || p.degree() == 0) return out;
    UniPoly sf = p.squarefree_part();
    // Split off the rational roots first so bisection only isolates the rest.
    std::vector<Rat> rats = rational_roots(sf);
    UniPoly reduced = sf;
    for (const Rat& r : rats) reduced = reduced.quot(UniPoly({-r, Rat(1)}));
    auto chain = sturm_chain(reduced);
    Rat b = root_bound(sf);
    struct Seg { Rat lo, hi; int count; };
    std::vector<Seg> work;
    int total = count_roots_between(chain, -b, b);
    if (total > 0) work.push_back({-b, b, total});
    std::vector<RealRoot> irrational;
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.count == 1) {
            // Shrink until no rational endpoint is a root and the interval
            // excludes the rational roots already extracted.
            bool clean = reduced(s.lo) != Rat(0) && reduced(s.hi) != Rat(0);
            bool separated = true;
            for (const Rat& r : rats)
                if (s.lo < r && r < s.hi) separated = false;
            if (clean && separated) {
                RealRoot rr;
                rr.exact = false;
                rr.lo = s.lo;
                rr.hi = s.hi;
                irrational.push_back(rr);
                continue;
            }
        }
        Rat mid = (s.lo + s.hi) / 2;
        if (reduced(mid) == Rat(0))
            throw std::logic_error("rational root left in reduced polynomial");
        int left = count_roots_between(chain, s.lo, mid);
        if (left > 0) work.push_back({s.lo, mid, left});
        if (s.count - left > 0) work.push_back({mid, s.hi, s.count - left});
    }
    for (const Rat& r : rats) {
        RealRoot rr;
        rr.exact = true;
        rr.value = r;
        out.push_back(rr);
    }
    out.insert(out.end(), irrational.begin(), irrational.end());
    std::sort(out.begin(), out.end(), [](const RealRoot& a, const RealRoot& b) {
        Rat av = a.exact ? a.value : (a.lo + a.hi) / 2;
        Rat bv = b.exact ? b.value : (b.lo + b.hi) / 2;
        return av < bv;
    });
    return out;
}

}  // namespace qf
