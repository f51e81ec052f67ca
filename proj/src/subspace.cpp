#include "qforms/subspace.hpp"

#include <map>
#include <stdexcept>

namespace qf {

const std::vector<Expo>& monomial_basis(int degree) {
    static std::map<int, std::vector<Expo>> cache;
    auto it = cache.find(degree);
    if (it != cache.end()) return it->second;
    std::vector<Expo> list;
    for (int a = degree; a >= 0; --a)
        for (int b = degree - a; b >= 0; --b) list.push_back({a, b, degree - a - b});
    return cache.emplace(degree, std::move(list)).first->second;
}

int monomial_count(int degree) { return static_cast<int>(monomial_basis(degree).size()); }

int monomial_index(int degree, const Expo& e) {
    const auto& basis = monomial_basis(degree);
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == e) return static_cast<int>(i);
    throw std::invalid_argument("monomial not in basis");
}

VecQ form_to_vector(const TernaryForm& f) {
    VecQ v = VecQ::Zero(monomial_count(f.degree()));
    for (const auto& [e, c] : f.terms()) v(monomial_index(f.degree(), e)) = c;
    return v;
}

TernaryForm vector_to_form(int degree, const VecQ& v) {
    TernaryForm f(degree);
    const auto& basis = monomial_basis(degree);
    for (int i = 0; i < v.size(); ++i)
        if (v(i) != Rat(0)) f.set_coeff(basis[i], v(i));
    return f;
}

LinSubspace LinSubspace::zero(int degree) {
    LinSubspace s;
    s.degree_ = degree;
    s.basis_ = MatQ(0, monomial_count(degree));
    return s;
}

LinSubspace LinSubspace::full(int degree) {
    LinSubspace s;
    s.degree_ = degree;
    s.basis_ = MatQ::Identity(monomial_count(degree), monomial_count(degree));
    return s;
}

LinSubspace LinSubspace::span_of(const std::vector<TernaryForm>& forms, int degree) {
    MatQ m(static_cast<Eigen::Index>(forms.size()), monomial_count(degree));
    for (size_t i = 0; i < forms.size(); ++i) {
        if (!forms[i].is_zero() && forms[i].degree() != degree)
            throw std::invalid_argument("degree mismatch in span");
        m.row(static_cast<Eigen::Index>(i)) =
            forms[i].is_zero() ? VecQ::Zero(monomial_count(degree)).transpose()
                               : form_to_vector(forms[i]).transpose();
    }
    LinSubspace s;
    s.degree_ = degree;
    s.basis_ = row_space_basis(m);
    return s;
}

LinSubspace LinSubspace::solution_space(int degree, const MatQ& conditions) {
    LinSubspace s;
    s.degree_ = degree;
    s.basis_ = conditions.rows() == 0
                   ? MatQ(MatQ::Identity(monomial_count(degree), monomial_count(degree)))
                   : row_space_basis(kernel_basis(conditions));
    return s;
}

std::vector<TernaryForm> LinSubspace::basis_forms() const {
    std::vector<TernaryForm> out;
    for (Eigen::Index i = 0; i < basis_.rows(); ++i)
        out.push_back(vector_to_form(degree_, VecQ(basis_.row(i).transpose())));
    return out;
}

bool LinSubspace::contains(const TernaryForm& f) const {
    if (f.is_zero()) return true;
    if (f.degree() != degree_) return false;
    return row_space_contains(basis_, form_to_vector(f));
}

bool LinSubspace::operator==(const LinSubspace& o) const {
    return degree_ == o.degree_ && basis_.rows() == o.basis_.rows() && basis_ == o.basis_;
}

bool LinSubspace::is_subspace_of(const LinSubspace& o) const {
    if (degree_ != o.degree_) return false;
    for (Eigen::Index i = 0; i < basis_.rows(); ++i)
        if (!row_space_contains(o.basis_, VecQ(basis_.row(i).transpose()))) return false;
    return true;
}

LinSubspace LinSubspace::intersect(const LinSubspace& o) const {
    if (degree_ != o.degree_) throw std::invalid_argument("ambient mismatch");
    LinSubspace s;
    s.degree_ = degree_;
    if (dim() == 0 || o.dim() == 0) return zero(degree_);
    s.basis_ = row_space_intersection(basis_, o.basis_);
    return s;
}

LinSubspace LinSubspace::sum(const LinSubspace& o) const {
    if (degree_ != o.degree_) throw std::invalid_argument("ambient mismatch");
    MatQ m(basis_.rows() + o.basis_.rows(), basis_.cols());
    m.topRows(basis_.rows()) = basis_;
    m.bottomRows(o.basis_.rows()) = o.basis_;
    LinSubspace s;
    s.degree_ = degree_;
    s.basis_ = row_space_basis(m);
    return s;
}

LinSubspace LinSubspace::apply(const Transform& sigma) const {
    std::vector<TernaryForm> images;
    for (const auto& f : basis_forms()) images.push_back(act(sigma, f));
    return span_of(images, degree_);
}

LinSubspace square_span(const LinSubspace& j) {
    auto basis = j.basis_forms();
    std::vector<TernaryForm> products;
    for (size_t a = 0; a < basis.size(); ++a)
        for (size_t b = a; b < basis.size(); ++b) products.push_back(basis[a] * basis[b]);
    return LinSubspace::span_of(products, 2 * j.ambient_degree());
}

}  // namespace qf
