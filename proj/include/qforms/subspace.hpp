#pragma once

// Subspaces of H_2 (dim 6) and H_4 (dim 15) as canonical row-reduced
// coefficient matrices over the graded-lex monomial basis.

#include "qforms/form.hpp"
#include "qforms/linalg.hpp"

#include <vector>

namespace qf {

/// Monomial exponent list for H_d in graded-lex order (x > y > z), largest first.
const std::vector<Expo>& monomial_basis(int degree);
int monomial_count(int degree);
int monomial_index(int degree, const Expo& e);

VecQ form_to_vector(const TernaryForm& f);
TernaryForm vector_to_form(int degree, const VecQ& v);

class LinSubspace {
public:
    LinSubspace() = default;
    /// The zero subspace of H_degree.
    static LinSubspace zero(int degree);
    /// All of H_degree.
    static LinSubspace full(int degree);
    static LinSubspace span_of(const std::vector<TernaryForm>& forms, int degree);
    /// Solution space {f : conditions * coeffs(f) = 0}.
    static LinSubspace solution_space(int degree, const MatQ& conditions);

    int ambient_degree() const { return degree_; }
    int dim() const { return static_cast<int>(basis_.rows()); }
    const MatQ& basis_matrix() const { return basis_; }
    std::vector<TernaryForm> basis_forms() const;

    bool contains(const TernaryForm& f) const;
    bool operator==(const LinSubspace& o) const;
    bool is_subspace_of(const LinSubspace& o) const;

    LinSubspace intersect(const LinSubspace& o) const;
    LinSubspace sum(const LinSubspace& o) const;

    /// Image under the group action: span of act(sigma, basis).
    LinSubspace apply(const Transform& sigma) const;

private:
    int degree_ = 2;
    MatQ basis_{0, 6};  // RREF rows
};

/// span{ f*g : f, g in J } inside H_{2 deg}.
LinSubspace square_span(const LinSubspace& j);

}  // namespace qf
