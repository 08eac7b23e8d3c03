#pragma once

#include <string>
#include <vector>

#include "qqs/matidx.hpp"
#include "qqs/sparse.hpp"

namespace qqs {

/// Element of the quantum polynomial superalgebra A_v(n) in the monomial
/// basis X^a = X_1^{a_1}..X_n^{a_n} X_1bar^{b_1}..X_nbar^{b_n} (b_i in {0,1}).
using QPolyElement = SparseVec<SuperIndex>;

/// A single generator X_i (odd = false) or X_ibar (odd = true), i in 1..n.
struct QVar {
    int index = 1;
    bool odd = false;
};

/// Normal-ordered expansion of the ordered product of generators.
QPolyElement normal_order(int n, const std::vector<QVar>& word);

/// Product of two basis monomials; both must be reduced.
QPolyElement monomial_product(const SuperIndex& a, const SuperIndex& b);
QPolyElement product(const QPolyElement& x, const QPolyElement& y);

/// X^a read as the ordered product; odd exponents above 1 are allowed.
QPolyElement monomial(const SuperIndex& a);

/// X^a divided by prod [a_i]! over every exponent, odd ones included.
QPolyElement divided_monomial(const SuperIndex& a);

enum class Divided { ToDivided, FromDivided };

/// Rescales coordinates between the plain basis X^a and the divided basis
/// X^{[a]} = X^a / prod [a_i]!.
QPolyElement divided_convert(const QPolyElement& x, Divided dir);

/// prod_i [a_i]! over even and odd exponents.
LaurentPoly divided_factor(const SuperIndex& a);

/// All reduced indices of degree <= maxdeg, sorted.
std::vector<SuperIndex> qpoly_basis(int n, int maxdeg);

std::string to_string(const QPolyElement& x);

}  // namespace qqs
