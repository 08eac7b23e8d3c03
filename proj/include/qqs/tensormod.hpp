#pragma once

#include <vector>

#include "qqs/uword.hpp"

namespace qqs {

/// Element of the tensor space T(n) = A_v(n)^{(x)n} in the divided basis
/// X^{[A]} = X^{[c_1]} (x) .. (x) X^{[c_n]}, c_j the j-th column of A.
using TensorElement = SparseVec<SuperMatrix>;

/// X^{[A]} for A whose odd entries may exceed 1, rewritten in the reduced basis.
TensorElement normalize_monomial(const SuperMatrix& a);

// Exponents in the closed-form action; h in 1..n-1, j in 1..n.
int sigma_e_plus(int h, int j, const SuperMatrix& a);
int sigma_e_minus(int h, int j, const SuperMatrix& a);
int sigma_f_plus(int h, int j, const SuperMatrix& a);
int sigma_f_minus(int h, int j, const SuperMatrix& a);
int sigma_k_plus(int j, const SuperMatrix& a);
int sigma_k_minus(int j, const SuperMatrix& a);
/// Number of odd entries strictly left of column j.
int koszul_s(int j, const SuperMatrix& a);

/// Closed-form action of K_i^{+-m}, E_h^{(m)}, F_h^{(m)} and Kb_1.
TensorElement act_closed(const GenSymbol& g, const TensorElement& x);

/// The same action computed column by column through the iterated
/// comultiplication, the polynomial action and the Koszul sign rule.
TensorElement act_oracle(const GenSymbol& g, const TensorElement& x);

/// Action of any generator; odd generators other than Kb_1 go through
/// derived_odd.
TensorElement act_derived(const GenSymbol& g, const TensorElement& x);

Action<SuperMatrix> tensor_action();

/// Common row-sum vector of all terms; ContractError when they differ.
std::vector<int> weight(const TensorElement& x);

/// Terms whose column sums equal lambda.
TensorElement co_project(const TensorElement& x, const std::vector<int>& lambda);

std::string to_string(const TensorElement& x);

}  // namespace qqs
